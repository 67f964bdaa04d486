#include "topzeta/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace topzeta {

namespace {

struct Cursor {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    bool at_digit() const {
        return !done() && std::isdigit(static_cast<unsigned char>(text[pos]));
    }
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos); }

    // Digit run; coefficients stay arbitrary precision.
    std::string digits(const char* what) {
        if (!at_digit()) fail(std::string("expected ") + what);
        size_t start = pos;
        while (at_digit()) ++pos;
        return std::string(text.substr(start, pos - start));
    }

    // Exponents are bounded so the lattice arithmetic stays in 64 bits.
    Int exponent_value() {
        size_t start = pos;
        std::string d = digits("exponent");
        if (d.size() > 7 || std::stoll(d) > kMaxExponent)
            throw ParseError("exponent too large", start);
        return std::stoll(d);
    }
};

} // namespace

std::vector<SupportPoint> parse_polynomial(std::string_view text) {
    Cursor in{text};
    std::map<Vec2, Rational> terms;
    std::map<Vec2, size_t> first_seen;

    in.skip_ws();
    if (in.done()) in.fail("empty input");
    bool negative = false;
    if (in.peek() == '+' || in.peek() == '-') {
        negative = in.peek() == '-';
        ++in.pos;
    }
    for (;;) {
        in.skip_ws();
        size_t term_start = in.pos;

        Rational coeff(1);
        bool saw_anything = false;
        if (in.at_digit()) {
            mpz_class num(in.digits("coefficient"), 10);
            mpz_class den(1);
            in.skip_ws();
            if (!in.done() && in.peek() == '/') {
                ++in.pos;
                in.skip_ws();
                size_t den_pos = in.pos;
                den = mpz_class(in.digits("denominator"), 10);
                if (den == 0) throw ParseError("zero denominator in coefficient", den_pos);
            }
            coeff = Rational(num, den);
            saw_anything = true;
        }

        Vec2 exponent{0, 0};
        for (;;) {
            in.skip_ws();
            size_t mark = in.pos;
            if (!in.done() && in.peek() == '*') {
                ++in.pos;
                in.skip_ws();
                if (in.done() || (in.peek() != 'x' && in.peek() != 'y'))
                    in.fail("expected x or y after '*'");
            }
            if (in.done() || (in.peek() != 'x' && in.peek() != 'y')) {
                in.pos = mark;
                break;
            }
            char var = in.peek();
            ++in.pos;
            Int e = 1;
            in.skip_ws();
            if (!in.done() && in.peek() == '^') {
                ++in.pos;
                in.skip_ws();
                if (!in.done() && in.peek() == '-') in.fail("negative exponent");
                e = in.exponent_value();
            }
            Int& slot = var == 'x' ? exponent.x : exponent.y;
            slot += e;
            if (slot > kMaxExponent) throw ParseError("exponent too large", mark);
            saw_anything = true;
        }
        if (!saw_anything) in.fail("expected a term");

        if (negative) coeff = -coeff;
        terms[exponent] += coeff;
        first_seen.emplace(exponent, term_start);

        in.skip_ws();
        if (in.done()) break;
        if (in.peek() == '+' || in.peek() == '-') {
            negative = in.peek() == '-';
            ++in.pos;
            in.skip_ws();
            if (in.done()) in.fail("expected a term");
        } else {
            in.fail("expected '+' or '-'");
        }
    }

    std::vector<SupportPoint> support;
    for (const auto& [exponent, coeff] : terms) {
        if (coeff.is_zero()) continue;
        if (exponent == Vec2{0, 0})
            throw ParseError("f(0) != 0 required", first_seen.at(exponent));
        support.push_back({exponent, coeff});
    }
    if (support.empty()) throw ParseError("f is zero", 0);
    return support;
}

std::string render_polynomial(const std::vector<SupportPoint>& support) {
    std::vector<SupportPoint> sorted = support;
    std::sort(sorted.begin(), sorted.end(),
              [](const SupportPoint& a, const SupportPoint& b) { return a.exponent < b.exponent; });
    std::ostringstream os;
    bool first = true;
    for (const auto& term : sorted) {
        Rational c = term.coeff;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        Rational a = c.sign() < 0 ? -c : c;
        const Vec2 e = term.exponent;
        bool has_factors = e.x > 0 || e.y > 0;
        if (a != Rational(1) || !has_factors) {
            os << a.str();
            if (has_factors) os << "*";
        }
        if (e.x > 0) {
            os << "x";
            if (e.x > 1) os << "^" << e.x;
            if (e.y > 0) os << "*";
        }
        if (e.y > 0) {
            os << "y";
            if (e.y > 1) os << "^" << e.y;
        }
    }
    return os.str();
}

} // namespace topzeta
