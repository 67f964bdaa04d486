#include "topzeta/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace topzeta {

Rational UniPoly::evaluate(const Rational& t) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long long>(i));
    return UniPoly(std::move(d));
}

bool UniPoly::is_monomial() const {
    if (is_zero()) return false;
    for (size_t i = 0; i + 1 < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return UniPoly();
    return *this * (Rational(1) / leading());
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a) { return a * Rational(-1); }

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const Rational& s) {
    std::vector<Rational> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] * s;
    return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("UniPoly::divmod: division by zero polynomial");
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quo(static_cast<size_t>(a.degree() - b.degree()) + 1);
    const Rational lead = b.leading();
    for (int i = a.degree(); i >= b.degree(); --i) {
        Rational q = rem[static_cast<size_t>(i)] / lead;
        quo[static_cast<size_t>(i - b.degree())] = q;
        if (q.is_zero()) continue;
        for (int j = 0; j <= b.degree(); ++j)
            rem[static_cast<size_t>(i - b.degree() + j)] -= q * b.c_[static_cast<size_t>(j)];
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::divide_exact(const UniPoly& divisor) const {
    auto [q, r] = divmod(*this, divisor);
    if (!r.is_zero()) throw std::domain_error("UniPoly::divide_exact: nonzero remainder");
    return q;
}

UniPoly poly_gcd(UniPoly p, UniPoly q) {
    while (!q.is_zero()) {
        UniPoly r = UniPoly::divmod(p, q).second;
        p = std::move(q);
        q = std::move(r);
    }
    return p.monic(); // monic(0) == 0
}

std::string to_string(const UniPoly& p, const char* var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(i);
        if (c.is_zero()) continue;
        if (c.sign() < 0)
            os << "-";
        else if (!first)
            os << "+";
        Rational a = c.sign() < 0 ? -c : c;
        if (i == 0) {
            os << a.str();
        } else {
            if (a != Rational(1)) {
                if (a.is_integer())
                    os << a.str();
                else
                    os << "(" << a.str() << ")";
            }
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << to_string(p); }

} // namespace topzeta
