#include "topzeta/rat_func.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace topzeta {

FactoredRatFunc::FactoredRatFunc(UniPoly numerator, std::vector<LinFactor> denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    for (const auto& f : den_) {
        if (f.N < 0 || f.nu <= 0)
            throw std::invalid_argument("LinFactor: need N >= 0 and nu >= 1");
    }
    canonicalize();
}

void FactoredRatFunc::canonicalize() {
    // Fold constant factors (N == 0) into the numerator.
    Rational constant(1);
    std::erase_if(den_, [&](const LinFactor& f) {
        if (f.N == 0) {
            constant *= Rational(f.nu);
            return true;
        }
        return false;
    });
    if (constant != Rational(1)) num_ = num_ * (Rational(1) / constant);

    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    std::sort(den_.begin(), den_.end());

    // Cancel removable factors, smallest first, until none divides.
    for (size_t i = 0; i < den_.size();) {
        const LinFactor f = den_[i];
        if (num_.evaluate(f.root()).is_zero()) {
            num_ = num_.divide_exact(f.to_poly());
            den_.erase(den_.begin() + static_cast<std::ptrdiff_t>(i));
            i = 0; // the smaller quotient can expose earlier factors again
        } else {
            ++i;
        }
    }
}

int FactoredRatFunc::pole_order(const Rational& s0) const {
    int n = 0;
    for (const auto& f : den_)
        if (f.root() == s0) ++n;
    return n;
}

Rational FactoredRatFunc::residue_simple(const Rational& s0) const {
    if (pole_order(s0) != 1)
        throw std::domain_error("residue_simple: pole order at s0 is not 1");
    Rational rest(1);
    long long n0 = 0;
    for (const auto& f : den_) {
        if (f.root() == s0)
            n0 = f.N;
        else
            rest *= f.evaluate(s0);
    }
    return num_.evaluate(s0) / (Rational(n0) * rest);
}

Rational FactoredRatFunc::evaluate(const Rational& s) const {
    Rational den(1);
    for (const auto& f : den_) {
        Rational v = f.evaluate(s);
        if (v.is_zero()) throw std::domain_error("evaluate: s is a pole");
        den *= v;
    }
    return num_.evaluate(s) / den;
}

bool operator==(const FactoredRatFunc& a, const FactoredRatFunc& b) {
    UniPoly lhs = a.num_;
    for (const auto& f : b.den_) lhs *= f.to_poly();
    UniPoly rhs = b.num_;
    for (const auto& f : a.den_) rhs *= f.to_poly();
    return lhs == rhs;
}

FactoredRatFunc operator-(const FactoredRatFunc& f) {
    FactoredRatFunc r = f;
    r.num_ = -r.num_;
    return r;
}

namespace {

// Multiset least common multiple: per literal factor, the larger count.
std::vector<LinFactor> factor_lcm(const std::vector<LinFactor>& a, const std::vector<LinFactor>& b) {
    std::vector<LinFactor> out;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] < b[j]))
            out.push_back(a[i++]);
        else if (i == a.size() || b[j] < a[i])
            out.push_back(b[j++]);
        else {
            out.push_back(a[i]);
            ++i;
            ++j;
        }
    }
    return out;
}

// Multiset difference whole \ part (part must be contained in whole).
std::vector<LinFactor> factor_diff(const std::vector<LinFactor>& whole,
                                   const std::vector<LinFactor>& part) {
    std::vector<LinFactor> out;
    size_t j = 0;
    for (const auto& f : whole) {
        if (j < part.size() && part[j] == f)
            ++j;
        else
            out.push_back(f);
    }
    return out;
}

} // namespace

FactoredRatFunc operator+(const FactoredRatFunc& f, const FactoredRatFunc& g) {
    std::vector<LinFactor> common = factor_lcm(f.den_, g.den_);
    UniPoly fn = f.num_;
    for (const auto& e : factor_diff(common, f.den_)) fn *= e.to_poly();
    UniPoly gn = g.num_;
    for (const auto& e : factor_diff(common, g.den_)) gn *= e.to_poly();
    return FactoredRatFunc(fn + gn, std::move(common));
}

std::string to_string(const FactoredRatFunc& f) {
    if (f.is_zero()) return "0";

    // Split the numerator as (p/q) * P with P primitive integer, leading > 0.
    mpz_class q(1), p;
    for (const auto& c : f.numerator().coeffs()) {
        mpz_class den = c.denominator();
        q = q / gcd(q, den) * den;
    }
    std::vector<mpz_class> ic;
    ic.reserve(f.numerator().coeffs().size());
    for (const auto& c : f.numerator().coeffs())
        ic.push_back(c.numerator() * (q / c.denominator()));
    p = 0;
    for (const auto& v : ic) p = gcd(p, v);
    if (ic.back() < 0) p = -p;
    for (auto& v : ic) v /= p;

    std::ostringstream os;
    std::vector<Rational> rc(ic.size());
    for (size_t i = 0; i < ic.size(); ++i) rc[i] = Rational(ic[i]);
    UniPoly primitive(std::move(rc));

    // A primitive positive-leading constant can only be 1, so the scalar p
    // carries the whole numerator in that case.
    if (primitive.degree() == 0) {
        os << p.get_str();
    } else {
        std::string core = "(" + to_string(primitive) + ")";
        if (p == 1)
            os << core;
        else if (p == -1)
            os << "-" << core;
        else
            os << p.get_str() << core;
    }
    if (f.denominator().empty() && q == 1) return os.str();

    const auto& den = f.denominator();
    if (q == 1 && den.size() == 1) {
        os << "/(" << to_string(den[0].to_poly()) << ")";
        return os.str();
    }
    os << "/(";
    if (q != 1) os << q.get_str();
    for (size_t i = 0; i < den.size();) {
        size_t j = i;
        while (j < den.size() && den[j] == den[i]) ++j;
        os << "(" << to_string(den[i].to_poly()) << ")";
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    os << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const FactoredRatFunc& f) {
    return os << to_string(f);
}

} // namespace topzeta
