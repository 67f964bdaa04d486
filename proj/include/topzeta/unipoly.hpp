#ifndef TOPZETA_UNIPOLY_HPP
#define TOPZETA_UNIPOLY_HPP

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "topzeta/rational.hpp"

namespace topzeta {

/// Dense univariate polynomial over Rational. Coefficient index = degree;
/// the highest stored coefficient is nonzero (the zero polynomial stores
/// nothing).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(const Rational& c) { return UniPoly({c}); }
    /// c1*t + c0
    static UniPoly linear(const Rational& c1, const Rational& c0) { return UniPoly({c0, c1}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : Rational(0);
    }
    Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }

    Rational evaluate(const Rational& t) const;
    UniPoly derivative() const;

    /// Exactly one nonzero coefficient (c * t^k). The zero polynomial is not
    /// a monomial.
    bool is_monomial() const;

    UniPoly monic() const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a);
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    friend UniPoly operator*(const UniPoly& a, const Rational& s);

    /// Quotient and remainder with deg(rem) < deg(divisor). Divisor nonzero.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

    /// Exact division; throws std::domain_error if the remainder is nonzero.
    UniPoly divide_exact(const UniPoly& divisor) const;

    bool operator==(const UniPoly&) const = default;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Monic gcd; poly_gcd(p, 0) is the monic associate of p, poly_gcd(0, 0) = 0.
UniPoly poly_gcd(UniPoly p, UniPoly q);

std::string to_string(const UniPoly& p, const char* var = "s");
std::ostream& operator<<(std::ostream& os, const UniPoly& p);

} // namespace topzeta

#endif
