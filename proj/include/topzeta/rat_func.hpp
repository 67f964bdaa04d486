#ifndef TOPZETA_RAT_FUNC_HPP
#define TOPZETA_RAT_FUNC_HPP

#include <compare>
#include <ostream>
#include <string>
#include <vector>

#include "topzeta/unipoly.hpp"

namespace topzeta {

/// One linear denominator factor N*s + nu with integer N >= 0, nu >= 1.
/// N > 0 gives the root -nu/N; N == 0 is the nonzero constant nu.
struct LinFactor {
    long long N = 0;
    long long nu = 1;

    Rational root() const { return Rational(-nu, N); } // requires N > 0
    Rational evaluate(const Rational& s) const { return Rational(N) * s + Rational(nu); }
    UniPoly to_poly() const { return UniPoly::linear(Rational(N), Rational(nu)); }

    auto operator<=>(const LinFactor&) const = default;
};

/// Rational function in one variable s: a numerator polynomial over a
/// multiset of integer linear factors. Canonical form:
///   - factors with N == 0 are folded into the numerator,
///   - factors are kept sorted,
///   - no remaining factor's root is a root of the numerator (removable
///     factors are cancelled by exact synthetic division, smallest factor
///     first),
///   - the zero function is 0 over an empty factor list.
///
/// Literal factors are preserved: (10s+5) is not rewritten as 5*(2s+1),
/// mirroring how facet data enters the denominators. Two canonical forms can
/// therefore denote the same function with different factor labels, so
/// operator== compares exact values (cross-multiplied polynomial identity).
/// Pole orders, residues and evaluation only depend on the value.
class FactoredRatFunc {
public:
    FactoredRatFunc() = default; // zero
    FactoredRatFunc(UniPoly numerator, std::vector<LinFactor> denominator);

    static FactoredRatFunc constant(const Rational& c) {
        return FactoredRatFunc(UniPoly::constant(c), {});
    }

    const UniPoly& numerator() const { return num_; }
    const std::vector<LinFactor>& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// Number of denominator factors whose root equals s0 (0: not a pole).
    int pole_order(const Rational& s0) const;

    /// Exact residue at a simple pole; throws std::domain_error unless
    /// pole_order(s0) == 1.
    Rational residue_simple(const Rational& s0) const;

    /// Exact value at s; throws std::domain_error at a pole.
    Rational evaluate(const Rational& s) const;

    /// Exact value equality.
    friend bool operator==(const FactoredRatFunc& a, const FactoredRatFunc& b);
    /// Same canonical representation (same numerator and literal factors).
    bool identical(const FactoredRatFunc& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    friend FactoredRatFunc operator+(const FactoredRatFunc& f, const FactoredRatFunc& g);
    friend FactoredRatFunc operator-(const FactoredRatFunc& f);
    friend FactoredRatFunc operator-(const FactoredRatFunc& f, const FactoredRatFunc& g) {
        return f + (-g);
    }

private:
    void canonicalize();
    UniPoly num_;
    std::vector<LinFactor> den_; // sorted
};

/// Display form: numerator as an integer polynomial (coefficient denominators
/// cleared into the denominator, integer content pulled out front), the
/// denominator as a product of literal (N s + nu) factors.
std::string to_string(const FactoredRatFunc& f);
std::ostream& operator<<(std::ostream& os, const FactoredRatFunc& f);

} // namespace topzeta

#endif
