#ifndef TOPZETA_POLES_HPP
#define TOPZETA_POLES_HPP

#include <optional>
#include <vector>

#include "topzeta/newton_polygon.hpp"
#include "topzeta/zeta.hpp"

namespace topzeta {

/// One candidate pole value with every facet contributing it. -1 always
/// appears (the s/(s+1) prefactor), possibly with contributing facets of its
/// own when some facet has nu == N.
struct CandidateEntry {
    Rational value;
    std::vector<size_t> facets;
};

/// Distinct candidates -nu/N over facets with N > 0 plus -1, sorted by value.
/// At most two facets can share a candidate != -1 in the plane; that is
/// checked, and a violation throws std::logic_error.
std::vector<CandidateEntry> candidate_poles(const NewtonPolygon& polygon);

/// An actual pole of the assembled zeta function.
struct PoleReport {
    Rational value;
    int order = 0;
    std::optional<Rational> residue; // present iff order == 1
    std::vector<size_t> contributing_facets;
    bool is_minus_one = false;
};

/// One report per distinct root of the canonical denominator, sorted by
/// value.
std::vector<PoleReport> actual_poles(const ZetaResult& z, const NewtonPolygon& polygon);

} // namespace topzeta

#endif
