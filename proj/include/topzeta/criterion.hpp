#ifndef TOPZETA_CRITERION_HPP
#define TOPZETA_CRITERION_HPP

#include <vector>

#include "topzeta/newton_polygon.hpp"
#include "topzeta/poles.hpp"
#include "topzeta/rat_func.hpp"
#include "topzeta/zeta.hpp"

namespace topzeta {

/// Endpoint and neighbour data of a compact facet in the orientation the
/// closed forms expect: endpoints (k,l) and (m,n) with k < m and l > n, g
/// the lattice length, (a,b) the staircase point before (k,l) and (c,d) the
/// one after (m,n). When the neighbouring facet is a ray, the neighbour
/// point is the next lattice point along the ray: (k, l+1) or (m+1, n).
struct ProofFacetFrame {
    Int k = 0, l = 0, m = 0, n = 0;
    Int g = 1;
    Int a = 0, b = 0, c = 0, d = 0;
};

/// Throws std::invalid_argument unless the frame satisfies
/// 0 <= k < m, 0 <= n < l, g == gcd(m-k, l-n), a <= k < c, d <= n < b,
/// with a == k only in the ray form (a,b) == (k, l+1) and d == n only in the
/// ray form (c,d) == (m+1, n).
void validate_frame(const ProofFacetFrame& frame);

/// The frame of a compact facet of the polygon.
ProofFacetFrame frame_for_facet(const NewtonPolygon& polygon, size_t facet_index);

/// -s g^2 / ((s+1) ((lm-kn)s + l-n+m-k))
FactoredRatFunc facet_contribution(const ProofFacetFrame& frame);

enum class FrameSide { left, right };

/// Contribution of the endpoint (k,l) (left) or (m,n) (right):
///   left:  [(b-l)(m-k) - (l-n)(k-a)] / (((lm-kn)s + l-n+m-k) ((bk-al)s + b-l+k-a))
///   right: [(l-n)(c-m) - (n-d)(m-k)] / (((lm-kn)s + l-n+m-k) ((nc-md)s + n-d+c-m))
FactoredRatFunc vertex_contribution(const ProofFacetFrame& frame, FrameSide side);

/// Residue of the summed three contributions at s0 = -(l-n+m-k)/(lm-kn):
///   (l-n+m-k) ((ml-nk)(ml-nk+k-m+n-l) + g^2 (n-m)(k-l))
///   / ((lm-kn)(n-m)(k-l)(ml-nk+k-m+n-l))
/// Throws std::domain_error when a denominator factor vanishes (endpoint on
/// the diagonal, or candidate -1).
Rational closed_form_residue(const ProofFacetFrame& frame);

/// F = (ml-nk)(ml-nk+k-m+n-l) + g^2 (n-m)(k-l); zero exactly when the
/// residue vanishes (for frames with the order-1 candidate != -1).
Rational factor_F(const ProofFacetFrame& frame);

/// Residue 1/(a-b) of the zeta function at the candidate -1/a of a
/// non-compact facet with affine hull x = a (or y = a) and vertex (a,b)
/// (resp. (b,a)). Throws std::domain_error when a == b.
Rational noncompact_residue(Int a, Int b);

/// Edge polynomial P(t) of a compact facet: coefficients of the support at
/// (k,l) + i*((m-k)/g, (n-l)/g) for i = 0..g (zero where absent).
UniPoly edge_polynomial(const NewtonPolygon& polygon, const FacetData& facet);

struct EdgeStatus {
    size_t facet_index;
    bool nondegenerate;
};

/// Vertices are monomial faces and always nondegenerate; a compact edge is
/// degenerate exactly when gcd(P, P') has a root off the origin, i.e. is not
/// a monomial in t.
struct NondegeneracyReport {
    bool nondegenerate = true;
    std::vector<EdgeStatus> edges; // one entry per compact facet
};

NondegeneracyReport nondegeneracy_check(const NewtonPolygon& polygon);

/// Candidate values != -1 contributed by at least one facet that is not a
/// B1-facet (rays count as non-B1), sorted ascending. These are exactly the
/// poles != -1 predicted for nondegenerate f.
std::vector<Rational> predicted_poles(const NewtonPolygon& polygon);

struct CandidateCheck {
    Rational value;
    std::vector<size_t> facets;
    bool predicted = false;
    bool actual = false;
    int order = 0;
    bool agree = false;
};

struct ResidueCheck {
    Rational value;
    Rational closed_form; // summed over contributing facets
    Rational from_zeta;
    bool match = false;
};

/// Outcome of checking the pole criterion against the directly computed
/// zeta function. When hypotheses_met is false (degenerate input) every
/// entry is a formal value and the criterion carries no guarantee.
struct CriterionVerdict {
    bool hypotheses_met = false;
    std::vector<CandidateCheck> candidates; // values != -1, ascending
    std::vector<ResidueCheck> residue_checks;
    bool residues_match = true;
    bool order2_consistent = true; // adjacent sharers gave order exactly 2
    bool agree = true;             // all candidate checks agree

    bool clean() const { return agree && residues_match && order2_consistent; }
};

CriterionVerdict verify_criterion(const NewtonPolygon& polygon, const ZetaResult& zeta,
                                  const NondegeneracyReport& nondegeneracy);
CriterionVerdict verify_criterion(const std::vector<SupportPoint>& support);

} // namespace topzeta

#endif
