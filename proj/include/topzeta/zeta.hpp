#ifndef TOPZETA_ZETA_HPP
#define TOPZETA_ZETA_HPP

#include <utility>
#include <vector>

#include "topzeta/newton_polygon.hpp"
#include "topzeta/rat_func.hpp"

namespace topzeta {

/// The assembled zeta function together with the per-face terms it was
/// summed from. vertex_terms[i] is J of the dual cone of vertex i;
/// facet_terms hold, per compact facet, the full signed term
/// -(s/(s+1)) * g * J_facet. zeta is the canonical ordered sum of all terms.
struct ZetaResult {
    FactoredRatFunc zeta;
    std::vector<std::pair<size_t, FactoredRatFunc>> vertex_terms;
    std::vector<std::pair<size_t, FactoredRatFunc>> facet_terms;
};

/// J of a simplicial cone: mult over the product of (N(a)s + nu(a)) taken
/// over the generators, weights computed against the polygon.
FactoredRatFunc j_delta(const Cone2& cone, const NewtonPolygon& polygon);

/// J of a vertex: j_delta of its dual cone (already simplicial in the plane).
FactoredRatFunc j_tau_vertex(const NewtonPolygon& polygon, size_t vertex_index);

/// J of a facet: j_delta of the ray spanned by its normal, 1/(Ns + nu).
FactoredRatFunc j_tau_facet(const NewtonPolygon& polygon, size_t facet_index);

/// Lattice length g of a compact facet; equals the endpoint-cone
/// multiplicity divided by N. Throws on rays.
Int normalized_volume(const FacetData& facet);

/// Z(s) = sum over vertices of J + (s/(s+1)) * sum over compact facets of
/// (-1) * g * J; the only compact faces of positive dimension in the plane
/// are the facets.
ZetaResult topological_zeta(const NewtonPolygon& polygon);

} // namespace topzeta

#endif
