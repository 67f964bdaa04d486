#include "topzeta/zeta.hpp"

#include <stdexcept>

namespace topzeta {

FactoredRatFunc j_delta(const Cone2& cone, const NewtonPolygon& polygon) {
    std::vector<LinFactor> den;
    den.reserve(cone.generators.size());
    for (const Vec2& a : cone.generators)
        den.push_back({polygon.min_weight(a), a.x + a.y});
    return FactoredRatFunc(UniPoly::constant(Rational(cone.mult)), std::move(den));
}

FactoredRatFunc j_tau_vertex(const NewtonPolygon& polygon, size_t vertex_index) {
    return j_delta(polygon.vertex_dual_cone(vertex_index), polygon);
}

FactoredRatFunc j_tau_facet(const NewtonPolygon& polygon, size_t facet_index) {
    const FacetData& f = polygon.facet(facet_index);
    return j_delta(Cone2{{f.normal}, 1}, polygon);
}

Int normalized_volume(const FacetData& facet) {
    if (!facet.is_compact())
        throw std::invalid_argument("normalized_volume: facet is not compact");
    return facet.g;
}

ZetaResult topological_zeta(const NewtonPolygon& polygon) {
    ZetaResult result;
    for (size_t i = 0; i < polygon.vertices().size(); ++i)
        result.vertex_terms.emplace_back(i, j_tau_vertex(polygon, i));
    for (size_t i = 0; i < polygon.facets().size(); ++i) {
        const FacetData& f = polygon.facet(i);
        if (!f.is_compact()) continue;
        // -(s/(s+1)) * g * J_facet as one term: numerator -g*s over the
        // factors (s+1)(Ns+nu)
        FactoredRatFunc term(UniPoly({Rational(0), Rational(-f.g)}),
                             {LinFactor{1, 1}, LinFactor{f.N, f.nu}});
        result.facet_terms.emplace_back(i, std::move(term));
    }
    for (const auto& [i, term] : result.vertex_terms) result.zeta = result.zeta + term;
    for (const auto& [i, term] : result.facet_terms) result.zeta = result.zeta + term;
    return result;
}

} // namespace topzeta
