#include "topzeta/newton_polygon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace topzeta {

B1Type classify_b1(const FacetData& facet) {
    if (!facet.is_compact()) return B1Type::none;
    const Int k = facet.start.x, m = facet.end.x;
    const Int l = facet.start.y, n = facet.end.y;
    const bool bx = (k == 0 && m == 1);
    const bool by = (n == 0 && l == 1);
    if (bx && by) return B1Type::b1_both;
    if (bx) return B1Type::b1_x;
    if (by) return B1Type::b1_y;
    return B1Type::none;
}

Cone2 NewtonPolygon::vertex_dual_cone(size_t vertex_index) const {
    if (vertex_index >= vertices_.size())
        throw std::out_of_range("vertex_dual_cone: bad vertex index");
    Vec2 a = facets_[vertex_index].normal;
    Vec2 b = facets_[vertex_index + 1].normal;
    Int det = cross(a, b);
    if (det <= 0) throw std::logic_error("vertex_dual_cone: generators not ordered");
    return Cone2{{a, b}, det};
}

Int NewtonPolygon::min_weight(Vec2 a) const {
    Int best = dot(a, vertices_.front());
    for (const Vec2& v : vertices_) best = std::min(best, dot(a, v));
    return best;
}

NewtonPolygon build_polygon(std::vector<SupportPoint> support) {
    if (support.empty()) throw std::invalid_argument("f is zero");
    for (const auto& p : support) {
        if (p.exponent.x < 0 || p.exponent.y < 0)
            throw std::invalid_argument("negative exponent");
        if (p.exponent.x > kMaxExponent || p.exponent.y > kMaxExponent)
            throw std::invalid_argument("exponent too large");
        if (p.exponent == Vec2{0, 0}) throw std::invalid_argument("f(0) != 0 required");
        if (p.coeff.is_zero()) throw std::invalid_argument("zero coefficient in support");
    }
    std::sort(support.begin(), support.end(), [](const SupportPoint& a, const SupportPoint& b) {
        return a.exponent < b.exponent;
    });
    for (size_t i = 0; i + 1 < support.size(); ++i)
        if (support[i].exponent == support[i + 1].exponent)
            throw std::invalid_argument("duplicate exponent pair");

    // Pareto-minimal staircase points: per x the lowest y, kept only while y
    // strictly drops as x grows.
    std::vector<Vec2> minimal;
    for (const auto& p : support) {
        const Vec2 e = p.exponent;
        if (!minimal.empty() && minimal.back().x == e.x) continue; // larger y, same x
        if (!minimal.empty() && e.y >= minimal.back().y) continue; // dominated
        minimal.push_back(e);
    }

    // Monotone-chain lower hull; strict turns only, so collinear interior
    // points are not vertices.
    std::vector<Vec2> hull;
    for (const Vec2& p : minimal) {
        while (hull.size() >= 2) {
            Vec2 a = hull[hull.size() - 2], b = hull[hull.size() - 1];
            if (cross(Vec2{b.x - a.x, b.y - a.y}, Vec2{p.x - b.x, p.y - b.y}) <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }

    NewtonPolygon poly;
    poly.support_ = std::move(support);
    poly.vertices_ = std::move(hull);

    const Vec2 first = poly.vertices_.front();
    const Vec2 last = poly.vertices_.back();

    poly.facets_.push_back(FacetData{FacetKind::vertical_ray, first, first,
                                     Vec2{1, 0}, first.x, 1, 0});
    for (size_t i = 0; i + 1 < poly.vertices_.size(); ++i) {
        const Vec2 s = poly.vertices_[i], e = poly.vertices_[i + 1];
        const Int g = std::gcd(e.x - s.x, s.y - e.y);
        const Vec2 normal{(s.y - e.y) / g, (e.x - s.x) / g};
        FacetData f{FacetKind::compact, s, e, normal, dot(normal, s),
                    normal.x + normal.y, g};
        if (dot(normal, e) != f.N)
            throw std::logic_error("facet endpoints disagree on N");
        poly.facets_.push_back(f);
    }
    poly.facets_.push_back(FacetData{FacetKind::horizontal_ray, last, last,
                                     Vec2{0, 1}, last.y, 1, 0});
    return poly;
}

} // namespace topzeta
