#ifndef TOPZETA_NEWTON_POLYGON_HPP
#define TOPZETA_NEWTON_POLYGON_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "topzeta/rational.hpp"

namespace topzeta {

using Int = long long;

/// Exponents are bounded so that normals, weights and cone determinants stay
/// exactly representable in 64 bits; everything derived beyond that range is
/// computed in arbitrary precision.
inline constexpr Int kMaxExponent = 1'000'000;

struct Vec2 {
    Int x = 0;
    Int y = 0;
    auto operator<=>(const Vec2&) const = default;
};

inline Int dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline Int cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

/// One term of f: exponent pair with its nonzero coefficient.
struct SupportPoint {
    Vec2 exponent;
    Rational coeff;
};

enum class FacetKind { vertical_ray, compact, horizontal_ray };

enum class B1Type { none, b1_x, b1_y, b1_both };

/// A facet of the Newton polygon with its derived data. Compact facets join
/// two consecutive staircase vertices; the two rays anchor at the first and
/// last vertex. normal is the primitive inward normal, N the minimum of
/// normal . p over the polygon, nu the coordinate sum of the normal, and g
/// the lattice length (compact facets only, 0 on rays).
struct FacetData {
    FacetKind kind = FacetKind::compact;
    Vec2 start;
    Vec2 end;
    Vec2 normal;
    Int N = 0;
    Int nu = 0;
    Int g = 0;

    bool is_compact() const { return kind == FacetKind::compact; }

    /// -nu/N for N > 0; rays with N == 0 contribute no pole factor.
    std::optional<Rational> candidate_pole() const {
        if (N == 0) return std::nullopt;
        return Rational(-nu, N);
    }
};

/// A facet with one vertex on a coordinate axis and the other at lattice
/// distance one from it. Rays have a single vertex and are never B1.
B1Type classify_b1(const FacetData& facet);

/// Dual cone of a face: one primitive generator for a facet, two for a
/// vertex. mult is 1 for rays and |det| of the generator pair otherwise.
struct Cone2 {
    std::vector<Vec2> generators;
    Int mult = 1;
};

/// The Newton polygon of a two-variable polynomial at the origin: the
/// lower-left staircase hull of support + first quadrant, with vertices
/// ordered by increasing x (hence decreasing y) and facets ordered
/// [vertical ray, compact facets left to right, horizontal ray].
class NewtonPolygon {
public:
    const std::vector<SupportPoint>& support() const { return support_; }
    const std::vector<Vec2>& vertices() const { return vertices_; }
    const std::vector<FacetData>& facets() const { return facets_; }
    const FacetData& facet(size_t i) const { return facets_.at(i); }

    /// Dual cone of vertex i, spanned by the normals of its two adjacent
    /// facets (facets i and i+1 in the facet order).
    Cone2 vertex_dual_cone(size_t vertex_index) const;

    /// N(a): the minimum of a . p over the polygon (attained at a vertex).
    Int min_weight(Vec2 a) const;

    friend NewtonPolygon build_polygon(std::vector<SupportPoint> support);

private:
    std::vector<SupportPoint> support_;
    std::vector<Vec2> vertices_;
    std::vector<FacetData> facets_;
};

/// Builds the polygon. Throws std::invalid_argument on empty support ("f is
/// zero"), a constant term ("f(0) != 0 required"), duplicate exponent pairs,
/// zero coefficients, or out-of-range exponents.
NewtonPolygon build_polygon(std::vector<SupportPoint> support);

} // namespace topzeta

#endif
