#include "topzeta/criterion.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace topzeta {

void validate_frame(const ProofFacetFrame& f) {
    bool ok = f.k >= 0 && f.n >= 0 && f.k < f.m && f.n < f.l &&
              f.g == std::gcd(f.m - f.k, f.l - f.n);
    ok = ok && ((f.a < f.k && f.b > f.l) || (f.a == f.k && f.b == f.l + 1)) && f.a >= 0;
    ok = ok && ((f.c > f.m && f.d < f.n) || (f.c == f.m + 1 && f.d == f.n)) && f.d >= 0;
    if (!ok) throw std::invalid_argument("invalid proof frame");
}

ProofFacetFrame frame_for_facet(const NewtonPolygon& polygon, size_t facet_index) {
    const FacetData& facet = polygon.facet(facet_index);
    if (!facet.is_compact())
        throw std::invalid_argument("frame_for_facet: facet is not compact");
    ProofFacetFrame frame;
    frame.k = facet.start.x;
    frame.l = facet.start.y;
    frame.m = facet.end.x;
    frame.n = facet.end.y;
    frame.g = facet.g;
    const FacetData& before = polygon.facet(facet_index - 1);
    if (before.is_compact()) {
        frame.a = before.start.x;
        frame.b = before.start.y;
    } else {
        frame.a = frame.k; // next lattice point up the vertical ray
        frame.b = frame.l + 1;
    }
    const FacetData& after = polygon.facet(facet_index + 1);
    if (after.is_compact()) {
        frame.c = after.end.x;
        frame.d = after.end.y;
    } else {
        frame.c = frame.m + 1; // next lattice point along the horizontal ray
        frame.d = frame.n;
    }
    validate_frame(frame);
    return frame;
}

FactoredRatFunc facet_contribution(const ProofFacetFrame& f) {
    validate_frame(f);
    UniPoly num({Rational(0), Rational(-f.g * f.g)});
    return FactoredRatFunc(std::move(num),
                           {LinFactor{1, 1},
                            LinFactor{f.l * f.m - f.k * f.n, f.l - f.n + f.m - f.k}});
}

FactoredRatFunc vertex_contribution(const ProofFacetFrame& f, FrameSide side) {
    validate_frame(f);
    const LinFactor shared{f.l * f.m - f.k * f.n, f.l - f.n + f.m - f.k};
    if (side == FrameSide::left) {
        Int num = (f.b - f.l) * (f.m - f.k) - (f.l - f.n) * (f.k - f.a);
        return FactoredRatFunc(UniPoly::constant(Rational(num)),
                               {shared, LinFactor{f.b * f.k - f.a * f.l,
                                                  f.b - f.l + f.k - f.a}});
    }
    Int num = (f.l - f.n) * (f.c - f.m) - (f.n - f.d) * (f.m - f.k);
    return FactoredRatFunc(UniPoly::constant(Rational(num)),
                           {shared, LinFactor{f.n * f.c - f.m * f.d,
                                              f.n - f.d + f.c - f.m}});
}

namespace {

mpz_class z(Int v) { return mpz_class(static_cast<long>(v)); }

// F in exact arbitrary precision; the surrounding frame values are bounded
// by kMaxExponent but the products here are not.
mpz_class factor_f_mpz(const ProofFacetFrame& f) {
    const mpz_class k = z(f.k), l = z(f.l), m = z(f.m), n = z(f.n), g = z(f.g);
    const mpz_class ml_nk = m * l - n * k;
    return ml_nk * (ml_nk + k - m + n - l) + g * g * (n - m) * (k - l);
}

} // namespace

Rational factor_F(const ProofFacetFrame& f) {
    validate_frame(f);
    return Rational(factor_f_mpz(f));
}

Rational closed_form_residue(const ProofFacetFrame& f) {
    validate_frame(f);
    const mpz_class k = z(f.k), l = z(f.l), m = z(f.m), n = z(f.n);
    const mpz_class ml_nk = m * l - n * k;
    const mpz_class tail = ml_nk + k - m + n - l; // zero iff the candidate is -1
    if (n == m || k == l || tail == 0)
        throw std::domain_error("closed_form_residue: degenerate frame");
    const mpz_class num = (l - n + m - k) * factor_f_mpz(f);
    const mpz_class den = ml_nk * (n - m) * (k - l) * tail;
    return Rational(num, den);
}

Rational noncompact_residue(Int a, Int b) {
    if (a == b) throw std::domain_error("noncompact_residue: a == b");
    if (a <= 0 || b < 0) throw std::invalid_argument("noncompact_residue: bad vertex");
    return Rational(1, a - b);
}

UniPoly edge_polynomial(const NewtonPolygon& polygon, const FacetData& facet) {
    if (!facet.is_compact())
        throw std::invalid_argument("edge_polynomial: facet is not compact");
    const Int px = (facet.end.x - facet.start.x) / facet.g;
    const Int py = (facet.end.y - facet.start.y) / facet.g;
    std::map<Vec2, Rational> coeff;
    for (const auto& p : polygon.support()) coeff[p.exponent] = p.coeff;
    std::vector<Rational> c(static_cast<size_t>(facet.g) + 1);
    for (Int i = 0; i <= facet.g; ++i) {
        auto it = coeff.find(Vec2{facet.start.x + i * px, facet.start.y + i * py});
        if (it != coeff.end()) c[static_cast<size_t>(i)] = it->second;
    }
    return UniPoly(std::move(c));
}

NondegeneracyReport nondegeneracy_check(const NewtonPolygon& polygon) {
    NondegeneracyReport report;
    for (size_t i = 0; i < polygon.facets().size(); ++i) {
        const FacetData& facet = polygon.facet(i);
        if (!facet.is_compact()) continue;
        UniPoly p = edge_polynomial(polygon, facet);
        bool ok = poly_gcd(p, p.derivative()).is_monomial();
        report.edges.push_back({i, ok});
        report.nondegenerate = report.nondegenerate && ok;
    }
    return report;
}

std::vector<Rational> predicted_poles(const NewtonPolygon& polygon) {
    std::vector<Rational> out;
    for (const auto& entry : candidate_poles(polygon)) {
        if (entry.value == Rational(-1)) continue;
        bool non_b1 = false;
        for (size_t i : entry.facets)
            non_b1 = non_b1 || classify_b1(polygon.facet(i)) == B1Type::none;
        if (non_b1) out.push_back(entry.value);
    }
    return out; // candidate_poles is already sorted ascending
}

CriterionVerdict verify_criterion(const NewtonPolygon& polygon, const ZetaResult& zeta,
                                  const NondegeneracyReport& nondegeneracy) {
    CriterionVerdict verdict;
    verdict.hypotheses_met = nondegeneracy.nondegenerate;

    const auto all_candidates = candidate_poles(polygon);
    // containment: a denominator root outside the candidate set would be a
    // structural bug and must fail the verdict loudly
    for (const LinFactor& f : zeta.zeta.denominator()) {
        bool known = f.root() == Rational(-1);
        for (const auto& entry : all_candidates) known = known || entry.value == f.root();
        verdict.agree = verdict.agree && known;
    }

    const auto predicted = predicted_poles(polygon);
    for (const auto& entry : all_candidates) {
        if (entry.value == Rational(-1)) continue;
        CandidateCheck check;
        check.value = entry.value;
        check.facets = entry.facets;
        check.predicted =
            std::find(predicted.begin(), predicted.end(), entry.value) != predicted.end();
        check.order = zeta.zeta.pole_order(entry.value);
        check.actual = check.order > 0;
        check.agree = check.predicted == check.actual;
        verdict.agree = verdict.agree && check.agree;

        // Two facets meeting in a vertex on the diagonal must give order
        // exactly two; sharers that do not meet cannot exceed order one.
        if (entry.facets.size() == 2) {
            bool adjacent = entry.facets[1] == entry.facets[0] + 1;
            verdict.order2_consistent =
                verdict.order2_consistent && (adjacent ? check.order == 2 : check.order <= 1);
        }

        if (check.order == 1) {
            Rational expected(0);
            for (size_t i : entry.facets) {
                const FacetData& facet = polygon.facet(i);
                switch (facet.kind) {
                case FacetKind::compact:
                    expected += closed_form_residue(frame_for_facet(polygon, i));
                    break;
                case FacetKind::vertical_ray:
                    expected += noncompact_residue(facet.N, facet.start.y);
                    break;
                case FacetKind::horizontal_ray:
                    expected += noncompact_residue(facet.N, facet.start.x);
                    break;
                }
            }
            ResidueCheck rc;
            rc.value = entry.value;
            rc.closed_form = expected;
            rc.from_zeta = zeta.zeta.residue_simple(entry.value);
            rc.match = rc.closed_form == rc.from_zeta;
            verdict.residues_match = verdict.residues_match && rc.match;
            verdict.residue_checks.push_back(std::move(rc));
        }

        verdict.candidates.push_back(std::move(check));
    }
    return verdict;
}

CriterionVerdict verify_criterion(const std::vector<SupportPoint>& support) {
    NewtonPolygon polygon = build_polygon(support);
    ZetaResult zeta = topological_zeta(polygon);
    return verify_criterion(polygon, zeta, nondegeneracy_check(polygon));
}

} // namespace topzeta
