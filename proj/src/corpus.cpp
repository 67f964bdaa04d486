#include "topzeta/corpus.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "topzeta/parse.hpp"

namespace topzeta {

namespace {

Int pick(std::mt19937_64& rng, Int lo, Int hi) {
    return lo + static_cast<Int>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

Rational small_coeff(std::mt19937_64& rng) {
    static const int values[] = {1, 2, 3, -1, -2, -3};
    return Rational(values[pick(rng, 0, 5)]);
}

std::vector<SupportPoint> random_support_once(std::mt19937_64& rng) {
    const Int n = pick(rng, 1, 6);
    std::set<Int> xs, ys;
    while (static_cast<Int>(xs.size()) < n) xs.insert(pick(rng, 0, 30));
    while (static_cast<Int>(ys.size()) < n) ys.insert(pick(rng, 0, 30));

    std::vector<SupportPoint> support;
    std::set<Vec2> used;
    auto add = [&](Vec2 e) {
        if (e == Vec2{0, 0} || !used.insert(e).second) return;
        support.push_back({e, small_coeff(rng)});
    };

    // staircase: x ascending paired with y descending
    auto xi = xs.begin();
    auto yi = ys.rbegin();
    for (Int i = 0; i < n; ++i) add({*xi++, *yi++});
    if (support.empty()) return support; // lone vertex (0,0); caller retries

    // lattice points on compact edges, to give the edge polynomials interior
    // coefficients
    NewtonPolygon shape = build_polygon(support);
    for (const FacetData& f : shape.facets()) {
        if (!f.is_compact() || f.g < 2) continue;
        const Int px = (f.end.x - f.start.x) / f.g;
        const Int py = (f.end.y - f.start.y) / f.g;
        for (Int i = 1; i < f.g; ++i)
            if (pick(rng, 0, 1) == 0) add({f.start.x + i * px, f.start.y + i * py});
    }

    // occasionally a few points strictly inside the polygon (hull-invariant)
    if (pick(rng, 0, 3) == 0) {
        for (Int extra = pick(rng, 1, 2); extra > 0; --extra) {
            const Vec2 v = shape.vertices()[static_cast<size_t>(
                pick(rng, 0, static_cast<Int>(shape.vertices().size()) - 1))];
            add({v.x + pick(rng, 0, 4), v.y + pick(rng, 0, 4)});
        }
    }
    return support;
}

} // namespace

std::vector<SupportPoint> random_nondegenerate_support(std::mt19937_64& rng,
                                                       long long* resamples) {
    for (;;) {
        std::vector<SupportPoint> support = random_support_once(rng);
        if (support.empty()) continue;
        if (nondegeneracy_check(build_polygon(support)).nondegenerate) return support;
        if (resamples) ++*resamples;
    }
}

CorpusSummary run_corpus(const CorpusOptions& options) {
    if (options.count < 1) throw std::invalid_argument("corpus: count must be >= 1");
    CorpusSummary summary;
    summary.seed = options.seed;
    std::mt19937_64 rng(options.seed);
    for (long long i = 0; i < options.count; ++i) {
        std::vector<SupportPoint> support =
            random_nondegenerate_support(rng, &summary.degenerate_resamples);
        CriterionVerdict verdict = verify_criterion(support);
        ++summary.instances;
        if (verdict.agree) ++summary.agreements;
        for (const auto& rc : verdict.residue_checks) {
            ++summary.residue_checks;
            if (rc.match) ++summary.residue_matches;
        }
        for (const auto& check : verdict.candidates)
            if (check.order == 2) ++summary.order2_poles;
        if (!verdict.clean()) {
            std::ostringstream os;
            os << "instance " << i << ": f = " << render_polynomial(support);
            for (const auto& check : verdict.candidates)
                if (!check.agree)
                    os << "; candidate " << check.value << " predicted "
                       << (check.predicted ? "pole" : "no pole") << " but order is "
                       << check.order;
            for (const auto& rc : verdict.residue_checks)
                if (!rc.match)
                    os << "; residue mismatch at " << rc.value << " (closed form "
                       << rc.closed_form << ", zeta " << rc.from_zeta << ")";
            if (!verdict.order2_consistent) os << "; order-2 inconsistency";
            summary.counterexamples.push_back(os.str());
        }
    }
    return summary;
}

std::string corpus_text(const CorpusSummary& summary) {
    std::ostringstream os;
    os << "corpus seed " << summary.seed << ", " << summary.instances << " instance(s)\n";
    os << "criterion agreement: " << summary.agreements << "/" << summary.instances << "\n";
    os << "residue cross-checks: " << summary.residue_matches << "/" << summary.residue_checks
       << " exact\n";
    os << "order-2 poles seen: " << summary.order2_poles << "\n";
    os << "degenerate draws resampled: " << summary.degenerate_resamples << "\n";
    if (summary.counterexamples.empty()) {
        os << "counterexamples: none\n";
    } else {
        os << "counterexamples:\n";
        for (const auto& line : summary.counterexamples) os << "  " << line << "\n";
    }
    return os.str();
}

nlohmann::ordered_json corpus_json(const CorpusSummary& summary) {
    nlohmann::ordered_json j;
    j["seed"] = summary.seed;
    j["instances"] = summary.instances;
    j["agreements"] = summary.agreements;
    j["residue_checks"] = summary.residue_checks;
    j["residue_matches"] = summary.residue_matches;
    j["order2_poles"] = summary.order2_poles;
    j["degenerate_resamples"] = summary.degenerate_resamples;
    j["counterexamples"] = summary.counterexamples;
    return j;
}

} // namespace topzeta
