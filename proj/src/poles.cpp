#include "topzeta/poles.hpp"

#include <map>
#include <stdexcept>

namespace topzeta {

std::vector<CandidateEntry> candidate_poles(const NewtonPolygon& polygon) {
    std::map<Rational, std::vector<size_t>> grouped;
    grouped[Rational(-1)]; // always a candidate via s/(s+1)
    for (size_t i = 0; i < polygon.facets().size(); ++i)
        if (auto c = polygon.facet(i).candidate_pole()) grouped[*c].push_back(i);

    std::vector<CandidateEntry> out;
    out.reserve(grouped.size());
    for (auto& [value, facets] : grouped) {
        if (value != Rational(-1) && facets.size() > 2)
            throw std::logic_error("candidate_poles: more than two facets share a candidate");
        out.push_back({value, std::move(facets)});
    }
    return out;
}

std::vector<PoleReport> actual_poles(const ZetaResult& z, const NewtonPolygon& polygon) {
    std::map<Rational, int> orders;
    for (const LinFactor& f : z.zeta.denominator()) ++orders[f.root()];

    auto candidates = candidate_poles(polygon);
    std::vector<PoleReport> out;
    for (const auto& [value, order] : orders) {
        PoleReport report;
        report.value = value;
        report.order = order;
        if (order == 1) report.residue = z.zeta.residue_simple(value);
        for (const auto& entry : candidates)
            if (entry.value == value) report.contributing_facets = entry.facets;
        report.is_minus_one = value == Rational(-1);
        out.push_back(std::move(report));
    }
    return out;
}

} // namespace topzeta
