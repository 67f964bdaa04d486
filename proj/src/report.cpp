#include "topzeta/report.hpp"

#include <algorithm>
#include <sstream>

namespace topzeta {

using nlohmann::ordered_json;

Report run_report(std::string_view text) {
    Report report;
    report.support = parse_polynomial(text);
    report.input = render_polynomial(report.support);
    report.polygon = build_polygon(report.support);
    report.nondegeneracy = nondegeneracy_check(report.polygon);
    report.zeta = topological_zeta(report.polygon);
    report.candidates = candidate_poles(report.polygon);
    report.poles = actual_poles(report.zeta, report.polygon);
    report.verdict = verify_criterion(report.polygon, report.zeta, report.nondegeneracy);
    return report;
}

int report_exit_code(const Report& report) {
    if (!report.nondegeneracy.nondegenerate) return 2;
    if (!report.verdict.clean()) return 3;
    return 0;
}

namespace {

const char* b1_name(B1Type b1) {
    switch (b1) {
    case B1Type::none: return "none";
    case B1Type::b1_x: return "x";
    case B1Type::b1_y: return "y";
    case B1Type::b1_both: return "xy";
    }
    return "none";
}

ordered_json facet_json(const NewtonPolygon& polygon, size_t index) {
    const FacetData& f = polygon.facet(index);
    ordered_json j;
    if (f.is_compact()) {
        j["endpoints"] = {{f.start.x, f.start.y}, {f.end.x, f.end.y}};
    } else {
        j["ray"] = f.kind == FacetKind::vertical_ray ? "vertical" : "horizontal";
        j["vertex"] = {f.start.x, f.start.y};
    }
    j["normal"] = {f.normal.x, f.normal.y};
    j["N"] = f.N;
    j["nu"] = f.nu;
    if (f.is_compact())
        j["g"] = f.g;
    else
        j["g"] = nullptr;
    j["b1"] = b1_name(classify_b1(f));
    if (auto c = f.candidate_pole())
        j["candidate"] = c->str();
    else
        j["candidate"] = nullptr;
    return j;
}

// predicted is null for -1: the criterion does not speak about it.
ordered_json pole_json(const Report& report, const PoleReport& pole) {
    ordered_json j;
    j["value"] = pole.value.str();
    j["order"] = pole.order;
    if (pole.residue) j["residue"] = pole.residue->str();
    if (pole.is_minus_one) {
        j["predicted"] = nullptr;
    } else {
        bool predicted = false;
        for (const auto& check : report.verdict.candidates)
            if (check.value == pole.value) predicted = check.predicted;
        j["predicted"] = predicted;
    }
    j["contributing_facets"] = pole.contributing_facets;
    return j;
}

} // namespace

ordered_json report_json(const Report& report, const ReportOptions& options) {
    ordered_json j;
    j["input"] = report.input;
    j["nondegenerate"] = report.nondegeneracy.nondegenerate;

    j["vertices"] = ordered_json::array();
    for (const Vec2& v : report.polygon.vertices()) j["vertices"].push_back({v.x, v.y});

    j["facets"] = ordered_json::array();
    for (size_t i = 0; i < report.polygon.facets().size(); ++i)
        j["facets"].push_back(facet_json(report.polygon, i));

    ordered_json zeta;
    zeta["numerator_coeffs"] = ordered_json::array();
    for (const Rational& c : report.zeta.zeta.numerator().coeffs())
        zeta["numerator_coeffs"].push_back(c.str());
    zeta["denominator_factors"] = ordered_json::array();
    for (const LinFactor& f : report.zeta.zeta.denominator())
        zeta["denominator_factors"].push_back({f.N, f.nu});
    zeta["display"] = to_string(report.zeta.zeta);
    j["zeta"] = std::move(zeta);

    j["poles"] = ordered_json::array();
    for (const PoleReport& pole : report.poles) j["poles"].push_back(pole_json(report, pole));

    ordered_json details;
    details["hypotheses_met"] = report.verdict.hypotheses_met;
    details["candidates"] = ordered_json::array();
    for (const auto& check : report.verdict.candidates) {
        ordered_json c;
        c["value"] = check.value.str();
        c["contributing_facets"] = check.facets;
        c["predicted"] = check.predicted;
        c["actual"] = check.actual;
        c["order"] = check.order;
        c["agree"] = check.agree;
        details["candidates"].push_back(std::move(c));
    }
    if (options.residue_details || !report.verdict.residues_match) {
        details["residue_checks"] = ordered_json::array();
        for (const auto& rc : report.verdict.residue_checks) {
            ordered_json c;
            c["value"] = rc.value.str();
            c["closed_form"] = rc.closed_form.str();
            c["from_zeta"] = rc.from_zeta.str();
            c["match"] = rc.match;
            details["residue_checks"].push_back(std::move(c));
        }
    }
    details["residues_match"] = report.verdict.residues_match;
    details["order2_consistent"] = report.verdict.order2_consistent;
    j["criterion"] = {{"agree", report.verdict.agree}, {"details", std::move(details)}};
    return j;
}

std::string ascii_polygon(const NewtonPolygon& polygon) {
    Int max_x = 0, max_y = 0;
    for (const Vec2& v : polygon.vertices()) {
        max_x = std::max(max_x, v.x);
        max_y = std::max(max_y, v.y);
    }
    max_x += 1;
    max_y += 1;
    if (max_x > 40 || max_y > 40) return "(polygon too large to draw)\n";

    std::vector<std::string> grid(static_cast<size_t>(max_y) + 1,
                                  std::string(static_cast<size_t>(max_x) + 1, ' '));
    auto put = [&](Int x, Int y, char c) {
        if (x <= max_x && y <= max_y) grid[static_cast<size_t>(y)][static_cast<size_t>(x)] = c;
    };
    for (Int d = 0; d <= std::min(max_x, max_y); ++d) put(d, d, '.');
    for (const auto& p : polygon.support()) put(p.exponent.x, p.exponent.y, 'o');
    for (const Vec2& v : polygon.vertices()) put(v.x, v.y, '*');

    std::ostringstream os;
    for (Int y = max_y; y >= 0; --y) {
        os.width(3);
        os << y << " |" << grid[static_cast<size_t>(y)] << "\n";
    }
    os << "    +" << std::string(static_cast<size_t>(max_x) + 1, '-') << "\n";
    os << "     0";
    if (max_x >= 10)
        os << std::string(static_cast<size_t>(max_x) - 2, ' ') << max_x;
    os << "\n";
    os << "(o support, * vertex, . diagonal; facet lines omitted)\n";
    for (const FacetData& f : polygon.facets()) {
        if (!f.is_compact() || f.N == 0) continue;
        os << "facet (" << f.start.x << "," << f.start.y << ")-(" << f.end.x << ","
           << f.end.y << "): diagonal crossing r = " << Rational(f.N, f.nu)
           << ", candidate -1/r = " << *f.candidate_pole() << "\n";
    }
    return os.str();
}

std::string report_text(const Report& report, const ReportOptions& options) {
    std::ostringstream os;
    os << "f = " << report.input << "\n";
    os << "nondegenerate: " << (report.nondegeneracy.nondegenerate ? "yes" : "no") << "\n";
    if (!report.nondegeneracy.nondegenerate)
        os << "  (degenerate edge; all values below are formal and the criterion"
              " carries no guarantee)\n";

    os << "newton polygon: " << report.polygon.vertices().size() << " vertex(es)\n";
    for (size_t i = 0; i < report.polygon.facets().size(); ++i) {
        const FacetData& f = report.polygon.facet(i);
        os << "  facet " << i << ": ";
        if (f.is_compact())
            os << "(" << f.start.x << "," << f.start.y << ")-(" << f.end.x << "," << f.end.y
               << ")";
        else
            os << (f.kind == FacetKind::vertical_ray ? "vertical ray at (" : "horizontal ray at (")
               << f.start.x << "," << f.start.y << ")";
        os << ", normal (" << f.normal.x << "," << f.normal.y << "), N=" << f.N
           << ", nu=" << f.nu;
        if (f.is_compact()) os << ", g=" << f.g;
        if (auto c = f.candidate_pole()) os << ", candidate " << *c;
        if (classify_b1(f) != B1Type::none) os << " [B1-" << b1_name(classify_b1(f)) << "]";
        os << "\n";
    }
    if (options.ascii) os << ascii_polygon(report.polygon);

    os << "Z(s) = " << to_string(report.zeta.zeta) << "\n";

    os << "candidate poles:\n";
    for (const auto& entry : report.candidates) {
        os << "  " << entry.value;
        if (entry.value == Rational(-1) && entry.facets.empty())
            os << " (from the s/(s+1) prefactor)";
        else if (!entry.facets.empty()) {
            os << " from facet" << (entry.facets.size() > 1 ? "s" : "");
            for (size_t i : entry.facets) os << " " << i;
        }
        if (entry.value != Rational(-1)) {
            bool actual = report.zeta.zeta.pole_order(entry.value) > 0;
            bool all_b1 = true;
            for (size_t i : entry.facets)
                all_b1 = all_b1 && classify_b1(report.polygon.facet(i)) != B1Type::none;
            if (!actual && all_b1) os << " -- cancelled (B1)";
        }
        os << "\n";
    }

    os << "poles:\n";
    for (const PoleReport& pole : report.poles) {
        os << "  s = " << pole.value << ": order " << pole.order;
        if (pole.residue) os << ", residue " << *pole.residue;
        os << "\n";
    }

    os << "criterion: " << (report.verdict.agree ? "agree" : "MISMATCH (predicted != actual)");
    if (!report.verdict.hypotheses_met) os << " [formal only: nondegeneracy failed]";
    os << "\n";
    if (options.residue_details || !report.verdict.residues_match) {
        for (const auto& rc : report.verdict.residue_checks)
            os << "  residue at " << rc.value << ": closed form " << rc.closed_form
               << (rc.match ? " == " : " != ") << rc.from_zeta << " from zeta\n";
    }
    if (!report.verdict.order2_consistent) os << "  ORDER-2 INCONSISTENCY\n";
    return os.str();
}

} // namespace topzeta
