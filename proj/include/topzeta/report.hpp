#ifndef TOPZETA_REPORT_HPP
#define TOPZETA_REPORT_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "topzeta/criterion.hpp"
#include "topzeta/parse.hpp"
#include "topzeta/poles.hpp"

namespace topzeta {

struct ReportOptions {
    bool residue_details = false; // include the residue cross-check table
    bool ascii = false;           // draw the staircase
};

/// Everything the pipeline derives from one input polynomial.
struct Report {
    std::string input; // canonical rendering
    std::vector<SupportPoint> support;
    NewtonPolygon polygon;
    NondegeneracyReport nondegeneracy;
    ZetaResult zeta;
    std::vector<CandidateEntry> candidates;
    std::vector<PoleReport> poles;
    CriterionVerdict verdict;
};

/// Parses and runs the full pipeline. Propagates ParseError.
Report run_report(std::string_view text);

/// 0: nondegenerate and criterion clean; 2: degenerate input; 3: criterion
/// mismatch (a bug signal).
int report_exit_code(const Report& report);

nlohmann::ordered_json report_json(const Report& report, const ReportOptions& options = {});
std::string report_text(const Report& report, const ReportOptions& options = {});

/// Staircase drawing with the support, vertices and lattice diagonal marked.
std::string ascii_polygon(const NewtonPolygon& polygon);

} // namespace topzeta

#endif
