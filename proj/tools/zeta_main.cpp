// zeta: exact local topological zeta functions of plane-curve germs from
// their Newton polygons, with pole/residue extraction and the B1-facet pole
// criterion checked against the directly computed values.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "topzeta/corpus.hpp"
#include "topzeta/report.hpp"

namespace {

int run_expression(const std::string& expr, bool as_json, const topzeta::ReportOptions& options,
                   bool verify_only) {
    try {
        topzeta::Report report = topzeta::run_report(expr);
        if (as_json) {
            std::cout << topzeta::report_json(report, options).dump(2) << "\n";
        } else if (verify_only) {
            std::cout << "f = " << report.input << "\n";
            std::cout << "nondegenerate: "
                      << (report.verdict.hypotheses_met ? "yes" : "no") << "\n";
            for (const auto& check : report.verdict.candidates)
                std::cout << "  candidate " << check.value << ": predicted "
                          << (check.predicted ? "pole" : "no pole") << ", actual order "
                          << check.order << (check.agree ? "" : "  <-- MISMATCH") << "\n";
            for (const auto& rc : report.verdict.residue_checks)
                std::cout << "  residue at " << rc.value << ": closed form " << rc.closed_form
                          << (rc.match ? " == " : " != ") << rc.from_zeta << " from zeta\n";
            std::cout << "criterion: " << (report.verdict.agree ? "agree" : "MISMATCH") << "\n";
        } else {
            std::cout << topzeta::report_text(report, options);
        }
        return topzeta::report_exit_code(report);
    } catch (const topzeta::ParseError& e) {
        std::cerr << "parse error at position " << e.position() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact topological zeta functions of plane curve germs from Newton polygons"};
    app.require_subcommand(1);

    std::string expr;
    topzeta::ReportOptions options;
    bool as_json = false;

    CLI::App* report = app.add_subcommand("report", "analyze one polynomial in x and y");
    report->add_option("expr", expr, "polynomial, e.g. \"x^2 + y^3\"")->required();
    report->add_flag("--json", as_json, "machine-readable output");
    report->add_flag("--residues", options.residue_details, "include residue cross-checks");
    report->add_flag("--ascii-polygon", options.ascii, "draw the staircase");

    CLI::App* verify = app.add_subcommand("verify", "check the pole criterion on one polynomial");
    verify->add_option("expr", expr, "polynomial, e.g. \"x^2 + y^3\"")->required();

    topzeta::CorpusOptions corpus_options;
    CLI::App* corpus = app.add_subcommand("corpus", "verify the criterion on random staircases");
    corpus->add_option("--seed", corpus_options.seed, "random seed")->capture_default_str();
    corpus->add_option("--count", corpus_options.count, "number of instances")
        ->capture_default_str()
        ->check(CLI::Range(1LL, 1000000000LL));
    corpus->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1; // nonzero command-line problems are usage errors
    }

    if (report->parsed()) return run_expression(expr, as_json, options, false);
    if (verify->parsed()) return run_expression(expr, as_json, options, true);

    topzeta::CorpusSummary summary = topzeta::run_corpus(corpus_options);
    if (as_json)
        std::cout << topzeta::corpus_json(summary).dump(2) << "\n";
    else
        std::cout << topzeta::corpus_text(summary);
    return summary.all_clean() ? 0 : 3;
}
