#include <doctest.h>

#include "test_helpers.hpp"
#include "topzeta/report.hpp"

using namespace topzeta;
using topzeta::testing::r;

TEST_CASE("report for the cusp") {
    Report report = run_report("x^2 + y^3");
    CHECK(report.input == "y^3 + x^2");
    CHECK(report.nondegeneracy.nondegenerate);
    CHECK(to_string(report.zeta.zeta) == "(4s+5)/((s+1)(6s+5))");
    REQUIRE(report.poles.size() == 2);
    CHECK(report.poles[0].value == r(-1));
    CHECK(report.poles[1].value == r(-5, 6));
    CHECK(report.poles[1].residue == r(5, 3));
    CHECK(report.verdict.agree);
    CHECK(report_exit_code(report) == 0);
}

TEST_CASE("report flags cancelled B1 candidates") {
    Report report = run_report("x + y");
    CHECK(to_string(report.zeta.zeta) == "1/(s+1)");
    std::string text = report_text(report);
    CHECK(text.find("-2") != std::string::npos);
    CHECK(text.find("cancelled (B1)") != std::string::npos);
    CHECK(report_exit_code(report) == 0);
}

TEST_CASE("degenerate input exits 2") {
    Report report = run_report("x^2 + 2*x*y + y^2");
    CHECK_FALSE(report.nondegeneracy.nondegenerate);
    CHECK(report_exit_code(report) == 2);
    CHECK(report_text(report).find("formal") != std::string::npos);
}

TEST_CASE("order-2 pole appears in the report") {
    Report report = run_report("x^5 + x^2*y^2 + y^5");
    bool found = false;
    for (const auto& pole : report.poles)
        if (pole.value == r(-1, 2)) {
            found = true;
            CHECK(pole.order == 2);
            CHECK_FALSE(pole.residue.has_value());
        }
    CHECK(found);
    CHECK(report_exit_code(report) == 0);
}

TEST_CASE("json schema and zeta round trip") {
    Report report = run_report("x^2 + y^3");
    auto j = report_json(report, ReportOptions{true, false});

    for (const char* key :
         {"input", "nondegenerate", "vertices", "facets", "zeta", "poles", "criterion"})
        CHECK(j.contains(key));
    CHECK(j["input"] == "y^3 + x^2");
    CHECK(j["nondegenerate"] == true);
    CHECK(j["vertices"].size() == 2);
    REQUIRE(j["facets"].size() == 3);
    CHECK(j["facets"][0].contains("ray"));
    CHECK(j["facets"][1].contains("endpoints"));
    CHECK(j["facets"][1]["N"] == 6);
    CHECK(j["facets"][1]["nu"] == 5);
    CHECK(j["facets"][1]["g"] == 1);
    CHECK(j["facets"][1]["b1"] == "none");
    CHECK(j["facets"][1]["candidate"] == "-5/6");
    CHECK(j["criterion"]["agree"] == true);

    // the structured zeta re-parses to the computed rational function
    std::vector<Rational> coeffs;
    for (const auto& c : j["zeta"]["numerator_coeffs"]) {
        auto v = Rational::parse(c.get<std::string>());
        REQUIRE(v.has_value());
        coeffs.push_back(*v);
    }
    std::vector<LinFactor> factors;
    for (const auto& f : j["zeta"]["denominator_factors"])
        factors.push_back({f[0].get<long long>(), f[1].get<long long>()});
    FactoredRatFunc rebuilt{UniPoly(std::move(coeffs)), std::move(factors)};
    CHECK(rebuilt.identical(report.zeta.zeta));

    // poles carry predictions except at -1
    REQUIRE(j["poles"].size() == 2);
    CHECK(j["poles"][0]["value"] == "-1");
    CHECK(j["poles"][0]["predicted"].is_null());
    CHECK(j["poles"][1]["value"] == "-5/6");
    CHECK(j["poles"][1]["predicted"] == true);
    CHECK(j["poles"][1]["residue"] == "5/3");
}

TEST_CASE("ascii staircase") {
    Report report = run_report("x^2 + y^3");
    std::string art = ascii_polygon(report.polygon);
    CHECK(art.find('*') != std::string::npos);
    CHECK(art.find("candidate -1/r = -5/6") != std::string::npos);
    // also reachable through report_text with the flag set
    ReportOptions options;
    options.ascii = true;
    CHECK(report_text(report, options).find('*') != std::string::npos);
}
