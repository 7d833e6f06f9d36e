#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <specinf/errors.hpp>
#include <specinf/report.hpp>

#include <json.hpp>

using namespace specinf;

static const std::vector<std::string> XY{"x", "y"};

static AnalysisReport p2_report() {
    std::string input = "x + y + x^-1*y^-1";
    return build_analysis_report(parse_laurent(input, XY), input);
}

TEST_CASE("analysis report of the P2 mirror") {
    auto r = p2_report();
    CHECK(r.arity == 2);
    CHECK(r.convenient);
    CHECK(r.nondegenerate);
    CHECK(r.milnor == 3);
    CHECK(r.volume == 3);
    CHECK(r.spectrum.total_multiplicity() == 3);
    CHECK(r.hodge.total() == 3);
    REQUIRE(r.bundles.size() == 1);
    CHECK(r.bundles[0].degree == 3);
    REQUIRE(r.alphas.size() == 1);
    CHECK(r.alphas[0].nearby_dimension == 3);
    CHECK(r.all_checks());
}

TEST_CASE("hypothesis failures raise before any report is built") {
    CHECK_THROWS_AS(build_analysis_report(parse_laurent("x + y", XY), "x + y"), NotConvenient);
    std::string deg = "x^2 + 2*x*y + y^2 + x^-1*y^-1";
    CHECK_THROWS_AS(build_analysis_report(parse_laurent(deg, XY), deg), Degenerate);
}

TEST_CASE("force skips the non-degeneracy check and stamps the report") {
    std::string deg = "x^2 + 2*x*y + y^2 + x^-1*y^-1";
    auto r = build_analysis_report(parse_laurent(deg, XY), deg, MonomialOrder::Grevlex, true);
    CHECK(r.force);
    CHECK(!r.nondegenerate);
    auto j = nlohmann::json::parse(report_to_json(r));
    CHECK(j.contains("unverified_hypotheses"));
}

TEST_CASE("json output is valid, versioned and deterministic") {
    auto r = p2_report();
    auto text = report_to_json(r);
    auto j = nlohmann::json::parse(text);
    CHECK(j["schema_version"] == kReportSchemaVersion);
    CHECK(j["milnor_number"] == 3);
    CHECK(j["input"] == "x + y + x^-1*y^-1");
    // rationals are strings
    CHECK(j["spectrum"][0]["gamma"].is_string());
    CHECK(j["spectrum"][0]["gamma"] == "0");
    CHECK(j["irregular_hodge_numbers"][0]["alpha"].is_string());
    // byte-identical across runs
    CHECK(report_to_json(p2_report()) == text);
    CHECK(!j.contains("unverified_hypotheses"));
}

TEST_CASE("text output mentions the headline numbers") {
    auto t = report_to_text(p2_report());
    CHECK(t.find("3") != std::string::npos);
    CHECK(t.find("x + y + x^-1*y^-1") != std::string::npos);
}

TEST_CASE("catalog report") {
    auto c = run_catalog();
    REQUIRE(c.entries.size() == 3);
    CHECK(c.all_match());
    auto j = nlohmann::json::parse(catalog_to_json(c));
    CHECK(j.is_object());
    auto again = catalog_to_json(run_catalog());
    CHECK(again == catalog_to_json(c));
}
