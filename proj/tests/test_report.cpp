#include "a4/error.hpp"
#include "a4/report.hpp"
#include "a4/verify.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace a4;

namespace {

Session& session() {
  static Session s;
  return s;
}

Rational q(long n, long d) { return Rational(Integer(n), Integer(d)); }

// Parses the emitted JSON text and compares every result with the
// in-memory document.
void check_round_trip(const OutputDocument& doc) {
  const Json parsed = Json::parse(to_json(doc, true).dump());
  REQUIRE(parsed["results"].size() == doc.results.size());
  for (std::size_t i = 0; i < doc.results.size(); ++i) {
    CHECK(parsed["results"][i]["name"] == doc.results[i].name);
    CHECK(rational_from_json(parsed["results"][i]["value"]) == doc.results[i].value);
  }
}

}  // namespace

TEST_SUITE("json") {
  TEST_CASE("rationals are decimal string pairs") {
    const Json j = rational_to_json(q(-35, 24));
    CHECK(j.dump() == R"({"numerator":"-35","denominator":"24"})");
    CHECK(rational_from_json(j) == q(-35, 24));
  }

  TEST_CASE("random rationals round-trip") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> d(-1000000007L, 1000000007L);
    for (int i = 0; i < 300; ++i) {
      long den = d(rng);
      if (den == 0) den = 1;
      Rational r(Integer(d(rng)), Integer(den));
      for (int k = 0; k < i % 4; ++k) r *= r;
      CHECK(rational_from_json(Json::parse(rational_to_json(r).dump())) == r);
    }
  }

  TEST_CASE("malformed rationals are rejected") {
    CHECK_THROWS_AS(rational_from_json(Json::parse(R"({"numerator":"2","denominator":"4"})")), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_json(Json::parse(R"({"numerator":1,"denominator":"4"})")), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_json(Json::parse(R"({"numerator":"1"})")), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_json(Json::parse("0.5")), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_json(Json::parse(R"({"numerator":"1","denominator":"0"})")), std::domain_error);
    CHECK_THROWS(rational_from_json(Json::parse(R"({"numerator":"x","denominator":"1"})")));
  }

  TEST_CASE("document layout") {
    OutputDocument doc;
    doc.command = "demo";
    doc.inputs.emplace_back("genus", "4");
    doc.results.push_back({"x", q(1, 3), "note"});
    doc.notes.push_back("hello");
    const Json stable = to_json(doc, true);
    std::vector<std::string> keys;
    for (const auto& [k, v] : stable.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"command", "inputs", "results", "data", "notes"});
    CHECK(to_json(doc, false).contains("generated_at"));
    CHECK(doc.find("x")->value == q(1, 3));
    CHECK(doc.find("y") == nullptr);
    const std::string text = to_text(doc);
    CHECK(text.find("x = 1/3    (note)") != std::string::npos);
    CHECK(text.find("note: hello") != std::string::npos);
  }
}

TEST_SUITE("monomial grammar") {
  TEST_CASE("accepted forms") {
    CHECK(parse_monomial("E^10", 13, 10) == DivisorMonomial::e_times(13, 10, RaySet()));
    CHECK(parse_monomial(" E^2 * D3*D5 ", 13, 4).str() == "E^2*D3*D5");
    CHECK(parse_monomial("E*D12*D12", 13, 3).str() == "E*D12^2");
    CHECK(parse_monomial("D1*E", 13, 2).str() == "E*D1");
  }

  TEST_CASE("rejected forms") {
    for (const char* bad : {"", "E*", "*E", "e^10", "E^0*E^10", "D0*E^9", "D13*E^9", "E^", "E^10x", "E**E^9", "F^10"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(parse_monomial(bad, 13, 10), UsageError);
    }
    CHECK_THROWS_AS(parse_monomial("E^9", 13, 10), UsageError);
    CHECK_THROWS_AS(parse_monomial("E^300", 13, 300), UsageError);
  }
}

TEST_SUITE("reports") {
  TEST_CASE("fan report") {
    const OutputDocument doc = fan_report(session());
    CHECK(doc.data["ray_count"] == 12);
    CHECK(doc.data["facet_count"] == 64);
    CHECK(doc.data["cone_count"] == 64);
    CHECK(doc.data["stabilizer_order"] == 1152);
    CHECK(doc.data["all_cones_basic"] == true);
    CHECK(doc.data["form_determinant"] == 4);
    CHECK(doc.data["rays"][0]["label"] == "D1");
    CHECK(doc.data["cones"][0]["rays"][0] == "E");
    CHECK(doc.find("eta_content")->value == Rational(3));
    check_round_trip(doc);
  }

  TEST_CASE("e10 and its aliases") {
    const OutputDocument doc = intersection_report(session(), "e10");
    CHECK(doc.find("toric")->value == Rational(-1680));
    CHECK(doc.find("toric_recursive")->value == Rational(-1680));
    CHECK(doc.find("moduli")->value == q(-35, 24));
    CHECK(doc.data["engines_agree"] == true);
    CHECK(doc.data["system"]["free_unknowns"] == 0);
    check_round_trip(doc);
    const OutputDocument alias = intersection_report(session(), "E^10");
    CHECK(alias.find("toric")->value == Rational(-1680));
    CHECK(alias.find("moduli")->value == q(-35, 24));
  }

  TEST_CASE("transversal point over a facet") {
    const auto& cone = session().star().fan.cones.front();
    std::string expr = "E";
    for (auto i : cone.without(0).indices()) expr += "*D" + std::to_string(i);
    const OutputDocument doc = intersection_report(session(), expr);
    CHECK(doc.find("toric")->value == Rational(1));
    CHECK(doc.find("moduli") == nullptr);
  }

  TEST_CASE("intersection usage errors") {
    CHECK_THROWS_AS(intersection_report(session(), "D1^10"), UsageError);
    CHECK_THROWS_AS(intersection_report(session(), "E^9"), UsageError);
    CHECK_THROWS_AS(intersection_report(session(), "bogus"), UsageError);
  }

  TEST_CASE("tables") {
    const OutputDocument igusa = tables_report(session(), "igusa", {});
    REQUIRE(igusa.results.size() == 11);
    CHECK(igusa.results.front().name == "a_10");
    CHECK(igusa.find("a_10")->value == q(1, 907200));
    CHECK(igusa.find("a_0")->value == q(101449217, 1440));
    CHECK(igusa.data["recurrence_holds"] == true);
    check_round_trip(igusa);

    TablesOptions stack;
    stack.stack = true;
    CHECK(tables_report(session(), "ltop", stack).find("L^10")->value == q(1, 1814400));
    TablesOptions g1;
    g1.genus = 1;
    CHECK(tables_report(session(), "ltop", g1).find("L^1")->value == q(1, 12));

    const OutputDocument vor = tables_report(session(), "voronoi", {});
    CHECK(vor.results.size() == 66);
    CHECK(vor.find("a_0,10")->value == q(-35, 24));
    CHECK(vor.find("a_4,0")->value == Rational(0));
    CHECK(vor.find("a_3,5")->value == Rational(0));
    check_round_trip(vor);

    TablesOptions geo;
    geo.basis = Basis::Geometric;
    const OutputDocument g = tables_report(session(), "voronoi", geo);
    CHECK(g.find("L^0 D^10 E^0")->value == q(-2100560383, 1440));
    CHECK(g.find("L^6 D^4 E^0")->value == q(-1, 3780));
  }

  TEST_CASE("tables usage errors") {
    CHECK_THROWS_AS(tables_report(session(), "siegel", {}), UsageError);
    TablesOptions g0;
    g0.genus = 0;
    CHECK_THROWS_AS(tables_report(session(), "ltop", g0), UsageError);
  }
}

TEST_SUITE("verification") {
  TEST_CASE("all checks pass on the embedded data") {
    const auto checks = run_verification(session(), {.corrupt_b0 = false, .oracle_cases = 40});
    CHECK(checks.size() == 23);
    for (const auto& c : checks) {
      CAPTURE(c.id);
      CAPTURE(c.actual);
      CHECK(c.pass);
    }
    CHECK(all_passed(checks));
    const OutputDocument doc = verification_document(checks);
    CHECK(doc.data["passed"] == checks.size());
    CHECK(doc.data["checks"][0]["status"] == "PASS");
  }

  TEST_CASE("fault injection fails the recurrence") {
    const auto checks = run_verification(session(), {.corrupt_b0 = true, .oracle_cases = 5});
    CHECK_FALSE(all_passed(checks));
    for (const auto& c : checks)
      if (c.id == "igusa.recurrence" || c.id == "igusa.table") CHECK_FALSE(c.pass);
    CHECK(verification_document(checks).data["all_passed"] == false);
  }

  TEST_CASE("empty suite does not pass") { CHECK_FALSE(all_passed({})); }
}
