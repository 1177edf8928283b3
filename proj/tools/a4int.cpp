// a4int: command-line front end for the A4 intersection computations.
//
// Exit status: 0 success, 1 computation or verification failure, 2 usage error.

#include "a4/error.hpp"
#include "a4/report.hpp"
#include "a4/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

struct Output {
  std::string format = "text";
  bool json = false;
  bool reproducible = false;

  bool as_json() const { return json || format == "json"; }
};

void emit(const a4::OutputDocument& doc, const Output& out) {
  if (out.as_json())
    std::cout << a4::to_json(doc, out.reproducible).dump(2) << '\n';
  else
    std::cout << a4::to_text(doc);
}

void print_checks(const std::vector<a4::CheckResult>& checks) {
  std::size_t passed = 0;
  for (const auto& c : checks) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.id << ": " << c.description << " [expected " << c.expected
              << ", actual " << c.actual << "]\n";
    passed += c.pass ? 1 : 0;
  }
  std::cout << passed << "/" << checks.size() << " checks passed\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact intersection numbers on the Igusa and second Voronoi compactifications of A4"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Output out;
  app.add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--json", out.json, "Same as --format json");
  app.add_flag("--reproducible", out.reproducible, "Omit the generated_at timestamp from JSON output");

  auto* fan = app.add_subcommand("fan", "Star fan of the exceptional ray");
  fan->require_subcommand(1);
  auto* fan_report = fan->add_subcommand("report", "Rays, eta, facets, cones and stabilizer order");

  std::vector<std::string> expr;
  auto* intersection = app.add_subcommand("intersection", "Intersection number of a degree-10 monomial");
  intersection->add_option("expr", expr, "e10 | eval <monomial> | <monomial>, e.g. E^2*D1*D2*D3*D4*D5*D6*D7*D8")
      ->required()
      ->expected(1, 2);

  std::string which;
  a4::TablesOptions topts;
  std::string basis = "lfe";
  auto* tables = app.add_subcommand("tables", "Intersection tables");
  tables->add_option("which", which, "igusa | voronoi | ltop")->required();
  tables->add_flag("--stack", topts.stack, "Stack normalization (halves every L-number)");
  tables->add_option("--basis", basis, "Monomial basis of the Voronoi table")
      ->check(CLI::IsMember({"lfe", "geometric"}))
      ->capture_default_str();
  tables->add_option("--genus", topts.genus, "Genus for ltop")->capture_default_str();
  tables->add_flag("--signed-bernoulli", topts.signed_bernoulli,
                   "Use signed Bernoulli numbers in the proportionality product");

  a4::VerifyOptions vopts;
  std::string fault;
  auto* verify = app.add_subcommand("verify", "Run the full acceptance suite");
  verify->add_option("--inject-fault", fault)->check(CLI::IsMember({"b0"}))->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    a4::Session session;
    if (fan_report->parsed()) {
      emit(a4::fan_report(session), out);
    } else if (intersection->parsed()) {
      std::string arg;
      if (expr.size() == 2) {
        if (expr[0] != "eval") throw a4::UsageError("expected 'eval <monomial>', got '" + expr[0] + "'");
        arg = expr[1];
      } else {
        arg = expr[0];
      }
      emit(a4::intersection_report(session, arg), out);
    } else if (tables->parsed()) {
      topts.basis = basis == "geometric" ? a4::Basis::Geometric : a4::Basis::LFE;
      emit(a4::tables_report(session, which, topts), out);
    } else if (verify->parsed()) {
      vopts.corrupt_b0 = fault == "b0";
      const auto checks = a4::run_verification(session, vopts);
      if (out.as_json())
        std::cout << a4::to_json(a4::verification_document(checks), out.reproducible).dump(2) << '\n';
      else
        print_checks(checks);
      return a4::all_passed(checks) ? 0 : 1;
    }
    return 0;
  } catch (const a4::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
