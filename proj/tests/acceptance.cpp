// Acceptance gate: one PASS/FAIL line per criterion, exit 0 iff all pass.
// Every comparison is exact.

#include "a4/report.hpp"
#include "a4/verify.hpp"

#include <array>
#include <cstdio>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct Criterion {
  int number;
  const char* title;
  std::vector<std::string> ids;
};

const std::vector<Criterion> kCriteria = {
    {1, "proportionality: L^10 = 1/907200, stack 1/1814400", {"proportionality.l_top", "proportionality.stack"}},
    {2, "Igusa table a_10..a_0", {"igusa.table"}},
    {3, "recurrence closure and a_9 = a_8 = a_7 = 0", {"igusa.recurrence", "igusa.vanishing"}},
    {4, "fan: 12 rays, 64 facets of 9 rays, 64 basic cones",
     {"fan.rays", "fan.facets", "fan.facet_size", "fan.basic_cones"}},
    {5, "stabilizer of order 1152 permuting the cones", {"stabilizer.order", "stabilizer.permutes_cones"}},
    {6, "E^10 = -1680 from a consistent, determined system", {"toric.system", "toric.e10"}},
    {7, "recursive and linear-system engines agree", {"engines.agreement", "engines.relations"}},
    {8, "Voronoi table: -1680/1152 = -35/24, pullback row, zero band",
     {"voronoi.a_0_10", "voronoi.pullback", "voronoi.zero_band"}},
    {9, "oracles: facets, determinants, Bernoulli numbers, toy fans",
     {"oracle.facets", "oracle.det", "oracle.bernoulli", "oracle.toy_fans"}},
};

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(A4INT_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

void report(bool pass, int number, const std::string& title, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << number << ": " << title;
  if (!detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << '\n';
}

}  // namespace

int main() {
  std::vector<a4::CheckResult> checks;
  try {
    a4::Session session;
    checks = a4::run_verification(session);
  } catch (const std::exception& e) {
    std::cout << "FAIL  verification suite aborted: " << e.what() << '\n';
    return 1;
  }

  bool all = true;
  for (const auto& c : kCriteria) {
    bool pass = true;
    std::string detail;
    for (const auto& id : c.ids) {
      const a4::CheckResult* found = nullptr;
      for (const auto& r : checks)
        if (r.id == id) found = &r;
      if (!found) {
        pass = false;
        detail += (detail.empty() ? "" : "; ") + id + " missing";
        continue;
      }
      if (!detail.empty()) detail += "; ";
      if (!found->pass) {
        pass = false;
        detail += id + ": expected " + found->expected + ", actual " + found->actual;
      } else {
        detail += found->actual;
      }
    }
    report(pass, c.number, c.title, detail);
    all &= pass;
  }

  // 10. Two independent runs of the CLI produce identical bytes.
  const Run first = run_cli("verify --json --reproducible");
  const Run second = run_cli("verify --json --reproducible");
  bool in_process = false;
  for (const auto& r : checks)
    if (r.id == "determinism") in_process = r.pass;
  const bool same = !first.out.empty() && first.out == second.out;
  const bool pass = same && first.status == 0 && second.status == 0 && in_process;
  report(pass, 10, "determinism: two runs of verify --json --reproducible are byte-identical",
         std::to_string(first.out.size()) + " bytes, " + (same ? "identical" : "different") + ", exit " +
             std::to_string(first.status) + "/" + std::to_string(second.status));
  all &= pass;

  std::cout << (all ? "all criteria passed" : "acceptance FAILED") << '\n';
  return all ? 0 : 1;
}
