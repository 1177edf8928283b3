#include "a4/verify.hpp"

#include "a4/oracles.hpp"
#include "a4/proportionality.hpp"
#include "a4/tables.hpp"

#include <algorithm>
#include <optional>
#include <exception>
#include <random>
#include <set>
#include <sstream>

namespace a4 {

namespace {

// Published Igusa table, a_10 first.
std::array<Rational, 11> published_igusa() {
  std::array<Rational, 11> a;
  a[10] = Rational(1, 907200);
  a[9] = a[8] = a[7] = 0;
  a[6] = Rational(-1, 3780);
  a[5] = a[4] = 0;
  a[3] = Rational(-1759, 1680);
  a[2] = 0;
  a[1] = Rational(1636249, 1080);
  a[0] = Rational(101449217, 1440);
  return a;
}

std::string join(const std::array<Rational, 11>& a) {
  std::ostringstream os;
  for (unsigned k = 11; k-- > 0;) os << a[k] << (k ? ", " : "");
  return os.str();
}

class Suite {
 public:
  void add(std::string id, std::string description, std::string reference, bool pass, std::string expected,
           std::string actual) {
    checks_.push_back({std::move(id), std::move(description), std::move(reference), pass, std::move(expected),
                       std::move(actual)});
  }

  // Runs `body`; an exception becomes a failed check.
  template <class F>
  void guarded(const std::string& id, const std::string& description, const std::string& reference, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(id, description, reference, false, "no error", std::string("exception: ") + e.what());
    }
  }

  std::vector<CheckResult> take() { return std::move(checks_); }

 private:
  std::vector<CheckResult> checks_;
};

IntVector random_vector(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntVector v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

}  // namespace

std::vector<CheckResult> run_verification(Session& session, const VerifyOptions& options) {
  Suite suite;
  FaberData b = faber_data();
  if (options.corrupt_b0) b.b[0] += Rational(1);

  // 1. Proportionality.
  suite.guarded("proportionality.l_top", "L^10 for g = 4", "a_10 = L^10 = 1/907200", [&] {
    const auto r = l_top(4);
    suite.add("proportionality.l_top", "L^10 for g = 4", "a_10 = L^10 = 1/907200", r.value == Rational(1, 907200),
              "1/907200", r.value.str());
    suite.add("proportionality.stack", "stack normalization of L^10", "half of L^10",
              r.stack_value == Rational(1, 1814400), "1/1814400", r.stack_value.str());
  });

  // 2-3. Igusa table and recurrence.
  const auto published = published_igusa();
  suite.guarded("igusa.table", "Igusa table from L^10 and the curve data", "Igusa intersection table", [&] {
    const IgusaTable t = igusa_table(l_top(4).value, b);
    suite.add("igusa.table", "Igusa table from L^10 and the curve data", "Igusa intersection table",
              t.a == published, join(published), join(t.a));
    IgusaTable pub{published};
    const auto rec = verify_recurrence(pub, b);
    suite.add("igusa.recurrence", "b_(k-1) = 8 a_k - a_(k-1) for k = 1..10", "Jacobian class 8L - D", rec.ok,
              "holds for k = 1..10",
              rec.ok ? "holds for k = 1..10" : "fails at k = " + std::to_string(*rec.failing_index));
    const bool vanish = t.a[9].is_zero() && t.a[8].is_zero() && t.a[7].is_zero();
    suite.add("igusa.vanishing", "a_9 = a_8 = a_7 = 0 from the recurrence", "boundary of codimension 4", vanish,
              "0, 0, 0", t.a[9].str() + ", " + t.a[8].str() + ", " + t.a[7].str());
  });

  // 4. Fan combinatorics.
  suite.guarded("fan.combinatorics", "star fan construction", "64 basic cones", [&] {
    const StarFan& s = session.star();
    suite.add("fan.rays", "rays of the perfect cone", "12 rays", s.gammas.size() == 12, "12",
              std::to_string(s.gammas.size()));
    suite.add("fan.facets", "facets of the perfect cone", "64 facets", s.facets.size() == 64, "64",
              std::to_string(s.facets.size()));
    std::set<std::size_t> sizes;
    for (const auto& f : s.facets) sizes.insert(f.incident.size());
    suite.add("fan.facet_size", "rays per facet", "9-dimensional faces", sizes == std::set<std::size_t>{9}, "9",
              sizes.size() == 1 ? std::to_string(*sizes.begin()) : "mixed");
    std::size_t basic = 0;
    for (RaySet c : s.fan.cones)
      if (is_basic(s.fan.cone(c), s.lattice_dim())) ++basic;
    suite.add("fan.basic_cones", "top cones basic in Sym2(Z^4)", "64 basic cones",
              s.fan.cones.size() == 64 && basic == 64, "64 of 64",
              std::to_string(basic) + " of " + std::to_string(s.fan.cones.size()));
  });

  // 5. Stabilizer.
  suite.guarded("stabilizer.order", "automorphism group of the D4 form", "order 1152", [&] {
    const StarFan& s = session.star();
    const Stabilizer& g = session.stabilizer();
    suite.add("stabilizer.order", "automorphism group of the D4 form", "order 1152", g.order() == 1152, "1152",
              std::to_string(g.order()));
    const std::set<RaySet> cones(s.fan.cones.begin(), s.fan.cones.end());
    std::size_t good = 0;
    for (const auto& a : g.elements) {
      std::set<RaySet> image;
      for (RaySet c : s.fan.cones) image.insert(a.map(c));
      if (image == cones && s.eta.eta.congruence(a.g) == s.eta.eta) ++good;
    }
    suite.add("stabilizer.permutes_cones", "every element fixes eta and permutes the 64 cones", "stabilizer of eta",
              good == g.order() && good > 0, std::to_string(g.order()), std::to_string(good));
  });

  // 6. Toric E^10.
  suite.guarded("toric.e10", "E^10 from the linear system", "E^10 = -1680", [&] {
    const IntersectionEngine& e = session.engine();
    const auto& sys = e.system();
    std::ostringstream diag;
    diag << sys.equations.rows.size() << " equations, " << sys.unknowns.size() << " unknowns, rank "
         << e.solution().rank() << ", " << e.solution().free_columns.size() << " free, "
         << (e.consistent() ? "consistent" : "inconsistent");
    const auto top = DivisorMonomial::e_times(e.fan().ray_count(), 10, RaySet());
    const auto col = sys.column_of(top);
    const bool determined = e.consistent() && col && e.solution().determined(*col);
    suite.add("toric.system", "linear system consistent with E^10 determined", "system of linear equations",
              determined, "consistent, E^10 determined", diag.str());
    const Rational v = e.top_self_intersection();
    suite.add("toric.e10", "E^10 from the linear system", "E^10 = -1680", v == Rational(-1680), "-1680", v.str());
  });

  // 7. Engine agreement.
  suite.guarded("engines.agreement", "recursive reduction equals the linear-system solution", "E^10 = -1680", [&] {
    const IntersectionEngine& e = session.engine();
    RecursiveEvaluator& rec = session.evaluator();
    std::size_t mismatches = 0;
    std::string first;
    for (const auto& m : e.system().unknowns) {
      if (rec.evaluate(m) != e.value(m)) {
        if (mismatches++ == 0) first = m.str();
      }
    }
    suite.add("engines.agreement", "recursive reduction equals the linear-system solution on every unknown",
              "E^10 = -1680", mismatches == 0, "0 mismatches of " + std::to_string(e.system().unknowns.size()),
              std::to_string(mismatches) + " mismatches" + (first.empty() ? "" : " (first " + first + ")"));

    std::size_t nonzero = 0;
    const auto& fan = e.fan();
    for (const auto& origin : e.system().origins) {
      Rational total;
      for (std::size_t r = 0; r < fan.ray_count(); ++r) {
        const Integer& c = e.relations()[origin.relation].coefficients[r];
        if (c == 0) continue;
        total += Rational(c) * rec.evaluate(origin.multiplier.times(r));
      }
      if (!total.is_zero()) ++nonzero;
    }
    suite.add("engines.relations", "every relation times multiplier evaluates to 0 recursively",
              "linear equivalences", nonzero == 0, "0 of " + std::to_string(e.system().origins.size()),
              std::to_string(nonzero));
  });

  // 8. Voronoi table.
  suite.guarded("voronoi.a_0_10", "E^10 on the moduli space", "E^10 = -1680/1152 = -35/24", [&] {
    const Rational e10 = session.engine().top_self_intersection();
    const auto order = session.stabilizer().order();
    const IgusaTable t = igusa_table(l_top(4).value, b);
    const VoronoiTable v = voronoi_table(t, e10, Integer(static_cast<unsigned long>(order)));
    suite.add("voronoi.a_0_10", "E^10 on the moduli space from computed E^10 and group order",
              "E^10 = -1680/1152 = -35/24", v.at(0, 10) == Rational(-35, 24), "-35/24", v.at(0, 10).str());
    bool pullback = true;
    for (unsigned k = 0; k <= 10; ++k) pullback &= v.at(k, 0) == t.a[k];
    suite.add("voronoi.pullback", "a_(k,0) = a_k for all k", "a_(k,0) = a_k", pullback, "equal", pullback ? "equal" : "differ");
    bool band = true;
    for (unsigned k = 0; k <= 10; ++k)
      for (unsigned l = 1; l <= 9 && k + l <= 10; ++l) band &= v.at(k, l).is_zero();
    suite.add("voronoi.zero_band", "a_(k,l) = 0 for 1 <= l <= 9", "a_(k,l) = 0", band, "all zero",
              band ? "all zero" : "nonzero entry");
  });

  // 9. Oracle suites.
  std::mt19937_64 rng(20061016);
  suite.guarded("oracle.facets", "facet enumeration vs subset brute force", "facet enumeration", [&] {
    unsigned compared = 0;
    unsigned failures = 0;
    std::uniform_int_distribution<int> dim_dist(2, 4);
    while (compared < options.oracle_cases) {
      const std::size_t n = static_cast<std::size_t>(dim_dist(rng));
      std::uniform_int_distribution<int> count_dist(static_cast<int>(n), 8);
      const auto count = static_cast<std::size_t>(count_dist(rng));
      std::vector<IntVector> gens;
      for (std::size_t i = 0; i < count; ++i) {
        IntVector v = random_vector(rng, n, -3, 3);
        Integer s = 0;
        for (const auto& x : v) s += x;
        if (s <= 0) continue;  // keeps the cone pointed
        gens.push_back(std::move(v));
      }
      if (gens.size() < n) continue;
      std::optional<Cone> cone;
      try {
        cone.emplace(gens);
      } catch (const std::invalid_argument&) {
        continue;  // duplicate ray
      }
      if (cone->dim() != n) continue;
      std::vector<std::vector<std::size_t>> got;
      for (const auto& f : enumerate_facets(*cone)) got.push_back(f.incident);
      if (got != oracle::facet_incidences(cone->generators())) ++failures;
      ++compared;
    }
    suite.add("oracle.facets", "facet enumeration vs subset brute force (dim <= 4, <= 8 rays)", "facet enumeration",
              failures == 0, "0 failures", std::to_string(failures) + " failures in " + std::to_string(compared));
  });

  suite.guarded("oracle.det", "Bareiss determinant vs cofactor expansion", "basicness", [&] {
    unsigned failures = 0;
    std::uniform_int_distribution<int> size_dist(1, 4);
    for (unsigned t = 0; t < options.oracle_cases; ++t) {
      const auto n = static_cast<std::size_t>(size_dist(rng));
      std::vector<IntVector> rows;
      for (std::size_t r = 0; r < n; ++r) rows.push_back(random_vector(rng, n, -5, 5));
      const IntMatrix m = IntMatrix::from_rows(rows);
      if (int_det(m) != oracle::cofactor_det(m)) ++failures;
    }
    suite.add("oracle.det", "Bareiss determinant vs cofactor expansion up to 4x4", "basicness", failures == 0,
              "0 failures", std::to_string(failures) + " failures");
  });

  suite.guarded("oracle.bernoulli", "Bernoulli numbers", "Bernoulli numbers", [&] {
    std::string problem;
    for (unsigned n = 1; n <= 20 && problem.empty(); ++n) {
      Rational s;
      for (unsigned k = 0; k <= n; ++k) s += Rational(binomial(n + 1, k)) * bernoulli(k);
      if (!s.is_zero()) problem = "recurrence fails at n = " + std::to_string(n);
      if (n >= 2 && bernoulli(n) != oracle::bernoulli_explicit(n)) problem = "explicit sum differs at n = " + std::to_string(n);
      if (n % 2 == 0 && bernoulli(n).den() != oracle::von_staudt_clausen_denominator(n))
        problem = "denominator of B_" + std::to_string(n) + " is not the von Staudt-Clausen product";
      if (n % 2 == 1 && n > 1 && !bernoulli(n).is_zero()) problem = "B_" + std::to_string(n) + " is not zero";
    }
    suite.add("oracle.bernoulli", "recurrence, explicit sum and von Staudt-Clausen denominators up to n = 20",
              "Bernoulli numbers", problem.empty(), "all hold", problem.empty() ? "all hold" : problem);
  });

  suite.guarded("oracle.toy_fans", "toy fan self-intersections by both engines", "linear-system method", [&] {
    std::ostringstream actual;
    bool ok = true;
    const std::pair<const char*, std::pair<SimplicialFan, long>> cases[] = {
        {"P2", {oracle::projective_plane_star(), 1}},
        {"blow-up", {oracle::blowup_star(), -1}},
    };
    for (const auto& [name, data] : cases) {
      const auto& [fan, expected] = data;
      IntersectionEngine engine(fan);
      RecursiveEvaluator rec(fan);
      const Rational lin = engine.top_self_intersection();
      const Rational r = rec.evaluate(DivisorMonomial::e_times(fan.ray_count(), 2, RaySet()));
      ok &= lin == Rational(expected) && r == Rational(expected);
      actual << name << ": " << lin << " / " << r << "; ";
    }
    suite.add("oracle.toy_fans", "E^2 on toy fans, linear system / recursive", "linear-system method", ok,
              "P2: 1 / 1; blow-up: -1 / -1; ", actual.str());
  });

  // 10. Determinism: an independent session reproduces the same documents.
  suite.guarded("determinism", "fresh session gives identical output", "reproducibility", [&] {
    Session fresh(session.star().basis);
    const std::string a = to_json(fan_report(session), true).dump() +
                          to_json(tables_report(session, "voronoi", {}), true).dump() +
                          to_json(intersection_report(session, "e10"), true).dump();
    const std::string c = to_json(fan_report(fresh), true).dump() +
                          to_json(tables_report(fresh, "voronoi", {}), true).dump() +
                          to_json(intersection_report(fresh, "e10"), true).dump();
    suite.add("determinism", "fresh session gives byte-identical reproducible JSON", "reproducibility", a == c,
              "identical", a == c ? "identical" : "differs");
  });

  return suite.take();
}

bool all_passed(const std::vector<CheckResult>& checks) {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

OutputDocument verification_document(const std::vector<CheckResult>& checks) {
  OutputDocument doc;
  doc.command = "verify";
  Json list = Json::array();
  std::size_t passed = 0;
  for (const auto& c : checks) {
    Json e = Json::object();
    e["id"] = c.id;
    e["status"] = c.pass ? "PASS" : "FAIL";
    e["description"] = c.description;
    e["reference"] = c.reference;
    e["expected"] = c.expected;
    e["actual"] = c.actual;
    list.push_back(std::move(e));
    passed += c.pass ? 1 : 0;
  }
  doc.data["checks"] = std::move(list);
  doc.data["passed"] = passed;
  doc.data["total"] = checks.size();
  doc.data["all_passed"] = all_passed(checks);
  return doc;
}

}  // namespace a4
