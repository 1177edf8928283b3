#include "a4/report.hpp"

#include "a4/error.hpp"
#include "a4/proportionality.hpp"
#include "a4/tables.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

namespace a4 {

const NamedValue* OutputDocument::find(const std::string& name) const {
  for (const auto& r : results)
    if (r.name == name) return &r;
  return nullptr;
}

Json rational_to_json(const Rational& r) {
  Json j = Json::object();
  j["numerator"] = r.num().get_str();
  j["denominator"] = r.den().get_str();
  return j;
}

Rational rational_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("numerator") || !j.contains("denominator") || !j["numerator"].is_string() ||
      !j["denominator"].is_string())
    throw std::invalid_argument("rational_from_json: expected {numerator, denominator} strings");
  const Rational r(Integer(j["numerator"].get<std::string>(), 10), Integer(j["denominator"].get<std::string>(), 10));
  if (r.den() != Integer(j["denominator"].get<std::string>(), 10))
    throw std::invalid_argument("rational_from_json: fraction not in lowest terms");
  return r;
}

namespace {

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json ints(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p()) {
      a.push_back(x.get_si());
    } else {
      a.push_back(x.get_str());
    }
  }
  return a;
}

std::string ray_label(std::size_t fan_ray) { return fan_ray == 0 ? "E" : "D" + std::to_string(fan_ray); }

Json ray_labels(RaySet s) {
  Json a = Json::array();
  for (auto i : s.indices()) a.push_back(ray_label(i));
  return a;
}

}  // namespace

Json to_json(const OutputDocument& doc, bool reproducible) {
  Json j = Json::object();
  j["command"] = doc.command;
  Json inputs = Json::object();
  for (const auto& [k, v] : doc.inputs) inputs[k] = v;
  j["inputs"] = inputs;
  Json results = Json::array();
  for (const auto& r : doc.results) {
    Json e = Json::object();
    e["name"] = r.name;
    e["value"] = rational_to_json(r.value);
    if (!r.note.empty()) e["note"] = r.note;
    results.push_back(std::move(e));
  }
  j["results"] = std::move(results);
  j["data"] = doc.data;
  j["notes"] = doc.notes;
  if (!reproducible) j["generated_at"] = utc_now();
  return j;
}

std::string to_text(const OutputDocument& doc) {
  std::ostringstream os;
  os << doc.command << '\n';
  for (const auto& [k, v] : doc.inputs) os << "  " << k << " = " << v << '\n';
  for (const auto& r : doc.results) {
    os << r.name << " = " << r.value;
    if (!r.note.empty()) os << "    (" << r.note << ')';
    os << '\n';
  }
  for (const auto& [key, value] : doc.data.items()) {
    if (value.is_array()) {
      os << key << ": " << value.size() << " entries\n";
      for (const auto& e : value) os << "  " << e.dump() << '\n';
    } else if (value.is_object()) {
      os << key << ":\n";
      for (const auto& [k, v] : value.items()) os << "  " << k << ": " << v.dump() << '\n';
    } else {
      os << key << ": " << value.dump() << '\n';
    }
  }
  for (const auto& n : doc.notes) os << "note: " << n << '\n';
  return os.str();
}

// --------------------------------------------------------------- Session

const StarFan& Session::star() {
  if (!star_) star_ = build_star_fan(basis_);
  return *star_;
}

const Stabilizer& Session::stabilizer() {
  if (!stabilizer_) stabilizer_ = compute_stabilizer(star());
  return *stabilizer_;
}

const IntersectionEngine& Session::engine() {
  if (!engine_) engine_.emplace(star().fan);
  return *engine_;
}

RecursiveEvaluator& Session::evaluator() {
  if (!evaluator_) evaluator_.emplace(star().fan);
  return *evaluator_;
}

// ------------------------------------------------------------ fan report

OutputDocument fan_report(Session& session) {
  const StarFan& s = session.star();
  const Stabilizer& stab = session.stabilizer();
  OutputDocument doc;
  doc.command = "fan report";

  Json& d = doc.data;
  d["lattice"] = "Sym2(Z^4), coordinates (S11,S22,S33,S44,S12,S13,S14,S23,S24,S34)";
  Json form = Json::array();
  for (std::size_t r = 0; r < s.form.rows(); ++r) form.push_back(ints(s.form.row(r)));
  d["form"] = form;
  d["form_determinant"] = int_det(s.form).get_si();
  d["minimal_vector_count"] = s.minimal.size();
  d["ray_count"] = s.gammas.size();
  Json rays = Json::array();
  for (std::size_t i = 0; i < s.gammas.size(); ++i) {
    Json r = Json::object();
    r["label"] = ray_label(i + 1);
    r["root"] = ints(s.ray_roots[i]);
    r["coords"] = ints(s.gammas[i].coords());
    rays.push_back(std::move(r));
  }
  d["rays"] = rays;
  Json eta = Json::object();
  eta["ray_sum"] = ints(s.eta.sum.coords());
  eta["content"] = s.eta.content.get_si();
  eta["coords"] = ints(s.eta.eta.coords());
  d["eta"] = eta;
  d["facet_count"] = s.facets.size();
  Json facets = Json::array();
  for (const auto& f : s.facets) {
    Json e = Json::object();
    RaySet inc;
    for (auto i : f.incident) inc = inc.with(i + 1);
    e["rays"] = ray_labels(inc);
    e["functional"] = ints(f.functional);
    facets.push_back(std::move(e));
  }
  d["facets"] = facets;
  d["cone_count"] = s.fan.cones.size();
  bool all_basic = true;
  Json cones = Json::array();
  for (std::size_t c = 0; c < s.fan.cones.size(); ++c) {
    Json e = Json::object();
    e["rays"] = ray_labels(s.fan.cones[c]);
    e["determinant"] = s.cone_determinants[c].get_si();
    all_basic &= abs(s.cone_determinants[c]) == 1;
    cones.push_back(std::move(e));
  }
  d["cones"] = cones;
  d["all_cones_basic"] = all_basic;
  d["stabilizer_order"] = stab.order();

  doc.results.push_back({"eta_content", Rational(s.eta.content), "gcd of the coordinates of the ray sum"});
  doc.results.push_back({"stabilizer_order", Rational(static_cast<long>(stab.order())), ""});
  doc.notes.push_back("basicness checked in Sym2(Z^4) itself; the dual lattice was not needed");
  return doc;
}

// --------------------------------------------------- intersection report

OutputDocument intersection_report(Session& session, const std::string& expr) {
  const StarFan& s = session.star();
  const std::size_t rays = s.fan.ray_count();
  const unsigned degree = static_cast<unsigned>(s.fan.dim);
  const bool is_e10 = expr == "e10";
  const DivisorMonomial m = is_e10 ? DivisorMonomial::e_times(rays, degree, RaySet()) : parse_monomial(expr, rays, degree);
  if (m.e_exponent() == 0)
    throw UsageError("monomial " + m.str() + " does not contain E; only monomials localized at E are supported");

  const IntersectionEngine& engine = session.engine();
  OutputDocument doc;
  doc.command = "intersection";
  doc.inputs.emplace_back("expression", expr);
  doc.inputs.emplace_back("monomial", m.str());

  const Rational recursive = session.evaluator().evaluate(m);
  std::optional<Rational> linear;
  if (!spans_cone(s.fan, m.support()) || m.is_squarefree() || engine.system().column_of(m)) linear = engine.value(m);

  if (linear) {
    doc.results.push_back({"toric", *linear, "linear system"});
  } else {
    doc.notes.push_back("monomial is not an unknown of the linear system; only the recursive value is available");
  }
  doc.results.push_back({"toric_recursive", recursive, "recursive reduction"});
  if (linear) {
    doc.data["engines_agree"] = *linear == recursive;
  } else {
    doc.data["engines_agree"] = nullptr;
  }

  if (m == DivisorMonomial::e_times(rays, degree, RaySet())) {
    const auto order = session.stabilizer().order();
    doc.results.push_back({"moduli", (linear ? *linear : recursive) / Rational(static_cast<long>(order)),
                           "toric value divided by the stabilizer order " + std::to_string(order)});
    doc.data["stabilizer_order"] = order;
  }

  Json sys = Json::object();
  sys["equations"] = engine.system().equations.rows.size();
  sys["multipliers"] = engine.system().multiplier_count;
  sys["unknowns"] = engine.system().unknowns.size();
  sys["rank"] = engine.solution().rank();
  sys["free_unknowns"] = engine.solution().free_columns.size();
  sys["consistent"] = engine.consistent();
  doc.data["system"] = sys;
  return doc;
}

// --------------------------------------------------------- tables report

namespace {

std::string index_name(const char* prefix, unsigned k) { return std::string(prefix) + std::to_string(k); }

}  // namespace

OutputDocument tables_report(Session& session, const std::string& which, const TablesOptions& options) {
  OutputDocument doc;
  doc.command = "tables " + which;
  const Rational scale = options.stack ? Rational(1, 2) : Rational(1);
  if (options.stack) {
    doc.inputs.emplace_back("stack", "true");
    doc.notes.push_back("stack normalization: every value is halved (-1 acts trivially on the coarse space)");
  }

  if (which == "ltop") {
    doc.inputs.emplace_back("genus", std::to_string(options.genus));
    if (options.genus == 0) throw UsageError("--genus must be positive");
    const auto r = l_top(options.genus, options.signed_bernoulli ? BernoulliSign::Signed : BernoulliSign::Absolute);
    if (options.signed_bernoulli) doc.inputs.emplace_back("bernoulli_sign", "signed");
    const std::string name = "L^" + std::to_string(r.top_power);
    doc.results.push_back({name, options.stack ? r.stack_value : r.value,
                           options.stack ? "stack intersection number" : "proportionality"});
    return doc;
  }

  const FaberData b = faber_data();
  const IgusaTable igusa = igusa_table(l_top(4).value, b);

  if (which == "igusa") {
    for (unsigned k = 11; k-- > 0;) doc.results.push_back({index_name("a_", k), igusa.a[k] * scale, ""});
    const auto check = verify_recurrence(igusa, b);
    doc.data["recurrence_holds"] = check.ok;
    doc.notes.push_back("a_k = <L^k D^(10-k)>; a_(k-1) = 8 a_k - b_(k-1) with b_k = <lambda^k delta_0^(9-k)>");
    doc.notes.push_back("input table header is misprinted (b_g, duplicated b_1); values read as b_9 ... b_0");
    return doc;
  }

  if (which == "voronoi") {
    const Rational e10 = session.engine().top_self_intersection();
    const auto order = session.stabilizer().order();
    const VoronoiTable v = voronoi_table(igusa, e10, Integer(static_cast<unsigned long>(order)));
    doc.data["e10_toric"] = rational_to_json(e10);
    doc.data["stabilizer_order"] = order;
    if (options.basis == Basis::LFE) {
      doc.inputs.emplace_back("basis", "lfe");
      for (unsigned k = 11; k-- > 0;)
        for (unsigned l = 0; k + l <= kTopDegree; ++l)
          doc.results.push_back({"a_" + std::to_string(k) + "," + std::to_string(l), v.at(k, l) * scale, ""});
      doc.notes.push_back("a_(k,l) = <L^k E^l F^(10-k-l)>, F = pi^* D^Igu");
    } else {
      doc.inputs.emplace_back("basis", "geometric");
      for (unsigned k = 11; k-- > 0;)
        for (unsigned l = 0; k + l <= kTopDegree; ++l) {
          const unsigned m = kTopDegree - k - l;
          doc.results.push_back({"L^" + std::to_string(k) + " D^" + std::to_string(m) + " E^" + std::to_string(l),
                                 geometric_basis(v, k, m, l) * scale, ""});
        }
      doc.notes.push_back("geometric basis: D^Vor = F - 4E");
    }
    return doc;
  }

  throw UsageError("unknown table '" + which + "' (expected igusa, voronoi or ltop)");
}

}  // namespace a4
