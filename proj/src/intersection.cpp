#include "a4/intersection.hpp"

#include "a4/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace a4 {

// -------------------------------------------------------- DivisorMonomial

DivisorMonomial DivisorMonomial::from_exponents(const std::vector<unsigned>& exps) {
  DivisorMonomial m(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > 255) throw std::invalid_argument("DivisorMonomial: exponent too large");
    m.exps_[i] = static_cast<std::uint8_t>(exps[i]);
  }
  return m;
}

DivisorMonomial DivisorMonomial::e_times(std::size_t ray_count, unsigned e_power, RaySet s) {
  DivisorMonomial m(ray_count);
  m.exps_.at(0) = static_cast<std::uint8_t>(e_power);
  for (auto i : s.indices()) ++m.exps_.at(i);
  return m;
}

unsigned DivisorMonomial::degree() const {
  unsigned d = 0;
  for (auto e : exps_) d += e;
  return d;
}

RaySet DivisorMonomial::support() const {
  RaySet s;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0) s = s.with(i);
  return s;
}

bool DivisorMonomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e <= 1; });
}

unsigned DivisorMonomial::max_exponent() const {
  return exps_.empty() ? 0 : *std::max_element(exps_.begin(), exps_.end());
}

DivisorMonomial DivisorMonomial::times(std::size_t ray) const {
  DivisorMonomial m = *this;
  ++m.exps_.at(ray);
  return m;
}

DivisorMonomial DivisorMonomial::over(std::size_t ray) const {
  if (exps_.at(ray) == 0) throw std::logic_error("DivisorMonomial: factor not present");
  DivisorMonomial m = *this;
  --m.exps_[ray];
  return m;
}

std::string DivisorMonomial::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    if (i == 0) {
      os << 'E';
    } else {
      os << 'D' << i;
    }
    if (exps_[i] > 1) os << '^' << static_cast<unsigned>(exps_[i]);
  }
  return first ? "1" : os.str();
}

std::size_t DivisorMonomialHash::operator()(const DivisorMonomial& m) const {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : m.exponents()) h = (h ^ e) * 1099511628211ULL;
  return h;
}

// ------------------------------------------------------------- relations

std::vector<LinearRelation> build_relations(const SimplicialFan& fan) {
  std::vector<LinearRelation> rel;
  for (std::size_t j = 0; j < fan.dim; ++j) {
    LinearRelation r;
    r.index = j;
    for (const auto& v : fan.rays) r.coefficients.push_back(v.at(j));
    rel.push_back(std::move(r));
  }
  return rel;
}

Rational squarefree_value(const DivisorMonomial& m, const SimplicialFan& fan) {
  if (!m.is_squarefree()) throw std::invalid_argument("squarefree_value: monomial " + m.str() + " has a repeated factor");
  if (m.degree() != fan.dim) throw std::invalid_argument("squarefree_value: monomial is not of top degree");
  const RaySet s = m.support();
  return std::find(fan.cones.begin(), fan.cones.end(), s) != fan.cones.end() ? Rational(1) : Rational(0);
}

void validate_star_fan(const SimplicialFan& fan) {
  if (fan.ray_count() > RaySet::kMaxRays) throw ConstructionError("star fan: too many rays");
  for (const auto& v : fan.rays)
    if (v.size() != fan.dim) throw ConstructionError("star fan: ray of wrong dimension");
  for (RaySet c : fan.cones) {
    if (!c.contains(0)) throw ConstructionError("star fan: a maximal cone does not contain ray 0");
    if (c.size() != fan.dim) throw ConstructionError("star fan: a maximal cone is not simplicial of full dimension");
    if (!is_basic(fan.cone(c), fan.dim)) throw ConstructionError("star fan: a maximal cone is not basic");
  }
}

// ---------------------------------------------------------- linear system

std::optional<std::size_t> LinearSystem::column_of(const DivisorMonomial& m) const {
  auto it = column.find(m);
  if (it == column.end()) return std::nullopt;
  return it->second;
}

LinearSystem assemble_system(const SimplicialFan& fan, const std::vector<LinearRelation>& relations) {
  const std::size_t n = fan.dim;
  const std::size_t rays = fan.ray_count();
  if (n < 1) throw std::invalid_argument("assemble_system: zero-dimensional fan");

  // Faces of the link of ray 0 with at most n-2 rays.
  std::set<RaySet> faces;
  for (RaySet c : fan.cones) {
    const auto others = c.without(0).indices();
    const std::size_t count = others.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << count); ++mask) {
      RaySet s;
      for (std::size_t b = 0; b < count; ++b)
        if ((mask >> b) & 1U) s = s.with(others[b]);
      if (s.size() + 2 <= n) faces.insert(s);
    }
  }
  std::vector<RaySet> ordered(faces.begin(), faces.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](RaySet a, RaySet b) { return a.size() > b.size(); });

  LinearSystem sys;
  sys.top_degree = static_cast<std::size_t>(n);
  sys.multiplier_count = ordered.size();
  for (RaySet s : ordered) {
    const auto multiplier = DivisorMonomial::e_times(rays, static_cast<unsigned>(n - 1 - s.size()), s);
    for (const auto& rel : relations) {
      SparseRow row;
      Rational rhs;
      for (std::size_t r = 0; r < rays; ++r) {
        const Integer& c = rel.coefficients.at(r);
        if (c == 0) continue;
        const DivisorMonomial m = multiplier.times(r);
        if (!spans_cone(fan, m.support())) continue;
        if (m.is_squarefree()) {
          rhs -= Rational(c) * squarefree_value(m, fan);
          continue;
        }
        if (m.e_exponent() == 0) throw ComputationError("assemble_system: unknown " + m.str() + " without E");
        auto [it, inserted] = sys.column.try_emplace(m, sys.unknowns.size());
        if (inserted) sys.unknowns.push_back(m);
        row.add(it->second, Rational(c));
      }
      sys.equations.rows.push_back(std::move(row));
      sys.equations.rhs.push_back(std::move(rhs));
      sys.origins.push_back({rel.index, multiplier});
    }
  }
  sys.equations.cols = sys.unknowns.size();
  return sys;
}

namespace {

std::string list_monomials(const std::vector<DivisorMonomial>& ms, std::size_t limit = 8) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ms.size() && i < limit; ++i) os << (i ? ", " : "") << ms[i].str();
  if (ms.size() > limit) os << ", ... (" << ms.size() << " total)";
  return os.str();
}

Rational read_top(const LinearSystem& system, const SolveResult& sol) {
  if (!sol.consistent) {
    const auto& o = system.origins.at(*sol.inconsistent_row);
    throw ComputationError("linear system is inconsistent at row " + std::to_string(*sol.inconsistent_row) +
                           " (relation " + std::to_string(o.relation + 1) + " times " + o.multiplier.str() + ")");
  }
  const std::size_t rays = system.unknowns.empty() ? 0 : system.unknowns.front().ray_count();
  const auto top = DivisorMonomial::e_times(rays, static_cast<unsigned>(system.top_degree), RaySet());
  const auto col = system.column_of(top);
  if (!col) throw ComputationError("linear system does not contain " + top.str());
  if (!sol.determined(*col)) {
    std::vector<DivisorMonomial> free;
    for (auto c : sol.free_columns) free.push_back(system.unknowns[c]);
    throw ComputationError(top.str() + " is not determined; free unknowns: " + list_monomials(free));
  }
  return sol.solution[*col];
}

}  // namespace

Rational solve_e10(const LinearSystem& system) { return read_top(system, solve_exact(system.equations)); }

// ----------------------------------------------------- IntersectionEngine

IntersectionEngine::IntersectionEngine(SimplicialFan fan) : fan_(std::move(fan)) {
  validate_star_fan(fan_);
  relations_ = build_relations(fan_);
  system_ = assemble_system(fan_, relations_);
  solution_ = solve_exact(system_.equations);
}

std::vector<DivisorMonomial> IntersectionEngine::free_unknowns() const {
  std::vector<DivisorMonomial> out;
  for (auto c : solution_.free_columns) out.push_back(system_.unknowns[c]);
  return out;
}

Rational IntersectionEngine::top_self_intersection() const { return read_top(system_, solution_); }

Rational IntersectionEngine::value(const DivisorMonomial& m) const {
  if (m.ray_count() != fan_.ray_count()) throw std::invalid_argument("value: monomial over a different ray set");
  if (m.degree() != fan_.dim) throw std::invalid_argument("value: monomial is not of top degree");
  if (m.e_exponent() == 0) throw std::invalid_argument("value: monomial " + m.str() + " does not contain E");
  if (!spans_cone(fan_, m.support())) return 0;
  if (m.is_squarefree()) return squarefree_value(m, fan_);
  if (!solution_.consistent) throw ComputationError("value: linear system is inconsistent");
  const auto col = system_.column_of(m);
  if (!col) throw ComputationError("value: " + m.str() + " is not an unknown of the linear system");
  if (!solution_.determined(*col)) throw ComputationError("value: " + m.str() + " is not determined");
  return solution_.solution[*col];
}

// ----------------------------------------------------- RecursiveEvaluator

RecursiveEvaluator::RecursiveEvaluator(SimplicialFan fan) : fan_(std::move(fan)) { validate_star_fan(fan_); }

const RatVector& RecursiveEvaluator::dual_vector(std::size_t ray, RaySet support) {
  const auto key = std::make_pair(ray, support);
  if (auto it = mu_cache_.find(key); it != mu_cache_.end()) return it->second;

  // <mu, v_ray> = 1 and <mu, v_tau> = 0 for the other rays of the support.
  std::vector<RatVector> rows;
  RatVector rhs;
  auto push = [&](std::size_t r, long value) {
    RatVector row;
    for (const auto& x : fan_.rays[r]) row.emplace_back(x);
    rows.push_back(std::move(row));
    rhs.emplace_back(value);
  };
  push(ray, 1);
  for (auto t : support.without(ray).indices()) push(t, 0);
  const SolveResult sol = solve_exact(RatMatrix::from_rows(rows), rhs);
  if (!sol.consistent) throw ComputationError("evaluate_recursive: no dual vector for ray " + std::to_string(ray));
  return mu_cache_.emplace(key, sol.solution).first->second;
}

Rational RecursiveEvaluator::evaluate(const DivisorMonomial& m) {
  if (m.ray_count() != fan_.ray_count()) throw std::invalid_argument("evaluate_recursive: monomial over a different ray set");
  if (m.degree() != fan_.dim) throw std::invalid_argument("evaluate_recursive: monomial is not of top degree");
  if (m.e_exponent() == 0) throw std::invalid_argument("evaluate_recursive: monomial " + m.str() + " does not contain E");

  const RaySet support = m.support();
  if (!spans_cone(fan_, support)) return 0;
  if (m.is_squarefree()) return squarefree_value(m, fan_);
  if (auto it = cache_.find(m); it != cache_.end()) return it->second;

  // Repeated factor with the largest exponent, lowest index on ties.
  std::size_t rho = 0;
  for (std::size_t r = 1; r < m.ray_count(); ++r)
    if (m.exponent(r) > m.exponent(rho)) rho = r;

  const RatVector& mu = dual_vector(rho, support);
  const DivisorMonomial rest = m.over(rho);
  Rational total;
  for (std::size_t r = 0; r < fan_.ray_count(); ++r) {
    if (support.contains(r)) continue;
    if (!spans_cone(fan_, support.with(r))) continue;
    const Rational c = dot(mu, fan_.rays[r]);
    if (c.is_zero()) continue;
    total -= c * evaluate(rest.times(r));
  }
  cache_.emplace(m, total);
  return total;
}

}  // namespace a4
