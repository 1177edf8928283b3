// Top intersection numbers of torus-invariant divisors on the smooth toric
// variety of a star fan. Ray 0 of the fan is the distinguished ray whose
// divisor E is compact; every monomial handled here contains E, so all
// numbers localize to the star.
//
// Two independent routes are provided:
//  * the linear-system route: multiply the principal-divisor relations by
//    E^{n-1-k} D_S for every face S, move transversal (square-free) products
//    to the right-hand side and solve for the remaining monomials;
//  * RecursiveEvaluator: rewrite a repeated factor through a relation that
//    vanishes on the rest of the support until the monomial is square-free.
#pragma once

#include "a4/cones.hpp"
#include "a4/exact.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace a4 {

/// Product of divisors D_0^{e_0} ... D_{r-1}^{e_{r-1}} over the rays of a
/// fan; D_0 is written E.
class DivisorMonomial {
 public:
  DivisorMonomial() = default;
  explicit DivisorMonomial(std::size_t ray_count) : exps_(ray_count, 0) {}
  static DivisorMonomial from_exponents(const std::vector<unsigned>& exps);
  /// E^e_power * prod_{i in s} D_i.
  static DivisorMonomial e_times(std::size_t ray_count, unsigned e_power, RaySet s);

  std::size_t ray_count() const { return exps_.size(); }
  unsigned exponent(std::size_t ray) const { return exps_.at(ray); }
  unsigned e_exponent() const { return exps_.empty() ? 0 : exps_[0]; }
  unsigned degree() const;
  RaySet support() const;
  bool is_squarefree() const;
  unsigned max_exponent() const;

  DivisorMonomial times(std::size_t ray) const;
  /// Throws std::logic_error if the exponent of `ray` is zero.
  DivisorMonomial over(std::size_t ray) const;
  /// Relabels rays: exponent of ray i moves to perm(i).
  template <class Perm>
  DivisorMonomial permuted(Perm&& perm) const {
    DivisorMonomial out(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[perm(i)] = exps_[i];
    return out;
  }

  /// "E^2*D3*D5", rays 1.. printed as D1...; "1" for the empty product.
  std::string str() const;

  const std::vector<std::uint8_t>& exponents() const { return exps_; }
  friend auto operator<=>(const DivisorMonomial&, const DivisorMonomial&) = default;

 private:
  std::vector<std::uint8_t> exps_;
};

struct DivisorMonomialHash {
  std::size_t operator()(const DivisorMonomial& m) const;
};

/// sum_rho <m_j, v_rho> D_rho ~ 0 for the j-th coordinate functional m_j.
struct LinearRelation {
  std::size_t index = 0;
  std::vector<Integer> coefficients;  // one per fan ray
};

std::vector<LinearRelation> build_relations(const SimplicialFan& fan);

/// 1 if the support of a square-free top-degree monomial is exactly a
/// maximal (basic) cone, otherwise 0. Throws std::invalid_argument for a
/// monomial that is not square-free or not of top degree.
Rational squarefree_value(const DivisorMonomial& m, const SimplicialFan& fan);

struct RowOrigin {
  std::size_t relation = 0;
  DivisorMonomial multiplier;
};

struct LinearSystem {
  std::size_t top_degree = 0;
  std::vector<DivisorMonomial> unknowns;
  std::unordered_map<DivisorMonomial, std::size_t, DivisorMonomialHash> column;
  SparseSystem equations;
  std::vector<RowOrigin> origins;  // one per equation row
  std::size_t multiplier_count = 0;

  std::optional<std::size_t> column_of(const DivisorMonomial& m) const;
};

/// Rows for every multiplier E^{n-1-k} D_S (S a k-subset of non-E rays with
/// S + E in a cone, 0 <= k <= n-2) times every relation, emitted with k
/// descending. Monomials whose support spans no cone are dropped;
/// square-free ones go to the right-hand side.
LinearSystem assemble_system(const SimplicialFan& fan, const std::vector<LinearRelation>& relations);

/// Solves the system and returns E^n. Throws ComputationError if the system
/// is inconsistent (naming the row) or if E^n is not uniquely determined
/// (listing the free unknowns).
Rational solve_e10(const LinearSystem& system);

/// Checks that every maximal cone contains ray 0, has dim rays and is
/// basic. Throws ConstructionError otherwise.
void validate_star_fan(const SimplicialFan& fan);

/// The assembled and solved linear system for one fan. Immutable after
/// construction.
class IntersectionEngine {
 public:
  explicit IntersectionEngine(SimplicialFan fan);

  const SimplicialFan& fan() const { return fan_; }
  const std::vector<LinearRelation>& relations() const { return relations_; }
  const LinearSystem& system() const { return system_; }
  const SolveResult& solution() const { return solution_; }
  bool consistent() const { return solution_.consistent; }
  std::vector<DivisorMonomial> free_unknowns() const;

  /// E^n. Throws ComputationError when inconsistent or underdetermined.
  Rational top_self_intersection() const;

  /// Any E-positive top-degree monomial: 0 off the fan, 0/1 if square-free,
  /// else the solved value. Throws ComputationError if the monomial is not
  /// an unknown of the system or is undetermined.
  Rational value(const DivisorMonomial& m) const;

 private:
  SimplicialFan fan_;
  std::vector<LinearRelation> relations_;
  LinearSystem system_;
  SolveResult solution_;
};

/// Recursive reduction of repeated factors. Memoizes results; an instance
/// is not safe for concurrent use.
class RecursiveEvaluator {
 public:
  /// Validates the fan with validate_star_fan().
  explicit RecursiveEvaluator(SimplicialFan fan);

  /// Throws std::invalid_argument for a monomial without E or of the wrong
  /// degree.
  Rational evaluate(const DivisorMonomial& m);

  std::size_t cache_size() const { return cache_.size(); }
  const SimplicialFan& fan() const { return fan_; }

 private:
  const RatVector& dual_vector(std::size_t ray, RaySet support);

  SimplicialFan fan_;
  std::unordered_map<DivisorMonomial, Rational, DivisorMonomialHash> cache_;
  std::map<std::pair<std::size_t, RaySet>, RatVector> mu_cache_;
};

}  // namespace a4
