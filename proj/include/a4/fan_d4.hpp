// The second perfect cone in genus 4 realized as the domain of the D4
// perfect form, the ray eta through its barycenter, the star of eta (64
// basic cones) and the automorphism group of the form.
//
// Symmetric n x n integer matrices are identified with Z^{n(n+1)/2} through
// the coordinates (S11, ..., Snn, S12, S13, ..., S1n, S23, ..., S(n-1)n).
#pragma once

#include "a4/cones.hpp"
#include "a4/exact.hpp"

#include <span>
#include <vector>

namespace a4 {

class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  /// Throws std::invalid_argument if `m` is not square and symmetric.
  explicit SymMatrix(const IntMatrix& m);
  static SymMatrix outer(std::span<const Integer> c);
  /// Inverse of coords(). Throws if the length is not triangular.
  static SymMatrix from_coords(std::span<const Integer> coords);

  std::size_t n() const { return n_; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, const Integer& v);
  IntVector coords() const;
  IntMatrix matrix() const;
  /// g S g^T.
  SymMatrix congruence(const IntMatrix& g) const;

  friend SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);
  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Integer> entries_;
};

/// Columns e1-e2, e2-e3, e3-e4, e3+e4: a basis of the D4 root lattice in
/// standard coordinates.
IntMatrix default_root_basis();

/// Gram matrix B^T B of the root basis. Positive definite with det 4.
IntMatrix build_d4_form(const IntMatrix& basis = default_root_basis());

/// All c in Z^n with c^T Q c == norm, ascending lexicographic order. The
/// search box comes from c_i^2 <= norm * (Q^-1)_ii. Throws
/// std::invalid_argument if Q is not positive definite.
std::vector<IntVector> vectors_of_norm(const IntMatrix& q, const Integer& norm);

/// Minimal vectors of the D4 form (norm 2). Throws ConstructionError if the
/// form represents 1 or has other than 24 vectors of norm 2.
std::vector<IntVector> minimal_vectors(const IntMatrix& q);

/// One representative per antipodal pair, first nonzero coordinate
/// positive, ordered lexicographically descending.
std::vector<IntVector> antipodal_representatives(std::span<const IntVector> vectors);

/// Rank-one forms c c^T, one per antipodal pair of the given minimal
/// vectors, in the order of antipodal_representatives(). Throws
/// ConstructionError unless there are 12 primitive rays spanning a
/// 10-dimensional cone.
std::vector<SymMatrix> build_rays(std::span<const IntVector> minimal);

struct EtaData {
  SymMatrix sum;
  Integer content;
  SymMatrix eta;  // sum / content
};

EtaData build_eta(std::span<const SymMatrix> rays);

/// Everything the toric computation needs. Ray 0 of `fan` is eta, ray i
/// (1 <= i <= 12) is gamma_i = gammas[i - 1].
struct StarFan {
  IntMatrix basis;
  IntMatrix form;
  std::vector<IntVector> minimal;      // all 24
  std::vector<IntVector> ray_roots;    // the 12 representatives c with gamma = c c^T
  std::vector<SymMatrix> gammas;
  EtaData eta;
  std::vector<Facet> facets;           // of the cone spanned by the gammas; incident indices into gammas
  SimplicialFan fan;
  std::vector<Integer> cone_determinants;  // per top cone, same order as fan.cones

  static constexpr std::size_t kEta = 0;
  std::size_t lattice_dim() const { return fan.dim; }
};

/// Builds the star of eta: one top cone span(eta, facet rays) per facet of
/// the perfect cone. Throws ConstructionError naming the facet if a cone is
/// not simplicial or not basic, or if eta is not interior.
StarFan build_star_fan(const IntMatrix& basis = default_root_basis());

struct LatticeAutomorphism {
  IntMatrix g;  // g^T Q g == Q
  /// gamma_i -> gamma_{ray_permutation[i]}, 0-based over the 12 gammas.
  std::vector<std::size_t> ray_permutation;

  /// The induced permutation of the fan's ray indices (eta fixed).
  std::size_t map_fan_ray(std::size_t fan_ray) const;
  RaySet map(RaySet fan_rays) const;
};

struct Stabilizer {
  std::vector<LatticeAutomorphism> elements;
  std::size_t order() const { return elements.size(); }
};

/// All g in GL(n, Z) with g^T Q g = Q, found by sending a frame of minimal
/// vectors to minimal vectors with matching Gram matrix. Each element is
/// checked to fix eta and to permute the gammas and the top cones; a
/// violation throws ComputationError.
Stabilizer compute_stabilizer(const StarFan& star);

}  // namespace a4
