// Rational polyhedral cones in a lattice Z^n and simplicial fans given by
// their maximal cones.
#pragma once

#include "a4/exact.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace a4 {

/// Set of ray indices, at most 64 rays.
class RaySet {
 public:
  static constexpr std::size_t kMaxRays = 64;

  constexpr RaySet() = default;
  constexpr explicit RaySet(std::uint64_t bits) : bits_(bits) {}
  static RaySet of(std::initializer_list<std::size_t> idx);
  static RaySet of(const std::vector<std::size_t>& idx);

  constexpr bool contains(std::size_t i) const { return i < kMaxRays && ((bits_ >> i) & 1U); }
  constexpr RaySet with(std::size_t i) const { return RaySet(bits_ | (std::uint64_t{1} << i)); }
  constexpr RaySet without(std::size_t i) const { return RaySet(bits_ & ~(std::uint64_t{1} << i)); }
  constexpr bool subset_of(RaySet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }
  std::vector<std::size_t> indices() const;

  friend constexpr RaySet operator|(RaySet a, RaySet b) { return RaySet(a.bits_ | b.bits_); }
  friend constexpr RaySet operator&(RaySet a, RaySet b) { return RaySet(a.bits_ & b.bits_); }
  friend constexpr auto operator<=>(RaySet, RaySet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// A cone given by primitive, pairwise non-proportional integer generators.
class Cone {
 public:
  /// Generators are normalized to their primitive parts. Throws
  /// std::invalid_argument on a zero generator, a duplicate ray, or
  /// mismatched lengths.
  explicit Cone(std::vector<IntVector> generators);

  std::size_t ambient_dim() const { return ambient_; }
  const std::vector<IntVector>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  /// Dimension of the linear span.
  std::size_t dim() const { return dim_; }
  IntMatrix generator_matrix() const { return IntMatrix::from_rows(gens_); }

 private:
  std::size_t ambient_ = 0;
  std::vector<IntVector> gens_;
  std::size_t dim_ = 0;
};

/// A codimension-one face: a primitive functional, zero on `incident` and
/// positive on every other generator of the parent cone.
struct Facet {
  IntVector functional;
  std::vector<std::size_t> incident;  // ascending generator indices
};

std::size_t cone_dim(const Cone& c);

/// All facets, sorted by incident index set. The functional lives in the
/// ambient lattice; for a cone that is not full-dimensional it vanishes on a
/// complement of the span's coordinate projection. Throws
/// std::invalid_argument for a cone that is not pointed.
std::vector<Facet> enumerate_facets(const Cone& c);

/// True iff `c` is simplicial and its generators extend to a basis of
/// Z^lattice_dim. Throws std::invalid_argument for a non-simplicial cone or
/// a dimension mismatch.
bool is_basic(const Cone& c, std::size_t lattice_dim);

/// A fan described by its rays and maximal cones (as ray index sets).
struct SimplicialFan {
  std::size_t dim = 0;
  std::vector<IntVector> rays;
  std::vector<RaySet> cones;

  std::size_t ray_count() const { return rays.size(); }
  Cone cone(RaySet s) const;
};

/// True iff some maximal cone contains every ray in `rays`. Throws
/// std::out_of_range for an index past the fan's rays.
bool spans_cone(const SimplicialFan& fan, RaySet rays);

}  // namespace a4
