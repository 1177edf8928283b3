// Intersection tables of the Igusa and second Voronoi compactifications of
// A_4.
//
// Notation: a_k = <L^k D^{10-k}> on the Igusa side, and on the Voronoi side
// a_{k,l} = <L^k E^l F^{10-k-l}> with F = pi^* D^Igu = D^Vor + 4E.
#pragma once

#include "a4/exact.hpp"

#include <array>
#include <optional>

namespace a4 {

inline constexpr unsigned kTopDegree = 10;

/// <lambda^k delta_0^{9-k}> on the moduli space of stable genus 4 curves,
/// k = 0..9, taken as input data (computed with Faber's algorithm).
struct FaberData {
  std::array<Rational, 10> b;
};

/// The published values. The source table header is misprinted (its first
/// column reads b_g and b_1 appears twice); entries are read as b_9 ... b_0
/// from left to right, which is the only reading compatible with the
/// recurrence.
FaberData faber_data();

/// [J^Igu] = 8L - D^Igu, [J^Vor] = 8L - D^Vor - 4E, pi^* D^Igu = D^Vor + 4E.
struct ClassConstants {
  long jacobian_igusa_l = 8;
  long jacobian_igusa_d = -1;
  long jacobian_voronoi_l = 8;
  long jacobian_voronoi_d = -1;
  long jacobian_voronoi_e = -4;
  long pullback_e = 4;
};

struct IgusaTable {
  std::array<Rational, 11> a;  // a[k] = a_k
};

/// a_{k-1} = 8 a_k - b_{k-1}, from a_10 down.
IgusaTable igusa_table(const Rational& a_top, const FaberData& b);

struct RecurrenceCheck {
  bool ok = true;
  std::optional<unsigned> failing_index;  // smallest k with a mismatch
};

/// Checks b_{k-1} == 8 a_k - a_{k-1} for k = 1..10.
RecurrenceCheck verify_recurrence(const IgusaTable& igusa, const FaberData& b);

class VoronoiTable {
 public:
  /// a_{k,l} for k, l >= 0 with k + l <= 10. Throws std::out_of_range
  /// otherwise.
  const Rational& at(unsigned k, unsigned l) const;
  Rational& at(unsigned k, unsigned l);
  /// at() with zero outside the valid index range.
  Rational get_or_zero(long k, long l) const;

 private:
  std::array<std::array<Rational, 11>, 11> values_{};
};

/// a_{k,0} = a_k; a_{k,l} = 0 for 1 <= l <= 9 (E is contracted to a point,
/// L and F are pulled back); a_{0,10} = e10_toric / stabilizer_order.
/// Throws std::invalid_argument for a zero stabilizer order.
VoronoiTable voronoi_table(const IgusaTable& igusa, const Rational& e10_toric, const Integer& stabilizer_order);

/// <L^k (D^Vor)^m E^l> = sum_j binom(m, j) (-4)^j a_{k, l+j}. Throws
/// std::invalid_argument unless k + m + l == 10.
Rational geometric_basis(const VoronoiTable& v, unsigned k, unsigned m, unsigned l);

}  // namespace a4
