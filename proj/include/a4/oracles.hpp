// Brute-force reference computations. Each one avoids the code path it is
// used to check: cofactor expansion instead of Bareiss, subset enumeration
// with cross-product normals instead of kernel elimination, the explicit
// double sum for Bernoulli numbers instead of the recurrence.
#pragma once

#include "a4/cones.hpp"
#include "a4/exact.hpp"

#include <vector>

namespace a4::oracle {

/// Laplace expansion along the first row.
Integer cofactor_det(const IntMatrix& a);

/// Incident generator sets of all facets of a full-dimensional cone in
/// Z^n: every subset of generators is tested for lying on a hyperplane
/// (normal from signed (n-1)-minors) with the remaining generators strictly
/// on one side. Sorted. Intended for at most ~12 generators.
std::vector<std::vector<std::size_t>> facet_incidences(const std::vector<IntVector>& generators);

/// B_n = sum_{k=0}^{n} 1/(k+1) sum_{j=0}^{k} (-1)^j binom(k,j) j^n, valid
/// for n != 1.
Rational bernoulli_explicit(unsigned n);

/// prod of primes p with (p - 1) | n, for even n >= 2.
Integer von_staudt_clausen_denominator(unsigned n);

/// Rays (1,1) [E], (1,0), (0,1): the star of the exceptional ray of the
/// blow-up of the plane at the origin. E^2 = -1.
SimplicialFan blowup_star();

/// Rays (1,0) [E], (0,1), (-1,-1): the star of one ray of the fan of P^2,
/// where E is a line. E^2 = 1.
SimplicialFan projective_plane_star();

}  // namespace a4::oracle
