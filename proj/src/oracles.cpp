#include "a4/oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace a4::oracle {

Integer cofactor_det(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("cofactor_det: not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = a(r, k);
    const Integer term = a(0, c) * cofactor_det(minor);
    det += (c % 2 == 0) ? term : Integer(-term);
  }
  return det;
}

namespace {

// Normal vector of the hyperplane through n-1 vectors in Z^n via signed
// minors (generalized cross product). Zero iff the vectors are dependent.
IntVector cross_normal(const std::vector<IntVector>& vs, std::size_t n) {
  IntVector normal(n);
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 0; r + 1 < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r, kk++) = vs[r][k];
    const Integer d = cofactor_det(minor);
    normal[c] = (c % 2 == 0) ? d : Integer(-d);
  }
  return normal;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

// Some n-1 independent vectors among `subset`, chosen greedily by trying
// all (n-1)-subsets; empty if none exist.
std::vector<IntVector> hyperplane_basis(const std::vector<IntVector>& gens, const std::vector<std::size_t>& subset,
                                        std::size_t n, IntVector& normal) {
  const std::size_t k = n - 1;
  if (subset.size() < k) return {};
  std::vector<bool> pick(subset.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<IntVector> vs;
    for (std::size_t i = 0; i < subset.size(); ++i)
      if (pick[i]) vs.push_back(gens[subset[i]]);
    normal = cross_normal(vs, n);
    if (!is_zero(normal)) return vs;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return {};
}

}  // namespace

std::vector<std::vector<std::size_t>> facet_incidences(const std::vector<IntVector>& generators) {
  if (generators.empty()) return {};
  const std::size_t n = generators.front().size();
  const std::size_t count = generators.size();
  std::vector<std::vector<std::size_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << count); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < count; ++i)
      if ((mask >> i) & 1U) subset.push_back(i);
    IntVector normal;
    if (n == 1) {
      if (!subset.empty()) continue;
      normal = {Integer(1)};
    } else if (hyperplane_basis(generators, subset, n, normal).empty()) {
      continue;
    }
    bool on_plane = true;
    int side = 0;
    bool one_sided = true;
    for (std::size_t i = 0; i < count; ++i) {
      const int s = sgn(dot(normal, generators[i]));
      const bool in_subset = (mask >> i) & 1U;
      if (in_subset) {
        on_plane &= s == 0;
      } else {
        if (s == 0 || (side != 0 && s != side)) one_sided = false;
        side = s;
      }
    }
    if (on_plane && one_sided && side != 0) out.push_back(subset);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational bernoulli_explicit(unsigned n) {
  if (n == 1) throw std::invalid_argument("bernoulli_explicit: n = 1 uses the other sign convention");
  Rational total;
  for (unsigned long k = 0; k <= n; ++k) {
    Integer inner = 0;
    for (unsigned long j = 0; j <= k; ++j) {
      Integer jp;
      mpz_ui_pow_ui(jp.get_mpz_t(), j, n);
      const Integer term = binomial(k, j) * jp;
      if (j % 2 == 0) {
        inner += term;
      } else {
        inner -= term;
      }
    }
    total += Rational(inner, Integer(static_cast<long>(k + 1)));
  }
  return total;
}

Integer von_staudt_clausen_denominator(unsigned n) {
  Integer d = 1;
  for (unsigned p = 2; p <= n + 1; ++p) {
    bool prime = true;
    for (unsigned q = 2; q * q <= p; ++q) prime &= p % q != 0;
    if (prime && n % (p - 1) == 0) d *= p;
  }
  return d;
}

namespace {

IntVector vec(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

SimplicialFan blowup_star() {
  SimplicialFan f;
  f.dim = 2;
  f.rays = {vec({1, 1}), vec({1, 0}), vec({0, 1})};
  f.cones = {RaySet::of({0, 1}), RaySet::of({0, 2})};
  return f;
}

SimplicialFan projective_plane_star() {
  SimplicialFan f;
  f.dim = 2;
  f.rays = {vec({1, 0}), vec({0, 1}), vec({-1, -1})};
  f.cones = {RaySet::of({0, 1}), RaySet::of({0, 2})};
  return f;
}

}  // namespace a4::oracle
