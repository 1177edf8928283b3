#include "a4/cones.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace a4 {

RaySet RaySet::of(std::initializer_list<std::size_t> idx) {
  return of(std::vector<std::size_t>(idx));
}

RaySet RaySet::of(const std::vector<std::size_t>& idx) {
  RaySet s;
  for (auto i : idx) {
    if (i >= kMaxRays) throw std::out_of_range("RaySet: index too large");
    s = s.with(i);
  }
  return s;
}

std::vector<std::size_t> RaySet::indices() const {
  std::vector<std::size_t> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

Cone::Cone(std::vector<IntVector> generators) {
  if (generators.empty()) throw std::invalid_argument("Cone: no generators");
  ambient_ = generators.front().size();
  for (auto& g : generators) {
    if (g.size() != ambient_) throw std::invalid_argument("Cone: generators of different lengths");
    if (gcd_content(g) == 0) throw std::invalid_argument("Cone: zero generator");
    g = primitive_part(g);
  }
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (generators[i] == generators[j]) throw std::invalid_argument("Cone: duplicate ray");
  gens_ = std::move(generators);
  dim_ = rank(IntMatrix::from_rows(gens_));
}

std::size_t cone_dim(const Cone& c) { return c.dim(); }

namespace {

// Coordinates on which the projection of the span is injective.
std::vector<std::size_t> span_coordinates(const Cone& c) {
  // Pivot columns of the generator matrix's row echelon form.
  RatMatrix m(c.generator_matrix());
  return rref(m);
}

// Calls f on each k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Facet> enumerate_facets(const Cone& c) {
  const std::size_t d = c.dim();
  const auto coords = span_coordinates(c);
  const auto& gens = c.generators();

  // Generators projected onto the span coordinates.
  std::vector<IntVector> proj;
  for (const auto& g : gens) {
    IntVector p;
    for (auto k : coords) p.push_back(g[k]);
    proj.push_back(std::move(p));
  }

  std::map<std::vector<std::size_t>, IntVector> found;
  for_each_subset(gens.size(), d - 1, [&](const std::vector<std::size_t>& subset) {
    RatMatrix m(subset.size(), d);
    for (std::size_t r = 0; r < subset.size(); ++r)
      for (std::size_t k = 0; k < d; ++k) m(r, k) = Rational(proj[subset[r]][k]);
    const auto kernel = nullspace(m);
    if (kernel.size() != 1) return;  // subset does not span a hyperplane
    IntVector f = primitive_integer_vector(kernel.front());

    bool pos = false;
    bool neg = false;
    std::vector<std::size_t> incident;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int s = sgn(dot(f, proj[i]));
      if (s == 0) incident.push_back(i);
      pos |= s > 0;
      neg |= s < 0;
    }
    if (pos && neg) return;
    if (!pos && !neg) return;  // every generator on the hyperplane: not a proper face
    if (neg)
      for (auto& x : f) x = -x;
    found.emplace(std::move(incident), std::move(f));
  });

  std::vector<Facet> facets;
  for (auto& [incident, f] : found) {
    IntVector full(c.ambient_dim());
    for (std::size_t k = 0; k < d; ++k) full[coords[k]] = f[k];
    facets.push_back({std::move(full), incident});
  }

  // A pointed d-dimensional cone has facet normals spanning the dual space.
  if (d > 0) {
    std::vector<IntVector> normals;
    for (const auto& [incident, f] : found) normals.push_back(f);
    if (normals.empty() || rank(IntMatrix::from_rows(normals)) != d)
      throw std::invalid_argument("enumerate_facets: cone is not pointed");
  }
  return facets;
}

bool is_basic(const Cone& c, std::size_t lattice_dim) {
  if (c.ambient_dim() != lattice_dim) throw std::invalid_argument("is_basic: lattice dimension mismatch");
  if (c.size() != c.dim()) throw std::invalid_argument("is_basic: cone is not simplicial");
  const IntMatrix g = c.generator_matrix();
  if (c.size() == lattice_dim) return abs(int_det(g)) == 1;
  // The generators extend to a basis iff the gcd of the maximal minors is 1.
  Integer content = 0;
  for_each_subset(lattice_dim, c.size(), [&](const std::vector<std::size_t>& cols) {
    if (content == 1) return;
    IntMatrix minor(c.size(), c.size());
    for (std::size_t r = 0; r < c.size(); ++r)
      for (std::size_t k = 0; k < cols.size(); ++k) minor(r, k) = g(r, cols[k]);
    const Integer det = int_det(minor);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), det.get_mpz_t());
  });
  return content == 1;
}

Cone SimplicialFan::cone(RaySet s) const {
  std::vector<IntVector> gens;
  for (auto i : s.indices()) {
    if (i >= rays.size()) throw std::out_of_range("SimplicialFan: unknown ray index");
    gens.push_back(rays[i]);
  }
  return Cone(std::move(gens));
}

bool spans_cone(const SimplicialFan& fan, RaySet rays) {
  if (!rays.empty() && rays.indices().back() >= fan.ray_count())
    throw std::out_of_range("spans_cone: unknown ray index");
  return std::any_of(fan.cones.begin(), fan.cones.end(), [&](RaySet c) { return rays.subset_of(c); });
}

}  // namespace a4
