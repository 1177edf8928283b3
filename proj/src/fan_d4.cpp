#include "a4/fan_d4.hpp"

#include "a4/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace a4 {

// ------------------------------------------------------------- SymMatrix

SymMatrix::SymMatrix(const IntMatrix& m) : SymMatrix(m.rows()) {
  if (m.rows() != m.cols()) throw std::invalid_argument("SymMatrix: not square");
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      if (m(i, j) != m(j, i)) throw std::invalid_argument("SymMatrix: not symmetric");
      entries_[i * n_ + j] = m(i, j);
    }
}

SymMatrix SymMatrix::outer(std::span<const Integer> c) {
  SymMatrix s(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) s.entries_[i * s.n_ + j] = c[i] * c[j];
  return s;
}

SymMatrix SymMatrix::from_coords(std::span<const Integer> coords) {
  std::size_t n = 0;
  while (n * (n + 1) / 2 < coords.size()) ++n;
  if (n * (n + 1) / 2 != coords.size()) throw std::invalid_argument("SymMatrix: coordinate count is not triangular");
  SymMatrix s(n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) s.set(i, i, coords[k++]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s.set(i, j, coords[k++]);
  return s;
}

void SymMatrix::set(std::size_t i, std::size_t j, const Integer& v) {
  entries_[i * n_ + j] = v;
  entries_[j * n_ + i] = v;
}

IntVector SymMatrix::coords() const {
  IntVector v;
  v.reserve(n_ * (n_ + 1) / 2);
  for (std::size_t i = 0; i < n_; ++i) v.push_back((*this)(i, i));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) v.push_back((*this)(i, j));
  return v;
}

IntMatrix SymMatrix::matrix() const {
  IntMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

SymMatrix SymMatrix::congruence(const IntMatrix& g) const {
  return SymMatrix(g * matrix() * g.transpose());
}

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("SymMatrix: size mismatch");
  SymMatrix s(a.n_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k) s.entries_[k] = a.entries_[k] + b.entries_[k];
  return s;
}

// ------------------------------------------------------------ D4 lattice

IntMatrix default_root_basis() {
  return IntMatrix::from_rows({{1, 0, 0, 0},    //
                               {-1, 1, 0, 0},   //
                               {0, -1, 1, 1},   //
                               {0, 0, -1, 1}});
}

IntMatrix build_d4_form(const IntMatrix& basis) { return basis.transpose() * basis; }

namespace {

Integer quadratic(const IntMatrix& q, std::span<const Integer> c) {
  Integer s = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) s += c[i] * q(i, j) * c[j];
  return s;
}

Integer bilinear(const IntMatrix& q, std::span<const Integer> a, std::span<const Integer> b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * q(i, j) * b[j];
  return s;
}

RatMatrix inverse(const IntMatrix& q) {
  const std::size_t n = q.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = Rational(q(i, j));
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  if (n > 0 && pivots[n - 1] >= n) throw std::invalid_argument("inverse: singular matrix");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::string show(std::span<const std::size_t> idx) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? "," : "") << idx[k];
  os << '}';
  return os.str();
}

}  // namespace

std::vector<IntVector> vectors_of_norm(const IntMatrix& q, const Integer& norm) {
  const std::size_t n = q.rows();
  if (q.cols() != n) throw std::invalid_argument("vectors_of_norm: form is not square");
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = q(i, j);
    if (int_det(lead) <= 0) throw std::invalid_argument("vectors_of_norm: form is not positive definite");
  }
  const RatMatrix inv = inverse(q);
  std::vector<long> bound(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational x = Rational(norm) * inv(i, i);
    Integer fl = x.num() / x.den();
    Integer root;
    mpz_sqrt(root.get_mpz_t(), fl.get_mpz_t());
    bound[i] = root.get_si();
  }

  std::vector<IntVector> out;
  IntVector c(n);
  std::vector<long> cur(n);
  for (std::size_t i = 0; i < n; ++i) cur[i] = -bound[i];
  while (true) {
    for (std::size_t i = 0; i < n; ++i) c[i] = cur[i];
    if (quadratic(q, c) == norm) out.push_back(c);
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == bound[i - 1]) {
      cur[i - 1] = -bound[i - 1];
      --i;
    }
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

std::vector<IntVector> minimal_vectors(const IntMatrix& q) {
  if (!vectors_of_norm(q, 1).empty()) throw ConstructionError("minimal_vectors: the form represents 1");
  auto mins = vectors_of_norm(q, 2);
  if (mins.size() != 24) {
    throw ConstructionError("minimal_vectors: expected 24 vectors of norm 2, found " +
                            std::to_string(mins.size()));
  }
  return mins;
}

std::vector<IntVector> antipodal_representatives(std::span<const IntVector> vectors) {
  std::set<IntVector, std::greater<>> reps;
  for (const auto& v : vectors) {
    auto first = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
    if (first == v.end()) continue;
    IntVector r = v;
    if (*first < 0)
      for (auto& x : r) x = -x;
    reps.insert(std::move(r));
  }
  return {reps.begin(), reps.end()};
}

std::vector<SymMatrix> build_rays(std::span<const IntVector> minimal) {
  if (minimal.size() != 24)
    throw ConstructionError("build_rays: expected 24 minimal vectors, got " + std::to_string(minimal.size()));
  const auto reps = antipodal_representatives(minimal);
  if (reps.size() != 12) throw ConstructionError("build_rays: minimal vectors do not form 12 antipodal pairs");
  std::vector<SymMatrix> rays;
  std::vector<IntVector> coords;
  for (const auto& c : reps) {
    rays.push_back(SymMatrix::outer(c));
    coords.push_back(rays.back().coords());
    if (gcd_content(coords.back()) != 1) throw ConstructionError("build_rays: ray is not primitive");
  }
  if (rank(IntMatrix::from_rows(coords)) != 10)
    throw ConstructionError("build_rays: rays do not span a 10-dimensional cone");
  return rays;
}

EtaData build_eta(std::span<const SymMatrix> rays) {
  if (rays.empty()) throw std::invalid_argument("build_eta: no rays");
  SymMatrix sum = rays.front();
  for (std::size_t i = 1; i < rays.size(); ++i) sum = sum + rays[i];
  const IntVector coords = sum.coords();
  const Integer content = gcd_content(coords);
  if (content == 0) throw ConstructionError("build_eta: ray sum is zero");
  return {sum, content, SymMatrix::from_coords(primitive_part(coords))};
}

StarFan build_star_fan(const IntMatrix& basis) {
  StarFan s;
  s.basis = basis;
  s.form = build_d4_form(basis);
  s.minimal = minimal_vectors(s.form);
  s.ray_roots = antipodal_representatives(s.minimal);
  s.gammas = build_rays(s.minimal);
  s.eta = build_eta(s.gammas);

  std::vector<IntVector> gamma_coords;
  for (const auto& g : s.gammas) gamma_coords.push_back(g.coords());
  s.facets = enumerate_facets(Cone(gamma_coords));

  const IntVector eta = s.eta.eta.coords();
  for (const auto& f : s.facets)
    if (dot(f.functional, eta) <= 0) throw ConstructionError("build_star_fan: eta is not interior to the perfect cone");

  s.fan.dim = eta.size();
  s.fan.rays.push_back(eta);
  for (auto& c : gamma_coords) s.fan.rays.push_back(std::move(c));

  for (const auto& f : s.facets) {
    RaySet cone = RaySet().with(StarFan::kEta);
    for (auto i : f.incident) cone = cone.with(i + 1);
    const Cone c = s.fan.cone(cone);
    if (c.size() != c.dim() || c.dim() != s.fan.dim)
      throw ConstructionError("build_star_fan: cone over facet " + show(f.incident) + " is not simplicial");
    const Integer det = int_det(c.generator_matrix());
    if (abs(det) != 1)
      throw ConstructionError("build_star_fan: cone over facet " + show(f.incident) + " has determinant " +
                              det.get_str());
    s.fan.cones.push_back(cone);
    s.cone_determinants.push_back(det);
  }
  std::vector<RaySet> sorted = s.fan.cones;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ConstructionError("build_star_fan: two facets give the same cone");
  return s;
}

// ------------------------------------------------------------- stabilizer

std::size_t LatticeAutomorphism::map_fan_ray(std::size_t fan_ray) const {
  if (fan_ray == StarFan::kEta) return StarFan::kEta;
  return ray_permutation.at(fan_ray - 1) + 1;
}

RaySet LatticeAutomorphism::map(RaySet fan_rays) const {
  RaySet out;
  for (auto i : fan_rays.indices()) out = out.with(map_fan_ray(i));
  return out;
}

Stabilizer compute_stabilizer(const StarFan& star) {
  const IntMatrix& q = star.form;
  const std::size_t n = q.rows();
  const auto& mins = star.minimal;
  const Integer min_norm = quadratic(q, mins.front());

  // Frame: the standard basis when it consists of minimal vectors,
  // otherwise the first n independent minimal vectors.
  std::vector<IntVector> frame;
  bool basis_is_minimal = true;
  for (std::size_t i = 0; i < n; ++i) basis_is_minimal &= q(i, i) == min_norm;
  if (basis_is_minimal) {
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e(n);
      e[i] = 1;
      frame.push_back(std::move(e));
    }
  } else {
    for (const auto& v : mins) {
      auto trial = frame;
      trial.push_back(v);
      if (rank(IntMatrix::from_rows(trial)) == trial.size()) frame = std::move(trial);
      if (frame.size() == n) break;
    }
  }
  // frame_inv = F^-1 where F has the frame vectors as columns.
  RatMatrix frame_inv = inverse(IntMatrix::from_rows(frame).transpose());

  std::vector<std::vector<Integer>> gram(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram[i][j] = bilinear(q, frame[i], frame[j]);

  std::map<IntVector, std::size_t> root_index;
  for (std::size_t i = 0; i < star.ray_roots.size(); ++i) {
    root_index[star.ray_roots[i]] = i;
    IntVector neg = star.ray_roots[i];
    for (auto& x : neg) x = -x;
    root_index[neg] = i;
  }
  const std::set<RaySet> cone_set(star.fan.cones.begin(), star.fan.cones.end());

  Stabilizer result;
  std::vector<std::size_t> image(n);
  auto extend = [&](auto&& self, std::size_t depth) -> void {
    if (depth == n) {
      // g = [images] F^-1
      IntMatrix g(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          Rational x;
          for (std::size_t k = 0; k < n; ++k) x += Rational(mins[image[k]][r]) * frame_inv(k, c);
          if (!x.is_integer()) return;
          g(r, c) = x.num();
        }
      if (g.transpose() * q * g != q) return;

      LatticeAutomorphism a{g, {}};
      for (const auto& root : star.ray_roots) {
        IntVector gc(n);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) gc[r] += g(r, c) * root[c];
        auto it = root_index.find(gc);
        if (it == root_index.end()) throw ComputationError("compute_stabilizer: automorphism does not permute the rays");
        a.ray_permutation.push_back(it->second);
      }
      if (star.eta.eta.congruence(g) != star.eta.eta)
        throw ComputationError("compute_stabilizer: automorphism moves eta");
      for (RaySet cone : star.fan.cones)
        if (!cone_set.contains(a.map(cone)))
          throw ComputationError("compute_stabilizer: automorphism does not permute the top cones");
      result.elements.push_back(std::move(a));
      return;
    }
    for (std::size_t m = 0; m < mins.size(); ++m) {
      bool ok = bilinear(q, mins[m], mins[m]) == gram[depth][depth];
      for (std::size_t k = 0; ok && k < depth; ++k) ok = bilinear(q, mins[image[k]], mins[m]) == gram[k][depth];
      if (!ok) continue;
      image[depth] = m;
      self(self, depth + 1);
    }
  };
  extend(extend, 0);
  return result;
}

}  // namespace a4
