#include "a4/exact.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace a4 {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s, 10));
    return Rational(Integer(s.substr(0, slash), 10), Integer(s.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  }
}

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  Rational r;
  r.value_ = 1 / value_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// ---------------------------------------------------------------- matrices

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVector> v;
  for (const auto& r : rows) {
    IntVector row;
    for (long x : r) row.emplace_back(x);
    v.push_back(std::move(row));
  }
  return from_rows(v);
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix product: shape mismatch");
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

RatMatrix::RatMatrix(const IntMatrix& m) : RatMatrix(m.rows(), m.cols()) {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = Rational(m(r, c));
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("RatMatrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatVector operator*(const RatMatrix& a, const RatVector& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("RatMatrix product: shape mismatch");
  RatVector y(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!a(r, c).is_zero() && !x[c].is_zero()) y[r] += a(r, c) * x[c];
  return y;
}

// ------------------------------------------------------------ sparse rows

void SparseRow::add(std::size_t col, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto it = std::lower_bound(entries.begin(), entries.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  if (it != entries.end() && it->first == col) {
    it->second += coeff;
    if (it->second.is_zero()) entries.erase(it);
  } else {
    entries.insert(it, {col, coeff});
  }
}

Rational SparseRow::dot(std::span<const Rational> x) const {
  Rational s;
  for (const auto& [c, v] : entries) s += v * x[c];
  return s;
}

bool SolveResult::determined(std::size_t col) const {
  return std::binary_search(determined_columns.begin(), determined_columns.end(), col);
}

namespace {

using Entries = std::vector<std::pair<std::size_t, Rational>>;

// target -= factor * source, both sorted by column.
Entries axpy(const Entries& target, const Rational& factor, const Entries& source) {
  Entries out;
  out.reserve(target.size() + source.size());
  auto t = target.begin();
  auto s = source.begin();
  while (t != target.end() || s != source.end()) {
    if (s == source.end() || (t != target.end() && t->first < s->first)) {
      out.push_back(*t++);
    } else if (t == target.end() || s->first < t->first) {
      out.emplace_back(s->first, -(factor * s->second));
      ++s;
    } else {
      Rational v = t->second - factor * s->second;
      if (!v.is_zero()) out.emplace_back(t->first, std::move(v));
      ++t;
      ++s;
    }
  }
  return out;
}

struct PivotRow {
  Entries rest;  // coefficients of non-pivot columns; pivot coefficient is 1
  Rational rhs;
};

}  // namespace

SolveResult solve_exact(const SparseSystem& system) {
  if (system.rows.size() != system.rhs.size())
    throw std::invalid_argument("solve_exact: rhs length does not match row count");

  std::unordered_map<std::size_t, PivotRow> pivot_rows;
  // column -> pivot columns whose row mentions it
  std::unordered_map<std::size_t, std::unordered_set<std::size_t>> users;
  SolveResult result;

  for (std::size_t r = 0; r < system.rows.size(); ++r) {
    Entries row = system.rows[r].entries;
    Rational rhs = system.rhs[r];
    for (const auto& [c, v] : row)
      if (c >= system.cols) throw std::invalid_argument("solve_exact: column index out of range");

    // Reduce against existing pivots. Pivot rows never mention other pivot
    // columns, so one pass suffices.
    Entries reduced;
    std::vector<std::pair<const PivotRow*, Rational>> subs;
    for (auto& [c, v] : row) {
      auto it = pivot_rows.find(c);
      if (it == pivot_rows.end()) {
        reduced.emplace_back(c, std::move(v));
      } else {
        subs.emplace_back(&it->second, std::move(v));
      }
    }
    for (const auto& [p, f] : subs) {
      reduced = axpy(reduced, f, p->rest);
      rhs -= f * p->rhs;
    }

    if (reduced.empty()) {
      if (!rhs.is_zero()) {
        result.consistent = false;
        result.inconsistent_row = r;
        return result;
      }
      continue;
    }

    const std::size_t pcol = reduced.front().first;
    const Rational scale = reduced.front().second.inverse();
    PivotRow pr;
    pr.rest.reserve(reduced.size() - 1);
    for (std::size_t i = 1; i < reduced.size(); ++i)
      pr.rest.emplace_back(reduced[i].first, reduced[i].second * scale);
    pr.rhs = rhs * scale;

    // Back-substitute into earlier pivot rows that mention pcol.
    if (auto uit = users.find(pcol); uit != users.end()) {
      const auto mentioning = std::move(uit->second);
      users.erase(uit);
      for (std::size_t q : mentioning) {
        PivotRow& qr = pivot_rows.at(q);
        auto pos = std::lower_bound(qr.rest.begin(), qr.rest.end(), pcol,
                                    [](const auto& e, std::size_t c) { return e.first < c; });
        // The index is conservative: a cancellation may have removed pcol.
        if (pos == qr.rest.end() || pos->first != pcol) continue;
        const Rational g = pos->second;
        qr.rest.erase(pos);
        for (const auto& [c, v] : pr.rest) users[c].insert(q);
        qr.rest = axpy(qr.rest, g, pr.rest);
        qr.rhs -= g * pr.rhs;
      }
    }
    for (const auto& [c, v] : pr.rest) users[c].insert(pcol);
    pivot_rows.emplace(pcol, std::move(pr));
  }

  result.consistent = true;
  result.solution.assign(system.cols, Rational{});
  for (std::size_t c = 0; c < system.cols; ++c) {
    auto it = pivot_rows.find(c);
    if (it == pivot_rows.end()) {
      result.free_columns.push_back(c);
    } else {
      result.pivots.push_back(c);
      if (it->second.rest.empty()) result.determined_columns.push_back(c);
      result.solution[c] = it->second.rhs;  // free columns are zero
    }
  }
  return result;
}

SolveResult solve_exact(const RatMatrix& a, const RatVector& rhs) {
  if (a.rows() != rhs.size()) throw std::invalid_argument("solve_exact: rhs length does not match rows");
  SparseSystem s;
  s.cols = a.cols();
  s.rhs = rhs;
  s.rows.resize(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!a(r, c).is_zero()) s.rows[r].entries.emplace_back(c, a(r, c));
  return solve_exact(s);
}

std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    const Rational inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix copy = m;
  return rref(copy).size();
}

std::size_t rank(const IntMatrix& m) { return rank(RatMatrix(m)); }

std::vector<RatVector> nullspace(const RatMatrix& m) {
  RatMatrix r = m;
  const auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Integer int_det(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("int_det: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t sel = k + 1;
      while (sel < n && m(sel, k) == 0) ++sel;
      if (sel == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(sel, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(t);
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Integer gcd_content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IntVector primitive_part(std::span<const Integer> v) {
  const Integer g = gcd_content(v);
  IntVector out(v.begin(), v.end());
  if (g > 1)
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

IntVector primitive_integer_vector(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.num() * (l / x.den()));
  return primitive_part(out);
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(std::span<const Rational> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] != 0 && !a[i].is_zero()) s += a[i] * Rational(b[i]);
  return s;
}

Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace a4
