// Exact integer and rational arithmetic plus the dense and sparse linear
// algebra the rest of the library is built on. Nothing here uses floating
// point.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace a4 {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Arbitrary-precision fraction, always in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : value_(value) {}  // NOLINT
  Rational(const Integer& num, const Integer& den);

  /// Parses "n" or "n/d" in base 10.
  static Rational parse(std::string_view text);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  Rational inverse() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "n" for integers, "n/d" otherwise.
  std::string str() const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

using RatVector = std::vector<Rational>;

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  /// Rows given as vectors of equal length.
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  IntVector row(std::size_t r) const;
  IntMatrix transpose() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Dense row-major rational matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit RatMatrix(const IntMatrix& m);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RatVector operator*(const RatMatrix& a, const RatVector& x);

/// One row of a sparse system: (column, coefficient) pairs with distinct
/// columns and nonzero coefficients, sorted by column.
struct SparseRow {
  std::vector<std::pair<std::size_t, Rational>> entries;

  /// Adds `coeff` to the coefficient of `col`, keeping the row sorted and
  /// free of zeros.
  void add(std::size_t col, const Rational& coeff);
  Rational dot(std::span<const Rational> x) const;
};

struct SparseSystem {
  std::size_t cols = 0;
  std::vector<SparseRow> rows;
  RatVector rhs;
};

struct SolveResult {
  bool consistent = false;
  /// First row (in input order) found to contradict the earlier rows.
  std::optional<std::size_t> inconsistent_row;
  /// A particular solution with every free column set to zero. Empty when
  /// the system is inconsistent.
  RatVector solution;
  /// Pivot columns, ascending.
  std::vector<std::size_t> pivots;
  /// Pivot columns whose reduced row involves no free column, i.e. the
  /// same in every solution.
  std::vector<std::size_t> determined_columns;
  /// Columns left free after full reduction, ascending.
  std::vector<std::size_t> free_columns;

  std::size_t rank() const { return pivots.size(); }
  bool determined(std::size_t col) const;
};

/// Exact Gauss-Jordan elimination. Rows are absorbed one at a time in input
/// order; each new pivot is back-substituted into every earlier pivot row,
/// so at the end each pivot row expresses its column in terms of free
/// columns only. Overdetermined systems are checked row by row.
SolveResult solve_exact(const SparseSystem& system);
SolveResult solve_exact(const RatMatrix& a, const RatVector& rhs);

/// Reduced row echelon form; returns the pivot column of each nonzero row.
std::vector<std::size_t> rref(RatMatrix& m);
std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);
/// Basis of {x : m x = 0}, one vector per free column.
std::vector<RatVector> nullspace(const RatMatrix& m);

/// Fraction-free (Bareiss) determinant. Throws std::invalid_argument for a
/// non-square matrix.
Integer int_det(const IntMatrix& a);

/// gcd of the absolute values; 0 for the zero (or empty) vector.
Integer gcd_content(std::span<const Integer> v);

/// Divides by the content. The zero vector is returned unchanged.
IntVector primitive_part(std::span<const Integer> v);

/// Clears denominators of a rational vector and makes it primitive.
IntVector primitive_integer_vector(std::span<const Rational> v);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Rational dot(std::span<const Rational> a, std::span<const Integer> b);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

std::string to_string(const Integer& z);

}  // namespace a4
