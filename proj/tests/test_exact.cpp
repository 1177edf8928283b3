#include "a4/exact.hpp"
#include "a4/oracles.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace a4;

namespace {

Rational random_rational(std::mt19937_64& rng, int bound = 40) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  return Rational(Integer(num(rng)), Integer(den(rng)));
}

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound = 6) {
  RatMatrix m(rows, cols);
  std::uniform_int_distribution<int> d(-bound, bound);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(d(rng));
  return m;
}

SparseSystem to_sparse(const RatMatrix& a, const RatVector& b) {
  SparseSystem s;
  s.cols = a.cols();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    SparseRow row;
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!a(r, c).is_zero()) row.add(c, a(r, c));
    s.rows.push_back(row);
  }
  s.rhs = b;
  return s;
}

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("stored in lowest terms with positive denominator") {
    const Rational r(Integer(6), Integer(-8));
    CHECK(r.num() == -3);
    CHECK(r.den() == 4);
    CHECK(r.str() == "-3/4");
    CHECK(Rational(Integer(10), Integer(5)).str() == "2");
    CHECK(Rational().str() == "0");
    CHECK(Rational().den() == 1);
  }

  TEST_CASE("zero denominators are rejected") {
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
  }

  TEST_CASE("parse") {
    CHECK(Rational::parse("-1759/1680") == Rational(Integer(-1759), Integer(1680)));
    CHECK(Rational::parse("12/8").str() == "3/2");
    CHECK(Rational::parse("101449217") == Rational(101449217L));
    CHECK_THROWS_AS(Rational::parse("1/x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  }

  TEST_CASE("ordering, sign and abs") {
    CHECK(Rational(Integer(-1), Integer(3)) < Rational(Integer(-1), Integer(4)));
    CHECK(Rational(-5).abs() == Rational(5));
    CHECK(Rational(-5).sign() == -1);
    CHECK(Rational(Integer(7), Integer(7)).is_integer());
    CHECK_FALSE(Rational(Integer(7), Integer(2)).is_integer());
  }

  TEST_CASE("field axioms on random values") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
      const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == Rational(0));
      CHECK(-(-a) == a);
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == Rational(1));
        CHECK((b / a) * a == b);
      }
    }
  }

  TEST_CASE("large values stay exact") {
    Rational x(1);
    for (int i = 0; i < 60; ++i) x *= Rational(Integer(1000003), Integer(999983));
    for (int i = 0; i < 60; ++i) x /= Rational(Integer(1000003), Integer(999983));
    CHECK(x == Rational(1));
  }
}

TEST_SUITE("integer helpers") {
  TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(10, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(to_string(factorial(25)) == "15511210043330985984000000");
  }

  TEST_CASE("content and primitive parts") {
    const IntVector v{Integer(6), Integer(-9), Integer(0), Integer(15)};
    CHECK(gcd_content(v) == 3);
    CHECK(primitive_part(v) == IntVector{Integer(2), Integer(-3), Integer(0), Integer(5)});
    const IntVector zero{Integer(0), Integer(0)};
    CHECK(gcd_content(zero) == 0);
    CHECK(primitive_part(zero) == zero);
    const RatVector q{Rational(Integer(1), Integer(2)), Rational(Integer(-1), Integer(3)), Rational(0)};
    CHECK(primitive_integer_vector(q) == IntVector{Integer(3), Integer(-2), Integer(0)});
  }

  TEST_CASE("dot products") {
    const IntVector a{Integer(1), Integer(2), Integer(3)};
    const IntVector b{Integer(-4), Integer(0), Integer(5)};
    CHECK(dot(a, b) == 11);
    const RatVector q{Rational(Integer(1), Integer(2)), Rational(1), Rational(0)};
    CHECK(dot(q, b) == Rational(-2));
  }
}

TEST_SUITE("matrices") {
  TEST_CASE("integer matrix basics") {
    const IntMatrix m = IntMatrix::from_rows({{1, 2}, {3, 4}});
    CHECK(m.transpose() == IntMatrix::from_rows({{1, 3}, {2, 4}}));
    CHECK(m * IntMatrix::identity(2) == m);
    CHECK(m * m == IntMatrix::from_rows({{7, 10}, {15, 22}}));
    CHECK_THROWS_AS(IntMatrix::from_rows({{1, 2}, {3}}), std::invalid_argument);
    CHECK_THROWS_AS(m * IntMatrix(3, 1), std::invalid_argument);
  }

  TEST_CASE("determinant known values") {
    CHECK(int_det(IntMatrix::identity(4)) == 1);
    CHECK(int_det(IntMatrix::from_rows({{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}})) == 4);
    CHECK(int_det(IntMatrix::from_rows({{1, 2}, {2, 4}})) == 0);
    CHECK(int_det(IntMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(int_det(IntMatrix(0, 0)) == 1);
    CHECK_THROWS_AS(int_det(IntMatrix(2, 3)), std::invalid_argument);
  }

  TEST_CASE("Bareiss agrees with cofactor expansion") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-9, 9);
    for (std::size_t n = 1; n <= 5; ++n)
      for (int t = 0; t < 60; ++t) {
        IntMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) m(r, c) = d(rng);
        CHECK(int_det(m) == oracle::cofactor_det(m));
      }
  }

  TEST_CASE("rank and nullspace") {
    const RatMatrix m(IntMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}));
    CHECK(rank(m) == 2);
    CHECK(rank(IntMatrix::from_rows({{1, 2, 3}, {2, 4, 6}})) == 1);
    const auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    for (const auto& x : m * ns[0]) CHECK(x.is_zero());
  }

  TEST_CASE("random nullspace vectors are annihilated") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
      const RatMatrix m = random_matrix(rng, 3, 6, 3);
      const auto ns = nullspace(m);
      CHECK(ns.size() + rank(m) == 6);
      for (const auto& v : ns)
        for (const auto& x : m * v) CHECK(x.is_zero());
    }
  }
}

TEST_SUITE("exact solve") {
  TEST_CASE("unique solution substitutes back") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = 1 + t % 6;
      const RatMatrix a = random_matrix(rng, n, n);
      RatVector x(n);
      for (auto& v : x) v = random_rational(rng, 9);
      const RatVector b = a * x;
      const SolveResult r = solve_exact(a, b);
      REQUIRE(r.consistent);
      CHECK(a * r.solution == b);
      if (rank(a) == n) {
        CHECK(r.solution == x);
        CHECK(r.free_columns.empty());
      }
    }
  }

  TEST_CASE("sparse and dense entry points agree") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 40; ++t) {
      const RatMatrix a = random_matrix(rng, 7, 5, 2);
      RatVector x(5);
      for (auto& v : x) v = random_rational(rng, 5);
      const RatVector b = a * x;
      const SolveResult dense = solve_exact(a, b);
      const SolveResult sparse = solve_exact(to_sparse(a, b));
      CHECK(dense.consistent);
      CHECK(sparse.consistent);
      CHECK(dense.solution == sparse.solution);
      CHECK(dense.pivots == sparse.pivots);
    }
  }

  TEST_CASE("inconsistent row is reported") {
    const RatMatrix a(IntMatrix::from_rows({{1, 1}, {1, -1}, {2, 0}}));
    const SolveResult r = solve_exact(a, RatVector{Rational(2), Rational(0), Rational(3)});
    CHECK_FALSE(r.consistent);
    REQUIRE(r.inconsistent_row.has_value());
    CHECK(*r.inconsistent_row == 2);
    CHECK(r.solution.empty());
  }

  TEST_CASE("underdetermined system leaves free columns at zero") {
    SparseSystem s;
    s.cols = 3;
    SparseRow row;
    row.add(0, Rational(1));
    row.add(2, Rational(2));
    s.rows.push_back(row);
    s.rhs.push_back(Rational(4));
    const SolveResult r = solve_exact(s);
    CHECK(r.consistent);
    CHECK(r.pivots == std::vector<std::size_t>{0});
    CHECK(r.free_columns == std::vector<std::size_t>{1, 2});
    CHECK(r.solution == RatVector{Rational(4), Rational(0), Rational(0)});
    CHECK(r.determined(0) == false);  // x0 = 4 - 2 x2
  }

  TEST_CASE("a determined column among free ones") {
    const RatMatrix a(IntMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}));
    SolveResult r = solve_exact(a, RatVector{Rational(1), Rational(2), Rational(3)});
    CHECK(r.rank() == 3);
    CHECK(r.determined(2));
    CHECK(r.solution == RatVector{Rational(2), Rational(-1), Rational(3)});
  }

  TEST_CASE("sparse row bookkeeping") {
    SparseRow row;
    row.add(3, Rational(2));
    row.add(1, Rational(1));
    row.add(3, Rational(-2));
    REQUIRE(row.entries.size() == 1);
    CHECK(row.entries[0].first == 1);
    CHECK(row.dot(RatVector{Rational(5), Rational(7), Rational(0), Rational(1)}) == Rational(7));
  }
}
