#include "a4/tables.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace a4;

namespace {

Rational q(long n, long d) { return Rational(Integer(n), Integer(d)); }

const Rational kTop = q(1, 907200);

std::array<Rational, 11> expected_igusa() {
  std::array<Rational, 11> a;
  a[10] = kTop;
  a[6] = q(-1, 3780);
  a[3] = q(-1759, 1680);
  a[1] = q(1636249, 1080);
  a[0] = q(101449217, 1440);
  return a;
}

}  // namespace

TEST_CASE("curve data read from b_9 down to b_0") {
  const FaberData b = faber_data();
  CHECK(b.b[9] == q(1, 113400));
  CHECK(b.b[8].is_zero());
  CHECK(b.b[7].is_zero());
  CHECK(b.b[6] == q(1, 3780));
  CHECK(b.b[5] == q(-2, 945));
  CHECK(b.b[0] == q(-251987683, 4320));
}

TEST_CASE("Igusa table from the recurrence") {
  const IgusaTable t = igusa_table(kTop, faber_data());
  CHECK(t.a == expected_igusa());
  CHECK(verify_recurrence(t, faber_data()).ok);
}

TEST_CASE("a corrupted b_0 is caught by the recurrence") {
  FaberData bad = faber_data();
  bad.b[0] += Rational(1);
  const IgusaTable t = igusa_table(kTop, bad);
  CHECK(t.a[0] != expected_igusa()[0]);
  CHECK(t.a[1] == expected_igusa()[1]);

  const RecurrenceCheck check = verify_recurrence(IgusaTable{expected_igusa()}, bad);
  CHECK_FALSE(check.ok);
  REQUIRE(check.failing_index.has_value());
  CHECK(*check.failing_index == 1);
}

TEST_CASE("a wrong top value is caught at k = 10") {
  IgusaTable t{expected_igusa()};
  t.a[10] = q(1, 907201);
  const RecurrenceCheck check = verify_recurrence(t, faber_data());
  CHECK_FALSE(check.ok);
  CHECK(*check.failing_index == 10);
}

TEST_CASE("Voronoi table") {
  const IgusaTable igusa = igusa_table(kTop, faber_data());
  const VoronoiTable v = voronoi_table(igusa, Rational(-1680), Integer(1152));
  CHECK(v.at(0, 10) == q(-35, 24));
  for (unsigned k = 0; k <= 10; ++k) {
    CHECK(v.at(k, 0) == igusa.a[k]);
    for (unsigned l = 1; l <= 9 && k + l <= 10; ++l) CHECK(v.at(k, l).is_zero());
  }
  CHECK_THROWS_AS(v.at(1, 10), std::out_of_range);
  CHECK(v.get_or_zero(-1, 3).is_zero());
  CHECK(v.get_or_zero(3, 8).is_zero());
  CHECK(v.get_or_zero(0, 10) == q(-35, 24));
  CHECK_THROWS_AS(voronoi_table(igusa, Rational(-1680), Integer(0)), std::invalid_argument);
}

TEST_CASE("geometric basis") {
  const VoronoiTable v = voronoi_table(igusa_table(kTop, faber_data()), Rational(-1680), Integer(1152));
  CHECK(geometric_basis(v, 10, 0, 0) == kTop);
  CHECK(geometric_basis(v, 6, 4, 0) == q(-1, 3780));
  CHECK(geometric_basis(v, 0, 0, 10) == q(-35, 24));
  // a_0 + 4^10 * (-35/24)
  CHECK(geometric_basis(v, 0, 10, 0) == q(-2100560383, 1440));
  CHECK(geometric_basis(v, 0, 9, 1) == q(1146880, 3));
  CHECK_THROWS_AS(geometric_basis(v, 1, 1, 1), std::invalid_argument);
}
