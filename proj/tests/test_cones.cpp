#include "a4/cones.hpp"
#include "a4/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

using namespace a4;

namespace {

IntVector v(std::initializer_list<long> xs) {
  IntVector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::vector<std::vector<std::size_t>> incidences(const Cone& c) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& f : enumerate_facets(c)) out.push_back(f.incident);
  return out;
}

}  // namespace

TEST_CASE("ray sets") {
  const RaySet s = RaySet::of({0, 3, 5});
  CHECK(s.size() == 3);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(4));
  CHECK_FALSE(s.contains(200));
  CHECK(s.with(4).size() == 4);
  CHECK(s.without(3) == RaySet::of({0, 5}));
  CHECK(RaySet::of({0, 5}).subset_of(s));
  CHECK_FALSE(s.subset_of(RaySet::of({0, 5})));
  CHECK(s.indices() == std::vector<std::size_t>{0, 3, 5});
  CHECK((s & RaySet::of({3, 7})) == RaySet::of({3}));
  CHECK(RaySet().empty());
}

TEST_CASE("cone construction normalizes and validates") {
  const Cone c({v({2, 4}), v({0, 3})});
  CHECK(c.generators()[0] == v({1, 2}));
  CHECK(c.generators()[1] == v({0, 1}));
  CHECK(c.dim() == 2);
  CHECK(cone_dim(c) == 2);
  CHECK_THROWS_AS(Cone({v({0, 0})}), std::invalid_argument);
  CHECK_THROWS_AS(Cone({v({1, 1}), v({2, 2})}), std::invalid_argument);
  CHECK_THROWS_AS(Cone({v({1, 1}), v({1, 1, 0})}), std::invalid_argument);
}

TEST_CASE("facets of the positive orthant") {
  const Cone c({v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1})});
  const auto facets = enumerate_facets(c);
  REQUIRE(facets.size() == 3);
  CHECK(facets[0].incident == std::vector<std::size_t>{0, 1});
  CHECK(facets[0].functional == v({0, 0, 1}));
}

TEST_CASE("facets of a square pyramid") {
  const Cone c({v({1, 1, 1}), v({-1, 1, 1}), v({-1, -1, 1}), v({1, -1, 1})});
  const auto f = incidences(c);
  CHECK(f == std::vector<std::vector<std::size_t>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
  for (const auto& facet : enumerate_facets(c))
    for (std::size_t i = 0; i < 4; ++i) {
      const Integer value = dot(facet.functional, c.generators()[i]);
      if (std::ranges::find(facet.incident, i) != facet.incident.end())
        CHECK(value == 0);
      else
        CHECK(value > 0);
    }
}

TEST_CASE("a cone that is not full-dimensional") {
  const Cone c({v({1, 0, 1}), v({0, 1, 1}), v({1, 1, 2})});
  CHECK(c.dim() == 2);
  CHECK(incidences(c) == std::vector<std::vector<std::size_t>>{{0}, {1}});
}

TEST_CASE("a cone containing a line is rejected") {
  const Cone c({v({1, 0}), v({-1, 0}), v({0, 1})});
  CHECK_THROWS_AS(enumerate_facets(c), std::invalid_argument);
}

TEST_CASE("facet enumeration matches brute force and ignores generator order") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> coord(-3, 3);
  int compared = 0;
  while (compared < 300) {
    const std::size_t n = 2 + compared % 3;
    const std::size_t count = n + static_cast<std::size_t>(compared % (9 - n));
    std::vector<IntVector> gens;
    while (gens.size() < count) {
      IntVector g(n);
      Integer sum = 0;
      for (auto& x : g) sum += (x = coord(rng));
      if (sum > 0) gens.push_back(g);
    }
    std::optional<Cone> c;
    try {
      c.emplace(gens);
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (c->dim() != n) continue;
    const auto ours = incidences(*c);
    CHECK(ours == oracle::facet_incidences(c->generators()));

    // Relabel generators and map the facets back.
    std::vector<std::size_t> perm(c->size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<IntVector> shuffled;
    for (std::size_t i : perm) shuffled.push_back(c->generators()[i]);
    std::vector<std::vector<std::size_t>> back;
    for (const auto& inc : incidences(Cone(shuffled))) {
      std::vector<std::size_t> orig;
      for (std::size_t i : inc) orig.push_back(perm[i]);
      std::ranges::sort(orig);
      back.push_back(orig);
    }
    std::ranges::sort(back);
    CHECK(back == ours);
    ++compared;
  }
}

TEST_CASE("basic cones") {
  CHECK(is_basic(Cone({v({1, 0}), v({1, 1})}), 2));
  CHECK_FALSE(is_basic(Cone({v({1, 0}), v({1, 2})}), 2));
  // Not full-dimensional: a primitive vector is always part of a basis.
  CHECK(is_basic(Cone({v({2, 3, 0})}), 3));
  CHECK_FALSE(is_basic(Cone({v({1, 1, 0}), v({1, -1, 0})}), 3));
  CHECK(is_basic(Cone({v({1, 1, 0}), v({1, 0, 0})}), 3));
  CHECK_THROWS_AS(is_basic(Cone({v({1, 0}), v({0, 1}), v({1, 1})}), 2), std::invalid_argument);
  CHECK_THROWS_AS(is_basic(Cone({v({1, 0})}), 3), std::invalid_argument);
}

TEST_CASE("fan cone lookup") {
  const SimplicialFan fan = oracle::blowup_star();
  CHECK(fan.ray_count() == 3);
  CHECK(spans_cone(fan, RaySet::of({0, 1})));
  CHECK(spans_cone(fan, RaySet::of({2})));
  CHECK_FALSE(spans_cone(fan, RaySet::of({1, 2})));
  CHECK_THROWS_AS(spans_cone(fan, RaySet::of({5})), std::out_of_range);
  CHECK(fan.cone(RaySet::of({0, 2})).generators()[1] == v({0, 1}));
}
