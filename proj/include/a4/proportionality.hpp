// Top self-intersection of the Hodge line bundle L on a toroidal
// compactification of A_g via Hirzebruch-Mumford proportionality:
//
//   L^{g(g+1)/2} = (g(g+1)/2)! * 2^{(g-1)(g-2)/2} * prod_{j=1}^{g} (j-1)!/(2j)! * |B_{2j}|
#pragma once

#include "a4/exact.hpp"

namespace a4 {

/// B_n from sum_{k=0}^{n} binom(n+1, k) B_k = 0 with B_0 = 1, B_1 = -1/2.
/// Odd n > 1 give 0.
Rational bernoulli(unsigned n);

enum class BernoulliSign {
  Absolute,  // |B_2j|, the default
  Signed,    // B_2j as written; negative for g = 2 (diagnostic only)
};

struct ProportionalityResult {
  unsigned genus = 0;
  unsigned top_power = 0;  // g(g+1)/2
  Rational value;
  Rational stack_value;  // value / 2, the number on the stack where -1 acts
};

/// Throws std::invalid_argument for g == 0.
ProportionalityResult l_top(unsigned genus, BernoulliSign sign = BernoulliSign::Absolute);

}  // namespace a4
