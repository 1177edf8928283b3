#include "a4/proportionality.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace a4 {

namespace {

// B_0..B_n, extended on demand.
class BernoulliTable {
 public:
  Rational get(unsigned n) {
    std::lock_guard lock(mu_);
    while (values_.size() <= n) extend();
    return values_[n];
  }

 private:
  void extend() {
    const auto m = static_cast<unsigned long>(values_.size());
    if (m == 0) {
      values_.emplace_back(1);
      return;
    }
    // B_m = -1/(m+1) * sum_{k<m} binom(m+1, k) B_k
    Rational s;
    for (unsigned long k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * values_[k];
    values_.push_back(-s / Rational(static_cast<long>(m + 1)));
  }

  std::mutex mu_;
  std::vector<Rational> values_;
};

BernoulliTable& table() {
  static BernoulliTable t;
  return t;
}

}  // namespace

Rational bernoulli(unsigned n) { return table().get(n); }

ProportionalityResult l_top(unsigned genus, BernoulliSign sign) {
  if (genus == 0) throw std::invalid_argument("l_top: genus must be positive");
  const unsigned long g = genus;
  const unsigned long top = g * (g + 1) / 2;
  Rational value = Rational(factorial(top));
  Integer two_power;
  mpz_ui_pow_ui(two_power.get_mpz_t(), 2, (g - 1) * (g - 2) / 2);
  value *= Rational(two_power);
  for (unsigned long j = 1; j <= g; ++j) {
    Rational b = bernoulli(static_cast<unsigned>(2 * j));
    if (sign == BernoulliSign::Absolute) b = b.abs();
    value *= Rational(factorial(j - 1), factorial(2 * j)) * b;
  }
  return {genus, static_cast<unsigned>(top), value, value / Rational(2)};
}

}  // namespace a4
