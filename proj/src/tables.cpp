#include "a4/tables.hpp"

#include <stdexcept>

namespace a4 {

FaberData faber_data() {
  FaberData d;
  d.b[9] = Rational(1, 113400);
  d.b[8] = 0;
  d.b[7] = 0;
  d.b[6] = Rational(1, 3780);
  d.b[5] = Rational(-2, 945);
  d.b[4] = 0;
  d.b[3] = Rational(1759, 1680);
  d.b[2] = Rational(-1759, 210);
  d.b[1] = Rational(-1636249, 1080);
  d.b[0] = Rational(Integer(-251987683), Integer(4320));
  return d;
}

IgusaTable igusa_table(const Rational& a_top, const FaberData& b) {
  IgusaTable t;
  t.a[10] = a_top;
  for (unsigned k = 10; k >= 1; --k) t.a[k - 1] = Rational(8) * t.a[k] - b.b[k - 1];
  return t;
}

RecurrenceCheck verify_recurrence(const IgusaTable& igusa, const FaberData& b) {
  for (unsigned k = 1; k <= 10; ++k)
    if (b.b[k - 1] != Rational(8) * igusa.a[k] - igusa.a[k - 1]) return {false, k};
  return {};
}

const Rational& VoronoiTable::at(unsigned k, unsigned l) const {
  if (k + l > kTopDegree) throw std::out_of_range("VoronoiTable: k + l exceeds 10");
  return values_[k][l];
}

Rational& VoronoiTable::at(unsigned k, unsigned l) {
  if (k + l > kTopDegree) throw std::out_of_range("VoronoiTable: k + l exceeds 10");
  return values_[k][l];
}

Rational VoronoiTable::get_or_zero(long k, long l) const {
  if (k < 0 || l < 0 || k + l > static_cast<long>(kTopDegree)) return 0;
  return values_[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
}

VoronoiTable voronoi_table(const IgusaTable& igusa, const Rational& e10_toric, const Integer& stabilizer_order) {
  if (stabilizer_order == 0) throw std::invalid_argument("voronoi_table: stabilizer order is zero");
  VoronoiTable v;
  for (unsigned k = 0; k <= kTopDegree; ++k) {
    v.at(k, 0) = igusa.a[k];
    for (unsigned l = 1; k + l <= kTopDegree && l <= 9; ++l) v.at(k, l) = 0;
  }
  v.at(0, 10) = e10_toric / Rational(stabilizer_order);
  return v;
}

Rational geometric_basis(const VoronoiTable& v, unsigned k, unsigned m, unsigned l) {
  if (k + m + l != kTopDegree) throw std::invalid_argument("geometric_basis: degree must be 10");
  Rational sum;
  Rational power = 1;  // (-4)^j
  for (unsigned j = 0; j <= m; ++j) {
    sum += Rational(binomial(m, j)) * power * v.get_or_zero(k, static_cast<long>(l + j));
    power *= Rational(-4);
  }
  return sum;
}

}  // namespace a4
