#ifndef ELLQ_QSERIES_HPP
#define ELLQ_QSERIES_HPP

#include <vector>

#include "ellq/poly.hpp"

namespace ellq {

// Truncated q-series: exact rational coefficients of q^{offset + n/w},
// n = 0..size-1, valid modulo q^{offset + size/w}.  Arithmetic re-truncates
// to the minimum of the operands' valid ranges.
class QSeries {
 public:
  QSeries() : offset_(0), w_(1) {}
  // constant c, valid through exponent < bound
  static QSeries constant(const mpq_class& c, const mpq_class& bound);
  // monomial c*q^e, valid through exponent < bound
  static QSeries monomial(const mpq_class& c, const mpq_class& e, const mpq_class& bound);

  const mpq_class& offset() const { return offset_; }
  int grid() const { return w_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  // first exponent at which the series is no longer known
  mpq_class valid_until() const { return offset_ + mpq_class(static_cast<long>(c_.size()), w_); }
  bool is_zero() const;

  mpq_class coeff(const mpq_class& exponent) const;  // 0 if absent, throws past validity

  QSeries operator+(const QSeries& o) const;
  QSeries operator-(const QSeries& o) const;
  QSeries operator*(const QSeries& o) const;
  QSeries scaled(const mpq_class& c) const;
  // multiplicative inverse; requires the lowest stored coefficient nonzero
  QSeries inverse() const;
  bool operator==(const QSeries& o) const;

  std::string str() const;

 private:
  void trim();
  // regrid to a multiple of w_
  QSeries regrid(int neww) const;
  mpq_class offset_;
  int w_;
  std::vector<mpq_class> c_;
};

// prod_{n>=0} (1 - q^{a+bn}) up to (not including) exponent bound.
// errors: DivergentProduct for a <= 0.
QSeries qpochhammer_series(const mpq_class& a, const mpq_class& b, const mpq_class& bound);
// same for prod (1 + q^{a+bn})
QSeries qpochhammer_series_neg(const mpq_class& a, const mpq_class& b, const mpq_class& bound);

// q^{-l/24} (q;q)_inf^{-l}, coefficients valid through exponent < -l/24 + order
QSeries eta_inverse_power(int l, int order);

// independent partition-counting oracles (test support)
std::vector<mpz_class> partition_counts(int colors, int upto);

}  // namespace ellq

#endif
