#include "ellq/qseries.hpp"

#include <numeric>

namespace ellq {

namespace {
// largest integer n with n/w <= x
long floor_scaled(const mpq_class& x, int w) {
  mpq_class s = x * w;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), s.get_num().get_mpz_t(), s.get_den().get_mpz_t());
  return q.get_si();
}
}  // namespace

void QSeries::trim() {
  size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead > 0 && lead < c_.size()) {
    offset_ += mpq_class(static_cast<long>(lead), w_);
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
  }
}

QSeries QSeries::constant(const mpq_class& c, const mpq_class& bound) {
  return monomial(c, 0, bound);
}

QSeries QSeries::monomial(const mpq_class& c, const mpq_class& e, const mpq_class& bound) {
  QSeries s;
  s.offset_ = e;
  mpq_class span = bound - e;
  long w = e.get_den().get_si();
  w = std::lcm(w, span.get_den().get_si());
  s.w_ = static_cast<int>(w);
  long n = floor_scaled(span, s.w_);
  if (n < 0) n = 0;
  s.c_.assign(static_cast<size_t>(n), 0);
  if (!s.c_.empty()) s.c_[0] = c;
  return s;
}

bool QSeries::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

mpq_class QSeries::coeff(const mpq_class& exponent) const {
  if (exponent >= valid_until())
    throw err("CutoffExceeded", "coefficient beyond series validity");
  mpq_class rel = (exponent - offset_) * w_;
  if (rel < 0 || rel.get_den() != 1) return 0;
  return c_[static_cast<size_t>(rel.get_num().get_si())];
}

QSeries QSeries::regrid(int neww) const {
  if (neww == w_) return *this;
  QSeries s;
  s.offset_ = offset_;
  s.w_ = neww;
  int f = neww / w_;
  s.c_.assign(c_.size() * static_cast<size_t>(f), 0);
  for (size_t i = 0; i < c_.size(); ++i) s.c_[i * static_cast<size_t>(f)] = c_[i];
  return s;
}

QSeries QSeries::operator+(const QSeries& o) const {
  if (c_.empty()) return o;
  if (o.c_.empty()) return *this;
  mpq_class diff = offset_ - o.offset_;
  long w = std::lcm(std::lcm(static_cast<long>(w_), static_cast<long>(o.w_)),
                    diff.get_den().get_si());
  QSeries a = regrid(static_cast<int>(w)), b = o.regrid(static_cast<int>(w));
  mpq_class off = std::min(a.offset_, b.offset_);
  mpq_class until = std::min(a.valid_until(), b.valid_until());
  QSeries s;
  s.offset_ = off;
  s.w_ = static_cast<int>(w);
  long n = floor_scaled(until - off, s.w_);
  if (n < 0) n = 0;
  s.c_.assign(static_cast<size_t>(n), 0);
  auto fold = [&](const QSeries& x) {
    mpq_class rel = (x.offset_ - off) * w;
    long base = rel.get_num().get_si();
    for (size_t i = 0; i < x.c_.size(); ++i) {
      long idx = base + static_cast<long>(i);
      if (idx >= 0 && idx < n) s.c_[static_cast<size_t>(idx)] += x.c_[i];
    }
  };
  fold(a);
  fold(b);
  s.trim();
  return s;
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + o.scaled(-1); }

QSeries QSeries::scaled(const mpq_class& k) const {
  QSeries s = *this;
  for (auto& x : s.c_) x *= k;
  return s;
}

QSeries QSeries::operator*(const QSeries& o) const {
  long w = std::lcm(static_cast<long>(w_), static_cast<long>(o.w_));
  QSeries a = regrid(static_cast<int>(w)), b = o.regrid(static_cast<int>(w));
  QSeries s;
  s.offset_ = a.offset_ + b.offset_;
  s.w_ = static_cast<int>(w);
  mpq_class until = std::min(a.valid_until() + b.offset_, b.valid_until() + a.offset_);
  long n = floor_scaled(until - s.offset_, s.w_);
  if (n < 0) n = 0;
  s.c_.assign(static_cast<size_t>(n), 0);
  for (size_t i = 0; i < a.c_.size() && static_cast<long>(i) < n; ++i) {
    if (a.c_[i] == 0) continue;
    size_t jmax = std::min(b.c_.size(), static_cast<size_t>(n - static_cast<long>(i)));
    for (size_t j = 0; j < jmax; ++j) {
      if (b.c_[j] == 0) continue;
      s.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  s.trim();
  return s;
}

QSeries QSeries::inverse() const {
  if (c_.empty() || c_[0] == 0)
    throw err("NotInvertible", "series inverse needs a nonzero lowest coefficient");
  QSeries s;
  s.offset_ = -offset_;
  s.w_ = w_;
  s.c_.assign(c_.size(), 0);
  mpq_class lead = c_[0];
  s.c_[0] = 1 / lead;
  for (size_t n = 1; n < c_.size(); ++n) {
    mpq_class acc = 0;
    for (size_t k = 1; k <= n; ++k)
      if (c_[k] != 0) acc += c_[k] * s.c_[n - k];
    s.c_[n] = -acc / lead;
  }
  return s;
}

bool QSeries::operator==(const QSeries& o) const { return (*this - o).is_zero(); }

std::string QSeries::str() const {
  std::string out;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    mpq_class e = offset_ + mpq_class(static_cast<long>(i), w_);
    if (!first) out += " + ";
    first = false;
    out += mpq_str(c_[i]) + "*q^(" + mpq_str(e) + ")";
  }
  if (first) out = "0";
  return out + " + O(q^(" + mpq_str(valid_until()) + "))";
}

QSeries qpochhammer_series(const mpq_class& a, const mpq_class& b, const mpq_class& bound) {
  if (a <= 0) throw err("DivergentProduct", "q-Pochhammer needs a positive starting exponent");
  QSeries prod = QSeries::constant(1, bound);
  for (mpq_class e = a; e < bound; e += b)
    prod = prod * (QSeries::constant(1, bound) - QSeries::monomial(1, e, bound));
  return prod;
}

QSeries qpochhammer_series_neg(const mpq_class& a, const mpq_class& b, const mpq_class& bound) {
  if (a <= 0) throw err("DivergentProduct", "q-Pochhammer needs a positive starting exponent");
  QSeries prod = QSeries::constant(1, bound);
  for (mpq_class e = a; e < bound; e += b)
    prod = prod * (QSeries::constant(1, bound) + QSeries::monomial(1, e, bound));
  return prod;
}

QSeries eta_inverse_power(int l, int order) {
  if (l == 0) return QSeries::constant(1, order);
  mpq_class off(-l, 24);
  QSeries euler = qpochhammer_series(1, 1, order + 1);
  QSeries inv = euler.inverse();
  QSeries powr = QSeries::constant(1, order + 1);
  for (int i = 0; i < l; ++i) powr = powr * inv;
  QSeries pre = QSeries::monomial(1, off, off + order + 1);
  return pre * powr;
}

std::vector<mpz_class> partition_counts(int colors, int upto) {
  std::vector<mpz_class> p(static_cast<size_t>(upto + 1), 0);
  p[0] = 1;
  for (int part = 1; part <= upto; ++part)
    for (int c = 0; c < colors; ++c)
      for (int n = part; n <= upto; ++n)
        p[static_cast<size_t>(n)] += p[static_cast<size_t>(n - part)];
  return p;
}

}  // namespace ellq
