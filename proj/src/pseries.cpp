#include "ellq/pseries.hpp"

#include <algorithm>

namespace ellq {

void PSeries::trim() {
  if (valid_ >= kExact) {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  if (lead > 0) {
    off_ += static_cast<int>(lead);
    if (valid_ < kExact) valid_ -= static_cast<int>(lead);
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
  }
  if (c_.empty() && valid_ >= kExact) off_ = 0;
}

bool PSeries::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

Frac PSeries::coeff(int ppow) const {
  if (ppow >= valid_until()) throw err("CutoffExceeded", "p power beyond series validity");
  int idx = ppow - off_;
  if (idx < 0 || idx >= static_cast<int>(c_.size())) return Frac();
  return c_[static_cast<size_t>(idx)];
}

PSeries PSeries::operator+(const PSeries& o) const {
  if (c_.empty() && valid_ >= kExact) return o;
  if (o.c_.empty() && o.valid_ >= kExact) return *this;
  PSeries s;
  int u = std::min(valid_until(), o.valid_until());
  int lo = std::min(off_, o.off_);
  s.off_ = lo;
  if (u >= kExact) {
    s.valid_ = kExact;
    u = std::max(off_ + static_cast<int>(c_.size()), o.off_ + static_cast<int>(o.c_.size()));
  } else {
    s.valid_ = u - lo;
  }
  s.c_.assign(static_cast<size_t>(std::max(u - lo, 0)), Frac());
  auto fold = [&](const PSeries& x) {
    for (size_t i = 0; i < x.c_.size(); ++i) {
      int idx = x.off_ + static_cast<int>(i) - lo;
      if (idx >= 0 && idx < static_cast<int>(s.c_.size()))
        s.c_[static_cast<size_t>(idx)] = s.c_[static_cast<size_t>(idx)] + x.c_[i];
    }
  };
  fold(*this);
  fold(o);
  s.trim();
  return s;
}

PSeries PSeries::operator-(const PSeries& o) const {
  return *this + o.scaled(Frac::constant(-1));
}

PSeries PSeries::scaled(const Frac& f) const {
  PSeries s = *this;
  for (auto& x : s.c_) x = x * f;
  s.trim();
  return s;
}

PSeries PSeries::operator*(const PSeries& o) const {
  PSeries s;
  s.off_ = off_ + o.off_;
  bool exact = valid_ >= kExact && o.valid_ >= kExact;
  int len;
  if (exact) {
    s.valid_ = kExact;
    len = static_cast<int>(c_.size() + o.c_.size());
    if (len > 0) --len;
    if (c_.empty() || o.c_.empty()) len = 0;
  } else {
    int u = std::min(valid_until() + o.off_, o.valid_until() + off_);
    len = std::max(u - s.off_, 0);
    s.valid_ = len;
  }
  s.c_.assign(static_cast<size_t>(len), Frac());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size() && i + j < s.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      s.c_[i + j] = s.c_[i + j] + c_[i] * o.c_[j];
    }
  }
  s.trim();
  return s;
}

PSeries PSeries::inverse() const {
  PSeries t = *this;
  t.trim();
  if (t.c_.empty() || t.c_[0].is_zero())
    throw err("NotInvertible", "p-series inverse needs a nonzero lowest coefficient");
  if (t.valid_ >= kExact && t.c_.size() > 1)
    throw err("NotInvertible", "inverse of an exact multi-term p-polynomial needs a truncation");
  PSeries s;
  s.off_ = -t.off_;
  s.valid_ = t.valid_ >= kExact ? kExact : t.valid_;
  size_t n = t.valid_ >= kExact ? 1 : t.c_.size();
  s.c_.assign(n, Frac());
  Frac lead = t.c_[0].inv();
  s.c_[0] = lead;
  for (size_t k = 1; k < n; ++k) {
    Frac acc;
    for (size_t i = 1; i <= k && i < t.c_.size(); ++i)
      acc = acc + t.c_[i] * s.c_[k - i];
    s.c_[k] = -(acc * lead);
  }
  return s;
}

PSeries PSeries::truncated(int bound) const {
  if (valid_until() <= bound) return *this;
  PSeries s;
  s.off_ = off_;
  s.valid_ = bound - off_;
  if (s.valid_ < 0) s.valid_ = 0;
  size_t n = static_cast<size_t>(std::max(bound - off_, 0));
  s.c_.assign(c_.begin(), c_.begin() + static_cast<long>(std::min(n, c_.size())));
  s.c_.resize(n, Frac());
  s.trim();
  return s;
}

Frac PSeries::at_p_zero() const {
  for (size_t i = 0; i < c_.size(); ++i) {
    int p = off_ + static_cast<int>(i);
    if (p < 0 && !c_[i].is_zero())
      throw err("PoleAtSubstitution", "negative p power at p = 0");
  }
  int idx = -off_;
  if (idx < 0 || idx >= static_cast<int>(c_.size())) return Frac();
  return c_[static_cast<size_t>(idx)];
}

std::string PSeries::str() const {
  static const std::array<std::string, kMaxVars> nm = {"v", "X", "R", "?", "?", "?"};
  std::string out;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) out += " + ";
    first = false;
    out += "(" + c_[i].num().str(nm) + ")";
    if (!(c_[i].den().is_constant()))
      out += "/(" + c_[i].den().str(nm) + ")";
    int p = off_ + static_cast<int>(i);
    if (p != 0) out += "*p^" + std::to_string(p);
  }
  if (first) out = "0";
  if (valid_ < kExact) out += " + O(p^" + std::to_string(valid_until()) + ")";
  return out;
}

PSeries mode_to_pseries(const ModeScalar& s, int m, int bound) {
  ModeScalar sub = substitute_mode(s, m);  // eliminates X and 1/m
  auto poly_to_ps = [m](const Poly& p) {
    // group by R exponent; R^k -> p^{km}
    PSeries acc;
    if (p.is_zero()) return acc;
    int lo = p.min_var_exponent(kR), hi = p.max_var_exponent(kR);
    for (int k = lo; k <= hi; ++k) {
      PolyBuilder b;
      for (const auto& tm : p.terms())
        if (tm.e[kR] == k) {
          Expo e = tm.e;
          e[kR] = 0;
          b.add(e, tm.c);
        }
      Poly part = b.build();
      if (part.is_zero()) continue;
      PSeries piece = PSeries::from_frac(Frac(part));
      acc += piece * PSeries::p_power(k * m);
    }
    return acc;
  };
  PSeries num = poly_to_ps(sub.frac().num());
  PSeries den = poly_to_ps(sub.frac().den());
  PSeries dinv = den.truncated(den.low() + std::max(bound - num.low() + den.low(), 1)).inverse();
  return (num * dinv).truncated(bound);
}

}  // namespace ellq
