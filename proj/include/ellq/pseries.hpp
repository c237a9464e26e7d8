#ifndef ELLQ_PSERIES_HPP
#define ELLQ_PSERIES_HPP

#include <limits>
#include <vector>

#include "ellq/mode_scalar.hpp"

namespace ellq {

// Truncated Laurent series in p with exact rational-function-of-v
// coefficients.  `valid` counts known coefficients starting at `off`; exact
// elements carry a large sentinel validity so truncation is always governed
// by genuinely truncated operands.
class PSeries {
 public:
  static constexpr int kExact = 1 << 20;

  PSeries() : off_(0) {}
  static PSeries from_frac(const Frac& c) {
    PSeries s;
    if (!c.is_zero()) s.c_.push_back(c);
    s.valid_ = kExact;
    return s;
  }
  static PSeries constant(const mpq_class& c) { return from_frac(Frac::constant(c)); }
  static PSeries v_power(int e) { return from_frac(Frac(Poly::variable(kV, e))); }
  static PSeries p_power(int e) {
    PSeries s = constant(1);
    s.off_ = e;
    return s;
  }
  // truncated zero: known to vanish below p^{bound}
  static PSeries zero_to(int bound) {
    PSeries s;
    s.off_ = bound;
    s.valid_ = 0;
    return s;
  }

  bool is_zero() const;
  int low() const { return off_; }
  // first unknown p power
  int valid_until() const {
    if (valid_ >= kExact) return kExact;
    return off_ + static_cast<int>(c_.size());
  }
  Frac coeff(int ppow) const;  // throws CutoffExceeded past validity

  PSeries operator+(const PSeries& o) const;
  PSeries operator-(const PSeries& o) const;
  PSeries operator*(const PSeries& o) const;
  PSeries& operator+=(const PSeries& o) { return *this = *this + o; }
  PSeries scaled(const Frac& f) const;
  PSeries inverse() const;  // lowest coefficient must be nonzero
  PSeries truncated(int bound) const;
  // drop all positive p powers and any negative ones must be absent
  Frac at_p_zero() const;
  bool operator==(const PSeries& o) const { return (*this - o).is_zero(); }

  std::string str() const;

 private:
  void trim();
  int off_ = 0;
  int valid_ = kExact;  // number of known coefficients from off_
  std::vector<Frac> c_;
};

// expansion of a ModeScalar at a concrete mode m: substitute X -> v^m,
// R -> p^m and expand the result as a p-series to the given bound
PSeries mode_to_pseries(const ModeScalar& s, int m, int bound);

}  // namespace ellq

#endif
