#ifndef ELLQ_MODE_SCALAR_HPP
#define ELLQ_MODE_SCALAR_HPP

#include "ellq/poly.hpp"

namespace ellq {

// Half-integer stored as twice its value.
struct Half {
  int twice = 0;
  Half() = default;
  Half(int t) : twice(t) {}
  static Half of_int(int n) { return Half{2 * n}; }
  Half operator-() const { return Half{-twice}; }
  Half operator+(Half o) const { return Half{twice + o.twice}; }
  Half operator-(Half o) const { return Half{twice - o.twice}; }
  bool operator==(Half o) const { return twice == o.twice; }
  bool is_int() const { return twice % 2 == 0; }
  mpq_class as_mpq() const { return mpq_class(twice, 2); }
};

// Reduced fraction of multivariate Laurent polynomials.  Canonical form:
// denominator has min exponent 0 in every variable, is gcd-coprime to the
// numerator and monic under graded lex; all monomial units live in the
// numerator.  Equality is syntactic equality of canonical forms.
class Frac {
 public:
  Frac() : num_(), den_(Poly::constant(1)) {}
  explicit Frac(const Poly& num) : num_(num), den_(Poly::constant(1)) {}
  Frac(const Poly& num, const Poly& den) : num_(num), den_(den) { canon(); }
  static Frac constant(const mpq_class& c) { return Frac(Poly::constant(c)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  Frac operator-() const;
  Frac operator+(const Frac& o) const;
  Frac operator-(const Frac& o) const;
  Frac operator*(const Frac& o) const;
  Frac operator/(const Frac& o) const;
  bool operator==(const Frac& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Frac& o) const { return !(*this == o); }

  Frac inv() const;
  // apply f to both numerator and denominator, then recanonicalize
  template <typename F>
  Frac map(F&& f) const {
    return Frac(f(num_), f(den_));
  }

 private:
  void canon();
  Poly num_, den_;
};

Frac frac_pow(const Frac& b, int e);

// variable slots of the trivariate mode field
constexpr int kV = 0;  // v = q^{1/2}
constexpr int kX = 1;  // X = q^{m/2}
constexpr int kR = 2;  // R = p^m

// An exact rational function in (v, X, R) together with an integer power of
// the formal token 1/m.  Houses every per-mode structure constant.
class ModeScalar {
 public:
  ModeScalar() = default;
  explicit ModeScalar(Frac f, int invm_pow = 0) : f_(std::move(f)), invm_(invm_pow) {
    if (f_.is_zero()) invm_ = 0;
  }
  static ModeScalar constant(const mpq_class& c) { return ModeScalar(Frac::constant(c)); }
  static ModeScalar invm() { return ModeScalar(Frac::constant(1), 1); }
  // q^a for half-integer a
  static ModeScalar q_power(Half a) { return ModeScalar(Frac(Poly::variable(kV, a.twice))); }
  // q^{am} = X^{2a} for half-integer a
  static ModeScalar qm_power(Half a) { return ModeScalar(Frac(Poly::variable(kX, a.twice))); }
  static ModeScalar R_power(int k) { return ModeScalar(Frac(Poly::variable(kR, k))); }

  const Frac& frac() const { return f_; }
  int invm_pow() const { return invm_; }
  bool is_zero() const { return f_.is_zero(); }

  ModeScalar operator-() const { return ModeScalar(-f_, invm_); }
  ModeScalar operator+(const ModeScalar& o) const;
  ModeScalar operator-(const ModeScalar& o) const { return *this + (-o); }
  ModeScalar operator*(const ModeScalar& o) const { return ModeScalar(f_ * o.f_, invm_ + o.invm_); }
  ModeScalar operator/(const ModeScalar& o) const { return ModeScalar(f_ / o.f_, invm_ - o.invm_); }
  ModeScalar& operator+=(const ModeScalar& o) { return *this = *this + o; }
  ModeScalar& operator-=(const ModeScalar& o) { return *this = *this - o; }
  ModeScalar& operator*=(const ModeScalar& o) { return *this = *this * o; }
  bool operator==(const ModeScalar& o) const { return invm_ == o.invm_ && f_ == o.f_; }
  bool operator!=(const ModeScalar& o) const { return !(*this == o); }

  ModeScalar inv() const { return ModeScalar(f_.inv(), -invm_); }
  // m -> -m: X -> 1/X, R -> 1/R, 1/m -> -1/m
  ModeScalar negate_mode() const;
  // p -> 0 degeneration: R -> 0 (requires no pole at R=0)
  ModeScalar at_p_zero() const;

  std::string str() const;

 private:
  Frac f_;
  int invm_ = 0;
};

ModeScalar ms_pow(const ModeScalar& b, int e);

// [cm] = (q^{cm}-q^{-cm})/(q-q^{-1})
ModeScalar bracket_mode(Half c);
// [cm]_+ = (q^{cm}+q^{-cm})/(q-q^{-1})
ModeScalar bracket_plus_mode(Half c);
// (1-p^m)/(1-p*^m) q^{-cm} with p* = p q^{-2c}
ModeScalar dressing(int level);
// constant q-number [a] for half-integer a (not mode dependent)
ModeScalar qnum(Half a);

// X -> v^m elimination; invm resolved as the literal rational 1/m.
// Throws err("PoleAtSubstitution") when the denominator vanishes.
ModeScalar substitute_mode(const ModeScalar& s, int m);

}  // namespace ellq

#endif
