#include "ellq/mode_scalar.hpp"

namespace ellq {

void Frac::canon() {
  if (den_.is_zero()) throw err("DivisionByZero", "zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  // move denominator monomial content into the numerator
  Expo dm = den_.min_exponents();
  Expo neg{};
  for (int k = 0; k < kMaxVars; ++k) neg[k] = static_cast<int16_t>(-dm[k]);
  den_ = den_.shifted(neg);
  num_ = num_.shifted(neg);
  // strip the numerator monomial for the gcd computation
  Expo nm = num_.min_exponents();
  Expo nneg{};
  for (int k = 0; k < kMaxVars; ++k) nneg[k] = static_cast<int16_t>(-nm[k]);
  Poly num0 = num_.shifted(nneg);
  Poly g = Poly::gcd(num0, den_);
  if (!g.is_constant()) {
    num0 = Poly::div_exact(num0, g);
    den_ = Poly::div_exact(den_, g);
  }
  num_ = num0.shifted(nm);
  mpq_class lc = den_.leading().c;
  if (lc != 1) {
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
  }
}

Frac Frac::operator-() const {
  Frac r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Frac Frac::operator+(const Frac& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return Frac(num_ + o.num_, den_);
  return Frac(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Frac Frac::operator-(const Frac& o) const { return *this + (-o); }

Frac Frac::operator*(const Frac& o) const {
  if (is_zero() || o.is_zero()) return Frac();
  // cross-reduce before multiplying to keep the gcd inputs small
  Frac a(num_, o.den_), b(o.num_, den_);
  Poly n = a.num_ * b.num_;
  Poly d = a.den_ * b.den_;
  Frac r;
  r.num_ = n;
  r.den_ = d;
  // cross-reduction leaves coprime parts, but a monomial/monic cleanup is
  // still needed
  r.canon();
  return r;
}

Frac Frac::operator/(const Frac& o) const { return *this * o.inv(); }

Frac Frac::inv() const {
  if (is_zero()) throw err("DivisionByZero", "inverting zero");
  return Frac(den_, num_);
}

Frac frac_pow(const Frac& b, int e) {
  Frac r = Frac::constant(1);
  Frac base = e < 0 ? b.inv() : b;
  int n = e < 0 ? -e : e;
  for (int i = 0; i < n; ++i) r = r * base;
  return r;
}

ModeScalar ModeScalar::operator+(const ModeScalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (invm_ != o.invm_)
    throw err("InvmMismatch", "adding scalars with different 1/m powers");
  return ModeScalar(f_ + o.f_, invm_);
}

ModeScalar ModeScalar::negate_mode() const {
  auto flip = [](const Poly& p) { return p.invert_var(kX).invert_var(kR); };
  Frac g = f_.map(flip);
  if (invm_ % 2 != 0) g = -g;
  return ModeScalar(g, invm_);
}

ModeScalar ModeScalar::at_p_zero() const {
  auto ev = [](const Poly& p) { return p.eval_var(kR, 0); };
  Poly n = ev(f_.num());
  Poly d = ev(f_.den());
  if (d.is_zero()) throw err("PoleAtSubstitution", "pole at p = 0");
  return ModeScalar(Frac(n, d), invm_);
}

std::string ModeScalar::str() const {
  static const std::array<std::string, kMaxVars> names = {"v", "X", "R", "?", "?", "?"};
  std::string s;
  if (f_.den().is_constant() && f_.den().constant_value() == 1) {
    s = f_.num().str(names);
  } else {
    s = "(" + f_.num().str(names) + ")/(" + f_.den().str(names) + ")";
  }
  if (invm_ == 1)
    s += " * 1/m";
  else if (invm_ != 0)
    s += " * (1/m)^" + std::to_string(invm_);
  return s;
}

ModeScalar ms_pow(const ModeScalar& b, int e) {
  return ModeScalar(frac_pow(b.frac(), e), b.invm_pow() * e);
}

ModeScalar bracket_mode(Half c) {
  Poly num = Poly::variable(kX, c.twice) - Poly::variable(kX, -c.twice);
  Poly den = Poly::variable(kV, 2) - Poly::variable(kV, -2);
  return ModeScalar(Frac(num, den));
}

ModeScalar bracket_plus_mode(Half c) {
  Poly num = Poly::variable(kX, c.twice) + Poly::variable(kX, -c.twice);
  Poly den = Poly::variable(kV, 2) - Poly::variable(kV, -2);
  return ModeScalar(Frac(num, den));
}

ModeScalar dressing(int level) {
  Poly one = Poly::constant(1);
  Poly num = (one - Poly::variable(kR)) * Poly::variable(kX, -2 * level);
  Poly den = one - Poly::variable(kR) * Poly::variable(kX, -4 * level);
  return ModeScalar(Frac(num, den));
}

ModeScalar qnum(Half a) {
  Poly num = Poly::variable(kV, 2 * a.twice) - Poly::variable(kV, -2 * a.twice);
  Poly den = Poly::variable(kV, 2) - Poly::variable(kV, -2);
  return ModeScalar(Frac(num, den));
}

ModeScalar substitute_mode(const ModeScalar& s, int m) {
  if (m == 0) throw err("BadArgument", "substitute_mode needs m != 0");
  auto sub = [m](const Poly& p) { return p.subst_power(kX, kV, m); };
  Poly n = sub(s.frac().num());
  Poly d = sub(s.frac().den());
  if (d.is_zero()) throw err("PoleAtSubstitution", "denominator vanishes at this mode");
  Frac f(n, d);
  mpq_class inv_m(1, m);
  mpq_class scale = 1;
  int k = s.invm_pow();
  for (int i = 0; i < (k < 0 ? -k : k); ++i) scale *= (k < 0) ? mpq_class(m) : inv_m;
  return ModeScalar(f * Frac::constant(scale), 0);
}

}  // namespace ellq
