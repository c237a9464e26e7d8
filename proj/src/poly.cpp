#include "ellq/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>

namespace ellq {

int expo_cmp(const Expo& a, const Expo& b) {
  long da = 0, db = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = 0; i < kMaxVars; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

namespace {
struct ExpoLess {
  bool operator()(const Expo& a, const Expo& b) const { return expo_cmp(a, b) > 0; }
};
}  // namespace

void Poly::normalize() {
  std::sort(t_.begin(), t_.end(),
            [](const Term& a, const Term& b) { return expo_cmp(a.e, b.e) > 0; });
  std::vector<Term> out;
  out.reserve(t_.size());
  for (auto& tm : t_) {
    if (!out.empty() && expo_cmp(out.back().e, tm.e) == 0)
      out.back().c += tm.c;
    else
      out.push_back(tm);
    if (!out.empty() && out.back().c == 0) out.pop_back();
  }
  // a merge above may zero an earlier term only at the back, handled inline
  t_.clear();
  for (auto& tm : out)
    if (tm.c != 0) t_.push_back(std::move(tm));
}

Poly PolyBuilder::build() {
  Poly p;
  p.t_ = std::move(t_);
  p.normalize();
  return p;
}

Poly Poly::constant(const mpq_class& c) {
  Poly p;
  if (c != 0) p.t_.push_back({Expo{}, c});
  return p;
}

Poly Poly::variable(int var, int power) {
  Expo e{};
  e[var] = static_cast<int16_t>(power);
  return monomial(1, e);
}

Poly Poly::monomial(const mpq_class& c, const Expo& e) {
  Poly p;
  if (c != 0) p.t_.push_back({e, c});
  return p;
}

bool Poly::is_constant() const {
  if (t_.empty()) return true;
  return t_.size() == 1 && t_[0].e == Expo{};
}

mpq_class Poly::constant_value() const {
  if (t_.empty()) return 0;
  if (!is_constant()) throw err("NotConstant", "polynomial is not constant");
  return t_[0].c;
}

bool Poly::equals(const Poly& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (size_t i = 0; i < t_.size(); ++i)
    if (t_[i].e != o.t_[i].e || t_[i].c != o.t_[i].c) return false;
  return true;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& tm : p.t_) tm.c = -tm.c;
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.t_.reserve(t_.size() + o.t_.size());
  size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    int c = expo_cmp(t_[i].e, o.t_[j].e);
    if (c > 0)
      r.t_.push_back(t_[i++]);
    else if (c < 0)
      r.t_.push_back(o.t_[j++]);
    else {
      mpq_class s = t_[i].c + o.t_[j].c;
      if (s != 0) r.t_.push_back({t_[i].e, s});
      ++i, ++j;
    }
  }
  for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
  for (; j < o.t_.size(); ++j) r.t_.push_back(o.t_[j]);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::map<Expo, mpq_class, ExpoLess> acc;
  for (const auto& a : t_)
    for (const auto& b : o.t_) {
      Expo e;
      for (int k = 0; k < kMaxVars; ++k) e[k] = static_cast<int16_t>(a.e[k] + b.e[k]);
      auto it = acc.find(e);
      if (it == acc.end())
        acc.emplace(e, a.c * b.c);
      else
        it->second += a.c * b.c;
    }
  Poly r;
  r.t_.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) r.t_.push_back({e, c});
  return r;
}

Poly Poly::scaled(const mpq_class& c) const {
  if (c == 0) return Poly();
  Poly p = *this;
  for (auto& tm : p.t_) tm.c *= c;
  return p;
}

Poly Poly::shifted(const Expo& s) const {
  Poly p = *this;
  for (auto& tm : p.t_)
    for (int k = 0; k < kMaxVars; ++k) tm.e[k] = static_cast<int16_t>(tm.e[k] + s[k]);
  return p;
}

int Poly::max_var_exponent(int var) const {
  int m = 0;
  bool first = true;
  for (const auto& tm : t_) {
    if (first || tm.e[var] > m) m = tm.e[var];
    first = false;
  }
  return m;
}

int Poly::min_var_exponent(int var) const {
  int m = 0;
  bool first = true;
  for (const auto& tm : t_) {
    if (first || tm.e[var] < m) m = tm.e[var];
    first = false;
  }
  return m;
}

Expo Poly::min_exponents() const {
  Expo m{};
  bool first = true;
  for (const auto& tm : t_) {
    for (int k = 0; k < kMaxVars; ++k)
      if (first || tm.e[k] < m[k]) m[k] = tm.e[k];
    first = false;
  }
  return m;
}

Poly Poly::subst_power(int var, int target, int mult) const {
  PolyBuilder b;
  for (const auto& tm : t_) {
    Expo e = tm.e;
    int p = e[var];
    e[var] = 0;
    e[target] = static_cast<int16_t>(e[target] + p * mult);
    b.add(e, tm.c);
  }
  return b.build();
}

Poly Poly::eval_var(int var, const mpq_class& value) const {
  PolyBuilder b;
  for (const auto& tm : t_) {
    Expo e = tm.e;
    int p = e[var];
    e[var] = 0;
    mpq_class c = tm.c;
    if (p != 0) {
      if (value == 0) {
        if (p < 0) throw err("PoleAtSubstitution", "zero raised to negative power");
        continue;  // term vanishes
      }
      mpq_class base = value;
      int n = p;
      if (n < 0) {
        base = 1 / base;
        n = -n;
      }
      for (int i = 0; i < n; ++i) c *= base;
    }
    b.add(e, c);
  }
  return b.build();
}

Poly Poly::invert_var(int var) const {
  PolyBuilder b;
  for (const auto& tm : t_) {
    Expo e = tm.e;
    e[var] = static_cast<int16_t>(-e[var]);
    b.add(e, tm.c);
  }
  return b.build();
}

const Poly::Term& Poly::leading() const {
  if (t_.empty()) throw err("ZeroPoly", "leading term of zero polynomial");
  return t_[0];
}

std::string mpq_str(const mpq_class& q) {
  return q.get_str();
}

std::string Poly::str(const std::array<std::string, kMaxVars>& names) const {
  if (t_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& tm : t_) {
    mpq_class c = tm.c;
    if (!first) {
      s += (c < 0) ? " - " : " + ";
      if (c < 0) c = -c;
    } else if (c < 0) {
      s += "-";
      c = -c;
    }
    first = false;
    bool has_var = false;
    for (int k = 0; k < kMaxVars; ++k) has_var = has_var || tm.e[k] != 0;
    if (!has_var || c != 1) s += mpq_str(c);
    bool need_star = !has_var ? false : (c != 1);
    for (int k = 0; k < kMaxVars; ++k) {
      if (tm.e[k] == 0) continue;
      if (need_star) s += "*";
      need_star = true;
      s += names[k];
      if (tm.e[k] != 1) s += "^" + std::to_string(tm.e[k]);
    }
  }
  return s;
}

// ---------- division / gcd ----------

bool Poly::try_div_exact(const Poly& a, const Poly& b, Poly& out) {
  if (b.is_zero()) return false;
  if (a.is_zero()) {
    out = Poly();
    return true;
  }
  // strip monomial units so both operands are ordinary polynomials; a/b is
  // then exact iff the ordinary division is, up to a monomial shift
  Expo ma = a.min_exponents(), mb = b.min_exponents(), shift{};
  Expo na{}, nb{};
  for (int k = 0; k < kMaxVars; ++k) {
    na[k] = static_cast<int16_t>(-ma[k]);
    nb[k] = static_cast<int16_t>(-mb[k]);
    shift[k] = static_cast<int16_t>(ma[k] - mb[k]);
  }
  Poly rem = a.shifted(na);
  Poly bs = b.shifted(nb);
  std::vector<Term> q;
  const Term lb = bs.leading();
  while (!rem.is_zero()) {
    const Term lr = rem.leading();  // copy: rem is reassigned below
    Expo e;
    for (int k = 0; k < kMaxVars; ++k) {
      int d = lr.e[k] - lb.e[k];
      if (d < 0) return false;  // quotient term would not be an ordinary monomial
      e[k] = static_cast<int16_t>(d);
    }
    mpq_class c = lr.c / lb.c;
    Poly mono = Poly::monomial(c, e);
    q.push_back({e, c});
    rem = rem - mono * bs;
    if (!rem.is_zero() && expo_cmp(rem.leading().e, lr.e) >= 0) return false;  // no progress
  }
  Poly r;
  r.t_ = std::move(q);
  r.normalize();
  out = r.shifted(shift);
  return true;
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
  Poly q;
  if (!try_div_exact(a, b, q)) throw err("InexactDivision", "polynomial division not exact");
  return q;
}

namespace {

// view of p as univariate in `var` with Poly coefficients
std::vector<Poly> coeffs_in_var(const Poly& p, int var, int& lo) {
  lo = p.min_var_exponent(var);
  int hi = p.max_var_exponent(var);
  std::vector<PolyBuilder> bs(static_cast<size_t>(hi - lo + 1));
  for (const auto& tm : p.terms()) {
    Expo e = tm.e;
    int d = e[var];
    e[var] = 0;
    bs[static_cast<size_t>(d - lo)].add(e, tm.c);
  }
  std::vector<Poly> out;
  out.reserve(bs.size());
  for (auto& b : bs) out.push_back(b.build());
  return out;
}

Poly from_coeffs(const std::vector<Poly>& cs, int var, int lo) {
  Poly r;
  for (size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].is_zero()) continue;
    r += cs[i] * Poly::variable(var, lo + static_cast<int>(i));
  }
  return r;
}

int degree_in(const std::vector<Poly>& cs) {
  for (int i = static_cast<int>(cs.size()) - 1; i >= 0; --i)
    if (!cs[i].is_zero()) return i;
  return -1;
}

// divide out the common rational content of a coefficient vector (cheap;
// keeps PRS coefficient bit growth under control)
void rational_primitive(std::vector<Poly>& A) {
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& p : A)
    for (const auto& tm : p.terms()) {
      mpz_class n = tm.c.get_num(), d = tm.c.get_den();
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
  if (num_gcd == 0) return;
  mpq_class scale(den_lcm, num_gcd);
  if (scale == 1) return;
  for (auto& p : A) p = p.scaled(scale);
}

// classical pseudo-remainder lc(B)^{deg A - deg B + 1} A mod B as univariate
// polys (coeff vectors, index = degree); exactly the prem the subresultant
// recurrence expects
std::vector<Poly> pseudo_rem(std::vector<Poly> A, const std::vector<Poly>& B) {
  int db = degree_in(B);
  const Poly& lb = B[static_cast<size_t>(db)];
  int da = degree_in(A);
  int e = da - db + 1;
  while (da >= db && da >= 0) {
    Poly la = A[static_cast<size_t>(da)];
    for (auto& c : A) c = c * lb;
    --e;
    for (int i = 0; i <= db; ++i)
      A[static_cast<size_t>(da - db + i)] -= la * B[static_cast<size_t>(i)];
    int nda = -1;
    for (int i = da; i >= 0; --i)
      if (!A[static_cast<size_t>(i)].is_zero()) {
        nda = i;
        break;
      }
    if (nda == da) throw err("Internal", "pseudo_rem made no progress");
    da = nda;
    A.resize(static_cast<size_t>(std::max(da + 1, 0)));
  }
  for (; e > 0; --e)
    for (auto& c : A) c = c * lb;
  return A;
}

// ---- sound modular coprimality test ----
// For main var x with lc_A(pt), lc_B(pt) nonzero mod p, deg gcd of the
// univariate images bounds deg_x(gcd) from above, so image-gcd 1 proves
// deg_x(gcd) = 0.  If that holds for every variable the gcd is constant.
constexpr uint64_t kP = 2147483647ull;  // 2^31-1

uint64_t powmod(uint64_t b, long e) {
  // negative exponents via Fermat inverse
  if (e < 0) {
    b = powmod(b, static_cast<long>(kP) - 2);
    e = -e;
  }
  uint64_t r = 1;
  b %= kP;
  while (e) {
    if (e & 1) r = r * b % kP;
    b = b * b % kP;
    e >>= 1;
  }
  return r;
}

uint64_t coeff_mod(const mpq_class& q) {
  mpz_class n = q.get_num(), d = q.get_den();
  uint64_t nn = mpz_fdiv_ui(n.get_mpz_t(), kP);
  uint64_t dd = mpz_fdiv_ui(d.get_mpz_t(), kP);
  if (dd == 0) return 0;  // unlucky prime; caller treats degenerately
  return nn * powmod(dd, static_cast<long>(kP) - 2) % kP;
}

// univariate image of p in var x, other vars evaluated at pts
std::vector<uint64_t> image_mod(const Poly& p, int x, const std::array<uint64_t, kMaxVars>& pts,
                                int lo, int hi) {
  std::vector<uint64_t> img(static_cast<size_t>(hi - lo + 1), 0);
  for (const auto& tm : p.terms()) {
    uint64_t c = coeff_mod(tm.c);
    for (int k = 0; k < kMaxVars; ++k) {
      if (k == x || tm.e[k] == 0) continue;
      c = c * powmod(pts[static_cast<size_t>(k)], tm.e[k]) % kP;
    }
    size_t idx = static_cast<size_t>(tm.e[x] - lo);
    img[idx] = (img[idx] + c) % kP;
  }
  return img;
}

int mod_gcd_degree(std::vector<uint64_t> a, std::vector<uint64_t> b) {
  auto deg = [](const std::vector<uint64_t>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
      if (v[static_cast<size_t>(i)]) return i;
    return -1;
  };
  int da = deg(a), db = deg(b);
  if (da < db) {
    std::swap(a, b);
    std::swap(da, db);
  }
  while (db > 0) {
    uint64_t inv = powmod(b[static_cast<size_t>(db)], static_cast<long>(kP) - 2);
    while (da >= db) {
      uint64_t f = a[static_cast<size_t>(da)] * inv % kP;
      if (f) {
        for (int i = 0; i <= db; ++i) {
          size_t ia = static_cast<size_t>(da - db + i);
          a[ia] = (a[ia] + kP - f * b[static_cast<size_t>(i)] % kP) % kP;
        }
      }
      --da;
      while (da >= 0 && a[static_cast<size_t>(da)] == 0) --da;
    }
    std::swap(a, b);
    da = db;
    db = deg(b);
  }
  if (db == 0) return 0;
  return da;  // b vanished; remaining gcd image is a (degree da)
}

bool gcd_probably_one(const Poly& A, const Poly& B) {
  static std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  for (int x = 0; x < kMaxVars; ++x) {
    bool used = A.uses_var(x) || B.uses_var(x);
    if (!used) continue;
    if (!A.uses_var(x) || !B.uses_var(x)) continue;  // deg_x(gcd)=0 already
    bool proven = false;
    for (int attempt = 0; attempt < 4 && !proven; ++attempt) {
      std::array<uint64_t, kMaxVars> pts{};
      for (auto& p : pts) p = 2 + rng() % (kP - 3);
      int loA = A.min_var_exponent(x), hiA = A.max_var_exponent(x);
      int loB = B.min_var_exponent(x), hiB = B.max_var_exponent(x);
      auto ia = image_mod(A, x, pts, loA, hiA);
      auto ib = image_mod(B, x, pts, loB, hiB);
      if (ia.empty() || ib.empty() || ia.back() == 0 || ib.back() == 0) continue;  // lc vanished
      if (mod_gcd_degree(ia, ib) == 0) proven = true;
    }
    if (!proven) return false;
  }
  return true;
}

}  // namespace

Poly Poly::primitive() const {
  if (is_zero()) return *this;
  // scale away rational content: lcm of denominators / gcd of numerators
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& tm : t_) {
    mpz_class n = tm.c.get_num(), d = tm.c.get_den();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  mpq_class scale(den_lcm, num_gcd);
  mpq_class lead = t_[0].c;
  if (lead < 0) scale = -scale;
  Poly p = scaled(scale);
  Expo m = p.min_exponents();
  for (auto& k : m) k = static_cast<int16_t>(-k);
  return p.shifted(m);
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.is_zero() ? Poly() : b.primitive();
  if (b.is_zero()) return a.primitive();
  Poly A = a.primitive(), B = b.primitive();
  if (A == B) return A;
  if (A.is_constant() || B.is_constant()) return Poly::constant(1);
  if (gcd_probably_one(A, B)) return Poly::constant(1);
  // pick the main variable: among vars used by both, the one with the
  // smallest degree span (fewest PRS steps); else any used
  int var = -1;
  long best = 1L << 30;
  for (int k = 0; k < kMaxVars; ++k) {
    bool ua = A.uses_var(k), ub = B.uses_var(k);
    if (ua && ub) {
      long span = std::min(A.max_var_exponent(k) - A.min_var_exponent(k),
                           B.max_var_exponent(k) - B.min_var_exponent(k));
      if (var < 0 || span < best) {
        var = k;
        best = span;
      }
    }
  }
  if (var < 0)
    for (int k = 0; k < kMaxVars; ++k)
      if (A.uses_var(k) || B.uses_var(k)) {
        var = k;
        break;
      }
  if (var < 0) return Poly::constant(1);  // both constants
  if (!A.uses_var(var) || !B.uses_var(var)) {
    // variable only in one: gcd divides the other's content w.r.t. var
    const Poly& uni = A.uses_var(var) ? A : B;
    const Poly& other = A.uses_var(var) ? B : A;
    int lo;
    auto cs = coeffs_in_var(uni, var, lo);
    Poly g = other;
    for (const auto& c : cs) {
      if (g.is_constant()) break;
      g = gcd(g, c);
    }
    return g.primitive();
  }
  int loA, loB;
  auto CA = coeffs_in_var(A, var, loA);
  auto CB = coeffs_in_var(B, var, loB);
  // contents w.r.t. main var
  auto content_of = [&](const std::vector<Poly>& cs) {
    Poly g;
    for (const auto& c : cs) {
      g = gcd(g, c);
      if (!g.is_zero() && g.is_constant()) break;
    }
    return g;
  };
  Poly contA = content_of(CA), contB = content_of(CB);
  Poly cont_g = gcd(contA, contB);
  auto divide_out = [](std::vector<Poly>& cs, const Poly& g) {
    if (g.is_constant()) {
      mpq_class c = g.constant_value();
      for (auto& p : cs) p = p.scaled(1 / c);
    } else {
      for (auto& p : cs)
        if (!p.is_zero()) p = div_exact(p, g);
    }
  };
  divide_out(CA, contA);
  divide_out(CB, contB);
  std::vector<Poly>* U = &CA;
  std::vector<Poly>* V = &CB;
  if (degree_in(*U) < degree_in(*V)) std::swap(U, V);
  std::vector<Poly> u = *U, v = *V;
  // fast path: direct divisibility is common for bracket products
  {
    Poly pu = from_coeffs(u, var, 0), pv = from_coeffs(v, var, 0), q;
    if (try_div_exact(pu, pv, q)) return (cont_g * pv).primitive();
  }
  // subresultant PRS
  Poly sg = Poly::constant(1), sh = Poly::constant(1);
  while (true) {
    int du = degree_in(u), dv = degree_in(v);
    if (dv < 0) {
      Poly cont = content_of(u);
      divide_out(u, cont);
      Poly g = from_coeffs(u, var, 0);
      return (cont_g * g).primitive();
    }
    if (dv == 0) return cont_g.primitive();
    int d = du - dv;
    auto r = pseudo_rem(u, v);
    u = std::move(v);
    // v = r / (sg * sh^d)
    Poly divisor = sg;
    for (int i = 0; i < d; ++i) divisor = divisor * sh;
    for (auto& c : r)
      if (!c.is_zero()) c = div_exact(c, divisor);
    v = std::move(r);
    sg = u[static_cast<size_t>(degree_in(u))];
    if (d > 0) {
      Poly num = sg;
      for (int i = 1; i < d; ++i) num = num * sg;
      Poly den = Poly::constant(1);
      for (int i = 1; i < d; ++i) den = den * sh;
      sh = div_exact(num, den);
    }
  }
}

}  // namespace ellq
