#ifndef ELLQ_POLY_HPP
#define ELLQ_POLY_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ellq {

// Error with a machine-readable kind tag ("RankTooSmall", "PoleAtSubstitution", ...).
class err : public std::runtime_error {
 public:
  err(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

constexpr int kMaxVars = 6;
using Expo = std::array<int16_t, kMaxVars>;

// Sparse multivariate Laurent polynomial over Q in at most kMaxVars variables.
// Terms are kept sorted in descending graded-lex order with nonzero coefficients.
class Poly {
 public:
  struct Term {
    Expo e;
    mpq_class c;
  };

  Poly() = default;
  static Poly constant(const mpq_class& c);
  static Poly variable(int var, int power = 1);
  // monomial c * prod x_i^{e_i}
  static Poly monomial(const mpq_class& c, const Expo& e);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  // value of a constant polynomial (throws if not constant)
  mpq_class constant_value() const;

  const std::vector<Term>& terms() const { return t_; }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const { return equals(o); }
  bool operator!=(const Poly& o) const { return !equals(o); }

  Poly scaled(const mpq_class& c) const;
  // multiply every exponent vector componentwise shift: x^e -> x^{e+s}
  Poly shifted(const Expo& s) const;

  int max_var_exponent(int var) const;
  int min_var_exponent(int var) const;
  bool uses_var(int var) const { return !is_zero() && (max_var_exponent(var) != 0 || min_var_exponent(var) != 0); }
  // componentwise min over all exponent vectors (0 if zero poly)
  Expo min_exponents() const;

  // substitute x_var -> x_target^mult (exponent relabel; target may equal var)
  Poly subst_power(int var, int target, int mult) const;
  // substitute x_var -> rational constant value
  Poly eval_var(int var, const mpq_class& value) const;
  // flip sign of all exponents of var (x -> 1/x)
  Poly invert_var(int var) const;

  const Term& leading() const;
  std::string str(const std::array<std::string, kMaxVars>& names) const;

  // Exact division; throws err("InexactDivision") if not divisible.
  static Poly div_exact(const Poly& a, const Poly& b);
  static bool try_div_exact(const Poly& a, const Poly& b, Poly& out);
  // GCD up to monomial*unit normalization; result is integer-primitive with
  // positive leading coefficient and zero minimal exponents.
  static Poly gcd(const Poly& a, const Poly& b);

  // integer-primitive part (content removed, leading coeff > 0, min exps 0)
  Poly primitive() const;

  size_t nterms() const { return t_.size(); }

 private:
  bool equals(const Poly& o) const;
  void normalize();  // sort+merge, drop zeros
  std::vector<Term> t_;
  friend class PolyBuilder;
};

// grlex compare: returns <0, 0, >0
int expo_cmp(const Expo& a, const Expo& b);

// accumulate terms then build a normalized Poly (used by hot loops)
class PolyBuilder {
 public:
  void add(const Expo& e, const mpq_class& c) { t_.push_back({e, c}); }
  Poly build();

 private:
  std::vector<Poly::Term> t_;
};

std::string mpq_str(const mpq_class& q);

}  // namespace ellq

#endif
