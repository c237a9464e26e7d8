#ifndef ELLQ_CARTAN_HPP
#define ELLQ_CARTAN_HPP

#include <vector>

#include "ellq/mode_scalar.hpp"

namespace ellq {

enum class LieType { A, B, C, D };

char type_char(LieType t);
LieType type_of_char(char c);

using QVec = std::vector<mpq_class>;

// Immutable affine Cartan / lattice data for X_l^(1), X in {A,B,C,D}.
// Simple roots and fundamental weights are stored in the orthonormal
// (epsilon) basis; for A_l the eps-bar vectors carry denominator l+1.
struct CartanDatum {
  LieType type;
  int rank = 0;                      // l
  int ortho_dim = 0;                 // N: l+1 for A, l otherwise
  std::vector<std::vector<int>> a;   // Cartan matrix a_ij
  std::vector<Half> d;               // d_i = (alpha_i,alpha_i)/2
  std::vector<std::vector<Half>> b;  // b_ij = d_i a_ij (symmetric)
  int g = 0;                         // dual Coxeter number
  int t = 0;                         // (long root)^2 / 2
  Half eta;                          // -t g / 2
  std::vector<QVec> simple_roots;         // alpha_i in eps coordinates
  std::vector<QVec> fundamental_weights;  // bar-Lambda_i in eps coordinates
  QVec rho;                                // sum of fundamental weights
  // cocycle exponents on ordered basis pairs: eps(alpha_i,alpha_j)=(-1)^{c_ij}
  std::vector<std::vector<int>> cocycle_exp;

  // inner product of eps-coordinate vectors
  static mpq_class dot(const QVec& x, const QVec& y);
  // (alpha_i, alpha_j) as exact rational
  mpq_class root_pairing(int i, int j) const;
  // root-basis integer vector -> eps coordinates
  QVec root_to_eps(const std::vector<int>& root_coeffs) const;
  // pairing <x, h_j> = (x, alpha_j^vee) for x in eps coordinates
  mpq_class pair_hvee(const QVec& x, int j) const;
  // bimultiplicative cocycle sign on root-basis integer vectors
  int cocycle_sign(const std::vector<int>& alpha, const std::vector<int>& beta) const;
};

// errors: UnsupportedType, RankTooSmall
CartanDatum build_cartan(LieType type, int rank);
CartanDatum build_cartan(char type, int rank);

// symmetric bilinear form on eps-coordinate vectors (DimensionMismatch on
// length disagreement)
mpq_class weight_pairing(const CartanDatum& d, const QVec& x, const QVec& y);

}  // namespace ellq

#endif
