#include "ellq/cartan.hpp"

namespace ellq {

char type_char(LieType t) {
  switch (t) {
    case LieType::A: return 'A';
    case LieType::B: return 'B';
    case LieType::C: return 'C';
    case LieType::D: return 'D';
  }
  return '?';
}

LieType type_of_char(char c) {
  switch (c) {
    case 'A': case 'a': return LieType::A;
    case 'B': case 'b': return LieType::B;
    case 'C': case 'c': return LieType::C;
    case 'D': case 'd': return LieType::D;
  }
  throw err("UnsupportedType", std::string("no data for type ") + c);
}

mpq_class CartanDatum::dot(const QVec& x, const QVec& y) {
  if (x.size() != y.size()) throw err("DimensionMismatch", "eps-vector lengths differ");
  mpq_class s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

mpq_class CartanDatum::root_pairing(int i, int j) const {
  return dot(simple_roots[static_cast<size_t>(i)], simple_roots[static_cast<size_t>(j)]);
}

QVec CartanDatum::root_to_eps(const std::vector<int>& rc) const {
  QVec out(static_cast<size_t>(ortho_dim), 0);
  for (size_t i = 0; i < rc.size(); ++i)
    for (int k = 0; k < ortho_dim; ++k)
      out[static_cast<size_t>(k)] += rc[i] * simple_roots[i][static_cast<size_t>(k)];
  return out;
}

mpq_class CartanDatum::pair_hvee(const QVec& x, int j) const {
  mpq_class n = dot(x, simple_roots[static_cast<size_t>(j)]);
  return 2 * n / root_pairing(j, j);
}

int CartanDatum::cocycle_sign(const std::vector<int>& alpha, const std::vector<int>& beta) const {
  long e = 0;
  for (size_t i = 0; i < alpha.size(); ++i)
    for (size_t j = 0; j < beta.size(); ++j)
      e += static_cast<long>(alpha[i]) * beta[j] * cocycle_exp[i][j];
  return (e % 2 == 0) ? 1 : -1;
}

CartanDatum build_cartan(char type, int rank) { return build_cartan(type_of_char(type), rank); }

CartanDatum build_cartan(LieType type, int rank) {
  int min_rank = type == LieType::A ? 1 : type == LieType::D ? 3 : 2;
  if (rank < min_rank)
    throw err("RankTooSmall", std::string(1, type_char(type)) + "_" + std::to_string(rank));
  CartanDatum cd;
  cd.type = type;
  cd.rank = rank;
  const int l = rank;
  cd.ortho_dim = (type == LieType::A) ? l + 1 : l;
  const int N = cd.ortho_dim;

  auto eps = [&](int j) {  // unit vector xi_j, 0-based
    QVec v(static_cast<size_t>(N), 0);
    v[static_cast<size_t>(j)] = 1;
    return v;
  };

  // simple roots
  cd.simple_roots.resize(static_cast<size_t>(l));
  for (int i = 0; i < l; ++i) {
    QVec r(static_cast<size_t>(N), 0);
    if (type == LieType::A || i < l - 1) {
      r[static_cast<size_t>(i)] = 1;
      r[static_cast<size_t>(i + 1)] = -1;
    } else if (type == LieType::B) {
      r[static_cast<size_t>(l - 1)] = 1;
    } else if (type == LieType::C) {
      r[static_cast<size_t>(l - 1)] = 2;
    } else {  // D
      r[static_cast<size_t>(l - 2)] = 1;
      r[static_cast<size_t>(l - 1)] = 1;
    }
    cd.simple_roots[static_cast<size_t>(i)] = r;
  }
  // For A_l the eps-bar correction drops out of root differences, so the
  // coordinates above are already exact.

  // fundamental weights
  cd.fundamental_weights.resize(static_cast<size_t>(l));
  for (int i = 1; i <= l; ++i) {
    QVec w(static_cast<size_t>(N), 0);
    if (type == LieType::A) {
      // bar-Lambda_i = sum_{j<=i} eps-bar_j, eps-bar_j = xi_j - (1/(l+1)) sum xi
      for (int j = 0; j < i; ++j) w[static_cast<size_t>(j)] += 1;
      mpq_class corr(i, l + 1);
      for (int j = 0; j < N; ++j) w[static_cast<size_t>(j)] -= corr;
    } else if (type == LieType::B) {
      if (i < l) {
        for (int j = 0; j < i; ++j) w[static_cast<size_t>(j)] = 1;
      } else {
        for (int j = 0; j < N; ++j) w[static_cast<size_t>(j)] = mpq_class(1, 2);
      }
    } else if (type == LieType::C) {
      for (int j = 0; j < i; ++j) w[static_cast<size_t>(j)] = 1;
    } else {  // D
      if (i <= l - 2) {
        for (int j = 0; j < i; ++j) w[static_cast<size_t>(j)] = 1;
      } else {
        for (int j = 0; j < N; ++j) w[static_cast<size_t>(j)] = mpq_class(1, 2);
        if (i == l - 1) w[static_cast<size_t>(l - 1)] = mpq_class(-1, 2);
      }
    }
    cd.fundamental_weights[static_cast<size_t>(i - 1)] = w;
  }
  cd.rho.assign(static_cast<size_t>(N), 0);
  for (const auto& w : cd.fundamental_weights)
    for (int j = 0; j < N; ++j) cd.rho[static_cast<size_t>(j)] += w[static_cast<size_t>(j)];

  // d_i, a_ij, b_ij from the geometry
  cd.d.resize(static_cast<size_t>(l));
  cd.a.assign(static_cast<size_t>(l), std::vector<int>(static_cast<size_t>(l), 0));
  cd.b.assign(static_cast<size_t>(l), std::vector<Half>(static_cast<size_t>(l)));
  for (int i = 0; i < l; ++i) {
    mpq_class nii = cd.root_pairing(i, i);
    cd.d[static_cast<size_t>(i)] = Half{static_cast<int>(mpq_class(nii).get_num().get_si())};
    // d_i = (alpha_i,alpha_i)/2 as Half: twice = (alpha_i,alpha_i)
  }
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      mpq_class nij = cd.root_pairing(i, j);
      mpq_class aij = 2 * nij / cd.root_pairing(i, i);
      if (aij.get_den() != 1) throw err("Internal", "non-integer Cartan entry");
      cd.a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          static_cast<int>(aij.get_num().get_si());
      mpq_class twice_b = 2 * nij;  // b_ij = (alpha_i,alpha_j)
      if (twice_b.get_den() != 1) throw err("Internal", "b_ij not half-integral");
      cd.b[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          Half{static_cast<int>(twice_b.get_num().get_si())};
    }

  switch (type) {
    case LieType::A: cd.g = l + 1; cd.t = 1; break;
    case LieType::B: cd.g = 2 * l - 1; cd.t = 1; break;
    case LieType::C: cd.g = l + 1; cd.t = 2; break;
    case LieType::D: cd.g = 2 * l - 2; cd.t = 1; break;
  }
  cd.eta = Half{-cd.t * cd.g};  // eta = -t g/2, stored as twice the value

  // cocycle on ordered basis pairs, extended bimultiplicatively:
  // for i > j the commutator exponent, else 0
  cd.cocycle_exp.assign(static_cast<size_t>(l), std::vector<int>(static_cast<size_t>(l), 0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      mpq_class pij = cd.root_pairing(i, j);
      long e = pij.get_num().get_si();  // integral for all four types
      if (type == LieType::B) {
        long qi = cd.root_pairing(i, i).get_num().get_si();
        long qj = cd.root_pairing(j, j).get_num().get_si();
        e += qi * qj;
      }
      if (i > j) cd.cocycle_exp[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          static_cast<int>(((e % 2) + 2) % 2);
      if (i == j) {
        // eps(a_i,a_i)^2 irrelevant; fix eps(a_i,a_i)=1
        cd.cocycle_exp[static_cast<size_t>(i)][static_cast<size_t>(j)] = 0;
      }
    }
  return cd;
}

mpq_class weight_pairing(const CartanDatum& d, const QVec& x, const QVec& y) {
  if (static_cast<int>(x.size()) != d.ortho_dim || static_cast<int>(y.size()) != d.ortho_dim)
    throw err("DimensionMismatch", "weight vectors must have the ambient dimension");
  return CartanDatum::dot(x, y);
}

}  // namespace ellq
