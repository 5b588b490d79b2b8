#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "spinsq/basis.hpp"
#include "spinsq/errors.hpp"
#include "spinsq/state.hpp"

namespace spinsq {

// Everything in this header builds dense matrices over the full three-mode
// Fock space. It exists to validate the fast sector-restricted paths, not to
// be fast itself, so sizes are capped hard.
//
// Mode index convention: the integers +1, 0, -1 label the Zeeman modes, and
// every operator in the library is expressed through the bilinears
// b(alpha, beta) = a+_alpha a_beta built here. This is the one place the
// convention is fixed; the sign structure of Q_yz and Q_xz depends on it.

inline constexpr int kDenseOracleCap = 12;

inline void check_oracle_cap(int n_atoms, int cap) {
  if (n_atoms < 1) throw domain_error("dense oracle: n_atoms must be >= 1");
  if (n_atoms > cap)
    throw resource_error("dense oracle: n_atoms exceeds the dense cap");
}

struct DenseOperator {
  int n_atoms = 0;
  Eigen::MatrixXcd mat;
};

inline int occupation_of(const Occupation& occ, int mode) {
  switch (mode) {
    case +1: return occ.n_plus;
    case 0: return occ.n_zero;
    case -1: return occ.n_minus;
    default: throw domain_error("mode index must be +1, 0, or -1");
  }
}

inline void add_to_occupation(Occupation& occ, int mode, int delta) {
  switch (mode) {
    case +1: occ.n_plus += delta; return;
    case 0: occ.n_zero += delta; return;
    case -1: occ.n_minus += delta; return;
    default: throw domain_error("mode index must be +1, 0, or -1");
  }
}

// Matrix of b(alpha, beta) = a+_alpha a_beta in the canonical flat basis.
inline DenseOperator bilinear_matrix(int n_atoms, int alpha, int beta,
                                     int cap = kDenseOracleCap) {
  check_oracle_cap(n_atoms, cap);
  const std::vector<FockLabel> labels = enumerate_full_basis(n_atoms);
  const FullBasisIndex index(n_atoms);
  const int dim = index.dim();
  DenseOperator op{n_atoms, Eigen::MatrixXcd::Zero(dim, dim)};
  for (int col = 0; col < dim; ++col) {
    const FockLabel& lab = labels[static_cast<std::size_t>(col)];
    const Occupation occ =
        subspace_basis(n_atoms, lab.magnetization).occupation(lab.k);
    const int nb = occupation_of(occ, beta);
    if (nb == 0) continue;
    if (alpha == beta) {
      op.mat(col, col) = static_cast<double>(nb);
      continue;
    }
    const int na = occupation_of(occ, alpha);
    Occupation moved = occ;
    add_to_occupation(moved, beta, -1);
    add_to_occupation(moved, alpha, +1);
    const int row = index.index(moved);
    op.mat(row, col) = std::sqrt(static_cast<double>(nb) * (na + 1));
  }
  return op;
}

namespace detail {

inline DenseOperator combine(int n_atoms, std::complex<double> scale,
                             std::initializer_list<
                                 std::pair<std::complex<double>,
                                           std::pair<int, int>>> terms,
                             int cap) {
  DenseOperator out{n_atoms, Eigen::MatrixXcd()};
  bool first = true;
  for (const auto& [coeff, modes] : terms) {
    DenseOperator b = bilinear_matrix(n_atoms, modes.first, modes.second, cap);
    if (first) {
      out.mat = coeff * b.mat;
      first = false;
    } else {
      out.mat += coeff * b.mat;
    }
  }
  out.mat *= scale;
  return out;
}

}  // namespace detail

// Collective spin components and S^2. S_+ = sqrt(2) (b(1,0) + b(0,-1)).
struct SpinOperators {
  DenseOperator s_x, s_y, s_z, s_squared;
};

inline SpinOperators spin_matrices(int n_atoms, int cap = kDenseOracleCap) {
  using namespace std::complex_literals;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  SpinOperators s;
  s.s_x = detail::combine(n_atoms, inv_sqrt2,
                          {{1.0, {+1, 0}}, {1.0, {0, -1}},
                           {1.0, {0, +1}}, {1.0, {-1, 0}}},
                          cap);
  s.s_y = detail::combine(n_atoms, 1i * inv_sqrt2,
                          {{-1.0, {+1, 0}}, {-1.0, {0, -1}},
                           {+1.0, {0, +1}}, {+1.0, {-1, 0}}},
                          cap);
  s.s_z = detail::combine(n_atoms, 1.0,
                          {{1.0, {+1, +1}}, {-1.0, {-1, -1}}}, cap);
  s.s_squared = DenseOperator{
      n_atoms, s.s_x.mat * s.s_x.mat + s.s_y.mat * s.s_y.mat +
                   s.s_z.mat * s.s_z.mat};
  return s;
}

// Quadrupole (nematic) components. Q_plus = Q_zz - Q_yy is the generator
// whose mean sets the squeezing denominator; Q_xx + Q_yy + Q_zz = 0.
struct QuadrupoleOperators {
  DenseOperator q_yz, q_xz, q_xx, q_yy, q_zz, q_plus;
};

inline QuadrupoleOperators quadrupole_matrices(int n_atoms,
                                               int cap = kDenseOracleCap) {
  using namespace std::complex_literals;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  QuadrupoleOperators q;
  q.q_yz = detail::combine(n_atoms, 1i * inv_sqrt2,
                           {{-1.0, {+1, 0}}, {+1.0, {0, -1}},
                            {+1.0, {0, +1}}, {-1.0, {-1, 0}}},
                           cap);
  q.q_xz = detail::combine(n_atoms, inv_sqrt2,
                           {{+1.0, {+1, 0}}, {-1.0, {0, -1}},
                            {+1.0, {0, +1}}, {-1.0, {-1, 0}}},
                           cap);
  q.q_xx = detail::combine(n_atoms, 1.0,
                           {{2.0 / 3.0, {0, 0}},
                            {-1.0 / 3.0, {+1, +1}},
                            {-1.0 / 3.0, {-1, -1}},
                            {1.0, {+1, -1}},
                            {1.0, {-1, +1}}},
                           cap);
  q.q_yy = detail::combine(n_atoms, 1.0,
                           {{2.0 / 3.0, {0, 0}},
                            {-1.0 / 3.0, {+1, +1}},
                            {-1.0 / 3.0, {-1, -1}},
                            {-1.0, {+1, -1}},
                            {-1.0, {-1, +1}}},
                           cap);
  q.q_zz = detail::combine(n_atoms, 1.0,
                           {{-4.0 / 3.0, {0, 0}},
                            {2.0 / 3.0, {+1, +1}},
                            {2.0 / 3.0, {-1, -1}}},
                           cap);
  q.q_plus = DenseOperator{n_atoms, q.q_zz.mat - q.q_yy.mat};
  return q;
}

// Sector state -> full-basis vector (canonical flat order).
inline Eigen::VectorXcd embed_in_full_basis(const StateVector& s) {
  check_consistent(s);
  const FullBasisIndex index(s.basis.n_atoms);
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(index.dim());
  const int off = index.sector_offset(s.basis.magnetization);
  psi.segment(off, s.basis.dim()) = s.amplitudes;
  return psi;
}

inline std::complex<double> expectation(const DenseOperator& op,
                                        const Eigen::VectorXcd& psi) {
  if (psi.size() != op.mat.rows())
    throw domain_error("expectation: vector size does not match operator");
  return psi.dot(op.mat * psi);
}

// Variance of a Hermitian operator; uses <A^2> = |A psi|^2.
inline double variance(const DenseOperator& op, const Eigen::VectorXcd& psi) {
  if (psi.size() != op.mat.rows())
    throw domain_error("variance: vector size does not match operator");
  const Eigen::VectorXcd apsi = op.mat * psi;
  const double mean = psi.dot(apsi).real();
  return apsi.squaredNorm() - mean * mean;
}

inline double max_hermiticity_defect(const DenseOperator& op) {
  return (op.mat - op.mat.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace spinsq
