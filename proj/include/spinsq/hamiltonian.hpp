#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "spinsq/basis.hpp"
#include "spinsq/dense.hpp"
#include "spinsq/errors.hpp"
#include "spinsq/model.hpp"

namespace spinsq {

// Real symmetric tridiagonal operator restricted to one magnetization sector.
// diag has basis.dim() entries; off has dim - 1 entries, off[i] coupling
// basis states i and i + 1 (that is, k and k + 1).
struct TridiagonalBlock {
  SubspaceBasis basis;
  Eigen::VectorXd diag;
  Eigen::VectorXd off;
};

namespace detail {

inline void check_finite(const TridiagonalBlock& b, const char* what) {
  if (!b.diag.allFinite() || !b.off.allFinite())
    throw numerical_error(std::string(what) + ": non-finite matrix element");
}

}  // namespace detail

// S^2 restricted to the sector (N, m). The spin-raising part moves one pair
// 2 x (mode 0) <-> (mode +1) + (mode -1), hence k -> k +/- 1 only:
//
//   <k|S^2|k>     = m^2 - m + 2 k (n0 + 1) + 2 n0 (k - m + 1),  n0 = N - 2k + m
//   <k+1|S^2|k>   = 2 sqrt((k+1)(k+1-m) n0 (n0 - 1))
//
// All products are exact in 64-bit integers for any N this library handles.
inline TridiagonalBlock spin_squared_block(int n_atoms, int magnetization) {
  TridiagonalBlock block;
  block.basis = subspace_basis(n_atoms, magnetization);
  const int dim = block.basis.dim();
  block.diag.resize(dim);
  block.off.resize(dim > 0 ? dim - 1 : 0);
  const long long n = n_atoms;
  const long long m = magnetization;
  for (int i = 0; i < dim; ++i) {
    const long long k = block.basis.k_min + i;
    const long long n0 = n - 2 * k + m;
    block.diag[i] = static_cast<double>(m * m - m + 2 * k * (n0 + 1) +
                                        2 * n0 * (k - m + 1));
    if (i + 1 < dim) {
      const long long prod = (k + 1) * (k + 1 - m) * n0 * (n0 - 1);
      block.off[i] = 2.0 * std::sqrt(static_cast<double>(prod));
    }
  }
  detail::check_finite(block, "spin_squared_block");
  return block;
}

// Sector block of H = (sign - c) S^2 + 3 c S_z^2 + 3 c n_0; S_z^2 contributes
// the constant 3 c m^2 inside a sector.
inline TridiagonalBlock block_hamiltonian(const ModelParams& params,
                                          int magnetization) {
  validate(params);
  TridiagonalBlock block = spin_squared_block(params.n_atoms, magnetization);
  const double spin_weight = sign_value(params.sign) - params.c;
  const double m2 = static_cast<double>(magnetization) * magnetization;
  for (int i = 0; i < block.basis.dim(); ++i) {
    const Occupation occ = block.basis.occupation(block.basis.k_min + i);
    block.diag[i] = spin_weight * block.diag[i] + 3.0 * params.c * m2 +
                    3.0 * params.c * occ.n_zero;
  }
  block.off *= spin_weight;
  detail::check_finite(block, "block_hamiltonian");
  return block;
}

inline Eigen::VectorXcd apply_block(const TridiagonalBlock& block,
                              const Eigen::VectorXcd& v) {
  const int dim = block.basis.dim();
  if (v.size() != dim)
    throw domain_error("apply_block: vector size does not match block");
  Eigen::VectorXcd out(dim);
  for (int i = 0; i < dim; ++i) {
    std::complex<double> acc = block.diag[i] * v[i];
    if (i > 0) acc += block.off[i - 1] * v[i - 1];
    if (i + 1 < dim) acc += block.off[i] * v[i + 1];
    out[i] = acc;
  }
  return out;
}

inline double real_expectation(const TridiagonalBlock& block,
                               const Eigen::VectorXcd& v) {
  return v.dot(apply_block(block, v)).real();
}

// Dense H over the full Fock space, assembled from the oracle operators.
// Validation only; sizes capped.
inline DenseOperator full_hamiltonian_oracle(const ModelParams& params,
                                             int cap = kDenseOracleCap) {
  validate(params);
  check_oracle_cap(params.n_atoms, cap);
  const SpinOperators s = spin_matrices(params.n_atoms, cap);
  const DenseOperator n0 = bilinear_matrix(params.n_atoms, 0, 0, cap);
  const double spin_weight = sign_value(params.sign) - params.c;
  DenseOperator h{params.n_atoms,
                  spin_weight * s.s_squared.mat +
                      3.0 * params.c * (s.s_z.mat * s.s_z.mat) +
                      3.0 * params.c * n0.mat};
  return h;
}

}  // namespace spinsq
