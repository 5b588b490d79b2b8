#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "spinsq/errors.hpp"

namespace spinsq {

// Thin contracts over the symmetric tridiagonal eigensolver. Callers get
// ascending eigenvalues, orthonormal vectors, and an explicit residual check;
// solver breakdowns surface as numerical_error instead of silent garbage.

struct Eigenpair {
  double value = 0.0;
  Eigen::VectorXd vector;
};

struct TridiagonalEigen {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // column i pairs with values[i]
};

namespace detail {

inline void check_tridiagonal_args(const Eigen::VectorXd& diag,
                                   const Eigen::VectorXd& off) {
  if (diag.size() < 1)
    throw domain_error("tridiagonal eigh: empty diagonal");
  if (off.size() != diag.size() - 1)
    throw domain_error("tridiagonal eigh: off-diagonal size must be dim - 1");
  if (!diag.allFinite() || !off.allFinite())
    throw numerical_error("tridiagonal eigh: non-finite input");
}

inline double tridiagonal_residual(const Eigen::VectorXd& diag,
                                   const Eigen::VectorXd& off, double value,
                                   const Eigen::VectorXd& v) {
  const Eigen::Index dim = diag.size();
  Eigen::VectorXd r(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    double acc = diag[i] * v[i] - value * v[i];
    if (i > 0) acc += off[i - 1] * v[i - 1];
    if (i + 1 < dim) acc += off[i] * v[i + 1];
    r[i] = acc;
  }
  return r.norm();
}

inline TridiagonalEigen solve_tridiagonal(const Eigen::VectorXd& diag,
                                          const Eigen::VectorXd& off,
                                          bool vectors) {
  check_tridiagonal_args(diag, off);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(
      diag, off,
      vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw numerical_error("tridiagonal eigh: solver did not converge (dim " +
                          std::to_string(diag.size()) + ")");
  TridiagonalEigen out;
  out.values = solver.eigenvalues();
  if (vectors) out.vectors = solver.eigenvectors();
  return out;
}

}  // namespace detail

inline double lowest_eigenvalue(const Eigen::VectorXd& diag,
                                const Eigen::VectorXd& off) {
  return detail::solve_tridiagonal(diag, off, false).values[0];
}

// Lowest eigenpair with residual check |T v - value v| <= 1e-10 max(1, |value|).
inline Eigenpair lowest_eigenpair(const Eigen::VectorXd& diag,
                                  const Eigen::VectorXd& off) {
  const TridiagonalEigen full = detail::solve_tridiagonal(diag, off, true);
  Eigenpair pair{full.values[0], full.vectors.col(0)};
  const double resid =
      detail::tridiagonal_residual(diag, off, pair.value, pair.vector);
  const double bound = 1e-10 * std::max(1.0, std::abs(pair.value));
  if (!(resid <= bound))
    throw numerical_error("lowest_eigenpair: residual " +
                          std::to_string(resid) + " exceeds bound at dim " +
                          std::to_string(diag.size()));
  return pair;
}

inline TridiagonalEigen full_tridiagonal_eigh(const Eigen::VectorXd& diag,
                                              const Eigen::VectorXd& off) {
  return detail::solve_tridiagonal(diag, off, true);
}

}  // namespace spinsq
