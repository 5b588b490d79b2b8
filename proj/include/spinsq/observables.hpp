#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <optional>

#include "spinsq/basis.hpp"
#include "spinsq/dense.hpp"
#include "spinsq/errors.hpp"
#include "spinsq/state.hpp"

namespace spinsq {

// Spin-nematic squeezing and quantum Fisher information from closed-form
// moment reductions on fixed-magnetization states. The dense-matrix oracles
// at the bottom recompute both from raw operator algebra for validation.
//
// The reductions below are per-amplitude sums with exact integer coefficients
// (64-bit, well under 2^53 for any supported N), accumulated k ascending.
// The zero-magnetization dynamics path reuses these kernels so a static
// record and the t = 0 record of a trace agree bit for bit.

namespace detail {

inline void require_normalized(const StateVector& s) {
  check_consistent(s);
  if (std::abs(s.norm() - 1.0) > 1e-8)
    throw domain_error("moments: state must be normalized");
}

}  // namespace detail

// Mean occupations of the modes (+1, 0, -1).
inline std::array<double, 3> mode_populations(const StateVector& s) {
  check_consistent(s);
  const SubspaceBasis& b = s.basis;
  double p_plus = 0.0, p_zero = 0.0, p_minus = 0.0;
  for (int i = 0; i < b.dim(); ++i) {
    const double w = std::norm(s.amplitudes[i]);
    const Occupation occ = b.occupation(b.k_min + i);
    p_plus += w * occ.n_plus;
    p_zero += w * occ.n_zero;
    p_minus += w * occ.n_minus;
  }
  return {p_plus, p_zero, p_minus};
}

// <S_x^2 + Q_yz^2> (= <S_y^2 + Q_xz^2>): the angle-averaged quadrature power
// in the squeezing plane. Diagonal in k:
//   coef(k) = (2N - 4k + 2m - 1)(2k - m) + 2N.
inline double quadrature_power(const StateVector& s) {
  check_consistent(s);
  const SubspaceBasis& b = s.basis;
  const long long n = b.n_atoms, m = b.magnetization;
  double acc = 0.0;
  for (int i = 0; i < b.dim(); ++i) {
    const long long k = b.k_min + i;
    const long long coef = (2 * n - 4 * k + 2 * m - 1) * (2 * k - m) + 2 * n;
    acc += std::norm(s.amplitudes[i]) * static_cast<double>(coef);
  }
  return acc;
}

// <a0+ a0+ a1 a-1>: the pair-coherence amplitude that sets the angle
// dependence of the quadrature variance. Couples k + 1 -> k:
//   coef(k) = sqrt((k+1)(k+1-m)(N-2k+m)(N-2k+m-1)).
inline std::complex<double> pair_coherence(const StateVector& s) {
  check_consistent(s);
  const SubspaceBasis& b = s.basis;
  const long long n = b.n_atoms, m = b.magnetization;
  std::complex<double> acc = 0.0;
  for (int i = 0; i + 1 < b.dim(); ++i) {
    const long long k = b.k_min + i;
    const long long n0 = n - 2 * k + m;
    const long long prod = (k + 1) * (k + 1 - m) * n0 * (n0 - 1);
    acc += std::conj(s.amplitudes[i]) * s.amplitudes[i + 1] *
           std::sqrt(static_cast<double>(prod));
  }
  return acc;
}

// <Q_plus> with Q_plus = Q_zz - Q_yy; diagonal coefficient 6k - 2N - 3m.
inline double q_plus_mean(const StateVector& s) {
  check_consistent(s);
  const SubspaceBasis& b = s.basis;
  const long long n = b.n_atoms, m = b.magnetization;
  double acc = 0.0;
  for (int i = 0; i < b.dim(); ++i) {
    const long long k = b.k_min + i;
    acc += std::norm(s.amplitudes[i]) *
           static_cast<double>(6 * k - 2 * n - 3 * m);
  }
  return acc;
}

// (Delta Q_plus)^2 = 9 Var(2k - m) + sum |g_k|^2 (2k(k+1) - m(2k+1)).
// The diagonal variance is evaluated in two passes (subtract the mean, then
// square) so cancellation can never drive it negative.
inline double q_plus_variance(const StateVector& s) {
  check_consistent(s);
  const SubspaceBasis& b = s.basis;
  const long long m = b.magnetization;
  double mean_d = 0.0;
  for (int i = 0; i < b.dim(); ++i) {
    const long long k = b.k_min + i;
    mean_d += std::norm(s.amplitudes[i]) * static_cast<double>(2 * k - m);
  }
  double var_d = 0.0;
  double offdiag = 0.0;
  for (int i = 0; i < b.dim(); ++i) {
    const long long k = b.k_min + i;
    const double w = std::norm(s.amplitudes[i]);
    const double centered = static_cast<double>(2 * k - m) - mean_d;
    var_d += w * centered * centered;
    offdiag += w * static_cast<double>(2 * k * (k + 1) - m * (2 * k + 1));
  }
  return 9.0 * var_d + offdiag;
}

struct MomentSet {
  double quadrature_power = 0.0;            // <S_x^2 + Q_yz^2>
  std::complex<double> pair_coherence = 0;  // <a0+ a0+ a1 a-1>
  double q_plus_mean = 0.0;
  double q_plus_var = 0.0;
  std::array<double, 3> populations{};      // modes +1, 0, -1
};

inline MomentSet moments_fixed_m(const StateVector& s) {
  detail::require_normalized(s);
  MomentSet mom;
  mom.quadrature_power = quadrature_power(s);
  mom.pair_coherence = pair_coherence(s);
  mom.q_plus_mean = q_plus_mean(s);
  mom.q_plus_var = q_plus_variance(s);
  mom.populations = mode_populations(s);
  return mom;
}

// Variance of the rotated quadrature cos(phi) S_x + sin(phi) Q_yz:
//   V(phi) = (A + B cos 2phi + C sin 2phi) / 2,
// with A the quadrature power, B = 4 Re O, C = -4 Im O, O the pair coherence.
inline double variance_at_angle(const MomentSet& mom, double phi) {
  const double b_coef = 4.0 * mom.pair_coherence.real();
  const double c_coef = -4.0 * mom.pair_coherence.imag();
  return 0.5 * (mom.quadrature_power + b_coef * std::cos(2.0 * phi) +
                c_coef * std::sin(2.0 * phi));
}

namespace detail {

// Minimizer of V(phi) on [0, pi). atan2 handles every sign pattern of
// (B, C); the two-branch arccos form breaks down for C > 0.
inline double optimal_angle(double b_coef, double c_coef) {
  if (b_coef == 0.0 && c_coef == 0.0) return 0.0;
  double phi = 0.5 * std::atan2(-c_coef, -b_coef);
  if (phi < 0.0) phi += M_PI;
  return phi;
}

inline long long atoms_from_populations(const std::array<double, 3>& p) {
  return std::llround(p[0] + p[1] + p[2]);
}

}  // namespace detail

// xi^2 relative to the generator mean: xi^2 = (A - 4|O|) / |<Q_plus>|.
// Undefined when |<Q_plus>| < 1e-9 N (the metrological normalization
// vanishes); value and db are then absent while phi_opt is still reported.
struct SqueezingResult {
  std::optional<double> value;
  double phi_opt = 0.0;
  std::optional<double> db;
};

inline double to_decibels(double xi_squared) {
  if (!(xi_squared > 0.0) || !std::isfinite(xi_squared))
    throw domain_error("to_decibels: requires a positive finite value");
  return 10.0 * std::log10(xi_squared);
}

inline SqueezingResult squeezing_xi_x(const MomentSet& mom) {
  SqueezingResult r;
  const double b_coef = 4.0 * mom.pair_coherence.real();
  const double c_coef = -4.0 * mom.pair_coherence.imag();
  r.phi_opt = detail::optimal_angle(b_coef, c_coef);
  const double denom = std::abs(mom.q_plus_mean);
  const double n_atoms =
      static_cast<double>(detail::atoms_from_populations(mom.populations));
  if (denom < 1e-9 * n_atoms) return r;
  const double numer = std::max(
      mom.quadrature_power - 4.0 * std::abs(mom.pair_coherence), 0.0);
  r.value = numer / denom;
  if (*r.value > 0.0) r.db = to_decibels(*r.value);
  return r;
}

// Largest quantum Fisher information over the squeezing-plane rotation axes
// and the generator axis: F = max{2 (A + 4|O|), (Delta Q_plus)^2}.
enum class QfiBranch {
  rotation_plane,  // best axis in the (S_x, Q_yz) plane
  generator,       // Q_plus variance
};

struct QfiResult {
  double f_max = 0.0;
  QfiBranch branch = QfiBranch::rotation_plane;
};

inline QfiResult qfi_max(const MomentSet& mom) {
  const double plane =
      2.0 * (mom.quadrature_power + 4.0 * std::abs(mom.pair_coherence));
  QfiResult r;
  if (plane >= mom.q_plus_var) {
    r.f_max = plane;
    r.branch = QfiBranch::rotation_plane;
  } else {
    r.f_max = mom.q_plus_var;
    r.branch = QfiBranch::generator;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Dense oracles. Same quantities from raw operator algebra over the full
// Fock space; slow, capped, used to validate the reductions above.

enum class QuadraturePlane { x, y };

namespace detail {

struct PlaneOperators {
  DenseOperator a, b, d;  // quadrature pair and generator
};

inline PlaneOperators plane_operators(int n_atoms, QuadraturePlane plane,
                                      int cap) {
  const SpinOperators s = spin_matrices(n_atoms, cap);
  const QuadrupoleOperators q = quadrupole_matrices(n_atoms, cap);
  if (plane == QuadraturePlane::x)
    return {s.s_x, q.q_yz, q.q_plus};
  return {s.s_y, q.q_xz,
          DenseOperator{n_atoms, q.q_xx.mat - q.q_zz.mat}};
}

struct PlaneMoments {
  double var_a, var_b, cov, mean_d, n_atoms;
};

inline PlaneMoments plane_moments(const Eigen::VectorXcd& psi, int n_atoms,
                                  QuadraturePlane plane, int cap) {
  if (psi.size() != full_dimension(n_atoms))
    throw domain_error("oracle: vector size does not match full basis");
  const PlaneOperators ops = plane_operators(n_atoms, plane, cap);
  const Eigen::VectorXcd apsi = ops.a.mat * psi;
  const Eigen::VectorXcd bpsi = ops.b.mat * psi;
  const double mean_a = psi.dot(apsi).real();
  const double mean_b = psi.dot(bpsi).real();
  PlaneMoments pm{};
  pm.var_a = apsi.squaredNorm() - mean_a * mean_a;
  pm.var_b = bpsi.squaredNorm() - mean_b * mean_b;
  pm.cov = apsi.dot(bpsi).real() - mean_a * mean_b;
  pm.mean_d = expectation(ops.d, psi).real();
  pm.n_atoms = n_atoms;
  return pm;
}

}  // namespace detail

inline SqueezingResult squeezing_oracle(const Eigen::VectorXcd& psi,
                                        int n_atoms,
                                        QuadraturePlane plane =
                                            QuadraturePlane::x,
                                        int cap = kDenseOracleCap) {
  const detail::PlaneMoments pm =
      detail::plane_moments(psi, n_atoms, plane, cap);
  const double sum = pm.var_a + pm.var_b;
  const double diff = pm.var_a - pm.var_b;
  const double cross = 2.0 * pm.cov;
  SqueezingResult r;
  r.phi_opt = detail::optimal_angle(diff, cross);
  const double denom = std::abs(pm.mean_d);
  if (denom < 1e-9 * pm.n_atoms) return r;
  const double min_two_var = sum - std::hypot(diff, cross);
  r.value = std::max(min_two_var, 0.0) / denom;
  if (*r.value > 0.0) r.db = to_decibels(*r.value);
  return r;
}

inline QfiResult qfi_oracle(const Eigen::VectorXcd& psi, int n_atoms,
                            int cap = kDenseOracleCap) {
  const detail::PlaneMoments pm =
      detail::plane_moments(psi, n_atoms, QuadraturePlane::x, cap);
  const double lam_max = 0.5 * ((pm.var_a + pm.var_b) +
                                std::hypot(pm.var_a - pm.var_b, 2.0 * pm.cov));
  const QuadrupoleOperators q = quadrupole_matrices(n_atoms, cap);
  const double var_q = variance(q.q_plus, psi);
  QfiResult r;
  if (4.0 * lam_max >= var_q) {
    r.f_max = 4.0 * lam_max;
    r.branch = QfiBranch::rotation_plane;
  } else {
    r.f_max = var_q;
    r.branch = QfiBranch::generator;
  }
  return r;
}

}  // namespace spinsq
