#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "spinsq/eigh.hpp"
#include "spinsq/errors.hpp"
#include "spinsq/hamiltonian.hpp"
#include "spinsq/model.hpp"
#include "spinsq/observables.hpp"
#include "spinsq/state.hpp"

namespace spinsq {

// Exact spin-mixing dynamics inside one magnetization sector: the propagator
// is synthesized from the full tridiagonal eigendecomposition, so each sample
// time is evaluated directly (no step error, unconditionally unitary up to
// roundoff, negative times allowed).

struct DynamicsTrace {
  ModelParams params;
  std::vector<double> times;
  std::vector<StateVector> states;
};

namespace detail {

inline constexpr int kPropagationChunk = 256;

}  // namespace detail

inline DynamicsTrace evolve(const ModelParams& params,
                            const StateVector& initial,
                            std::vector<double> times) {
  validate(params);
  check_consistent(initial);
  if (initial.basis.n_atoms != params.n_atoms)
    throw domain_error("evolve: initial state atom number does not match");
  if (std::abs(initial.norm() - 1.0) > 1e-8)
    throw domain_error("evolve: initial state must be normalized");
  for (double t : times)
    if (!std::isfinite(t)) throw domain_error("evolve: non-finite time");

  const TridiagonalBlock block =
      block_hamiltonian(params, initial.basis.magnetization);
  const TridiagonalEigen eig = full_tridiagonal_eigh(block.diag, block.off);
  const int dim = block.basis.dim();

  // Eigenbasis coordinates of the initial state, real and imaginary parts
  // kept separate so propagation runs on real matrix products.
  const Eigen::VectorXd g_re = initial.amplitudes.real();
  const Eigen::VectorXd g_im = initial.amplitudes.imag();
  const Eigen::VectorXd w_re = eig.vectors.transpose() * g_re;
  const Eigen::VectorXd w_im = eig.vectors.transpose() * g_im;

  DynamicsTrace trace;
  trace.params = params;
  trace.times = std::move(times);
  trace.states.resize(trace.times.size());

  const int total = static_cast<int>(trace.times.size());
  for (int begin = 0; begin < total; begin += detail::kPropagationChunk) {
    const int count = std::min(detail::kPropagationChunk, total - begin);
    Eigen::MatrixXd z_re(dim, count), z_im(dim, count);
    for (int c = 0; c < count; ++c) {
      const double t = trace.times[static_cast<std::size_t>(begin + c)];
      for (int j = 0; j < dim; ++j) {
        // e^{-i lambda t} (w_re + i w_im)
        const double angle = eig.values[j] * t;
        const double cs = std::cos(angle), sn = std::sin(angle);
        z_re(j, c) = cs * w_re[j] + sn * w_im[j];
        z_im(j, c) = cs * w_im[j] - sn * w_re[j];
      }
    }
    const Eigen::MatrixXd out_re = eig.vectors * z_re;
    const Eigen::MatrixXd out_im = eig.vectors * z_im;
    for (int c = 0; c < count; ++c) {
      StateVector& s = trace.states[static_cast<std::size_t>(begin + c)];
      s.basis = block.basis;
      const double t = trace.times[static_cast<std::size_t>(begin + c)];
      if (t == 0.0) {
        // Exact copy: the t = 0 sample of a trace must equal the initial
        // state bit for bit.
        s.amplitudes = initial.amplitudes;
      } else {
        s.amplitudes.resize(dim);
        s.amplitudes.real() = out_re.col(c);
        s.amplitudes.imag() = out_im.col(c);
      }
    }
  }
  return trace;
}

// Zero-magnetization reduced moments:
//   half_power = sum_k |g_k|^2 ((k+1)(N-2k) + (N-2k+1) k)
//   transfer   = sum_{k>=1} conj(g_k) g_{k-1} k sqrt((N-2k+2)(N-2k+1))
// Exact identities map them onto the general fixed-m moments: the quadrature
// power is 2 * half_power and the pair coherence is conj(transfer), so the
// bit patterns of a static record and a trace record coincide.
struct ReducedMoments {
  double half_power = 0.0;
  std::complex<double> transfer = 0.0;
};

inline ReducedMoments reduced_zero_m_moments(const StateVector& s) {
  check_consistent(s);
  if (s.basis.magnetization != 0)
    throw domain_error("reduced_zero_m_moments: requires the m = 0 sector");
  const long long n = s.basis.n_atoms;
  ReducedMoments rm;
  for (int i = 0; i < s.basis.dim(); ++i) {
    const long long k = i;  // m = 0 sector starts at k_min = 0
    const long long coef = (k + 1) * (n - 2 * k) + (n - 2 * k + 1) * k;
    rm.half_power += std::norm(s.amplitudes[i]) * static_cast<double>(coef);
    if (k >= 1) {
      const long long prod = k * k * (n - 2 * k + 2) * (n - 2 * k + 1);
      rm.transfer += std::conj(s.amplitudes[i]) * s.amplitudes[i - 1] *
                     std::sqrt(static_cast<double>(prod));
    }
  }
  return rm;
}

struct TraceRecord {
  double t = 0.0;
  std::optional<double> xi2;
  std::optional<double> xi2_db;
  double phi_opt = 0.0;
  double f_max = 0.0;
  QfiBranch branch = QfiBranch::rotation_plane;
  double q_plus_var = 0.0;
  double n0_frac = 0.0;
  double n1_frac = 0.0;
};

// Squeezing/QFI record of one state; shared by static scans and traces.
// Zero-magnetization states go through the reduced sums above.
inline TraceRecord observable_record(const StateVector& s) {
  MomentSet mom;
  if (s.basis.magnetization == 0) {
    const ReducedMoments rm = reduced_zero_m_moments(s);
    mom.quadrature_power = 2.0 * rm.half_power;
    mom.pair_coherence = std::conj(rm.transfer);
    mom.q_plus_mean = q_plus_mean(s);
    mom.q_plus_var = q_plus_variance(s);
    mom.populations = mode_populations(s);
  } else {
    mom = moments_fixed_m(s);
  }
  const SqueezingResult sq = squeezing_xi_x(mom);
  const QfiResult qf = qfi_max(mom);
  TraceRecord rec;
  rec.xi2 = sq.value;
  rec.xi2_db = sq.db;
  rec.phi_opt = sq.phi_opt;
  rec.f_max = qf.f_max;
  rec.branch = qf.branch;
  rec.q_plus_var = mom.q_plus_var;
  const double n = static_cast<double>(s.basis.n_atoms);
  rec.n0_frac = mom.populations[1] / n;
  rec.n1_frac = mom.populations[0] / n;
  return rec;
}

inline std::vector<TraceRecord> trace_observables(const DynamicsTrace& trace) {
  std::vector<TraceRecord> records(trace.states.size());
  for (std::size_t i = 0; i < trace.states.size(); ++i) {
    records[i] = observable_record(trace.states[i]);
    records[i].t = trace.times[i];
  }
  return records;
}

// Time averages over a window [t_lo, t_hi] (inclusive). xi2_mean averages the
// defined samples only; undefined_count reports how many were skipped. The
// db value of a window is 10 log10 of the averaged xi^2.
struct WindowAverage {
  std::optional<double> xi2_mean;
  double n0_frac_mean = 0.0;
  double f_mean = 0.0;
  int undefined_count = 0;
  int sample_count = 0;
};

inline WindowAverage time_average(const std::vector<double>& times,
                                  const std::vector<TraceRecord>& records,
                                  double t_lo, double t_hi) {
  if (times.size() != records.size())
    throw domain_error("time_average: times/records size mismatch");
  if (!(t_lo <= t_hi))
    throw domain_error("time_average: window must be ordered");
  WindowAverage avg;
  double xi2_sum = 0.0;
  int xi2_count = 0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < t_lo || times[i] > t_hi) continue;
    ++avg.sample_count;
    avg.n0_frac_mean += records[i].n0_frac;
    avg.f_mean += records[i].f_max;
    if (records[i].xi2) {
      xi2_sum += *records[i].xi2;
      ++xi2_count;
    } else {
      ++avg.undefined_count;
    }
  }
  if (avg.sample_count < 100)
    throw domain_error("time_average: window must cover at least 100 samples");
  avg.n0_frac_mean /= avg.sample_count;
  avg.f_mean /= avg.sample_count;
  if (xi2_count > 0) avg.xi2_mean = xi2_sum / xi2_count;
  return avg;
}

}  // namespace spinsq
