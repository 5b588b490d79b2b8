#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "spinsq/eigh.hpp"
#include "spinsq/errors.hpp"
#include "spinsq/hamiltonian.hpp"
#include "spinsq/model.hpp"
#include "spinsq/state.hpp"

namespace spinsq {

namespace detail {

// Sign convention for real eigenvectors: first amplitude above threshold is
// made positive, so equal states compare equal across solver variations.
inline void fix_phase(Eigen::VectorXd& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-12) {
      if (v[i] < 0.0) v = -v;
      return;
    }
  }
}

}  // namespace detail

struct BlockGround {
  double energy = 0.0;
  StateVector state;
};

inline BlockGround block_ground(const TridiagonalBlock& block) {
  Eigenpair pair = lowest_eigenpair(block.diag, block.off);
  detail::fix_phase(pair.vector);
  BlockGround g;
  g.energy = pair.value;
  g.state.basis = block.basis;
  g.state.amplitudes = pair.vector.cast<std::complex<double>>();
  return g;
}

// Global ground state across all magnetization sectors.
//
// degenerate_ms lists every sector whose minimum lies within 1e-9 * N of the
// global minimum (ascending). The representative sector m_star is the tied
// sector with smallest |m|, the nonnegative one on a +/- tie.
struct GroundResult {
  ModelParams params;
  int m_star = 0;
  double energy = 0.0;
  StateVector state;
  std::vector<int> degenerate_ms;
};

inline GroundResult global_ground(const ModelParams& params) {
  validate(params);
  const int n = params.n_atoms;
  std::vector<double> energies(static_cast<std::size_t>(2 * n + 1));
  double best = std::numeric_limits<double>::infinity();
  for (int m = -n; m <= n; ++m) {
    const TridiagonalBlock block = block_hamiltonian(params, m);
    const double e = lowest_eigenvalue(block.diag, block.off);
    energies[static_cast<std::size_t>(m + n)] = e;
    if (e < best) best = e;
  }
  const double tie_tol = 1e-9 * n;
  GroundResult result;
  result.params = params;
  for (int m = -n; m <= n; ++m)
    if (energies[static_cast<std::size_t>(m + n)] <= best + tie_tol)
      result.degenerate_ms.push_back(m);
  int m_star = result.degenerate_ms.front();
  for (int m : result.degenerate_ms) {
    const bool better = std::abs(m) < std::abs(m_star) ||
                        (std::abs(m) == std::abs(m_star) && m > m_star);
    if (better) m_star = m;
  }
  result.m_star = m_star;
  const BlockGround g = block_ground(block_hamiltonian(params, m_star));
  result.energy = g.energy;
  result.state = g.state;
  return result;
}

// Closed-form pair-condensate ground state of the pure spin-exchange
// antiferromagnet (total spin 0, even N, m = 0 sector):
//
//   g_0 = 1 / sqrt(N + 1),
//   g_k = (-1)^k g_0 * prod_{x < k} sqrt((N - 2x) / (N - 2x - 1)).
//
// Amplitude magnitudes are evaluated as exp of summed logs; the raw product
// form overflows double range long before N = 200.
inline StateVector singlet_state(int n_atoms) {
  if (n_atoms < 2 || n_atoms % 2 != 0)
    throw domain_error("singlet_state: requires even n_atoms >= 2");
  StateVector s;
  s.basis = subspace_basis(n_atoms, 0);
  s.amplitudes.resize(s.basis.dim());
  const double log_norm = -0.5 * std::log(static_cast<double>(n_atoms) + 1.0);
  double log_prod = 0.0;
  for (int k = 0; k <= n_atoms / 2; ++k) {
    if (k > 0) {
      const int x = k - 1;
      log_prod += 0.5 * (std::log(static_cast<double>(n_atoms - 2 * x)) -
                         std::log(static_cast<double>(n_atoms - 2 * x - 1)));
    }
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    s.amplitudes[k] = sign * std::exp(log_norm + log_prod);
  }
  return s;
}

// Closed-form ground state of the odd-N spin-exchange antiferromagnet
// (total spin 1, m = 0 sector). With n = (N - 1) / 2:
//
//   amp_k = (-1)^k c0 sqrt(3 (2n - 2k + 1) / (k + 1))
//           * prod_{x < k} sqrt((x + 2)(2n - 2x) / ((x + 1)(2n - 2x - 1))),
//   c0 = 1 / sqrt(4 n^2 + 8 n + 3).
inline StateVector spin_one_state(int n_atoms) {
  if (n_atoms < 1 || n_atoms % 2 != 1)
    throw domain_error("spin_one_state: requires odd n_atoms >= 1");
  StateVector s;
  s.basis = subspace_basis(n_atoms, 0);
  s.amplitudes.resize(s.basis.dim());
  const long long n = (n_atoms - 1) / 2;
  const double log_c0 =
      -0.5 * std::log(static_cast<double>(4 * n * n + 8 * n + 3));
  double log_prod = 0.0;
  for (int k = 0; k <= (n_atoms - 1) / 2; ++k) {
    if (k > 0) {
      const long long x = k - 1;
      log_prod +=
          0.5 * (std::log(static_cast<double>(x + 2)) +
                 std::log(static_cast<double>(2 * n - 2 * x)) -
                 std::log(static_cast<double>(x + 1)) -
                 std::log(static_cast<double>(2 * n - 2 * x - 1)));
    }
    const double log_head =
        0.5 * (std::log(3.0 * static_cast<double>(2 * n - 2 * k + 1)) -
               std::log(static_cast<double>(k) + 1.0));
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    s.amplitudes[k] = sign * std::exp(log_c0 + log_head + log_prod);
  }
  return s;
}

// Product reference states used as scan anchors and dynamics launch points.
enum class NamedState {
  polar,      // all atoms in mode 0
  twin_fock,  // N/2 atoms in each of modes +1 and -1 (even N)
  stretched,  // all atoms in mode +1
};

inline StateVector named_state(NamedState kind, int n_atoms) {
  if (n_atoms < 1) throw domain_error("named_state: n_atoms must be >= 1");
  switch (kind) {
    case NamedState::polar:
      return unit_fock_state(subspace_basis(n_atoms, 0), 0);
    case NamedState::twin_fock:
      if (n_atoms % 2 != 0)
        throw domain_error("named_state: twin_fock requires even n_atoms");
      return unit_fock_state(subspace_basis(n_atoms, 0), n_atoms / 2);
    case NamedState::stretched:
      return unit_fock_state(subspace_basis(n_atoms, n_atoms), n_atoms);
  }
  throw domain_error("named_state: unknown kind");
}

}  // namespace spinsq
