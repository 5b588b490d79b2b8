#pragma once

#include <complex>
#include <random>

#include "spinsq/basis.hpp"
#include "spinsq/state.hpp"

namespace testutil {

// Deterministic sector states for property tests.
inline spinsq::StateVector random_state(int n_atoms, int m, std::mt19937& rng) {
  spinsq::StateVector s;
  s.basis = spinsq::subspace_basis(n_atoms, m);
  s.amplitudes.resize(s.basis.dim());
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int i = 0; i < s.basis.dim(); ++i)
    s.amplitudes[i] = std::complex<double>(gauss(rng), gauss(rng));
  s.amplitudes /= s.norm();
  return s;
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace testutil
