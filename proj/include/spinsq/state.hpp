#pragma once

#include <Eigen/Dense>
#include <complex>

#include "spinsq/basis.hpp"
#include "spinsq/errors.hpp"

namespace spinsq {

// State confined to one magnetization sector; amplitudes follow the basis
// order (k ascending).
struct StateVector {
  SubspaceBasis basis;
  Eigen::VectorXcd amplitudes;

  double norm() const { return amplitudes.norm(); }
};

inline void check_consistent(const StateVector& s) {
  if (s.amplitudes.size() != s.basis.dim())
    throw domain_error("StateVector: amplitude count does not match basis");
}

// |k> with unit amplitude.
inline StateVector unit_fock_state(const SubspaceBasis& basis, int k) {
  StateVector s;
  s.basis = basis;
  s.amplitudes = Eigen::VectorXcd::Zero(basis.dim());
  s.amplitudes[basis.index_of(k)] = 1.0;
  return s;
}

}  // namespace spinsq
