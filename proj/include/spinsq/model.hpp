#pragma once

#include <cmath>

#include "spinsq/errors.hpp"

namespace spinsq {

// Sign of the spin-exchange interaction. The antiferromagnetic branch favors
// small total spin, the ferromagnetic branch maximal total spin.
enum class InteractionSign : int {
  antiferromagnetic = +1,
  ferromagnetic = -1,
};

inline double sign_value(InteractionSign s) {
  return s == InteractionSign::antiferromagnetic ? 1.0 : -1.0;
}

inline const char* sign_name(InteractionSign s) {
  return s == InteractionSign::antiferromagnetic ? "antiferromagnetic"
                                                 : "ferromagnetic";
}

// Physical configuration of the single-mode spin-1 condensate.
//
// Energies are measured in units of the spin-exchange strength |c2'| and times
// in hbar/|c2'|, so the only continuous knob is the dipolar-to-exchange ratio
// c. In these units the Hamiltonian reads
//
//   H = (sign - c) * S^2 + 3 c * S_z^2 + 3 c * n_0
//
// with S the collective spin and n_0 the population of the Zeeman mode 0.
struct ModelParams {
  int n_atoms = 0;
  double c = 0.0;
  InteractionSign sign = InteractionSign::antiferromagnetic;
};

inline void validate(const ModelParams& p) {
  if (p.n_atoms < 1) throw domain_error("ModelParams: n_atoms must be >= 1");
  if (!std::isfinite(p.c))
    throw domain_error("ModelParams: coupling ratio c must be finite");
}

}  // namespace spinsq
