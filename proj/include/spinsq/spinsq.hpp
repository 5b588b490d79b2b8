#pragma once

// Exact diagonalization and spin-mixing dynamics of the single-mode spin-1
// condensate with dipolar coupling: sector bases, tridiagonal Hamiltonian
// blocks, ground-state scans, quadrature squeezing and quantum Fisher
// information, exact time traces, and the SU(1,1) closed-form cross-check.

#include "spinsq/basis.hpp"
#include "spinsq/bogoliubov.hpp"
#include "spinsq/dense.hpp"
#include "spinsq/dynamics.hpp"
#include "spinsq/eigh.hpp"
#include "spinsq/errors.hpp"
#include "spinsq/ground.hpp"
#include "spinsq/hamiltonian.hpp"
#include "spinsq/model.hpp"
#include "spinsq/observables.hpp"
#include "spinsq/runners.hpp"
#include "spinsq/state.hpp"
#include "spinsq/sweep.hpp"
#include "spinsq/table.hpp"
#include "spinsq/version.hpp"
