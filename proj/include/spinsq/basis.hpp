#pragma once

#include <vector>

#include "spinsq/errors.hpp"

namespace spinsq {

// Occupations of the three Zeeman modes, in the fixed order (+1, 0, -1).
struct Occupation {
  int n_plus = 0;
  int n_zero = 0;
  int n_minus = 0;
};

// Fock basis of the magnetization sector (N, m). Both total atom number
// N = n_plus + n_zero + n_minus and magnetization m = n_plus - n_minus are
// conserved, so a sector state is labeled by the single integer k = n_plus:
//
//   |k>  =  |n_plus = k, n_zero = N - 2k + m, n_minus = k - m>
//
// k runs over [max(0, m), floor((N + m) / 2)]; states are stored k ascending.
struct SubspaceBasis {
  int n_atoms = 0;
  int magnetization = 0;
  int k_min = 0;
  int k_max = 0;

  int dim() const { return k_max - k_min + 1; }

  bool contains(int k) const { return k >= k_min && k <= k_max; }

  int index_of(int k) const {
    if (!contains(k)) throw domain_error("SubspaceBasis: k outside sector");
    return k - k_min;
  }

  Occupation occupation(int k) const {
    if (!contains(k)) throw domain_error("SubspaceBasis: k outside sector");
    return Occupation{k, n_atoms - 2 * k + magnetization, k - magnetization};
  }
};

inline SubspaceBasis subspace_basis(int n_atoms, int magnetization) {
  if (n_atoms < 1) throw domain_error("subspace_basis: n_atoms must be >= 1");
  if (magnetization < -n_atoms || magnetization > n_atoms)
    throw domain_error("subspace_basis: |m| must not exceed n_atoms");
  SubspaceBasis b;
  b.n_atoms = n_atoms;
  b.magnetization = magnetization;
  b.k_min = magnetization > 0 ? magnetization : 0;
  b.k_max = (n_atoms + magnetization) / 2;
  return b;
}

// Number of three-mode Fock states with N atoms: (N + 1)(N + 2) / 2.
inline int full_dimension(int n_atoms) {
  if (n_atoms < 1) throw domain_error("full_dimension: n_atoms must be >= 1");
  return (n_atoms + 1) * (n_atoms + 2) / 2;
}

struct FockLabel {
  int magnetization = 0;
  int k = 0;
};

// All sector labels in canonical flat order: m ascending, k ascending inside
// each sector. This is the row/column order of every dense-oracle matrix.
inline std::vector<FockLabel> enumerate_full_basis(int n_atoms) {
  std::vector<FockLabel> labels;
  labels.reserve(static_cast<std::size_t>(full_dimension(n_atoms)));
  for (int m = -n_atoms; m <= n_atoms; ++m) {
    const SubspaceBasis b = subspace_basis(n_atoms, m);
    for (int k = b.k_min; k <= b.k_max; ++k) labels.push_back(FockLabel{m, k});
  }
  return labels;
}

// Arithmetic (m, k) -> flat-index map for the canonical order above.
class FullBasisIndex {
 public:
  explicit FullBasisIndex(int n_atoms) : n_atoms_(n_atoms) {
    offsets_.resize(static_cast<std::size_t>(2 * n_atoms + 2), 0);
    int at = 0;
    for (int m = -n_atoms; m <= n_atoms; ++m) {
      offsets_[static_cast<std::size_t>(m + n_atoms)] = at;
      at += subspace_basis(n_atoms, m).dim();
    }
    offsets_.back() = at;
  }

  int n_atoms() const { return n_atoms_; }
  int dim() const { return offsets_.back(); }

  int sector_offset(int m) const {
    if (m < -n_atoms_ || m > n_atoms_)
      throw domain_error("FullBasisIndex: |m| must not exceed n_atoms");
    return offsets_[static_cast<std::size_t>(m + n_atoms_)];
  }

  int index(int m, int k) const {
    const SubspaceBasis b = subspace_basis(n_atoms_, m);
    return sector_offset(m) + b.index_of(k);
  }

  int index(const Occupation& occ) const {
    return index(occ.n_plus - occ.n_minus, occ.n_plus);
  }

 private:
  int n_atoms_;
  std::vector<int> offsets_;
};

}  // namespace spinsq
