#include <catch2/catch_amalgamated.hpp>

#include "spinsq/basis.hpp"

using namespace spinsq;

namespace {

// Brute-force count of occupation triples with the sector's (N, m).
int brute_force_sector_dim(int n, int m) {
  int count = 0;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b) {
      const int c = n - a - b;
      if (a - c == m) ++count;
    }
  return count;
}

}  // namespace

TEST_CASE("sector dimensions match brute-force enumeration") {
  for (int n = 1; n <= 20; ++n) {
    int total = 0;
    for (int m = -n; m <= n; ++m) {
      const SubspaceBasis b = subspace_basis(n, m);
      REQUIRE(b.dim() == brute_force_sector_dim(n, m));
      REQUIRE(b.dim() >= 1);
      total += b.dim();
    }
    REQUIRE(total == full_dimension(n));
    REQUIRE(full_dimension(n) == (n + 1) * (n + 2) / 2);
  }
}

TEST_CASE("sector occupations are consistent") {
  for (int n : {1, 2, 3, 7, 12, 41}) {
    for (int m = -n; m <= n; ++m) {
      const SubspaceBasis b = subspace_basis(n, m);
      for (int k = b.k_min; k <= b.k_max; ++k) {
        const Occupation occ = b.occupation(k);
        REQUIRE(occ.n_plus >= 0);
        REQUIRE(occ.n_zero >= 0);
        REQUIRE(occ.n_minus >= 0);
        REQUIRE(occ.n_plus + occ.n_zero + occ.n_minus == n);
        REQUIRE(occ.n_plus - occ.n_minus == m);
        REQUIRE(occ.n_plus == k);
        REQUIRE(b.index_of(k) == k - b.k_min);
        REQUIRE(b.contains(k));
      }
      REQUIRE_FALSE(b.contains(b.k_min - 1));
      REQUIRE_FALSE(b.contains(b.k_max + 1));
      REQUIRE_THROWS_AS(b.occupation(b.k_max + 1), domain_error);
      REQUIRE_THROWS_AS(b.index_of(b.k_min - 1), domain_error);
    }
  }
}

TEST_CASE("full enumeration is m-major, k ascending, and indexable") {
  for (int n : {1, 2, 5, 9}) {
    const std::vector<FockLabel> labels = enumerate_full_basis(n);
    REQUIRE(static_cast<int>(labels.size()) == full_dimension(n));
    const FullBasisIndex index(n);
    REQUIRE(index.dim() == full_dimension(n));
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i > 0) {
        const bool ordered =
            labels[i - 1].magnetization < labels[i].magnetization ||
            (labels[i - 1].magnetization == labels[i].magnetization &&
             labels[i - 1].k < labels[i].k);
        REQUIRE(ordered);
      }
      REQUIRE(index.index(labels[i].magnetization, labels[i].k) ==
              static_cast<int>(i));
      const SubspaceBasis b = subspace_basis(n, labels[i].magnetization);
      REQUIRE(index.index(b.occupation(labels[i].k)) == static_cast<int>(i));
    }
  }
}

TEST_CASE("basis argument validation") {
  REQUIRE_THROWS_AS(subspace_basis(0, 0), domain_error);
  REQUIRE_THROWS_AS(subspace_basis(4, 5), domain_error);
  REQUIRE_THROWS_AS(subspace_basis(4, -5), domain_error);
  REQUIRE_THROWS_AS(full_dimension(0), domain_error);
  const FullBasisIndex index(3);
  REQUIRE_THROWS_AS(index.index(4, 0), domain_error);
  REQUIRE_THROWS_AS(index.index(0, 2), domain_error);
}
