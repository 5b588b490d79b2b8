#include <catch2/catch_amalgamated.hpp>
#include <complex>

#include "spinsq/dense.hpp"
#include "spinsq/ground.hpp"

using namespace spinsq;
using namespace std::complex_literals;

namespace {

double comm_defect(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                   const Eigen::MatrixXcd& expect) {
  return (a * b - b * a - expect).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("bilinears: adjoint pairing and number operators") {
  const int n = 5;
  for (int alpha : {+1, 0, -1})
    for (int beta : {+1, 0, -1}) {
      const DenseOperator ab = bilinear_matrix(n, alpha, beta);
      const DenseOperator ba = bilinear_matrix(n, beta, alpha);
      REQUIRE((ab.mat - ba.mat.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    }
  Eigen::MatrixXcd total = bilinear_matrix(n, +1, +1).mat +
                           bilinear_matrix(n, 0, 0).mat +
                           bilinear_matrix(n, -1, -1).mat;
  const Eigen::MatrixXcd expect =
      static_cast<double>(n) *
      Eigen::MatrixXcd::Identity(total.rows(), total.cols());
  REQUIRE((total - expect).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("spin operators close the angular momentum algebra") {
  const int n = 6;
  const SpinOperators s = spin_matrices(n);
  REQUIRE(max_hermiticity_defect(s.s_x) <= 1e-12);
  REQUIRE(max_hermiticity_defect(s.s_y) <= 1e-12);
  REQUIRE(max_hermiticity_defect(s.s_z) <= 1e-12);
  REQUIRE(max_hermiticity_defect(s.s_squared) <= 1e-12);
  REQUIRE(comm_defect(s.s_x.mat, s.s_y.mat, 1i * s.s_z.mat) <= 1e-12);
  REQUIRE(comm_defect(s.s_y.mat, s.s_z.mat, 1i * s.s_x.mat) <= 1e-12);
  REQUIRE(comm_defect(s.s_z.mat, s.s_x.mat, 1i * s.s_y.mat) <= 1e-12);
  const Eigen::MatrixXcd zero =
      Eigen::MatrixXcd::Zero(s.s_x.mat.rows(), s.s_x.mat.cols());
  REQUIRE(comm_defect(s.s_squared.mat, s.s_x.mat, zero) <= 1e-10);
  REQUIRE(comm_defect(s.s_squared.mat, s.s_z.mat, zero) <= 1e-10);
}

TEST_CASE("S_z is diagonal with the sector magnetization") {
  const int n = 7;
  const SpinOperators s = spin_matrices(n);
  const std::vector<FockLabel> labels = enumerate_full_basis(n);
  for (int i = 0; i < s.s_z.mat.rows(); ++i) {
    for (int j = 0; j < s.s_z.mat.cols(); ++j) {
      const std::complex<double> want =
          (i == j) ? std::complex<double>(
                         labels[static_cast<std::size_t>(i)].magnetization)
                   : 0.0;
      REQUIRE(std::abs(s.s_z.mat(i, j) - want) == 0.0);
    }
  }
}

TEST_CASE("quadrupoles: hermiticity, closure, and the squeezing-plane algebra") {
  const int n = 6;
  const SpinOperators s = spin_matrices(n);
  const QuadrupoleOperators q = quadrupole_matrices(n);
  for (const DenseOperator* op :
       {&q.q_yz, &q.q_xz, &q.q_xx, &q.q_yy, &q.q_zz, &q.q_plus})
    REQUIRE(max_hermiticity_defect(*op) <= 1e-12);
  REQUIRE((q.q_xx.mat + q.q_yy.mat + q.q_zz.mat).cwiseAbs().maxCoeff() <=
          1e-12);
  REQUIRE((q.q_plus.mat - (q.q_zz.mat - q.q_yy.mat)).cwiseAbs().maxCoeff() ==
          0.0);
  // (S_x, Q_yz, Q_plus/2) closes like a doubled su(2).
  REQUIRE(comm_defect(s.s_x.mat, q.q_yz.mat, 1i * q.q_plus.mat) <= 1e-12);
  REQUIRE(comm_defect(q.q_yz.mat, q.q_plus.mat, 4i * s.s_x.mat) <= 1e-12);
  REQUIRE(comm_defect(q.q_plus.mat, s.s_x.mat, 4i * q.q_yz.mat) <= 1e-12);
  // Same structure for the conjugate plane (S_y, Q_xz, Q_xx - Q_zz).
  const Eigen::MatrixXcd d_y = q.q_xx.mat - q.q_zz.mat;
  REQUIRE(comm_defect(s.s_y.mat, q.q_xz.mat, 1i * d_y) <= 1e-12);
  REQUIRE(comm_defect(q.q_xz.mat, d_y, 4i * s.s_y.mat) <= 1e-12);
}

TEST_CASE("dense cap and argument validation") {
  REQUIRE_THROWS_AS(bilinear_matrix(kDenseOracleCap + 1, 0, 0),
                    resource_error);
  REQUIRE_THROWS_AS(bilinear_matrix(0, 0, 0), domain_error);
  REQUIRE_THROWS_AS(bilinear_matrix(4, 2, 0), domain_error);
  REQUIRE_NOTHROW(bilinear_matrix(14, 0, 0, 14));  // explicit cap raise
}

TEST_CASE("embedding into the full basis preserves norm and sector") {
  const int n = 3;
  const StateVector polar = named_state(NamedState::polar, n);
  const Eigen::VectorXcd psi = embed_in_full_basis(polar);
  REQUIRE(psi.size() == full_dimension(n));
  REQUIRE(std::abs(psi.norm() - 1.0) <= 1e-15);
  const FullBasisIndex index(n);
  REQUIRE(std::abs(psi[index.index(0, 0)] - 1.0) == 0.0);

  const DenseOperator n0 = bilinear_matrix(n, 0, 0);
  REQUIRE(std::abs(expectation(n0, psi).real() - n) <= 1e-14);
  const SpinOperators s = spin_matrices(n);
  REQUIRE(std::abs(expectation(s.s_x, psi)) <= 1e-14);
  // On the polar state the quadrature power splits evenly: <S_x^2> = N.
  REQUIRE(std::abs(variance(s.s_x, psi) - n) <= 1e-12);
  REQUIRE(variance(s.s_z, psi) <= 1e-14);
}
