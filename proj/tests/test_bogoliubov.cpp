#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "spinsq/bogoliubov.hpp"
#include "spinsq/dynamics.hpp"
#include "spinsq/ground.hpp"

using namespace spinsq;

namespace {

ModelParams afm(int n, double c) {
  return ModelParams{n, c, InteractionSign::antiferromagnetic};
}

}  // namespace

TEST_CASE("effective pair-mode coefficients at hand-checked points") {
  {
    // c = 1 removes the pump: alpha = -6, beta = 0, theta = 3.
    const BogoliubovParams bp = effective_params(afm(1000, 1.0));
    REQUIRE(bp.alpha == -6.0);
    REQUIRE(bp.beta == 0.0);
    REQUIRE(bp.regime_valid);
    REQUIRE(bp.theta == 3.0);
    for (double t : {0.0, 0.3, 2.0}) {
      const SqueezedVacuumPoint p = xi2_qfi_approx(bp, 1000, t);
      REQUIRE(p.xi2 == 1.0);
      REQUIRE(p.f_max == 4000.0);
    }
  }
  {
    // c = 0.5, N = 1000: |beta| = 2000 exceeds |alpha| = 1996; unstable.
    const BogoliubovParams bp = effective_params(afm(1000, 0.5));
    REQUIRE(bp.alpha == 1996.0);
    REQUIRE(bp.beta == 2000.0);
    REQUIRE_FALSE(bp.regime_valid);
    REQUIRE(bp.theta == 0.0);
    REQUIRE_THROWS_AS(xi2_qfi_approx(bp, 1000, 0.1), domain_error);
    REQUIRE_THROWS_AS(optimal_values(bp, 1000), domain_error);
  }
  {
    // c = 1.1, N = 1000: |alpha| - |beta| = 4c + 2 = 6.4.
    const BogoliubovParams bp = effective_params(afm(1000, 1.1));
    REQUIRE(bp.alpha == Catch::Approx(-406.4).epsilon(1e-14));
    REQUIRE(bp.beta == Catch::Approx(-400.0).epsilon(1e-14));
    REQUIRE(std::abs(bp.alpha) - std::abs(bp.beta) ==
            Catch::Approx(6.4).epsilon(1e-12));
    const OptimalValues v = optimal_values(bp, 1000);
    REQUIRE(v.t_opt == Catch::Approx(M_PI / std::sqrt(6.4 * 806.4))
                           .epsilon(1e-13));
    REQUIRE(v.xi2_min == Catch::Approx(6.4 / 806.4).epsilon(1e-13));
    REQUIRE(v.f_at_topt ==
            Catch::Approx(4000.0 * 806.4 / 6.4).epsilon(1e-13));
  }
}

TEST_CASE("xi^2 F = 4N on the squeezed-vacuum family, both routes") {
  for (double c : {1.05, 1.3, 2.0, 5.0}) {
    for (int n : {100, 1000}) {
      const BogoliubovParams bp = effective_params(afm(n, c));
      REQUIRE(bp.regime_valid);
      const OptimalValues v = optimal_values(bp, n);
      for (int i = 0; i <= 20; ++i) {
        const double t = 1.9 * v.t_opt * i / 20.0;
        const SqueezedVacuumPoint p = xi2_qfi_approx(bp, n, t);
        REQUIRE(p.xi2 * p.f_max ==
                Catch::Approx(4.0 * n).epsilon(1e-12));
        // The two routes are algebraically identical but round differently
        // near the deep minimum, so compare at 1e-10 instead of 1e-12.
        const SqueezedVacuumPoint q = xi2_qfi_from_k(bp, n, t);
        REQUIRE(q.xi2 == Catch::Approx(p.xi2).epsilon(1e-10));
        REQUIRE(q.f_max == Catch::Approx(p.f_max).epsilon(1e-10));
        REQUIRE(p.xi2 >= v.xi2_min - 1e-12);
        REQUIRE(p.xi2 <= 1.0 + 1e-12);
      }
      // The minimum is reached exactly at t_opt.
      const SqueezedVacuumPoint at_opt = xi2_qfi_approx(bp, n, v.t_opt);
      REQUIRE(at_opt.xi2 == Catch::Approx(v.xi2_min).epsilon(1e-10));
      REQUIRE(at_opt.f_max == Catch::Approx(v.f_at_topt).epsilon(1e-10));
    }
  }
}

TEST_CASE("generator expectations satisfy the SU(1,1) constraint") {
  // Pure squeezed vacuum: K_z^2 - |K_+|^2 = 1/4.
  const BogoliubovParams bp = effective_params(afm(500, 1.2));
  for (double t : {0.05, 0.2, 0.6, 1.1}) {
    const KExpectations k = k_expectations(bp, t);
    REQUIRE(k.k_z * k.k_z - k.k_plus_abs * k.k_plus_abs ==
            Catch::Approx(0.25).epsilon(1e-9));
    REQUIRE(k.k_z >= 0.5);
  }
}

TEST_CASE("closed form tracks exact dynamics near the polar state") {
  // The undepleted approximation is asymptotic in c -> 1+: at N = 1000 it
  // stays within 10% of the exact trace for t <= t_opt at c = 1.05 (pump
  // depletion ~3%), while at larger c the deviation grows with depletion.
  // The strict 10% gate therefore runs at c = 1.05; the c sweep below pins
  // the convergence direction and the sign of the depletion bias.
  const int n = 1000;
  {
    const ModelParams params = afm(n, 1.05);
    const BogoliubovParams bp = effective_params(params);
    REQUIRE(bp.regime_valid);
    const OptimalValues v = optimal_values(bp, n);

    const StateVector initial = named_state(NamedState::polar, n);
    std::vector<double> times;
    for (int i = 0; i <= 40; ++i) times.push_back(v.t_opt * i / 40.0);
    const DynamicsTrace trace = evolve(params, initial, times);
    const std::vector<TraceRecord> recs = trace_observables(trace);

    double exact_min = 1e300;
    for (std::size_t i = 1; i < times.size(); ++i) {
      const SqueezedVacuumPoint p = xi2_qfi_approx(bp, n, times[i]);
      REQUIRE(recs[i].xi2.has_value());
      REQUIRE(std::abs(p.xi2 - *recs[i].xi2) <= 0.10 * p.xi2);
      REQUIRE(std::abs(p.f_max - recs[i].f_max) <= 0.10 * p.f_max);
      exact_min = std::min(exact_min, *recs[i].xi2);
    }
    REQUIRE(std::abs(v.xi2_min - exact_min) <= 0.10 * v.xi2_min);
  }
  {
    double prev_dev = 0.0;
    for (double c : {1.05, 1.1, 1.2}) {
      const ModelParams params = afm(n, c);
      const BogoliubovParams bp = effective_params(params);
      const OptimalValues v = optimal_values(bp, n);
      std::vector<double> times;
      for (int i = 0; i <= 40; ++i) times.push_back(1.2 * v.t_opt * i / 40.0);
      const DynamicsTrace trace =
          evolve(params, named_state(NamedState::polar, n), times);
      double exact_min = 1e300;
      for (const TraceRecord& r : trace_observables(trace)) {
        REQUIRE(r.xi2.has_value());
        exact_min = std::min(exact_min, *r.xi2);
      }
      // Depletion weakens the attainable squeezing, so the exact optimum
      // sits above the undepleted prediction, by a margin that grows
      // with c.
      REQUIRE(exact_min > v.xi2_min);
      const double dev = (exact_min - v.xi2_min) / v.xi2_min;
      REQUIRE(dev > prev_dev);
      prev_dev = dev;
    }
  }
}

TEST_CASE("domain and numerical guards") {
  REQUIRE_THROWS_AS(
      effective_params(ModelParams{100, 1.2, InteractionSign::ferromagnetic}),
      domain_error);
  REQUIRE_THROWS_AS(effective_params(ModelParams{
                        0, 1.2, InteractionSign::antiferromagnetic}),
                    domain_error);

  const BogoliubovParams bp = effective_params(afm(1000, 1.1));
  REQUIRE_THROWS_AS(
      detail::gamma_pair(bp, std::numeric_limits<double>::quiet_NaN()),
      domain_error);
  REQUIRE_THROWS_AS(xi2_qfi_approx(bp, 0, 0.1), domain_error);

  // A ratio driven against the unit boundary must fail loudly, not return
  // garbage.
  BogoliubovParams edge;
  edge.alpha = 1.0;
  edge.beta = 1.0 - 1e-13;
  edge.theta = 0.5 * std::sqrt((1.0 - edge.beta) * (1.0 + edge.beta));
  edge.regime_valid = true;
  const double t_quarter = M_PI / (2.0 * edge.theta);
  REQUIRE_THROWS_AS(detail::gamma_pair(edge, t_quarter), numerical_error);
}
