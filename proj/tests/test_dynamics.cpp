#include <boost/numeric/odeint.hpp>
#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "spinsq/dynamics.hpp"
#include "spinsq/ground.hpp"
#include "spinsq/observables.hpp"
#include "test_util.hpp"

using namespace spinsq;

namespace {

std::vector<double> grid(double t_max, int samples) {
  std::vector<double> ts(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i)
    ts[static_cast<std::size_t>(i)] = t_max * i / (samples - 1);
  return ts;
}

}  // namespace

TEST_CASE("t = 0 record of a trace equals the static record bit for bit") {
  const ModelParams params{50, 1.3, InteractionSign::antiferromagnetic};
  const StateVector initial = named_state(NamedState::polar, 50);
  const TraceRecord statics = observable_record(initial);
  const DynamicsTrace trace = evolve(params, initial, {0.0, 0.4, 1.7});
  const std::vector<TraceRecord> recs = trace_observables(trace);
  REQUIRE(recs[0].t == 0.0);
  REQUIRE(recs[0].xi2 == statics.xi2);
  REQUIRE(recs[0].xi2_db == statics.xi2_db);
  REQUIRE(recs[0].phi_opt == statics.phi_opt);
  REQUIRE(recs[0].f_max == statics.f_max);
  REQUIRE(recs[0].branch == statics.branch);
  REQUIRE(recs[0].q_plus_var == statics.q_plus_var);
  REQUIRE(recs[0].n0_frac == statics.n0_frac);
  REQUIRE(recs[0].n1_frac == statics.n1_frac);
  // The amplitudes themselves are a plain copy at t = 0.
  for (int i = 0; i < initial.basis.dim(); ++i) {
    REQUIRE(trace.states[0].amplitudes[i].real() ==
            initial.amplitudes[i].real());
    REQUIRE(trace.states[0].amplitudes[i].imag() ==
            initial.amplitudes[i].imag());
  }
}

TEST_CASE("reduced zero-m sums reproduce the general moments exactly") {
  const ModelParams params{36, 1.2, InteractionSign::antiferromagnetic};
  const StateVector initial = named_state(NamedState::polar, 36);
  const DynamicsTrace trace = evolve(params, initial, grid(3.0, 17));
  for (const StateVector& s : trace.states) {
    const ReducedMoments rm = reduced_zero_m_moments(s);
    const MomentSet mom = moments_fixed_m(s);
    REQUIRE(mom.quadrature_power == 2.0 * rm.half_power);
    REQUIRE(mom.pair_coherence.real() == rm.transfer.real());
    REQUIRE(mom.pair_coherence.imag() == -rm.transfer.imag());
  }
}

TEST_CASE("propagation is unitary and conserves energy") {
  const ModelParams params{40, 1.1, InteractionSign::antiferromagnetic};
  const StateVector initial = named_state(NamedState::polar, 40);
  const TridiagonalBlock block = block_hamiltonian(params, 0);
  const double e0 = real_expectation(block, initial.amplitudes);
  const DynamicsTrace trace = evolve(params, initial, grid(8.0, 33));
  for (const StateVector& s : trace.states) {
    REQUIRE(std::abs(s.norm() - 1.0) <= 1e-10);
    const double e = real_expectation(block, s.amplitudes);
    REQUIRE(e == Catch::Approx(e0).epsilon(1e-8));
  }
}

TEST_CASE("propagation composes and reverses") {
  const ModelParams params{16, 0.7, InteractionSign::antiferromagnetic};
  const StateVector initial = named_state(NamedState::twin_fock, 16);
  const StateVector a = evolve(params, initial, {0.7}).states[0];
  const StateVector ab = evolve(params, a, {0.6}).states[0];
  const StateVector direct = evolve(params, initial, {1.3}).states[0];
  REQUIRE((ab.amplitudes - direct.amplitudes).norm() <= 1e-9);

  const StateVector back = evolve(params, a, {-0.7}).states[0];
  REQUIRE((back.amplitudes - initial.amplitudes).norm() <= 1e-10);
}

TEST_CASE("spectral propagation matches an adaptive integrator") {
  using state_type = std::vector<std::complex<double>>;
  namespace ode = boost::numeric::odeint;
  const ModelParams params{10, 1.2, InteractionSign::antiferromagnetic};
  const TridiagonalBlock block = block_hamiltonian(params, 0);
  const StateVector initial = named_state(NamedState::polar, 10);
  const int dim = block.basis.dim();

  auto rhs = [&](const state_type& g, state_type& dgdt, double) {
    const Eigen::Map<const Eigen::VectorXcd> gv(g.data(), dim);
    const Eigen::VectorXcd hv = apply_block(block, gv);
    dgdt.resize(g.size());
    const std::complex<double> minus_i(0.0, -1.0);
    for (int i = 0; i < dim; ++i)
      dgdt[static_cast<std::size_t>(i)] = minus_i * hv[i];
  };

  const double t_end = 0.3;
  state_type g(initial.amplitudes.data(),
               initial.amplitudes.data() + dim);
  auto stepper =
      ode::make_controlled(1e-13, 1e-13,
                           ode::runge_kutta_dopri5<state_type>());
  ode::integrate_adaptive(stepper, rhs, g, 0.0, t_end, 1e-4);

  const StateVector spectral = evolve(params, initial, {t_end}).states[0];
  double max_diff = 0.0;
  for (int i = 0; i < dim; ++i)
    max_diff = std::max(max_diff,
                        std::abs(spectral.amplitudes[i] -
                                 g[static_cast<std::size_t>(i)]));
  REQUIRE(max_diff <= 1e-8);
}

TEST_CASE("c = 1: the polar state is stationary") {
  // At c = 1 the spin-exchange weight (sign - c) vanishes for the
  // antiferromagnet, H is diagonal in the Fock basis, and the polar state
  // only picks up a phase.
  const ModelParams params{30, 1.0, InteractionSign::antiferromagnetic};
  const StateVector initial = named_state(NamedState::polar, 30);
  const DynamicsTrace trace = evolve(params, initial, grid(5.0, 51));
  for (const TraceRecord& rec : trace_observables(trace)) {
    REQUIRE(rec.xi2.has_value());
    REQUIRE(std::abs(*rec.xi2 - 1.0) <= 1e-12);
    REQUIRE(std::abs(rec.n0_frac - 1.0) <= 1e-12);
  }
}

TEST_CASE("QFI stays within the Heisenberg ceiling along a trace") {
  const int n = 24;
  const ModelParams params{n, 1.4, InteractionSign::antiferromagnetic};
  const StateVector initial = named_state(NamedState::polar, n);
  const DynamicsTrace trace = evolve(params, initial, grid(6.0, 41));
  for (const TraceRecord& rec : trace_observables(trace))
    REQUIRE(rec.f_max <= 4.0 * n * n + 1e-6);
}

TEST_CASE("window averages: sample selection and undefined counting") {
  std::vector<double> times;
  std::vector<TraceRecord> recs;
  for (int i = 0; i < 400; ++i) {
    TraceRecord r;
    r.t = i / 100.0;  // exact at the window endpoints 1.0 and 2.0
    r.n0_frac = 0.5;
    r.f_max = 2.0;
    if (i % 4 == 0) {
      r.xi2 = std::nullopt;  // every 4th sample undefined
    } else {
      r.xi2 = 2.0;
    }
    times.push_back(r.t);
    recs.push_back(r);
  }
  const WindowAverage avg = time_average(times, recs, 1.0, 2.0);
  // Samples at t = 1.00 .. 2.00 inclusive: indices 100..200.
  REQUIRE(avg.sample_count == 101);
  REQUIRE(avg.undefined_count == 26);  // i = 100, 104, ..., 200
  REQUIRE(avg.xi2_mean.has_value());
  REQUIRE(*avg.xi2_mean == Catch::Approx(2.0).epsilon(1e-14));
  REQUIRE(avg.n0_frac_mean == Catch::Approx(0.5).epsilon(1e-14));
  REQUIRE(avg.f_mean == Catch::Approx(2.0).epsilon(1e-14));

  REQUIRE_THROWS_AS(time_average(times, recs, 1.0, 1.05), domain_error);
  REQUIRE_THROWS_AS(time_average(times, recs, 2.0, 1.0), domain_error);

  // All-undefined window still averages populations.
  for (auto& r : recs) r.xi2 = std::nullopt;
  const WindowAverage none = time_average(times, recs, 0.0, 3.99);
  REQUIRE_FALSE(none.xi2_mean.has_value());
  REQUIRE(none.undefined_count == none.sample_count);
}

TEST_CASE("evolve argument validation") {
  const ModelParams params{12, 0.9, InteractionSign::antiferromagnetic};
  const StateVector initial = named_state(NamedState::polar, 12);

  StateVector wrong_n = named_state(NamedState::polar, 10);
  REQUIRE_THROWS_AS(evolve(params, wrong_n, {0.1}), domain_error);

  StateVector unnormalized = initial;
  unnormalized.amplitudes *= 0.5;
  REQUIRE_THROWS_AS(evolve(params, unnormalized, {0.1}), domain_error);

  REQUIRE_THROWS_AS(
      evolve(params, initial,
             {0.1, std::numeric_limits<double>::infinity()}),
      domain_error);
  REQUIRE_THROWS_AS(
      evolve(params, initial,
             {std::numeric_limits<double>::quiet_NaN()}),
      domain_error);

  // Non-zero sectors propagate too: a stretched state is stationary.
  const StateVector top = named_state(NamedState::stretched, 12);
  const ModelParams p2{12, 0.4, InteractionSign::antiferromagnetic};
  const StateVector moved = evolve(p2, top, {0.9}).states[0];
  REQUIRE(std::abs(std::abs(moved.amplitudes[0]) - 1.0) <= 1e-12);
}
