#pragma once

#include <algorithm>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "spinsq/bogoliubov.hpp"
#include "spinsq/dynamics.hpp"
#include "spinsq/ground.hpp"
#include "spinsq/observables.hpp"
#include "spinsq/sweep.hpp"
#include "spinsq/table.hpp"

namespace spinsq {

// Subcommand runners. Each consumes a SweepConfig, resolves the mode-aware
// defaults, and produces a Table plus the metadata echo for the artifact.
// Grid points are computed into preallocated row slots (parallel_for), so
// the emitted bytes are identical for any --jobs value; for the same reason
// the echo excludes execution details (jobs, output path).

struct RunOutput {
  Table table;
  Metadata echo;
  bool ok = true;  // false = property failure (oracle-check)
};

namespace detail {

inline Cell cell(double v) { return Cell{v}; }
inline Cell cell(std::int64_t v) { return Cell{v}; }
inline Cell cell(const std::string& v) { return Cell{v}; }
inline Cell cell_opt(const std::optional<double>& v) {
  if (v) return Cell{*v};
  return Cell{Undefined{}};
}

inline std::vector<int> resolve_n_list(const SweepConfig& cfg, int fallback) {
  if (cfg.n_atoms.empty()) return {fallback};
  return cfg.n_atoms;
}

inline int resolve_single_n(const SweepConfig& cfg, int fallback,
                            const char* what) {
  const std::vector<int> ns = resolve_n_list(cfg, fallback);
  if (ns.size() != 1)
    throw domain_error(std::string(what) + ": takes a single n value");
  return ns.front();
}

inline std::string join_doubles(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += format_double(v[i]);
  }
  return out;
}

inline std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

inline const char* initial_name(InitialKind k) {
  switch (k) {
    case InitialKind::polar: return "polar";
    case InitialKind::twin_fock: return "twin-fock";
    case InitialKind::both: return "both";
  }
  return "?";
}

inline StateVector make_initial(InitialKind kind, int n_atoms) {
  switch (kind) {
    case InitialKind::polar: return named_state(NamedState::polar, n_atoms);
    case InitialKind::twin_fock:
      return named_state(NamedState::twin_fock, n_atoms);
    default:
      throw domain_error("initial: expected polar or twin-fock here");
  }
}

}  // namespace detail

// ---------------------------------------------------------------------- //
//  ground-scan: lowest state across sectors on an (n, c) grid             //
// ---------------------------------------------------------------------- //

inline RunOutput run_ground_scan(const SweepConfig& cfg) {
  validate_common(cfg);
  const std::vector<int> ns = detail::resolve_n_list(cfg, 100);
  const std::vector<double> cs = resolve_c_grid(cfg);

  RunOutput out;
  out.table.columns = {"N",       "c",         "m_star",     "energy",
                       "xi2",     "xi2_db",    "phi_opt",    "f_max",
                       "f_max_over_4N2",       "q_plus_mean",
                       "q_plus_var",           "n0_frac"};
  const int total = static_cast<int>(ns.size() * cs.size());
  out.table.rows.resize(static_cast<std::size_t>(total));
  parallel_for(total, cfg.jobs, [&](int idx) {
    const int n = ns[static_cast<std::size_t>(idx) / cs.size()];
    const double c = cs[static_cast<std::size_t>(idx) % cs.size()];
    try {
      const GroundResult g = global_ground(ModelParams{n, c, cfg.sign});
      const MomentSet mom = moments_fixed_m(g.state);
      const SqueezingResult sq = squeezing_xi_x(mom);
      const QfiResult qf = qfi_max(mom);
      const double n_d = static_cast<double>(n);
      out.table.rows[static_cast<std::size_t>(idx)] = {
          detail::cell(static_cast<std::int64_t>(n)),
          detail::cell(c),
          detail::cell(static_cast<std::int64_t>(g.m_star)),
          detail::cell(g.energy),
          detail::cell_opt(sq.value),
          detail::cell_opt(sq.db),
          detail::cell(sq.phi_opt),
          detail::cell(qf.f_max),
          detail::cell(qf.f_max / (4.0 * n_d * n_d)),
          detail::cell(mom.q_plus_mean),
          detail::cell(mom.q_plus_var),
          detail::cell(mom.populations[1] / n_d)};
    } catch (const numerical_error& e) {
      throw numerical_error("ground scan failed at N=" + std::to_string(n) +
                            ", c=" + format_double(c) + ": " + e.what());
    }
  });

  out.echo = {{"mode", mode_name(cfg.mode)},
              {"n", detail::join_ints(ns)},
              {"c_grid", detail::join_doubles(cs)},
              {"sign", sign_name(cfg.sign)}};
  return out;
}

// ---------------------------------------------------------------------- //
//  dynamics: one trace at fixed (n, c)                                    //
// ---------------------------------------------------------------------- //

inline RunOutput run_dynamics(const SweepConfig& cfg) {
  validate_common(cfg);
  const int n = detail::resolve_single_n(cfg, 100, "dynamics");
  const std::vector<double> cs = resolve_c_grid(cfg);
  if (cs.size() != 1) throw domain_error("dynamics: takes a single c value");
  const InitialKind kind = resolve_initial(cfg);
  if (kind == InitialKind::both)
    throw domain_error("dynamics: initial must be polar or twin-fock");
  const double t_max = resolve_t_max(cfg);
  const int samples = resolve_samples(cfg);

  const ModelParams params{n, cs.front(), cfg.sign};
  const DynamicsTrace trace =
      evolve(params, detail::make_initial(kind, n), linspace(0.0, t_max, samples));
  std::vector<TraceRecord> records(trace.states.size());
  parallel_for(static_cast<int>(trace.states.size()), cfg.jobs, [&](int i) {
    records[static_cast<std::size_t>(i)] =
        observable_record(trace.states[static_cast<std::size_t>(i)]);
    records[static_cast<std::size_t>(i)].t =
        trace.times[static_cast<std::size_t>(i)];
  });

  RunOutput out;
  out.table.columns = {"t", "xi2_db", "f_max", "n0_frac", "dq_plus_sq"};
  out.table.rows.reserve(records.size());
  for (const TraceRecord& r : records)
    out.table.rows.push_back({detail::cell(r.t), detail::cell_opt(r.xi2_db),
                              detail::cell(r.f_max), detail::cell(r.n0_frac),
                              detail::cell(r.q_plus_var)});
  out.echo = {{"mode", mode_name(cfg.mode)},
              {"n", std::to_string(n)},
              {"c", format_double(cs.front())},
              {"initial", detail::initial_name(kind)},
              {"t_max", format_double(t_max)},
              {"samples", std::to_string(samples)},
              {"sign", sign_name(cfg.sign)}};
  return out;
}

// ---------------------------------------------------------------------- //
//  steady-scan: windowed time averages over a c grid                      //
// ---------------------------------------------------------------------- //

inline RunOutput run_steady_scan(const SweepConfig& cfg) {
  validate_common(cfg);
  const int n = detail::resolve_single_n(cfg, 100, "steady-scan");
  const std::vector<double> cs = resolve_c_grid(cfg);
  const int samples = resolve_samples(cfg);
  const InitialKind resolved = resolve_initial(cfg);
  std::vector<InitialKind> kinds;
  if (resolved == InitialKind::both)
    kinds = {InitialKind::polar, InitialKind::twin_fock};
  else
    kinds = {resolved};
  const std::vector<double> times =
      linspace(cfg.window_lo, cfg.window_hi, samples);

  RunOutput out;
  out.table.columns = {"c", "initial_kind", "avg_xi2_db", "avg_n0_frac",
                       "undefined_sample_count"};
  const int total = static_cast<int>(kinds.size() * cs.size());
  out.table.rows.resize(static_cast<std::size_t>(total));
  parallel_for(total, cfg.jobs, [&](int idx) {
    const InitialKind kind = kinds[static_cast<std::size_t>(idx) / cs.size()];
    const double c = cs[static_cast<std::size_t>(idx) % cs.size()];
    try {
      const ModelParams params{n, c, cfg.sign};
      const DynamicsTrace trace =
          evolve(params, detail::make_initial(kind, n), times);
      const std::vector<TraceRecord> records = trace_observables(trace);
      const WindowAverage avg =
          time_average(trace.times, records, cfg.window_lo, cfg.window_hi);
      std::optional<double> db;
      if (avg.xi2_mean && *avg.xi2_mean > 0.0)
        db = to_decibels(*avg.xi2_mean);
      out.table.rows[static_cast<std::size_t>(idx)] = {
          detail::cell(c), detail::cell(std::string(detail::initial_name(kind))),
          detail::cell_opt(db), detail::cell(avg.n0_frac_mean),
          detail::cell(static_cast<std::int64_t>(avg.undefined_count))};
    } catch (const numerical_error& e) {
      throw numerical_error("steady scan failed at c=" + format_double(c) +
                            ", initial=" + detail::initial_name(kind) + ": " +
                            e.what());
    }
  });

  out.echo = {{"mode", mode_name(cfg.mode)},
              {"n", std::to_string(n)},
              {"c_grid", detail::join_doubles(cs)},
              {"initial", detail::initial_name(resolved)},
              {"window_lo", format_double(cfg.window_lo)},
              {"window_hi", format_double(cfg.window_hi)},
              {"samples", std::to_string(samples)},
              {"sign", sign_name(cfg.sign)}};
  return out;
}

// ---------------------------------------------------------------------- //
//  bogoliubov-compare: exact trace vs closed forms over a c grid          //
// ---------------------------------------------------------------------- //

inline RunOutput run_bogoliubov_compare(const SweepConfig& cfg) {
  validate_common(cfg);
  const int n = detail::resolve_single_n(cfg, 1000, "bogoliubov-compare");
  const std::vector<double> cs = resolve_c_grid(cfg);
  const int samples = resolve_samples(cfg);

  RunOutput out;
  out.table.columns = {"c",
                       "t",
                       "xi2_exact",
                       "xi2_approx",
                       "f_exact_over_4N",
                       "f_approx_over_4N",
                       "abs_rel_err"};
  std::vector<std::vector<std::vector<Cell>>> per_point(cs.size());
  parallel_for(static_cast<int>(cs.size()), cfg.jobs, [&](int idx) {
    const double c = cs[static_cast<std::size_t>(idx)];
    const ModelParams params{n, c, cfg.sign};
    const BogoliubovParams bp = effective_params(params);
    double t_end = 1.0;
    if (cfg.t_max)
      t_end = resolve_t_max(cfg);
    else if (bp.regime_valid)
      t_end = 2.0 * optimal_values(bp, n).t_opt;
    const std::vector<double> times = linspace(0.0, t_end, samples);
    const DynamicsTrace trace = evolve(
        params, named_state(NamedState::polar, n), times);
    const std::vector<TraceRecord> records = trace_observables(trace);
    auto& rows = per_point[static_cast<std::size_t>(idx)];
    rows.reserve(times.size());
    const double four_n = 4.0 * n;
    for (std::size_t i = 0; i < times.size(); ++i) {
      const TraceRecord& r = records[i];
      std::optional<double> approx_xi2, approx_f, rel_err;
      if (bp.regime_valid) {
        const SqueezedVacuumPoint ap = xi2_qfi_approx(bp, n, times[i]);
        approx_xi2 = ap.xi2;
        approx_f = ap.f_max;
        if (r.xi2) rel_err = std::abs(*r.xi2 - ap.xi2) / ap.xi2;
      }
      std::optional<double> f_approx_norm;
      if (approx_f) f_approx_norm = *approx_f / four_n;
      rows.push_back({detail::cell(c), detail::cell(times[i]),
                      detail::cell_opt(r.xi2), detail::cell_opt(approx_xi2),
                      detail::cell(r.f_max / four_n),
                      detail::cell_opt(f_approx_norm),
                      detail::cell_opt(rel_err)});
    }
  });
  for (auto& rows : per_point)
    for (auto& row : rows) out.table.rows.push_back(std::move(row));

  out.echo = {{"mode", mode_name(cfg.mode)},
              {"n", std::to_string(n)},
              {"c_grid", detail::join_doubles(cs)},
              {"samples", std::to_string(samples)},
              {"sign", sign_name(cfg.sign)}};
  if (cfg.t_max) out.echo.push_back({"t_max", format_double(*cfg.t_max)});
  return out;
}

// ---------------------------------------------------------------------- //
//  oracle-check: dense-matrix validation of the fast paths                //
// ---------------------------------------------------------------------- //

struct SuiteResult {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct OracleReport {
  std::vector<SuiteResult> suites;
  bool all_pass = true;
};

namespace detail {

inline constexpr unsigned kOracleSeed = 0x5eed5u;

// |a - b|, relative above unit scale.
inline double rel_dev(double a, double b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

inline double commutator_defect(const Eigen::MatrixXcd& a,
                                const Eigen::MatrixXcd& b,
                                const Eigen::MatrixXcd& expect) {
  return (a * b - b * a - expect).cwiseAbs().maxCoeff();
}

inline StateVector random_sector_state(int n_atoms, int m, std::mt19937& rng) {
  StateVector s;
  s.basis = subspace_basis(n_atoms, m);
  s.amplitudes.resize(s.basis.dim());
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int i = 0; i < s.basis.dim(); ++i)
    s.amplitudes[i] = std::complex<double>(gauss(rng), gauss(rng));
  s.amplitudes /= s.norm();
  return s;
}

inline std::vector<double> default_oracle_c_grid() {
  return {-1.0, -0.5, -0.1, 0.0, 0.5, 1.0, 1.5, 2.0};
}

}  // namespace detail

inline OracleReport run_oracle_check(const SweepConfig& cfg) {
  validate_common(cfg);
  const int n = detail::resolve_single_n(cfg, 8, "oracle-check");
  std::vector<double> cs;
  if (!cfg.c_list.empty() || cfg.c_start)
    cs = resolve_c_grid(cfg);
  else
    cs = detail::default_oracle_c_grid();

  OracleReport report;
  auto add = [&report](const std::string& name, double dev, double tol) {
    SuiteResult r{name, dev, tol, dev <= tol};
    report.all_pass = report.all_pass && r.pass;
    report.suites.push_back(std::move(r));
  };

  const SpinOperators s = spin_matrices(n);
  const QuadrupoleOperators q = quadrupole_matrices(n);
  using namespace std::complex_literals;

  {  // Every observable matrix must be Hermitian.
    double dev = 0.0;
    for (const DenseOperator* op :
         {&s.s_x, &s.s_y, &s.s_z, &s.s_squared, &q.q_yz, &q.q_xz, &q.q_xx,
          &q.q_yy, &q.q_zz, &q.q_plus})
      dev = std::max(dev, max_hermiticity_defect(*op));
    add("hermiticity", dev, 1e-12);
  }

  {  // Angular momentum algebra, and S^2 as a Casimir.
    double dev = 0.0;
    dev = std::max(dev, detail::commutator_defect(s.s_x.mat, s.s_y.mat,
                                                  1i * s.s_z.mat));
    dev = std::max(dev, detail::commutator_defect(s.s_y.mat, s.s_z.mat,
                                                  1i * s.s_x.mat));
    dev = std::max(dev, detail::commutator_defect(s.s_z.mat, s.s_x.mat,
                                                  1i * s.s_y.mat));
    const Eigen::MatrixXcd zero =
        Eigen::MatrixXcd::Zero(s.s_x.mat.rows(), s.s_x.mat.cols());
    dev = std::max(dev,
                   detail::commutator_defect(s.s_squared.mat, s.s_z.mat, zero));
    dev = std::max(dev,
                   detail::commutator_defect(s.s_squared.mat, s.s_x.mat, zero));
    add("spin_algebra", dev, 1e-10);
  }

  {  // Quadrupole closure: traceless combination and Q_plus assembly.
    double dev = (q.q_xx.mat + q.q_yy.mat + q.q_zz.mat).cwiseAbs().maxCoeff();
    dev = std::max(
        dev, (q.q_plus.mat - (q.q_zz.mat - q.q_yy.mat)).cwiseAbs().maxCoeff());
    add("quadrupole_closure", dev, 1e-12);
  }

  {  // Sector structure of H: block-diagonal in m, tridiagonal in k, and
     // the dense projection must reproduce the closed-form block entries.
    double dev = 0.0;
    const FullBasisIndex index(n);
    const std::vector<FockLabel> labels = enumerate_full_basis(n);
    for (double c : cs) {
      const ModelParams params{n, c, cfg.sign};
      const DenseOperator h = full_hamiltonian_oracle(params);
      for (int i = 0; i < index.dim(); ++i)
        for (int j = 0; j < index.dim(); ++j)
          if (labels[static_cast<std::size_t>(i)].magnetization !=
              labels[static_cast<std::size_t>(j)].magnetization)
            dev = std::max(dev, std::abs(h.mat(i, j)));
      for (int m = -n; m <= n; ++m) {
        const TridiagonalBlock block = block_hamiltonian(params, m);
        const int off = index.sector_offset(m);
        const int dim = block.basis.dim();
        for (int i = 0; i < dim; ++i)
          for (int j = 0; j < dim; ++j) {
            double want = 0.0;
            if (i == j) want = block.diag[i];
            if (std::abs(i - j) == 1) want = block.off[std::min(i, j)];
            dev = std::max(dev, std::abs(h.mat(off + i, off + j) - want));
          }
      }
    }
    add("sector_structure", dev, 1e-10);
  }

  {  // Union of sector spectra == dense spectrum.
    double dev = 0.0;
    for (double c : cs) {
      const ModelParams params{n, c, cfg.sign};
      std::vector<double> block_values;
      block_values.reserve(static_cast<std::size_t>(full_dimension(n)));
      for (int m = -n; m <= n; ++m) {
        const TridiagonalBlock block = block_hamiltonian(params, m);
        const TridiagonalEigen eig =
            detail::solve_tridiagonal(block.diag, block.off, false);
        for (int i = 0; i < eig.values.size(); ++i)
          block_values.push_back(eig.values[i]);
      }
      std::sort(block_values.begin(), block_values.end());
      const DenseOperator h = full_hamiltonian_oracle(params);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> dense(
          h.mat, Eigen::EigenvaluesOnly);
      if (dense.info() != Eigen::Success)
        throw numerical_error("oracle-check: dense eigensolver failed");
      for (std::size_t i = 0; i < block_values.size(); ++i)
        dev = std::max(dev, std::abs(block_values[i] -
                                     dense.eigenvalues()[static_cast<
                                         Eigen::Index>(i)]));
    }
    add("sector_spectra", dev, 1e-9);
  }

  // States exercised by the moment and squeezing suites: global grounds over
  // the c grid plus fixed-seed random sector states.
  std::vector<StateVector> probe_states;
  for (double c : cs)
    probe_states.push_back(global_ground(ModelParams{n, c, cfg.sign}).state);
  {
    std::mt19937 rng(detail::kOracleSeed);
    for (int m : {0, 1, -2, n})
      if (m >= -n && m <= n)
        probe_states.push_back(detail::random_sector_state(n, m, rng));
  }

  {  // Fast moment reductions vs dense expectations.
    const DenseOperator a_op{
        n, s.s_x.mat * s.s_x.mat + q.q_yz.mat * q.q_yz.mat};
    const DenseOperator pair_op{
        n, bilinear_matrix(n, 0, +1).mat * bilinear_matrix(n, 0, -1).mat};
    double dev = 0.0;
    for (const StateVector& st : probe_states) {
      const Eigen::VectorXcd psi = embed_in_full_basis(st);
      const MomentSet mom = moments_fixed_m(st);
      dev = std::max(dev, detail::rel_dev(mom.quadrature_power,
                                          expectation(a_op, psi).real()));
      const std::complex<double> pair_dense = expectation(pair_op, psi);
      dev = std::max(dev, detail::rel_dev(mom.pair_coherence.real(),
                                          pair_dense.real()));
      dev = std::max(dev, detail::rel_dev(mom.pair_coherence.imag(),
                                          pair_dense.imag()));
      dev = std::max(dev, detail::rel_dev(mom.q_plus_mean,
                                          expectation(q.q_plus, psi).real()));
      const std::array<int, 3> modes{+1, 0, -1};
      for (std::size_t i = 0; i < modes.size(); ++i) {
        const DenseOperator number = bilinear_matrix(n, modes[i], modes[i]);
        dev = std::max(dev, detail::rel_dev(mom.populations[i],
                                            expectation(number, psi).real()));
      }
    }
    add("ground_moments", dev, 1e-9);
  }

  {  // Generator-variance reduction vs operator variance.
    double dev = 0.0;
    for (const StateVector& st : probe_states) {
      const Eigen::VectorXcd psi = embed_in_full_basis(st);
      dev = std::max(dev, detail::rel_dev(q_plus_variance(st),
                                          variance(q.q_plus, psi)));
    }
    add("variance_reduction", dev, 1e-9);
  }

  {  // End-to-end squeezing and QFI vs the dense oracles.
    double dev = 0.0;
    for (const StateVector& st : probe_states) {
      const Eigen::VectorXcd psi = embed_in_full_basis(st);
      const MomentSet mom = moments_fixed_m(st);
      const SqueezingResult fast = squeezing_xi_x(mom);
      const SqueezingResult slow = squeezing_oracle(psi, n);
      if (fast.value.has_value() != slow.value.has_value())
        dev = std::max(dev, 1.0);
      else if (fast.value)
        dev = std::max(dev, detail::rel_dev(*fast.value, *slow.value));
      const QfiResult fast_f = qfi_max(mom);
      const QfiResult slow_f = qfi_oracle(psi, n);
      dev = std::max(dev, detail::rel_dev(fast_f.f_max, slow_f.f_max));
    }
    add("squeezing_qfi", dev, 1e-9);
  }

  {  // Closed-form exchange ground states vs diagonalization at c = 0.
    const int n_even = (n % 2 == 0) ? n : n - 1;
    const int n_odd = (n % 2 == 0) ? n - 1 : n;
    double dev = 0.0;
    if (n_even >= 2) {
      const BlockGround g = block_ground(
          block_hamiltonian(ModelParams{n_even, 0.0, cfg.sign}, 0));
      dev = std::max(dev, (singlet_state(n_even).amplitudes - g.state.amplitudes)
                              .cwiseAbs()
                              .maxCoeff());
    }
    if (n_odd >= 1) {
      const BlockGround g = block_ground(
          block_hamiltonian(ModelParams{n_odd, 0.0, cfg.sign}, 0));
      dev = std::max(dev, (spin_one_state(n_odd).amplitudes - g.state.amplitudes)
                              .cwiseAbs()
                              .maxCoeff());
    }
    add("closed_form_states", dev, 1e-8);
  }

  {  // Sector propagation vs dense-basis propagation.
    const ModelParams params{n, 1.2, cfg.sign};
    const StateVector initial = named_state(NamedState::polar, n);
    const DynamicsTrace trace = evolve(params, initial, {0.35, 0.7});
    const DenseOperator h = full_hamiltonian_oracle(params);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> dense(h.mat);
    if (dense.info() != Eigen::Success)
      throw numerical_error("oracle-check: dense eigensolver failed");
    const Eigen::VectorXcd psi0 = embed_in_full_basis(initial);
    const Eigen::VectorXcd w = dense.eigenvectors().adjoint() * psi0;
    double dev = 0.0;
    for (std::size_t i = 0; i < trace.times.size(); ++i) {
      Eigen::VectorXcd z = w;
      for (Eigen::Index j = 0; j < z.size(); ++j)
        z[j] *= std::polar(1.0, -dense.eigenvalues()[j] * trace.times[i]);
      const Eigen::VectorXcd psi_t = dense.eigenvectors() * z;
      const Eigen::VectorXcd fast = embed_in_full_basis(trace.states[i]);
      dev = std::max(dev, (fast - psi_t).cwiseAbs().maxCoeff());
    }
    add("propagation", dev, 1e-10);
  }

  return report;
}

inline RunOutput oracle_report_output(const SweepConfig& cfg,
                                      const OracleReport& report) {
  RunOutput out;
  out.ok = report.all_pass;
  out.table.columns = {"suite", "max_deviation", "tolerance", "status"};
  for (const SuiteResult& r : report.suites)
    out.table.rows.push_back({detail::cell(r.name),
                              detail::cell(r.max_deviation),
                              detail::cell(r.tolerance),
                              detail::cell(std::string(r.pass ? "pass"
                                                              : "fail"))});
  out.echo = {{"mode", mode_name(cfg.mode)},
              {"n", std::to_string(detail::resolve_single_n(cfg, 8,
                                                            "oracle-check"))},
              {"sign", sign_name(cfg.sign)}};
  return out;
}

inline RunOutput run_any(const SweepConfig& cfg) {
  switch (cfg.mode) {
    case SweepMode::ground_scan: return run_ground_scan(cfg);
    case SweepMode::dynamics: return run_dynamics(cfg);
    case SweepMode::steady_scan: return run_steady_scan(cfg);
    case SweepMode::bogoliubov_compare: return run_bogoliubov_compare(cfg);
    case SweepMode::oracle_check:
      return oracle_report_output(cfg, run_oracle_check(cfg));
  }
  throw domain_error("run_any: unknown mode");
}

}  // namespace spinsq
