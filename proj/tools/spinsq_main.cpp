// Command-line front end: five subcommands over the sweep runners.
//
// Configuration precedence is defaults < config file < flags; both the file
// and the flags funnel through apply_key so every spelling is validated the
// same way. Exit codes: 0 success, 1 property failure (oracle-check),
// 2 I/O or configuration error, 3 numerical failure.

#include <array>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "spinsq/spinsq.hpp"

namespace {

struct Binding {
  const char* flag;
  const char* key;
  const char* help;
  std::string value;
};

std::array<Binding, 14> make_bindings() {
  return {{
      {"--n", "n", "atom number(s), comma separated", {}},
      {"--c-start", "c_start", "first dipolar ratio of the grid", {}},
      {"--c-stop", "c_stop", "last dipolar ratio of the grid", {}},
      {"--c-count", "c_count", "number of grid points", {}},
      {"--c-list", "c_list", "explicit ascending c values, comma separated", {}},
      {"--initial", "initial", "initial state: polar, twin-fock, or both", {}},
      {"--t-max", "t_max", "trace end time", {}},
      {"--samples", "samples", "number of time samples", {}},
      {"--window-lo", "window_lo", "averaging window start", {}},
      {"--window-hi", "window_hi", "averaging window end", {}},
      {"--output", "output", "output path (default stdout)", {}},
      {"--format", "format", "output format: csv or json", {}},
      {"--jobs", "jobs", "worker threads", {}},
      {"--sign", "sign", "antiferromagnetic or ferromagnetic", {}},
  }};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spin-1 condensate squeezing and Fisher-information engine"};
  app.set_version_flag("--version", spinsq::kVersion);
  app.require_subcommand(1);

  auto bindings = make_bindings();
  std::string config_path;

  struct Sub {
    CLI::App* app;
    spinsq::SweepMode mode;
  };
  const std::array<std::pair<const char*, const char*>, 5> sub_specs{{
      {"ground-scan", "ground states and their squeezing/QFI over an (n, c) grid"},
      {"dynamics", "exact time trace from a product state at fixed (n, c)"},
      {"steady-scan", "windowed time averages over a c grid"},
      {"bogoliubov-compare", "exact trace vs closed-form pair approximation"},
      {"oracle-check", "dense-matrix validation of the fast paths"},
  }};
  const std::array<spinsq::SweepMode, 5> sub_modes{
      spinsq::SweepMode::ground_scan, spinsq::SweepMode::dynamics,
      spinsq::SweepMode::steady_scan, spinsq::SweepMode::bogoliubov_compare,
      spinsq::SweepMode::oracle_check};

  std::array<Sub, 5> subs{};
  for (std::size_t i = 0; i < subs.size(); ++i) {
    CLI::App* sub = app.add_subcommand(sub_specs[i].first, sub_specs[i].second);
    sub->add_option("--config", config_path,
                    "key = value configuration file; flags win");
    for (Binding& b : bindings) sub->add_option(b.flag, b.value, b.help);
    subs[i] = Sub{sub, sub_modes[i]};
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    spinsq::SweepConfig cfg;
    CLI::App* parsed = nullptr;
    for (const Sub& s : subs)
      if (s.app->parsed()) {
        cfg.mode = s.mode;
        parsed = s.app;
      }
    if (parsed->count("--config") > 0)
      spinsq::apply_config_file(cfg, config_path);
    for (const Binding& b : bindings)
      if (parsed->count(b.flag) > 0) spinsq::apply_key(cfg, b.key, b.value);

    const spinsq::RunOutput out = spinsq::run_any(cfg);
    const std::string text = cfg.format == spinsq::OutputFormat::csv
                                 ? spinsq::to_csv(out.table)
                                 : spinsq::to_json(out.table, out.echo);
    if (cfg.output_path.empty())
      std::fwrite(text.data(), 1, text.size(), stdout);
    else
      spinsq::write_text_file(cfg.output_path, text);
    return out.ok ? 0 : 1;
  } catch (const spinsq::io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const spinsq::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const spinsq::resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const spinsq::numerical_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
