#pragma once

#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "spinsq/errors.hpp"
#include "spinsq/model.hpp"

namespace spinsq {

enum class SweepMode {
  ground_scan,
  dynamics,
  steady_scan,
  bogoliubov_compare,
  oracle_check,
};

inline const char* mode_name(SweepMode m) {
  switch (m) {
    case SweepMode::ground_scan: return "ground-scan";
    case SweepMode::dynamics: return "dynamics";
    case SweepMode::steady_scan: return "steady-scan";
    case SweepMode::bogoliubov_compare: return "bogoliubov-compare";
    case SweepMode::oracle_check: return "oracle-check";
  }
  return "?";
}

enum class OutputFormat { csv, json };

enum class InitialKind { polar, twin_fock, both };

// Everything a run needs. Mode-aware defaults are resolved through the
// accessors, not stored: sample counts, t_max, the steady-scan initial set.
struct SweepConfig {
  SweepMode mode = SweepMode::ground_scan;
  std::vector<int> n_atoms;  // empty = mode default
  std::optional<double> c_start;
  std::optional<double> c_stop;
  std::optional<int> c_count;
  std::vector<double> c_list;
  std::optional<InitialKind> initial;
  std::optional<double> t_max;
  std::optional<int> samples;
  double window_lo = 1.0;
  double window_hi = 10.0;
  std::string output_path;  // empty = stdout
  OutputFormat format = OutputFormat::csv;
  int jobs = 1;
  InteractionSign sign = InteractionSign::antiferromagnetic;
};

// value = lo + (hi - lo) i / (count - 1), endpoints exact.
inline std::vector<double> linspace(double lo, double hi, int count) {
  if (count < 1) throw domain_error("linspace: count must be >= 1");
  std::vector<double> v(static_cast<std::size_t>(count));
  if (count == 1) {
    v[0] = lo;
    return v;
  }
  for (int i = 0; i < count; ++i)
    v[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * static_cast<double>(i) / (count - 1);
  v.front() = lo;
  v.back() = hi;
  return v;
}

inline std::vector<double> resolve_c_grid(const SweepConfig& cfg) {
  if (!cfg.c_list.empty()) {
    for (std::size_t i = 0; i + 1 < cfg.c_list.size(); ++i)
      if (!(cfg.c_list[i] < cfg.c_list[i + 1]))
        throw domain_error("c grid: explicit list must be strictly ascending");
    for (double c : cfg.c_list)
      if (!std::isfinite(c)) throw domain_error("c grid: non-finite value");
    return cfg.c_list;
  }
  if (!cfg.c_start)
    throw domain_error("c grid: need c_start (or an explicit c_list)");
  const int count = cfg.c_count.value_or(1);
  if (count < 1) throw domain_error("c grid: c_count must be >= 1");
  if (count == 1) return {*cfg.c_start};
  if (!cfg.c_stop) throw domain_error("c grid: need c_stop when c_count > 1");
  if (!(*cfg.c_start < *cfg.c_stop))
    throw domain_error("c grid: c_start must be below c_stop");
  return linspace(*cfg.c_start, *cfg.c_stop, count);
}

inline int resolve_samples(const SweepConfig& cfg) {
  int fallback = 4001;
  if (cfg.mode == SweepMode::steady_scan) fallback = 2000;
  if (cfg.mode == SweepMode::bogoliubov_compare) fallback = 501;
  const int s = cfg.samples.value_or(fallback);
  if (s < 2) throw domain_error("samples must be >= 2");
  return s;
}

inline double resolve_t_max(const SweepConfig& cfg) {
  const double t = cfg.t_max.value_or(10.0);
  if (!(t > 0.0) || !std::isfinite(t))
    throw domain_error("t_max must be positive and finite");
  return t;
}

inline InitialKind resolve_initial(const SweepConfig& cfg) {
  if (cfg.initial) return *cfg.initial;
  return cfg.mode == SweepMode::steady_scan ? InitialKind::both
                                            : InitialKind::polar;
}

inline void validate_common(const SweepConfig& cfg) {
  for (int n : cfg.n_atoms)
    if (n < 1) throw domain_error("n must be >= 1");
  if (cfg.jobs < 1) throw domain_error("jobs must be >= 1");
  if (!(cfg.window_lo >= 0.0) || !(cfg.window_hi > cfg.window_lo))
    throw domain_error("window must satisfy 0 <= window_lo < window_hi");
}

// --------------------------------------------------------------------------
// Key=value configuration files. '#' starts a comment; blank lines ignored;
// values use the same spellings as the command-line flags. Flags win over
// file entries because the CLI applies them afterwards through the same
// apply_key path.

namespace detail {

inline std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) parts.push_back(trim(item));
  return parts;
}

inline int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw domain_error("config: bad integer for '" + key + "': " + value);
  }
}

inline double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw domain_error("config: bad number for '" + key + "': " + value);
  }
}

}  // namespace detail

inline InitialKind parse_initial(const std::string& value) {
  if (value == "polar") return InitialKind::polar;
  if (value == "twin-fock" || value == "twin_fock") return InitialKind::twin_fock;
  if (value == "both") return InitialKind::both;
  throw domain_error("config: initial must be polar, twin-fock, or both");
}

inline OutputFormat parse_format(const std::string& value) {
  if (value == "csv") return OutputFormat::csv;
  if (value == "json") return OutputFormat::json;
  throw domain_error("config: format must be csv or json");
}

inline InteractionSign parse_sign(const std::string& value) {
  if (value == "antiferromagnetic" || value == "afm" || value == "+1")
    return InteractionSign::antiferromagnetic;
  if (value == "ferromagnetic" || value == "fm" || value == "-1")
    return InteractionSign::ferromagnetic;
  throw domain_error("config: sign must be antiferromagnetic or ferromagnetic");
}

inline void apply_key(SweepConfig& cfg, const std::string& key,
                      const std::string& value) {
  if (key == "n") {
    cfg.n_atoms.clear();
    for (const std::string& part : detail::split(value, ','))
      cfg.n_atoms.push_back(detail::parse_int(key, part));
  } else if (key == "c_start") {
    cfg.c_start = detail::parse_double(key, value);
  } else if (key == "c_stop") {
    cfg.c_stop = detail::parse_double(key, value);
  } else if (key == "c_count") {
    cfg.c_count = detail::parse_int(key, value);
  } else if (key == "c_list") {
    cfg.c_list.clear();
    for (const std::string& part : detail::split(value, ','))
      cfg.c_list.push_back(detail::parse_double(key, part));
  } else if (key == "initial") {
    cfg.initial = parse_initial(value);
  } else if (key == "t_max") {
    cfg.t_max = detail::parse_double(key, value);
  } else if (key == "samples") {
    cfg.samples = detail::parse_int(key, value);
  } else if (key == "window_lo") {
    cfg.window_lo = detail::parse_double(key, value);
  } else if (key == "window_hi") {
    cfg.window_hi = detail::parse_double(key, value);
  } else if (key == "output") {
    cfg.output_path = value;
  } else if (key == "format") {
    cfg.format = parse_format(value);
  } else if (key == "jobs") {
    cfg.jobs = detail::parse_int(key, value);
  } else if (key == "sign") {
    cfg.sign = parse_sign(value);
  } else {
    throw domain_error("config: unknown key '" + key + "'");
  }
}

inline void apply_config_file(SweepConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open config file: " + path);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw domain_error("config: line " + std::to_string(line_no) +
                         " is not key = value");
    apply_key(cfg, detail::trim(line.substr(0, eq)),
              detail::trim(line.substr(eq + 1)));
  }
}

// --------------------------------------------------------------------------
// Work-stealing loop over a fixed index range. Results must be written to
// preallocated slots keyed by index, so output order never depends on the
// thread count. The first captured exception (lowest index) is rethrown.

template <typename Fn>
inline void parallel_for(int total, int jobs, Fn&& fn) {
  if (total <= 0) return;
  if (jobs <= 1 || total == 1) {
    for (int i = 0; i < total; ++i) fn(i);
    return;
  }
  const int workers = std::min(jobs, total);
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(total));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= total) return;
        try {
          fn(i);
        } catch (...) {
          errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace spinsq
