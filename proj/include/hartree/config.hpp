// Run configuration: flat key=value text files plus flag overrides.
#pragma once

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hartree/convolution.hpp"
#include "hartree/mss.hpp"

namespace hartree {

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct RunConfig {
  double side_length = 1.0;  // D
  int node_count = 129;      // m

  double a1 = 0.5, b1 = 0.5, c1 = 1e5;  // trap 1
  double a2 = 0.5, b2 = 0.5, c2 = 1e3;  // trap 2
  double screening = 1e2;                // Gamma
  double regularization = 1e-1;          // gamma

  double theta1 = 0.0, theta2 = 0.0;
  std::vector<double> kappa_list = {0.0, 0.5, 2.0, 10.0, 50.0};
  double mass1 = 1.0, mass2 = 1.0;

  double pm_tolerance = 1e-10;
  long pm_max_iterations = 200000;
  double mss_tolerance = 1e-8;
  long mss_max_outer = 10000;
  double mixing = 1.0;

  InitMode init_mode = InitMode::gaussian;
  std::string init_file;

  std::string output_dir = "out";
  ConvolutionPath convolution = ConvolutionPath::direct;
  int threads = 1;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto notspace = [](char c) { return c != ' ' && c != '\t' && c != '\r'; };
  while (!s.empty() && !notspace(s.front())) s.remove_prefix(1);
  while (!s.empty() && !notspace(s.back())) s.remove_suffix(1);
  return s;
}

inline double parse_real(std::string_view v, const std::string& where) {
  double out = 0.0;
  const char* end = v.data() + v.size();
  const auto res = std::from_chars(v.data(), end, out);
  if (res.ec != std::errc() || res.ptr != end)
    throw ConfigError(where + ": expected a real number, got '" +
                      std::string(v) + "'");
  return out;
}

inline long parse_integer(std::string_view v, const std::string& where) {
  long out = 0;
  const char* end = v.data() + v.size();
  const auto res = std::from_chars(v.data(), end, out);
  if (res.ec != std::errc() || res.ptr != end)
    throw ConfigError(where + ": expected an integer, got '" + std::string(v) +
                      "'");
  return out;
}

inline std::vector<double> parse_real_list(std::string_view v,
                                           const std::string& where) {
  std::vector<double> out;
  size_t start = 0;
  const std::string s(v);
  while (start <= s.size()) {
    size_t comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    const auto item = trim(std::string_view(s).substr(start, comma - start));
    if (!item.empty()) out.push_back(parse_real(item, where));
    start = comma + 1;
  }
  return out;
}

}  // namespace detail

// Applies one key=value setting; unknown keys are rejected. `where` names
// the source (file line or flag) for error messages.
inline void apply_setting(RunConfig& cfg, std::string_view key,
                          std::string_view value, const std::string& where) {
  using detail::parse_integer;
  using detail::parse_real;
  const std::string k(key);
  if (k == "D")
    cfg.side_length = parse_real(value, where);
  else if (k == "m")
    cfg.node_count = static_cast<int>(parse_integer(value, where));
  else if (k == "a1")
    cfg.a1 = parse_real(value, where);
  else if (k == "b1")
    cfg.b1 = parse_real(value, where);
  else if (k == "c1")
    cfg.c1 = parse_real(value, where);
  else if (k == "a2")
    cfg.a2 = parse_real(value, where);
  else if (k == "b2")
    cfg.b2 = parse_real(value, where);
  else if (k == "c2")
    cfg.c2 = parse_real(value, where);
  else if (k == "Gamma")
    cfg.screening = parse_real(value, where);
  else if (k == "gamma")
    cfg.regularization = parse_real(value, where);
  else if (k == "theta1")
    cfg.theta1 = parse_real(value, where);
  else if (k == "theta2")
    cfg.theta2 = parse_real(value, where);
  else if (k == "kappa")
    cfg.kappa_list = detail::parse_real_list(value, where);
  else if (k == "N1")
    cfg.mass1 = parse_real(value, where);
  else if (k == "N2")
    cfg.mass2 = parse_real(value, where);
  else if (k == "delta_pm")
    cfg.pm_tolerance = parse_real(value, where);
  else if (k == "pm_max_iter")
    cfg.pm_max_iterations = parse_integer(value, where);
  else if (k == "delta_mss")
    cfg.mss_tolerance = parse_real(value, where);
  else if (k == "mss_max_outer")
    cfg.mss_max_outer = parse_integer(value, where);
  else if (k == "mixing")
    cfg.mixing = parse_real(value, where);
  else if (k == "init") {
    const std::string v{detail::trim(value)};
    if (v == "uniform")
      cfg.init_mode = InitMode::uniform;
    else if (v == "gaussian")
      cfg.init_mode = InitMode::gaussian;
    else if (v.rfind("from-file:", 0) == 0) {
      cfg.init_mode = InitMode::from_file;
      cfg.init_file = v.substr(10);
      if (cfg.init_file.empty())
        throw ConfigError(where + ": init from-file needs a path");
    } else
      throw ConfigError(where +
                        ": init must be uniform, gaussian or from-file:<path>");
  } else if (k == "out")
    cfg.output_dir = std::string(detail::trim(value));
  else if (k == "conv") {
    const std::string v{detail::trim(value)};
    if (v == "direct")
      cfg.convolution = ConvolutionPath::direct;
    else if (v == "fast")
      cfg.convolution = ConvolutionPath::fast;
    else
      throw ConfigError(where + ": conv must be direct or fast");
  } else if (k == "threads")
    cfg.threads = static_cast<int>(parse_integer(value, where));
  else
    throw ConfigError(where + ": unknown key '" + k + "'");
}

inline void validate(const RunConfig& cfg) {
  if (!(cfg.side_length > 0.0))
    throw ConfigError("D: side length must be positive");
  if (cfg.node_count < 4) throw ConfigError("m: need at least 4 nodes per side");
  if (cfg.c1 < 0.0 || cfg.c2 < 0.0)
    throw ConfigError("c1/c2: trap strength must be nonnegative");
  if (cfg.screening < 0.0)
    throw ConfigError("Gamma: screening must be nonnegative");
  if (!(cfg.regularization > 0.0))
    throw ConfigError("gamma: regularization must be positive");
  if (cfg.theta1 < 0.0 || cfg.theta2 < 0.0)
    throw ConfigError("theta1/theta2: self couplings must be nonnegative");
  if (cfg.kappa_list.empty())
    throw ConfigError("kappa: list must not be empty");
  for (double k : cfg.kappa_list)
    if (k < 0.0)
      throw ConfigError("kappa: interaction strengths must be nonnegative");
  if (!std::is_sorted(cfg.kappa_list.begin(), cfg.kappa_list.end()) ||
      std::adjacent_find(cfg.kappa_list.begin(), cfg.kappa_list.end()) !=
          cfg.kappa_list.end())
    throw ConfigError("kappa: list must be strictly increasing");
  if (!(cfg.mass1 > 0.0) || !(cfg.mass2 > 0.0))
    throw ConfigError("N1/N2: masses must be positive");
  if (!(cfg.pm_tolerance > 0.0))
    throw ConfigError("delta_pm: tolerance must be positive");
  if (!(cfg.mss_tolerance > 0.0))
    throw ConfigError("delta_mss: tolerance must be positive");
  if (cfg.pm_max_iterations < 1)
    throw ConfigError("pm_max_iter: must be positive");
  if (cfg.mss_max_outer < 1) throw ConfigError("mss_max_outer: must be positive");
  if (!(cfg.mixing > 0.0) || cfg.mixing > 1.0)
    throw ConfigError("mixing: must be in (0,1]");
  if (cfg.init_mode == InitMode::from_file && cfg.init_file.empty())
    throw ConfigError("init: from-file needs a path");
  if (cfg.threads < 1) throw ConfigError("threads: must be positive");
  if (cfg.output_dir.empty()) throw ConfigError("out: output directory not set");
}

// Parses the file, then applies flag overrides in order, then validates.
inline RunConfig parse_config(
    const std::string& path,
    const std::vector<std::pair<std::string, std::string>>& overrides = {}) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  RunConfig cfg;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view sv(line);
    if (const auto hash = sv.find('#'); hash != std::string_view::npos)
      sv = sv.substr(0, hash);
    sv = detail::trim(sv);
    if (sv.empty()) continue;
    const auto eq = sv.find('=');
    const std::string where = path + ":" + std::to_string(line_no);
    if (eq == std::string_view::npos)
      throw ConfigError(where + ": expected key = value");
    const auto key = detail::trim(sv.substr(0, eq));
    const auto value = detail::trim(sv.substr(eq + 1));
    if (key.empty()) throw ConfigError(where + ": missing key");
    apply_setting(cfg, key, value, where);
  }
  for (const auto& [key, value] : overrides)
    apply_setting(cfg, key, value, "flag --" + key);
  validate(cfg);
  return cfg;
}

}  // namespace hartree
