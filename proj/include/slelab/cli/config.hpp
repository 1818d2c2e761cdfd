#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "slelab/common.hpp"

namespace slelab::cli {

using json = nlohmann::ordered_json;

/// Malformed or inconsistent experiment configuration (exit status 1).
struct ConfigError : DomainError {
  using DomainError::DomainError;
};

/// Unreadable input or unwritable output (exit status 2).
struct IoError : Error {
  using Error::Error;
};

enum class ParamType { Number, Integer, String, NumberList };

struct ParamSpec {
  std::string name;
  ParamType type;
  json fallback;
  std::string help;
};

/// Every parameter any command understands, in echo order.
inline const std::vector<ParamSpec>& parameter_table() {
  static const std::vector<ParamSpec> table = {
      {"kappa", ParamType::Number, 6.0, "SLE parameter"},
      {"kappa_exact", ParamType::String, "", "exact rational kappa such as 8/3 (virasoro-check); empty uses kappa"},
      {"dt", ParamType::Number, 1e-4, "physical Loewner time step at the initial scale"},
      {"samples", ParamType::Integer, 10000, "Monte Carlo sample count"},
      {"seed", ParamType::Integer, 1, "base seed; per-sample seeds are split from it"},
      {"workers", ParamType::Integer, 1, "worker threads (results do not depend on it)"},
      {"horizon", ParamType::Number, 1e16, "physical time horizon; undecided runs are censored"},
      {"out", ParamType::String, "-", "output path, - for standard output"},
      {"format", ParamType::String, "json", "json or csv (trace also accepts svg)"},
      {"geometry", ParamType::String, "chordal", "chordal, radial or dipolar"},
      {"driver", ParamType::String, "brownian", "brownian (sqrt(kappa) B) or constant"},
      {"driver_value", ParamType::Number, 0.0, "value of the constant driver"},
      {"T", ParamType::Number, 1.0, "evolution time"},
      {"stride", ParamType::Integer, 1, "keep every stride-th grid point of a trace"},
      {"a", ParamType::Number, -1.0, "left marked point (cardy)"},
      {"b", ParamType::Number, 1.0, "right marked point (cardy)"},
      {"x", ParamType::Number, 1.0, "inner point of the interval"},
      {"X", ParamType::Number, 2.0, "outer point of the interval"},
      {"y", ParamType::Number, -1.0, "negative marked point (zigzag2)"},
      {"restart_dy", ParamType::Number, 0.0, "relative interval length of the restart estimator; 0 disables it"},
      {"restart_repeats", ParamType::Integer, 1, "fresh continuations per run of the restart estimator"},
      {"z0", ParamType::Number, 0.2, "imaginary part of the bulk point"},
      {"z0_re", ParamType::Number, 0.0, "real part of the bulk point"},
      {"eps_min", ParamType::Number, 0.002, "smallest epsilon"},
      {"eps_max", ParamType::Number, 0.02, "largest epsilon"},
      {"eps_count", ParamType::Integer, 7, "log-spaced epsilon count"},
      {"dx_min", ParamType::Number, 1e-3, "smallest interval length"},
      {"dx_max", ParamType::Number, 1e-1, "largest interval length"},
      {"dx_count", ParamType::Integer, 5, "log-spaced interval length count"},
      {"deltas", ParamType::NumberList, json::array({0.1, 0.01, 0.001}), "approach thresholds"},
      {"hull", ParamType::String, "semidisk", "semidisk or slit"},
      {"hull_x", ParamType::Number, 2.0, "hull base point"},
      {"hull_size", ParamType::Number, 1.0, "semidisk radius or slit height"},
      {"p", ParamType::Number, 2.0, "annulus modulus"},
      {"trunc", ParamType::Integer, 40, "lattice-sum truncation M"},
      {"boundary", ParamType::String, "outer", "outer or inner annulus boundary"},
      {"angle", ParamType::Number, 1.5707963267948966, "initial boundary angle"},
      {"poly", ParamType::String, "quadratic", "f1, f2 or quadratic (f1^2 - (kappa/2) f2)"},
      {"times", ParamType::NumberList, json::array({0.25, 0.5, 1.0}), "observation times"},
      {"grade", ParamType::Integer, 6, "grade bound for the algebraic checks"},
  };
  return table;
}

inline const ParamSpec& parameter(const std::string& name) {
  for (const auto& p : parameter_table())
    if (p.name == name) return p;
  throw ConfigError("unknown parameter '" + name + "'");
}

/// Keys accepted by each command (beyond the shared ones).
inline const std::map<std::string, std::vector<std::string>>& command_table() {
  static const std::vector<std::string> mc = {"dt", "samples", "horizon"};
  auto with_mc = [&](std::vector<std::string> k) {
    k.insert(k.end(), mc.begin(), mc.end());
    return k;
  };
  static const std::map<std::string, std::vector<std::string>> table = {
      {"trace", {"dt", "geometry", "driver", "driver_value", "T", "stride", "p", "trunc"}},
      {"cardy", with_mc({"a", "b"})},
      {"touch", with_mc({"x", "X"})},
      {"same-swallow", with_mc({"x", "X"})},
      {"dim", with_mc({"z0", "z0_re", "eps_min", "eps_max", "eps_count"})},
      {"zigzag1", with_mc({"x", "dx_min", "dx_max", "dx_count"})},
      {"zigzag2", with_mc({"x", "X", "y", "restart_dy", "restart_repeats"})},
      {"dipolar-avoid", {"dt", "samples", "T", "deltas", "stride"}},
      {"restriction", with_mc({"hull", "hull_x", "hull_size"})},
      {"annular-boundary", {"dt", "samples", "T", "p", "trunc", "boundary", "angle", "stride"}},
      {"martingale", {"dt", "samples", "poly", "times"}},
      {"virasoro-check", {"kappa_exact", "grade", "p", "trunc"}},
  };
  return table;
}

inline std::vector<std::string> allowed_keys(const std::string& command) {
  const auto it = command_table().find(command);
  if (it == command_table().end()) throw ConfigError("unknown command '" + command + "'");
  std::vector<std::string> keys = {"kappa", "seed", "workers", "out", "format"};
  keys.insert(keys.end(), it->second.begin(), it->second.end());
  // echo order follows the parameter table
  std::vector<std::string> ordered;
  for (const auto& p : parameter_table())
    if (std::find(keys.begin(), keys.end(), p.name) != keys.end()) ordered.push_back(p.name);
  return ordered;
}

/// A command plus the complete set of its parameters.
class ExperimentConfig {
 public:
  ExperimentConfig() = default;

  /// Defaults for every key of the command.
  explicit ExperimentConfig(const std::string& command) : command_(command) {
    for (const auto& k : allowed_keys(command)) values_[k] = default_for(command, k);
  }

  const std::string& command() const { return command_; }
  const json& values() const { return values_; }
  bool accepts(const std::string& key) const {
    const auto keys = allowed_keys(command_);
    return std::find(keys.begin(), keys.end(), key) != keys.end();
  }

  /// Sets a key after checking that the command knows it and the value has the right type.
  void set(const std::string& key, const json& v) {
    if (!accepts(key)) throw ConfigError("command '" + command_ + "' does not accept key '" + key + "'");
    values_[key] = coerce(parameter(key), v);
  }

  double number(const std::string& k) const { return values_.at(k).get<double>(); }
  std::int64_t integer(const std::string& k) const { return values_.at(k).get<std::int64_t>(); }
  std::string string(const std::string& k) const { return values_.at(k).get<std::string>(); }
  std::vector<double> list(const std::string& k) const { return values_.at(k).get<std::vector<double>>(); }

  /// Flat document {"command": ..., key: value, ...}.
  json to_json() const {
    json j;
    j["command"] = command_;
    for (const auto& [k, v] : values_.items()) j[k] = v;
    return j;
  }

  /// Missing keys take defaults; unknown keys are rejected.
  static ExperimentConfig from_json(const json& j, const std::string& command_override = "") {
    if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
    std::string command = command_override;
    if (j.contains("command")) {
      if (!j["command"].is_string()) throw ConfigError("'command' must be a string");
      if (!command.empty() && j["command"].get<std::string>() != command)
        throw ConfigError("configuration is for command '" + j["command"].get<std::string>() + "', not '" +
                          command + "'");
      command = j["command"].get<std::string>();
    }
    if (command.empty()) throw ConfigError("configuration names no command");
    ExperimentConfig c(command);
    for (const auto& [k, v] : j.items())
      if (k != "command") c.set(k, v);
    return c;
  }

  static ExperimentConfig load(const std::string& path, const std::string& command_override = "") {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read configuration file '" + path + "'");
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw ConfigError("configuration file '" + path + "' is not valid JSON: " + e.what());
    }
    return from_json(j, command_override);
  }

  friend bool operator==(const ExperimentConfig& a, const ExperimentConfig& b) {
    return a.command_ == b.command_ && a.values_ == b.values_;
  }

 private:
  static json default_for(const std::string& command, const std::string& key) {
    if (key == "format" && command == "trace") return "svg";
    if (key == "dt" && (command == "trace" || command == "annular-boundary" || command == "dipolar-avoid"))
      return 1e-3;
    if (key == "samples" && command == "annular-boundary") return 100;
    if (key == "T" && command == "dipolar-avoid") return 2.0;
    if (key == "T" && command == "annular-boundary") return 0.5;
    if (key == "p" && command == "annular-boundary") return 1.0;
    if (key == "dt" && command == "martingale") return 1e-3;
    if (key == "kappa" && command == "restriction") return 8.0 / 3.0;
    return parameter(key).fallback;
  }

  static json coerce(const ParamSpec& p, const json& v) {
    const std::string where = "parameter '" + p.name + "'";
    switch (p.type) {
      case ParamType::Number:
        if (!v.is_number()) throw ConfigError(where + " must be a number");
        return v.get<double>();
      case ParamType::Integer:
        if (!v.is_number_integer()) throw ConfigError(where + " must be an integer");
        return v.get<std::int64_t>();
      case ParamType::String:
        if (!v.is_string()) throw ConfigError(where + " must be a string");
        return v;
      case ParamType::NumberList: {
        if (!v.is_array()) throw ConfigError(where + " must be an array of numbers");
        json out = json::array();
        for (const auto& x : v) {
          if (!x.is_number()) throw ConfigError(where + " must be an array of numbers");
          out.push_back(x.get<double>());
        }
        return out;
      }
    }
    return v;
  }

  std::string command_;
  json values_ = json::object();
};

}  // namespace slelab::cli
