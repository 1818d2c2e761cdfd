#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "slelab/cli.hpp"

using namespace slelab::cli;

namespace {

const std::map<std::string, std::string> descriptions = {
    {"trace", "reconstruct one trace and render it (svg) or list its points"},
    {"cardy", "P[tau_a < tau_b] by Monte Carlo, with the hypergeometric value"},
    {"touch", "P[tau_x < tau_X]: the trace touches [x, X]"},
    {"same-swallow", "P[tau_x = tau_X] by Monte Carlo and by quadrature"},
    {"dim", "tail of the conformal radius and the fitted dimension"},
    {"zigzag1", "P1([x, x + dx]) over a range of dx and the fitted exponent"},
    {"zigzag2", "two-interval zig-zag estimator Q2(x, X; y)"},
    {"dipolar-avoid", "approach of dipolar traces to the target set"},
    {"restriction", "kappa = 8/3 hull avoidance against f_A'(0)^{5/8}"},
    {"annular-boundary", "angle of a boundary point under annular SLE"},
    {"martingale", "ensemble means of polynomials in the Loewner coefficients"},
    {"virasoro-check", "exact algebraic identity suite"},
};

json parse_flag(const ParamSpec& p, const std::vector<std::string>& raw) {
  auto to_number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw ConfigError("--" + p.name + ": '" + s + "' is not a number");
    return v;
  };
  switch (p.type) {
    case ParamType::Number: return to_number(raw.back());
    case ParamType::Integer: {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(raw.back(), &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != raw.back().size()) throw ConfigError("--" + p.name + ": '" + raw.back() + "' is not an integer");
      return static_cast<std::int64_t>(v);
    }
    case ParamType::String: return raw.back();
    case ParamType::NumberList: {
      json a = json::array();
      for (const auto& s : raw) a.push_back(to_number(s));
      return a;
    }
  }
  return nullptr;
}

struct Sub {
  CLI::App* app;
  std::string config_path;
  bool print_config = false;
  std::map<std::string, std::vector<std::string>> flags;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slelab: Loewner evolution experiments with reproducible, machine-readable output"};
  app.require_subcommand(1);
  std::map<std::string, Sub> subs;
  for (const auto& [name, keys] : command_table()) {
    Sub& s = subs[name];
    s.app = app.add_subcommand(name, descriptions.at(name));
    s.app->add_option("--config", s.config_path, "flat JSON configuration; flags override its values");
    s.app->add_flag("--print-config", s.print_config, "print the resolved configuration as JSON and exit");
    for (const auto& key : allowed_keys(name)) {
      const auto& spec = parameter(key);
      std::string names = "--" + key;
      if (key.find('_') != std::string::npos) {
        std::string dashed = key;
        for (char& ch : dashed)
          if (ch == '_') ch = '-';
        names += ",--" + dashed;
      }
      auto* opt = s.app->add_option(names, s.flags[key], spec.help + " (default " + ExperimentConfig(name).values()[key].dump() + ")");
      if (spec.type == ParamType::NumberList) opt->delimiter(',');
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  for (auto& [name, s] : subs) {
    if (!s.app->parsed()) continue;
    try {
      ExperimentConfig cfg = s.config_path.empty() ? ExperimentConfig(name) : ExperimentConfig::load(s.config_path, name);
      for (const auto& [key, raw] : s.flags)
        if (s.app->count("--" + key) > 0) cfg.set(key, parse_flag(parameter(key), raw));
      if (s.print_config) {
        std::cout << cfg.to_json().dump(2) << "\n";
        return 0;
      }
      return run(cfg);
    } catch (const IoError& e) {
      std::cerr << "slelab: I/O error: " << e.what() << "\n";
      return 2;
    } catch (const std::exception& e) {
      std::cerr << "slelab: " << e.what() << "\n";
      return 1;
    }
  }
  return 1;
}
