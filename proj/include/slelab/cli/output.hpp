#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "slelab/cli/config.hpp"
#include "slelab/estimators/core.hpp"

namespace slelab::cli {

inline constexpr const char* schema_id = "slelab-output/1";

/// Everything a command produces. Records are flat objects of scalars, one per
/// parameter point; fits summarise log-log regressions over those points.
struct Result {
  ExperimentConfig config;
  json records = json::array();
  json fits = json::array();
  std::string svg;  // only for trace --format svg
};

/// NaN and infinities are not JSON numbers; they are written as null.
inline json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

/// Flattens an estimate into `rec`: mean, std_error, n, and every meta entry as meta_<key>.
inline void put_estimate(json& rec, const estimators::Estimate& e) {
  rec["mean"] = number(e.mean);
  rec["std_error"] = number(e.std_error);
  rec["n"] = e.n;
  for (const auto& [k, v] : e.meta) rec["meta_" + k] = v;
}

inline json fit_record(const std::string& label, const estimators::ExponentFit& f, double expected) {
  json j;
  j["label"] = label;
  j["slope"] = number(f.slope);
  j["slope_stderr"] = number(f.slope_stderr);
  j["intercept"] = number(f.intercept);
  j["points"] = static_cast<std::int64_t>(f.points.size());
  j["expected_slope"] = number(expected);
  return j;
}

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline json document(const Result& r) {
  json d;
  d["schema"] = schema_id;
  d["command"] = r.config.command();
  d["seed"] = r.config.values().contains("seed") ? r.config.values()["seed"] : json(nullptr);
  d["parameters"] = r.config.values();
  d["records"] = r.records;
  d["fits"] = r.fits;
  return d;
}

inline std::string to_json_text(const Result& r) { return document(r).dump(2) + "\n"; }

namespace detail {

inline std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_number()) return v.dump();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

inline std::string header_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_array()) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ";") + header_value(x);
    return s;
  }
  return v.dump();
}

}  // namespace detail

/// "# key=value" provenance lines, a header row, then one row per record. Columns are the
/// union of record keys in order of first appearance; fits follow as comment lines.
inline std::string to_csv_text(const Result& r) {
  std::ostringstream os;
  os << "# schema=" << schema_id << "\n# command=" << r.config.command() << "\n";
  for (const auto& [k, v] : r.config.values().items()) os << "# " << k << "=" << detail::header_value(v) << "\n";
  std::vector<std::string> cols;
  for (const auto& rec : r.records)
    for (const auto& [k, v] : rec.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << "\n";
  for (const auto& rec : r.records) {
    for (std::size_t i = 0; i < cols.size(); ++i)
      os << (i ? "," : "") << (rec.contains(cols[i]) ? detail::csv_cell(rec[cols[i]]) : "");
    os << "\n";
  }
  for (const auto& f : r.fits) {
    os << "# fit";
    for (const auto& [k, v] : f.items()) os << " " << k << "=" << detail::csv_cell(v);
    os << "\n";
  }
  return os.str();
}

inline std::string render(const Result& r) {
  const std::string fmt = r.config.string("format");
  if (fmt == "json") return to_json_text(r);
  if (fmt == "csv") return to_csv_text(r);
  if (fmt == "svg") return r.svg;
  throw ConfigError("unknown format '" + fmt + "'");
}

/// Single-threaded write to the configured path ("-" is standard output).
inline void write_output(const Result& r) {
  const std::string text = render(r);
  const std::string path = r.config.string("out");
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoError("cannot write to standard output");
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  f.close();
  if (!f) throw IoError("write to '" + path + "' failed");
}

}  // namespace slelab::cli
