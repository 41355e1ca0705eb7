#include "creutz/config.hpp"

#include <cctype>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "creutz/errors.hpp"
#include "creutz/table.hpp"

namespace creutz {

double parse_phase(const std::string& text) {
  std::string s;
  for (const char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw invalid_input_error("empty phase literal");
  bool has_pi = false;
  if (s.size() >= 2 && (s.ends_with("pi") || s.ends_with("PI"))) {
    has_pi = true;
    s = s.substr(0, s.size() - 2);
    if (!s.empty() && s.back() == '*') s.pop_back();
    if (s.empty() || s == "+") s = "1";
    if (s == "-") s = "-1";
  }
  char* end = nullptr;
  const double value = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    throw invalid_input_error("bad phase literal: " + text);
  return has_pi ? value * std::numbers::pi : value;
}

std::string which_name(ExtremumCase which) {
  return which == ExtremumCase::max ? "max" : "min";
}

std::string normalization_name(Normalization norm) {
  return norm == Normalization::paper ? "paper" : "sample-count";
}

std::string format_name(OutputFormat fmt) { return fmt == OutputFormat::csv ? "csv" : "json"; }

ExtremumCase parse_which(const std::string& text) {
  if (text == "max") return ExtremumCase::max;
  if (text == "min") return ExtremumCase::min;
  throw invalid_input_error("which must be max or min, got: " + text);
}

Normalization parse_normalization(const std::string& text) {
  if (text == "paper") return Normalization::paper;
  if (text == "sample-count") return Normalization::sample_count;
  throw invalid_input_error("normalization must be paper or sample-count, got: " + text);
}

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw invalid_input_error("format must be csv or json, got: " + text);
}

std::string serialize_config(const RunConfig& cfg) {
  std::ostringstream out;
  out << "K = " << format_double(cfg.K) << '\n';
  out << "M = " << format_double(cfg.M) << '\n';
  out << "theta1 = " << format_double(cfg.theta1) << '\n';
  out << "theta2 = " << format_double(cfg.theta2) << '\n';
  out << "L = " << cfg.L << '\n';
  out << "L-min = " << cfg.L_min << '\n';
  out << "L-max = " << cfg.L_max << '\n';
  out << "step = " << cfg.step << '\n';
  out << "t = " << format_double(cfg.t) << '\n';
  out << "t-min = " << format_double(cfg.t_min) << '\n';
  out << "t-max = " << format_double(cfg.t_max) << '\n';
  out << "t-points = " << cfg.t_points << '\n';
  out << "t-eval = " << format_double(cfg.t_eval) << '\n';
  out << "which = " << which_name(cfg.which) << '\n';
  out << "noise-fraction = " << format_double(cfg.noise_fraction) << '\n';
  out << "noise-count = " << cfg.noise_count << '\n';
  out << "seed = " << cfg.seed << '\n';
  out << "normalization = " << normalization_name(cfg.normalization) << '\n';
  out << "out = " << cfg.output_path << '\n';
  out << "format = " << format_name(cfg.format) << '\n';
  out << "threads = " << cfg.threads << '\n';
  return out.str();
}

RunConfig parse_config(const std::string& text, RunConfig base) {
  return parse_config_detailed(text, std::move(base)).config;
}

ParsedConfig parse_config_detailed(const std::string& text, RunConfig base) {
  RunConfig& cfg = base;
  std::vector<std::string> keys;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) continue;
    keys.push_back(key);
    if (key == "K") cfg.K = parse_phase(value);
    else if (key == "M") cfg.M = parse_phase(value);
    else if (key == "theta1") cfg.theta1 = parse_phase(value);
    else if (key == "theta2") cfg.theta2 = parse_phase(value);
    else if (key == "L") cfg.L = std::stoi(value);
    else if (key == "L-min") cfg.L_min = std::stoi(value);
    else if (key == "L-max") cfg.L_max = std::stoi(value);
    else if (key == "step") cfg.step = std::stoi(value);
    else if (key == "t") cfg.t = parse_phase(value);
    else if (key == "t-min") cfg.t_min = parse_phase(value);
    else if (key == "t-max") cfg.t_max = parse_phase(value);
    else if (key == "t-points") cfg.t_points = std::stoi(value);
    else if (key == "t-eval") cfg.t_eval = parse_phase(value);
    else if (key == "which") cfg.which = parse_which(value);
    else if (key == "noise-fraction") cfg.noise_fraction = parse_phase(value);
    else if (key == "noise-count") cfg.noise_count = std::stoi(value);
    else if (key == "seed") cfg.seed = std::stoull(value);
    else if (key == "normalization") cfg.normalization = parse_normalization(value);
    else if (key == "out") cfg.output_path = value;
    else if (key == "format") cfg.format = parse_format(value);
    else if (key == "threads") cfg.threads = std::stoi(value);
    else throw invalid_input_error("unknown config key: " + key);
  }
  return {cfg, std::move(keys)};
}

}  // namespace creutz
