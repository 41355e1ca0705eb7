#pragma once

#include <cstdint>
#include <string>

#include "creutz/qsl.hpp"

namespace creutz {

enum class OutputFormat { csv, json };

// Knobs shared by the CLI subcommands and the figure presets. Phase fields
// accept multiples of pi in text form ("0.25pi", "-0.45pi", "pi").
struct RunConfig {
  double K = 1.0;
  double M = 1.0;
  double theta1 = 0.25 * 3.14159265358979323846;
  double theta2 = 0.0;
  int L = 22;
  int L_min = 50;
  int L_max = 1001;
  int step = 3;
  double t = 1.0;
  double t_min = 0.0;
  double t_max = 12.0;
  int t_points = 1200;
  double t_eval = 0.0;  // noise evaluation time; 0 = first divergence time
  ExtremumCase which = ExtremumCase::max;
  double noise_fraction = 0.1;
  int noise_count = 1000;
  std::uint64_t seed = 12345;
  Normalization normalization = Normalization::paper;
  std::string output_path;  // empty = stdout
  OutputFormat format = OutputFormat::csv;
  int threads = 0;  // 0 = hardware concurrency

  bool operator==(const RunConfig&) const = default;
};

// "0.25pi" / "-0.45pi" / "pi" / plain decimal -> radians.
double parse_phase(const std::string& text);

std::string which_name(ExtremumCase which);
std::string normalization_name(Normalization norm);
std::string format_name(OutputFormat fmt);
ExtremumCase parse_which(const std::string& text);
Normalization parse_normalization(const std::string& text);
OutputFormat parse_format(const std::string& text);

// Flat "key = value" serialization; parse(serialize(cfg)) == cfg. Keys absent
// from the text keep their value from `base`.
std::string serialize_config(const RunConfig& cfg);
RunConfig parse_config(const std::string& text, RunConfig base = {});

struct ParsedConfig {
  RunConfig config;
  std::vector<std::string> keys;  // keys present in the text
};
ParsedConfig parse_config_detailed(const std::string& text, RunConfig base = {});

}  // namespace creutz
