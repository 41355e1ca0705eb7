#pragma once

#include <string>
#include <vector>

#include "creutz/config.hpp"
#include "creutz/table.hpp"

namespace creutz {

// Bundled dataset presets, one per published panel. Each returns the x/y data
// of the panel computed from the given configuration.
//
//   fig2a/b/c  delta_c vs 1/L^2 for both size families (starts 49 and 50)
//              with the quadratic-asymptote line; hoppings (1,1), (1,sqrt 3),
//              (sqrt 2, sqrt 3 - 1)
//   fig3       rate function traces at L = 22, one curve per distinct theta2
//   fig4a/b    tau_fmax / tau_fmin vs L with asymptotes, three theta1 values
//   fig5a/b    Mandelstam-Tamm tau_qsl vs L for the max / min case
//   fig6a/b    echo at t = 1 and qsl time vs commensurate L, quench to 0
//   fig7a..d   mean / variance of tau_qsl vs theta1 for max / min case
//   fig8a/b    noisy vs noiseless qsl bound vs L for the max / min case
DataTable make_figure(const std::string& fig_id, const RunConfig& cfg);

// One point of the fig7 sweep: mean/variance of tau_qsl over the size range.
// Negative theta1 uses the mirrored phase convention; at theta1 = 0 no
// exact-zero quench exists for incommensurate sizes and the (empty) sweep
// sums are reported as zero.
SweepStats fig7_sweep_stats(const RunConfig& cfg, double theta1, ExtremumCase which);

// Which config fields a preset pins by default; the CLI applies these only
// when the user did not set the flag.
struct FigureDefaults {
  bool has_K = false;
  double K = 1.0;
  bool has_M = false;
  double M = 1.0;
  bool has_theta1 = false;
  double theta1 = 0.0;
  bool has_L = false;
  int L = 0;
  bool has_L_min = false;
  int L_min = 0;
  bool has_L_max = false;
  int L_max = 0;
  bool has_step = false;
  int step = 0;
};

FigureDefaults figure_defaults(const std::string& fig_id);

const std::vector<std::string>& figure_ids();

}  // namespace creutz
