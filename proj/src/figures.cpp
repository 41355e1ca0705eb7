#include "creutz/figures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "creutz/noise.hpp"
#include "creutz/parallel.hpp"
#include "creutz/qsl.hpp"
#include "creutz/quench.hpp"

namespace creutz {

namespace {

constexpr double pi = std::numbers::pi;

const double default_theta1s[] = {0.05 * pi, 0.25 * pi, 0.45 * pi};

std::vector<int> size_range(const RunConfig& cfg) {
  if (cfg.L_min >= cfg.L_max || cfg.step < 1)
    throw invalid_input_error("invalid L range: need L-min < L-max and step >= 1");
  std::vector<int> sizes;
  for (int L = cfg.L_min; L <= cfg.L_max; L += cfg.step) sizes.push_back(L);
  return sizes;
}

DataTable fig2(const RunConfig& cfg) {
  DataTable table;
  table.columns = {"family", "L", "inv_L2", "delta_c", "delta_c_asym"};
  for (const int family : {49, 50}) {
    for (int L = family; L <= cfg.L_max; L += cfg.step) {
      const double dc = delta_c(cfg.K, cfg.M, cfg.theta1, L);
      const double asym = delta_c_asymptote(cfg.K, cfg.M, cfg.theta1, L);
      table.add_row({family, L, 1.0 / (static_cast<double>(L) * L), dc, asym});
    }
  }
  return table;
}

DataTable fig3(const RunConfig& cfg) {
  DataTable table;
  table.columns = {"j", "theta2", "t", "log_le", "rate", "divergent"};
  if (cfg.t_points < 2) throw invalid_input_error("figure needs t-points >= 2");
  std::vector<ZeroSolution> curves;
  for (const ZeroSolution& sol : allowed_modes(cfg.K, cfg.M, cfg.theta1, cfg.L)) {
    if (!(sol.gap > 0.0)) continue;
    const bool dup = std::any_of(curves.begin(), curves.end(), [&](const ZeroSolution& c) {
      return std::abs(c.theta2 - sol.theta2) <= 1e-12;
    });
    if (!dup) curves.push_back(sol);  // mirror partners carry the same theta2
  }
  for (const ZeroSolution& sol : curves) {
    std::vector<double> times;
    times.reserve(static_cast<std::size_t>(cfg.t_points) + 8);
    for (int i = 0; i < cfg.t_points; ++i)
      times.push_back(cfg.t_min + (cfg.t_max - cfg.t_min) * i / (cfg.t_points - 1));
    for (int n = 0;; ++n) {
      const double tn = 2.0 * pi * (n + 0.5) / sol.gap;
      if (tn > cfg.t_max) break;
      if (tn >= cfg.t_min) times.push_back(tn);
    }
    std::sort(times.begin(), times.end());
    const QuenchSpec spec{cfg.K, cfg.M, cfg.theta1, sol.theta2, cfg.L};
    const LETrace trace = rate_function(spec, times);
    for (std::size_t i = 0; i < trace.times.size(); ++i)
      table.add_row({sol.j, sol.theta2, trace.times[i], trace.log_le[i], trace.rate[i],
                     static_cast<bool>(trace.divergent[i])});
  }
  return table;
}

DataTable fig4(const RunConfig& cfg, bool max_case) {
  DataTable table;
  table.columns = max_case
                      ? std::vector<std::string>{"theta1", "L", "tau_fmax", "tau_fmax_asym"}
                      : std::vector<std::string>{"theta1", "L", "tau_fmin", "tau_c_asym"};
  const std::vector<int> sizes = size_range(cfg);
  for (const double theta1 : default_theta1s) {
    const double tau_c = max_case ? 0.0 : tau_c_asymptote(cfg.K, cfg.M, theta1);
    for (const int L : sizes) {
      const TauFExtrema ext = tau_f_extrema(cfg.K, cfg.M, theta1, L);
      if (max_case)
        table.add_row({theta1, L, ext.tau_fmax, tau_fmax_asymptote(cfg.K, cfg.M, L)});
      else
        table.add_row({theta1, L, ext.tau_fmin, tau_c});
    }
  }
  return table;
}

DataTable fig5(const RunConfig& cfg, ExtremumCase which) {
  DataTable table;
  table.columns = {"theta1", "L", "tau_qsl"};
  const std::vector<int> sizes = size_range(cfg);
  for (const double theta1 : default_theta1s) {
    const auto rows = qsl_vs_size(cfg.K, cfg.M, theta1, which, sizes);
    for (const auto& [L, tau] : rows) table.add_row({theta1, L, tau});
  }
  return table;
}

DataTable fig6(const RunConfig& cfg, bool echo_panel) {
  DataTable table;
  table.columns = echo_panel ? std::vector<std::string>{"L", "le"}
                             : std::vector<std::string>{"L", "tau_qsl"};
  for (const int L : commensurate_sizes({cfg.K, cfg.M, 0.0}, cfg.L_max)) {
    if (L < cfg.L_min) continue;
    const QuenchSpec spec{cfg.K, cfg.M, cfg.theta1, 0.0, L};
    const double le = loschmidt_echo(spec, cfg.t).le;
    if (echo_panel)
      table.add_row({L, le});
    else
      table.add_row({L, qsl_time(le, energy_variance(spec))});
  }
  return table;
}

DataTable fig7(const RunConfig& cfg, ExtremumCase which, bool mean_panel) {
  DataTable table;
  table.columns = {"theta1", mean_panel ? "mean" : "variance"};
  std::vector<double> thetas;
  for (int i = -9; i <= 9; ++i) thetas.push_back(i * 0.05 * pi);
  const auto stats = parallel_map(thetas.size(), cfg.threads, [&](std::size_t i) {
    return fig7_sweep_stats(cfg, thetas[i], which);
  });
  for (std::size_t i = 0; i < thetas.size(); ++i)
    table.add_row({thetas[i], mean_panel ? stats[i].mean : stats[i].variance});
  return table;
}

DataTable fig8(const RunConfig& cfg, ExtremumCase which) {
  DataTable table;
  table.columns = {"L", "tau_qsl_noiseless", "tau_qsl_noisy", "theta_used", "mean_dE"};
  const std::vector<int> sizes = size_range(cfg);
  struct Row {
    double noiseless, noisy, theta, mean_de;
  };
  const auto rows = parallel_map(sizes.size(), cfg.threads, [&](std::size_t i) {
    const int L = sizes[i];
    const TauFExtrema ext = tau_f_extrema(cfg.K, cfg.M, cfg.theta1, L);
    const ZeroSolution& sol = which == ExtremumCase::max ? ext.sol_max : ext.sol_min;
    const QuenchSpec spec{cfg.K, cfg.M, cfg.theta1, sol.theta2, L};
    const double t_eval = cfg.t_eval > 0.0 ? cfg.t_eval : first_divergence_time(sol);
    const NoiseEnsemble ens =
        sample_noise(sol.theta2, cfg.noise_fraction, cfg.noise_count, cfg.seed);
    const double mean_de = ensemble_mean_variance(spec, ens);
    const double le = std::min(1.0, std::max(0.0, mixed_le(spec, ens, t_eval)));
    const double theta = std::acos(le);
    const double noisy = (2.0 * theta * theta / (pi * pi)) / mean_de;
    return Row{mt_bound(energy_variance(spec)), noisy, theta, mean_de};
  });
  for (std::size_t i = 0; i < sizes.size(); ++i)
    table.add_row({sizes[i], rows[i].noiseless, rows[i].noisy, rows[i].theta, rows[i].mean_de});
  return table;
}

}  // namespace

SweepStats fig7_sweep_stats(const RunConfig& cfg, double theta1, ExtremumCase which) {
  // mirrored branch convention: negating both phases leaves every spectral
  // quantity unchanged, so negative theta1 maps onto |theta1|
  const double t1 = std::abs(theta1);
  if (t1 == 0.0) {
    // at the critical point no exact-zero quench exists for incommensurate
    // sizes; the sweep sums are empty
    return {theta1, 0.0, 0.0, 0, cfg.normalization};
  }
  SweepStats stats = qsl_sweep_stats(cfg.K, cfg.M, t1, which, cfg.L_min, cfg.L_max, cfg.step,
                                     cfg.normalization);
  stats.theta1 = theta1;
  return stats;
}

DataTable make_figure(const std::string& fig_id, const RunConfig& cfg) {
  if (fig_id == "fig2a" || fig_id == "fig2b" || fig_id == "fig2c") return fig2(cfg);
  if (fig_id == "fig3") return fig3(cfg);
  if (fig_id == "fig4a") return fig4(cfg, true);
  if (fig_id == "fig4b") return fig4(cfg, false);
  if (fig_id == "fig5a") return fig5(cfg, ExtremumCase::max);
  if (fig_id == "fig5b") return fig5(cfg, ExtremumCase::min);
  if (fig_id == "fig6a") return fig6(cfg, true);
  if (fig_id == "fig6b") return fig6(cfg, false);
  if (fig_id == "fig7a") return fig7(cfg, ExtremumCase::max, true);
  if (fig_id == "fig7b") return fig7(cfg, ExtremumCase::max, false);
  if (fig_id == "fig7c") return fig7(cfg, ExtremumCase::min, true);
  if (fig_id == "fig7d") return fig7(cfg, ExtremumCase::min, false);
  if (fig_id == "fig8a") return fig8(cfg, ExtremumCase::max);
  if (fig_id == "fig8b") return fig8(cfg, ExtremumCase::min);
  throw invalid_input_error("unknown figure id: " + fig_id);
}

FigureDefaults figure_defaults(const std::string& fig_id) {
  FigureDefaults d;
  auto set_KM = [&](double K, double M) {
    d.has_K = true;
    d.K = K;
    d.has_M = true;
    d.M = M;
  };
  auto set_theta1 = [&](double t) {
    d.has_theta1 = true;
    d.theta1 = t;
  };
  auto set_range = [&](int lmin, int lmax, int step) {
    d.has_L_min = true;
    d.L_min = lmin;
    d.has_L_max = true;
    d.L_max = lmax;
    d.has_step = true;
    d.step = step;
  };
  if (fig_id == "fig2a") {
    set_KM(1.0, 1.0);
    set_theta1(0.25 * pi);
    set_range(49, 1000, 3);
  } else if (fig_id == "fig2b") {
    set_KM(1.0, std::sqrt(3.0));
    set_theta1(0.25 * pi);
    set_range(49, 1000, 12);
  } else if (fig_id == "fig2c") {
    set_KM(std::sqrt(2.0), std::sqrt(3.0) - 1.0);
    set_theta1(0.25 * pi);
    set_range(49, 1000, 24);
  } else if (fig_id == "fig3") {
    set_KM(1.0, 1.0);
    set_theta1(0.25 * pi);
    d.has_L = true;
    d.L = 22;
  } else if (fig_id.starts_with("fig4") || fig_id.starts_with("fig5")) {
    set_KM(1.0, 1.0);
    set_range(50, 1001, 3);
  } else if (fig_id.starts_with("fig6")) {
    set_KM(1.0, 1.0);
    set_theta1(0.05 * pi);
    set_range(51, 300, 3);
  } else if (fig_id.starts_with("fig7")) {
    set_KM(1.0, 1.0);
    set_range(50, 1001, 3);
  } else if (fig_id.starts_with("fig8")) {
    set_KM(1.0, 1.0);
    set_theta1(0.25 * pi);
    set_range(50, 1001, 9);
  } else {
    throw invalid_input_error("unknown figure id: " + fig_id);
  }
  return d;
}

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids = {"fig2a", "fig2b", "fig2c", "fig3", "fig4a",
                                               "fig4b", "fig5a", "fig5b", "fig6a", "fig6b",
                                               "fig7a", "fig7b", "fig7c", "fig7d", "fig8a",
                                               "fig8b"};
  return ids;
}

}  // namespace creutz
