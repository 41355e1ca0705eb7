// Command-line front end: spectra, exact-zero solutions, echo traces, size
// sweeps, noise ensembles, figure presets and the oracle verification suite.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "creutz/config.hpp"
#include "creutz/figures.hpp"
#include "creutz/qsl.hpp"
#include "creutz/quench.hpp"
#include "creutz/table.hpp"
#include "creutz/verify.hpp"

namespace {

using namespace creutz;

struct Flags {
  double K = 1.0, M = 1.0;
  std::string theta1, theta2, t, t_min, t_max;
  int L = 0, L_min = 0, L_max = 0, step = 0, t_points = 0, noise_count = 0, threads = -1;
  std::uint64_t seed = 0;
  std::string which, normalization, format, out, config_path;
  double noise_fraction = -1.0;

  CLI::Option *oK = nullptr, *oM = nullptr, *oT1 = nullptr, *oT2 = nullptr, *oT = nullptr,
              *oTmin = nullptr, *oTmax = nullptr, *oL = nullptr, *oLmin = nullptr,
              *oLmax = nullptr, *oStep = nullptr, *oTpts = nullptr, *oCount = nullptr,
              *oThreads = nullptr, *oSeed = nullptr, *oWhich = nullptr, *oNorm = nullptr,
              *oFormat = nullptr, *oOut = nullptr, *oFrac = nullptr;
};

void add_common_flags(CLI::App* cmd, Flags& f) {
  f.oK = cmd->add_option("--K", f.K, "horizontal/diagonal hopping");
  f.oM = cmd->add_option("--M", f.M, "vertical hopping");
  f.oT1 = cmd->add_option("--theta1", f.theta1, "pre-quench phase (accepts e.g. 0.25pi)");
  f.oT2 = cmd->add_option("--theta2", f.theta2, "post-quench phase (accepts e.g. -0.1pi)");
  f.oL = cmd->add_option("--L", f.L, "chain length");
  f.oLmin = cmd->add_option("--L-min", f.L_min, "smallest size in a sweep");
  f.oLmax = cmd->add_option("--L-max", f.L_max, "largest size in a sweep");
  f.oStep = cmd->add_option("--step", f.step, "size increment in a sweep");
  f.oT = cmd->add_option("--t", f.t, "evaluation time");
  f.oTmin = cmd->add_option("--t-min", f.t_min, "first sample time");
  f.oTmax = cmd->add_option("--t-max", f.t_max, "last sample time");
  f.oTpts = cmd->add_option("--t-points", f.t_points, "number of time samples");
  f.oWhich = cmd->add_option("--which", f.which, "extremal case: max or min")
                 ->check(CLI::IsMember({"max", "min"}));
  f.oFrac = cmd->add_option("--noise-fraction", f.noise_fraction, "noise range as a fraction");
  f.oCount = cmd->add_option("--noise-count", f.noise_count, "noise samples per ensemble");
  f.oSeed = cmd->add_option("--seed", f.seed, "noise ensemble seed");
  f.oNorm = cmd->add_option("--normalization", f.normalization, "sweep statistics normalization")
                ->check(CLI::IsMember({"paper", "sample-count"}));
  f.oOut = cmd->add_option("--out", f.out, "output path (default stdout)");
  f.oFormat = cmd->add_option("--format", f.format, "output format")
                  ->check(CLI::IsMember({"csv", "json"}));
  f.oThreads = cmd->add_option("--threads", f.threads, "worker threads (0 = hardware)");
  cmd->add_option("--config", f.config_path, "key = value config file")
      ->check(CLI::ExistingFile);
}

void apply_flags(RunConfig& cfg, const Flags& f, bool t_is_eval_time) {
  if (f.oK->count()) cfg.K = f.K;
  if (f.oM->count()) cfg.M = f.M;
  if (f.oT1->count()) cfg.theta1 = parse_phase(f.theta1);
  if (f.oT2->count()) cfg.theta2 = parse_phase(f.theta2);
  if (f.oL->count()) cfg.L = f.L;
  if (f.oLmin->count()) cfg.L_min = f.L_min;
  if (f.oLmax->count()) cfg.L_max = f.L_max;
  if (f.oStep->count()) cfg.step = f.step;
  if (f.oT->count()) {
    if (t_is_eval_time)
      cfg.t_eval = parse_phase(f.t);
    else
      cfg.t = parse_phase(f.t);
  }
  if (f.oTmin->count()) cfg.t_min = parse_phase(f.t_min);
  if (f.oTmax->count()) cfg.t_max = parse_phase(f.t_max);
  if (f.oTpts->count()) cfg.t_points = f.t_points;
  if (f.oWhich->count()) cfg.which = parse_which(f.which);
  if (f.oFrac->count()) cfg.noise_fraction = f.noise_fraction;
  if (f.oCount->count()) cfg.noise_count = f.noise_count;
  if (f.oSeed->count()) cfg.seed = f.seed;
  if (f.oNorm->count()) cfg.normalization = parse_normalization(f.normalization);
  if (f.oOut->count()) cfg.output_path = f.out;
  if (f.oFormat->count()) cfg.format = parse_format(f.format);
  if (f.oThreads->count()) cfg.threads = f.threads;
}

ParsedConfig read_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw invalid_input_error("cannot read config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_detailed(buf.str(), std::move(base));
}

// precedence: command-line flags > config file > figure defaults > built-ins
RunConfig assemble_config(const Flags& f, bool t_is_eval_time, const std::string& fig_id = {}) {
  RunConfig cfg;
  std::vector<std::string> file_keys;
  if (!f.config_path.empty()) {
    ParsedConfig parsed = read_config_file(f.config_path, cfg);
    cfg = parsed.config;
    file_keys = std::move(parsed.keys);
  }
  if (!fig_id.empty()) {
    const FigureDefaults d = figure_defaults(fig_id);
    auto unset = [&](const CLI::Option* opt, const char* key) {
      return opt->count() == 0 &&
             std::find(file_keys.begin(), file_keys.end(), key) == file_keys.end();
    };
    if (d.has_K && unset(f.oK, "K")) cfg.K = d.K;
    if (d.has_M && unset(f.oM, "M")) cfg.M = d.M;
    if (d.has_theta1 && unset(f.oT1, "theta1")) cfg.theta1 = d.theta1;
    if (d.has_L && unset(f.oL, "L")) cfg.L = d.L;
    if (d.has_L_min && unset(f.oLmin, "L-min")) cfg.L_min = d.L_min;
    if (d.has_L_max && unset(f.oLmax, "L-max")) cfg.L_max = d.L_max;
    if (d.has_step && unset(f.oStep, "step")) cfg.step = d.step;
  }
  apply_flags(cfg, f, t_is_eval_time);
  return cfg;
}

void emit(const RunConfig& cfg, const DataTable& table) {
  const bool json = cfg.format == OutputFormat::json;
  if (cfg.output_path.empty()) {
    write_table(std::cout, table, json);
    return;
  }
  std::ofstream out(cfg.output_path, std::ios::binary);
  if (!out) throw invalid_input_error("cannot open output path: " + cfg.output_path);
  write_table(out, table, json);
}

std::vector<int> sweep_sizes(const RunConfig& cfg) {
  if (cfg.L_min >= cfg.L_max || cfg.step < 1)
    throw invalid_input_error("invalid L range: need L-min < L-max and step >= 1");
  std::vector<int> sizes;
  for (int L = cfg.L_min; L <= cfg.L_max; L += cfg.step) sizes.push_back(L);
  return sizes;
}

DataTable run_spectrum(const RunConfig& cfg) {
  const ModelParams params{cfg.K, cfg.M, cfg.theta1};
  validate(params);
  DataTable table;
  table.columns = {"j", "k", "eps_alpha", "eps_beta", "gap"};
  const MomentumGrid grid = momentum_grid(cfg.L);
  for (int j = 0; j < grid.L; ++j) {
    const double k = grid.points[static_cast<std::size_t>(j)];
    const BandEnergies bands = band_energies(params, k);
    table.add_row({j, k, bands.eps_alpha, bands.eps_beta, band_gap(params, k)});
  }
  return table;
}

DataTable run_zeros(const RunConfig& cfg) {
  DataTable table;
  table.columns = {"j", "k", "theta2", "gap", "t_first"};
  for (const ZeroSolution& sol : allowed_modes(cfg.K, cfg.M, cfg.theta1, cfg.L))
    table.add_row({sol.j, sol.k, sol.theta2, sol.gap, sol.t_first});
  return table;
}

DataTable run_le(const RunConfig& cfg, bool single_time) {
  const QuenchSpec spec{cfg.K, cfg.M, cfg.theta1, cfg.theta2, cfg.L};
  std::vector<double> times;
  if (single_time) {
    times.push_back(cfg.t);
  } else {
    if (cfg.t_points < 2) throw invalid_input_error("need t-points >= 2");
    for (int i = 0; i < cfg.t_points; ++i)
      times.push_back(cfg.t_min + (cfg.t_max - cfg.t_min) * i / (cfg.t_points - 1));
  }
  const LETrace trace = rate_function(spec, times);
  DataTable table;
  table.columns = {"t", "log_le", "le", "rate", "divergent"};
  for (std::size_t i = 0; i < trace.times.size(); ++i)
    table.add_row({trace.times[i], trace.log_le[i], std::exp(trace.log_le[i]), trace.rate[i],
                   static_cast<bool>(trace.divergent[i])});
  return table;
}

DataTable run_delta_c(const RunConfig& cfg) {
  DataTable table;
  table.columns = {"L", "inv_L2", "delta_c", "delta_c_asym"};
  for (const int L : sweep_sizes(cfg))
    table.add_row({L, 1.0 / (static_cast<double>(L) * L), delta_c(cfg.K, cfg.M, cfg.theta1, L),
                   delta_c_asymptote(cfg.K, cfg.M, cfg.theta1, L)});
  return table;
}

DataTable run_tau_f(const RunConfig& cfg) {
  DataTable table;
  table.columns = {"L", "tau_fmax", "tau_fmin", "tau_fmax_asym", "tau_c_asym"};
  const double tau_c = tau_c_asymptote(cfg.K, cfg.M, cfg.theta1);
  for (const int L : sweep_sizes(cfg)) {
    const TauFExtrema ext = tau_f_extrema(cfg.K, cfg.M, cfg.theta1, L);
    table.add_row({L, ext.tau_fmax, ext.tau_fmin, tau_fmax_asymptote(cfg.K, cfg.M, L), tau_c});
  }
  return table;
}

DataTable run_qsl(const RunConfig& cfg) {
  DataTable table;
  table.columns = {"L", "tau_fmax", "tau_fmin", "tau_qsl_max_case", "tau_qsl_min_case"};
  const std::vector<int> sizes = sweep_sizes(cfg);
  const auto max_rows = qsl_vs_size(cfg.K, cfg.M, cfg.theta1, ExtremumCase::max, sizes);
  const auto min_rows = qsl_vs_size(cfg.K, cfg.M, cfg.theta1, ExtremumCase::min, sizes);
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const TauFExtrema ext = tau_f_extrema(cfg.K, cfg.M, cfg.theta1, sizes[i]);
    table.add_row({sizes[i], ext.tau_fmax, ext.tau_fmin, max_rows[i].second, min_rows[i].second});
  }
  return table;
}

DataTable run_qsl_sweep(const RunConfig& cfg) {
  const SweepStats stats = qsl_sweep_stats(cfg.K, cfg.M, cfg.theta1, cfg.which, cfg.L_min,
                                           cfg.L_max, cfg.step, cfg.normalization);
  DataTable table;
  table.columns = {"theta1", "mean", "variance", "sample_count", "normalization"};
  table.add_row({stats.theta1, stats.mean, stats.variance, stats.sample_count,
                 normalization_name(stats.normalization)});
  return table;
}

int run_verify(const VerifyOptions& opt) {
  const std::vector<VerifyCheck> checks = run_verification(opt);
  for (const VerifyCheck& c : checks)
    std::cout << (c.passed ? "PASS" : "FAIL") << "  " << c.name
              << "  max_deviation=" << format_double(c.max_deviation)
              << "  tolerance=" << format_double(c.tolerance) << "\n";
  if (!all_passed(checks)) {
    std::cerr << "verification failed\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Creutz ladder quench dynamics: exact Loschmidt-echo zeros and speed limits"};
  app.require_subcommand(1);

  Flags flags[10];
  CLI::App* spectrum = app.add_subcommand("spectrum", "band energies on the momentum grid");
  CLI::App* zeros = app.add_subcommand("zeros", "exact-zero quench solutions at size L");
  CLI::App* le = app.add_subcommand("le", "Loschmidt echo and rate function over time");
  CLI::App* delta_c_cmd = app.add_subcommand("delta-c", "critical-distance size sweep");
  CLI::App* tau_f = app.add_subcommand("tau-f", "first-divergence-time extrema vs size");
  CLI::App* qsl = app.add_subcommand("qsl", "speed-limit bounds vs size");
  CLI::App* qsl_sweep = app.add_subcommand("qsl-sweep", "mean/variance of the speed limit");
  CLI::App* noise = app.add_subcommand("noise", "noise-averaged speed limit vs size");
  CLI::App* figure = app.add_subcommand("figure", "bundled dataset presets");
  CLI::App* verify = app.add_subcommand("verify", "closed form vs numeric oracle checks");

  CLI::App* cmds[] = {spectrum, zeros, le, delta_c_cmd, tau_f, qsl, qsl_sweep, noise, figure,
                      verify};
  for (int i = 0; i < 10; ++i) add_common_flags(cmds[i], flags[i]);

  std::string fig_id;
  figure->add_option("fig_id", fig_id, "one of: fig2a fig2b fig2c fig3 fig4a fig4b fig5a fig5b "
                                       "fig6a fig6b fig7a fig7b fig7c fig7d fig8a fig8b")
      ->required();

  bool inject_wrong_branch = false;
  verify->add_flag("--inject-wrong-branch", inject_wrong_branch)->group("");

  try {
    app.parse(argc, argv);

    for (int i = 0; i < 10; ++i) {
      if (!cmds[i]->parsed()) continue;
      if (cmds[i] == verify) {
        const RunConfig cfg = assemble_config(flags[i], false);
        VerifyOptions opt;
        if (flags[i].oSeed->count()) opt.seed = cfg.seed;
        opt.inject_wrong_branch = inject_wrong_branch;
        return run_verify(opt);
      }
      if (cmds[i] == figure) {
        if (std::find(figure_ids().begin(), figure_ids().end(), fig_id) == figure_ids().end())
          throw invalid_input_error("unknown figure id: " + fig_id);
        const RunConfig cfg = assemble_config(flags[i], false, fig_id);
        emit(cfg, make_figure(fig_id, cfg));
        return 0;
      }
      const bool is_noise = cmds[i] == noise;
      const RunConfig cfg = assemble_config(flags[i], is_noise);
      if (cmds[i] == spectrum) emit(cfg, run_spectrum(cfg));
      else if (cmds[i] == zeros) emit(cfg, run_zeros(cfg));
      else if (cmds[i] == le) emit(cfg, run_le(cfg, flags[i].oT->count() > 0));
      else if (cmds[i] == delta_c_cmd) emit(cfg, run_delta_c(cfg));
      else if (cmds[i] == tau_f) emit(cfg, run_tau_f(cfg));
      else if (cmds[i] == qsl) emit(cfg, run_qsl(cfg));
      else if (cmds[i] == qsl_sweep) emit(cfg, run_qsl_sweep(cfg));
      else if (is_noise)
        emit(cfg, make_figure(cfg.which == ExtremumCase::max ? "fig8a" : "fig8b", cfg));
      return 0;
    }
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const invalid_input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const no_solution_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const incommensurate_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
