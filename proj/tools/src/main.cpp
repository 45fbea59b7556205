// Command-line driver: run configured engines, sweep a numeric parameter,
// time setup/marching phases, or list the built-in presets.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "chebpe/config.hpp"
#include "chebpe/errors.hpp"
#include "chebpe/runner.hpp"

namespace {

std::string ssp_label(const chebpe::SoundSpeedProfile& ssp) {
  switch (ssp.kind) {
    case chebpe::SoundSpeedProfile::Kind::Isovelocity:
      return "isovelocity " + chebpe::format_double(ssp.speed) + " m/s";
    case chebpe::SoundSpeedProfile::Kind::Munk:
      return "munk channel";
    case chebpe::SoundSpeedProfile::Kind::Table:
      return "table (" + std::to_string(ssp.table.size()) + " breakpoints)";
  }
  return "?";
}

void print_run_summary(const chebpe::RunConfig& cfg, const chebpe::RunSummary& summary) {
  std::cout << "run: " << cfg.name << "  f=" << chebpe::format_double(cfg.env.freq)
            << " Hz  H=" << chebpe::format_double(cfg.env.depth) << " m  "
            << ssp_label(cfg.env.ssp) << "\n";
  std::cout << "  N=" << cfg.order << "  terms=" << cfg.pade_terms
            << "  dr=" << chebpe::format_double(cfg.delta_r)
            << " m  r_max=" << chebpe::format_double(cfg.r_max) << " m  mode="
            << (cfg.mode == chebpe::MarchMode::Split ? "split" : "transfer") << "\n";
  std::cout << "  near-field exclusion: " << chebpe::format_double(summary.exclusion_radius)
            << " m\n";
  for (const chebpe::ComparisonSummary& cs : summary.comparisons) {
    std::cout << "  " << cs.first << " vs " << cs.second
              << ": grid error index = " << chebpe::format_double(cs.grid_index) << " dB";
    for (std::size_t s = 0; s < cs.slice_index.size(); ++s) {
      std::cout << "; slice z=" << chebpe::format_double(cs.slice_depth[s]) << ": "
                << chebpe::format_double(cs.slice_index[s]) << " dB";
    }
    std::cout << "\n";
  }
  for (const std::string& file : summary.files) {
    std::cout << "  wrote " << file << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wide-angle parabolic-equation field solver (spectral marcher, "
               "finite-difference baseline, analytic waveguide oracle)"};
  app.require_subcommand(1);

  std::string run_source;
  CLI::App* run_cmd = app.add_subcommand("run", "Execute the configured engines and write "
                                                "TL grids, slices, and comparisons");
  run_cmd->add_option("config", run_source, "config file path or preset name")->required();

  std::string sweep_source;
  std::string sweep_param;
  std::vector<double> sweep_values;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Error index versus one varied numeric parameter");
  sweep_cmd->add_option("config", sweep_source, "config file path or preset name")->required();
  sweep_cmd->add_option("--param", sweep_param, "order (N), pade_terms (n), or fdm_points (N_f)")
      ->required();
  sweep_cmd->add_option("--values", sweep_values, "parameter values to try")
      ->required()
      ->expected(-1);

  std::string time_source;
  int reps = 3;
  CLI::App* time_cmd =
      app.add_subcommand("time", "Mean setup/march wall times per engine and mode");
  time_cmd->add_option("config", time_source, "config file path or preset name")->required();
  time_cmd->add_option("--reps", reps, "repetitions to average over (>= 3)");

  CLI::App* presets_cmd = app.add_subcommand("presets", "List the built-in scenario presets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      const chebpe::RunConfig cfg = chebpe::load_config(run_source);
      print_run_summary(cfg, chebpe::execute_run(cfg));
    } else if (sweep_cmd->parsed()) {
      const chebpe::RunConfig cfg = chebpe::load_config(sweep_source);
      std::string csv_path;
      const std::vector<chebpe::SweepRow> rows =
          chebpe::run_sweep(cfg, sweep_param, sweep_values, &csv_path);
      std::cout << "sweep: " << cfg.name << "  param=" << sweep_param << "\n";
      for (const chebpe::SweepRow& row : rows) {
        std::cout << "  " << chebpe::format_double(row.value)
                  << " -> error index " << chebpe::format_double(row.index) << " dB\n";
      }
      std::cout << "  wrote " << csv_path << "\n";
    } else if (time_cmd->parsed()) {
      const chebpe::RunConfig cfg = chebpe::load_config(time_source);
      const std::vector<chebpe::TimingRow> rows = chebpe::run_timing(cfg, reps);
      std::cout << "timing: " << cfg.name << "  reps=" << reps << "\n";
      for (const chebpe::TimingRow& row : rows) {
        std::cout << "  engine=" << row.engine << " mode=" << row.mode
                  << " steps=" << row.steps
                  << " setup_s=" << chebpe::format_double(row.setup_seconds)
                  << " march_s=" << chebpe::format_double(row.march_seconds) << "\n";
      }
    } else if (presets_cmd->parsed()) {
      for (const std::string& name : chebpe::preset_names()) {
        const chebpe::RunConfig cfg = chebpe::parse_config(chebpe::preset_text(name));
        std::cout << name << ": f=" << chebpe::format_double(cfg.env.freq)
                  << " Hz  H=" << chebpe::format_double(cfg.env.depth) << " m  "
                  << ssp_label(cfg.env.ssp) << "  N=" << cfg.order
                  << "  terms=" << cfg.pade_terms << "  engines=";
        for (std::size_t e = 0; e < cfg.engines.size(); ++e) {
          std::cout << (e ? "," : "") << chebpe::engine_name(cfg.engines[e]);
        }
        std::cout << "\n";
      }
    }
  } catch (const chebpe::Error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 0;
}
