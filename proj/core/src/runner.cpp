#include "chebpe/runner.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <utility>

#include "chebpe/errors.hpp"
#include "chebpe/oracle.hpp"
#include "chebpe/pade.hpp"
#include "chebpe/solver.hpp"
#include "chebpe/starter.hpp"

namespace chebpe {

namespace fs = std::filesystem;

namespace {

// Data-file shapes: grid files carry a fixed number of uniform depth
// columns; internal comparison grids keep at most this many exact nodes.
constexpr int kFileDepthCount = 128;
constexpr int kComparisonDepthCap = 512;

std::vector<double> march_ranges(const RunConfig& cfg) {
  const int count = static_cast<int>(std::floor(cfg.r_max / cfg.delta_r * (1.0 + 1e-12)));
  std::vector<double> ranges(count);
  for (int i = 0; i < count; ++i) ranges[i] = (i + 1) * cfg.delta_r;
  return ranges;
}

// Ten wavelengths at the reference speed: PE fields are distorted in the
// near field, so indices exclude it.
double near_field_exclusion(const Environment& env) {
  return 10.0 * env.ref_speed / env.freq;
}

std::vector<double> uniform_interior_depths(double H, int count) {
  std::vector<double> depths(count);
  for (int p = 0; p < count; ++p) depths[p] = H * (p + 1) / (count + 1);
  return depths;
}

struct CsmRun {
  CglGrid grid;
  MarchResult result;
};

struct EngineProduct {
  Engine engine = Engine::Analytic;
  const RunConfig* cfg = nullptr;
  std::optional<CsmRun> csm;
  int nf = 0;
  std::optional<PadeSeries> fdm_series;
  Eigen::VectorXd fdm_depths;     // full FDM grid (exact nodes)
  Eigen::VectorXcd fdm_starter;   // starter sampled on the FDM grid

  FieldGrid evaluate(const std::vector<double>& depths) const {
    switch (engine) {
      case Engine::Csm:
        return materialize(csm->result, csm->grid, cfg->env.depth, depths,
                           reference_pressure(cfg->env));
      case Engine::Fdm:
        return fdm_march(cfg->env, nf, *fdm_series, fdm_starter, cfg->r_max, cfg->delta_r,
                         depths);
      case Engine::Analytic:
        return analytic_grid(cfg->env, march_ranges(*cfg), depths);
    }
    throw DomainError("unknown engine");
  }
};

EngineProduct make_product(const RunConfig& cfg, Engine engine) {
  EngineProduct product;
  product.engine = engine;
  product.cfg = &cfg;
  if (engine == Engine::Csm) {
    CsmRun run;
    run.grid = cgl_points(cfg.order);
    const PadeSeries series = compute_pade_series(cfg.env.k0(), cfg.delta_r, cfg.pade_terms);
    const SpectrumVector starter = make_starter(cfg.starter, cfg.env, run.grid, cfg.delta_r);
    run.result = march(cfg.env, cfg.order, series, starter, cfg.r_max, cfg.delta_r, cfg.mode);
    product.csm = std::move(run);
  } else if (engine == Engine::Fdm) {
    product.nf = cfg.effective_fdm_points();
    product.fdm_series = compute_pade_series(cfg.env.k0(), cfg.delta_r, cfg.pade_terms);
    const FdmSystem probe = build_fdm_system(cfg.env, product.nf, *product.fdm_series);
    product.fdm_depths = probe.depths;
    product.fdm_starter = starter_values(cfg.starter, cfg.env, probe.depths, cfg.delta_r);
  }
  return product;
}

std::vector<double> interior_cgl_depths(const CglGrid& grid, double H) {
  const Eigen::VectorXd z = map_depth_to_cgl(H, grid);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(grid.order) - 1);
  for (int j = 1; j < grid.order; ++j) out.push_back(z(j));
  return out;
}

// Interior FDM nodes, decimated to at most kComparisonDepthCap columns.
// Exact nodes, so the baseline contributes no interpolation error.
std::vector<double> decimated_fdm_depths(const EngineProduct& fdm) {
  const int interior = fdm.nf - 1;
  const int stride = (interior + kComparisonDepthCap - 1) / kComparisonDepthCap;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(interior / stride) + 1);
  for (int i = 1; i < fdm.nf; i += stride) out.push_back(fdm.fdm_depths(i));
  return out;
}

// Depth grid on which a pair of engines is compared: exact FDM nodes when
// the baseline participates, interior CGL depths otherwise.
std::vector<double> comparison_depths(const EngineProduct& a, const EngineProduct& b) {
  if (a.engine == Engine::Fdm) return decimated_fdm_depths(a);
  if (b.engine == Engine::Fdm) return decimated_fdm_depths(b);
  const EngineProduct& csm = (a.engine == Engine::Csm) ? a : b;
  return interior_cgl_depths(csm.csm->grid, csm.cfg->env.depth);
}

FieldGrid column_view(const FieldGrid& field, std::size_t p) {
  FieldGrid out;
  out.ranges = field.ranges;
  out.depths = {field.depths[p]};
  out.pressure = field.pressure.col(static_cast<Eigen::Index>(p));
  out.tl = field.tl.col(static_cast<Eigen::Index>(p));
  return out;
}

std::string depth_label(double z) {
  std::string label = format_double(z);
  for (char& c : label) {
    if (c == '.') c = 'p';
    if (c == '-') c = 'm';
  }
  return label;
}

void write_text(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DomainError("cannot open '" + path.string() + "' for writing");
  out << content;
  if (!out) throw DomainError("failed writing '" + path.string() + "'");
}

std::string grid_csv(const FieldGrid& field) {
  std::string out = "r,z,tl\n";
  out.reserve(out.size() + field.ranges.size() * field.depths.size() * 28);
  for (std::size_t i = 0; i < field.ranges.size(); ++i) {
    const std::string r = format_double(field.ranges[i]);
    for (std::size_t p = 0; p < field.depths.size(); ++p) {
      out += r;
      out += ',';
      out += format_double(field.depths[p]);
      out += ',';
      out += format_double(field.tl(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(p)));
      out += '\n';
    }
  }
  return out;
}

std::string slice_csv(const FieldGrid& field, std::size_t p) {
  std::string out = "r,tl\n";
  out.reserve(out.size() + field.ranges.size() * 24);
  for (std::size_t i = 0; i < field.ranges.size(); ++i) {
    out += format_double(field.ranges[i]);
    out += ',';
    out += format_double(field.tl(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(p)));
    out += '\n';
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

RunSummary execute_run(const RunConfig& cfg) {
  cfg.validate();

  RunSummary summary;
  summary.exclusion_radius = near_field_exclusion(cfg.env);
  fs::create_directories(cfg.out_dir);
  const fs::path out_dir(cfg.out_dir);

  std::vector<EngineProduct> products;
  products.reserve(cfg.engines.size());
  for (const Engine engine : cfg.engines) products.push_back(make_product(cfg, engine));

  const std::vector<double> slices = cfg.effective_slices();
  std::vector<FieldGrid> slice_fields;
  slice_fields.reserve(products.size());
  for (const EngineProduct& product : products) slice_fields.push_back(product.evaluate(slices));

  if (cfg.grid_output) {
    const std::vector<double> file_depths =
        uniform_interior_depths(cfg.env.depth, kFileDepthCount);
    for (const EngineProduct& product : products) {
      const fs::path path =
          out_dir / (cfg.name + "_" + engine_name(product.engine) + "_grid.csv");
      write_text(path, grid_csv(product.evaluate(file_depths)));
      summary.files.push_back(path.string());
    }
  }

  for (std::size_t e = 0; e < products.size(); ++e) {
    for (std::size_t s = 0; s < slices.size(); ++s) {
      const fs::path path = out_dir / (cfg.name + "_" + engine_name(products[e].engine) +
                                       "_slice_z" + depth_label(slices[s]) + ".csv");
      write_text(path, slice_csv(slice_fields[e], s));
      summary.files.push_back(path.string());
    }
  }

  for (std::size_t a = 0; a < products.size(); ++a) {
    for (std::size_t b = a + 1; b < products.size(); ++b) {
      const std::string name_a = engine_name(products[a].engine);
      const std::string name_b = engine_name(products[b].engine);
      const std::vector<double> depths = comparison_depths(products[a], products[b]);
      const FieldGrid field_a = products[a].evaluate(depths);
      const FieldGrid field_b = products[b].evaluate(depths);

      ComparisonSummary cs;
      cs.first = name_a;
      cs.second = name_b;
      cs.grid_index = error_index(field_a, field_b, summary.exclusion_radius);
      for (std::size_t s = 0; s < slices.size(); ++s) {
        cs.slice_depth.push_back(slices[s]);
        cs.slice_index.push_back(error_index(column_view(slice_fields[a], s),
                                             column_view(slice_fields[b], s),
                                             summary.exclusion_radius));
      }

      std::string out = "# comparison: " + name_a + " vs " + name_b + "\n";
      out += "# near_field_exclusion_m = " + format_double(summary.exclusion_radius) + "\n";
      out += "# grid_error_index_db = " + format_double(cs.grid_index) + " (" +
             std::to_string(depths.size()) + " depths x " +
             std::to_string(field_a.ranges.size()) + " ranges, r >= exclusion)\n";
      for (std::size_t s = 0; s < slices.size(); ++s) {
        out += "# slice_error_index_db z=" + format_double(slices[s]) + " : " +
               format_double(cs.slice_index[s]) + "\n";
      }
      out += "r,z,tl_" + name_a + ",tl_" + name_b + ",dtl\n";
      for (std::size_t s = 0; s < slices.size(); ++s) {
        const std::string z = format_double(slices[s]);
        for (std::size_t i = 0; i < slice_fields[a].ranges.size(); ++i) {
          const Eigen::Index row = static_cast<Eigen::Index>(i);
          const Eigen::Index col = static_cast<Eigen::Index>(s);
          const double tl_a = slice_fields[a].tl(row, col);
          const double tl_b = slice_fields[b].tl(row, col);
          out += format_double(slice_fields[a].ranges[i]);
          out += ',';
          out += z;
          out += ',';
          out += format_double(tl_a);
          out += ',';
          out += format_double(tl_b);
          out += ',';
          out += format_double(tl_a - tl_b);
          out += '\n';
        }
      }

      const fs::path path = out_dir / (cfg.name + "_" + name_a + "_vs_" + name_b + ".csv");
      write_text(path, out);
      summary.files.push_back(path.string());
      summary.comparisons.push_back(std::move(cs));
    }
  }

  return summary;
}

std::vector<SweepRow> run_sweep(const RunConfig& cfg, const std::string& param_in,
                                const std::vector<double>& values, std::string* csv_path) {
  cfg.validate();
  if (values.empty()) throw DomainError("sweep: no values given");

  std::string param;
  if (param_in == "N" || param_in == "order") {
    param = "order";
  } else if (param_in == "n" || param_in == "pade_terms") {
    param = "pade_terms";
  } else if (param_in == "N_f" || param_in == "fdm_points") {
    param = "fdm_points";
  } else {
    throw DomainError("sweep: unknown parameter '" + param_in +
                      "' (expected order, pade_terms, fdm_points)");
  }

  const Engine varied_engine = (param == "fdm_points") ? Engine::Fdm : Engine::Csm;
  if (!cfg.has_engine(varied_engine)) {
    throw DomainError("sweep over " + param + " needs engine '" + engine_name(varied_engine) +
                      "' in the configuration");
  }
  Engine reference_engine;
  if (cfg.has_engine(Engine::Analytic)) {
    reference_engine = Engine::Analytic;
  } else {
    reference_engine = (varied_engine == Engine::Csm) ? Engine::Fdm : Engine::Csm;
    if (!cfg.has_engine(reference_engine)) {
      throw DomainError("sweep needs a reference engine (analytic or the other marched one)");
    }
  }

  const double exclusion = near_field_exclusion(cfg.env);
  std::optional<EngineProduct> reference;
  if (reference_engine != Engine::Analytic) reference = make_product(cfg, reference_engine);

  std::vector<SweepRow> rows;
  rows.reserve(values.size());
  for (const double value : values) {
    const int iv = static_cast<int>(std::llround(value));
    if (std::abs(value - iv) > 0.0) {
      throw DomainError("sweep: " + param + " values must be integers");
    }
    RunConfig varied_cfg = cfg;
    if (param == "order") varied_cfg.order = iv;
    if (param == "pade_terms") varied_cfg.pade_terms = iv;
    if (param == "fdm_points") varied_cfg.fdm_points = iv;
    varied_cfg.validate();

    const EngineProduct varied = make_product(varied_cfg, varied_engine);
    std::vector<double> depths;
    if (varied_engine == Engine::Fdm) {
      depths = decimated_fdm_depths(varied);
    } else if (reference && reference->engine == Engine::Fdm) {
      depths = decimated_fdm_depths(*reference);
    } else {
      depths = interior_cgl_depths(varied.csm->grid, cfg.env.depth);
    }

    const FieldGrid field = varied.evaluate(depths);
    const FieldGrid ref_field = reference ? reference->evaluate(depths)
                                          : analytic_grid(cfg.env, march_ranges(cfg), depths);
    rows.push_back({value, error_index(field, ref_field, exclusion)});
  }

  fs::create_directories(cfg.out_dir);
  const fs::path path = fs::path(cfg.out_dir) / (cfg.name + "_sweep_" + param + ".csv");
  std::string out = "param,value,error_index\n";
  for (const SweepRow& row : rows) {
    out += param;
    out += ',';
    out += format_double(row.value);
    out += ',';
    out += format_double(row.index);
    out += '\n';
  }
  write_text(path, out);
  if (csv_path != nullptr) *csv_path = path.string();
  return rows;
}

std::vector<TimingRow> run_timing(const RunConfig& cfg, int reps) {
  if (reps < 3) throw DomainError("timing: repetitions must be >= 3, got " + std::to_string(reps));
  cfg.validate();

  using Clock = std::chrono::steady_clock;
  const auto seconds = [](Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
  };

  const std::vector<double> ranges = march_ranges(cfg);
  const int steps = static_cast<int>(ranges.size()) - 1;
  volatile double sink = 0.0;

  std::vector<TimingRow> rows;
  for (const Engine engine : cfg.engines) {
    if (engine == Engine::Csm) {
      const PadeSeries series = compute_pade_series(cfg.env.k0(), cfg.delta_r, cfg.pade_terms);
      const CglGrid grid = cgl_points(cfg.order);
      const SpectrumVector starter = make_starter(cfg.starter, cfg.env, grid, cfg.delta_r);

      TimingRow split{"csm", "split", steps, 0.0, 0.0};
      for (int rep = 0; rep < reps; ++rep) {
        const auto t0 = Clock::now();
        const DepthOperator op = assemble_depth_operator(cfg.env, cfg.order);
        const SteppedSystem system(op, series);
        const auto t1 = Clock::now();
        const MarchResult result = march(system, starter, cfg.r_max, cfg.delta_r,
                                         MarchMode::Split);
        const auto t2 = Clock::now();
        split.setup_seconds += seconds(t0, t1);
        split.march_seconds += seconds(t1, t2);
        sink = sink + result.spectra.back()(0).real();
      }
      split.setup_seconds /= reps;
      split.march_seconds /= reps;
      rows.push_back(split);

      TimingRow transfer{"csm", "transfer", steps, 0.0, 0.0};
      for (int rep = 0; rep < reps; ++rep) {
        const auto t0 = Clock::now();
        const DepthOperator op = assemble_depth_operator(cfg.env, cfg.order);
        const SteppedSystem system(op, series);
        const Eigen::MatrixXcd T = system.transfer_matrix();
        const auto t1 = Clock::now();
        std::vector<SpectrumVector> spectra;
        spectra.reserve(ranges.size());
        spectra.push_back(starter);
        for (int s = 1; s < static_cast<int>(ranges.size()); ++s) {
          spectra.push_back(system.phase() * (T * spectra.back()).eval());
        }
        const auto t2 = Clock::now();
        transfer.setup_seconds += seconds(t0, t1);
        transfer.march_seconds += seconds(t1, t2);
        sink = sink + spectra.back()(0).real();
      }
      transfer.setup_seconds /= reps;
      transfer.march_seconds /= reps;
      rows.push_back(transfer);
    } else if (engine == Engine::Fdm) {
      const int nf = cfg.effective_fdm_points();
      const PadeSeries series = compute_pade_series(cfg.env.k0(), cfg.delta_r, cfg.pade_terms);
      const FdmSystem probe = build_fdm_system(cfg.env, nf, series);
      const Eigen::VectorXcd starter =
          starter_values(cfg.starter, cfg.env, probe.depths, cfg.delta_r);

      TimingRow row{"fdm", "-", steps, 0.0, 0.0};
      for (int rep = 0; rep < reps; ++rep) {
        const auto t0 = Clock::now();
        const FdmSystem system = build_fdm_system(cfg.env, nf, series);
        const auto t1 = Clock::now();
        Eigen::VectorXcd state = starter;
        for (int s = 1; s < static_cast<int>(ranges.size()); ++s) {
          state = fdm_step(system, state);
        }
        const auto t2 = Clock::now();
        row.setup_seconds += seconds(t0, t1);
        row.march_seconds += seconds(t1, t2);
        sink = sink + state(state.size() / 2).real();
      }
      row.setup_seconds /= reps;
      row.march_seconds /= reps;
      rows.push_back(row);
    } else {
      TimingRow row{"analytic", "-", steps, 0.0, 0.0};
      const std::vector<double> slices = cfg.effective_slices();
      for (int rep = 0; rep < reps; ++rep) {
        const auto t0 = Clock::now();
        const FieldGrid field = analytic_grid(cfg.env, ranges, slices);
        const auto t1 = Clock::now();
        row.march_seconds += seconds(t0, t1);
        sink = sink + field.tl(field.tl.rows() - 1, 0);
      }
      row.march_seconds /= reps;
      rows.push_back(row);
    }
  }
  (void)sink;
  return rows;
}

}  // namespace chebpe
