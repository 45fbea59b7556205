#pragma once

// Orchestration behind the command-line verbs: execute the configured
// engines, serialize deterministic CSV artifacts, run convergence sweeps,
// and time setup/marching phases.

#include <string>
#include <vector>

#include "chebpe/config.hpp"
#include "chebpe/field.hpp"

namespace chebpe {

struct ComparisonSummary {
  std::string first;                  // engine names as configured
  std::string second;
  double grid_index = 0.0;            // far-field mean |dTL| on the comparison grid, dB
  std::vector<double> slice_depth;    // one entry per slice
  std::vector<double> slice_index;    // far-field mean |dTL| along each slice, dB
};

struct RunSummary {
  std::vector<std::string> files;     // paths written, in write order
  std::vector<ComparisonSummary> comparisons;
  double exclusion_radius = 0.0;      // near-field cut applied to indices, m
};

// Run every configured engine, writing per-engine TL grid files (when
// grid_output) and slice files, plus one comparison file per engine pair,
// all under cfg.out_dir. Data files are byte-deterministic.
RunSummary execute_run(const RunConfig& cfg);

struct SweepRow {
  double value = 0.0;
  double index = 0.0;  // far-field error index vs the reference engine, dB
};

// Vary one numeric parameter ("order"/"N", "pade_terms", "fdm_points") and
// report the varied engine's far-field error index against the reference
// engine: the analytic oracle when configured, otherwise the other marched
// engine at its configured settings. Writes <name>_sweep_<param>.csv under
// cfg.out_dir; csv_path (when non-null) receives the path.
std::vector<SweepRow> run_sweep(const RunConfig& cfg, const std::string& param,
                                const std::vector<double>& values,
                                std::string* csv_path = nullptr);

struct TimingRow {
  std::string engine;          // csm / fdm / analytic
  std::string mode;            // split / transfer / "-"
  int steps = 0;
  double setup_seconds = 0.0;  // operator assembly, factorizations, transfer build
  double march_seconds = 0.0;  // stepping only (analytic: slice evaluation)
};

// Mean wall times over reps repetitions (reps >= 3, DomainError below).
// The CSM engine is timed in both modes regardless of cfg.mode.
std::vector<TimingRow> run_timing(const RunConfig& cfg, int reps);

// Shortest round-trip decimal formatting used for all CSV payloads.
std::string format_double(double v);

}  // namespace chebpe
