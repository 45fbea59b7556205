#pragma once

// Run configuration: the line-oriented `key = value` file format consumed by
// the command-line driver, plus the built-in scenario presets.
//
// Format rules:
//   - one `key = value` pair per line; `#` starts a comment; blank lines ok
//   - `[ssp]` opens a table of `z c` pairs (m, m/s) for `ssp = table`
//   - `[density]` opens a table of `z rho` pairs for `density = table`
//   - unknown keys are rejected; diagnostics carry the 1-based line number

#include <string>
#include <vector>

#include "chebpe/environment.hpp"
#include "chebpe/solver.hpp"
#include "chebpe/starter.hpp"

namespace chebpe {

enum class Engine { Csm, Fdm, Analytic };

// Engine name as written in config files ("csm", "fdm", "analytic").
std::string engine_name(Engine engine);

struct RunConfig {
  std::string name = "run";

  Environment env;

  // Numerics.
  int order = 0;                          // spectral truncation order N
  int pade_terms = 0;                     // rational terms n
  double delta_r = 0.0;                   // range step, m
  double r_max = 0.0;                     // maximum range, m
  MarchMode mode = MarchMode::Transfer;   // split | transfer
  StarterSpec starter;
  int fdm_points = 0;                     // N_f; 0 = auto (round(H), 1 m grid)

  std::vector<Engine> engines;

  // Output.
  std::vector<double> slice_depths;       // empty = {receiver_depth}
  bool grid_output = true;
  std::string out_dir = ".";

  // Effective values.
  int effective_fdm_points() const;       // fdm_points or round(depth)
  std::vector<double> effective_slices() const;
  bool has_engine(Engine engine) const;

  // Throws DomainError/ConfigError when invariants fail:
  // r_max >= delta_r > 0, order >= 4, 1 <= pade_terms <= 12, engines
  // nonempty, slice depths inside [0, H], plus Environment::validate().
  void validate() const;
};

// Parse configuration text. Throws ConfigError (with line number) on
// unknown keys, bad numbers, duplicate keys, or missing required keys.
RunConfig parse_config(const std::string& text);

// Load from a file path or, when `source` names a preset, from the preset
// text. Throws ConfigError when neither resolves.
RunConfig load_config(const std::string& source);

// Built-in scenario presets ("example1", "example2", "example3").
std::vector<std::string> preset_names();
bool is_preset(const std::string& name);
std::string preset_text(const std::string& name);  // ConfigError if unknown

}  // namespace chebpe
