#include "chebpe/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string_view>
#include <utility>

#include "chebpe/errors.hpp"

namespace chebpe {

namespace {

std::string trim(std::string_view s) {
  constexpr std::string_view kWs = " \t\r\n";
  const auto b = s.find_first_not_of(kWs);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(kWs);
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_on(const std::string& value, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = value.find(sep, start);
    out.push_back(trim(value.substr(start, pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string> split_words(const std::string& value) {
  std::vector<std::string> out;
  std::istringstream in(value);
  std::string word;
  while (in >> word) out.push_back(word);
  return out;
}

double parse_double(const std::string& token, int line) {
  double v = 0.0;
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError("expected a number, got '" + token + "'", line);
  }
  return v;
}

int parse_int(const std::string& token, int line) {
  int v = 0;
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError("expected an integer, got '" + token + "'", line);
  }
  return v;
}

bool parse_bool(const std::string& token, int line) {
  if (token == "true" || token == "on" || token == "1") return true;
  if (token == "false" || token == "off" || token == "0") return false;
  throw ConfigError("expected true/false, got '" + token + "'", line);
}

Engine parse_engine(const std::string& token, int line) {
  if (token == "csm") return Engine::Csm;
  if (token == "fdm") return Engine::Fdm;
  if (token == "analytic") return Engine::Analytic;
  throw ConfigError("unknown engine '" + token + "' (expected csm, fdm, analytic)", line);
}

}  // namespace

std::string engine_name(Engine engine) {
  switch (engine) {
    case Engine::Csm: return "csm";
    case Engine::Fdm: return "fdm";
    case Engine::Analytic: return "analytic";
  }
  return "unknown";
}

int RunConfig::effective_fdm_points() const {
  if (fdm_points > 0) return fdm_points;
  return std::max(4, static_cast<int>(std::llround(env.depth)));
}

std::vector<double> RunConfig::effective_slices() const {
  if (!slice_depths.empty()) return slice_depths;
  return {env.receiver_depth};
}

bool RunConfig::has_engine(Engine engine) const {
  return std::find(engines.begin(), engines.end(), engine) != engines.end();
}

void RunConfig::validate() const {
  env.validate();
  if (order < 4) {
    throw DomainError("config: order must be >= 4, got " + std::to_string(order));
  }
  if (pade_terms < 1 || pade_terms > 12) {
    throw DomainError("config: pade_terms must be in [1, 12], got " +
                      std::to_string(pade_terms));
  }
  if (!(delta_r > 0.0) || !(r_max >= delta_r)) {
    throw DomainError("config: need r_max >= delta_r > 0");
  }
  if (engines.empty()) {
    throw DomainError("config: engines must be nonempty");
  }
  if (fdm_points != 0 && fdm_points < 4) {
    throw DomainError("config: fdm_points must be >= 4 when given");
  }
  if (starter.kind == StarterSpec::Kind::Gaussian && !(starter.width_scale > 0.0)) {
    throw DomainError("config: gaussian starter width_scale must be > 0");
  }
  if (starter.kind == StarterSpec::Kind::Modal && starter.max_modes < 0) {
    throw DomainError("config: modal starter max_modes must be >= 1 or auto");
  }
  for (const double z : effective_slices()) {
    if (!(z >= 0.0 && z <= env.depth)) {
      throw DomainError("config: slice depth " + std::to_string(z) + " outside [0, " +
                        std::to_string(env.depth) + "]");
    }
  }
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::set<std::string> seen;
  enum class Section { Main, Ssp, Density };
  Section section = Section::Main;
  std::vector<std::pair<double, double>> ssp_rows;
  std::vector<std::pair<double, double>> density_rows;
  std::string ssp_kind;
  std::string density_kind = "constant";
  double iso_speed = 1500.0;
  double const_rho = 1.0;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line == "[ssp]") {
        section = Section::Ssp;
      } else if (line == "[density]") {
        section = Section::Density;
      } else {
        throw ConfigError("unknown section '" + line + "'", line_no);
      }
      continue;
    }

    if (section != Section::Main) {
      const auto parts = split_words(line);
      if (parts.size() != 2) {
        throw ConfigError("expected a 'z value' pair", line_no);
      }
      const double z = parse_double(parts[0], line_no);
      const double v = parse_double(parts[1], line_no);
      (section == Section::Ssp ? ssp_rows : density_rows).emplace_back(z, v);
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("expected 'key = value'", line_no);
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("empty key", line_no);
    if (value.empty()) throw ConfigError("empty value for '" + key + "'", line_no);
    if (!seen.insert(key).second) {
      throw ConfigError("duplicate key '" + key + "'", line_no);
    }

    if (key == "name") {
      cfg.name = value;
    } else if (key == "frequency") {
      cfg.env.freq = parse_double(value, line_no);
    } else if (key == "depth") {
      cfg.env.depth = parse_double(value, line_no);
    } else if (key == "source_depth") {
      cfg.env.source_depth = parse_double(value, line_no);
    } else if (key == "receiver_depth") {
      cfg.env.receiver_depth = parse_double(value, line_no);
    } else if (key == "ref_speed") {
      cfg.env.ref_speed = parse_double(value, line_no);
    } else if (key == "attenuation") {
      cfg.env.atten_beta = parse_double(value, line_no);
    } else if (key == "ssp") {
      const auto words = split_words(value);
      if (words[0] == "isovelocity") {
        if (words.size() != 2) {
          throw ConfigError("usage: ssp = isovelocity <speed_m_per_s>", line_no);
        }
        iso_speed = parse_double(words[1], line_no);
      } else if (words[0] == "munk" || words[0] == "table") {
        if (words.size() != 1) {
          throw ConfigError("ssp = " + words[0] + " takes no argument", line_no);
        }
      } else {
        throw ConfigError("unknown ssp kind '" + words[0] +
                          "' (expected isovelocity, munk, table)", line_no);
      }
      ssp_kind = words[0];
    } else if (key == "density") {
      const auto words = split_words(value);
      if (words[0] == "constant") {
        if (words.size() > 2) {
          throw ConfigError("usage: density = constant [rho]", line_no);
        }
        if (words.size() == 2) const_rho = parse_double(words[1], line_no);
      } else if (words[0] == "table") {
        if (words.size() != 1) {
          throw ConfigError("density = table takes no argument", line_no);
        }
      } else {
        throw ConfigError("unknown density kind '" + words[0] +
                          "' (expected constant, table)", line_no);
      }
      density_kind = words[0];
    } else if (key == "order") {
      cfg.order = parse_int(value, line_no);
    } else if (key == "pade_terms") {
      cfg.pade_terms = parse_int(value, line_no);
    } else if (key == "delta_r") {
      cfg.delta_r = parse_double(value, line_no);
    } else if (key == "r_max") {
      cfg.r_max = parse_double(value, line_no);
    } else if (key == "mode") {
      if (value == "split") {
        cfg.mode = MarchMode::Split;
      } else if (value == "transfer") {
        cfg.mode = MarchMode::Transfer;
      } else {
        throw ConfigError("unknown mode '" + value + "' (expected split, transfer)", line_no);
      }
    } else if (key == "starter") {
      const auto words = split_words(value);
      if (words[0] == "modal") {
        cfg.starter.kind = StarterSpec::Kind::Modal;
        cfg.starter.max_modes = 0;
        if (words.size() == 2 && words[1] != "auto") {
          cfg.starter.max_modes = parse_int(words[1], line_no);
          if (cfg.starter.max_modes < 1) {
            throw ConfigError("modal starter mode count must be >= 1", line_no);
          }
        } else if (words.size() > 2) {
          throw ConfigError("usage: starter = modal [auto|<modes>]", line_no);
        }
      } else if (words[0] == "gaussian") {
        cfg.starter.kind = StarterSpec::Kind::Gaussian;
        cfg.starter.width_scale = 1.0;
        if (words.size() == 2) {
          cfg.starter.width_scale = parse_double(words[1], line_no);
        } else if (words.size() > 2) {
          throw ConfigError("usage: starter = gaussian [<width_scale>]", line_no);
        }
      } else {
        throw ConfigError("unknown starter '" + words[0] + "' (expected modal, gaussian)",
                          line_no);
      }
    } else if (key == "fdm_points") {
      cfg.fdm_points = parse_int(value, line_no);
    } else if (key == "engines") {
      for (const std::string& token : split_on(value, ',')) {
        if (token.empty()) throw ConfigError("empty engine entry", line_no);
        const Engine engine = parse_engine(token, line_no);
        if (cfg.has_engine(engine)) {
          throw ConfigError("duplicate engine '" + token + "'", line_no);
        }
        cfg.engines.push_back(engine);
      }
    } else if (key == "slices") {
      for (const std::string& token : split_on(value, ',')) {
        if (token.empty()) throw ConfigError("empty slice entry", line_no);
        cfg.slice_depths.push_back(parse_double(token, line_no));
      }
    } else if (key == "grid_output") {
      cfg.grid_output = parse_bool(value, line_no);
    } else if (key == "out_dir") {
      cfg.out_dir = value;
    } else {
      throw ConfigError("unknown key '" + key + "'", line_no);
    }
  }

  for (const char* req : {"frequency", "depth", "source_depth", "receiver_depth", "ssp",
                          "order", "pade_terms", "delta_r", "r_max", "starter", "engines"}) {
    if (!seen.count(req)) {
      throw ConfigError(std::string("missing required key '") + req + "'");
    }
  }

  if (ssp_kind == "table") {
    if (ssp_rows.empty()) {
      throw ConfigError("ssp = table requires an [ssp] section");
    }
    cfg.env.ssp = SoundSpeedProfile::table_profile(std::move(ssp_rows));
  } else {
    if (!ssp_rows.empty()) {
      throw ConfigError("[ssp] section present but ssp = " + ssp_kind);
    }
    cfg.env.ssp = (ssp_kind == "munk") ? SoundSpeedProfile::munk()
                                       : SoundSpeedProfile::isovelocity(iso_speed);
  }

  if (density_kind == "table") {
    if (density_rows.empty()) {
      throw ConfigError("density = table requires a [density] section");
    }
    cfg.env.density = DensityProfile::table_profile(std::move(density_rows));
  } else {
    if (!density_rows.empty()) {
      throw ConfigError("[density] section present but density = " + density_kind);
    }
    cfg.env.density = DensityProfile::constant(const_rho);
  }

  cfg.validate();
  return cfg;
}

namespace {

// Shallow isovelocity waveguide: two propagating modes at 20 Hz, seeded with
// the exact modal field and checked against the analytic solution.
constexpr const char* kExample1 = R"(name = example1
frequency = 20
depth = 100
source_depth = 36
receiver_depth = 36
ref_speed = 1500
ssp = isovelocity 1500
order = 25
pade_terms = 8
delta_r = 5
r_max = 3000
mode = transfer
starter = modal auto
fdm_points = 200
engines = csm, fdm, analytic
out_dir = out/example1
)";

// Deep-water Munk channel at 50 Hz, Gaussian-seeded, cross-checked against
// the finite-difference baseline on a 1 m grid.
constexpr const char* kExample2 = R"(name = example2
frequency = 50
depth = 5000
source_depth = 1000
receiver_depth = 1000
ref_speed = 1500
ssp = munk
order = 600
pade_terms = 4
delta_r = 20
r_max = 30000
mode = transfer
starter = gaussian 3
fdm_points = 5000
engines = csm, fdm
out_dir = out/example2
)";

// Shallow downward-refracting tabulated profile at 30 Hz.
constexpr const char* kExample3 = R"(name = example3
frequency = 30
depth = 400
source_depth = 40
receiver_depth = 40
ref_speed = 1500
ssp = table
order = 100
pade_terms = 8
delta_r = 10
r_max = 10000
mode = transfer
starter = gaussian 2.5
fdm_points = 400
engines = csm, fdm
out_dir = out/example3

[ssp]
0 1560
50 1555
100 1530
200 1525
250 1520
300 1510
350 1505
400 1500
)";

}  // namespace

std::vector<std::string> preset_names() { return {"example1", "example2", "example3"}; }

bool is_preset(const std::string& name) {
  return name == "example1" || name == "example2" || name == "example3";
}

std::string preset_text(const std::string& name) {
  if (name == "example1") return kExample1;
  if (name == "example2") return kExample2;
  if (name == "example3") return kExample3;
  throw ConfigError("unknown preset '" + name + "' (available: example1, example2, example3)");
}

RunConfig load_config(const std::string& source) {
  if (std::filesystem::exists(source)) {
    std::ifstream in(source, std::ios::binary);
    if (!in) {
      throw ConfigError("cannot open config file '" + source + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
  }
  if (is_preset(source)) {
    return parse_config(preset_text(source));
  }
  throw ConfigError("'" + source +
                    "' is neither a readable file nor a preset (presets: example1, "
                    "example2, example3)");
}

}  // namespace chebpe
