#include "doctest.h"

#include <chebpe/config.hpp>
#include <chebpe/errors.hpp>

#include <cstdio>
#include <fstream>
#include <string>

using namespace chebpe;

namespace {

const char* kMinimal = R"(frequency = 20
depth = 100
source_depth = 36
receiver_depth = 36
ssp = isovelocity 1500
order = 16
pade_terms = 4
delta_r = 5
r_max = 1000
starter = modal
engines = csm
)";

// Replace the first line starting with `key` by `replacement` (or append).
std::string with_line(const std::string& base, const std::string& key,
                      const std::string& replacement) {
  std::string out;
  bool done = false;
  std::size_t start = 0;
  while (start <= base.size()) {
    const std::size_t end = base.find('\n', start);
    const std::string line =
        base.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (!done && line.rfind(key, 0) == 0) {
      if (!replacement.empty()) out += replacement + "\n";
      done = true;
    } else if (!line.empty() || end != std::string::npos) {
      out += line + "\n";
    }
    if (end == std::string::npos) break;
    start = end + 1;
  }
  if (!done && !replacement.empty()) out += replacement + "\n";
  return out;
}

}  // namespace

TEST_CASE("minimal configuration parses with documented defaults") {
  const RunConfig cfg = parse_config(kMinimal);
  CHECK(cfg.name == "run");
  CHECK(cfg.env.freq == 20.0);
  CHECK(cfg.env.depth == 100.0);
  CHECK(cfg.env.source_depth == 36.0);
  CHECK(cfg.env.receiver_depth == 36.0);
  CHECK(cfg.env.ref_speed == 1500.0);
  CHECK(cfg.env.atten_beta == 0.0);
  CHECK(cfg.env.ssp.kind == SoundSpeedProfile::Kind::Isovelocity);
  CHECK(cfg.env.ssp.speed == 1500.0);
  CHECK(cfg.env.density.kind == DensityProfile::Kind::Constant);
  CHECK(cfg.env.density.rho == 1.0);
  CHECK(cfg.order == 16);
  CHECK(cfg.pade_terms == 4);
  CHECK(cfg.delta_r == 5.0);
  CHECK(cfg.r_max == 1000.0);
  CHECK(cfg.mode == MarchMode::Transfer);
  CHECK(cfg.starter.kind == StarterSpec::Kind::Modal);
  CHECK(cfg.starter.max_modes == 0);
  CHECK(cfg.fdm_points == 0);
  CHECK(cfg.effective_fdm_points() == 100);  // auto: one point per meter
  REQUIRE(cfg.engines.size() == 1);
  CHECK(cfg.engines[0] == Engine::Csm);
  CHECK(cfg.has_engine(Engine::Csm));
  CHECK(!cfg.has_engine(Engine::Fdm));
  CHECK(cfg.slice_depths.empty());
  REQUIRE(cfg.effective_slices().size() == 1);
  CHECK(cfg.effective_slices()[0] == 36.0);  // falls back to the receiver
  CHECK(cfg.grid_output);
  CHECK(cfg.out_dir == ".");
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("optional keys round-trip") {
  std::string text = kMinimal;
  text = with_line(text, "starter", "starter = gaussian 2.5");
  text += "name = trial\n";
  text += "ref_speed = 1480\n";
  text += "attenuation = 0.5\n";
  text += "mode = split\n";
  text += "fdm_points = 321\n";
  text += "slices = 10, 36, 90\n";
  text += "grid_output = off\n";
  text += "out_dir = out/trial\n";
  text = with_line(text, "engines", "engines = csm, fdm, analytic");

  const RunConfig cfg = parse_config(text);
  CHECK(cfg.name == "trial");
  CHECK(cfg.env.ref_speed == 1480.0);
  CHECK(cfg.env.atten_beta == 0.5);
  CHECK(cfg.mode == MarchMode::Split);
  CHECK(cfg.starter.kind == StarterSpec::Kind::Gaussian);
  CHECK(cfg.starter.width_scale == 2.5);
  CHECK(cfg.fdm_points == 321);
  CHECK(cfg.effective_fdm_points() == 321);
  REQUIRE(cfg.engines.size() == 3);
  CHECK(cfg.engines[1] == Engine::Fdm);
  CHECK(cfg.engines[2] == Engine::Analytic);
  REQUIRE(cfg.slice_depths.size() == 3);
  CHECK(cfg.slice_depths[1] == 36.0);
  CHECK(!cfg.grid_output);
  CHECK(cfg.out_dir == "out/trial");
}

TEST_CASE("profile tables parse from their sections") {
  // Key/value lines must precede the sections: a section runs to the next
  // section header or end of input.
  std::string text = kMinimal;
  text = with_line(text, "ssp", "ssp = table");
  text += "density = table\n";
  text += "[ssp]\n0 1520\n50 1510\n100 1500\n";
  text += "[density]\n0 1.0\n100 1.2\n";

  const RunConfig cfg = parse_config(text);
  REQUIRE(cfg.env.ssp.kind == SoundSpeedProfile::Kind::Table);
  REQUIRE(cfg.env.ssp.table.size() == 3);
  CHECK(cfg.env.ssp.table[1].first == 50.0);
  CHECK(cfg.env.ssp.table[1].second == 1510.0);
  REQUIRE(cfg.env.density.kind == DensityProfile::Kind::Table);
  REQUIRE(cfg.env.density.table.size() == 2);
  CHECK(cfg.env.density.table[1].second == 1.2);
}

TEST_CASE("parse errors carry 1-based line numbers") {
  {
    // Unknown key on line 2.
    const std::string text = "frequency = 20\nbogus_key = 1\n";
    try {
      parse_config(text);
      FAIL("expected ConfigError");
    } catch (const ConfigError& err) {
      CHECK(err.line() == 2);
    }
  }
  {
    // Malformed number.
    const std::string text = with_line(kMinimal, "order", "order = sixteen");
    CHECK_THROWS_AS(parse_config(text), const ConfigError&);
  }
  {
    // Trailing junk after a number is rejected, not silently dropped.
    const std::string text = with_line(kMinimal, "delta_r", "delta_r = 5 meters");
    CHECK_THROWS_AS(parse_config(text), const ConfigError&);
  }
  {
    // Duplicate key.
    const std::string text = std::string(kMinimal) + "order = 20\n";
    CHECK_THROWS_AS(parse_config(text), const ConfigError&);
  }
  {
    // Missing required key.
    const std::string text = with_line(kMinimal, "r_max", "");
    CHECK_THROWS_AS(parse_config(text), const ConfigError&);
  }
  {
    // Unknown engine noun.
    const std::string text = with_line(kMinimal, "engines", "engines = csm, exact");
    CHECK_THROWS_AS(parse_config(text), const ConfigError&);
  }
  {
    // Duplicate engine.
    const std::string text = with_line(kMinimal, "engines", "engines = csm, csm");
    CHECK_THROWS_AS(parse_config(text), const ConfigError&);
  }
  {
    // Table section without a table profile.
    const std::string text = std::string(kMinimal) + "[density]\n0 1.0\n100 1.2\n";
    CHECK_THROWS_AS(parse_config(text), const ConfigError&);
  }
  {
    // Table profile without its section.
    const std::string text = with_line(kMinimal, "ssp", "ssp = table");
    CHECK_THROWS_AS(parse_config(text), const ConfigError&);
  }
  {
    // Bad starter spec.
    const std::string text = with_line(kMinimal, "starter", "starter = plane_wave");
    CHECK_THROWS_AS(parse_config(text), const ConfigError&);
  }
  {
    // Bad mode.
    const std::string text = std::string(kMinimal) + "mode = sideways\n";
    CHECK_THROWS_AS(parse_config(text), const ConfigError&);
  }
}

TEST_CASE("comments and spacing are tolerated") {
  std::string text = "# header comment\n\n";
  text += "frequency = 20   # trailing comment\n";
  text += "depth=100\n";
  text += "  source_depth   =   36\n";
  text += "receiver_depth = 36\nssp = isovelocity 1500\norder = 16\n";
  text += "pade_terms = 4\ndelta_r = 5\nr_max = 1000\nstarter = modal\nengines = csm\n";
  const RunConfig cfg = parse_config(text);
  CHECK(cfg.env.depth == 100.0);
  CHECK(cfg.env.source_depth == 36.0);
}

TEST_CASE("validation catches out-of-range numerics") {
  {
    RunConfig cfg = parse_config(kMinimal);
    cfg.order = 3;
    CHECK_THROWS_AS(cfg.validate(), const DomainError&);
  }
  {
    RunConfig cfg = parse_config(kMinimal);
    cfg.pade_terms = 13;
    CHECK_THROWS_AS(cfg.validate(), const DomainError&);
  }
  {
    RunConfig cfg = parse_config(kMinimal);
    cfg.r_max = 1.0;  // < delta_r
    CHECK_THROWS_AS(cfg.validate(), const DomainError&);
  }
  {
    RunConfig cfg = parse_config(kMinimal);
    cfg.engines.clear();
    CHECK_THROWS_AS(cfg.validate(), const DomainError&);
  }
  {
    RunConfig cfg = parse_config(kMinimal);
    cfg.slice_depths = {150.0};
    CHECK_THROWS_AS(cfg.validate(), const DomainError&);
  }
}

TEST_CASE("presets: names, lookup, and pinned scenario parameters") {
  const std::vector<std::string> names = preset_names();
  REQUIRE(names.size() == 3);
  CHECK(names[0] == "example1");
  CHECK(names[1] == "example2");
  CHECK(names[2] == "example3");
  CHECK(is_preset("example2"));
  CHECK(!is_preset("example9"));
  CHECK_THROWS_AS(preset_text("example9"), const ConfigError&);

  const RunConfig ex1 = load_config("example1");
  CHECK(ex1.name == "example1");
  CHECK(ex1.env.freq == 20.0);
  CHECK(ex1.env.depth == 100.0);
  CHECK(ex1.env.source_depth == 36.0);
  CHECK(ex1.env.receiver_depth == 36.0);
  CHECK(ex1.env.ssp.kind == SoundSpeedProfile::Kind::Isovelocity);
  CHECK(ex1.env.ssp.speed == 1500.0);
  CHECK(ex1.order == 25);
  CHECK(ex1.pade_terms == 8);
  CHECK(ex1.delta_r == 5.0);
  CHECK(ex1.r_max == 3000.0);
  CHECK(ex1.starter.kind == StarterSpec::Kind::Modal);
  CHECK(ex1.has_engine(Engine::Csm));
  CHECK(ex1.has_engine(Engine::Fdm));
  CHECK(ex1.has_engine(Engine::Analytic));
  CHECK_NOTHROW(ex1.validate());

  const RunConfig ex2 = load_config("example2");
  CHECK(ex2.env.freq == 50.0);
  CHECK(ex2.env.depth == 5000.0);
  CHECK(ex2.env.source_depth == 1000.0);
  CHECK(ex2.env.ssp.kind == SoundSpeedProfile::Kind::Munk);
  CHECK(ex2.order == 600);
  CHECK(ex2.pade_terms == 4);
  CHECK(ex2.delta_r == 20.0);
  CHECK(ex2.r_max == 30000.0);
  CHECK(ex2.starter.kind == StarterSpec::Kind::Gaussian);
  CHECK(ex2.starter.width_scale == 3.0);
  CHECK(!ex2.has_engine(Engine::Analytic));
  CHECK_NOTHROW(ex2.validate());

  const RunConfig ex3 = load_config("example3");
  CHECK(ex3.env.freq == 30.0);
  CHECK(ex3.env.depth == 400.0);
  CHECK(ex3.env.source_depth == 40.0);
  REQUIRE(ex3.env.ssp.kind == SoundSpeedProfile::Kind::Table);
  REQUIRE(ex3.env.ssp.table.size() == 8);
  CHECK(ex3.env.ssp.table.front().second == 1560.0);
  CHECK(ex3.env.ssp.table[4].first == 250.0);
  CHECK(ex3.env.ssp.table[4].second == 1520.0);
  CHECK(ex3.env.ssp.table.back().first == 400.0);
  CHECK(ex3.env.ssp.table.back().second == 1500.0);
  CHECK(ex3.order == 100);
  CHECK(ex3.pade_terms == 8);
  CHECK(ex3.delta_r == 10.0);
  CHECK(ex3.r_max == 10000.0);
  CHECK(ex3.starter.kind == StarterSpec::Kind::Gaussian);
  CHECK(ex3.starter.width_scale == 2.5);
  CHECK_NOTHROW(ex3.validate());
}

TEST_CASE("load_config prefers files and rejects unresolvable sources") {
  const std::string path = "config_test_tmp.cfg";
  {
    std::ofstream out(path);
    out << kMinimal;
  }
  const RunConfig cfg = load_config(path);
  CHECK(cfg.env.freq == 20.0);
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_config("no_such_file.cfg"), const ConfigError&);

  // A file shadowing a preset name wins over the preset.
  {
    std::ofstream out("example1");
    out << with_line(kMinimal, "frequency", "frequency = 77");
  }
  const RunConfig shadowed = load_config("example1");
  CHECK(shadowed.env.freq == 77.0);
  std::remove("example1");
  const RunConfig preset = load_config("example1");
  CHECK(preset.env.freq == 20.0);
}
