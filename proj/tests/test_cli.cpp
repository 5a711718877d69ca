#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

#include "heavenlift/config.hpp"
#include "heavenlift/errors.hpp"
#include "heavenlift/report.hpp"
#include "heavenlift/runner.hpp"

using namespace heavenlift;
namespace fs = std::filesystem;

namespace {

const char* kHelmPass = R"({
  "family": {
    "kind": "helmholtz_lift",
    "modes": [
      {"alpha": [1.25, 0.0], "F": [0.8, 0.0], "G": [0.15, 0.0]},
      {"alpha": [1.0, 0.0], "F": [0.25, 0.1], "G": [-0.15, 0.05]}
    ]
  },
  "domain": {"box": [[-0.3, 0.3], [-0.3, 0.3], [-0.3, 0.3], [-0.3, 0.3]]},
  "samples": 60,
  "rng_seed": 7,
  "suite": [
    {"check": "residual",
     "equations": ["w_lin_1", "w_lin_2", "w_lin_3", "w_lin_4",
                   "w_lin_1c", "w_lin_2c", "w_lin_3c", "w_lin_4c"],
     "tolerance": 1e-10},
    {"check": "residual", "equations": ["cma_legendre", "veq_unit"],
     "tolerance": 1e-9},
    {"check": "consequence",
     "premises": ["w_lin_1", "w_lin_2", "w_lin_3", "w_lin_4"],
     "consequence": "cma_legendre", "tolerance": 1e-9}
  ]
})";

// generic quadratic radial profile: the rotational constraint forces a
// linear one, so this family must fail the constraint equations
const char* kBfGenericFail = R"({
  "family": {
    "kind": "bf_lift",
    "variant": "A",
    "b": [[0.25, 0.1], [0.2, -0.1]],
    "r": [0.15, 0.4, 0.8]
  },
  "domain": {"box": [[0.8, 1.5], [-0.35, 0.35], [0.45, 0.95], [-0.25, 0.25]]},
  "samples": 40,
  "rng_seed": 11,
  "lambda": [0.8253356149096783, 0.5646424733950354],
  "suite": [
    {"check": "residual",
     "equations": ["rot_constraint_1", "rot_constraint_2"],
     "tolerance": 1e-9}
  ]
})";

const char* kBfGeometry = R"({
  "family": {"kind": "bf_lift", "variant": "A",
             "b": [[0.0, 0.0], [1.0, 0.0]], "r": [0.3, -0.2, 0.1]},
  "domain": {"box": [[0.8, 1.5], [-0.35, 0.35], [0.45, 0.95], [-0.25, 0.25]]},
  "samples": 40,
  "rng_seed": 5,
  "transform": {"source_point": [1.1, 0.0, 0.7, 0.0], "jitter_radius": 0.04},
  "suite": [
    {"check": "geometry", "det_tolerance": 1e-6, "require_nonflat": true},
    {"check": "invariance", "expect_full_rank": true, "min_ratio": 1e-6}
  ]
})";

std::string strip_timestamp(std::string text) {
  const auto pos = text.find("\"generated_at\"");
  if (pos == std::string::npos) return text;
  auto start = text.rfind('\n', pos);
  if (start == std::string::npos) start = 0;
  const auto end = text.find('\n', pos);
  text.erase(start, end - start);
  return text;
}

fs::path temp_dir() {
  static const fs::path dir = [] {
    const fs::path d = fs::temp_directory_path() /
                       ("heavenlift_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write_text(const std::string& name, const std::string& text) {
  const fs::path p = temp_dir() / name;
  std::ofstream out(p, std::ios::binary);
  out << text;
  return p;
}

std::string read_text(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(HEAVENLIFT_BIN) + " " + args + " >/dev/null 2>/dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

bool any_contains(const std::vector<std::string>& issues,
                  const std::string& needle) {
  return std::any_of(issues.begin(), issues.end(), [&](const std::string& s) {
    return s.find(needle) != std::string::npos;
  });
}

}  // namespace

TEST_CASE("minimal config parses with defaults") {
  const RunConfig cfg = parse_config(
      R"({"family": {"kind": "helmholtz_lift",
                     "modes": [{"alpha": [1.0, 0.0], "F": [1.0, 0.0]}]}})");
  CHECK(cfg.kind == FamilyKind::helmholtz_lift);
  CHECK(cfg.helmholtz.modes.size() == 1);
  CHECK(cfg.helmholtz.modes[0].alpha == cplx(1.0, 0.0));
  CHECK(cfg.samples == 100);
  CHECK(cfg.rng_seed == 1);
  CHECK(cfg.box[0][0] == -0.3);
  CHECK(cfg.box[3][1] == 0.3);
  CHECK(cfg.suite.empty());
  CHECK(cfg.lambda == cplx(0.0, 1.0));
}

TEST_CASE("every violation is reported with its path") {
  const char* bad = R"({
    "family": {"kind": "helmholtz_lift",
               "modes": [{"alpha": [0.5, 0.0], "F": [1.0, 0.0]}]},
    "samples": 0,
    "suite": [{"check": "residual", "equations": ["w_lin_1", "nope"],
               "tolerance": -1}]
  })";
  try {
    parse_config(bad);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.issues.size() == 4);
    CHECK(any_contains(e.issues, "family.modes[0].alpha"));
    CHECK(any_contains(e.issues, "|alpha| must be at least 1"));
    CHECK(any_contains(e.issues, "samples: expected a positive integer"));
    CHECK(any_contains(e.issues, "suite[0].tolerance: must be positive"));
    CHECK(any_contains(e.issues, "unknown equation 'nope'"));
    // the what() string carries the whole list
    CHECK(std::string(e.what()).find("invalid configuration") !=
          std::string::npos);
  }
}

TEST_CASE("family and suite cross checks") {
  SUBCASE("variant C needs the rate block") {
    try {
      parse_config(
          R"({"family": {"kind": "bf_lift", "variant": "C",
                         "b": [[0.0, 0.0], [1.0, 0.0]]}})");
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(any_contains(e.issues, "family.k"));
      CHECK(any_contains(e.issues, "rate function"));
    }
  }
  SUBCASE("explicit r conflicts with the constrained profile") {
    CHECK_THROWS_AS(
        parse_config(
            R"({"family": {"kind": "bf_lift", "variant": "A",
                           "b": [[1.0, 0.0]], "r": [0.1],
                           "constrained_alpha": 0.5}})"),
        ConfigError);
  }
  SUBCASE("equation chart must match the family chart") {
    try {
      parse_config(
          R"({"family": {"kind": "helmholtz_lift",
                         "modes": [{"alpha": [1.0, 0.0], "F": [1.0, 0.0]}]},
              "suite": [{"check": "residual", "equations": ["cma_elliptic"]}]})");
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(any_contains(e.issues, "lives on chart original"));
    }
  }
  SUBCASE("pair equations are rejected in residual checks") {
    CHECK_THROWS_AS(
        parse_config(
            R"({"family": {"kind": "bf_lift", "variant": "A", "b": [[1.0, 0.0]]},
                "suite": [{"check": "residual", "equations": ["lie_y"]}]})"),
        ConfigError);
  }
  SUBCASE("geometry checks need a transformable family") {
    try {
      parse_config(
          R"({"family": {"kind": "wave_lift",
                         "modes": [{"alpha": 1.0, "beta": 1.0}]},
              "suite": [{"check": "geometry"}]})");
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(any_contains(e.issues, "helmholtz_lift and bf_lift"));
    }
  }
  SUBCASE("unknown keys are flagged") {
    try {
      parse_config(
          R"({"family": {"kind": "helmholtz_lift",
                         "modes": [{"alpha": [1.0, 0.0], "F": [1.0, 0.0]}]},
              "smaples": 10})");
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(any_contains(e.issues, "config.smaples: unknown field"));
    }
  }
}

TEST_CASE("reports are byte-identical for a fixed seed") {
  const RunConfig cfg = parse_config(kHelmPass);
  const RunOutcome a = run_verify(cfg);
  const RunOutcome b = run_verify(cfg);
  CHECK(a.passed);
  CHECK(b.passed);
  const std::string ra = strip_timestamp(render_report(a.report));
  const std::string rb = strip_timestamp(render_report(b.report));
  CHECK(ra == rb);

  RunConfig other = cfg;
  other.rng_seed = 8;
  const std::string rc = strip_timestamp(render_report(run_verify(other).report));
  CHECK(ra != rc);
}

TEST_CASE("verify verdicts map to the check outcomes") {
  SUBCASE("elliptic battery passes") {
    const RunOutcome out = run_verify(parse_config(kHelmPass));
    CHECK(out.passed);
    CHECK(out.report["verdict"] == "pass");
    CHECK(out.report["checks"].size() == 3);
    for (const auto& check : out.report["checks"])
      CHECK(check["pass"] == true);
  }
  SUBCASE("generic rotational profile fails the constraint") {
    const RunOutcome out = run_verify(parse_config(kBfGenericFail));
    CHECK_FALSE(out.passed);
    CHECK(out.report["verdict"] == "fail");
    const auto& results = out.report["checks"][0]["results"];
    for (const auto& r : results)
      CHECK(r["max_normalized"].get<double>() > 1e-3);
  }
  SUBCASE("empty suite is a config error") {
    CHECK_THROWS_AS(
        run_verify(parse_config(
            R"({"family": {"kind": "helmholtz_lift",
                           "modes": [{"alpha": [1.0, 0.0], "F": [1.0, 0.0]}]}})")),
        ConfigError);
  }
}

TEST_CASE("geometry and invariance checks run through the config path") {
  const RunOutcome out = run_verify(parse_config(kBfGeometry));
  CHECK(out.passed);
  const auto& geo = out.report["checks"][0];
  CHECK(geo["check"] == "geometry");
  CHECK(geo["det_expected"].get<double>() == -1.0);
  CHECK(geo["max_nonflatness"].get<double>() > 1e-3);
  for (const auto& row : geo["points"])
    CHECK(row["signature"] == "ultra_hyperbolic");
  const auto& inv = out.report["checks"][1];
  CHECK(inv["rank"].get<int>() == 6);
  CHECK(inv["singular_value_ratio"].get<double>() > 1e-6);
}

TEST_CASE("sample dump is a well-formed CSV") {
  const RunConfig cfg = parse_config(kBfGeometry);
  const std::string csv = sample_csv(cfg);
  CHECK(csv.find('\r') == std::string::npos);
  const auto lines = split_lines(csv);
  REQUIRE(lines.size() >= 2);
  // no residual check in the suite, so the family's default battery is used
  CHECK(lines[0] ==
        "x0,x1,x2,x3,value_re,value_im,res_hcma_leg_rot,res_bf_combined,"
        "res_bf_real");
  CHECK(static_cast<int>(lines.size()) <= cfg.samples + 1);
  CHECK(lines.size() > 30);  // the box is deep inside the domain
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto fields = [&] {
      std::vector<std::string> f;
      std::istringstream in(lines[i]);
      std::string cell;
      while (std::getline(in, cell, ',')) f.push_back(cell);
      return f;
    }();
    REQUIRE(fields.size() == 9);
    for (const std::string& cell : fields)
      CHECK_NOTHROW((void)std::stod(cell));
  }
  CHECK(sample_csv(cfg) == csv);  // deterministic
}

TEST_CASE("dispersion command checks the branch product identity") {
  RunConfig cfg;
  cfg.rng_seed = 3;
  std::string csv;
  const RunOutcome out = run_dispersion_command(cfg, &csv);
  CHECK(out.passed);
  const auto& check = out.report["checks"][0];
  CHECK(check["pairs"].get<int>() == 100);
  CHECK(check["max_product_error"].get<double>() < 1e-12);
  CHECK(check["rows"].size() == 100);
  const auto lines = split_lines(csv);
  REQUIRE(lines.size() == 101);
  CHECK(lines[0] == "alpha,beta,delta_plus,delta_minus,product_error");
}

TEST_CASE("lift demo narrates both pipelines to a pass") {
  const RunOutcome out = run_lift_demo();
  CHECK(out.passed);
  CHECK(out.report["verdict"] == "pass");
  REQUIRE(out.report["pipelines"].size() == 2);
  const auto& ell = out.report["pipelines"][0];
  const auto& hyp = out.report["pipelines"][1];
  CHECK(ell["pipeline"] == "elliptic");
  CHECK(hyp["pipeline"] == "hyperbolic");
  auto chain_has = [](const nlohmann::ordered_json& p, const char* name) {
    for (const auto& e : p["equations_checked"])
      if (e == name) return true;
    return false;
  };
  CHECK(chain_has(ell, "helmholtz"));
  CHECK(chain_has(ell, "cma_legendre"));
  CHECK(chain_has(ell, "cma_elliptic"));
  CHECK(chain_has(hyp, "bf_v"));
  CHECK(chain_has(hyp, "hcma_leg_rot"));
  CHECK(chain_has(hyp, "cma_hyperbolic"));
}

TEST_CASE("binary honors the exit code contract") {
  const fs::path pass_cfg = write_text("pass.json", kHelmPass);
  const fs::path fail_cfg = write_text("fail.json", kBfGenericFail);
  const fs::path broken_cfg = write_text("broken.json", "{ not json");

  const fs::path r1 = temp_dir() / "r1.json";
  const fs::path r2 = temp_dir() / "r2.json";
  CHECK(run_cli("verify --config " + pass_cfg.string() + " --out " +
                r1.string()) == 0);
  CHECK(run_cli("verify --config " + pass_cfg.string() + " --out " +
                r2.string() + " --jobs 2") == 0);
  // byte-identical output once the timestamp line is stripped, regardless of
  // the worker count
  CHECK(strip_timestamp(read_text(r1)) == strip_timestamp(read_text(r2)));

  CHECK(run_cli("verify --config " + fail_cfg.string()) == 1);
  CHECK(run_cli("verify --config " + broken_cfg.string()) == 2);
  CHECK(run_cli("verify") == 2);  // missing --config
  CHECK(run_cli("lift-demo") == 0);

  const fs::path csv = temp_dir() / "disp.csv";
  CHECK(run_cli("dispersion --seed 3 --csv " + csv.string()) == 0);
  CHECK(split_lines(read_text(csv)).size() == 101);
}
