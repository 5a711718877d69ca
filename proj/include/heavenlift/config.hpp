#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "heavenlift/equations.hpp"
#include "heavenlift/rng.hpp"
#include "heavenlift/solutions.hpp"

namespace heavenlift {

// Which constructor a config drives.  `seed` selects one of the
// lower-dimensional building blocks instead of a lifted solution.
enum class FamilyKind { helmholtz_lift, wave_lift, bf_lift, seed };
enum class SeedKind { helmholtz, laplace, wave, bf };

std::string family_kind_name(FamilyKind kind);
std::string seed_kind_name(SeedKind kind);

// One entry of the `suite` array.  `kind` decides which of the optional
// fields are meaningful; parse_config fills the rest with defaults.
struct CheckSpec {
  std::string kind;  // residual | consequence | geometry | invariance |
                     // legendre_roundtrip | dispersion
  std::vector<EquationId> equations;  // residual
  std::vector<EquationId> premises;   // consequence
  EquationId consequence = EquationId::CMA_ELLIPTIC;
  double tolerance = 1e-9;

  double det_tolerance = 1e-8;      // geometry
  double ricci_tolerance = 1e-6;    // geometry
  double nonflat_threshold = 1e-3;  // geometry
  bool require_nonflat = false;     // geometry

  bool expect_full_rank = true;  // invariance
  double min_ratio = 1e-6;       // invariance

  int pairs = 100;  // dispersion
};

struct RunConfig {
  FamilyKind kind = FamilyKind::helmholtz_lift;
  SeedKind seed_kind = SeedKind::helmholtz;

  HelmholtzLiftParams helmholtz;
  WaveLiftParams wave;
  BFLiftParams bf;

  // Seed-family payloads (only the one matching seed_kind is used).
  std::vector<HelmholtzSeedMode> helmholtz_seed_modes;
  std::vector<LaplaceSeedMode> laplace_seed_modes;
  std::vector<WaveSeedMode> wave_seed_modes;
  HolomorphicPoly bf_seed_b;

  Point4Box box{{{-0.3, 0.3}, {-0.3, 0.3}, {-0.3, 0.3}, {-0.3, 0.3}}};
  int samples = 100;
  std::uint64_t rng_seed = 1;

  cplx lambda{0.0, 1.0};
  bool elliptic = true;

  // Anchor for the transform-based checks (geometry, invariance,
  // legendre_roundtrip).  Defaults to the centre of the domain box.
  std::optional<Point4> transform_source;
  double jitter_radius = 0.05;

  std::vector<CheckSpec> suite;
};

// Parses the JSON text of a config file.  Collects every violation (with its
// path inside the document) and throws a single ConfigError listing them all,
// so a bad file is diagnosed in one round.
RunConfig parse_config(const std::string& text);

// Reads `path` and delegates to parse_config.  Missing or unreadable files
// are reported as a ConfigError too.
RunConfig load_config_file(const std::string& path);

}  // namespace heavenlift
