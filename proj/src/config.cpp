#include "heavenlift/config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "heavenlift/errors.hpp"

namespace heavenlift {
namespace {

using njson = nlohmann::json;

std::string type_name(const njson& j) {
  if (j.is_object()) return "object";
  if (j.is_array()) return "array";
  if (j.is_string()) return "string";
  if (j.is_boolean()) return "boolean";
  if (j.is_number()) return "number";
  if (j.is_null()) return "null";
  return "value";
}

// Accumulates every violation before anything throws, so one parse reports
// the whole damage list at once.
struct Collector {
  std::vector<std::string> issues;

  void add(const std::string& path, const std::string& msg) {
    issues.push_back(path + ": " + msg);
  }

  // Flags typos instead of silently ignoring unknown keys.
  void check_keys(const njson& obj, const std::string& path,
                  const std::set<std::string>& allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      if (!allowed.count(it.key())) add(path + "." + it.key(), "unknown field");
    }
  }
};

std::optional<double> read_number(Collector& c, const njson& j,
                                  const std::string& path) {
  if (!j.is_number()) {
    c.add(path, "expected a number, got " + type_name(j));
    return std::nullopt;
  }
  return j.get<double>();
}

// Complex values are written as [re, im]; a bare number means a real value.
std::optional<cplx> read_complex(Collector& c, const njson& j,
                                 const std::string& path) {
  if (j.is_number()) return cplx(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return cplx(j[0].get<double>(), j[1].get<double>());
  c.add(path, "expected a complex value as [re, im]");
  return std::nullopt;
}

std::optional<std::string> read_string(Collector& c, const njson& j,
                                       const std::string& path) {
  if (!j.is_string()) {
    c.add(path, "expected a string, got " + type_name(j));
    return std::nullopt;
  }
  return j.get<std::string>();
}

std::optional<bool> read_bool(Collector& c, const njson& j,
                              const std::string& path) {
  if (!j.is_boolean()) {
    c.add(path, "expected a boolean, got " + type_name(j));
    return std::nullopt;
  }
  return j.get<bool>();
}

std::vector<cplx> read_complex_list(Collector& c, const njson& j,
                                    const std::string& path) {
  std::vector<cplx> out;
  if (!j.is_array()) {
    c.add(path, "expected an array of coefficients");
    return out;
  }
  for (size_t i = 0; i < j.size(); ++i) {
    auto v = read_complex(c, j[i], path + "[" + std::to_string(i) + "]");
    out.push_back(v.value_or(cplx{}));
  }
  return out;
}

std::vector<double> read_real_list(Collector& c, const njson& j,
                                   const std::string& path) {
  std::vector<double> out;
  if (!j.is_array()) {
    c.add(path, "expected an array of real coefficients");
    return out;
  }
  for (size_t i = 0; i < j.size(); ++i) {
    auto v = read_number(c, j[i], path + "[" + std::to_string(i) + "]");
    out.push_back(v.value_or(0.0));
  }
  return out;
}

double read_positive(Collector& c, const njson& j, const std::string& path,
                     double fallback) {
  auto v = read_number(c, j, path);
  if (!v) return fallback;
  if (*v <= 0.0) {
    c.add(path, "must be positive");
    return fallback;
  }
  return *v;
}

const std::map<std::string, EquationId>& equation_by_name() {
  static const std::map<std::string, EquationId> table = [] {
    std::map<std::string, EquationId> t;
    for (EquationId eq : all_equations()) t[equation_name(eq)] = eq;
    return t;
  }();
  return table;
}

std::optional<EquationId> read_equation(Collector& c, const njson& j,
                                        const std::string& path) {
  auto name = read_string(c, j, path);
  if (!name) return std::nullopt;
  auto it = equation_by_name().find(*name);
  if (it == equation_by_name().end()) {
    c.add(path, "unknown equation '" + *name + "'");
    return std::nullopt;
  }
  return it->second;
}

ChartId family_chart(const RunConfig& cfg) {
  switch (cfg.kind) {
    case FamilyKind::helmholtz_lift: return ChartId::LEGENDRE_CMA;
    case FamilyKind::wave_lift: return ChartId::LEGENDRE_HCMA;
    case FamilyKind::bf_lift: return ChartId::ROT_LEGENDRE;
    case FamilyKind::seed:
      switch (cfg.seed_kind) {
        case SeedKind::helmholtz:
        case SeedKind::laplace: return ChartId::LEGENDRE_CMA;
        case SeedKind::wave: return ChartId::LEGENDRE_HCMA;
        case SeedKind::bf: return ChartId::ROT_LEGENDRE;
      }
  }
  return ChartId::ORIGINAL;
}

void parse_family(Collector& c, const njson& fam, RunConfig& cfg) {
  if (!fam.is_object()) {
    c.add("family", "expected an object");
    return;
  }
  if (!fam.contains("kind")) {
    c.add("family.kind", "required field is missing");
    return;
  }
  auto kind = read_string(c, fam["kind"], "family.kind");
  if (!kind) return;

  if (*kind == "helmholtz_lift") {
    cfg.kind = FamilyKind::helmholtz_lift;
    c.check_keys(fam, "family", {"kind", "modes", "exponent_perturbation"});
    if (!fam.contains("modes") || !fam["modes"].is_array() ||
        fam["modes"].empty()) {
      c.add("family.modes", "expected a nonempty array of modes");
      return;
    }
    for (size_t i = 0; i < fam["modes"].size(); ++i) {
      const std::string mp = "family.modes[" + std::to_string(i) + "]";
      const njson& m = fam["modes"][i];
      if (!m.is_object()) {
        c.add(mp, "expected an object");
        continue;
      }
      c.check_keys(m, mp, {"alpha", "F", "G"});
      HelmholtzMode mode;
      if (m.contains("alpha")) {
        if (auto a = read_complex(c, m["alpha"], mp + ".alpha")) {
          mode.alpha = *a;
          if (std::abs(*a) < 1.0 - 1e-12)
            c.add(mp + ".alpha",
                  "|alpha| must be at least 1 (the branch exponents split "
                  "only outside the unit disc)");
        }
      } else {
        c.add(mp + ".alpha", "required field is missing");
      }
      if (m.contains("F"))
        mode.F = read_complex(c, m["F"], mp + ".F").value_or(cplx{});
      if (m.contains("G"))
        mode.G = read_complex(c, m["G"], mp + ".G").value_or(cplx{});
      if (mode.F == cplx{} && mode.G == cplx{})
        c.add(mp, "at least one of F, G must be nonzero");
      cfg.helmholtz.modes.push_back(mode);
    }
    if (fam.contains("exponent_perturbation"))
      cfg.helmholtz.exponent_perturbation =
          read_number(c, fam["exponent_perturbation"],
                      "family.exponent_perturbation")
              .value_or(0.0);
    return;
  }

  if (*kind == "wave_lift") {
    cfg.kind = FamilyKind::wave_lift;
    c.check_keys(fam, "family", {"kind", "modes", "realize"});
    if (!fam.contains("modes") || !fam["modes"].is_array() ||
        fam["modes"].empty()) {
      c.add("family.modes", "expected a nonempty array of modes");
      return;
    }
    for (size_t i = 0; i < fam["modes"].size(); ++i) {
      const std::string mp = "family.modes[" + std::to_string(i) + "]";
      const njson& m = fam["modes"][i];
      if (!m.is_object()) {
        c.add(mp, "expected an object");
        continue;
      }
      c.check_keys(m, mp, {"alpha", "beta", "amplitude", "branch"});
      WaveMode mode;
      if (m.contains("alpha"))
        mode.alpha = read_number(c, m["alpha"], mp + ".alpha").value_or(1.0);
      else
        c.add(mp + ".alpha", "required field is missing");
      if (m.contains("beta"))
        mode.beta = read_number(c, m["beta"], mp + ".beta").value_or(1.0);
      else
        c.add(mp + ".beta", "required field is missing");
      if (std::abs(mode.beta) < 1e-12)
        c.add(mp + ".beta", "must be nonzero (the partner system degenerates)");
      if (m.contains("amplitude"))
        mode.amplitude = read_complex(c, m["amplitude"], mp + ".amplitude")
                             .value_or(cplx{1.0, 0.0});
      if (m.contains("branch")) {
        auto b = read_string(c, m["branch"], mp + ".branch");
        if (b && *b == "plus")
          mode.branch = WaveBranch::plus;
        else if (b && *b == "minus")
          mode.branch = WaveBranch::minus;
        else if (b)
          c.add(mp + ".branch", "expected \"plus\" or \"minus\"");
      }
      cfg.wave.modes.push_back(mode);
    }
    if (fam.contains("realize"))
      cfg.wave.realize =
          read_bool(c, fam["realize"], "family.realize").value_or(false);
    return;
  }

  if (*kind == "bf_lift") {
    cfg.kind = FamilyKind::bf_lift;
    c.check_keys(fam, "family",
                 {"kind", "variant", "b", "r", "k", "constrained_alpha", "r0"});
    if (fam.contains("variant")) {
      auto v = read_string(c, fam["variant"], "family.variant");
      if (v && *v == "A")
        cfg.bf.variant = BFVariant::A;
      else if (v && *v == "B")
        cfg.bf.variant = BFVariant::B;
      else if (v && *v == "C")
        cfg.bf.variant = BFVariant::C;
      else if (v)
        c.add("family.variant", "expected \"A\", \"B\" or \"C\"");
    } else {
      c.add("family.variant", "required field is missing");
    }
    if (fam.contains("b"))
      cfg.bf.b = HolomorphicPoly{read_complex_list(c, fam["b"], "family.b")};
    if (fam.contains("r"))
      cfg.bf.r = RealPoly{read_real_list(c, fam["r"], "family.r")};
    if (fam.contains("k"))
      cfg.bf.k = RealPoly{read_real_list(c, fam["k"], "family.k")};
    else if (cfg.bf.variant == BFVariant::C && fam.contains("variant"))
      c.add("family.k",
            "variant C integrates a rate function and requires the k "
            "coefficient block");
    if (fam.contains("constrained_alpha")) {
      cfg.bf.constrained_alpha = read_number(c, fam["constrained_alpha"],
                                             "family.constrained_alpha");
      if (fam.contains("r"))
        c.add("family.r",
              "cannot be combined with constrained_alpha (the constraint "
              "fixes the profile)");
    }
    if (fam.contains("r0"))
      cfg.bf.r0 = read_number(c, fam["r0"], "family.r0").value_or(0.0);
    return;
  }

  if (*kind == "seed") {
    cfg.kind = FamilyKind::seed;
    if (!fam.contains("seed")) {
      c.add("family.seed", "required field is missing");
      return;
    }
    auto s = read_string(c, fam["seed"], "family.seed");
    if (!s) return;
    if (*s == "helmholtz") {
      cfg.seed_kind = SeedKind::helmholtz;
      c.check_keys(fam, "family", {"kind", "seed", "modes"});
      if (!fam.contains("modes") || !fam["modes"].is_array() ||
          fam["modes"].empty()) {
        c.add("family.modes", "expected a nonempty array of modes");
        return;
      }
      for (size_t i = 0; i < fam["modes"].size(); ++i) {
        const std::string mp = "family.modes[" + std::to_string(i) + "]";
        const njson& m = fam["modes"][i];
        if (!m.is_object()) {
          c.add(mp, "expected an object");
          continue;
        }
        c.check_keys(m, mp, {"c", "kappa"});
        HelmholtzSeedMode mode;
        if (m.contains("c"))
          mode.c = read_complex(c, m["c"], mp + ".c").value_or(cplx{});
        if (m.contains("kappa")) {
          mode.kappa =
              read_complex(c, m["kappa"], mp + ".kappa").value_or(cplx{});
          if (std::abs(mode.kappa) < 1e-12)
            c.add(mp + ".kappa", "must be nonzero");
        } else {
          c.add(mp + ".kappa", "required field is missing");
        }
        cfg.helmholtz_seed_modes.push_back(mode);
      }
    } else if (*s == "laplace") {
      cfg.seed_kind = SeedKind::laplace;
      c.check_keys(fam, "family", {"kind", "seed", "modes"});
      if (!fam.contains("modes") || !fam["modes"].is_array() ||
          fam["modes"].empty()) {
        c.add("family.modes", "expected a nonempty array of modes");
        return;
      }
      for (size_t i = 0; i < fam["modes"].size(); ++i) {
        const std::string mp = "family.modes[" + std::to_string(i) + "]";
        const njson& m = fam["modes"][i];
        if (!m.is_object()) {
          c.add(mp, "expected an object");
          continue;
        }
        c.check_keys(m, mp, {"c", "a", "kappa"});
        LaplaceSeedMode mode;
        if (m.contains("c"))
          mode.c = read_complex(c, m["c"], mp + ".c").value_or(cplx{});
        if (m.contains("a"))
          mode.a = read_number(c, m["a"], mp + ".a").value_or(1.0);
        if (m.contains("kappa")) {
          mode.kappa =
              read_complex(c, m["kappa"], mp + ".kappa").value_or(cplx{});
          if (std::abs(mode.kappa) < 1e-12)
            c.add(mp + ".kappa", "must be nonzero");
        } else {
          c.add(mp + ".kappa", "required field is missing");
        }
        cfg.laplace_seed_modes.push_back(mode);
      }
    } else if (*s == "wave") {
      cfg.seed_kind = SeedKind::wave;
      c.check_keys(fam, "family", {"kind", "seed", "modes"});
      if (!fam.contains("modes") || !fam["modes"].is_array() ||
          fam["modes"].empty()) {
        c.add("family.modes", "expected a nonempty array of modes");
        return;
      }
      for (size_t i = 0; i < fam["modes"].size(); ++i) {
        const std::string mp = "family.modes[" + std::to_string(i) + "]";
        const njson& m = fam["modes"][i];
        if (!m.is_object()) {
          c.add(mp, "expected an object");
          continue;
        }
        c.check_keys(m, mp, {"amplitude", "kq", "kt", "kz"});
        WaveSeedMode mode;
        if (m.contains("amplitude"))
          mode.amplitude = read_complex(c, m["amplitude"], mp + ".amplitude")
                               .value_or(cplx{1.0, 0.0});
        if (m.contains("kt"))
          mode.kt = read_number(c, m["kt"], mp + ".kt").value_or(1.0);
        if (m.contains("kz"))
          mode.kz = read_number(c, m["kz"], mp + ".kz").value_or(0.0);
        // kq is pinned to the cone kq^2 = kt^2 + kz^2; an explicit value
        // must sit on it (either sign).
        const double cone = std::hypot(mode.kt, mode.kz);
        mode.kq = cone;
        if (m.contains("kq")) {
          const double kq = read_number(c, m["kq"], mp + ".kq").value_or(cone);
          if (std::abs(kq * kq - cone * cone) > 1e-9)
            c.add(mp + ".kq", "must satisfy kq^2 = kt^2 + kz^2");
          mode.kq = kq;
        }
        cfg.wave_seed_modes.push_back(mode);
      }
    } else if (*s == "bf") {
      cfg.seed_kind = SeedKind::bf;
      c.check_keys(fam, "family", {"kind", "seed", "b"});
      if (fam.contains("b"))
        cfg.bf_seed_b =
            HolomorphicPoly{read_complex_list(c, fam["b"], "family.b")};
    } else {
      c.add("family.seed",
            "expected one of \"helmholtz\", \"laplace\", \"wave\", \"bf\"");
    }
    return;
  }

  c.add("family.kind",
        "expected one of \"helmholtz_lift\", \"wave_lift\", \"bf_lift\", "
        "\"seed\"");
}

void parse_check(Collector& c, const njson& j, size_t index, RunConfig& cfg) {
  const std::string path = "suite[" + std::to_string(index) + "]";
  if (!j.is_object()) {
    c.add(path, "expected an object");
    return;
  }
  if (!j.contains("check")) {
    c.add(path + ".check", "required field is missing");
    return;
  }
  auto kind = read_string(c, j["check"], path + ".check");
  if (!kind) return;

  CheckSpec spec;
  spec.kind = *kind;

  auto tolerance_field = [&](double fallback) {
    spec.tolerance = fallback;
    if (j.contains("tolerance"))
      spec.tolerance =
          read_positive(c, j["tolerance"], path + ".tolerance", fallback);
  };

  if (*kind == "residual") {
    c.check_keys(j, path, {"check", "equations", "tolerance"});
    tolerance_field(1e-9);
    if (!j.contains("equations") || !j["equations"].is_array() ||
        j["equations"].empty()) {
      c.add(path + ".equations",
            "expected a nonempty array of equation names");
    } else {
      for (size_t i = 0; i < j["equations"].size(); ++i) {
        const std::string ep = path + ".equations[" + std::to_string(i) + "]";
        if (auto eq = read_equation(c, j["equations"][i], ep)) {
          spec.equations.push_back(*eq);
          if (equation_arity(*eq) != EquationArity::single)
            c.add(ep,
                  "equation needs more than one field; residual checks "
                  "cover single-field equations only");
          else if (equation_chart(*eq) != family_chart(cfg))
            c.add(ep, std::string("equation lives on chart ") +
                          chart_name(equation_chart(*eq)) +
                          " but the family produces chart " +
                          chart_name(family_chart(cfg)));
        }
      }
    }
  } else if (*kind == "consequence") {
    c.check_keys(j, path, {"check", "premises", "consequence", "tolerance"});
    tolerance_field(1e-9);
    if (!j.contains("premises") || !j["premises"].is_array() ||
        j["premises"].empty()) {
      c.add(path + ".premises", "expected a nonempty array of equation names");
    } else {
      for (size_t i = 0; i < j["premises"].size(); ++i) {
        const std::string ep = path + ".premises[" + std::to_string(i) + "]";
        if (auto eq = read_equation(c, j["premises"][i], ep))
          spec.premises.push_back(*eq);
      }
    }
    if (!j.contains("consequence")) {
      c.add(path + ".consequence", "required field is missing");
    } else if (auto eq =
                   read_equation(c, j["consequence"], path + ".consequence")) {
      spec.consequence = *eq;
    }
  } else if (*kind == "geometry") {
    c.check_keys(j, path,
                 {"check", "det_tolerance", "ricci_tolerance",
                  "nonflat_threshold", "require_nonflat"});
    if (j.contains("det_tolerance"))
      spec.det_tolerance =
          read_positive(c, j["det_tolerance"], path + ".det_tolerance", 1e-8);
    if (j.contains("ricci_tolerance"))
      spec.ricci_tolerance = read_positive(c, j["ricci_tolerance"],
                                           path + ".ricci_tolerance", 1e-6);
    if (j.contains("nonflat_threshold"))
      spec.nonflat_threshold = read_positive(
          c, j["nonflat_threshold"], path + ".nonflat_threshold", 1e-3);
    if (j.contains("require_nonflat"))
      spec.require_nonflat =
          read_bool(c, j["require_nonflat"], path + ".require_nonflat")
              .value_or(false);
  } else if (*kind == "invariance") {
    c.check_keys(j, path, {"check", "expect_full_rank", "min_ratio"});
    if (j.contains("expect_full_rank"))
      spec.expect_full_rank =
          read_bool(c, j["expect_full_rank"], path + ".expect_full_rank")
              .value_or(true);
    if (j.contains("min_ratio"))
      spec.min_ratio =
          read_positive(c, j["min_ratio"], path + ".min_ratio", 1e-6);
  } else if (*kind == "legendre_roundtrip") {
    c.check_keys(j, path, {"check", "tolerance"});
    tolerance_field(1e-8);
  } else if (*kind == "dispersion") {
    c.check_keys(j, path, {"check", "pairs", "tolerance"});
    tolerance_field(1e-12);
    if (j.contains("pairs")) {
      auto p = read_number(c, j["pairs"], path + ".pairs");
      if (p) {
        if (*p < 1.0 || *p != std::floor(*p))
          c.add(path + ".pairs", "expected a positive integer");
        else
          spec.pairs = static_cast<int>(*p);
      }
    }
  } else {
    c.add(path + ".check",
          "expected one of \"residual\", \"consequence\", \"geometry\", "
          "\"invariance\", \"legendre_roundtrip\", \"dispersion\"");
    return;
  }

  // The transform-based checks rebuild the solution in the original chart;
  // that route exists for the elliptic lift (two-variable transform) and the
  // rotation-reduced family (rotational push-forward).
  if (*kind == "geometry" || *kind == "invariance") {
    if (cfg.kind != FamilyKind::helmholtz_lift &&
        cfg.kind != FamilyKind::bf_lift)
      c.add(path,
            "check needs an original-chart potential; supported for "
            "helmholtz_lift and bf_lift families");
  }
  if (*kind == "legendre_roundtrip" && cfg.kind != FamilyKind::helmholtz_lift)
    c.add(path, "round trips are defined for the helmholtz_lift family");

  cfg.suite.push_back(std::move(spec));
}

}  // namespace

std::string family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::helmholtz_lift: return "helmholtz_lift";
    case FamilyKind::wave_lift: return "wave_lift";
    case FamilyKind::bf_lift: return "bf_lift";
    case FamilyKind::seed: return "seed";
  }
  return "?";
}

std::string seed_kind_name(SeedKind kind) {
  switch (kind) {
    case SeedKind::helmholtz: return "helmholtz";
    case SeedKind::laplace: return "laplace";
    case SeedKind::wave: return "wave";
    case SeedKind::bf: return "bf";
  }
  return "?";
}

RunConfig parse_config(const std::string& text) {
  njson root;
  try {
    root = njson::parse(text);
  } catch (const std::exception& e) {
    throw ConfigError({std::string("document: ") + e.what()});
  }

  Collector c;
  RunConfig cfg;

  if (!root.is_object()) throw ConfigError({"document: expected a JSON object"});
  c.check_keys(root, "config",
               {"family", "domain", "samples", "rng_seed", "lambda", "elliptic",
                "transform", "suite"});

  if (!root.contains("family"))
    c.add("family", "required field is missing");
  else
    parse_family(c, root["family"], cfg);

  if (root.contains("domain")) {
    const njson& dom = root["domain"];
    if (!dom.is_object()) {
      c.add("domain", "expected an object");
    } else {
      c.check_keys(dom, "domain", {"box"});
      if (dom.contains("box")) {
        const njson& box = dom["box"];
        if (!box.is_array() || box.size() != 4) {
          c.add("domain.box", "expected 4 [lo, hi] ranges");
        } else {
          for (size_t d = 0; d < 4; ++d) {
            const std::string bp = "domain.box[" + std::to_string(d) + "]";
            const njson& r = box[d];
            if (!r.is_array() || r.size() != 2 || !r[0].is_number() ||
                !r[1].is_number()) {
              c.add(bp, "expected [lo, hi]");
              continue;
            }
            cfg.box[d][0] = r[0].get<double>();
            cfg.box[d][1] = r[1].get<double>();
            if (cfg.box[d][0] > cfg.box[d][1]) c.add(bp, "lo must not exceed hi");
          }
        }
      }
    }
  }

  if (root.contains("samples")) {
    auto s = read_number(c, root["samples"], "samples");
    if (s) {
      if (*s < 1.0 || *s != std::floor(*s))
        c.add("samples", "expected a positive integer");
      else
        cfg.samples = static_cast<int>(*s);
    }
  }

  if (root.contains("rng_seed")) {
    const njson& s = root["rng_seed"];
    if (!s.is_number_integer() ||
        (!s.is_number_unsigned() && s.get<std::int64_t>() < 0))
      c.add("rng_seed", "expected a nonnegative integer");
    else
      cfg.rng_seed = s.get<std::uint64_t>();
  }

  if (root.contains("lambda"))
    cfg.lambda =
        read_complex(c, root["lambda"], "lambda").value_or(cplx{0.0, 1.0});
  if (root.contains("elliptic"))
    cfg.elliptic = read_bool(c, root["elliptic"], "elliptic").value_or(true);

  if (root.contains("transform")) {
    const njson& tr = root["transform"];
    if (!tr.is_object()) {
      c.add("transform", "expected an object");
    } else {
      c.check_keys(tr, "transform", {"source_point", "jitter_radius"});
      if (tr.contains("source_point")) {
        const njson& sp = tr["source_point"];
        if (!sp.is_array() || sp.size() != 4) {
          c.add("transform.source_point", "expected 4 coordinates");
        } else {
          Point4 p{};
          bool ok = true;
          for (size_t d = 0; d < 4; ++d) {
            if (!sp[d].is_number()) {
              c.add("transform.source_point[" + std::to_string(d) + "]",
                    "expected a number");
              ok = false;
            } else {
              p[d] = sp[d].get<double>();
            }
          }
          if (ok) cfg.transform_source = p;
        }
      }
      if (tr.contains("jitter_radius"))
        cfg.jitter_radius = read_positive(c, tr["jitter_radius"],
                                          "transform.jitter_radius", 0.05);
    }
  }

  if (root.contains("suite")) {
    const njson& suite = root["suite"];
    if (!suite.is_array())
      c.add("suite", "expected an array of checks");
    else
      for (size_t i = 0; i < suite.size(); ++i)
        parse_check(c, suite[i], i, cfg);
  }

  // Cross-cutting invariants that need the fully assembled config.
  bool needs_lambda = false, needs_unit = false;
  for (const CheckSpec& spec : cfg.suite) {
    for (EquationId eq : spec.equations) {
      needs_lambda = needs_lambda || equation_uses_lambda(eq);
      needs_unit = needs_unit || equation_requires_unit_lambda(eq);
    }
    for (EquationId eq : spec.premises)
      needs_lambda = needs_lambda || equation_uses_lambda(eq);
  }
  if (needs_lambda && std::abs(cfg.lambda) < 1e-12)
    c.add("lambda", "must be nonzero for the requested equations");
  if (needs_unit && std::abs(std::abs(cfg.lambda) - 1.0) > 1e-9)
    c.add("lambda", "must be unimodular for the self-partner equations");

  if (!c.issues.empty()) throw ConfigError(c.issues);
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError({"file: cannot read '" + path + "'"});
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace heavenlift
