#include "heavenlift/runner.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <sstream>

#include "heavenlift/errors.hpp"
#include "heavenlift/geometry.hpp"
#include "heavenlift/legendre.hpp"
#include "heavenlift/report.hpp"
#include "heavenlift/residuals.hpp"

namespace heavenlift {
namespace {

using njson = nlohmann::ordered_json;

njson point_json(const Point4& p) {
  return njson::array({p[0], p[1], p[2], p[3]});
}

njson complex_json(cplx v) { return njson::array({v.real(), v.imag()}); }

std::string family_label(const RunConfig& cfg) {
  std::ostringstream os;
  switch (cfg.kind) {
    case FamilyKind::helmholtz_lift:
      os << "elliptic lift, " << cfg.helmholtz.modes.size() << " mode(s)";
      if (cfg.helmholtz.exponent_perturbation != 0.0) os << ", detuned";
      break;
    case FamilyKind::wave_lift:
      os << "hyperbolic lift, " << cfg.wave.modes.size() << " mode(s)";
      break;
    case FamilyKind::bf_lift:
      os << "rotation-reduced lift, variant "
         << (cfg.bf.variant == BFVariant::A
                 ? "A"
                 : cfg.bf.variant == BFVariant::B ? "B" : "C");
      if (cfg.bf.constrained_alpha) os << ", constrained profile";
      break;
    case FamilyKind::seed:
      os << seed_kind_name(cfg.seed_kind) << " seed";
      break;
  }
  return os.str();
}

Point4 anchor_point(const RunConfig& cfg) {
  if (cfg.transform_source) return *cfg.transform_source;
  Point4 p{};
  for (size_t d = 0; d < 4; ++d) p[d] = 0.5 * (cfg.box[d][0] + cfg.box[d][1]);
  return p;
}

// The family rebuilt in the original chart, plus the image of the anchor
// point under the duality map (z1 = -v_p for the two-variable transform,
// z1 = e^{psi_q} for the rotational push).  Original-chart real coordinates
// carry the factor-2 convention z = (x + iy)/2.
struct TransformedFamily {
  FieldEvaluator field;
  Point4 anchor{};
  Point4 target{};
  double det_expected = 1.0;
};

TransformedFamily transformed_family(const RunConfig& cfg) {
  const Point4 anchor = anchor_point(cfg);
  if (cfg.kind == FamilyKind::helmholtz_lift) {
    FieldEvaluator v = helmholtz_lift(cfg.helmholtz);
    const cplx vp = slot_derivative(v(anchor, 1), v.chart, 0).value();
    const cplx z1 = -vp;
    const Point4 target{2.0 * z1.real(), 2.0 * z1.imag(), 2.0 * anchor[2],
                        2.0 * anchor[3]};
    return {invert_two_var_field(std::move(v), {}, {anchor[0], anchor[1]}),
            anchor, target, 1.0};
  }
  if (cfg.kind == FamilyKind::bf_lift) {
    FieldEvaluator psi = bf_lift(cfg.bf);
    const cplx zeta1 = slot_derivative(psi(anchor, 1), psi.chart, 0).value();
    const cplx z1 = std::exp(zeta1);
    const Point4 target{2.0 * z1.real(), 2.0 * z1.imag(), 2.0 * anchor[2],
                        2.0 * anchor[3]};
    return {push_forward_rot_field(std::move(psi), {}, {anchor[0], anchor[1]}),
            anchor, target, -1.0};
  }
  throw Error(
      "transform-based checks need the elliptic or the rotation-reduced lift");
}

std::vector<Point4> sample_domain(const RunConfig& cfg,
                                  const FieldEvaluator& field) {
  return sample_box(CounterRng{cfg.rng_seed}, cfg.box, cfg.samples,
                    field_domain(field, 2));
}

// Deterministic cloud around the transform target; the salt decouples the
// streams of different checks.
std::vector<Point4> jitter_points(const RunConfig& cfg,
                                  const TransformedFamily& tf, int count,
                                  std::uint64_t salt, int order) {
  Point4Box box;
  for (size_t d = 0; d < 4; ++d) {
    box[d][0] = tf.target[d] - cfg.jitter_radius;
    box[d][1] = tf.target[d] + cfg.jitter_radius;
  }
  return sample_box(CounterRng{cfg.rng_seed ^ salt}, box, count,
                    field_domain(tf.field, order));
}

njson sweep_json(const SweepResult& s, double tol, bool& pass) {
  njson r;
  r["equation"] = equation_name(s.equation);
  r["points"] = s.points;
  r["failures"] = s.failures;
  r["max_normalized"] = s.max_normalized;
  r["mean_normalized"] = s.mean_normalized;
  r["worst_point"] = point_json(s.worst_point);
  pass = s.points > 0 && s.failures == 0 && s.max_normalized <= tol;
  r["pass"] = pass;
  return r;
}

njson run_residual_check(const RunConfig& cfg, const CheckSpec& spec,
                         const FieldEvaluator& field,
                         std::span<const Point4> pts, bool& ok) {
  njson entry;
  entry["check"] = "residual";
  entry["tolerance"] = spec.tolerance;
  const ResidualOptions opts{cfg.lambda, cfg.elliptic};
  njson results = njson::array();
  bool all = !pts.empty();
  for (EquationId eq : spec.equations) {
    bool pass = false;
    results.push_back(sweep_json(sweep(eq, field, pts, opts), spec.tolerance, pass));
    all = all && pass;
  }
  entry["results"] = std::move(results);
  entry["pass"] = all;
  ok = all;
  return entry;
}

njson run_consequence_check(const RunConfig& cfg, const CheckSpec& spec,
                            const FieldEvaluator& field,
                            std::span<const Point4> pts, bool& ok) {
  njson entry;
  entry["check"] = "consequence";
  njson prem = njson::array();
  for (EquationId eq : spec.premises) prem.push_back(equation_name(eq));
  entry["premises"] = std::move(prem);
  entry["consequence"] = equation_name(spec.consequence);
  entry["tolerance"] = spec.tolerance;
  entry["points"] = static_cast<int>(pts.size());
  const ResidualOptions opts{cfg.lambda, cfg.elliptic};
  const ConsequenceReport rep = verify_consequence(
      field, spec.premises, spec.consequence, pts, spec.tolerance, opts);
  entry["max_premise"] = rep.max_premise;
  entry["max_consequence"] = rep.max_consequence;
  entry["premises_ok"] = rep.premises_ok;
  entry["consequence_ok"] = rep.consequence_ok;
  ok = !pts.empty() && rep.premises_ok && rep.consequence_ok;
  entry["pass"] = ok;
  return entry;
}

njson run_geometry_check(const RunConfig& cfg, const CheckSpec& spec,
                         const TransformedFamily& tf, bool& ok) {
  njson entry;
  entry["check"] = "geometry";
  entry["anchor"] = point_json(tf.anchor);
  entry["target"] = point_json(tf.target);
  entry["det_expected"] = tf.det_expected;
  entry["det_tolerance"] = spec.det_tolerance;
  entry["ricci_tolerance"] = spec.ricci_tolerance;
  const char* expected_sig =
      tf.det_expected > 0 ? "euclidean" : "ultra_hyperbolic";
  entry["signature_expected"] = expected_sig;

  const int count = std::min(cfg.samples, 6);
  const auto pts = jitter_points(cfg, tf, count, 0x67656f6dULL, 2);
  njson rows = njson::array();
  bool all = !pts.empty();
  double max_nonflat = 0.0;
  for (const Point4& pt : pts) {
    njson row;
    row["point"] = point_json(pt);
    try {
      const KahlerData kd = kahler_at(tf.field, pt);
      const double det_err = std::abs(kd.det_g - cplx(tf.det_expected, 0.0));
      double ricci_max = 0.0;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          ricci_max = std::max({ricci_max, std::abs(kd.ricci[i][j]),
                                std::abs(kd.ricci_log[i][j])});
      const double gap = ricci_consistency(kd);
      const double nf = nonflatness_certificate(kd);
      max_nonflat = std::max(max_nonflat, nf);
      row["det"] = complex_json(kd.det_g);
      row["det_error"] = det_err;
      row["ricci_max"] = ricci_max;
      row["ricci_route_gap"] = gap;
      row["signature"] = signature_name(kd.signature);
      row["nonflatness"] = nf;
      const bool pass = det_err <= spec.det_tolerance &&
                        ricci_max <= spec.ricci_tolerance &&
                        gap <= spec.ricci_tolerance &&
                        std::string(signature_name(kd.signature)) == expected_sig;
      row["pass"] = pass;
      all = all && pass;
    } catch (const Error& e) {
      row["error"] = e.what();
      row["pass"] = false;
      all = false;
    }
    rows.push_back(std::move(row));
  }
  entry["points"] = std::move(rows);
  entry["max_nonflatness"] = max_nonflat;
  entry["require_nonflat"] = spec.require_nonflat;
  if (spec.require_nonflat) {
    entry["nonflat_threshold"] = spec.nonflat_threshold;
    all = all && max_nonflat >= spec.nonflat_threshold;
  }
  entry["pass"] = all;
  ok = all;
  return entry;
}

njson run_invariance_check(const RunConfig& cfg, const CheckSpec& spec,
                           const TransformedFamily& tf, bool enforce,
                           bool& ok) {
  njson entry;
  entry["check"] = "invariance";
  const CandidateAlgebra algebra = default_algebra();
  njson names = njson::array();
  for (const SymmetryCharacteristic& ch : algebra) names.push_back(ch.name);
  entry["candidates"] = std::move(names);

  const int want = std::max<int>(4 * static_cast<int>(algebra.size()), 24);
  const auto pts = jitter_points(cfg, tf, want, 0x696e7661ULL, 1);
  entry["points"] = static_cast<int>(pts.size());
  if (pts.size() < 2 * algebra.size()) {
    entry["error"] = "not enough valid sample points near the target";
    entry["pass"] = false;
    ok = false;
    return entry;
  }
  const InvarianceResult res = invariance_rank(tf.field, algebra, pts);
  entry["rank"] = res.rank;
  entry["candidate_count"] = static_cast<int>(algebra.size());
  entry["min_singular_value"] = res.min_singular_value;
  entry["max_singular_value"] = res.max_singular_value;
  const double ratio = res.max_singular_value > 0.0
                           ? res.min_singular_value / res.max_singular_value
                           : 0.0;
  entry["singular_value_ratio"] = ratio;
  if (enforce) {
    entry["expect_full_rank"] = spec.expect_full_rank;
    if (spec.expect_full_rank)
      ok = res.rank == static_cast<int>(algebra.size()) &&
           ratio >= spec.min_ratio;
    else
      ok = res.rank < static_cast<int>(algebra.size());
  } else {
    ok = true;
  }
  entry["pass"] = ok;
  return entry;
}

double jet_gap(const Jet& a, const Jet& b) {
  double m = 0.0;
  for (int i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.raw(i) - b.raw(i)));
  return m;
}

njson run_roundtrip_check(const RunConfig& cfg, const CheckSpec& spec,
                          const TransformedFamily& tf, bool& ok) {
  njson entry;
  entry["check"] = "legendre_roundtrip";
  entry["tolerance"] = spec.tolerance;
  entry["anchor"] = point_json(tf.anchor);
  entry["target"] = point_json(tf.target);

  const FieldEvaluator v = helmholtz_lift(cfg.helmholtz);
  // inverse transform lands on the anchor again...
  const TransformResult inv = invert_two_var(
      v, tf.target, 4, {}, {tf.anchor[0], tf.anchor[1]});
  double preimage_err = 0.0;
  for (size_t d = 0; d < 4; ++d)
    preimage_err = std::max(preimage_err,
                            std::abs(inv.preimage[d] - tf.anchor[d]));
  entry["inverse_iterations"] = inv.iterations;
  entry["preimage_error"] = preimage_err;

  // ...and the forward transform of the rebuilt potential reproduces the
  // source jet coefficient by coefficient.
  const TransformResult fwd = forward_two_var(
      tf.field, tf.anchor, 4, {}, {tf.target[0], tf.target[1]});
  const double coeff_err = jet_gap(fwd.jet, v(tf.anchor, 4));
  entry["forward_iterations"] = fwd.iterations;
  entry["max_coefficient_error"] = coeff_err;

  ok = preimage_err <= 1e-8 && coeff_err <= spec.tolerance;
  entry["pass"] = ok;
  return entry;
}

njson run_dispersion_check(const RunConfig& cfg, const CheckSpec& spec,
                           bool include_rows, std::string* csv, bool& ok) {
  njson entry;
  entry["check"] = "dispersion";
  entry["pairs"] = spec.pairs;
  entry["tolerance"] = spec.tolerance;
  const CounterRng rng{cfg.rng_seed};
  njson rows = njson::array();
  std::string table = "alpha,beta,delta_plus,delta_minus,product_error\n";
  double max_err = 0.0;
  for (int i = 0; i < spec.pairs; ++i) {
    const std::uint64_t base = static_cast<std::uint64_t>(i) * 3;
    const double alpha = rng.uniform(base, -2.0, 2.0);
    double beta = rng.uniform(base + 1, 0.2, 2.0);
    if (rng.raw(base + 2) & 1) beta = -beta;
    const double dp = dispersion_delta(alpha, beta, WaveBranch::plus);
    const double dm = dispersion_delta(alpha, beta, WaveBranch::minus);
    // the two branch frequencies multiply to gamma^2 = alpha^2 + beta^2
    const double gamma2 = alpha * alpha + beta * beta;
    const double err = std::abs(dp * dm - gamma2) / std::max(1.0, gamma2);
    max_err = std::max(max_err, err);
    if (include_rows) rows.push_back(njson::array({alpha, beta, dp, dm, err}));
    if (csv) {
      table += format_double(alpha) + "," + format_double(beta) + "," +
               format_double(dp) + "," + format_double(dm) + "," +
               format_double(err) + "\n";
    }
  }
  entry["max_product_error"] = max_err;
  if (include_rows) entry["rows"] = std::move(rows);
  ok = max_err <= spec.tolerance;
  entry["pass"] = ok;
  if (csv) *csv += table;
  return entry;
}

njson report_header(const RunConfig& cfg, const char* command,
                    bool include_family) {
  njson doc;
  doc["tool"] = "heavenlift";
  doc["version"] = kToolVersion;
  doc["command"] = command;
  doc["generated_at"] = timestamp_utc();
  doc["rng_seed"] = cfg.rng_seed;
  if (include_family) {
    njson fam;
    fam["kind"] = family_kind_name(cfg.kind);
    if (cfg.kind == FamilyKind::seed)
      fam["seed"] = seed_kind_name(cfg.seed_kind);
    fam["label"] = family_label(cfg);
    doc["family"] = std::move(fam);
    njson dom;
    njson box = njson::array();
    for (size_t d = 0; d < 4; ++d)
      box.push_back(njson::array({cfg.box[d][0], cfg.box[d][1]}));
    dom["box"] = std::move(box);
    dom["samples"] = cfg.samples;
    doc["domain"] = std::move(dom);
    doc["lambda"] = complex_json(cfg.lambda);
    doc["elliptic"] = cfg.elliptic;
  }
  return doc;
}

// Shared by run_verify and the demo pipelines: executes one suite against a
// family and appends check entries to `checks`.
bool execute_suite(const RunConfig& cfg, njson& checks) {
  const FieldEvaluator field = build_family_field(cfg);
  std::optional<std::vector<Point4>> pts;
  auto points = [&]() -> std::span<const Point4> {
    if (!pts) pts = sample_domain(cfg, field);
    return *pts;
  };
  std::optional<TransformedFamily> tf;
  auto transformed = [&]() -> const TransformedFamily& {
    if (!tf) tf = transformed_family(cfg);
    return *tf;
  };

  bool all = true;
  for (const CheckSpec& spec : cfg.suite) {
    bool ok = false;
    njson entry;
    try {
      if (spec.kind == "residual")
        entry = run_residual_check(cfg, spec, field, points(), ok);
      else if (spec.kind == "consequence")
        entry = run_consequence_check(cfg, spec, field, points(), ok);
      else if (spec.kind == "geometry")
        entry = run_geometry_check(cfg, spec, transformed(), ok);
      else if (spec.kind == "invariance")
        entry = run_invariance_check(cfg, spec, transformed(), true, ok);
      else if (spec.kind == "legendre_roundtrip")
        entry = run_roundtrip_check(cfg, spec, transformed(), ok);
      else if (spec.kind == "dispersion")
        entry = run_dispersion_check(cfg, spec, false, nullptr, ok);
      else
        throw Error("unknown check kind '" + spec.kind + "'");
    } catch (const Error& e) {
      entry = njson{};
      entry["check"] = spec.kind;
      entry["error"] = e.what();
      entry["pass"] = false;
      ok = false;
    }
    all = all && ok;
    checks.push_back(std::move(entry));
  }
  return all;
}

}  // namespace

FieldEvaluator build_family_field(const RunConfig& cfg) {
  switch (cfg.kind) {
    case FamilyKind::helmholtz_lift: return helmholtz_lift(cfg.helmholtz);
    case FamilyKind::wave_lift: return wave_lift(cfg.wave);
    case FamilyKind::bf_lift: return bf_lift(cfg.bf);
    case FamilyKind::seed:
      switch (cfg.seed_kind) {
        case SeedKind::helmholtz:
          return helmholtz_seed(cfg.helmholtz_seed_modes);
        case SeedKind::laplace: return laplace_seed(cfg.laplace_seed_modes);
        case SeedKind::wave: return wave_seed(cfg.wave_seed_modes);
        case SeedKind::bf: return bf_seed(cfg.bf_seed_b);
      }
  }
  throw Error("unknown family kind");
}

std::vector<EquationId> default_equations(const RunConfig& cfg) {
  switch (cfg.kind) {
    case FamilyKind::helmholtz_lift:
      return {EquationId::W_LIN_1,  EquationId::W_LIN_2,
              EquationId::W_LIN_3,  EquationId::W_LIN_4,
              EquationId::W_LIN_1C, EquationId::W_LIN_2C,
              EquationId::W_LIN_3C, EquationId::W_LIN_4C,
              EquationId::CMA_LEGENDRE, EquationId::VEQ_UNIT};
    case FamilyKind::wave_lift:
      return {EquationId::PARTNER_A, EquationId::PARTNER_B,
              EquationId::PARTNER_C, EquationId::HCMA_LEGENDRE};
    case FamilyKind::bf_lift:
      return {EquationId::HCMA_LEG_ROT, EquationId::BF_COMBINED,
              EquationId::BF_REAL};
    case FamilyKind::seed:
      switch (cfg.seed_kind) {
        case SeedKind::helmholtz: return {EquationId::HELMHOLTZ};
        case SeedKind::laplace: return {EquationId::LAPLACE3};
        case SeedKind::wave: return {EquationId::WAVE3};
        case SeedKind::bf: return {EquationId::BF_V};
      }
  }
  return {};
}

RunOutcome run_verify(const RunConfig& cfg) {
  if (cfg.suite.empty())
    throw ConfigError({"suite: verify needs at least one check"});
  njson doc = report_header(cfg, "verify", true);
  njson checks = njson::array();
  const bool all = execute_suite(cfg, checks);
  doc["checks"] = std::move(checks);
  doc["verdict"] = all ? "pass" : "fail";
  return {std::move(doc), all};
}

RunOutcome run_geometry_command(const RunConfig& cfg) {
  RunConfig local = cfg;
  std::vector<CheckSpec> picked;
  for (const CheckSpec& spec : cfg.suite)
    if (spec.kind == "geometry" || spec.kind == "invariance")
      picked.push_back(spec);
  const bool synthesized = picked.empty();
  if (synthesized) {
    CheckSpec geo;
    geo.kind = "geometry";
    picked.push_back(geo);
  }
  local.suite = std::move(picked);

  njson doc = report_header(local, "geometry", true);
  njson checks = njson::array();
  bool all;
  if (synthesized) {
    // report-only invariance data alongside the default geometry check
    const TransformedFamily tf = transformed_family(local);
    bool ok = false;
    njson geo;
    try {
      geo = run_geometry_check(local, local.suite[0], tf, ok);
    } catch (const Error& e) {
      geo = njson{};
      geo["check"] = "geometry";
      geo["error"] = e.what();
      geo["pass"] = false;
      ok = false;
    }
    checks.push_back(std::move(geo));
    all = ok;
    bool inv_ok = false;
    CheckSpec inv;
    inv.kind = "invariance";
    try {
      checks.push_back(run_invariance_check(local, inv, tf, false, inv_ok));
    } catch (const Error& e) {
      njson entry;
      entry["check"] = "invariance";
      entry["error"] = e.what();
      entry["pass"] = false;
      checks.push_back(std::move(entry));
      all = false;
    }
  } else {
    all = execute_suite(local, checks);
  }
  doc["checks"] = std::move(checks);
  doc["verdict"] = all ? "pass" : "fail";
  return {std::move(doc), all};
}

RunOutcome run_dispersion_command(const RunConfig& cfg, std::string* csv) {
  CheckSpec spec;
  spec.kind = "dispersion";
  spec.tolerance = 1e-12;
  spec.pairs = 100;
  for (const CheckSpec& s : cfg.suite)
    if (s.kind == "dispersion") {
      spec = s;
      break;
    }
  njson doc = report_header(cfg, "dispersion", false);
  bool ok = false;
  njson entry = run_dispersion_check(cfg, spec, true, csv, ok);
  njson checks = njson::array();
  checks.push_back(std::move(entry));
  doc["checks"] = std::move(checks);
  doc["verdict"] = ok ? "pass" : "fail";
  return {std::move(doc), ok};
}

namespace {

njson demo_pipeline(const char* name, const std::vector<std::string>& story,
                    const RunConfig& seed_cfg, const RunConfig& lift_cfg,
                    EquationId original_eq, double original_tol, bool& all_ok) {
  njson p;
  p["pipeline"] = name;
  njson lines = njson::array();
  for (const std::string& s : story) lines.push_back(s);
  p["story"] = std::move(lines);

  bool ok = true;
  njson steps = njson::array();

  {
    njson step;
    step["step"] = "seed";
    njson checks = njson::array();
    ok = execute_suite(seed_cfg, checks) && ok;
    step["checks"] = std::move(checks);
    steps.push_back(std::move(step));
  }
  {
    njson step;
    step["step"] = "lift";
    njson checks = njson::array();
    ok = execute_suite(lift_cfg, checks) && ok;
    step["checks"] = std::move(checks);
    steps.push_back(std::move(step));
  }
  {
    // transform back to the original chart and hit the Monge-Ampere
    // equation itself
    njson step;
    step["step"] = "transform";
    try {
      const TransformedFamily tf = transformed_family(lift_cfg);
      const auto pts = jitter_points(lift_cfg, tf, 5, 0x64656d6fULL, 2);
      const ResidualOptions opts{lift_cfg.lambda, lift_cfg.elliptic};
      bool pass = false;
      njson res = sweep_json(sweep(original_eq, tf.field, pts, opts),
                             original_tol, pass);
      step["tolerance"] = original_tol;
      step["result"] = std::move(res);
      step["pass"] = pass;
      ok = ok && pass;
    } catch (const Error& e) {
      step["error"] = e.what();
      step["pass"] = false;
      ok = false;
    }
    steps.push_back(std::move(step));
  }
  p["steps"] = std::move(steps);

  std::vector<std::string> chain;
  auto push = [&chain](const char* name) {
    if (std::find(chain.begin(), chain.end(), name) == chain.end())
      chain.emplace_back(name);
  };
  for (const CheckSpec& s : seed_cfg.suite)
    for (EquationId eq : s.equations) push(equation_name(eq));
  for (const CheckSpec& s : lift_cfg.suite) {
    for (EquationId eq : s.equations) push(equation_name(eq));
    if (s.kind == "consequence") push(equation_name(s.consequence));
  }
  push(equation_name(original_eq));
  njson chain_json = njson::array();
  for (const std::string& name : chain) chain_json.push_back(name);
  p["equations_checked"] = std::move(chain_json);

  p["pass"] = ok;
  all_ok = all_ok && ok;
  return p;
}

}  // namespace

RunOutcome run_lift_demo() {
  njson doc;
  doc["tool"] = "heavenlift";
  doc["version"] = kToolVersion;
  doc["command"] = "lift-demo";
  doc["generated_at"] = timestamp_utc();
  bool all = true;
  njson pipelines = njson::array();

  {
    RunConfig seed_cfg;
    seed_cfg.kind = FamilyKind::seed;
    seed_cfg.seed_kind = SeedKind::helmholtz;
    seed_cfg.helmholtz_seed_modes = {
        {cplx(0.7, 0.2), cplx(0.0, 1.0)},
        {cplx(0.3, -0.1), cplx(0.3, 0.8)},
    };
    seed_cfg.box = {{{-0.4, 0.4}, {-0.4, 0.4}, {-0.4, 0.4}, {-0.4, 0.4}}};
    seed_cfg.samples = 40;
    seed_cfg.rng_seed = 2026;
    CheckSpec seed_res;
    seed_res.kind = "residual";
    seed_res.equations = {EquationId::HELMHOLTZ};
    seed_res.tolerance = 1e-12;
    seed_cfg.suite = {seed_res};

    RunConfig lift_cfg;
    lift_cfg.kind = FamilyKind::helmholtz_lift;
    lift_cfg.helmholtz.modes = {{cplx(1.25, 0.0), cplx(0.8, 0.0),
                                 cplx(0.15, 0.0)}};
    lift_cfg.box = {{{-0.3, 0.3}, {-0.3, 0.3}, {-0.3, 0.3}, {-0.3, 0.3}}};
    lift_cfg.samples = 60;
    lift_cfg.rng_seed = 2026;
    lift_cfg.jitter_radius = 0.05;
    CheckSpec lin;
    lin.kind = "residual";
    lin.equations = {EquationId::W_LIN_1,  EquationId::W_LIN_2,
                     EquationId::W_LIN_3,  EquationId::W_LIN_4,
                     EquationId::W_LIN_1C, EquationId::W_LIN_2C,
                     EquationId::W_LIN_3C, EquationId::W_LIN_4C};
    lin.tolerance = 1e-10;
    CheckSpec dual;
    dual.kind = "residual";
    dual.equations = {EquationId::CMA_LEGENDRE, EquationId::VEQ_UNIT};
    dual.tolerance = 1e-9;
    CheckSpec cons;
    cons.kind = "consequence";
    cons.premises = lin.equations;
    cons.consequence = EquationId::CMA_LEGENDRE;
    cons.tolerance = 1e-9;
    CheckSpec round;
    round.kind = "legendre_roundtrip";
    round.tolerance = 1e-8;
    CheckSpec geo;
    geo.kind = "geometry";
    lift_cfg.suite = {lin, dual, cons, round, geo};

    pipelines.push_back(demo_pipeline(
        "elliptic",
        {"seed: two-dimensional modes with theta_{2 2b} + theta = 0",
         "lift: v = -ln w mixes the split branch exponents of every mode",
         "verify: the eight linear relations for w, then the unit-normalized "
         "duality equation",
         "transform: inverse two-variable duality rebuilds u(z1, z2)",
         "curvature: det g = 1, Ricci = 0, euclidean signature"},
        seed_cfg, lift_cfg, EquationId::CMA_ELLIPTIC, 1e-6, all));
  }

  {
    RunConfig seed_cfg;
    seed_cfg.kind = FamilyKind::seed;
    seed_cfg.seed_kind = SeedKind::bf;
    seed_cfg.bf_seed_b = HolomorphicPoly{{cplx(0.0, 0.0), cplx(1.0, 0.0)}};
    seed_cfg.box = {{{0.8, 1.5}, {-0.3, 0.3}, {0.5, 0.9}, {-0.2, 0.2}}};
    seed_cfg.samples = 40;
    seed_cfg.rng_seed = 2026;
    CheckSpec seed_res;
    seed_res.kind = "residual";
    seed_res.equations = {EquationId::BF_V};
    seed_res.tolerance = 1e-12;
    seed_cfg.suite = {seed_res};

    RunConfig lift_cfg;
    lift_cfg.kind = FamilyKind::bf_lift;
    lift_cfg.bf.variant = BFVariant::A;
    lift_cfg.bf.b = HolomorphicPoly{{cplx(0.0, 0.0), cplx(1.0, 0.0)}};
    lift_cfg.bf.r = RealPoly{{0.3, -0.2, 0.1}};
    lift_cfg.box = {{{0.8, 1.5}, {-0.35, 0.35}, {0.45, 0.95}, {-0.25, 0.25}}};
    lift_cfg.samples = 60;
    lift_cfg.rng_seed = 2026;
    lift_cfg.transform_source = Point4{1.1, 0.0, 0.7, 0.0};
    lift_cfg.jitter_radius = 0.04;
    CheckSpec res;
    res.kind = "residual";
    res.equations = {EquationId::HCMA_LEG_ROT, EquationId::BF_COMBINED,
                     EquationId::BF_REAL};
    res.tolerance = 1e-9;
    CheckSpec geo;
    geo.kind = "geometry";
    geo.det_tolerance = 1e-6;
    geo.require_nonflat = true;
    CheckSpec inv;
    inv.kind = "invariance";
    lift_cfg.suite = {res, geo, inv};

    pipelines.push_back(demo_pipeline(
        "hyperbolic",
        {"seed: three-variable potential with v_{z zb} = e^v (v_xx + v_x^2)",
         "lift: rotation-reduced psi built from b(z) = z with a radial "
         "profile r",
         "verify: the rotation-chart Monge-Ampere form and both collapsed "
         "forms",
         "transform: point-Legendre push-forward with z1 = e^{psi_q}",
         "curvature: det g = -1, Ricci = 0, split signature, curvature "
         "certificate nonzero",
         "symmetry: the candidate algebra has full rank, so none of the six "
         "generators is inherited"},
        seed_cfg, lift_cfg, EquationId::CMA_HYPERBOLIC, 1e-6, all));
  }

  doc["pipelines"] = std::move(pipelines);
  doc["verdict"] = all ? "pass" : "fail";
  return {std::move(doc), all};
}

std::string sample_csv(const RunConfig& cfg) {
  const FieldEvaluator field = build_family_field(cfg);
  const auto pts = sample_domain(cfg, field);
  std::vector<EquationId> eqs;
  for (const CheckSpec& s : cfg.suite)
    if (s.kind == "residual")
      for (EquationId eq : s.equations)
        if (std::find(eqs.begin(), eqs.end(), eq) == eqs.end())
          eqs.push_back(eq);
  if (eqs.empty()) eqs = default_equations(cfg);
  const ResidualOptions opts{cfg.lambda, cfg.elliptic};

  std::string out = "x0,x1,x2,x3,value_re,value_im";
  for (EquationId eq : eqs) {
    out += ',';
    out += csv_escape(std::string("res_") + equation_name(eq));
  }
  out += '\n';
  for (const Point4& pt : pts) {
    for (size_t d = 0; d < 4; ++d) {
      if (d) out += ',';
      out += format_double(pt[d]);
    }
    cplx value{};
    try {
      value = field(pt, 0).value();
    } catch (const Error&) {
      value = cplx(std::nan(""), std::nan(""));
    }
    out += ',' + format_double(value.real()) + ',' +
           format_double(value.imag());
    for (EquationId eq : eqs) {
      double r = std::nan("");
      try {
        r = residual(eq, field, pt, opts).normalized;
      } catch (const Error&) {
      }
      out += ',' + format_double(r);
    }
    out += '\n';
  }
  return out;
}

}  // namespace heavenlift
