// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Tolerances are pinned here on purpose; loosening one is a visible diff.

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "heavenlift/equations.hpp"
#include "heavenlift/errors.hpp"
#include "heavenlift/fields.hpp"
#include "heavenlift/geometry.hpp"
#include "heavenlift/jets.hpp"
#include "heavenlift/legendre.hpp"
#include "heavenlift/residuals.hpp"
#include "heavenlift/rng.hpp"
#include "heavenlift/solutions.hpp"

using namespace heavenlift;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int idx, const std::string& title, bool ok,
            const std::string& detail) {
  std::printf("%s  criterion %d: %s", ok ? "PASS" : "FAIL", idx, title.c_str());
  if (!detail.empty()) std::printf("  [%s]", detail.c_str());
  std::printf("\n");
  if (!ok) ++g_failures;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", v);
  return buf;
}

double jet_gap(const Jet& a, const Jet& b) {
  double m = 0.0;
  for (int i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a.raw(i) - b.raw(i)));
  return m;
}

std::vector<MultiIndex> all_indices(int nvars, int order) {
  std::vector<MultiIndex> out;
  for (int a = 0; a <= order; ++a)
    for (int b = 0; a + b <= order; ++b)
      for (int c = 0; a + b + c <= order; ++c)
        for (int d = 0; a + b + c + d <= order; ++d) {
          MultiIndex m(a, b, c, d);
          bool fits = true;
          for (int v = nvars; v < 4; ++v) fits = fits && m[v] == 0;
          if (fits) out.push_back(m);
        }
  return out;
}

// --------------------------------------------------------------------------
// 1. Jet derivatives against cascaded central finite differences, plus the
//    exact ring and inverse identities.

using ScalarFn = std::function<cplx(const Point4&)>;

cplx fd_single(const ScalarFn& f, Point4 x, int var, double h) {
  Point4 xp = x, xm = x;
  xp[static_cast<size_t>(var)] += h;
  xm[static_cast<size_t>(var)] -= h;
  return (f(xp) - f(xm)) / (2.0 * h);
}

cplx fd_partial(const ScalarFn& f, const Point4& x, const MultiIndex& m,
                double h) {
  auto apply = [&](double step) {
    ScalarFn g = f;
    for (int v = 0; v < 4; ++v)
      for (int k = 0; k < m[v]; ++k)
        g = [g, v, step](const Point4& p) { return fd_single(g, p, v, step); };
    return g(x);
  };
  const cplx r0 = apply(h);
  const cplx r1 = apply(h / 2.0);
  const cplx r2 = apply(h / 4.0);
  const cplx s1 = (4.0 * r1 - r0) / 3.0;
  const cplx s2 = (4.0 * r2 - r1) / 3.0;
  return (16.0 * s2 - s1) / 15.0;
}

double fd_step(int total) {
  switch (total) {
    case 1: return 1e-4;
    case 2: return 1e-3;
    case 3: return 6e-3;
    default: return 2e-2;
  }
}

void criterion_1() {
  struct Probe {
    const char* name;
    int nvars;
    int order;
    std::function<Jet(const std::array<Jet, 4>&)> build;
    ScalarFn plain;
  };
  // smooth compositions whose inner arguments stay well inside every branch
  // domain over the sample box
  const std::vector<Probe> probes = {
      {"exp-poly", 4, 3,
       [](const std::array<Jet, 4>& x) {
         return exp(0.31 * x[0] - 0.22 * x[1] + 0.17 * x[2] + 0.11 * x[3]) *
                    (Jet::constant(1.0, 3, 4) + 0.2 * x[0] * x[1]) +
                sin(0.3 * x[2] + 0.2 * x[3]);
       },
       [](const Point4& p) {
         return std::exp(cplx(0.31 * p[0] - 0.22 * p[1] + 0.17 * p[2] +
                              0.11 * p[3])) *
                    (1.0 + 0.2 * p[0] * p[1]) +
                std::sin(cplx(0.3 * p[2] + 0.2 * p[3]));
       }},
      {"log-sqrt", 4, 3,
       [](const std::array<Jet, 4>& x) {
         return log(Jet::constant(2.4, 3, 4) + 0.3 * x[0] + 0.2 * x[1] -
                    0.25 * x[2] + 0.15 * x[3]) +
                sqrt(Jet::constant(3.1, 3, 4) + 0.4 * x[0] - 0.3 * x[3]);
       },
       [](const Point4& p) {
         return std::log(cplx(2.4 + 0.3 * p[0] + 0.2 * p[1] - 0.25 * p[2] +
                              0.15 * p[3])) +
                std::sqrt(cplx(3.1 + 0.4 * p[0] - 0.3 * p[3]));
       }},
      {"sqrt-exp", 2, 4,
       [](const std::array<Jet, 4>& x) {
         return sqrt(Jet::constant(2.2, 4, 2) + 0.3 * x[0] + 0.25 * x[1]) *
                exp(0.2 * x[0] - 0.3 * x[1]);
       },
       [](const Point4& p) {
         return std::sqrt(cplx(2.2 + 0.3 * p[0] + 0.25 * p[1])) *
                std::exp(cplx(0.2 * p[0] - 0.3 * p[1]));
       }},
      {"log-mixed", 2, 4,
       [](const std::array<Jet, 4>& x) {
         return log(Jet::constant(3.0, 4, 2) + 0.5 * x[0] - 0.4 * x[1] +
                    0.1 * x[0] * x[1]);
       },
       [](const Point4& p) {
         return std::log(
             cplx(3.0 + 0.5 * p[0] - 0.4 * p[1] + 0.1 * p[0] * p[1]));
       }},
  };

  const CounterRng rng{41};
  double max_rel = 0.0;
  int points = 0;
  for (size_t pi = 0; pi < probes.size(); ++pi) {
    const Probe& probe = probes[pi];
    for (int trial = 0; trial < 50; ++trial) {
      Point4 base{};
      for (int d = 0; d < probe.nvars; ++d)
        base[static_cast<size_t>(d)] = rng.uniform(
            static_cast<std::uint64_t>(pi) * 1000 +
                static_cast<std::uint64_t>(trial) * 4 +
                static_cast<std::uint64_t>(d),
            -0.5, 0.5);
      std::array<Jet, 4> xj{Jet::constant(0, probe.order, probe.nvars),
                            Jet::constant(0, probe.order, probe.nvars),
                            Jet::constant(0, probe.order, probe.nvars),
                            Jet::constant(0, probe.order, probe.nvars)};
      for (int d = 0; d < probe.nvars; ++d)
        xj[static_cast<size_t>(d)] = jet_variable(
            d, base[static_cast<size_t>(d)], probe.order, probe.nvars);
      const Jet got = probe.build(xj);
      for (const MultiIndex& m : all_indices(probe.nvars, probe.order)) {
        const int total = m.total();
        const cplx want = total == 0
                              ? probe.plain(base)
                              : fd_partial(probe.plain, base, m, fd_step(total));
        const double rel = std::abs(extract(got, m) - want) /
                           std::max(1.0, std::abs(want));
        max_rel = std::max(max_rel, rel);
      }
      ++points;
    }
  }

  double max_ring = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t base = static_cast<std::uint64_t>(trial) * 256;
    Jet a(4, 3), b(4, 3), c(4, 3);
    for (int i = 0; i < a.size(); ++i) {
      a.raw(i) = cplx(rng.uniform(base + static_cast<std::uint64_t>(i), -0.4, 0.4),
                      rng.uniform(base + 80 + static_cast<std::uint64_t>(i), -0.4, 0.4));
      b.raw(i) = cplx(rng.uniform(base + 160 + static_cast<std::uint64_t>(i), -0.4, 0.4), 0.1);
      c.raw(i) = cplx(0.2, rng.uniform(base + 200 + static_cast<std::uint64_t>(i), -0.4, 0.4));
    }
    a.raw(0) = cplx(1.1 + 0.002 * trial, 0.3);  // off the branch cut
    const Jet one = Jet::constant(1.0, 4, 3);
    max_ring = std::max(max_ring, jet_gap((a + b) + c, a + (b + c)));
    max_ring = std::max(max_ring, jet_gap(a * (b + c), a * b + a * c));
    max_ring = std::max(max_ring, jet_gap(a * b, b * a));
    max_ring = std::max(max_ring, jet_gap((a * b) * c, a * (b * c)));
    max_ring = std::max(max_ring, jet_gap(a * (one / a), one));
    max_ring = std::max(max_ring, jet_gap(exp(log(a)), a));
    max_ring = std::max(max_ring, jet_gap(log(exp(a)), a));
    max_ring = std::max(max_ring, jet_gap(sqrt(a) * sqrt(a), a));
  }

  const bool ok = max_rel < 1e-6 && max_ring < 1e-12 && points == 200;
  report(1, "jet partials match finite differences; ring identities exact", ok,
         "fd rel " + fmt(max_rel) + " over 200 pts, ring " + fmt(max_ring));
}

// --------------------------------------------------------------------------
// 2. Elliptic lift: eight linear relations, duality equation, unit
//    normalization, and the detuned negative control.

void criterion_2() {
  const HelmholtzLiftParams params{
      {{cplx(1.0, 0.0), cplx(0.6, -0.1), cplx(0.2, 0.3)},
       {cplx(1.3, 0.2), cplx(0.25, 0.1), cplx(-0.15, 0.05)}},
      0.0};
  const FieldEvaluator v = helmholtz_lift(params);
  const Point4Box box{{{-0.3, 0.3}, {-0.3, 0.3}, {-0.3, 0.3}, {-0.3, 0.3}}};
  const auto pts = sample_box(CounterRng{101}, box, 100, field_domain(v));

  const std::vector<EquationId> linear = {
      EquationId::W_LIN_1,  EquationId::W_LIN_2,  EquationId::W_LIN_3,
      EquationId::W_LIN_4,  EquationId::W_LIN_1C, EquationId::W_LIN_2C,
      EquationId::W_LIN_3C, EquationId::W_LIN_4C};
  double max_lin = 0.0;
  for (EquationId eq : linear)
    max_lin = std::max(max_lin, sweep(eq, v, pts).max_normalized);
  const double max_dual =
      std::max(sweep(EquationId::CMA_LEGENDRE, v, pts).max_normalized,
               sweep(EquationId::VEQ_UNIT, v, pts).max_normalized);

  // scaling the second-coordinate exponents by 1 + 1e-3 must push at least
  // one coupled relation visibly off zero
  const HelmholtzLiftParams detuned{
      {{cplx(1.2, 0.1), cplx(0.9, 0.0), cplx(0.1, 0.0)}}, 1e-3};
  const FieldEvaluator bad = helmholtz_lift(detuned);
  const auto bad_pts = sample_box(CounterRng{102}, box, 100, field_domain(bad));
  const double control =
      sweep(EquationId::W_LIN_2, bad, bad_pts).max_normalized;

  const bool ok = pts.size() == 100 && max_lin < 1e-10 && max_dual < 1e-9 &&
                  control > 1e-4;
  report(2, "elliptic lift: linear system, duality equation, detuned control",
         ok,
         "linear " + fmt(max_lin) + ", duality " + fmt(max_dual) +
             ", control " + fmt(control));
}

// --------------------------------------------------------------------------
// 3. Hyperbolic travelling-mode lift and the branch product identity.

void criterion_3() {
  const WaveLiftParams params{{{0.9, 0.7, cplx(0.5, 0.4), WaveBranch::plus},
                              {-0.3, 1.2, cplx(-0.2, 0.6), WaveBranch::minus}},
                             true};
  const FieldEvaluator v = wave_lift(params);
  const Point4Box box{{{-0.5, 0.5}, {-0.5, 0.5}, {-0.5, 0.5}, {-0.5, 0.5}}};
  const auto pts = sample_box(CounterRng{104}, box, 100);
  double max_partner = 0.0;
  for (EquationId eq : {EquationId::PARTNER_A, EquationId::PARTNER_B,
                        EquationId::PARTNER_C})
    max_partner = std::max(max_partner, sweep(eq, v, pts).max_normalized);
  const double max_cma = sweep(EquationId::HCMA_LEGENDRE, v, pts).max_normalized;

  const CounterRng rng{105};
  double max_prod = 0.0;
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t base = static_cast<std::uint64_t>(i) * 3;
    const double alpha = rng.uniform(base, -1.5, 1.5);
    double beta = rng.uniform(base + 1, 0.3, 2.0);
    if (rng.raw(base + 2) & 1) beta = -beta;
    const double dp = dispersion_delta(alpha, beta, WaveBranch::plus);
    const double dm = dispersion_delta(alpha, beta, WaveBranch::minus);
    max_prod = std::max(max_prod,
                        std::abs(dp * dm - (alpha * alpha + beta * beta)));
  }

  const bool ok = pts.size() == 100 && max_partner < 1e-11 &&
                  max_cma < 1e-10 && max_prod < 1e-12;
  report(3, "hyperbolic lift: partner system and branch product identity", ok,
         "partner " + fmt(max_partner) + ", duality " + fmt(max_cma) +
             ", product " + fmt(max_prod));
}

// --------------------------------------------------------------------------
// 4. Rotation-reduced families: residuals for three profiles and variants,
//    the B = C coincidence at zero rate, and the constrained profile.

void criterion_4() {
  const Point4Box box{
      {{0.8, 1.5}, {-0.35, 0.35}, {0.45, 0.95}, {-0.25, 0.25}}};
  const std::vector<HolomorphicPoly> bs = {
      HolomorphicPoly{{cplx(1.0, 0.0)}},
      HolomorphicPoly{{cplx(0.0, 0.0), cplx(1.0, 0.0)}},
      HolomorphicPoly{{cplx(0.0, 0.0), cplx(0.0, 0.0), cplx(1.0, 0.0)}}};
  double max_res = 0.0;
  bool sampled = true;
  for (const HolomorphicPoly& b : bs)
    for (BFVariant variant : {BFVariant::A, BFVariant::B, BFVariant::C}) {
      BFLiftParams params;
      params.variant = variant;
      params.b = b;
      params.r = RealPoly{{0.3, -0.2, 0.1}};
      params.k = RealPoly{{0.2, 0.4}};
      const FieldEvaluator psi = bf_lift(params);
      const auto pts = sample_box(CounterRng{107}, box, 100, field_domain(psi));
      sampled = sampled && pts.size() == 100;
      for (EquationId eq : {EquationId::HCMA_LEG_ROT, EquationId::BF_REAL})
        max_res = std::max(max_res, sweep(eq, psi, pts).max_normalized);
    }

  // zero rate collapses the integral correction, so B and C coincide
  BFLiftParams pb;
  pb.variant = BFVariant::B;
  pb.b = HolomorphicPoly{{cplx(0.0, 0.0), cplx(1.0, 0.0)}};
  pb.r = RealPoly{{0.3, -0.2, 0.1}};
  BFLiftParams pc = pb;
  pc.variant = BFVariant::C;
  pc.k = RealPoly{{0.0}};
  const FieldEvaluator fb = bf_lift(pb);
  const FieldEvaluator fc = bf_lift(pc);
  double bc_gap = 0.0;
  const auto bc_pts = sample_box(CounterRng{108}, box, 25, field_domain(fb));
  for (const Point4& pt : bc_pts)
    bc_gap = std::max(bc_gap, jet_gap(fb(pt, 2), fc(pt, 2)));

  // constrained linear profile with unimodular lambda
  const double alpha = 0.6;
  const ResidualOptions rot_opts{std::polar(1.0, alpha), true};
  const std::vector<EquationId> constraints = {
      EquationId::ROT_CONSTRAINT_1, EquationId::ROT_CONSTRAINT_2,
      EquationId::ROT_CONSTRAINT_XY_1, EquationId::ROT_CONSTRAINT_XY_2};
  double max_con = 0.0;
  for (BFVariant variant : {BFVariant::A, BFVariant::B, BFVariant::C}) {
    BFLiftParams params;
    params.variant = variant;
    params.b = HolomorphicPoly{{cplx(0.25, 0.1), cplx(0.2, -0.1)}};
    params.k = RealPoly{{0.2, 0.3}};
    params.constrained_alpha = alpha;
    params.r0 = 0.15;
    const FieldEvaluator psi = bf_lift(params);
    const auto pts = sample_box(CounterRng{109}, box, 100, field_domain(psi));
    sampled = sampled && pts.size() == 100;
    for (EquationId eq : constraints)
      max_con = std::max(max_con, sweep(eq, psi, pts, rot_opts).max_normalized);
  }

  BFLiftParams generic;
  generic.variant = BFVariant::A;
  generic.b = HolomorphicPoly{{cplx(0.25, 0.1), cplx(0.2, -0.1)}};
  generic.r = RealPoly{{0.15, 0.4, 0.8}};
  const FieldEvaluator bad = bf_lift(generic);
  const auto bad_pts = sample_box(CounterRng{110}, box, 100, field_domain(bad));
  double control = 0.0;
  for (EquationId eq : constraints)
    control = std::max(control, sweep(eq, bad, bad_pts, rot_opts).max_normalized);

  const bool ok = sampled && max_res < 1e-9 && bc_gap < 1e-12 &&
                  max_con < 1e-9 && control > 1e-3;
  report(4, "rotation-reduced lift: residuals, B=C at zero rate, constraint",
         ok,
         "residual " + fmt(max_res) + ", B-C gap " + fmt(bc_gap) +
             ", constrained " + fmt(max_con) + ", control " + fmt(control));
}

// --------------------------------------------------------------------------
// 5. Transform machinery: two-variable round trip, the one-variable analytic
//    pair, and the rotational push onto the hyperbolic equation.

void criterion_5() {
  // round trip through the dual chart and back, coefficient by coefficient
  const FieldEvaluator u = custom_field(
      ChartId::ORIGINAL, "round trip probe", [](const Point4& pt, int order) {
        const auto x = coordinate_jets(pt, order);
        const Jet z1 = (x[0] + cplx(0.0, 1.0) * x[1]) * 0.5;
        const Jet z1b = (x[0] - cplx(0.0, 1.0) * x[1]) * 0.5;
        const Jet z2 = (x[2] + cplx(0.0, 1.0) * x[3]) * 0.5;
        const Jet z2b = (x[2] - cplx(0.0, 1.0) * x[3]) * 0.5;
        const Jet r1 = z1 * z1b, r2 = z2 * z2b;
        return r1 + r2 + 0.03 * r1 * r1 +
               0.01 * (z1 * z1 * z2b * z2b + z1b * z1b * z2 * z2);
      });
  const Point4 x0{0.3, -0.2, 0.4, 0.1};
  const cplx p0 = slot_derivative(u(x0, 1), ChartId::ORIGINAL, 0).value();
  const Point4 t0{p0.real(), p0.imag(), x0[2] / 2.0, x0[3] / 2.0};
  const FieldEvaluator v = forward_two_var_field(u, {}, {x0[0], x0[1]});
  const TransformResult back = invert_two_var(v, x0, 4, {}, {t0[0], t0[1]});
  const double round_gap = jet_gap(back.jet, u(x0, 4));

  // u = e^y and v = q (1 - ln q) are a conjugate pair in one variable
  const OneVarFunction exp_u{
      "exp", [](double y, int order) { return exp(jet_variable(0, y, order, 1)); }};
  const OneVarFunction vq{"q(1-ln q)", [](double q, int order) {
                            const Jet qj = jet_variable(0, q, order, 1);
                            return qj * (Jet::constant(1.0, order, 1) - log(qj));
                          }};
  const OneVarResult fwd = forward_one_var(exp_u, 1.7, 4, {}, 0.4);
  const Jet qj = jet_variable(0, 1.7, 4, 1);
  const double one_var_gap =
      jet_gap(fwd.jet, qj * (Jet::constant(1.0, 4, 1) - log(qj)));
  const OneVarResult inv = invert_one_var(vq, 0.53, 4, {}, 1.5);
  const double one_var_inv_gap =
      jet_gap(inv.jet, exp(jet_variable(0, 0.53, 4, 1)));

  // push a point that verifiably solves the rotation-chart equation
  BFLiftParams params;
  params.b = HolomorphicPoly{{cplx(0.0, 0.0), cplx(1.0, 0.0)}};
  params.r = RealPoly{{0.1, -0.15}};
  const FieldEvaluator psi = bf_lift(params);
  const Point4 s{1.05, 0.1, 0.68, -0.05};
  const double source_res =
      residual(EquationId::HCMA_LEG_ROT, psi, s).normalized;
  const cplx zeta1 = slot_derivative(psi(s, 1), psi.chart, 0).value();
  const cplx z1 = std::exp(zeta1);
  const Point4 target{2.0 * z1.real(), 2.0 * z1.imag(), 2.0 * s[2],
                      2.0 * s[3]};
  const FieldEvaluator pushed = push_forward_rot_field(psi, {}, {s[0], s[1]});
  const double pushed_res =
      residual(EquationId::CMA_HYPERBOLIC, pushed, target).normalized;

  const bool ok = round_gap < 1e-8 && one_var_gap < 1e-10 &&
                  one_var_inv_gap < 1e-10 && source_res < 1e-9 &&
                  pushed_res < 1e-6;
  report(5, "transforms: round trip, one-variable pair, rotational push", ok,
         "round " + fmt(round_gap) + ", one-var " +
             fmt(std::max(one_var_gap, one_var_inv_gap)) + ", push " +
             fmt(pushed_res));
}

// --------------------------------------------------------------------------
// 6. Curvature: flat potentials are exactly flat; transformed lifts satisfy
//    det g = +-1 with vanishing Ricci and the right signature; a nonconstant
//    profile is certifiably curved.

struct GeometryProbe {
  double det_err = 1.0;
  double ricci = 1.0;
  double gap = 1.0;
  double nonflat = 0.0;
  MetricSignature sig = MetricSignature::degenerate;
};

GeometryProbe probe_geometry(const FieldEvaluator& f, const Point4& pt,
                             double det_expected) {
  const KahlerData kd = kahler_at(f, pt);
  GeometryProbe g;
  g.det_err = std::abs(kd.det_g - cplx(det_expected, 0.0));
  g.ricci = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      g.ricci = std::max({g.ricci, std::abs(kd.ricci[i][j]),
                          std::abs(kd.ricci_log[i][j])});
  g.gap = ricci_consistency(kd);
  g.nonflat = nonflatness_certificate(kd);
  g.sig = kd.signature;
  return g;
}

void criterion_6() {
  const Point4 pt{0.6, 0.3, -0.2, 0.5};
  const GeometryProbe flat_e = probe_geometry(flat_potential(1.0), pt, 1.0);
  const GeometryProbe flat_h = probe_geometry(flat_potential(-1.0), pt, -1.0);
  const bool flats_ok =
      flat_e.nonflat < 1e-12 && flat_e.ricci < 1e-12 &&
      flat_e.sig == MetricSignature::euclidean && flat_h.nonflat < 1e-12 &&
      flat_h.ricci < 1e-12 && flat_h.sig == MetricSignature::ultra_hyperbolic;

  // elliptic lift pulled back to the original chart
  const HelmholtzLiftParams hp{
      {{cplx(1.25, 0.0), cplx(0.8, 0.0), cplx(0.15, 0.0)}}, 0.0};
  const FieldEvaluator v = helmholtz_lift(hp);
  const Point4 anchor{0.0, 0.0, 0.0, 0.0};
  const cplx vp = slot_derivative(v(anchor, 1), v.chart, 0).value();
  const Point4 te{-2.0 * vp.real(), -2.0 * vp.imag(), 0.0, 0.0};
  const FieldEvaluator ue = invert_two_var_field(v, {}, {anchor[0], anchor[1]});
  const GeometryProbe ge = probe_geometry(ue, te, 1.0);

  // rotation-reduced lift pushed forward
  BFLiftParams bp;
  bp.b = HolomorphicPoly{{cplx(0.0, 0.0), cplx(1.0, 0.0)}};
  bp.r = RealPoly{{0.3, -0.2, 0.1}};
  const FieldEvaluator psi = bf_lift(bp);
  const Point4 s{1.1, 0.0, 0.7, 0.0};
  const cplx zeta1 = slot_derivative(psi(s, 1), psi.chart, 0).value();
  const cplx z1 = std::exp(zeta1);
  const Point4 th{2.0 * z1.real(), 2.0 * z1.imag(), 2.0 * s[2], 2.0 * s[3]};
  const FieldEvaluator uh = push_forward_rot_field(psi, {}, {s[0], s[1]});
  const GeometryProbe gh = probe_geometry(uh, th, -1.0);

  const bool ok = flats_ok && ge.det_err < 1e-8 && ge.ricci < 1e-6 &&
                  ge.gap < 1e-6 && ge.sig == MetricSignature::euclidean &&
                  gh.det_err < 1e-6 && gh.ricci < 1e-6 && gh.gap < 1e-6 &&
                  gh.sig == MetricSignature::ultra_hyperbolic &&
                  gh.nonflat > 1e-3;
  report(6, "curvature: flat baselines, det g = +-1, Ricci = 0, signatures",
         ok,
         "flat " + fmt(std::max(flat_e.nonflat, flat_h.nonflat)) + ", det " +
             fmt(std::max(ge.det_err, gh.det_err)) + ", ricci " +
             fmt(std::max(ge.ricci, gh.ricci)) + ", nonflat " +
             fmt(gh.nonflat));
}

// --------------------------------------------------------------------------
// 7. Candidate-algebra rank: deficiency on the flat potential, full rank
//    with a healthy smallest singular value on the pushed lift.

void criterion_7() {
  const CandidateAlgebra algebra = default_algebra();
  const Point4Box flat_box{
      {{0.2, 1.0}, {-0.1, 0.7}, {-0.6, 0.2}, {0.1, 0.9}}};
  const auto flat_pts = sample_box(CounterRng{211}, flat_box, 30);
  const InvarianceResult flat_rank =
      invariance_rank(flat_potential(1.0), algebra, flat_pts);

  BFLiftParams bp;
  bp.b = HolomorphicPoly{{cplx(0.0, 0.0), cplx(1.0, 0.0)}};
  bp.r = RealPoly{{0.3, -0.2, 0.1}};
  const FieldEvaluator psi = bf_lift(bp);
  const Point4 s{1.1, 0.0, 0.7, 0.0};
  const cplx z1 = std::exp(slot_derivative(psi(s, 1), psi.chart, 0).value());
  const Point4 target{2.0 * z1.real(), 2.0 * z1.imag(), 2.0 * s[2], 2.0 * s[3]};
  const FieldEvaluator u = push_forward_rot_field(psi, {}, {s[0], s[1]});
  Point4Box push_box;
  for (size_t d = 0; d < 4; ++d) {
    push_box[d][0] = target[d] - 0.04;
    push_box[d][1] = target[d] + 0.04;
  }
  const auto push_pts =
      sample_box(CounterRng{212}, push_box, 30, field_domain(u, 1));
  const InvarianceResult push_rank = invariance_rank(u, algebra, push_pts);

  const bool ok =
      flat_rank.rank < static_cast<int>(algebra.size()) &&
      push_rank.rank == static_cast<int>(algebra.size()) &&
      push_rank.min_singular_value > 1e-6 * push_rank.max_singular_value;
  report(7, "symmetry candidates: flat deficiency, full rank after the lift",
         ok,
         "flat rank " + std::to_string(flat_rank.rank) + "/6, lifted rank " +
             std::to_string(push_rank.rank) + "/6, ratio " +
             fmt(push_rank.min_singular_value /
                 std::max(push_rank.max_singular_value, 1e-300)));
}

// --------------------------------------------------------------------------
// 8. CLI: determinism, exit-code contract, demo pipelines.

const char* kPassConfig = R"({
  "family": {
    "kind": "helmholtz_lift",
    "modes": [{"alpha": [1.25, 0.0], "F": [0.8, 0.0], "G": [0.15, 0.0]}]
  },
  "domain": {"box": [[-0.3, 0.3], [-0.3, 0.3], [-0.3, 0.3], [-0.3, 0.3]]},
  "samples": 60,
  "rng_seed": 7,
  "suite": [
    {"check": "residual",
     "equations": ["w_lin_1", "w_lin_2", "w_lin_3", "w_lin_4"],
     "tolerance": 1e-10},
    {"check": "consequence",
     "premises": ["w_lin_1", "w_lin_2", "w_lin_3", "w_lin_4"],
     "consequence": "cma_legendre", "tolerance": 1e-9}
  ]
})";

const char* kFailConfig = R"({
  "family": {"kind": "bf_lift", "variant": "A",
             "b": [[0.25, 0.1], [0.2, -0.1]], "r": [0.15, 0.4, 0.8]},
  "domain": {"box": [[0.8, 1.5], [-0.35, 0.35], [0.45, 0.95], [-0.25, 0.25]]},
  "samples": 40,
  "rng_seed": 11,
  "lambda": [0.8253356149096783, 0.5646424733950354],
  "suite": [{"check": "residual",
             "equations": ["rot_constraint_1", "rot_constraint_2"],
             "tolerance": 1e-9}]
})";

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(HEAVENLIFT_BIN) + " " + args + " >/dev/null 2>/dev/null";
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

std::string read_without_timestamp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  std::string line;
  while (std::getline(in, line))
    if (line.find("\"generated_at\"") == std::string::npos) buf << line << '\n';
  return buf.str();
}

void criterion_8() {
  const fs::path dir = fs::temp_directory_path() /
                       ("heavenlift_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto write = [&](const char* name, const std::string& text) {
    const fs::path p = dir / name;
    std::ofstream out(p, std::ios::binary);
    out << text;
    return p;
  };
  const fs::path pass_cfg = write("pass.json", kPassConfig);
  const fs::path fail_cfg = write("fail.json", kFailConfig);
  const fs::path broken_cfg = write("broken.json", "{ not json");
  const fs::path r1 = dir / "r1.json";
  const fs::path r2 = dir / "r2.json";

  const int e_pass = run_cli("verify --config " + pass_cfg.string() +
                             " --out " + r1.string());
  const int e_pass2 = run_cli("verify --config " + pass_cfg.string() +
                              " --out " + r2.string() + " --jobs 2");
  const bool identical =
      read_without_timestamp(r1) == read_without_timestamp(r2) &&
      !read_without_timestamp(r1).empty();
  const int e_fail = run_cli("verify --config " + fail_cfg.string());
  const int e_broken = run_cli("verify --config " + broken_cfg.string());
  const int e_demo = run_cli("lift-demo");

  std::error_code ec;
  fs::remove_all(dir, ec);

  const bool ok = e_pass == 0 && e_pass2 == 0 && identical && e_fail == 1 &&
                  e_broken == 2 && e_demo == 0;
  report(8, "cli: byte-identical reports, exit codes 0/1/2, demo pipelines",
         ok,
         "exits " + std::to_string(e_pass) + "/" + std::to_string(e_fail) +
             "/" + std::to_string(e_broken) + ", demo " +
             std::to_string(e_demo) +
             (identical ? ", reports identical" : ", reports differ"));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  std::printf("acceptance: %d/8 criteria passed\n", 8 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
