#include "heavenlift/residuals.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "heavenlift/errors.hpp"

namespace heavenlift {
namespace {

constexpr cplx kI{0.0, 1.0};

// Signed term accumulator.  The peak magnitude feeds the normalization so a
// residual is judged against the size of what failed to cancel.
struct Terms {
  cplx sum{0.0, 0.0};
  double peak = 0.0;
  void add(cplx t) {
    sum += t;
    peak = std::max(peak, std::abs(t));
  }
};

cplx d1(const Jet& f, ChartId ch, int a) {
  return slot_derivative(f, ch, a).value();
}

cplx d2(const Jet& f, ChartId ch, int a, int b) {
  return slot_derivative(slot_derivative(f, ch, a), ch, b).value();
}

cplx dr1(const Jet& f, int a) { return derivative(f, a).value(); }

cplx dr2(const Jet& f, int a, int b) {
  return derivative(derivative(f, a), b).value();
}

// real-coordinate partial followed by a complex-slot partial
cplx dmix(const Jet& f, ChartId ch, int var, int slot) {
  return slot_derivative(derivative(f, var), ch, slot).value();
}

// f is the single field, or the first of a pair (u of (u, phi)), or u of a
// triple (u, phi, psi); g and h follow in that order.
Terms eval_terms(EquationId eq, const Jet& f, const Jet& g, const Jet& h,
                 const ResidualOptions& opts) {
  const ChartId ch = equation_chart(eq);
  const cplx lam = opts.lambda;
  Terms T;
  switch (eq) {
    case EquationId::CMA_ELLIPTIC:
    case EquationId::CMA_HYPERBOLIC: {
      T.add(d2(f, ch, 0, 1) * d2(f, ch, 2, 3));
      T.add(-d2(f, ch, 0, 3) * d2(f, ch, 2, 1));
      T.add(eq == EquationId::CMA_ELLIPTIC ? cplx(-1.0) : cplx(1.0));
      break;
    }

    case EquationId::CMA_REAL:
    case EquationId::HCMA_REAL: {
      // coordinates x,y,z,t = 0,1,2,3
      const cplx uxx = dr2(f, 0, 0), uyy = dr2(f, 1, 1), uzz = dr2(f, 2, 2),
                 utt = dr2(f, 3, 3), uxt = dr2(f, 0, 3), uyz = dr2(f, 1, 2),
                 uyt = dr2(f, 1, 3), uxz = dr2(f, 0, 2);
      T.add((uxx + uyy) * (uzz + utt));
      T.add(-(uxt + uyz) * (uxt + uyz));
      T.add(-(uyt - uxz) * (uyt - uxz));
      T.add(eq == EquationId::CMA_REAL ? cplx(-1.0) : cplx(1.0));
      break;
    }

    case EquationId::CMA_REDUCED:
    case EquationId::HCMA_REDUCED: {
      const cplx uyy = dr2(f, 1, 1), uzz = dr2(f, 2, 2), utt = dr2(f, 3, 3),
                 uyz = dr2(f, 1, 2), uyt = dr2(f, 1, 3);
      T.add(uyy * (uzz + utt));
      T.add(-uyz * uyz);
      T.add(-uyt * uyt);
      T.add(eq == EquationId::CMA_REDUCED ? cplx(-1.0) : cplx(1.0));
      break;
    }

    case EquationId::CMA_LEGENDRE: {
      T.add(d2(f, ch, 0, 1) * d2(f, ch, 2, 3));
      T.add(-d2(f, ch, 0, 3) * d2(f, ch, 1, 2));
      T.add(-d2(f, ch, 0, 0) * d2(f, ch, 1, 1));
      T.add(d2(f, ch, 0, 1) * d2(f, ch, 0, 1));
      break;
    }

    case EquationId::VEQ_PP:
    case EquationId::VEQ_PZBAR:
    case EquationId::VEQ_ZZBAR:
    case EquationId::VEQ_PP_C:
    case EquationId::VEQ_PZBAR_C:
    case EquationId::VEQ_ZZBAR_C: {
      const cplx vp = d1(f, ch, 0), vpb = d1(f, ch, 1), v2 = d1(f, ch, 2),
                 v2b = d1(f, ch, 3);
      const cplx den = 1.0 + vp * vpb;
      cplx lhs, coef;
      switch (eq) {
        case EquationId::VEQ_PP:
          lhs = d2(f, ch, 0, 0);
          coef = (1.0 + vp * vp + kI * v2) / den;
          break;
        case EquationId::VEQ_PP_C:
          lhs = d2(f, ch, 1, 1);
          coef = (1.0 + vpb * vpb - kI * v2b) / den;
          break;
        case EquationId::VEQ_PZBAR:
          lhs = d2(f, ch, 0, 3);
          coef = (vp * v2b + kI * (vp - vpb)) / den;
          break;
        case EquationId::VEQ_PZBAR_C:
          lhs = d2(f, ch, 1, 2);
          coef = (vpb * v2 - kI * (vpb - vp)) / den;
          break;
        case EquationId::VEQ_ZZBAR:
          lhs = d2(f, ch, 2, 3);
          coef = (v2 * v2b + kI * (v2 - v2b)) / den;
          break;
        default:  // VEQ_ZZBAR_C
          lhs = d2(f, ch, 3, 2);
          coef = (v2b * v2 - kI * (v2b - v2)) / den;
          break;
      }
      T.add(lhs);
      T.add(-coef * d2(f, ch, 0, 1));
      break;
    }

    case EquationId::VEQ_UNIT: {
      T.add(d2(f, ch, 0, 1));
      T.add(cplx(-1.0));
      T.add(-d1(f, ch, 0) * d1(f, ch, 1));
      break;
    }

    case EquationId::W_LIN_1:
    case EquationId::W_LIN_2:
    case EquationId::W_LIN_3:
    case EquationId::W_LIN_4:
    case EquationId::W_LIN_1C:
    case EquationId::W_LIN_2C:
    case EquationId::W_LIN_3C:
    case EquationId::W_LIN_4C:
    case EquationId::W_WAVE:
    case EquationId::LAPLACE3_W: {
      const Jet w = exp(-f);
      switch (eq) {
        case EquationId::W_LIN_1:
          T.add(d2(w, ch, 0, 1));
          T.add(w.value());
          break;
        case EquationId::W_LIN_1C:
          T.add(d2(w, ch, 1, 0));
          T.add(w.value());
          break;
        case EquationId::W_LIN_2:
          T.add(d2(w, ch, 0, 0));
          T.add(w.value());
          T.add(-kI * d1(w, ch, 2));
          break;
        case EquationId::W_LIN_2C:
          T.add(d2(w, ch, 1, 1));
          T.add(w.value());
          T.add(kI * d1(w, ch, 3));
          break;
        case EquationId::W_LIN_3:
          T.add(d2(w, ch, 0, 3));
          T.add(-kI * d1(w, ch, 0));
          T.add(kI * d1(w, ch, 1));
          break;
        case EquationId::W_LIN_3C:
          T.add(d2(w, ch, 1, 2));
          T.add(kI * d1(w, ch, 1));
          T.add(-kI * d1(w, ch, 0));
          break;
        case EquationId::W_LIN_4:
          T.add(d2(w, ch, 2, 3));
          T.add(-kI * d1(w, ch, 2));
          T.add(kI * d1(w, ch, 3));
          break;
        case EquationId::W_LIN_4C:
          T.add(d2(w, ch, 3, 2));
          T.add(kI * d1(w, ch, 3));
          T.add(-kI * d1(w, ch, 2));
          break;
        case EquationId::W_WAVE:
          T.add(d2(w, ch, 2, 3));
          T.add(-d2(w, ch, 0, 0));
          T.add(-d2(w, ch, 1, 1));
          T.add(2.0 * d2(w, ch, 0, 1));
          break;
        default:  // LAPLACE3_W, Im p is real coordinate 1
          T.add(dr2(w, 1, 1));
          T.add(d2(w, ch, 2, 3));
          break;
      }
      break;
    }

    case EquationId::LAPLACE3: {
      // Re p is real coordinate 0
      T.add(dr2(f, 0, 0));
      T.add(d2(f, ch, 2, 3));
      break;
    }

    case EquationId::HELMHOLTZ: {
      T.add(d2(f, ch, 2, 3));
      T.add(f.value());
      break;
    }

    case EquationId::HCMA_LEGENDRE: {
      // coordinates p,q,t,z = 0,1,2,3
      const cplx vpp = dr2(f, 0, 0), vqq = dr2(f, 1, 1), vtt = dr2(f, 2, 2),
                 vzz = dr2(f, 3, 3), vpt = dr2(f, 0, 2), vqz = dr2(f, 1, 3),
                 vpz = dr2(f, 0, 3), vqt = dr2(f, 1, 2), vpq = dr2(f, 0, 1);
      T.add((vpp + vqq) * (vtt + vzz));
      T.add(-(vpt - vqz) * (vpt - vqz));
      T.add(-(vpz + vqt) * (vpz + vqt));
      T.add(-vpp * vqq);
      T.add(vpq * vpq);
      break;
    }

    case EquationId::PARTNER_A: {
      T.add(dr2(f, 1, 1));
      T.add(-dr2(f, 0, 3));
      T.add(-dr2(f, 1, 2));
      break;
    }

    case EquationId::PARTNER_B: {
      T.add(dr2(f, 0, 1));
      T.add(-dr2(f, 1, 3));
      T.add(dr2(f, 0, 2));
      break;
    }

    case EquationId::PARTNER_C:
    case EquationId::WAVE3: {
      T.add(dr2(f, 1, 1));
      T.add(-dr2(f, 2, 2));
      T.add(-dr2(f, 3, 3));
      break;
    }

    case EquationId::HCMA_LEG_ROT: {
      const cplx E = std::exp(d1(f, ch, 0) + d1(f, ch, 1));
      const cplx pqqb = d2(f, ch, 0, 1);
      T.add(pqqb * d2(f, ch, 2, 3));
      T.add(-d2(f, ch, 0, 3) * d2(f, ch, 1, 2));
      T.add(E * d2(f, ch, 0, 0) * d2(f, ch, 1, 1));
      T.add(-E * pqqb * pqqb);
      break;
    }

    case EquationId::ROT_CONSTRAINT_1: {
      const cplx Eb = std::exp(d1(f, ch, 1));
      T.add(Eb * d2(f, ch, 1, 1));
      T.add(Eb * d2(f, ch, 0, 1));
      T.add(-lam * d2(f, ch, 0, 3));
      break;
    }

    case EquationId::ROT_CONSTRAINT_2: {
      const cplx E = std::exp(d1(f, ch, 0));
      T.add(lam * E * d2(f, ch, 0, 0));
      T.add(lam * E * d2(f, ch, 0, 1));
      T.add(-d2(f, ch, 1, 2));
      break;
    }

    case EquationId::ROT_CONSTRAINT_XY_1: {
      const cplx px = dr1(f, 0), py = dr1(f, 1);
      const cplx E = std::exp(0.5 * (px - kI * py));
      const cplx pxx = dr2(f, 0, 0), pxy = dr2(f, 0, 1);
      T.add(dmix(f, ch, 0, 2));
      T.add(kI * dmix(f, ch, 1, 2));
      T.add(-lam * pxx * E);
      T.add(lam * kI * pxy * E);
      break;
    }

    case EquationId::ROT_CONSTRAINT_XY_2: {
      const cplx px = dr1(f, 0), py = dr1(f, 1);
      const cplx E = std::exp(0.5 * (px + kI * py));
      const cplx pxx = dr2(f, 0, 0), pxy = dr2(f, 0, 1);
      T.add(dmix(f, ch, 0, 3));
      T.add(-kI * dmix(f, ch, 1, 3));
      T.add(-(pxx / lam) * E);
      T.add(-(kI * pxy / lam) * E);
      break;
    }

    case EquationId::BF_COMBINED: {
      const cplx E = std::exp(d1(f, ch, 0) + d1(f, ch, 1));
      T.add(d2(f, ch, 2, 3));
      T.add(-E * d2(f, ch, 0, 0));
      T.add(-2.0 * E * d2(f, ch, 0, 1));
      T.add(-E * d2(f, ch, 1, 1));
      break;
    }

    case EquationId::BF_REAL: {
      T.add(d2(f, ch, 2, 3));
      T.add(-std::exp(dr1(f, 0)) * dr2(f, 0, 0));
      break;
    }

    case EquationId::BF_V: {
      const cplx ev = std::exp(f.value());
      const cplx vx = dr1(f, 0);
      T.add(d2(f, ch, 2, 3));
      T.add(-ev * dr2(f, 0, 0));
      T.add(-ev * vx * vx);
      break;
    }

    case EquationId::BF_ELLIPTIC: {
      T.add(d2(f, ch, 2, 3));
      T.add(std::exp(dr1(f, 0)) * dr2(f, 0, 0));
      break;
    }

    case EquationId::LIE_Y: {
      T.add(dr1(f, 1));
      T.add(-kI * dr1(g, 0));
      break;
    }

    case EquationId::BACKLUND_1: {
      T.add(d1(g, ch, 2));
      T.add(-d1(f, ch, 2));
      T.add(2.0 * lam * std::exp(0.5 * (dr1(f, 0) + dr1(g, 0))));
      break;
    }

    case EquationId::BACKLUND_2: {
      T.add(d1(g, ch, 3));
      T.add(d1(f, ch, 3));
      T.add(-(2.0 / lam) * std::exp(0.5 * (dr1(f, 0) - dr1(g, 0))));
      break;
    }

    case EquationId::OMEGA_SYM: {
      T.add(d2(g, ch, 2, 3));
      T.add(-std::exp(dr1(f, 0)) * dr2(g, 0, 0));
      break;
    }

    case EquationId::SYM_LINEARIZATION: {
      T.add(d2(f, ch, 2, 3) * d2(g, ch, 0, 1));
      T.add(d2(f, ch, 0, 1) * d2(g, ch, 2, 3));
      T.add(-d2(f, ch, 2, 1) * d2(g, ch, 0, 3));
      T.add(-d2(f, ch, 0, 3) * d2(g, ch, 2, 1));
      break;
    }

    case EquationId::PARTNER_POT_1: {
      T.add(d1(h, ch, 0));
      T.add(-lam * d2(f, ch, 0, 3) * d1(g, ch, 1));
      T.add(lam * d2(f, ch, 0, 1) * d1(g, ch, 3));
      break;
    }

    case EquationId::PARTNER_POT_2: {
      T.add(d1(h, ch, 2));
      T.add(-lam * d2(f, ch, 2, 3) * d1(g, ch, 1));
      T.add(lam * d2(f, ch, 2, 1) * d1(g, ch, 3));
      break;
    }

    case EquationId::PARTNER_INV_1:
    case EquationId::PARTNER_INV_2: {
      const double sgn = opts.elliptic ? 1.0 : -1.0;
      const cplx lb = 1.0 / std::conj(lam);
      const int row = eq == EquationId::PARTNER_INV_1 ? 0 : 2;
      T.add(d1(g, ch, row));
      T.add(sgn * lb * d2(f, ch, row, 3) * d1(h, ch, 1));
      T.add(-sgn * lb * d2(f, ch, row, 1) * d1(h, ch, 3));
      break;
    }

    case EquationId::SELF_PARTNER_1:
    case EquationId::SELF_PARTNER_2:
    case EquationId::BASIC_PAIR_1: {
      const int row = eq == EquationId::SELF_PARTNER_2 ? 2 : 0;
      T.add(d1(g, ch, row));
      T.add(-lam * d2(f, ch, row, 3) * d1(g, ch, 1));
      T.add(lam * d2(f, ch, row, 1) * d1(g, ch, 3));
      break;
    }

    case EquationId::SELF_PARTNER_CONJ_1:
    case EquationId::SELF_PARTNER_CONJ_2:
    case EquationId::BASIC_PAIR_2: {
      const int row = eq == EquationId::SELF_PARTNER_CONJ_2 ? 3 : 1;
      T.add(d1(g, ch, row));
      T.add(-(1.0 / lam) * d2(f, ch, 2, row) * d1(g, ch, 0));
      T.add((1.0 / lam) * d2(f, ch, 0, row) * d1(g, ch, 2));
      break;
    }
  }
  return T;
}

void require_arity(EquationId eq, EquationArity want) {
  if (equation_arity(eq) != want)
    throw Error(std::string("equation ") + equation_name(eq) +
                " called with the wrong number of fields");
}

void require_chart(EquationId eq, const FieldEvaluator& f) {
  if (f.chart != equation_chart(eq))
    throw ChartMismatchError(std::string("equation ") + equation_name(eq) +
                             " lives on chart " +
                             chart_name(equation_chart(eq)) + " but field '" +
                             f.label + "' is on " + chart_name(f.chart));
}

void require_lambda(EquationId eq, const ResidualOptions& opts) {
  if (!equation_uses_lambda(eq)) return;
  const double mod = std::abs(opts.lambda);
  if (mod < 1e-14)
    throw Error(std::string("equation ") + equation_name(eq) +
                " needs a nonzero lambda");
  if (equation_requires_unit_lambda(eq) && std::abs(mod - 1.0) > 1e-12)
    throw Error(std::string("equation ") + equation_name(eq) +
                " is only consistent for unimodular lambda");
}

ResidualRecord make_record(EquationId eq, const Point4& pt, const Terms& T) {
  ResidualRecord r;
  r.equation = eq;
  r.point = pt;
  r.value = T.sum;
  r.magnitude = std::abs(T.sum);
  r.normalized = r.magnitude / std::max(1.0, T.peak);
  return r;
}

}  // namespace

ResidualRecord residual(EquationId eq, const FieldEvaluator& field,
                        const Point4& pt, const ResidualOptions& opts) {
  require_arity(eq, EquationArity::single);
  require_chart(eq, field);
  require_lambda(eq, opts);
  const Jet f = field(pt, 2);
  return make_record(eq, pt, eval_terms(eq, f, f, f, opts));
}

ResidualRecord residual_pair(EquationId eq, const FieldEvaluator& first,
                             const FieldEvaluator& second, const Point4& pt,
                             const ResidualOptions& opts) {
  require_arity(eq, EquationArity::pair);
  require_chart(eq, first);
  require_chart(eq, second);
  require_lambda(eq, opts);
  const Jet f = first(pt, 2);
  const Jet g = second(pt, 2);
  return make_record(eq, pt, eval_terms(eq, f, g, g, opts));
}

ResidualRecord residual_triple(EquationId eq, const FieldEvaluator& u,
                               const FieldEvaluator& phi,
                               const FieldEvaluator& psi, const Point4& pt,
                               const ResidualOptions& opts) {
  require_arity(eq, EquationArity::triple);
  require_chart(eq, u);
  require_chart(eq, phi);
  require_chart(eq, psi);
  require_lambda(eq, opts);
  const Jet f = u(pt, 2);
  const Jet g = phi(pt, 2);
  const Jet h = psi(pt, 2);
  return make_record(eq, pt, eval_terms(eq, f, g, h, opts));
}

ConsequenceReport verify_consequence(const FieldEvaluator& field,
                                     std::span<const EquationId> premises,
                                     EquationId consequence,
                                     std::span<const Point4> points, double tol,
                                     const ResidualOptions& opts) {
  for (EquationId eq : premises) require_arity(eq, EquationArity::single);
  require_arity(consequence, EquationArity::single);
  ConsequenceReport rep;
  for (const Point4& pt : points) {
    for (EquationId eq : premises)
      rep.max_premise =
          std::max(rep.max_premise, residual(eq, field, pt, opts).normalized);
    rep.max_consequence = std::max(
        rep.max_consequence, residual(consequence, field, pt, opts).normalized);
  }
  rep.premises_ok = rep.max_premise <= tol;
  rep.consequence_ok = rep.max_consequence <= tol;
  return rep;
}

namespace {

struct PointOutcome {
  bool ok = false;
  double normalized = 0.0;
};

SweepResult reduce_outcomes(EquationId eq, std::span<const Point4> points,
                            const std::vector<PointOutcome>& out) {
  SweepResult r;
  r.equation = eq;
  r.points = static_cast<int>(points.size());
  double sum = 0.0;
  int good = 0;
  std::ptrdiff_t best = -1;
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(out.size()); ++i) {
    if (!out[static_cast<size_t>(i)].ok) {
      ++r.failures;
      continue;
    }
    const double n = out[static_cast<size_t>(i)].normalized;
    ++good;
    sum += n;
    if (best < 0 || n > r.max_normalized) {
      r.max_normalized = n;
      best = i;
    }
  }
  r.mean_normalized = good > 0 ? sum / good : 0.0;
  if (best >= 0) r.worst_point = points[static_cast<size_t>(best)];
  return r;
}

}  // namespace

SweepResult sweep_serial(EquationId eq, const FieldEvaluator& field,
                         std::span<const Point4> points,
                         const ResidualOptions& opts) {
  require_arity(eq, EquationArity::single);
  require_chart(eq, field);
  require_lambda(eq, opts);
  std::vector<PointOutcome> out(points.size());
  for (size_t i = 0; i < points.size(); ++i) {
    try {
      out[i] = {true, residual(eq, field, points[i], opts).normalized};
    } catch (const SingularPointError&) {
    } catch (const ConvergenceError&) {
    }
  }
  return reduce_outcomes(eq, points, out);
}

SweepResult sweep(EquationId eq, const FieldEvaluator& field,
                  std::span<const Point4> points, const ResidualOptions& opts) {
  require_arity(eq, EquationArity::single);
  require_chart(eq, field);
  require_lambda(eq, opts);
  std::vector<PointOutcome> out(points.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(points.size());
#ifdef HEAVENLIFT_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[static_cast<size_t>(i)] = {
          true, residual(eq, field, points[static_cast<size_t>(i)], opts).normalized};
    } catch (const SingularPointError&) {
    } catch (const ConvergenceError&) {
    }
  }
  return reduce_outcomes(eq, points, out);
}

double dispersion_delta(double alpha, double beta, WaveBranch branch) {
  const double gamma = std::hypot(alpha, beta);
  if (std::abs(beta) < 1e-14 || gamma < 1e-14)
    throw Error("dispersion_delta: degenerate mode (beta or gamma vanishes)");
  const double sigma = branch == WaveBranch::plus ? 1.0 : -1.0;
  const auto mode = [&](double delta) {
    return custom_field(
        ChartId::LEGENDRE_HCMA, "trial mode",
        [alpha, beta, sigma, gamma, delta](const Point4& pt, int order) {
          const auto x = coordinate_jets(pt, order);
          return exp((x[2] * alpha + x[3] * beta + x[1] * (sigma * gamma) +
                      x[0] * delta) *
                     cplx(0.0, -1.0));
        });
  };
  // the first coordinate must vanish so the probe phase is delta-independent
  // and the residual is exactly affine in delta
  const Point4 probe{0.0, 0.31, -0.23, 0.41};
  const auto root = [&](EquationId eq) {
    const cplx r0 = residual(eq, mode(0.0), probe).value;
    const cplx r1 = residual(eq, mode(1.0), probe).value;
    const cplx slope = r1 - r0;
    if (std::abs(slope) < 1e-14)
      throw Error("dispersion_delta: residual does not depend on delta");
    return -r0 / slope;
  };
  const cplx da = root(EquationId::PARTNER_A);
  const cplx db = root(EquationId::PARTNER_B);
  const double scale = std::max({1.0, std::abs(da), std::abs(db)});
  if (std::abs(da - db) > 1e-12 * scale)
    throw Error("dispersion_delta: independent relations disagree");
  if (std::abs(da.imag()) > 1e-12 * scale)
    throw Error("dispersion_delta: frequency came out complex");
  return da.real();
}

}  // namespace heavenlift
