#include "heavenlift/solutions.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "heavenlift/errors.hpp"

namespace heavenlift {
namespace {

constexpr cplx kI{0.0, 1.0};

// c * exp(ep * p + epb * pb + e2 * z2 + e2b * z2b)
struct ExpTerm {
  cplx c, ep, epb, e2, e2b;
};

// The two elementary exponentials contributed by one branch weight: the term
// itself and its pointwise complex conjugate, so the sum stays real.
void push_branch(std::vector<ExpTerm>& out, cplx weight, cplx mu, double detune) {
  if (weight == cplx(0.0, 0.0)) return;
  const cplx nu = -1.0 / mu;
  const cplx e2 = -kI * (mu * mu + 1.0) * (1.0 + detune);
  const cplx e2b = kI * (1.0 + 1.0 / (mu * mu)) * (1.0 + detune);
  out.push_back({0.5 * weight, mu, nu, e2, e2b});
  out.push_back({0.5 * std::conj(weight), std::conj(nu), std::conj(mu),
                 std::conj(e2b), std::conj(e2)});
}

}  // namespace

FieldEvaluator helmholtz_lift(const HelmholtzLiftParams& params) {
  if (params.modes.empty())
    throw Error("helmholtz_lift: at least one mode is required");
  std::vector<ExpTerm> terms;
  for (const HelmholtzMode& m : params.modes) {
    const double mod = std::abs(m.alpha);
    if (mod < 1.0 - 1e-12)
      throw Error("helmholtz_lift: |alpha| must be >= 1, got " +
                  std::to_string(mod));
    const double s = std::sqrt(std::max(0.0, 1.0 - 1.0 / (mod * mod)));
    push_branch(terms, m.F, (1.0 + s) * m.alpha, params.exponent_perturbation);
    push_branch(terms, m.G, (1.0 - s) * m.alpha, params.exponent_perturbation);
  }
  return custom_field(
      ChartId::LEGENDRE_CMA, "helmholtz lift",
      [terms](const Point4& pt, int order) {
        const auto x = coordinate_jets(pt, order);
        const Jet p = x[0] + kI * x[1];
        const Jet pb = x[0] - kI * x[1];
        const Jet z2 = x[2] + kI * x[3];
        const Jet z2b = x[2] - kI * x[3];
        Jet w = Jet::constant(cplx(0.0, 0.0), order, 4);
        for (const ExpTerm& t : terms)
          w += t.c * exp(t.ep * p + t.epb * pb + t.e2 * z2 + t.e2b * z2b);
        const cplx w0 = w.value();
        if (std::abs(w0.imag()) > 1e-9 * std::max(1.0, std::abs(w0.real())))
          throw Error("helmholtz_lift: superposition lost reality");
        if (w0.real() <= 0.0)
          throw SingularPointError("helmholtz_lift: w is not positive here", w0);
        return -log(w);
      });
}

FieldEvaluator wave_lift(const WaveLiftParams& params) {
  if (params.modes.empty())
    throw Error("wave_lift: at least one mode is required");
  struct Prepared {
    double alpha, beta, gamma, sigma, delta;
    cplx amplitude;
  };
  std::vector<Prepared> prep;
  const auto add_mode = [&prep](const WaveMode& m) {
    const double gamma = std::hypot(m.alpha, m.beta);
    prep.push_back({m.alpha, m.beta, gamma,
                    m.branch == WaveBranch::plus ? 1.0 : -1.0,
                    dispersion_delta(m.alpha, m.beta, m.branch), m.amplitude});
  };
  for (const WaveMode& m : params.modes) {
    add_mode(m);
    if (params.realize)
      add_mode({-m.alpha, -m.beta, std::conj(m.amplitude),
                m.branch == WaveBranch::plus ? WaveBranch::minus
                                             : WaveBranch::plus});
  }
  return custom_field(
      ChartId::LEGENDRE_HCMA, "wave lift",
      [prep](const Point4& pt, int order) {
        const auto x = coordinate_jets(pt, order);
        Jet v = Jet::constant(cplx(0.0, 0.0), order, 4);
        for (const Prepared& m : prep)
          v += m.amplitude * exp((x[2] * m.alpha + x[3] * m.beta +
                                  x[1] * (m.sigma * m.gamma) + x[0] * m.delta) *
                                 cplx(0.0, -1.0));
        return v;
      });
}

FieldEvaluator bf_lift(const BFLiftParams& params) {
  RealPoly r = params.r;
  if (params.constrained_alpha) {
    const double a = *params.constrained_alpha;
    const double slope =
        params.variant == BFVariant::A ? 2.0 * (a - std::numbers::pi) : 2.0 * a;
    r = RealPoly({params.r0, slope});
  }
  const BFVariant variant = params.variant;
  const HolomorphicPoly b = params.b;
  const RealPoly k = params.k;
  return custom_field(
      ChartId::ROT_LEGENDRE, "bf lift",
      [variant, b, r, k](const Point4& pt, int order) {
        const auto x = coordinate_jets(pt, order);
        const Jet q = x[0] + kI * x[1];
        const Jet qb = x[0] - kI * x[1];
        const Jet z = x[2] + kI * x[3];
        const Jet zb = x[2] - kI * x[3];
        const Jet s = z + zb;
        const Jet logs = log(s);
        const Jet qpb = q + b.eval(z);
        const Jet qpbb = qb + b.eval_bar(zb);
        Jet psi = qpb * log(qpb) + qpbb * log(qpbb) - (q + qb) * (logs + 1.0);
        psi += double_integral_kernel(b, z, zb);
        if (variant == BFVariant::B)
          psi += (2.0 * kI) * x[1] * (log(zb) - log(z));
        else if (variant == BFVariant::C)
          psi += y_integral_term(k, 1, x[1], z, zb);
        psi += r.eval(x[1]);
        return psi;
      });
}

FieldEvaluator helmholtz_seed(std::vector<HelmholtzSeedMode> modes) {
  for (const HelmholtzSeedMode& m : modes)
    if (std::abs(m.kappa) < 1e-14)
      throw Error("helmholtz_seed: kappa must be nonzero");
  return custom_field(
      ChartId::LEGENDRE_CMA, "helmholtz seed",
      [modes = std::move(modes)](const Point4& pt, int order) {
        const auto x = coordinate_jets(pt, order);
        const Jet z2 = x[2] + kI * x[3];
        const Jet z2b = x[2] - kI * x[3];
        Jet f = Jet::constant(cplx(0.0, 0.0), order, 4);
        for (const HelmholtzSeedMode& m : modes)
          f += m.c * exp(m.kappa * z2 - z2b / m.kappa);
        return f;
      });
}

FieldEvaluator helmholtz_seed_sin() {
  return custom_field(ChartId::LEGENDRE_CMA, "helmholtz seed sin",
                      [](const Point4& pt, int order) {
                        const auto x = coordinate_jets(pt, order);
                        return sin(x[2] * 2.0);
                      });
}

FieldEvaluator laplace_seed(std::vector<LaplaceSeedMode> modes) {
  for (const LaplaceSeedMode& m : modes)
    if (std::abs(m.kappa) < 1e-14)
      throw Error("laplace_seed: kappa must be nonzero");
  return custom_field(
      ChartId::LEGENDRE_CMA, "laplace seed",
      [modes = std::move(modes)](const Point4& pt, int order) {
        const auto x = coordinate_jets(pt, order);
        const Jet z2 = x[2] + kI * x[3];
        const Jet z2b = x[2] - kI * x[3];
        Jet f = Jet::constant(cplx(0.0, 0.0), order, 4);
        for (const LaplaceSeedMode& m : modes)
          f += m.c * exp(x[0] * m.a + m.kappa * z2 -
                         (m.a * m.a / m.kappa) * z2b);
        return f;
      });
}

FieldEvaluator wave_seed(std::vector<WaveSeedMode> modes) {
  for (const WaveSeedMode& m : modes) {
    const double gap = m.kq * m.kq - m.kt * m.kt - m.kz * m.kz;
    if (std::abs(gap) > 1e-12 * std::max(1.0, m.kq * m.kq))
      throw Error("wave_seed: kq^2 must equal kt^2 + kz^2");
  }
  return custom_field(
      ChartId::LEGENDRE_HCMA, "wave seed",
      [modes = std::move(modes)](const Point4& pt, int order) {
        const auto x = coordinate_jets(pt, order);
        Jet f = Jet::constant(cplx(0.0, 0.0), order, 4);
        for (const WaveSeedMode& m : modes)
          f += m.amplitude *
               exp((x[1] * m.kq + x[2] * m.kt + x[3] * m.kz) * kI);
        return f;
      });
}

FieldEvaluator bf_seed(HolomorphicPoly b) {
  return custom_field(
      ChartId::ROT_LEGENDRE, "bf seed",
      [b = std::move(b)](const Point4& pt, int order) {
        const auto x = coordinate_jets(pt, order);
        const Jet z = x[2] + kI * x[3];
        const Jet zb = x[2] - kI * x[3];
        return log(x[0] + b.eval(z)) + log(x[0] + b.eval_bar(zb)) -
               2.0 * log(z + zb);
      });
}

FieldEvaluator flat_potential(double sign) {
  return custom_field(ChartId::ORIGINAL, "flat potential",
                      [sign](const Point4& pt, int order) {
                        const auto x = coordinate_jets(pt, order);
                        return 0.25 * (x[0] * x[0] + x[1] * x[1]) +
                               (0.25 * sign) * (x[2] * x[2] + x[3] * x[3]);
                      });
}

}  // namespace heavenlift
