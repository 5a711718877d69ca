#include "heavenlift/legendre.hpp"

#include <cmath>
#include <complex>
#include <utility>

#include "heavenlift/errors.hpp"

namespace heavenlift {

namespace {

constexpr cplx I{0.0, 1.0};

// One Legendre-type pair exchange.  The source first pair is the Newton
// unknown; the second pair passes through unchanged up to the charts' real
// normalizations.  `sign` fixes which side of the duality the conjugate
// variable sits on; `log_link` switches to the exponential coupling of the
// rotation chart.
struct EngineSpec {
  ChartId source;
  double sigma_src;  // source complex coordinate = sigma * (x + i y)
  double sigma_dst;
  double sign;       // residual solves f_slot0 = sign * tau1
  bool log_link;     // residual solves f_slot0 = log(tau1) instead
  bool value_flip;   // result value is (w f0 + wb f1) - f instead of f - ...
};

struct Mat2 {
  cplx a00, a01, a10, a11;
};

Mat2 invert(const Mat2& m) {
  const cplx det = m.a00 * m.a11 - m.a01 * m.a10;
  const double scale =
      std::max({1.0, std::abs(m.a00) * std::abs(m.a11),
                std::abs(m.a01) * std::abs(m.a10)});
  if (std::abs(det) <= 1e-14 * scale) {
    throw Error("legendre transform: the Hessian block in the active pair is "
                "singular; the duality is not locally invertible here");
  }
  return {m.a11 / det, -m.a01 / det, -m.a10 / det, m.a00 / det};
}

double max_coeff(const Jet& a) {
  double m = 0.0;
  for (int i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.raw(i)));
  return m;
}

cplx link(const EngineSpec& spec, cplx tau) {
  if (!spec.log_link) return spec.sign * tau;
  if (tau == cplx(0.0)) {
    throw SingularPointError(
        "point-legendre push-forward needs z1 != 0: the logarithmic link is "
        "singular at the origin",
        tau);
  }
  return std::log(tau);
}

TransformResult run_engine(const EngineSpec& spec, const FieldEvaluator& f,
                           const Point4& target, int order,
                           const NewtonOptions& options,
                           const std::array<double, 2>& seed) {
  if (f.chart != spec.source) {
    throw ChartMismatchError("legendre transform expects a field on chart " +
                             std::string(chart_name(spec.source)) +
                             ", got chart " +
                             std::string(chart_name(f.chart)) +
                             (f.label.empty() ? "" : " (" + f.label + ")"));
  }
  if (order < 1 || order > 4) {
    throw Error("legendre transform orders run from 1 to 4");
  }
  if (!(options.tol > 0.0)) throw Error("newton tolerance must be positive");

  const cplx tau1 = spec.sigma_dst * cplx(target[0], target[1]);
  const cplx tau2 = spec.sigma_dst * cplx(target[2], target[3]);
  const cplx rhs1 = link(spec, tau1);
  const cplx rhs2 = link(spec, std::conj(tau1));
  const double rhs_scale = std::max(1.0, std::abs(rhs1) + std::abs(rhs2));

  // the second pair passes through: fix the source z-coordinates now
  const double t_src = tau2.real() / spec.sigma_src;
  const double s_src = tau2.imag() / spec.sigma_src;

  // stage 1: point Newton on the two formally independent unknowns (w, wb);
  // conjugacy wb = conj(w) is preserved by the symmetric update and checked
  // afterwards rather than imposed
  cplx w = spec.sigma_src * cplx(seed[0], seed[1]);
  cplx wb = std::conj(w);
  Point4 S{};
  Mat2 jac{};
  int iterations = 0;
  bool converged = false;
  for (; iterations < options.max_iter; ++iterations) {
    S = Point4{((w + wb) / (2.0 * spec.sigma_src)).real(),
               ((w - wb) * cplx(0.0, -0.5) / spec.sigma_src).real(), t_src,
               s_src};
    const Jet local = f(S, 2);
    const cplx f0 = slot_derivative(local, spec.source, 0).value();
    const cplx f1 = slot_derivative(local, spec.source, 1).value();
    const cplx F1 = f0 - rhs1;
    const cplx F2 = f1 - rhs2;
    jac = Mat2{
        slot_derivative(slot_derivative(local, spec.source, 0), spec.source, 0)
            .value(),
        slot_derivative(slot_derivative(local, spec.source, 0), spec.source, 1)
            .value(),
        slot_derivative(slot_derivative(local, spec.source, 1), spec.source, 0)
            .value(),
        slot_derivative(slot_derivative(local, spec.source, 1), spec.source, 1)
            .value()};
    if (std::abs(F1) + std::abs(F2) <= options.tol * rhs_scale) {
      converged = true;
      break;
    }
    const Mat2 inv = invert(jac);
    w -= options.damping * (inv.a00 * F1 + inv.a01 * F2);
    wb -= options.damping * (inv.a10 * F1 + inv.a11 * F2);
  }
  if (!converged) {
    throw ConvergenceError("legendre transform: Newton did not reach " +
                           std::to_string(options.tol) + " within " +
                           std::to_string(options.max_iter) + " iterations");
  }
  const double drift = std::abs(wb - std::conj(w));
  if (drift > 1e-10 * std::max(1.0, std::abs(w))) {
    throw Error("legendre transform: the conjugate unknowns left the real "
                "slice (drift " +
                std::to_string(drift) + ")");
  }

  // stage 2: jet Newton for the preimage map, with the frozen base Jacobian;
  // every round is exact to one more graded order
  const int korder = order - 1;
  const Jet fjet = f(S, order);
  const Jet f0poly = slot_derivative(fjet, spec.source, 0);
  const Jet f1poly = slot_derivative(fjet, spec.source, 1);
  const Jet dx0 = jet_variable(0, 0.0, korder, 4);
  const Jet dx1 = jet_variable(1, 0.0, korder, 4);
  const Jet dx2 = jet_variable(2, 0.0, korder, 4);
  const Jet dx3 = jet_variable(3, 0.0, korder, 4);

  const Jet tau1_jet = Jet::constant(tau1, korder, 4) + spec.sigma_dst * dx0 +
                       (I * spec.sigma_dst) * dx1;
  const Jet tau1b_jet = Jet::constant(std::conj(tau1), korder, 4) +
                        spec.sigma_dst * dx0 - (I * spec.sigma_dst) * dx1;
  const Jet G1 = spec.log_link ? log(tau1_jet) : spec.sign * tau1_jet;
  const Jet G1b = spec.log_link ? log(tau1b_jet) : spec.sign * tau1b_jet;
  const double jet_scale = std::max({1.0, max_coeff(G1), max_coeff(G1b)});

  const double ratio = spec.sigma_dst / spec.sigma_src;
  const Jet dT = ratio * dx2;
  const Jet dS = ratio * dx3;
  Jet dW = Jet::constant(0.0, korder, 4);
  Jet dWb = Jet::constant(0.0, korder, 4);
  const Mat2 inv0 = invert(jac);
  bool jets_converged = false;
  for (int round = 0; round < 16; ++round) {
    const std::array<Jet, 4> disp{
        (dW + dWb) * (0.5 / spec.sigma_src),
        (dW - dWb) * (cplx(0.0, -0.5) / spec.sigma_src), dT, dS};
    const Jet F1 = evaluate_taylor(f0poly, disp) - G1;
    const Jet F2 = evaluate_taylor(f1poly, disp) - G1b;
    if (std::max(max_coeff(F1), max_coeff(F2)) <=
        options.tol * jet_scale) {
      jets_converged = true;
      break;
    }
    dW -= inv0.a00 * F1 + inv0.a01 * F2;
    dWb -= inv0.a10 * F1 + inv0.a11 * F2;
  }
  if (!jets_converged) {
    throw ConvergenceError(
        "legendre transform: the preimage jets did not stabilize");
  }

  // assemble the transformed potential from its gradient in the target chart
  const Jet W = Jet::constant(w, korder, 4) + dW;
  const Jet Wb = Jet::constant(wb, korder, 4) + dWb;
  const std::array<Jet, 4> disp{(dW + dWb) * (0.5 / spec.sigma_src),
                                (dW - dWb) * (cplx(0.0, -0.5) / spec.sigma_src),
                                dT, dS};
  Jet grad_c1 = spec.log_link ? W / tau1_jet : cplx(-spec.sign) * W;
  Jet grad_c1b = spec.log_link ? Wb / tau1b_jet : cplx(-spec.sign) * Wb;
  Jet grad_c2 = evaluate_taylor(slot_derivative(fjet, spec.source, 2), disp);
  Jet grad_c2b = evaluate_taylor(slot_derivative(fjet, spec.source, 3), disp);
  if (spec.value_flip) {
    grad_c2 = -grad_c2;
    grad_c2b = -grad_c2b;
  }
  const std::array<Jet, 4> grads{
      spec.sigma_dst * (grad_c1 + grad_c1b),
      (I * spec.sigma_dst) * (grad_c1 - grad_c1b),
      spec.sigma_dst * (grad_c2 + grad_c2b),
      (I * spec.sigma_dst) * (grad_c2 - grad_c2b)};

  const cplx f0v = slot_derivative(fjet, spec.source, 0).value();
  const cplx f1v = slot_derivative(fjet, spec.source, 1).value();
  const cplx pairing = w * f0v + wb * f1v;
  const cplx value =
      spec.value_flip ? pairing - fjet.value() : fjet.value() - pairing;

  TransformResult out;
  out.jet = jet_from_gradient(value, grads);
  out.preimage = S;
  out.iterations = iterations;
  out.conjugacy_drift = drift;
  return out;
}

OneVarResult run_one_var(const OneVarFunction& f, double target, int order,
                         const NewtonOptions& options, double seed,
                         double sign) {
  if (order < 1 || order > 4) {
    throw Error("legendre transform orders run from 1 to 4");
  }
  const double rhs = sign * target;
  const double rhs_scale = std::max(1.0, std::abs(rhs));
  double y = seed;
  double d2 = 0.0;
  int iterations = 0;
  bool converged = false;
  for (; iterations < options.max_iter; ++iterations) {
    const Jet local = f.eval(y, 2);
    const double F = derivative(local, 0).value().real() - rhs;
    d2 = derivative(derivative(local, 0), 0).value().real();
    if (std::abs(F) <= options.tol * rhs_scale) {
      converged = true;
      break;
    }
    if (std::abs(d2) <= 1e-14 * std::max(1.0, std::abs(F))) {
      throw Error("legendre transform: the one-variable Hessian vanishes; " +
                  f.label + " is not strictly convex or concave here");
    }
    y -= options.damping * F / d2;
  }
  if (!converged) {
    throw ConvergenceError("one-variable legendre transform: Newton did not "
                           "converge for " +
                           f.label);
  }
  if (std::abs(d2) <= 1e-14) {
    throw Error("legendre transform: the one-variable Hessian vanishes; " +
                f.label + " is not strictly convex or concave here");
  }

  const int korder = order - 1;
  const Jet fjet = f.eval(y, order);
  const Jet fp = derivative(fjet, 0);
  const Jet dx = jet_variable(0, 0.0, korder, 1);
  const Jet G = Jet::constant(rhs, korder, 1) + sign * dx;
  Jet dW = Jet::constant(0.0, korder, 1);
  bool jets_converged = false;
  for (int round = 0; round < 16; ++round) {
    const std::array<Jet, 1> disp{dW};
    const Jet F = evaluate_taylor(fp, disp) - G;
    if (max_coeff(F) <= options.tol * rhs_scale) {
      jets_converged = true;
      break;
    }
    dW -= (1.0 / d2) * F;
  }
  if (!jets_converged) {
    throw ConvergenceError(
        "one-variable legendre transform: the preimage jet did not stabilize");
  }
  const Jet W = Jet::constant(y, korder, 1) + dW;
  const std::array<Jet, 1> grads{cplx(-sign) * W};
  const double value = (fjet.value() - y * fp.value()).real();

  OneVarResult out;
  out.jet = jet_from_gradient(value, grads);
  out.preimage = y;
  out.iterations = iterations;
  return out;
}

}  // namespace

TransformResult forward_two_var(const FieldEvaluator& u, const Point4& target,
                                int order, const NewtonOptions& options,
                                const std::array<double, 2>& seed) {
  return run_engine({ChartId::ORIGINAL, 0.5, 1.0, 1.0, false, false}, u,
                    target, order, options, seed);
}

TransformResult invert_two_var(const FieldEvaluator& v, const Point4& target,
                               int order, const NewtonOptions& options,
                               const std::array<double, 2>& seed) {
  return run_engine({ChartId::LEGENDRE_CMA, 1.0, 0.5, -1.0, false, false}, v,
                    target, order, options, seed);
}

TransformResult push_forward_rot(const FieldEvaluator& psi,
                                 const Point4& target, int order,
                                 const NewtonOptions& options,
                                 const std::array<double, 2>& seed) {
  return run_engine({ChartId::ROT_LEGENDRE, 1.0, 0.5, 1.0, true, true}, psi,
                    target, order, options, seed);
}

FieldEvaluator forward_two_var_field(FieldEvaluator u, NewtonOptions options,
                                     std::array<double, 2> seed) {
  const std::string label = "legendre transform of " + u.label;
  return custom_field(ChartId::LEGENDRE_CMA, label,
                      [u = std::move(u), options, seed](const Point4& pt,
                                                        int order) {
                        return forward_two_var(u, pt, order, options, seed).jet;
                      });
}

FieldEvaluator invert_two_var_field(FieldEvaluator v, NewtonOptions options,
                                    std::array<double, 2> seed) {
  const std::string label = "inverse legendre transform of " + v.label;
  return custom_field(ChartId::ORIGINAL, label,
                      [v = std::move(v), options, seed](const Point4& pt,
                                                        int order) {
                        return invert_two_var(v, pt, order, options, seed).jet;
                      });
}

FieldEvaluator push_forward_rot_field(FieldEvaluator psi,
                                      NewtonOptions options,
                                      std::array<double, 2> seed) {
  const std::string label = "point-legendre push-forward of " + psi.label;
  return custom_field(
      ChartId::ORIGINAL, label,
      [psi = std::move(psi), options, seed](const Point4& pt, int order) {
        return push_forward_rot(psi, pt, order, options, seed).jet;
      });
}

OneVarResult forward_one_var(const OneVarFunction& u, double target, int order,
                             const NewtonOptions& options, double seed) {
  return run_one_var(u, target, order, options, seed, 1.0);
}

OneVarResult invert_one_var(const OneVarFunction& v, double target, int order,
                            const NewtonOptions& options, double seed) {
  return run_one_var(v, target, order, options, seed, -1.0);
}

}  // namespace heavenlift
