#pragma once

#include <optional>
#include <vector>

#include "heavenlift/fields.hpp"
#include "heavenlift/funcspace.hpp"
#include "heavenlift/residuals.hpp"

namespace heavenlift {

// ---------------------------------------------------------------------------
// Lifted families: four-variable solutions assembled from lower-dimensional
// seed data.
// ---------------------------------------------------------------------------

// One spectral mode of the elliptic lift.  alpha selects the mode (|alpha|
// must be at least 1 so the branch split is real), F and G weight its two
// branches.
struct HelmholtzMode {
  cplx alpha{1.0, 0.0};
  cplx F{0.0, 0.0};
  cplx G{0.0, 0.0};
};

struct HelmholtzLiftParams {
  std::vector<HelmholtzMode> modes;
  // scales the second-coordinate exponents by (1 + exponent_perturbation);
  // any nonzero value detunes the mode relations and serves as the built-in
  // negative control
  double exponent_perturbation = 0.0;
};

// Superposition v = -ln w on the chart (Re p, Im p, Re z2, Im z2), with w a
// real exponential sum.  Throws SingularPointError wherever w <= 0.
FieldEvaluator helmholtz_lift(const HelmholtzLiftParams& params);

// One travelling mode of the hyperbolic lift, e^{-i(alpha t + beta z
// +- gamma q + delta p)} with gamma = sqrt(alpha^2 + beta^2) and delta fixed
// by the partner system (solved numerically, never transcribed).
struct WaveMode {
  double alpha = 1.0;
  double beta = 1.0;
  cplx amplitude{1.0, 0.0};
  WaveBranch branch = WaveBranch::plus;
};

struct WaveLiftParams {
  std::vector<WaveMode> modes;
  // append the complex-conjugate partner of every mode so v is real-valued
  bool realize = false;
};

FieldEvaluator wave_lift(const WaveLiftParams& params);

// Rotation-reduced hyperbolic family on the chart (x, y, Re z, Im z), built
// from a holomorphic profile b(z), an additive real profile r(y), and (for
// variant C) a rate function k(y):
//   A  no y-dependent correction term
//   B  correction 2i y (ln zb - ln z)
//   C  correction 2i * integral_0^y ln[(zb + 2ik(s)) / (z - 2ik(s))] ds
enum class BFVariant { A, B, C };

struct BFLiftParams {
  BFVariant variant = BFVariant::A;
  HolomorphicPoly b;
  RealPoly r;
  RealPoly k;
  // when set, replaces r by the linear profile the rotational constraint
  // forces for lambda = e^{i alpha}: slope 2(alpha - pi) for variant A and
  // 2 alpha for B and C, intercept r0
  std::optional<double> constrained_alpha;
  double r0 = 0.0;
};

FieldEvaluator bf_lift(const BFLiftParams& params);

// ---------------------------------------------------------------------------
// Seed solutions of the lower-dimensional equations.
// ---------------------------------------------------------------------------

// theta = sum c e^{kappa z2 - zbar2 / kappa} solves theta_{2 2b} + theta = 0.
struct HelmholtzSeedMode {
  cplx c{1.0, 0.0};
  cplx kappa{0.0, 1.0};
};
FieldEvaluator helmholtz_seed(std::vector<HelmholtzSeedMode> modes);
// the real seed sin(z2 + zbar2)
FieldEvaluator helmholtz_seed_sin();

// f = sum c e^{a Re p + kappa z2 - (a^2/kappa) zbar2} solves
// f_{Re p, Re p} + f_{2 2b} = 0.
struct LaplaceSeedMode {
  cplx c{1.0, 0.0};
  double a = 1.0;
  cplx kappa{0.0, 1.0};
};
FieldEvaluator laplace_seed(std::vector<LaplaceSeedMode> modes);

// f = sum amp e^{i(kq q + kt t + kz z)} with kq^2 = kt^2 + kz^2 solves
// f_qq = f_tt + f_zz.
struct WaveSeedMode {
  cplx amplitude{1.0, 0.0};
  double kq = 1.0;
  double kt = 1.0;
  double kz = 0.0;
};
FieldEvaluator wave_seed(std::vector<WaveSeedMode> modes);

// v = ln(x + b(z)) + ln(x + bbar(zb)) - 2 ln(z + zb) solves
// v_{z zb} = e^v (v_xx + v_x^2).
FieldEvaluator bf_seed(HolomorphicPoly b);

// Flat potential u = c1 c1b + sign * c2 c2b on the original chart; sign +1
// gives determinant +1, sign -1 gives determinant -1.
FieldEvaluator flat_potential(double sign);

}  // namespace heavenlift
