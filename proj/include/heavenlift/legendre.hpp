#pragma once

#include <array>
#include <functional>
#include <string>

#include "heavenlift/fields.hpp"

namespace heavenlift {

struct NewtonOptions {
  double tol = 1e-12;
  int max_iter = 50;
  double damping = 1.0;
};

// Jet of the transformed potential at `target`, plus solver diagnostics.
// `preimage` is the solved source point; `conjugacy_drift` measures how far
// the two formally independent unknowns moved off the conjugate slice.
struct TransformResult {
  Jet jet;
  Point4 preimage;
  int iterations = 0;
  double conjugacy_drift = 0.0;
};

// v(p, pbar, z2, zbar2) = u - z1 u_1 - zbar1 u_1bar with p = u_1, solved for
// the source point z by Newton.  `target` is a LEGENDRE_CMA chart point and
// `seed` the starting (x, y) guess in the source chart.
TransformResult forward_two_var(const FieldEvaluator& u, const Point4& target,
                                int order, const NewtonOptions& options = {},
                                const std::array<double, 2>& seed = {0.0, 0.0});

// Inverse duality u = v - p v_p - pbar v_pbar with z1 = -v_p; `target` is an
// ORIGINAL chart point.
TransformResult invert_two_var(const FieldEvaluator& v, const Point4& target,
                               int order, const NewtonOptions& options = {},
                               const std::array<double, 2>& seed = {0.0, 0.0});

// Point-Legendre map from the rotation chart: zeta1 = psi_q, z1 = e^{zeta1},
// u = q psi_q + qbar psi_qbar - psi, with the principal log branch.
TransformResult push_forward_rot(const FieldEvaluator& psi,
                                 const Point4& target, int order,
                                 const NewtonOptions& options = {},
                                 const std::array<double, 2>& seed = {0.0,
                                                                     0.0});

// The same transforms packaged as field evaluators, so transformed
// potentials feed directly into residual sweeps and curvature checks.
FieldEvaluator forward_two_var_field(FieldEvaluator u,
                                     NewtonOptions options = {},
                                     std::array<double, 2> seed = {0.0, 0.0});
FieldEvaluator invert_two_var_field(FieldEvaluator v,
                                    NewtonOptions options = {},
                                    std::array<double, 2> seed = {0.0, 0.0});
FieldEvaluator push_forward_rot_field(FieldEvaluator psi,
                                      NewtonOptions options = {},
                                      std::array<double, 2> seed = {0.0, 0.0});

// One-variable profile u(y) as jets in a single variable.
struct OneVarFunction {
  std::string label;
  std::function<Jet(double, int)> eval;
};

struct OneVarResult {
  Jet jet;
  double preimage = 0.0;
  int iterations = 0;
};

// v(q) = u - y u_y with q = u_y, and its inverse u = v - q v_q with
// y = -v_q.
OneVarResult forward_one_var(const OneVarFunction& u, double target, int order,
                             const NewtonOptions& options = {},
                             double seed = 0.0);
OneVarResult invert_one_var(const OneVarFunction& v, double target, int order,
                            const NewtonOptions& options = {},
                            double seed = 0.0);

}  // namespace heavenlift
