#pragma once

#include <span>

#include "heavenlift/equations.hpp"
#include "heavenlift/fields.hpp"

namespace heavenlift {

struct ResidualOptions {
  cplx lambda = cplx(0.0, 1.0);
  // sign convention for the inverse partner relations PARTNER_INV_*: the
  // elliptic branch carries the minus sign, the hyperbolic one the plus sign
  bool elliptic = true;
};

// One evaluated residual.  `value` is the signed sum of the equation's terms,
// `magnitude` its absolute value, and `normalized` the magnitude divided by
// the largest participating term (floored at 1), so a normalized residual
// near machine epsilon certifies cancellation rather than smallness of the
// field.
struct ResidualRecord {
  EquationId equation;
  Point4 point{};
  cplx value{};
  double magnitude = 0.0;
  double normalized = 0.0;
};

ResidualRecord residual(EquationId eq, const FieldEvaluator& field,
                        const Point4& pt, const ResidualOptions& opts = {});
ResidualRecord residual_pair(EquationId eq, const FieldEvaluator& first,
                             const FieldEvaluator& second, const Point4& pt,
                             const ResidualOptions& opts = {});
ResidualRecord residual_triple(EquationId eq, const FieldEvaluator& u,
                               const FieldEvaluator& phi, const FieldEvaluator& psi,
                               const Point4& pt, const ResidualOptions& opts = {});

// Checks that small residuals of the premise equations propagate to a small
// residual of the consequence equation on the same field (single-field
// equations only).
struct ConsequenceReport {
  double max_premise = 0.0;
  double max_consequence = 0.0;
  bool premises_ok = false;
  bool consequence_ok = false;
};
ConsequenceReport verify_consequence(const FieldEvaluator& field,
                                     std::span<const EquationId> premises,
                                     EquationId consequence,
                                     std::span<const Point4> points, double tol,
                                     const ResidualOptions& opts = {});

// Residual sweep over a point cloud.  Points where the evaluator raises a
// domain error are counted in `failures` and excluded from the statistics.
// The parallel and serial versions aggregate in index order and agree
// byte-for-byte.
struct SweepResult {
  EquationId equation;
  int points = 0;
  int failures = 0;
  double max_normalized = 0.0;
  double mean_normalized = 0.0;
  Point4 worst_point{};
};
SweepResult sweep(EquationId eq, const FieldEvaluator& field,
                  std::span<const Point4> points, const ResidualOptions& opts = {});
SweepResult sweep_serial(EquationId eq, const FieldEvaluator& field,
                         std::span<const Point4> points,
                         const ResidualOptions& opts = {});

// Travelling-mode branch selector for the hyperbolic partner system.
enum class WaveBranch { plus, minus };

// Solves the first-order partner system for the fourth frequency of the mode
// e^{-i(alpha t + beta z +- gamma q + delta p)}, gamma = sqrt(alpha^2+beta^2),
// by substituting trial jets rather than transcribing a formula.  The two
// independent partner equations must agree on delta to 1e-12; degenerate
// modes (beta = 0 or gamma = 0) are rejected.
double dispersion_delta(double alpha, double beta, WaveBranch branch);

}  // namespace heavenlift
