#pragma once

#include <array>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "heavenlift/fields.hpp"

namespace heavenlift {

enum class MetricSignature { euclidean, ultra_hyperbolic, degenerate };

const char* signature_name(MetricSignature s);

// Kahler data of a potential u at one point, in the original chart: metric
// g[i][j] = u_{z_i zbar_j}, curvature R[i][j][k][l] = R_{i jbar k lbar},
// Ricci computed both by contraction and as -d_i d_jbar log det g.
struct KahlerData {
  std::array<std::array<cplx, 2>, 2> g{};
  cplx det_g{};
  std::array<std::array<std::array<std::array<cplx, 2>, 2>, 2>, 2> riemann{};
  std::array<std::array<cplx, 2>, 2> ricci{};
  std::array<std::array<cplx, 2>, 2> ricci_log{};
  MetricSignature signature = MetricSignature::degenerate;
};

// Needs an order >= 4 jet with original-chart slot conventions.
KahlerData kahler_from_jet(const Jet& u_jet);

KahlerData kahler_at(const FieldEvaluator& u, const Point4& pt);

// Largest absolute Riemann component; above ~1e-3 it certifies a genuinely
// curved metric at this point.
double nonflatness_certificate(const KahlerData& data);

// Worst disagreement between the two Ricci routes, normalized by the larger
// entry scale.
double ricci_consistency(const KahlerData& data);

// A first-order symmetry candidate: evaluates the characteristic of one
// would-be point symmetry on the solution's first jet.
struct SymmetryCharacteristic {
  std::string name;
  std::function<cplx(const Point4&, const Jet&)> eval;
};

using CandidateAlgebra = std::vector<SymmetryCharacteristic>;

SymmetryCharacteristic translation_characteristic(int slot);
SymmetryCharacteristic rotation_characteristic();
SymmetryCharacteristic dilation_characteristic();

// Four translations, the z1-plane rotation, and the dilation-type shift.
CandidateAlgebra default_algebra();

struct InvarianceResult {
  int rank = 0;
  double min_singular_value = 0.0;
  double max_singular_value = 0.0;
};

// Stacks characteristic values into a points-by-candidates matrix and ranks
// it.  Full column rank means no constant-coefficient combination of the
// candidates vanishes on the sample, so the solution is invariant under none
// of them.  Requires at least twice as many points as candidates.
InvarianceResult invariance_rank(const FieldEvaluator& field,
                                 const CandidateAlgebra& algebra,
                                 std::span<const Point4> points);

}  // namespace heavenlift
