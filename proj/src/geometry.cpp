#include "heavenlift/geometry.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "heavenlift/errors.hpp"

namespace heavenlift {

namespace {

constexpr cplx I{0.0, 1.0};
constexpr ChartId kChart = ChartId::ORIGINAL;

int unbarred(int i) { return 2 * i; }
int barred(int j) { return 2 * j + 1; }

cplx dv(const Jet& u, std::initializer_list<int> slots) {
  Jet d = u;
  for (int s : slots) d = slot_derivative(d, kChart, s);
  return d.value();
}

MetricSignature classify(const std::array<std::array<cplx, 2>, 2>& g) {
  // real quadratic form of the Hermitian metric in (x1, y1, x2, y2) order
  Eigen::Matrix4d M;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const cplx a = g[i][j];
      M(2 * i, 2 * j) = a.real();
      M(2 * i, 2 * j + 1) = -a.imag();
      M(2 * i + 1, 2 * j) = a.imag();
      M(2 * i + 1, 2 * j + 1) = a.real();
    }
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(
      0.5 * (M + M.transpose()));
  const Eigen::Vector4d ev = solver.eigenvalues();
  const double scale = ev.cwiseAbs().maxCoeff();
  if (scale == 0.0) return MetricSignature::degenerate;
  int pos = 0, neg = 0;
  for (int k = 0; k < 4; ++k) {
    if (ev[k] > 1e-10 * scale) {
      ++pos;
    } else if (ev[k] < -1e-10 * scale) {
      ++neg;
    }
  }
  if (pos == 4 || neg == 4) return MetricSignature::euclidean;
  if (pos == 2 && neg == 2) return MetricSignature::ultra_hyperbolic;
  return MetricSignature::degenerate;
}

}  // namespace

const char* signature_name(MetricSignature s) {
  switch (s) {
    case MetricSignature::euclidean: return "euclidean";
    case MetricSignature::ultra_hyperbolic: return "ultra_hyperbolic";
    case MetricSignature::degenerate: return "degenerate";
  }
  return "unknown";
}

KahlerData kahler_from_jet(const Jet& u) {
  if (u.nvars() != 4 || u.order() < 4) {
    throw Error("curvature needs an order-4 jet in four variables");
  }

  KahlerData out;
  double gscale = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.g[i][j] = dv(u, {unbarred(i), barred(j)});
      gscale = std::max(gscale, std::abs(out.g[i][j]));
    }
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (std::abs(out.g[i][j] - std::conj(out.g[j][i])) >
          1e-10 * std::max(1.0, gscale)) {
        throw Error("metric block is not Hermitian; the potential is not "
                    "real-valued on this slice");
      }
    }
  }
  out.det_g = out.g[0][0] * out.g[1][1] - out.g[0][1] * out.g[1][0];
  if (std::abs(out.det_g) <= 1e-12 * std::max(1.0, gscale * gscale)) {
    throw Error("metric is degenerate at this point (det g ~ 0)");
  }

  // plain matrix inverse of g; the curvature and Ricci contractions below
  // use it as traces tr(ginv * A * ginv * B), which is what makes the two
  // Ricci routes agree
  std::array<std::array<cplx, 2>, 2> ginv;
  ginv[0][0] = out.g[1][1] / out.det_g;
  ginv[1][1] = out.g[0][0] / out.det_g;
  ginv[0][1] = -out.g[0][1] / out.det_g;
  ginv[1][0] = -out.g[1][0] / out.det_g;

  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          cplx sum = -dv(u, {unbarred(i), barred(j), unbarred(k), barred(l)});
          for (int m = 0; m < 2; ++m) {
            for (int n = 0; n < 2; ++n) {
              sum += ginv[n][m] * dv(u, {unbarred(i), unbarred(k), barred(n)}) *
                     dv(u, {unbarred(m), barred(j), barred(l)});
            }
          }
          out.riemann[i][j][k][l] = sum;
        }
      }
    }
  }

  // Ricci route one: contract the first index pair with the inverse metric
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      cplx sum = 0.0;
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          sum += ginv[j][i] * out.riemann[i][j][k][l];
        }
      }
      out.ricci[k][l] = sum;
    }
  }

  // Ricci route two: -d_i d_jbar log det g on jets; a negative determinant
  // only shifts the log by a constant, so flip its sign first
  std::array<std::array<Jet, 2>, 2> gj{
      {{slot_derivative(slot_derivative(u, kChart, 0), kChart, 1),
        slot_derivative(slot_derivative(u, kChart, 0), kChart, 3)},
       {slot_derivative(slot_derivative(u, kChart, 2), kChart, 1),
        slot_derivative(slot_derivative(u, kChart, 2), kChart, 3)}}};
  Jet det_jet = gj[0][0] * gj[1][1] - gj[0][1] * gj[1][0];
  if (det_jet.value().real() < 0.0) det_jet = -1.0 * det_jet;
  const Jet logdet = log(det_jet);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.ricci_log[i][j] =
          -slot_derivative(slot_derivative(logdet, kChart, unbarred(i)), kChart,
                           barred(j))
               .value();
    }
  }

  out.signature = classify(out.g);
  return out;
}

KahlerData kahler_at(const FieldEvaluator& u, const Point4& pt) {
  if (u.chart != ChartId::ORIGINAL) {
    throw ChartMismatchError(
        "curvature expects an original-chart potential, got chart " +
        std::string(chart_name(u.chart)) +
        (u.label.empty() ? "" : " (" + u.label + ")"));
  }
  return kahler_from_jet(u(pt, 4));
}

double nonflatness_certificate(const KahlerData& data) {
  double m = 0.0;
  for (const auto& a : data.riemann) {
    for (const auto& b : a) {
      for (const auto& c : b) {
        for (const cplx& r : c) m = std::max(m, std::abs(r));
      }
    }
  }
  return m;
}

double ricci_consistency(const KahlerData& data) {
  double diff = 0.0, scale = 1.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      diff = std::max(diff, std::abs(data.ricci[i][j] - data.ricci_log[i][j]));
      scale = std::max({scale, std::abs(data.ricci[i][j]),
                        std::abs(data.ricci_log[i][j])});
    }
  }
  return diff / scale;
}

SymmetryCharacteristic translation_characteristic(int slot) {
  if (slot < 0 || slot > 3) throw Error("translation slot must be 0..3");
  return {"translation_" + std::to_string(slot),
          [slot](const Point4&, const Jet& j) {
            return slot_derivative(j, kChart, slot).value();
          }};
}

SymmetryCharacteristic rotation_characteristic() {
  return {"rotation_z1", [](const Point4& pt, const Jet& j) {
            const cplx z1 = 0.5 * cplx(pt[0], pt[1]);
            return I * (z1 * slot_derivative(j, kChart, 0).value() -
                        std::conj(z1) * slot_derivative(j, kChart, 1).value());
          }};
}

SymmetryCharacteristic dilation_characteristic() {
  return {"dilation_shift", [](const Point4& pt, const Jet& j) {
            const cplx z1 = 0.5 * cplx(pt[0], pt[1]);
            return j.value() - z1 * slot_derivative(j, kChart, 0).value() -
                   std::conj(z1) * slot_derivative(j, kChart, 1).value();
          }};
}

CandidateAlgebra default_algebra() {
  CandidateAlgebra algebra;
  for (int slot = 0; slot < 4; ++slot) {
    algebra.push_back(translation_characteristic(slot));
  }
  algebra.push_back(rotation_characteristic());
  algebra.push_back(dilation_characteristic());
  return algebra;
}

InvarianceResult invariance_rank(const FieldEvaluator& field,
                                 const CandidateAlgebra& algebra,
                                 std::span<const Point4> points) {
  if (field.chart != ChartId::ORIGINAL) {
    throw ChartMismatchError(
        "the candidate algebra acts on original-chart potentials");
  }
  if (algebra.empty()) throw Error("candidate algebra is empty");
  const auto n = static_cast<Eigen::Index>(points.size());
  const auto k = static_cast<Eigen::Index>(algebra.size());
  if (n < 2 * k) {
    throw Error("invariance rank needs at least twice as many points (" +
                std::to_string(n) + ") as candidates (" + std::to_string(k) +
                ")");
  }
  Eigen::MatrixXcd M(n, k);
  for (Eigen::Index p = 0; p < n; ++p) {
    const Jet j = field(points[p], 1);
    for (Eigen::Index s = 0; s < k; ++s) {
      M(p, s) = algebra[s].eval(points[p], j);
    }
  }
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
  const Eigen::VectorXd sv = svd.singularValues();
  InvarianceResult out;
  out.max_singular_value = sv.size() > 0 ? sv(0) : 0.0;
  out.min_singular_value = sv.size() > 0 ? sv(sv.size() - 1) : 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > 1e-8 * out.max_singular_value) ++out.rank;
  }
  if (out.max_singular_value == 0.0) out.rank = 0;
  return out;
}

}  // namespace heavenlift
