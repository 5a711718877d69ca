#include "heavenlift/charts.hpp"

#include "heavenlift/errors.hpp"

namespace heavenlift {

const char* chart_name(ChartId chart) {
  switch (chart) {
    case ChartId::ORIGINAL: return "original";
    case ChartId::REAL_XYZT: return "real_xyzt";
    case ChartId::LEGENDRE_CMA: return "legendre_cma";
    case ChartId::LEGENDRE_HCMA: return "legendre_hcma";
    case ChartId::ROT_LEGENDRE: return "rot_legendre";
  }
  return "?";
}

bool chart_has_complex_slots(ChartId chart) {
  switch (chart) {
    case ChartId::ORIGINAL:
    case ChartId::LEGENDRE_CMA:
    case ChartId::ROT_LEGENDRE:
      return true;
    case ChartId::REAL_XYZT:
    case ChartId::LEGENDRE_HCMA:
      return false;
  }
  return false;
}

double chart_wirtinger_scale(ChartId chart) {
  return chart == ChartId::ORIGINAL ? 2.0 : 1.0;
}

Jet slot_derivative(const Jet& f, ChartId chart, int slot) {
  if (slot < 0 || slot >= 4) throw Error("slot_derivative: slot out of range");
  if (!chart_has_complex_slots(chart)) return derivative(f, slot);
  const double scale = chart_wirtinger_scale(chart);
  const WirtingerPair pair = slot < 2 ? WirtingerPair{0, 1} : WirtingerPair{2, 3};
  const bool conjugate = (slot % 2) == 1;
  return wirtinger_derivative(f, pair, conjugate, scale);
}

std::array<Jet, 4> coordinate_jets(const Point4& pt, int order) {
  return {jet_variable(0, pt[0], order, 4), jet_variable(1, pt[1], order, 4),
          jet_variable(2, pt[2], order, 4), jet_variable(3, pt[3], order, 4)};
}

}  // namespace heavenlift
