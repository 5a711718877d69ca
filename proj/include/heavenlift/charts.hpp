#pragma once

#include <array>
#include <string>

#include "heavenlift/jets.hpp"

namespace heavenlift {

using Point4 = std::array<double, 4>;

// Coordinate charts the solution families and equations live in.  Each chart
// fixes four real coordinates and, where the equations are written in complex
// variables, how the complex pairs are assembled:
//   ORIGINAL       x,y,t,s with c1 = (x+iy)/2, c2 = (t+is)/2 (so the complex
//                  derivative along c1 is d_x - i d_y: Wirtinger scale 2)
//   REAL_XYZT      x,y,z,t; equations use plain real partials
//   LEGENDRE_CMA   Re p, Im p, Re z2, Im z2 with p = x0+ix1, z2 = x2+ix3
//   LEGENDRE_HCMA  p,q,t,z, all real
//   ROT_LEGENDRE   x,y, Re z, Im z with q = x+iy, z = x2+ix3
enum class ChartId { ORIGINAL, REAL_XYZT, LEGENDRE_CMA, LEGENDRE_HCMA, ROT_LEGENDRE };

const char* chart_name(ChartId chart);

// true if the chart's equations address complex slots rather than the real
// coordinates directly
bool chart_has_complex_slots(ChartId chart);

// factor relating the chart's complex derivative to the standard Wirtinger
// half-sum (2 for ORIGINAL, whose complex coordinates are half of x + iy)
double chart_wirtinger_scale(ChartId chart);

// Derivative of a real-coordinate jet along chart slot 0..3.  For complex
// charts the slots are (c1, c1bar, c2, c2bar); for real charts they are the
// coordinates themselves.
Jet slot_derivative(const Jet& f, ChartId chart, int slot);

// Jets of the four real coordinate functions at a point.
std::array<Jet, 4> coordinate_jets(const Point4& pt, int order);

}  // namespace heavenlift
