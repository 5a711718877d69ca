#pragma once

#include <functional>
#include <vector>

#include "heavenlift/jets.hpp"

namespace heavenlift {

// Holomorphic polynomial b(z) = sum c_k z^k, degree capped at 8.  The
// anti-holomorphic partner bbar(zbar) = sum conj(c_k) zbar^k is derived on
// demand rather than stored, so the pair can never drift apart.
struct HolomorphicPoly {
  std::vector<cplx> coeffs;

  HolomorphicPoly() : coeffs{cplx(0.0, 0.0)} {}
  explicit HolomorphicPoly(std::vector<cplx> c);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  cplx eval(cplx z) const;
  Jet eval(const Jet& z) const;
  // conj-coefficient polynomial at a zbar argument
  cplx eval_bar(cplx zbar) const;
  Jet eval_bar(const Jet& zbar) const;
};

// Real polynomial for the smooth real-valued parameter functions r(y), k(y).
struct RealPoly {
  std::vector<double> coeffs;

  RealPoly() : coeffs{0.0} {}
  explicit RealPoly(std::vector<double> c);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  double eval(double y) const;
  double deriv(double y) const;
  Jet eval(const Jet& y) const;
  bool is_constant() const;
};

// Adaptive Simpson quadrature of a complex-valued integrand on [a, b] to
// absolute tolerance tol.  Throws ConvergenceError past depth `max_depth`.
cplx adaptive_simpson(const std::function<cplx(double)>& f, double a, double b,
                      double tol = 1e-12, int max_depth = 40);

// K(z, zbar) with d_z d_zbar K = (b(z) + bbar(zbar)) / (z + zbar)^2, in
// closed form.  The gauge (K's purely z-holomorphic and zbar-antiholomorphic
// freedom) is fixed by the explicit antiderivative construction; consumers
// only read derivatives the gauge cannot touch.  Requires the constant term
// of z + zbar to have positive real part.
Jet double_integral_kernel(const HolomorphicPoly& b, const Jet& z, const Jet& zbar);

// T(y, z, zbar) = 2i * integral_0^y ln[(zbar + 2ik(s)) / (z - 2ik(s))] ds.
//
// y_integral_fixed: jet of T in the z/zbar displacement directions at frozen
// y.  The constant coefficient and the pure z / zbar derivative coefficients
// come from adaptive quadrature of the closed-form integrand derivatives
// (mixed z-zbar partials of T vanish identically).
Jet y_integral_fixed(const RealPoly& k, double y, const Jet& z, const Jet& zbar);

// Closed-form y-derivative T_y = 2i ln[(zbar + 2ik(y)) / (z - 2ik(y))] as a
// jet, with y itself supplied as a jet so the result carries y-direction
// coefficients too.
Jet y_integral_rate(const RealPoly& k, const Jet& y, const Jet& z, const Jet& zbar);

// Full jet of T when variable `yvar` of the ambient chart is y.  The z and
// zbar jets must not depend on variable yvar; coefficients with a y-power
// come from the closed-form rate, the rest from the frozen-y jet.
Jet y_integral_term(const RealPoly& k, int yvar, const Jet& y, const Jet& z,
                    const Jet& zbar);

}  // namespace heavenlift
