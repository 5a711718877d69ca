#include "heavenlift/funcspace.hpp"

#include <cmath>

namespace heavenlift {

namespace {

constexpr int kMaxPolyDegree = 8;

void check_log_arg(cplx v, const char* what) {
  if (v == cplx(0.0, 0.0) || (v.real() < 0.0 && v.imag() == 0.0))
    throw SingularPointError(std::string(what) + " hits the log branch cut", v);
}

}  // namespace

HolomorphicPoly::HolomorphicPoly(std::vector<cplx> c) : coeffs(std::move(c)) {
  if (coeffs.empty()) coeffs.push_back(cplx(0.0, 0.0));
  if (degree() > kMaxPolyDegree)
    throw Error("polynomial degree " + std::to_string(degree()) + " exceeds cap 8");
}

cplx HolomorphicPoly::eval(cplx z) const {
  cplx r = coeffs.back();
  for (int k = degree() - 1; k >= 0; --k) r = r * z + coeffs[static_cast<size_t>(k)];
  return r;
}

Jet HolomorphicPoly::eval(const Jet& z) const {
  Jet r = Jet::constant(coeffs.back(), z.order(), z.nvars());
  for (int k = degree() - 1; k >= 0; --k) r = r * z + coeffs[static_cast<size_t>(k)];
  return r;
}

cplx HolomorphicPoly::eval_bar(cplx zbar) const {
  cplx r = std::conj(coeffs.back());
  for (int k = degree() - 1; k >= 0; --k) r = r * zbar + std::conj(coeffs[static_cast<size_t>(k)]);
  return r;
}

Jet HolomorphicPoly::eval_bar(const Jet& zbar) const {
  Jet r = Jet::constant(std::conj(coeffs.back()), zbar.order(), zbar.nvars());
  for (int k = degree() - 1; k >= 0; --k) r = r * zbar + std::conj(coeffs[static_cast<size_t>(k)]);
  return r;
}

RealPoly::RealPoly(std::vector<double> c) : coeffs(std::move(c)) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  if (degree() > kMaxPolyDegree)
    throw Error("polynomial degree " + std::to_string(degree()) + " exceeds cap 8");
}

double RealPoly::eval(double y) const {
  double r = coeffs.back();
  for (int k = degree() - 1; k >= 0; --k) r = r * y + coeffs[static_cast<size_t>(k)];
  return r;
}

double RealPoly::deriv(double y) const {
  if (degree() == 0) return 0.0;
  double r = coeffs.back() * degree();
  for (int k = degree() - 1; k >= 1; --k) r = r * y + coeffs[static_cast<size_t>(k)] * k;
  return r;
}

Jet RealPoly::eval(const Jet& y) const {
  Jet r = Jet::constant(coeffs.back(), y.order(), y.nvars());
  for (int k = degree() - 1; k >= 0; --k) r = r * y + cplx(coeffs[static_cast<size_t>(k)], 0.0);
  return r;
}

bool RealPoly::is_constant() const {
  for (size_t k = 1; k < coeffs.size(); ++k)
    if (coeffs[k] != 0.0) return false;
  return true;
}

namespace {

cplx simpson_slice(const std::function<cplx(double)>& f, double a, cplx fa, cplx fm,
                   cplx fb, double b, cplx whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const cplx flm = f(0.5 * (a + m));
  const cplx frm = f(0.5 * (m + b));
  const cplx left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const cplx right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const cplx delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth <= 0) throw ConvergenceError("adaptive quadrature exceeded its depth budget");
  return simpson_slice(f, a, fa, flm, fm, m, left, tol * 0.5, depth - 1) +
         simpson_slice(f, m, fm, frm, fb, b, right, tol * 0.5, depth - 1);
}

}  // namespace

cplx adaptive_simpson(const std::function<cplx(double)>& f, double a, double b, double tol,
                      int max_depth) {
  if (a == b) return cplx(0.0, 0.0);
  const cplx fa = f(a);
  const cplx fb = f(b);
  const cplx fm = f(0.5 * (a + b));
  const cplx whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_slice(f, a, fa, fm, fb, b, whole, tol, max_depth);
}

Jet double_integral_kernel(const HolomorphicPoly& b, const Jet& z, const Jet& zbar) {
  if (z.order() != zbar.order() || z.nvars() != zbar.nvars())
    throw Error("z and zbar jets must share one shape");
  const cplx s0 = z.value() + zbar.value();
  if (!(s0.real() > 0.0))
    throw SingularPointError("kernel evaluation needs Re(z + zbar) > 0", s0);
  const Jet logs = log(z + zbar);
  const int order = z.order();
  const int nvars = z.nvars();
  const int d = b.degree();

  // b-part: divide b(t) by (t + zbar), i.e. synthetic division at root -zbar:
  //   b(t) = q(t) (t + zbar) + b(-zbar),  q_j carrying jet coefficients.
  // Then  K_b = -[ Q(z) + b(-zbar) ln(z + zbar) ]  with Q the antiderivative
  // of q, which gives d_z K_b = -b(z)/(z+zbar) exactly.
  const Jet root_b = -zbar;
  std::vector<Jet> q(static_cast<size_t>(std::max(d, 1)), Jet(order, nvars));
  Jet rem_b = Jet::constant(b.coeffs.back(), order, nvars);
  for (int j = d - 1; j >= 0; --j) {
    q[static_cast<size_t>(j)] = rem_b;
    rem_b = rem_b * root_b + b.coeffs[static_cast<size_t>(j)];
  }
  Jet kb = rem_b * logs;  // rem_b = b(-zbar)
  Jet zpow = z;           // z^{j+1}
  for (int j = 0; j < d; ++j) {
    kb += q[static_cast<size_t>(j)] * zpow / cplx(j + 1.0, 0.0);
    zpow = zpow * z;
  }

  // mirror part for bbar: divide bbar(t) by (t + z), remainder bbar(-z)
  const Jet root_bb = -z;
  std::vector<Jet> qb(static_cast<size_t>(std::max(d, 1)), Jet(order, nvars));
  Jet rem_bb = Jet::constant(std::conj(b.coeffs.back()), order, nvars);
  for (int j = d - 1; j >= 0; --j) {
    qb[static_cast<size_t>(j)] = rem_bb;
    rem_bb = rem_bb * root_bb + std::conj(b.coeffs[static_cast<size_t>(j)]);
  }
  Jet kbb = rem_bb * logs;
  Jet zbpow = zbar;
  for (int j = 0; j < d; ++j) {
    kbb += qb[static_cast<size_t>(j)] * zbpow / cplx(j + 1.0, 0.0);
    zbpow = zbpow * zbar;
  }

  return -(kb + kbb);
}

Jet y_integral_fixed(const RealPoly& k, double y, const Jet& z, const Jet& zbar) {
  if (z.order() != zbar.order() || z.nvars() != zbar.nvars())
    throw Error("z and zbar jets must share one shape");
  const int order = z.order();
  const cplx z0 = z.value();
  const cplx zb0 = zbar.value();
  const cplx two_i(0.0, 2.0);

  // Taylor polynomial of T in (z, zbar) about (z0, zb0): mixed partials
  // vanish, the pure ones reduce to s-integrals of elementary powers.
  Jet poly(order, 2);
  poly.set_coeff(MultiIndex{},
                 adaptive_simpson(
                     [&](double s) {
                       const cplx twoik(0.0, 2.0 * k.eval(s));
                       const cplx num = zb0 + twoik;
                       const cplx den = z0 - twoik;
                       check_log_arg(num, "y-integral numerator");
                       check_log_arg(den, "y-integral denominator");
                       return two_i * (std::log(num) - std::log(den));
                     },
                     0.0, y));
  double fact = 1.0;  // (a-1)! running
  for (int a = 1; a <= order; ++a) {
    if (a > 1) fact *= (a - 1);
    const double sign = (a % 2 == 0) ? 1.0 : -1.0;
    // d_z^a T = 2i (-1)^a (a-1)! \int (z - 2ik)^{-a} ds
    const cplx dz = two_i * sign * fact *
                    adaptive_simpson(
                        [&](double s) {
                          const cplx den = z0 - cplx(0.0, 2.0 * k.eval(s));
                          if (std::abs(den) < 1e-12)
                            throw SingularPointError("y-integral pole in z", den);
                          return std::pow(den, -static_cast<double>(a));
                        },
                        0.0, y);
    // d_zbar^a T = -2i (-1)^a (a-1)! \int (zbar + 2ik)^{-a} ds
    const cplx dzb = -two_i * sign * fact *
                     adaptive_simpson(
                         [&](double s) {
                           const cplx num = zb0 + cplx(0.0, 2.0 * k.eval(s));
                           if (std::abs(num) < 1e-12)
                             throw SingularPointError("y-integral pole in zbar", num);
                           return std::pow(num, -static_cast<double>(a));
                         },
                         0.0, y);
    double afact = 1.0;  // a!
    for (int j = 2; j <= a; ++j) afact *= j;
    poly.set_coeff(MultiIndex{a, 0, 0, 0}, dz / afact);
    poly.set_coeff(MultiIndex{0, a, 0, 0}, dzb / afact);
  }

  const std::array<Jet, 2> disp{z - z0, zbar - zb0};
  return evaluate_taylor(poly, disp);
}

Jet y_integral_rate(const RealPoly& k, const Jet& y, const Jet& z, const Jet& zbar) {
  const Jet kj = k.eval(y);
  const cplx two_i(0.0, 2.0);
  const Jet num = zbar + two_i * kj;
  const Jet den = z - two_i * kj;
  return two_i * (log(num) - log(den));
}

Jet y_integral_term(const RealPoly& k, int yvar, const Jet& y, const Jet& z,
                    const Jet& zbar) {
  const int order = z.order();
  const int nvars = z.nvars();
  if (yvar < 0 || yvar >= nvars) throw Error("y variable index out of range");
  if (order >= 1) {
    // the fixed-y / y-rate split below needs z and zbar free of the y direction
    const Jet dz = derivative(z, yvar);
    const Jet dzb = derivative(zbar, yvar);
    for (int i = 0; i < dz.size(); ++i)
      if (dz.raw(i) != cplx(0.0, 0.0) || dzb.raw(i) != cplx(0.0, 0.0))
        throw Error("z and zbar jets may not depend on the y variable");
  }
  {
    // and y itself must be the plain coordinate jet of variable yvar
    const Jet coord = jet_variable(yvar, y.value(), order, nvars);
    for (int i = 0; i < y.size(); ++i)
      if (y.raw(i) != coord.raw(i)) throw Error("y must be the coordinate jet of yvar");
  }
  const Jet fixed = y_integral_fixed(k, y.value().real(), z, zbar);
  const Jet rate = y_integral_rate(k, y, z, zbar);
  Jet out(order, nvars);
  // walk every multi-index of the output shape
  std::function<void(MultiIndex&, int, int)> fill = [&](MultiIndex& m, int var, int left) {
    if (var == nvars) {
      if (m[yvar] == 0) {
        out.set_coeff(m, fixed.coeff(m));
      } else {
        MultiIndex low = m;
        --low[yvar];
        out.set_coeff(m, rate.coeff(low) / static_cast<double>(m[yvar]));
      }
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m[var] = e;
      fill(m, var + 1, left - e);
    }
    m[var] = 0;
  };
  MultiIndex m;
  fill(m, 0, order);
  return out;
}

}  // namespace heavenlift
