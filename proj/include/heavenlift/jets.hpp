#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "heavenlift/errors.hpp"

namespace heavenlift {

using cplx = std::complex<double>;

inline constexpr int kMaxJetOrder = 4;
inline constexpr int kMaxJetVars = 4;

// Multi-index over up to four variables; unused slots stay zero.
struct MultiIndex {
  std::array<int, 4> m{0, 0, 0, 0};

  MultiIndex() = default;
  MultiIndex(int a, int b, int c, int d) : m{a, b, c, d} {}

  int total() const { return m[0] + m[1] + m[2] + m[3]; }
  int operator[](int i) const { return m[static_cast<size_t>(i)]; }
  int& operator[](int i) { return m[static_cast<size_t>(i)]; }
  bool operator==(const MultiIndex&) const = default;
};

// Truncated Taylor expansion of a scalar function of `nvars` real or formal
// variables about a base point, stored densely in graded order.  The
// coefficient of multi-index m is (d^m f) / m!.  Order and variable count are
// capped at 4; arithmetic between jets of different orders truncates to the
// smaller order, so constants can be carried as order-0 jets when convenient.
// Scalar overloads keep the jet's own order.
class Jet {
 public:
  Jet() : Jet(0, 1) {}
  Jet(int order, int nvars);

  static Jet constant(cplx value, int order, int nvars);

  int order() const { return order_; }
  int nvars() const { return nvars_; }
  int size() const { return static_cast<int>(c_.size()); }

  cplx value() const { return c_[0]; }

  cplx coeff(const MultiIndex& m) const;
  void set_coeff(const MultiIndex& m, cplx v);
  cplx& raw(int i) { return c_[static_cast<size_t>(i)]; }
  cplx raw(int i) const { return c_[static_cast<size_t>(i)]; }

  Jet truncated(int order) const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator+=(cplx s);
  Jet& operator-=(cplx s);
  Jet& operator*=(cplx s);
  Jet& operator/=(cplx s);

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator+(Jet a, cplx s) { return a += s; }
  friend Jet operator+(cplx s, Jet a) { return a += s; }
  friend Jet operator-(Jet a, cplx s) { return a -= s; }
  friend Jet operator-(cplx s, const Jet& a);
  friend Jet operator*(Jet a, cplx s) { return a *= s; }
  friend Jet operator*(cplx s, Jet a) { return a *= s; }
  friend Jet operator/(Jet a, cplx s) { return a /= s; }
  friend Jet operator-(const Jet& a);

  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);

 private:
  int order_;
  int nvars_;
  std::vector<cplx> c_;
};

// Jet of the coordinate function x_index with the given base value.
Jet jet_variable(int index, cplx value, int order, int nvars);

// Analytic functions of a jet, expanded about the constant term.  log, sqrt
// and pow use the principal branch with the cut along the negative real axis;
// a constant term on the cut (or zero) raises SingularPointError.
Jet exp(const Jet& a);
Jet log(const Jet& a);
Jet sqrt(const Jet& a);
Jet sin(const Jet& a);
Jet cos(const Jet& a);
Jet pow(const Jet& a, cplx exponent);

// Derivative with respect to one variable; output order drops by one.
Jet derivative(const Jet& a, int var);

// Value of the mixed partial d^m f at the base point.
cplx extract(const Jet& a, const MultiIndex& m);

// Declares that complex coordinate k of a chart is formed from the real
// coordinates (re, im) as c_k = x_re + i * x_im.
struct WirtingerPair {
  int re;
  int im;
};

// Mixed Wirtinger partial of `a`: mw holds derivative counts in slot order
// (d_{c0}, d_{cbar0}, d_{c1}, d_{cbar1}, ...), two slots per declared pair,
// with d_c = (d_re - i d_im)/2 and d_cbar = (d_re + i d_im)/2.
cplx wirtinger(const Jet& a, std::span<const WirtingerPair> pairs,
               std::span<const int> mw);

// One Wirtinger derivative as a jet (order drops by one).  `conjugate`
// selects d_cbar; `scale` multiplies the result, letting charts whose complex
// coordinate is half of (x + i y) use their native normalization.
Jet wirtinger_derivative(const Jet& a, const WirtingerPair& pair,
                         bool conjugate, double scale = 1.0);

// Treats `poly`'s coefficients as a Taylor polynomial and evaluates it at the
// given displacement jets (one per variable of `poly`).  The result takes the
// shape of the displacement jets, which may differ from poly's shape.
Jet evaluate_taylor(const Jet& poly, std::span<const Jet> displacements);

// Reassembles a jet of order (grads[0].order()+1) from its value at the base
// point and the jets of its first partial derivatives.  The gradient jets
// must agree on mixed partials; the smallest admissible variable is used for
// each coefficient.
Jet jet_from_gradient(cplx value, std::span<const Jet> grads);

}  // namespace heavenlift
