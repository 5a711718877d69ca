#include "heavenlift/jets.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace heavenlift {

namespace {

constexpr int kPackBase = 5;  // exponents run 0..4
constexpr int kPackSize = 625;

int pack(const MultiIndex& m) {
  return m[0] + kPackBase * (m[1] + kPackBase * (m[2] + kPackBase * m[3]));
}

struct MulTriple {
  int ia;
  int ib;
  int iout;
};

// Index tables for one (nvars, order) shape: the graded list of multi-indices,
// the packed-index lookup, the truncated-product pair list grouped by output
// coefficient, and per-index factorial products for extract().
struct JetTable {
  int nvars = 0;
  int order = 0;
  std::vector<MultiIndex> idx;
  std::array<int, kPackSize> pos{};
  std::vector<MulTriple> mul;        // grouped by iout ascending
  std::vector<int> mul_offset;       // size idx.size()+1
  std::vector<double> fact;

  void build(int v, int o) {
    nvars = v;
    order = o;
    pos.fill(-1);
    // graded enumeration: total degree ascending, then lexicographic
    for (int deg = 0; deg <= o; ++deg) {
      MultiIndex m;
      enumerate(m, 0, deg);
    }
    for (size_t i = 0; i < idx.size(); ++i) pos[static_cast<size_t>(pack(idx[i]))] = static_cast<int>(i);
    fact.resize(idx.size());
    for (size_t i = 0; i < idx.size(); ++i) {
      double f = 1.0;
      for (int k = 0; k < 4; ++k)
        for (int j = 2; j <= idx[i][k]; ++j) f *= j;
      fact[i] = f;
    }
    std::vector<MulTriple> raw;
    const int n = static_cast<int>(idx.size());
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (idx[a].total() + idx[b].total() > o) continue;
        MultiIndex s;
        for (int k = 0; k < 4; ++k) s[k] = idx[a][k] + idx[b][k];
        raw.push_back({a, b, pos[static_cast<size_t>(pack(s))]});
      }
    }
    std::stable_sort(raw.begin(), raw.end(),
                     [](const MulTriple& x, const MulTriple& y) { return x.iout < y.iout; });
    mul = std::move(raw);
    mul_offset.assign(static_cast<size_t>(n) + 1, 0);
    for (const auto& t : mul) ++mul_offset[static_cast<size_t>(t.iout) + 1];
    for (int i = 0; i < n; ++i) mul_offset[static_cast<size_t>(i) + 1] += mul_offset[static_cast<size_t>(i)];
  }

 private:
  void enumerate(MultiIndex& m, int var, int remaining) {
    if (var == nvars - 1) {
      m[var] = remaining;
      idx.push_back(m);
      m[var] = 0;
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      m[var] = e;
      enumerate(m, var + 1, remaining - e);
    }
    m[var] = 0;
  }
};

const JetTable& table(int nvars, int order) {
  static JetTable tables[kMaxJetVars][kMaxJetOrder + 1];
  static std::once_flag built;
  std::call_once(built, [] {
    for (int v = 1; v <= kMaxJetVars; ++v)
      for (int o = 0; o <= kMaxJetOrder; ++o) tables[v - 1][o].build(v, o);
  });
  if (nvars < 1 || nvars > kMaxJetVars)
    throw Error("jet variable count must be between 1 and 4, got " + std::to_string(nvars));
  if (order < 0 || order > kMaxJetOrder)
    throw Error("jet order must be between 0 and 4, got " + std::to_string(order));
  return tables[nvars - 1][order];
}

void require_same_vars(const Jet& a, const Jet& b) {
  if (a.nvars() != b.nvars())
    throw Error("jet variable counts differ: " + std::to_string(a.nvars()) + " vs " +
                std::to_string(b.nvars()));
}

// Composes a univariate power series sum c_k h^k (k <= order) with the
// nilpotent part h of a jet, by Horner evaluation in jet arithmetic.
Jet compose_series(const Jet& a, std::span<const cplx> series) {
  Jet h = a;
  h -= a.value();
  const int n = static_cast<int>(series.size()) - 1;
  Jet r = Jet::constant(series[static_cast<size_t>(n)], a.order(), a.nvars());
  for (int k = n - 1; k >= 0; --k) r = r * h + series[static_cast<size_t>(k)];
  return r;
}

void require_off_cut(cplx c, const char* fn) {
  if (c == cplx(0.0, 0.0))
    throw SingularPointError(std::string(fn) + " of jet with zero constant term", c);
  if (c.real() < 0.0 && c.imag() == 0.0)
    throw SingularPointError(std::string(fn) + " of jet with constant term on the branch cut", c);
}

}  // namespace

Jet::Jet(int order, int nvars) : order_(order), nvars_(nvars) {
  c_.assign(table(nvars, order).idx.size(), cplx(0.0, 0.0));
}

Jet Jet::constant(cplx value, int order, int nvars) {
  Jet j(order, nvars);
  j.c_[0] = value;
  return j;
}

cplx Jet::coeff(const MultiIndex& m) const {
  const auto& t = table(nvars_, order_);
  if (m.total() > order_) return cplx(0.0, 0.0);
  for (int k = nvars_; k < 4; ++k)
    if (m[k] != 0) throw Error("multi-index touches a variable beyond nvars");
  return c_[static_cast<size_t>(t.pos[static_cast<size_t>(pack(m))])];
}

void Jet::set_coeff(const MultiIndex& m, cplx v) {
  const auto& t = table(nvars_, order_);
  if (m.total() > order_) throw Error("multi-index total degree exceeds jet order");
  for (int k = nvars_; k < 4; ++k)
    if (m[k] != 0) throw Error("multi-index touches a variable beyond nvars");
  c_[static_cast<size_t>(t.pos[static_cast<size_t>(pack(m))])] = v;
}

Jet Jet::truncated(int order) const {
  if (order >= order_) return *this;
  Jet r(order, nvars_);
  for (int i = 0; i < r.size(); ++i) r.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)];
  return r;
}

Jet& Jet::operator+=(const Jet& o) {
  require_same_vars(*this, o);
  if (o.order_ < order_) *this = truncated(o.order_);
  for (int i = 0; i < size(); ++i) c_[static_cast<size_t>(i)] += o.c_[static_cast<size_t>(i)];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  require_same_vars(*this, o);
  if (o.order_ < order_) *this = truncated(o.order_);
  for (int i = 0; i < size(); ++i) c_[static_cast<size_t>(i)] -= o.c_[static_cast<size_t>(i)];
  return *this;
}

Jet& Jet::operator+=(cplx s) {
  c_[0] += s;
  return *this;
}

Jet& Jet::operator-=(cplx s) {
  c_[0] -= s;
  return *this;
}

Jet& Jet::operator*=(cplx s) {
  for (auto& c : c_) c *= s;
  return *this;
}

Jet& Jet::operator/=(cplx s) {
  if (s == cplx(0.0, 0.0)) throw SingularPointError("jet division by zero scalar", s);
  for (auto& c : c_) c /= s;
  return *this;
}

Jet operator-(const Jet& a) {
  Jet r = a;
  r *= cplx(-1.0, 0.0);
  return r;
}

Jet operator-(cplx s, const Jet& a) {
  Jet r = -a;
  r += s;
  return r;
}

Jet operator*(const Jet& a, const Jet& b) {
  require_same_vars(a, b);
  const int order = std::min(a.order(), b.order());
  const Jet at = a.truncated(order);
  const Jet bt = b.truncated(order);
  const auto& t = table(a.nvars(), order);
  Jet r(order, a.nvars());
  for (const auto& tr : t.mul)
    r.c_[static_cast<size_t>(tr.iout)] += at.c_[static_cast<size_t>(tr.ia)] * bt.c_[static_cast<size_t>(tr.ib)];
  return r;
}

Jet operator/(const Jet& a, const Jet& b) {
  require_same_vars(a, b);
  const int order = std::min(a.order(), b.order());
  const Jet at = a.truncated(order);
  const Jet bt = b.truncated(order);
  const cplx b0 = bt.value();
  if (b0 == cplx(0.0, 0.0))
    throw SingularPointError("jet division by jet with zero constant term", b0);
  const auto& t = table(a.nvars(), order);
  Jet r(order, a.nvars());
  // degree recursion: c[m] = (a[m] - sum_{0<k<=m} b[k] c[m-k]) / b[0]
  for (int out = 0; out < r.size(); ++out) {
    cplx s = at.c_[static_cast<size_t>(out)];
    for (int e = t.mul_offset[static_cast<size_t>(out)]; e < t.mul_offset[static_cast<size_t>(out) + 1]; ++e) {
      const auto& tr = t.mul[static_cast<size_t>(e)];
      if (tr.ia == 0) continue;  // skip b's constant term
      s -= bt.c_[static_cast<size_t>(tr.ia)] * r.c_[static_cast<size_t>(tr.ib)];
    }
    r.c_[static_cast<size_t>(out)] = s / b0;
  }
  return r;
}

Jet jet_variable(int index, cplx value, int order, int nvars) {
  if (index < 0 || index >= nvars)
    throw Error("jet variable index " + std::to_string(index) + " out of range for nvars " +
                std::to_string(nvars));
  Jet j(order, nvars);
  j.set_coeff(MultiIndex{}, value);
  if (order >= 1) {
    MultiIndex e;
    e[index] = 1;
    j.set_coeff(e, cplx(1.0, 0.0));
  }
  return j;
}

Jet exp(const Jet& a) {
  std::array<cplx, kMaxJetOrder + 1> s;
  const cplx e0 = std::exp(a.value());
  double f = 1.0;
  for (int k = 0; k <= a.order(); ++k) {
    if (k > 1) f *= k;
    s[static_cast<size_t>(k)] = e0 / f;
  }
  return compose_series(a, std::span<const cplx>(s.data(), static_cast<size_t>(a.order()) + 1));
}

Jet log(const Jet& a) {
  const cplx a0 = a.value();
  require_off_cut(a0, "log");
  std::array<cplx, kMaxJetOrder + 1> s;
  s[0] = std::log(a0);
  cplx p = a0;  // a0^k
  double sign = 1.0;
  for (int k = 1; k <= a.order(); ++k) {
    s[static_cast<size_t>(k)] = sign / (static_cast<double>(k) * p);
    p *= a0;
    sign = -sign;
  }
  return compose_series(a, std::span<const cplx>(s.data(), static_cast<size_t>(a.order()) + 1));
}

Jet pow(const Jet& a, cplx exponent) {
  const cplx a0 = a.value();
  require_off_cut(a0, "pow");
  std::array<cplx, kMaxJetOrder + 1> s;
  // binomial series: c_k = (e choose k) a0^(e-k)
  cplx coeff = std::pow(a0, exponent);
  s[0] = coeff;
  for (int k = 1; k <= a.order(); ++k) {
    coeff *= (exponent - cplx(static_cast<double>(k - 1), 0.0)) / (static_cast<double>(k) * a0);
    s[static_cast<size_t>(k)] = coeff;
  }
  return compose_series(a, std::span<const cplx>(s.data(), static_cast<size_t>(a.order()) + 1));
}

Jet sqrt(const Jet& a) {
  const cplx a0 = a.value();
  require_off_cut(a0, "sqrt");
  return pow(a, cplx(0.5, 0.0));
}

Jet sin(const Jet& a) {
  const cplx s0 = std::sin(a.value());
  const cplx c0 = std::cos(a.value());
  const std::array<cplx, kMaxJetOrder + 1> cyc{s0, c0, -s0, -c0, s0};
  std::array<cplx, kMaxJetOrder + 1> s;
  double f = 1.0;
  for (int k = 0; k <= a.order(); ++k) {
    if (k > 1) f *= k;
    s[static_cast<size_t>(k)] = cyc[static_cast<size_t>(k)] / f;
  }
  return compose_series(a, std::span<const cplx>(s.data(), static_cast<size_t>(a.order()) + 1));
}

Jet cos(const Jet& a) {
  const cplx s0 = std::sin(a.value());
  const cplx c0 = std::cos(a.value());
  const std::array<cplx, kMaxJetOrder + 1> cyc{c0, -s0, -c0, s0, c0};
  std::array<cplx, kMaxJetOrder + 1> s;
  double f = 1.0;
  for (int k = 0; k <= a.order(); ++k) {
    if (k > 1) f *= k;
    s[static_cast<size_t>(k)] = cyc[static_cast<size_t>(k)] / f;
  }
  return compose_series(a, std::span<const cplx>(s.data(), static_cast<size_t>(a.order()) + 1));
}

Jet derivative(const Jet& a, int var) {
  if (var < 0 || var >= a.nvars()) throw Error("derivative variable index out of range");
  if (a.order() == 0) throw Error("derivative of an order-0 jet is not representable");
  Jet r(a.order() - 1, a.nvars());
  const auto& tr = table(a.nvars(), a.order() - 1);
  for (size_t i = 0; i < tr.idx.size(); ++i) {
    MultiIndex m = tr.idx[i];
    MultiIndex src = m;
    ++src[var];
    r.raw(static_cast<int>(i)) = a.coeff(src) * static_cast<double>(src[var]);
  }
  return r;
}

cplx extract(const Jet& a, const MultiIndex& m) {
  if (m.total() > a.order())
    throw Error("requested partial of total degree " + std::to_string(m.total()) +
                " exceeds jet order " + std::to_string(a.order()));
  const auto& t = table(a.nvars(), a.order());
  for (int k = a.nvars(); k < 4; ++k)
    if (m[k] != 0) throw Error("multi-index touches a variable beyond nvars");
  const int p = t.pos[static_cast<size_t>(pack(m))];
  return a.raw(p) * t.fact[static_cast<size_t>(p)];
}

Jet wirtinger_derivative(const Jet& a, const WirtingerPair& pair, bool conjugate, double scale) {
  const Jet dre = derivative(a, pair.re);
  const Jet dim = derivative(a, pair.im);
  const cplx half(0.5 * scale, 0.0);
  const cplx ihalf(0.0, 0.5 * scale);
  return conjugate ? dre * half + dim * ihalf : dre * half - dim * ihalf;
}

cplx wirtinger(const Jet& a, std::span<const WirtingerPair> pairs, std::span<const int> mw) {
  if (mw.size() != 2 * pairs.size())
    throw Error("wirtinger index list must have two slots per declared pair");
  int total = 0;
  for (int n : mw) total += n;
  if (total > a.order()) throw Error("wirtinger derivative order exceeds jet order");
  Jet d = a;
  for (size_t p = 0; p < pairs.size(); ++p) {
    for (int k = 0; k < mw[2 * p]; ++k) d = wirtinger_derivative(d, pairs[p], false);
    for (int k = 0; k < mw[2 * p + 1]; ++k) d = wirtinger_derivative(d, pairs[p], true);
  }
  return d.value();
}

Jet evaluate_taylor(const Jet& poly, std::span<const Jet> displacements) {
  if (static_cast<int>(displacements.size()) != poly.nvars())
    throw Error("evaluate_taylor needs one displacement jet per polynomial variable");
  const Jet& model = displacements[0];
  for (const Jet& d : displacements) require_same_vars(model, d);
  // precompute displacement powers up to the polynomial order
  std::vector<std::array<Jet, kMaxJetOrder + 1>> pw(displacements.size());
  for (size_t i = 0; i < displacements.size(); ++i) {
    pw[i][0] = Jet::constant(cplx(1.0, 0.0), model.order(), model.nvars());
    for (int k = 1; k <= poly.order(); ++k) pw[i][static_cast<size_t>(k)] = pw[i][static_cast<size_t>(k - 1)] * displacements[i];
  }
  const auto& t = table(poly.nvars(), poly.order());
  Jet r(model.order(), model.nvars());
  for (size_t i = 0; i < t.idx.size(); ++i) {
    const cplx c = poly.raw(static_cast<int>(i));
    if (c == cplx(0.0, 0.0)) continue;
    const MultiIndex& m = t.idx[i];
    Jet term = Jet::constant(c, model.order(), model.nvars());
    for (int v = 0; v < poly.nvars(); ++v)
      if (m[v] > 0) term = term * pw[static_cast<size_t>(v)][static_cast<size_t>(m[v])];
    r += term;
  }
  return r;
}

Jet jet_from_gradient(cplx value, std::span<const Jet> grads) {
  if (grads.empty()) throw Error("jet_from_gradient needs at least one gradient jet");
  const int nvars = grads[0].nvars();
  if (static_cast<int>(grads.size()) != nvars)
    throw Error("jet_from_gradient needs one gradient jet per variable");
  const int gorder = grads[0].order();
  for (const Jet& g : grads)
    if (g.order() != gorder || g.nvars() != nvars)
      throw Error("gradient jets must share one shape");
  const int order = gorder + 1;
  Jet r(order, nvars);
  r.set_coeff(MultiIndex{}, value);
  const auto& t = table(nvars, order);
  for (size_t i = 1; i < t.idx.size(); ++i) {
    const MultiIndex& m = t.idx[i];
    int v = 0;
    while (m[v] == 0) ++v;
    MultiIndex low = m;
    --low[v];
    r.raw(static_cast<int>(i)) = grads[static_cast<size_t>(v)].coeff(low) / static_cast<double>(m[v]);
  }
  return r;
}

}  // namespace heavenlift
