#include "mjlab/jet.hpp"

#include <cmath>
#include <utility>

#include "mjlab/errors.hpp"

namespace mjlab {

namespace {

constexpr int kBase = kMaxJetOrder + 1;

struct Table {
  std::vector<Multi> exps;
  std::vector<int> degree;
  std::vector<std::size_t> count;  // count[n]: monomials of degree <= n
  std::vector<int> lookup;         // base-kBase code -> index
  // Product splits: for monomial k, pairs (i, j) with exps[i] + exps[j] = exps[k],
  // flattened with offsets.
  std::vector<std::pair<int, int>> splits;
  std::vector<std::size_t> split_begin;
  std::vector<Multi> raise;  // index of exps[i] + e_var, or -1
  std::vector<double> factorial;

  static int code(const Multi& a) { return ((a[0] * kBase + a[1]) * kBase + a[2]) * kBase + a[3]; }

  Table() {
    lookup.assign(kBase * kBase * kBase * kBase, -1);
    for (int n = 0; n <= kMaxJetOrder; ++n) {
      for (int a = n; a >= 0; --a)
        for (int b = n - a; b >= 0; --b)
          for (int c = n - a - b; c >= 0; --c) {
            Multi e{a, b, c, n - a - b - c};
            lookup[code(e)] = static_cast<int>(exps.size());
            exps.push_back(e);
            degree.push_back(n);
          }
      count.push_back(exps.size());
    }
    const std::size_t total = exps.size();
    split_begin.resize(total + 1);
    for (std::size_t k = 0; k < total; ++k) {
      split_begin[k] = splits.size();
      const Multi& ek = exps[k];
      for (std::size_t i = 0; i < count[degree[k]]; ++i) {
        const Multi& ei = exps[i];
        if (ei[0] > ek[0] || ei[1] > ek[1] || ei[2] > ek[2] || ei[3] > ek[3]) continue;
        Multi ej{ek[0] - ei[0], ek[1] - ei[1], ek[2] - ei[2], ek[3] - ei[3]};
        splits.emplace_back(static_cast<int>(i), lookup[code(ej)]);
      }
    }
    split_begin[total] = splits.size();
    raise.resize(total);
    for (std::size_t i = 0; i < total; ++i) {
      for (int v = 0; v < 4; ++v) {
        Multi e = exps[i];
        e[v] += 1;
        raise[i][v] = (degree[i] + 1 <= kMaxJetOrder) ? lookup[code(e)] : -1;
      }
    }
    double f[kBase];
    f[0] = 1.0;
    for (int i = 1; i < kBase; ++i) f[i] = f[i - 1] * i;
    factorial.resize(total);
    for (std::size_t i = 0; i < total; ++i) {
      const Multi& e = exps[i];
      factorial[i] = f[e[0]] * f[e[1]] * f[e[2]] * f[e[3]];
    }
  }

  int index(const Multi& a) const {
    for (int v : a)
      if (v < 0 || v > kMaxJetOrder) return -1;
    if (a[0] + a[1] + a[2] + a[3] > kMaxJetOrder) return -1;
    return lookup[code(a)];
  }
};

const Table& table() {
  static const Table t;
  return t;
}

void check_order(int order) {
  if (order < 0 || order > kMaxJetOrder)
    fail(ErrorKind::JetUnavailable, "jet order " + std::to_string(order) + " outside [0, " +
                                        std::to_string(kMaxJetOrder) + "]");
}

}  // namespace

std::size_t jet_size(int order) {
  check_order(order);
  return table().count[order];
}

const Multi& jet_exponent(std::size_t index) { return table().exps[index]; }

Jet::Jet(int order, cplx value) : order_(order) {
  check_order(order);
  c_.assign(table().count[order], cplx(0.0));
  c_[0] = value;
}

Jet Jet::variable(int order, int var, double base) {
  Jet j(order, base);
  if (order >= 1) {
    Multi e{0, 0, 0, 0};
    e[var] = 1;
    j.c_[table().index(e)] = 1.0;
  }
  return j;
}

cplx Jet::coeff(const Multi& alpha) const {
  int i = table().index(alpha);
  if (i < 0 || static_cast<std::size_t>(i) >= c_.size()) return 0.0;
  return c_[i];
}

cplx Jet::partial(const Multi& alpha) const {
  int i = table().index(alpha);
  if (i < 0 || static_cast<std::size_t>(i) >= c_.size())
    fail(ErrorKind::JetUnavailable, "requested partial exceeds jet order");
  return c_[i] * table().factorial[i];
}

Jet Jet::truncated(int order) const {
  if (order >= order_) return *this;
  Jet r(order);
  std::copy(c_.begin(), c_.begin() + r.c_.size(), r.c_.begin());
  return r;
}

bool Jet::is_affine() const {
  for (std::size_t i = 5; i < c_.size(); ++i)
    if (c_[i] != cplx(0.0)) return false;
  return true;
}

Jet& Jet::operator+=(const Jet& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Jet& Jet::operator*=(cplx s) {
  for (auto& v : c_) v *= s;
  return *this;
}

Jet Jet::operator-() const {
  Jet r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Jet Jet::d(int var) const {
  if (order_ == 0) fail(ErrorKind::JetUnavailable, "cannot differentiate an order-0 jet");
  const Table& t = table();
  Jet r(order_ - 1);
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    int j = t.raise[i][var];
    r.c_[i] = c_[j] * static_cast<double>(t.exps[i][var] + 1);
  }
  return r;
}

Jet Jet::conj() const {
  Jet r = *this;
  for (auto& v : r.c_) v = std::conj(v);
  return r;
}

Jet Jet::real() const {
  Jet r = *this;
  for (auto& v : r.c_) v = v.real();
  return r;
}

Jet Jet::imag() const {
  Jet r = *this;
  for (auto& v : r.c_) v = v.imag();
  return r;
}

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }
Jet operator+(Jet a, cplx s) { return a += s; }
Jet operator+(cplx s, Jet a) { return a += s; }
Jet operator-(Jet a, cplx s) { return a -= s; }
Jet operator-(cplx s, const Jet& a) { return (-a) += s; }
Jet operator*(Jet a, cplx s) { return a *= s; }
Jet operator*(cplx s, Jet a) { return a *= s; }
Jet operator/(Jet a, cplx s) { return a *= (1.0 / s); }
Jet operator/(cplx s, const Jet& a) { return inverse(a) *= s; }

Jet operator*(const Jet& a, const Jet& b) {
  const Table& t = table();
  int n = std::min(a.order(), b.order());
  Jet r(n);
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  for (std::size_t k = 0; k < r.size(); ++k) {
    cplx s = 0.0;
    for (std::size_t p = t.split_begin[k]; p < t.split_begin[k + 1]; ++p)
      s += ac[t.splits[p].first] * bc[t.splits[p].second];
    r[k] = s;
  }
  return r;
}

Jet inverse(const Jet& b) {
  const Table& t = table();
  if (b.value() == cplx(0.0)) fail(ErrorKind::ZeroArgument, "jet inverse at zero");
  Jet r(b.order());
  const cplx inv0 = 1.0 / b.value();
  r[0] = inv0;
  for (std::size_t k = 1; k < r.size(); ++k) {
    cplx s = 0.0;
    for (std::size_t p = t.split_begin[k]; p < t.split_begin[k + 1]; ++p) {
      int j = t.splits[p].second;
      if (j == 0) continue;
      s += r[t.splits[p].first] * b[j];
    }
    r[k] = -s * inv0;
  }
  return r;
}

Jet operator/(const Jet& a, const Jet& b) { return a * inverse(b); }

Jet compose(const std::vector<cplx>& s, const Jet& g) {
  int n = g.order();
  int top = std::min<int>(n, static_cast<int>(s.size()) - 1);
  Jet delta = g;
  delta[0] = 0.0;
  Jet r(n, top >= 0 ? s[top] : cplx(0.0));
  for (int k = top - 1; k >= 0; --k) {
    r = r * delta;
    r[0] += s[k];
  }
  return r;
}

namespace {

// exp of an affine jet: the coefficient of dx^a dy^b du^c dv^d factorises.
Jet exp_affine(const Jet& g) {
  const Table& t = table();
  int n = g.order();
  Jet r(n);
  cplx e0 = std::exp(g.value());
  if (n == 0) {
    r[0] = e0;
    return r;
  }
  cplx pw[4][kBase];
  for (int v = 0; v < 4; ++v) {
    cplx gv = g[1 + v];
    pw[v][0] = 1.0;
    for (int a = 1; a <= n; ++a) pw[v][a] = pw[v][a - 1] * gv / static_cast<double>(a);
  }
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Multi& e = t.exps[i];
    r[i] = e0 * pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]] * pw[3][e[3]];
  }
  return r;
}

}  // namespace

Jet exp(const Jet& g) {
  if (g.is_affine()) return exp_affine(g);
  return compose(series::exp(g.value(), g.order()), g);
}

Jet log(const Jet& g) { return compose(series::log(g.value(), g.order()), g); }

Jet pow(const Jet& g, double p) { return compose(series::pow(g.value(), p, g.order()), g); }

Jet powi(const Jet& g, int n) {
  if (n >= 0) {
    Jet r(g.order(), 1.0), b = g;
    int e = n;
    while (e > 0) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }
  return powi(inverse(g), -n);
}

Jet sqrt(const Jet& g) { return pow(g, 0.5); }

Jet substitute(const Jet& f, const std::array<Jet, 4>& coords) {
  int n = f.order();
  for (const auto& c : coords) n = std::min(n, c.order());
  std::array<std::vector<Jet>, 4> pw;
  for (int v = 0; v < 4; ++v) {
    Jet delta = coords[v].truncated(n);
    delta[0] = 0.0;
    pw[v].push_back(Jet(n, 1.0));
    for (int a = 1; a <= n; ++a) pw[v].push_back(pw[v].back() * delta);
  }
  Jet r(n);
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b) {
      Jet pab = pw[0][a] * pw[1][b];
      for (int c = 0; a + b + c <= n; ++c) {
        Jet inner(n);
        bool any = false;
        for (int d = 0; a + b + c + d <= n; ++d) {
          cplx k = f.coeff({a, b, c, d});
          if (k == cplx(0.0)) continue;
          any = true;
          const auto& src = pw[3][d].coeffs();
          for (std::size_t i = 0; i < inner.size(); ++i) inner[i] += k * src[i];
        }
        if (!any) continue;
        r += (c == 0 ? pab : pab * pw[2][c]) * inner;
      }
    }
  return r;
}

Jet d_tau(const Jet& f) { return 0.5 * (f.d(kX) - cplx(0, 1) * f.d(kY)); }
Jet d_taubar(const Jet& f) { return 0.5 * (f.d(kX) + cplx(0, 1) * f.d(kY)); }
Jet d_z(const Jet& f) { return 0.5 * (f.d(kU) - cplx(0, 1) * f.d(kV)); }
Jet d_zbar(const Jet& f) { return 0.5 * (f.d(kU) + cplx(0, 1) * f.d(kV)); }

namespace series {

std::vector<cplx> exp(cplx a0, int n) {
  std::vector<cplx> s(n + 1);
  s[0] = std::exp(a0);
  for (int k = 1; k <= n; ++k) s[k] = s[k - 1] / static_cast<double>(k);
  return s;
}

std::vector<cplx> pow(cplx a0, double p, int n) {
  if (a0 == cplx(0.0)) fail(ErrorKind::ZeroArgument, "power series at zero base");
  // A negative real base with a signed zero imaginary part must take the principal branch.
  if (a0.imag() == 0.0) a0 = cplx(a0.real(), 0.0);
  std::vector<cplx> s(n + 1);
  s[0] = std::pow(a0, p);
  if (a0.imag() == 0.0 && a0.real() > 0.0) s[0] = std::pow(a0.real(), p);
  cplx inv = 1.0 / a0;
  for (int k = 1; k <= n; ++k) s[k] = s[k - 1] * inv * ((p - k + 1) / static_cast<double>(k));
  return s;
}

std::vector<cplx> log(cplx a0, int n) {
  if (a0 == cplx(0.0)) fail(ErrorKind::ZeroArgument, "log series at zero");
  std::vector<cplx> s(n + 1);
  s[0] = std::log(a0);
  cplx inv = 1.0 / a0, pk = 1.0;
  for (int k = 1; k <= n; ++k) {
    pk *= inv;
    s[k] = ((k % 2) ? 1.0 : -1.0) * pk / static_cast<double>(k);
  }
  return s;
}

std::vector<cplx> mul(const std::vector<cplx>& a, const std::vector<cplx>& b, int n) {
  std::vector<cplx> r(n + 1, 0.0);
  for (int i = 0; i <= n && i < static_cast<int>(a.size()); ++i)
    for (int j = 0; i + j <= n && j < static_cast<int>(b.size()); ++j) r[i + j] += a[i] * b[j];
  return r;
}

std::vector<cplx> gaussian_shift(cplx a, int n) {
  std::vector<cplx> e1(n + 1), e2(n + 1, 0.0);
  e1[0] = 1.0;
  for (int k = 1; k <= n; ++k) e1[k] = e1[k - 1] * (-2.0 * a) / static_cast<double>(k);
  double f = 1.0;
  for (int j = 0; 2 * j <= n; ++j) {
    e2[2 * j] = ((j % 2) ? -1.0 : 1.0) / f;
    f *= (j + 1);
  }
  return mul(e1, e2, n);
}

}  // namespace series

}  // namespace mjlab
