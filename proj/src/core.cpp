#include "mjlab/core.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <sstream>

namespace mjlab {

const char* error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::StencilOutOfDomain: return "StencilOutOfDomain";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::TruncationOverflow: return "TruncationOverflow";
    case ErrorKind::PoleAtTheta: return "PoleAtTheta";
    case ErrorKind::PoleAtAppell: return "PoleAtAppell";
    case ErrorKind::JetUnavailable: return "JetUnavailable";
    case ErrorKind::HUndefined: return "HUndefined";
    case ErrorKind::NotThetaDecomposable: return "NotThetaDecomposable";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

EvalPoint::EvalPoint(double x, double y, double u, double v) : x_(x), y_(y), u_(u), v_(v) {
  if (!(y > 0.0)) fail(ErrorKind::DomainError, "imaginary part of tau must be positive");
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(u) || !std::isfinite(v))
    fail(ErrorKind::NonFinite, "non-finite evaluation point");
}

cplx EvalPoint::q() const { return std::exp(2.0 * kPi * kI * tau()); }
cplx EvalPoint::zeta() const { return std::exp(2.0 * kPi * kI * z()); }

double EvalPoint::coord(int var) const {
  switch (var) {
    case kX: return x_;
    case kY: return y_;
    case kU: return u_;
    default: return v_;
  }
}

EvalPoint EvalPoint::shifted(int var, double h) const {
  double c[4] = {x_, y_, u_, v_};
  c[var] += h;
  if (!(c[1] > 0.0)) fail(ErrorKind::StencilOutOfDomain, "stencil point leaves the upper half plane");
  return EvalPoint(c[0], c[1], c[2], c[3]);
}

WeightIndex::WeightIndex(int two_k, int two_m) : two_k_(two_k), two_m_(two_m) {
  if (two_m == 0) fail(ErrorKind::DomainError, "index m must be non-zero");
}

WeightIndex WeightIndex::of(double k, double m) {
  double tk = 2.0 * k, tm = 2.0 * m;
  if (std::abs(tk - std::round(tk)) > 1e-12 || std::abs(tm - std::round(tm)) > 1e-12)
    fail(ErrorKind::DomainError, "k and m must be half-integers");
  return WeightIndex(static_cast<int>(std::lround(tk)), static_cast<int>(std::lround(tm)));
}

void TruncationPolicy::validate() const {
  if (!(tail_bound > 0.0)) fail(ErrorKind::DomainError, "tail_bound must be positive");
  if (max_radius < 1) fail(ErrorKind::DomainError, "max_radius must be at least 1");
}

SeriesInfo truncation_radius(double a, double b, double c, const TruncationPolicy& policy) {
  policy.validate();
  if (!(a > 0.0)) fail(ErrorKind::DomainError, "series has no Gaussian decay");
  b = std::abs(b);
  const double target = std::log(policy.tail_bound);
  auto bound = [&](double r) { return std::exp(-a * r * r + b * r + c); };
  SeriesInfo info;
  if (policy.radius_override > 0) {
    if (policy.radius_override > 4096) fail(ErrorKind::TruncationOverflow, "radius override too large");
    info.radius = policy.radius_override;
  } else {
    double disc = b * b + 4.0 * a * std::max(0.0, c - target);
    double r = (b + std::sqrt(disc)) / (2.0 * a);
    int radius = std::max(1, static_cast<int>(std::ceil(r)));
    if (radius > policy.max_radius) {
      std::ostringstream os;
      os << "needs radius " << radius << " > max_radius " << policy.max_radius;
      fail(ErrorKind::TruncationOverflow, os.str());
    }
    info.radius = radius;
  }
  for (int j = 1; j <= 3; ++j) info.est_tail += bound(info.radius + j);
  return info;
}

cplx principal_sqrt(cplx w) {
  if (w == cplx(0.0)) fail(ErrorKind::ZeroArgument, "square root of zero");
  // std::sqrt has its branch cut on the negative axis with arg in (-pi/2, pi/2];
  // a signed zero imaginary part can flip it, so normalise that case.
  if (w.imag() == 0.0 && w.real() < 0.0) return {0.0, std::sqrt(-w.real())};
  return std::sqrt(w);
}

Function Function::exact(JetFn fn) {
  Function f;
  f.kind_ = JetKind::Exact;
  f.jet_ = std::move(fn);
  return f;
}

Function Function::sampled(ValueFn fn, double step) {
  Function f;
  f.kind_ = JetKind::FiniteDifference;
  f.value_ = std::move(fn);
  f.step_ = step;
  return f;
}

cplx Function::operator()(const EvalPoint& p) const {
  if (kind_ == JetKind::Exact) return jet_(p, 0).value();
  return value_(p);
}

Jet Function::jet(const EvalPoint& p, int order) const {
  if (kind_ == JetKind::Exact) {
    Jet j = jet_(p, order);
    if (j.order() < order) fail(ErrorKind::JetUnavailable, "function returned a short jet");
    return j.truncated(order);
  }
  return finite_difference_jet(value_, p, order, step_);
}

Function operator+(const Function& a, const Function& b) {
  if (a.kind() == JetKind::Exact && b.kind() == JetKind::Exact)
    return Function::exact([a, b](const EvalPoint& p, int n) { return a.jet(p, n) + b.jet(p, n); });
  return Function::sampled([a, b](const EvalPoint& p) { return a(p) + b(p); });
}

Function operator-(const Function& a, const Function& b) {
  if (a.kind() == JetKind::Exact && b.kind() == JetKind::Exact)
    return Function::exact([a, b](const EvalPoint& p, int n) { return a.jet(p, n) - b.jet(p, n); });
  return Function::sampled([a, b](const EvalPoint& p) { return a(p) - b(p); });
}

Function operator*(cplx s, const Function& a) {
  if (a.kind() == JetKind::Exact)
    return Function::exact([a, s](const EvalPoint& p, int n) { return s * a.jet(p, n); });
  return Function::sampled([a, s](const EvalPoint& p) { return s * a(p); });
}

Function operator*(const Function& a, const Function& b) {
  if (a.kind() == JetKind::Exact && b.kind() == JetKind::Exact)
    return Function::exact([a, b](const EvalPoint& p, int n) { return a.jet(p, n) * b.jet(p, n); });
  return Function::sampled([a, b](const EvalPoint& p) { return a(p) * b(p); });
}

double default_step(const EvalPoint& p) { return 1e-3 * std::max(1.0, p.y()); }

namespace {

// 1D central stencils, offsets in units of the step.
struct Stencil {
  std::vector<std::pair<int, double>> w;
};

const Stencil& stencil(int order) {
  static const Stencil s[4] = {
      {{{0, 1.0}}},
      {{{-1, -0.5}, {1, 0.5}}},
      {{{-1, 1.0}, {0, -2.0}, {1, 1.0}}},
      {{{-2, -0.5}, {-1, 1.0}, {1, -1.0}, {2, 0.5}}},
  };
  return s[order];
}

}  // namespace

Jet finite_difference_jet(const Function::ValueFn& f, const EvalPoint& p, int order, double step) {
  if (order < 0 || order > kMaxFiniteDifferenceOrder)
    fail(ErrorKind::JetUnavailable, "finite-difference jets are limited to order 3");
  double h = step > 0.0 ? step : default_step(p);
  int reach = order >= 3 ? 2 : (order >= 1 ? 1 : 0);
  if (!(p.y() - reach * h > 0.0) || !(p.y() - order * h > 0.0))
    fail(ErrorKind::StencilOutOfDomain, "stencil leaves the upper half plane");

  // Samples are keyed by offsets in units of h/2 so both Richardson levels share them.
  std::map<std::array<int, 4>, cplx> cache;
  auto sample = [&](const std::array<int, 4>& off) {
    auto it = cache.find(off);
    if (it != cache.end()) return it->second;
    EvalPoint q(p.x() + 0.5 * h * off[0], p.y() + 0.5 * h * off[1], p.u() + 0.5 * h * off[2],
                p.v() + 0.5 * h * off[3]);
    cplx val = f(q);
    if (!std::isfinite(val.real()) || !std::isfinite(val.imag()))
      fail(ErrorKind::NonFinite, "non-finite sample near the evaluation point");
    cache.emplace(off, val);
    return val;
  };

  auto estimate = [&](const Multi& alpha, int scale) {
    // scale = 2 uses step h, scale = 1 uses step h/2.
    double hh = 0.5 * h * scale;
    cplx total = 0.0;
    const auto& s0 = stencil(alpha[0]).w;
    const auto& s1 = stencil(alpha[1]).w;
    const auto& s2 = stencil(alpha[2]).w;
    const auto& s3 = stencil(alpha[3]).w;
    for (auto [o0, w0] : s0)
      for (auto [o1, w1] : s1)
        for (auto [o2, w2] : s2)
          for (auto [o3, w3] : s3)
            total += (w0 * w1 * w2 * w3) * sample({o0 * scale, o1 * scale, o2 * scale, o3 * scale});
    int deg = alpha[0] + alpha[1] + alpha[2] + alpha[3];
    return total / std::pow(hh, deg);
  };

  Jet j(order);
  j[0] = sample({0, 0, 0, 0});
  for (std::size_t i = 1; i < j.size(); ++i) {
    const Multi& alpha = jet_exponent(i);
    cplx coarse = estimate(alpha, 2);
    cplx fine = estimate(alpha, 1);
    cplx d = (4.0 * fine - coarse) / 3.0;
    double fact = 1.0;
    for (int a : alpha)
      for (int t = 2; t <= a; ++t) fact *= t;
    j[i] = d / fact;
  }
  return j;
}

Jet finite_difference_jet(const Function& f, const EvalPoint& p, int order, double step) {
  return finite_difference_jet([&f](const EvalPoint& q) { return f(q); }, p, order, step);
}

Coords coords(const EvalPoint& p, int order) {
  Coords c{Jet::variable(order, kX, p.x()), Jet::variable(order, kY, p.y()),
           Jet::variable(order, kU, p.u()), Jet::variable(order, kV, p.v()),
           Jet(order), Jet(order)};
  c.tau = c.x + kI * c.y;
  c.z = c.u + kI * c.v;
  return c;
}

double residual(cplx lhs, cplx rhs, double scale) {
  return std::abs(lhs - rhs) / std::max({1.0, std::abs(rhs), scale});
}

}  // namespace mjlab
