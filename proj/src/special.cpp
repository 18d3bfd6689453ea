#include "mjlab/special.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_dawson.h>
#include <gsl/gsl_sf_expint.h>
#include <gsl/gsl_sf_gamma.h>

#include <cmath>

namespace mjlab {

namespace {

struct GslInit {
  GslInit() { gsl_set_error_handler_off(); }
};
const GslInit gsl_init;

bool is_integer(double s) { return std::abs(s - std::round(s)) < 1e-12; }

double checked(double v, const char* what) {
  if (!std::isfinite(v)) fail(ErrorKind::NonFinite, what);
  return v;
}

const double kSqrtPi = std::sqrt(kPi);

}  // namespace

double lower_incomplete_gamma(double s, double x) {
  if (!(s > 0.0) || !(x >= 0.0)) fail(ErrorKind::DomainError, "lower gamma needs s > 0 and x >= 0");
  if (x == 0.0) return 0.0;
  gsl_sf_result p;
  if (gsl_sf_gamma_inc_P_e(s, x, &p) != GSL_SUCCESS) fail(ErrorKind::NonFinite, "gamma_inc_P failed");
  return checked(p.val * std::tgamma(s), "lower incomplete gamma");
}

double upper_incomplete_gamma(double s, double x) {
  if (!(x > 0.0)) fail(ErrorKind::DomainError, "upper gamma needs x > 0");
  gsl_sf_result r;
  if (gsl_sf_gamma_inc_e(s, x, &r) != GSL_SUCCESS) fail(ErrorKind::NonFinite, "gamma_inc failed");
  return checked(r.val, "upper incomplete gamma");
}

double upper_gamma_extended(double s, double x) {
  if (x > 0.0) return upper_incomplete_gamma(s, x);
  if (x == 0.0) {
    if (s > 0.0) return std::tgamma(s);
    fail(ErrorKind::DomainError, "Gamma(s, 0) diverges for s <= 0");
  }
  if (!is_integer(s)) fail(ErrorKind::DomainError, "Gamma(s, x) at x < 0 needs integer s");
  int n = static_cast<int>(std::lround(s));
  if (n >= 1) {
    // (n-1)! e^{-x} sum_{j<n} x^j / j!
    double term = 1.0, sum = 0.0;
    for (int j = 0; j < n; ++j) {
      sum += term;
      term *= x / (j + 1);
    }
    return checked(std::tgamma(n) * std::exp(-x) * sum, "upper gamma finite sum");
  }
  double g = -gsl_sf_expint_Ei(-x);
  for (int t = 0; t > n; --t) {
    // Gamma(t-1, x) = (Gamma(t, x) - x^{t-1} e^{-x}) / (t-1)
    g = (g - std::pow(x, t - 1) * std::exp(-x)) / (t - 1);
  }
  return checked(g, "upper gamma recurrence");
}

double H_function(double w, double k) {
  if (w == 0.0) fail(ErrorKind::DomainError, "H is not defined at w = 0");
  double s = 1.5 - k;
  if (w < 0.0) return checked(std::exp(-w) * upper_incomplete_gamma(s, -2.0 * w), "H");
  if (!is_integer(s)) fail(ErrorKind::DomainError, "H at w > 0 needs k in Z + 1/2");
  return checked(std::exp(-w) * upper_gamma_extended(s, -2.0 * w), "H");
}

double error_completion_E(double w) {
  if (w == 0.0) return 0.0;
  double g = lower_incomplete_gamma(0.5, kPi * w * w) / kSqrtPi;
  return w > 0.0 ? g : -g;
}

double erfcx(double x) {
  if (x < 25.0) return std::exp(x * x) * std::erfc(x);
  // Asymptotic expansion; the first omitted term is below 1e-20 here.
  double inv2 = 1.0 / (2.0 * x * x), term = 1.0, sum = 1.0;
  for (int n = 1; n <= 8; ++n) {
    term *= -(2 * n - 1) * inv2;
    sum += term;
  }
  return sum / (x * kSqrtPi);
}

cplx erf_axis(cplx w) {
  if (w.imag() == 0.0) return std::erf(w.real());
  if (w.real() == 0.0) {
    double X = w.imag();
    double erfi = 2.0 / kSqrtPi * std::exp(X * X) * gsl_sf_dawson(X);
    return {0.0, checked(erfi, "erfi overflow")};
  }
  fail(ErrorKind::DomainError, "erf is only provided on the real and imaginary axes");
}

Jet upper_gamma_jet(double s, const Jet& x) {
  int n = x.order();
  double x0 = x.value().real();
  std::vector<cplx> a(n + 1);
  a[0] = upper_gamma_extended(s, x0);
  if (n > 0) {
    // d/dx Gamma(s, x) = -x^{s-1} e^{-x} = -x0^{s-1} e^{-x0} (1 + t/x0)^{s-1} e^{-t}
    double lead = -std::pow(x0, s - 1.0) * std::exp(-x0);
    if (x0 < 0.0 && !is_integer(s)) fail(ErrorKind::DomainError, "non-integer order at negative argument");
    std::vector<cplx> binom(n), et(n);
    double b = 1.0, e = 1.0;
    for (int j = 0; j < n; ++j) {
      binom[j] = b;
      et[j] = e;
      b *= (s - 1.0 - j) / ((j + 1) * x0);
      e *= -1.0 / (j + 1);
    }
    auto prod = series::mul(binom, et, n - 1);
    for (int k = 1; k <= n; ++k) a[k] = lead * prod[k - 1] / static_cast<double>(k);
  }
  return compose(a, x);
}

Jet erf_jet(const Jet& w) {
  int n = w.order();
  cplx w0 = w.value();
  std::vector<cplx> a(n + 1);
  a[0] = erf_axis(w0);
  if (n > 0) {
    cplx lead = 2.0 / kSqrtPi * std::exp(-w0 * w0);
    auto g = series::gaussian_shift(w0, n - 1);
    for (int k = 1; k <= n; ++k) a[k] = lead * g[k - 1] / static_cast<double>(k);
  }
  return compose(a, w);
}

Jet jacobi_theta(const Jet& tau, const Jet& z, const TruncationPolicy& policy, SeriesInfo* info) {
  double y0 = tau.value().imag(), v0 = z.value().imag();
  SeriesInfo si = truncation_radius(kPi * y0, 2.0 * kPi * std::abs(v0), std::log(2.0), policy);
  if (info) *info = si;
  Jet sum(std::min(tau.order(), z.order()));
  for (int j = -si.radius; j < si.radius; ++j) {
    double r = j + 0.5;
    double sign = (j % 2 == 0) ? -1.0 : 1.0;  // (-1)^{r+1/2} = (-1)^{j+1}
    sum += sign * exp(kI * kPi * r * r * tau + 2.0 * kPi * kI * r * z);
  }
  return sum;
}

Jet theta_ml(int two_m, int l, const Jet& tau, const Jet& z, const TruncationPolicy& policy, SeriesInfo* info) {
  if (two_m <= 0) fail(ErrorKind::DomainError, "theta_ml needs m > 0");
  double y0 = tau.value().imag(), v0 = z.value().imag();
  SeriesInfo si = truncation_radius(kPi * y0 / two_m, 2.0 * kPi * std::abs(v0), std::log(2.0), policy);
  if (info) *info = si;
  int base = ((l % two_m) + two_m) % two_m;
  Jet sum(std::min(tau.order(), z.order()));
  // r = base + two_m * j with |r| <= radius
  int jlo = static_cast<int>(std::floor(double(-si.radius - base) / two_m));
  int jhi = static_cast<int>(std::ceil(double(si.radius - base) / two_m));
  for (int j = jlo; j <= jhi; ++j) {
    double r = base + two_m * j;
    if (std::abs(r) > si.radius) continue;
    sum += exp(kI * kPi * (r * r / two_m) * tau + 2.0 * kPi * kI * r * z);
  }
  return sum;
}

Jet correction_R(const Jet& tau, const Jet& z, const TruncationPolicy& policy, SeriesInfo* info) {
  double y0 = tau.value().imag(), v0 = z.value().imag();
  SeriesInfo si = truncation_radius(kPi * y0, 2.0 * kPi * std::abs(v0), std::log(2.0), policy);
  if (info) *info = si;
  int order = std::min(tau.order(), z.order());
  Jet y = tau.imag().truncated(order), v = z.imag().truncated(order);
  Jet sy = sqrt(y);
  Jet isy = inverse(sy);
  Jet sum(order);
  const double c2pi = std::sqrt(2.0 * kPi);
  for (int j = -si.radius; j < si.radius; ++j) {
    double nn = j + 0.5;
    double s = nn > 0 ? 1.0 : -1.0;
    double phase = (j % 2 == 0) ? 1.0 : -1.0;  // (-1)^{n-1/2} = (-1)^j
    // sgn(n) - E(sqrt(2y)(n + v/y)) = s * erfc(X), X = s sqrt(2 pi)(n sqrt(y) + v / sqrt(y))
    Jet X = (s * c2pi) * (nn * sy + v * isy);
    double X0 = X.value().real();
    double S = X0 >= 0.0 ? X0 * X0 : 0.0;
    std::vector<cplx> a(order + 1);
    a[0] = X0 >= 0.0 ? erfcx(X0) : std::erfc(X0);
    if (order > 0) {
      double lead = -2.0 / kSqrtPi * std::exp(S - X0 * X0);
      auto g = series::gaussian_shift(X0, order - 1);
      for (int k = 1; k <= order; ++k) a[k] = lead * g[k - 1] / static_cast<double>(k);
    }
    Jet ex = exp(-kI * kPi * nn * nn * tau - 2.0 * kPi * kI * nn * z - S);
    sum += (s * phase) * (ex * compose(a, X));
  }
  return sum;
}

cplx jacobi_theta(const EvalPoint& p, const TruncationPolicy& policy, SeriesInfo* info) {
  auto c = coords(p, 0);
  return jacobi_theta(c.tau, c.z, policy, info).value();
}

cplx theta_ml(int two_m, int l, const EvalPoint& p, const TruncationPolicy& policy, SeriesInfo* info) {
  auto c = coords(p, 0);
  return theta_ml(two_m, l, c.tau, c.z, policy, info).value();
}

cplx correction_R(const EvalPoint& p, const TruncationPolicy& policy, SeriesInfo* info) {
  auto c = coords(p, 0);
  return correction_R(c.tau, c.z, policy, info).value();
}

Function theta_function(const TruncationPolicy& policy) {
  return Function::exact([policy](const EvalPoint& p, int n) {
    auto c = coords(p, n);
    return jacobi_theta(c.tau, c.z, policy);
  });
}

Function theta_ml_function(int two_m, int l, const TruncationPolicy& policy) {
  return Function::exact([two_m, l, policy](const EvalPoint& p, int n) {
    auto c = coords(p, n);
    return theta_ml(two_m, l, c.tau, c.z, policy);
  });
}

Function correction_R_function(const TruncationPolicy& policy) {
  return Function::exact([policy](const EvalPoint& p, int n) {
    auto c = coords(p, n);
    return correction_R(c.tau, c.z, policy);
  });
}

Function monomial_function(double n, double r) {
  return Function::exact([n, r](const EvalPoint& p, int order) {
    auto c = coords(p, order);
    return exp(2.0 * kPi * kI * (n * c.tau + r * c.z));
  });
}

}  // namespace mjlab
