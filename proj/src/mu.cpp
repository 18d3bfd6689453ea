#include "mjlab/mu.hpp"

#include <cmath>
#include <map>
#include <utility>

namespace mjlab {

namespace {

bool near_integer(double t, double tol) { return std::abs(t - std::round(t)) < tol; }

void check_theta_pole(cplx z, cplx tau) {
  // z = a tau + b with integer a, b
  double a = z.imag() / tau.imag();
  double b = z.real() - a * tau.real();
  if (near_integer(a, 1e-10) && near_integer(b, 1e-10)) fail(ErrorKind::PoleAtTheta, "theta(z2; tau) vanishes");
}

// Multiplicities of (|n|, sum n_i^2) over the box [-R, R]^{rank}.
using Counts = std::map<std::pair<int, int>, double>;

Counts box_counts(int rank, int R) {
  Counts cur{{{0, 0}, 1.0}};
  for (int i = 0; i < rank; ++i) {
    Counts next;
    for (const auto& [key, cnt] : cur)
      for (int n = -R; n <= R; ++n) next[{key.first + n, key.second + n * n}] += cnt;
    cur.swap(next);
  }
  return cur;
}

}  // namespace

Jet mu_m(int two_m, const Jet& z1, const Jet& z2, const Jet& tau, const TruncationPolicy& policy,
         SeriesInfo* info) {
  if (two_m <= 0 || two_m > kMaxMuRank) fail(ErrorKind::DomainError, "mu_m supports 1 <= 2m <= 6");
  const cplx t0 = tau.value(), w2 = z2.value();
  check_theta_pole(w2, t0);
  const double y = t0.imag();
  // per-coordinate log bound: -pi y (n^2 + n) - 2 pi n Im(z2)
  SeriesInfo si = truncation_radius(kPi * y, kPi * y + 2.0 * kPi * std::abs(w2.imag()),
                                    std::log(2.0 * two_m), policy);
  if (info) *info = si;
  const int order = std::min({z1.order(), z2.order(), tau.order()});
  Counts counts = box_counts(two_m, si.radius);

  // log of the Appell denominator argument e^{2 pi i z1} q^s
  auto log_w = [&](int s) { return 2.0 * kPi * kI * (z1 + s * tau); };
  std::map<int, Jet> inv_den;  // 1 / (1 - w) or, for |w| > 1, -w^{-1}/(1 - w^{-1}) with w^{-1} folded later
  std::map<int, bool> flipped;
  Jet sum(order);
  for (const auto& [key, cnt] : counts) {
    const int s = key.first, j = key.second;
    if (!inv_den.count(s)) {
      Jet lw = log_w(s).truncated(order);
      double mod = std::exp(lw.value().real());
      bool flip = mod > 1.0;
      Jet w = exp(flip ? -lw : lw);
      cplx den0 = 1.0 - w.value();
      if (std::abs(den0) < 1e-12) fail(ErrorKind::PoleAtAppell, "Appell denominator vanishes");
      inv_den[s] = inverse(1.0 - w);
      flipped[s] = flip;
    }
    // (-1)^s q^{(j + s)/2} e^{2 pi i s z2}, times w^{-1} when flipped
    Jet expo = kI * kPi * double(j + s) * tau + 2.0 * kPi * kI * double(s) * z2;
    double sign = (s % 2 == 0) ? 1.0 : -1.0;
    if (flipped[s]) {
      expo -= log_w(s);
      sign = -sign;
    }
    sum += (sign * cnt) * (exp(expo.truncated(order)) * inv_den[s]);
  }
  Jet th = jacobi_theta(tau, z2, policy);
  if (std::abs(th.value()) < 1e-300) fail(ErrorKind::PoleAtTheta, "theta(z2; tau) vanishes");
  return exp(kI * kPi * z1) * powi(inverse(th), two_m) * sum;
}

cplx mu_m(int two_m, cplx z1, cplx z2, cplx tau, const TruncationPolicy& policy, SeriesInfo* info) {
  return mu_m(two_m, Jet(0, z1), Jet(0, z2), Jet(0, tau), policy, info).value();
}

namespace {

Jet prefactor(int two_m, int l, const Jet& tau, const Jet& z) {
  const double m = 0.5 * two_m;
  const double lm = l + m;
  // e^{pi i m} q^{-(l+m)^2/4m} zeta^{-(l+m)}
  return exp(kI * kPi * m - 2.0 * kPi * kI * (lm * lm / (4.0 * m)) * tau - 2.0 * kPi * kI * lm * z);
}

Jet R_argument_z(int two_m, int l, const Jet& tau, const Jet& z) {
  const double m = 0.5 * two_m;
  return two_m * z + (l + m) * tau - cplx(0.5 * (two_m + 1));
}

}  // namespace

Jet mu_part_ml(int two_m, int l, const Jet& tau, const Jet& z, const TruncationPolicy& policy,
               SeriesInfo* info) {
  const double m = 0.5 * two_m;
  Jet z1 = 0.5 + (l + m) * tau;
  Jet z2 = cplx(1.0 / (4.0 * m)) - z;
  return prefactor(two_m, l, tau, z) * mu_m(two_m, z1, z2, tau, policy, info);
}

Jet R_hat_ml(int two_m, int l, const Jet& tau, const Jet& z, const TruncationPolicy& policy, SeriesInfo* info) {
  Jet R = correction_R(double(two_m) * tau, R_argument_z(two_m, l, tau, z), policy, info);
  return (-0.5 * kI) * (prefactor(two_m, l, tau, z) * R);
}

Jet mu_hat_ml(int two_m, int l, const Jet& tau, const Jet& z, const TruncationPolicy& policy, SeriesInfo* info) {
  SeriesInfo a, b;
  Jet out = mu_part_ml(two_m, l, tau, z, policy, &a) + R_hat_ml(two_m, l, tau, z, policy, &b);
  if (info) *info = {std::max(a.radius, b.radius), a.est_tail + b.est_tail};
  return out;
}

Jet appell_mu(const Jet& u, const Jet& v, const Jet& tau, const TruncationPolicy& policy) {
  // theta of the classical normalisation is -i times jacobi_theta
  return kI * mu_m(1, u, v, tau, policy);
}

Jet appell_mu_hat(const Jet& u, const Jet& v, const Jet& tau, const TruncationPolicy& policy) {
  return appell_mu(u, v, tau, policy) + (0.5 * kI) * correction_R(tau, u - v, policy);
}

Jet mu_hat_2(const Jet& tau, const Jet& z, const TruncationPolicy& policy) {
  Jet half = 0.5 * (1.0 + tau);
  return appell_mu_hat(z + half, half, tau, policy);
}

Function mu_hat_function(int two_m, int l, const TruncationPolicy& policy) {
  return Function::exact([=](const EvalPoint& p, int n) {
    auto c = coords(p, n);
    return mu_hat_ml(two_m, l, c.tau, c.z, policy);
  });
}

Function R_hat_function(int two_m, int l, const TruncationPolicy& policy) {
  return Function::exact([=](const EvalPoint& p, int n) {
    auto c = coords(p, n);
    return R_hat_ml(two_m, l, c.tau, c.z, policy);
  });
}

Function mu_part_function(int two_m, int l, const TruncationPolicy& policy) {
  return Function::exact([=](const EvalPoint& p, int n) {
    auto c = coords(p, n);
    return mu_part_ml(two_m, l, c.tau, c.z, policy);
  });
}

Function mu_hat_2_function(const TruncationPolicy& policy) {
  return Function::exact([=](const EvalPoint& p, int n) {
    auto c = coords(p, n);
    return mu_hat_2(c.tau, c.z, policy);
  });
}

}  // namespace mjlab
