#include <gsl/gsl_integration.h>

#include <cmath>
#include <functional>

#include "doctest.h"
#include "mjlab/special.hpp"

using namespace mjlab;

namespace {

// Adaptive quadrature oracle on [a, inf) or [a, b].
double integrate(std::function<double(double)> f, double a, double b = INFINITY) {
  gsl_integration_workspace* ws = gsl_integration_workspace_alloc(2000);
  gsl_function g;
  g.function = [](double t, void* ctx) { return (*static_cast<std::function<double(double)>*>(ctx))(t); };
  g.params = &f;
  double result = 0.0, err = 0.0;
  if (std::isinf(b)) gsl_integration_qagiu(&g, a, 0.0, 1e-13, 2000, ws, &result, &err);
  else gsl_integration_qags(&g, a, b, 0.0, 1e-13, 2000, ws, &result, &err);
  gsl_integration_workspace_free(ws);
  return result;
}

double upper_gamma_oracle(double s, double x) {
  return integrate([s](double t) { return std::pow(t, s - 1.0) * std::exp(-t); }, x);
}

const TruncationPolicy kPolicy{};

}  // namespace

TEST_CASE("lower incomplete gamma") {
  CHECK(lower_incomplete_gamma(1, 1) == doctest::Approx(1 - std::exp(-1.0)).epsilon(1e-14));
  CHECK(std::abs(lower_incomplete_gamma(0.5, 40) - std::sqrt(kPi)) < 1e-12);
  double oracle = integrate([](double t) { return std::pow(t, -0.5) * std::exp(-t); }, 0.0, 1.0);
  CHECK(std::abs(lower_incomplete_gamma(0.5, 1) - oracle) < 1e-10);
  CHECK_THROWS_AS(lower_incomplete_gamma(-0.5, 1), Error);
}

TEST_CASE("upper incomplete gamma") {
  CHECK(upper_incomplete_gamma(1, 1) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  double rec = upper_incomplete_gamma(1.5, 2) - (0.5 * upper_incomplete_gamma(0.5, 2) + std::sqrt(2.0) * std::exp(-2.0));
  CHECK(std::abs(rec) < 1e-12);
  CHECK(std::abs(upper_incomplete_gamma(-0.5, 1) - upper_gamma_oracle(-0.5, 1)) < 1e-10);
  CHECK(std::abs(upper_incomplete_gamma(-1, 2) - upper_gamma_oracle(-1, 2)) < 1e-10);
}

TEST_CASE("upper gamma at negative argument for integer order") {
  // Gamma(1, -x) = e^{x}, Gamma(2, -x) = (1 - x) e^{x}
  CHECK(upper_gamma_extended(1, -0.7) == doctest::Approx(std::exp(0.7)).epsilon(1e-14));
  CHECK(upper_gamma_extended(2, -0.7) == doctest::Approx(0.3 * std::exp(0.7)).epsilon(1e-13));
  CHECK_THROWS_AS(upper_gamma_extended(0.5, -1.0), Error);
}

TEST_CASE("H function") {
  for (double w : {-1.0, -0.3, 0.4, 2.0}) CHECK(H_function(w, 0.5) == doctest::Approx(std::exp(w)).epsilon(1e-13));
  CHECK(H_function(-1, 0.5) == doctest::Approx(0.3678794).epsilon(1e-7));
  CHECK(std::abs(H_function(-1, 2.5) - std::exp(1.0) * upper_gamma_oracle(-1, 2)) < 1e-10);
  for (double w : {-0.4, -1.5}) {
    double direct = std::exp(-w) * integrate([](double t) { return t * std::exp(-t); }, -2 * w);
    CHECK(std::abs(H_function(w, -0.5) - direct) < 1e-10);
  }
}

TEST_CASE("error completion E") {
  CHECK(error_completion_E(0) == 0.0);
  for (double w : {0.3, 1.0, 2.5}) CHECK(std::abs(error_completion_E(w) + error_completion_E(-w)) < 1e-14);
  CHECK(std::abs(error_completion_E(10) - 1.0) < 1e-12);
  double oracle = 2.0 * integrate([](double u) { return std::exp(-kPi * u * u); }, 0.0, 0.7);
  CHECK(std::abs(error_completion_E(0.7) - oracle) < 1e-13);
}

TEST_CASE("jacobi theta") {
  EvalPoint i0(0, 1, 0, 0);
  CHECK(std::abs(jacobi_theta(i0, kPolicy)) < 1e-14);
  cplx z(0.3, 0.1);
  CHECK(std::abs(jacobi_theta(EvalPoint::from(kI, -z), kPolicy) + jacobi_theta(EvalPoint::from(kI, z), kPolicy)) <
        1e-12);
  cplx w(0, 0.2);
  CHECK(std::abs(jacobi_theta(EvalPoint::from(kI, w + 1.0), kPolicy) + jacobi_theta(EvalPoint::from(kI, w), kPolicy)) <
        1e-12);
}

TEST_CASE("theta_{m,l}") {
  double want = 1 + 2 * std::exp(-2 * kPi) + 2 * std::exp(-8 * kPi);
  CHECK(std::abs(theta_ml(2, 0, EvalPoint(0, 1, 0, 0), kPolicy) - want) < 1e-10);
  EvalPoint p(0.1, 1.2, 0.3, 0.1);
  CHECK(theta_ml(2, 0, p, kPolicy) == theta_ml(2, 2, p, kPolicy));
  // odd residues at integral shifts of z are unchanged, half-integral shifts flip the sign
  EvalPoint q(0, 1, 0, 0.1);
  CHECK(std::abs(theta_ml(2, 1, EvalPoint(0, 1, 1, 0.1), kPolicy) - theta_ml(2, 1, q, kPolicy)) < 1e-12);
  CHECK(std::abs(theta_ml(2, 1, EvalPoint(0, 1, 0.5, 0.1), kPolicy) + theta_ml(2, 1, q, kPolicy)) < 1e-12);
}

TEST_CASE("theta_{m,l} is annihilated by the heat operator") {
  Function th = theta_ml_function(4, 1);
  for (auto p : {EvalPoint(0.2, 1.1, 0.1, 0.3), EvalPoint(-0.4, 0.8, -0.2, 0.1)}) {
    Jet j = th.jet(p, 2);
    cplx heat = 8.0 * kPi * kI * 2.0 * d_tau(j).value() - d_z(d_z(j)).value();
    CHECK(std::abs(heat) / std::max(1.0, std::abs(th(p))) < 1e-10);
  }
}

TEST_CASE("correction function R") {
  cplx z(0.2, 0.1);
  CHECK(std::abs(correction_R(EvalPoint::from(kI, -z), kPolicy) - correction_R(EvalPoint::from(kI, z), kPolicy)) < 1e-10);
  TruncationPolicy fine;
  fine.radius_override = 40;
  EvalPoint p(0, 1, 0, 0);
  CHECK(std::abs(correction_R(p, kPolicy) - correction_R(p, fine)) < 1e-13);
}

TEST_CASE("overflow past the maximum radius") {
  TruncationPolicy tiny;
  tiny.max_radius = 2;
  CHECK_THROWS_AS(theta_ml(2, 0, EvalPoint(0, 0.05, 0, 0), tiny), Error);
}
