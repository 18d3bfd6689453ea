#include <cmath>

#include "doctest.h"
#include "mjlab/core.hpp"
#include "mjlab/special.hpp"

using namespace mjlab;

TEST_CASE("jets of a constant have no derivatives") {
  Function one = Function::exact([](const EvalPoint&, int n) { return Jet::constant(n, 1.0); });
  Jet j = one.jet(EvalPoint(0.3, 1.4, -0.2, 0.5), 3);
  CHECK(std::abs(j.value() - 1.0) < 1e-15);
  for (std::size_t i = 1; i < j.coeffs().size(); ++i) CHECK(std::abs(j.coeffs()[i]) < 1e-12);
  Jet fd = finite_difference_jet(Function::sampled([](const EvalPoint&) { return cplx(1.0); }),
                                 EvalPoint(0.3, 1.4, -0.2, 0.5), 2);
  for (std::size_t i = 1; i < fd.coeffs().size(); ++i) CHECK(std::abs(fd.coeffs()[i]) < 1e-12);
}

TEST_CASE("q has tau derivative 2 pi i q and no taubar derivative") {
  Function q = monomial_function(1, 0);
  EvalPoint p(0, 1, 0, 0);
  Jet j = q.jet(p, 1);
  cplx want = 2.0 * kPi * kI * std::exp(-2.0 * kPi);
  CHECK(std::abs(d_tau(j).value() - want) < 1e-9);
  CHECK(std::abs(d_taubar(j).value()) < 1e-9);
}

TEST_CASE("zeta: exact and finite-difference z derivatives agree") {
  Function zeta = monomial_function(0, 1);
  EvalPoint p(0, 1, 0.1, 0.2);
  cplx exact = d_z(zeta.jet(p, 1)).value() / zeta(p);
  CHECK(std::abs(exact - 2.0 * kPi * kI) / (2.0 * kPi) < 1e-12);
  Function sampled = Function::sampled([zeta](const EvalPoint& q) { return zeta(q); });
  cplx fd = d_z(sampled.jet(p, 1)).value() / zeta(p);
  CHECK(std::abs(fd - 2.0 * kPi * kI) / (2.0 * kPi) < 1e-8);
}

TEST_CASE("principal square root") {
  CHECK(std::abs(principal_sqrt(4.0) - 2.0) < 1e-15);
  CHECK(std::abs(principal_sqrt(-1.0) - kI) < 1e-15);
  CHECK(std::abs(principal_sqrt(kI) - std::exp(kI * kPi / 4.0)) < 1e-15);
}

TEST_CASE("Richardson halving improves first-order differences by at least 8") {
  Function f = theta_ml_function(2, 1);
  EvalPoint p(0.1, 1.1, 0.15, 0.05);
  Jet exact = f.jet(p, 1);
  auto err = [&](double h) {
    Jet fd = finite_difference_jet(f, p, 1, h);
    double e = 0.0;
    for (std::size_t i = 1; i < fd.coeffs().size(); ++i) e = std::max(e, std::abs(fd.coeffs()[i] - exact.coeffs()[i]));
    return e;
  };
  double coarse = err(0.04), fine = err(0.02);
  CHECK(coarse / fine >= 8.0);
}

TEST_CASE("finite-difference jets are capped at order 3") {
  Function s = Function::sampled([](const EvalPoint& p) { return cplx(p.x() * p.y()); });
  CHECK_THROWS_AS(s.jet(EvalPoint(0, 1, 0, 0), 4), Error);
}

TEST_CASE("truncation radius grows with a smaller tail bound and overflows") {
  TruncationPolicy loose;
  loose.tail_bound = 1e-6;
  TruncationPolicy tight;
  tight.tail_bound = 1e-14;
  CHECK(truncation_radius(0.5, 0, 0, loose).radius <= truncation_radius(0.5, 0, 0, tight).radius);
  TruncationPolicy small;
  small.max_radius = 3;
  CHECK_THROWS_AS(truncation_radius(1e-4, 0, 0, small), Error);
  TruncationPolicy bad;
  bad.tail_bound = 0.0;
  CHECK_THROWS(bad.validate());
}

TEST_CASE("residual is relative above one and absolute below") {
  CHECK(residual(cplx(101), cplx(100)) == doctest::Approx(0.01));
  CHECK(residual(cplx(0.5), cplx(0.25)) == doctest::Approx(0.25));
}
