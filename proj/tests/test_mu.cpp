#include "doctest.h"
#include "mjlab/group.hpp"
#include "mjlab/mu.hpp"
#include "mjlab/operators.hpp"
#include "mjlab/verify.hpp"
#include "mjlab/weil.hpp"
#include "test_util.hpp"

using namespace mjlab;
using mjlab::testing::max_relative_size;
using mjlab::testing::max_residual;
using mjlab::testing::some_points;

namespace {

const TruncationPolicy kPolicy{};

TruncationPolicy radius(int r) { return TruncationPolicy{}.with_radius(r); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::ParseError;
}

Jet J(cplx w) { return Jet::constant(0, w); }

}  // namespace

TEST_CASE("mu_m agrees with a radius 50 summation") {
  cplx z1(0.3, 0.2), z2(0.1, 0.3), tau = kI;
  cplx a = mu_m(1, z1, z2, tau, kPolicy);
  cplx b = mu_m(1, z1, z2, tau, radius(50));
  CHECK(std::abs(a - b) < 1e-12 * std::max(1.0, std::abs(b)));
  CHECK(std::abs(a - cplx(-0.0022791799668521046, 0.44582463526598315)) < 1e-12);
  cplx c = mu_m(2, z1, z2, tau, kPolicy), d = mu_m(2, z1, z2, tau, radius(30));
  CHECK(std::abs(c - d) < 1e-12 * std::max(1.0, std::abs(d)));
}

TEST_CASE("mu_m poles") {
  CHECK(kind_of([] { mu_m(1, 0.0, cplx(0.1, 0.3), kI, kPolicy); }) == ErrorKind::PoleAtAppell);
  CHECK(kind_of([] { mu_m(1, cplx(0.3, 0.2), 0.0, kI, kPolicy); }) == ErrorKind::PoleAtTheta);
  CHECK(kind_of([] { mu_m(1, cplx(0.3, 0.2), 1.0 + kI, kI, kPolicy); }) == ErrorKind::PoleAtTheta);
  CHECK(kind_of([] { mu_m(kMaxMuRank + 1, cplx(0.3, 0.2), cplx(0.1, 0.3), kI, kPolicy); }) == ErrorKind::DomainError);
}

TEST_CASE("mu-hat at a fixed point is stable under radius doubling") {
  EvalPoint p(0, 1.2, 0.17, 0.05);
  SeriesInfo info;
  Jet a = mu_hat_ml(2, 0, J(p.tau()), J(p.z()), kPolicy, &info);
  Jet b = mu_hat_ml(2, 0, J(p.tau()), J(p.z()), radius(2 * info.radius));
  CHECK(std::isfinite(std::abs(a.value())));
  CHECK(std::abs(a.value() - b.value()) < 1e-10);
}

TEST_CASE("mu-hat splits into the Appell part and R-hat") {
  for (int tm : {1, 2, 3})
    for (int l = 0; l < tm; ++l) {
      Function whole = mu_hat_function(tm, l), a = mu_part_function(tm, l), r = R_hat_function(tm, l);
      CHECK(max_residual(some_points(), whole, a + r) < 1e-10);
    }
}

TEST_CASE("R-hat is finite on a grid in the fundamental cell") {
  Function r = R_hat_function(2, 1);
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) CHECK(std::isfinite(std::abs(r(EvalPoint(0.1, 1.0, 0.1 * i, 0.1 * j)))));
}

TEST_CASE("T law of mu-hat at m = 1") {
  WeightIndex w(1, -2);
  for (int l : {0, 1}) {
    Function mu = mu_hat_function(2, l);
    CHECK(max_residual(some_points(), slash(mu, w, JacobiElement::T()), e_n(4, -double(l) * l) * mu) < 1e-6);
  }
}

TEST_CASE("mu-hat is invariant under the mu-translation at index -m") {
  for (int tm : {1, 2}) {
    WeightIndex w(1, -tm);
    Function mu = mu_hat_function(tm, 0);
    CHECK(max_residual(some_points(), slash(mu, w, JacobiElement::heisenberg(0, 1)), mu) < 1e-8);
  }
}

TEST_CASE("xi^H of mu-hat only sees R-hat and gives theta") {
  WeightIndex w(1, -2);
  for (int l : {0, 1}) {
    Function img = apply({OpName::XiH, w}, mu_hat_function(2, l));
    CHECK(max_residual(some_points(), img, apply({OpName::XiH, w}, R_hat_function(2, l))) < 1e-7);
    CHECK(max_residual(some_points(), img, kXiHMuConstant * theta_ml_function(2, l)) < 1e-8);
  }
}

TEST_CASE("two-variable mu is symmetric") {
  cplx u(0.2, 0.1), v(0.3, 0.2);
  cplx a = appell_mu(J(u), J(v), J(kI), kPolicy).value();
  cplx b = appell_mu(J(v), J(u), J(kI), kPolicy).value();
  CHECK(std::abs(a - b) < 1e-9);
  cplx ah = appell_mu_hat(J(u), J(v), J(kI), kPolicy).value();
  cplx bh = appell_mu_hat(J(v), J(u), J(kI), kPolicy).value();
  CHECK(std::abs(ah - bh) < 1e-9);
}

TEST_CASE("mu-hat_2 is annihilated by xi at weight 1/2, index -1/2") {
  Function mu2 = mu_hat_2_function();
  Function img = apply({OpName::Xi, WeightIndex(1, -1)}, mu2);
  CHECK(max_relative_size(some_points(), img, mu2) < 1e-6);
}

TEST_CASE("mu-hat_2 has poles at the zeros of theta(z + (1+tau)/2)") {
  // theta vanishes on Z + tau Z, so the pole sits at z = -(1+tau)/2 mod the lattice
  cplx tau = kI;
  cplx z = -(1.0 + tau) / 2.0 + 1.0 + tau;
  // the Appell denominator vanishes at the same point, whichever is detected first is reported
  ErrorKind k = kind_of([&] { mu_hat_2(J(tau), J(z), kPolicy); });
  CHECK((k == ErrorKind::PoleAtTheta || k == ErrorKind::PoleAtAppell));
  CHECK(std::isfinite(std::abs(mu_hat_2(J(tau), J(z + 0.2), kPolicy).value())));
}
