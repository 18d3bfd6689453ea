#include "doctest.h"
#include "mjlab/special.hpp"
#include "mjlab/weil.hpp"

using namespace mjlab;

namespace {

double dist(const WeilMatrix& A, const WeilMatrix& B) { return (A - B).cwiseAbs().maxCoeff(); }

WeilVector theta_vector(int two_m, const EvalPoint& p) {
  WeilVector h(two_m);
  for (int l = 0; l < two_m; ++l) h(l) = theta_ml(two_m, l, p, TruncationPolicy{});
  return h;
}

}  // namespace

TEST_CASE("generators at m = 1") {
  WeilMatrix T = rho_generator(2, Generator::T);
  WeilMatrix wantT = WeilMatrix::Zero(2, 2);
  wantT(0, 0) = 1.0;
  wantT(1, 1) = kI;
  CHECK(dist(T, wantT) < 1e-15);
  WeilMatrix S = rho_generator(2, Generator::S);
  WeilMatrix wantS(2, 2);
  wantS << 1.0, 1.0, 1.0, -1.0;
  wantS /= principal_sqrt(2.0 * kI);
  CHECK(dist(S, wantS) < 1e-15);
  CHECK(dist(rho_generator(2, Generator::S, true), wantS.conjugate()) < 1e-15);
}

TEST_CASE("generators are unitary") {
  for (int tm : {1, 2, 3, 4})
    for (Generator g : {Generator::T, Generator::S}) {
      WeilMatrix M = rho_generator(tm, g);
      CHECK(dist(M * M.adjoint(), WeilMatrix::Identity(tm, tm)) < 1e-13);
    }
}

TEST_CASE("words") {
  CHECK(dist(rho_word(3, "T"), rho_generator(3, Generator::T)) < 1e-15);
  CHECK(dist(rho_word(2, "ST"), rho_generator(2, Generator::S) * rho_generator(2, Generator::T)) < 1e-15);
  CHECK(dist(rho_word(2, ""), WeilMatrix::Identity(2, 2)) < 1e-15);
  CHECK_THROWS_AS(rho_word(2, "SX"), Error);
}

TEST_CASE("S has order 8") {
  for (int tm : {1, 2, 3, 4}) CHECK(dist(rho_word(tm, "SSSSSSSS"), WeilMatrix::Identity(tm, tm)) < 1e-12);
}

TEST_CASE("braid relation (ST)^3 = S^2 for even 2m") {
  for (int tm : {2, 4}) CHECK(dist(rho_word(tm, "STSTST"), rho_word(tm, "SS")) < 1e-12);
}

// e_{4m}(l^2) is not a function of l mod 2m when 2m is odd.
TEST_CASE("braid relation (ST)^3 = S^2 for 2m = 1" * doctest::should_fail()) {
  CHECK(dist(rho_word(1, "STSTST"), rho_word(1, "SS")) < 1e-12);
}

TEST_CASE("the theta vector is invariant under the dual vector slash") {
  for (auto p : {EvalPoint(0.1, 1.1, 0, 0), EvalPoint(-0.2, 0.9, 0, 0), EvalPoint(0.3, 1.4, 0.1, 0.05)}) {
    VectorFn h = [](const EvalPoint& q) { return theta_vector(2, q); };
    for (const char* word : {"T", "S"}) {
      WeilVector got = vector_slash(h, 0.5, 1.0, word, p, 2, true);
      CHECK((got - h(p)).cwiseAbs().maxCoeff() < 1e-9);
    }
    CHECK((vector_slash(h, 0.5, 1.0, "", p, 2, true) - h(p)).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("e_n") {
  CHECK(std::abs(e_n(4, 1) - kI) < 1e-15);
  CHECK(std::abs(e_n(2, -1) + 1.0) < 1e-15);
}
