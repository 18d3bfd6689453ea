#include "doctest.h"
#include "mjlab/group.hpp"
#include "mjlab/special.hpp"
#include "test_util.hpp"

using namespace mjlab;
using mjlab::testing::max_residual;
using mjlab::testing::some_points;

namespace {

bool same(const JacobiElement& A, const JacobiElement& B) {
  return A.a == B.a && A.b == B.b && A.c == B.c && A.d == B.d && A.eps == B.eps && A.lambda == B.lambda &&
         A.mu == B.mu && A.kappa == B.kappa;
}

}  // namespace

TEST_CASE("group law") {
  JacobiElement A = JacobiElement::from_word("ST");
  CHECK(same(multiply(A, JacobiElement::identity()), A));
  CHECK(same(multiply(JacobiElement::identity(), A), A));
  JacobiElement h = multiply(JacobiElement::heisenberg(1, 0), JacobiElement::heisenberg(0, 1));
  CHECK(h.lambda == 1);
  CHECK(h.mu == 1);
  CHECK(h.kappa == 1);
}

TEST_CASE("S squared carries the metaplectic sign of sqrt(-1/tau) sqrt(tau)") {
  JacobiElement S2 = multiply(JacobiElement::S(), JacobiElement::S());
  CHECK(S2.a == -1);
  CHECK(S2.d == -1);
  cplx tau = kI;
  cplx direct = principal_sqrt(-1.0 / tau) * principal_sqrt(tau);
  CHECK(std::abs(S2.omega(tau) - direct) < 1e-14);
  CHECK(S2.valid());
}

TEST_CASE("json round trip of a group element") {
  JacobiElement A = multiply(JacobiElement::from_word("STS"), JacobiElement::heisenberg(0.5, -1, 0.25));
  CHECK(same(JacobiElement::from_json(A.to_json()), A));
}

TEST_CASE("slash by the identity") {
  Function th = theta_ml_function(2, 1);
  WeightIndex w(1, 2);
  Function a = slash(th, w, JacobiElement::identity());
  Function b = skew_slash(th, w, JacobiElement::identity());
  CHECK(max_residual(some_points(), a, th) < 1e-14);
  CHECK(max_residual(some_points(), b, th) < 1e-14);
}

TEST_CASE("theta_{m,l} is invariant under Heisenberg translations") {
  WeightIndex w(1, 2);
  for (int l : {0, 1}) {
    Function th = theta_ml_function(2, l);
    CHECK(max_residual(some_points(), slash(th, w, JacobiElement::heisenberg(0, 1)), th) < 1e-10);
    CHECK(max_residual(some_points(), slash(th, w, JacobiElement::heisenberg(1, 0)), th) < 1e-10);
  }
}

TEST_CASE("skew weight factor under S at k = 3/2") {
  Function one = Function::exact([](const EvalPoint&, int n) { return Jet::constant(n, 1.0); });
  Function s = skew_slash(one, WeightIndex(3, 2), JacobiElement::S());
  cplx want = 1.0 / principal_sqrt(std::conj(kI));
  CHECK(std::abs(s(EvalPoint(0, 1, 0, 0)) - want) < 1e-14);
}

TEST_CASE("skew and standard slash coincide on Heisenberg translations") {
  Function f = theta_ml_function(2, 1) * monomial_function(0.3, 0.5);
  WeightIndex w(3, 2);
  for (auto A : {JacobiElement::heisenberg(0, 1), JacobiElement::heisenberg(1, 0)})
    CHECK(max_residual(some_points(), slash(f, w, A), skew_slash(f, w, A)) < 1e-14);
}

TEST_CASE("slash is an action: (f|A)|B = f|(AB)") {
  Function f = theta_ml_function(2, 0) * monomial_function(0.25, 0.5);
  WeightIndex w(3, 2);
  JacobiElement A = JacobiElement::from_word("S");
  JacobiElement B = multiply(JacobiElement::T(), JacobiElement::heisenberg(1, 0));
  for (Action act_kind : {Action::Standard, Action::Skew}) {
    Function lhs = act(act(f, w, act_kind, A), w, act_kind, B);
    Function rhs = act(f, w, act_kind, multiply(A, B));
    CHECK(max_residual(some_points(), lhs, rhs) < 1e-10);
  }
}
