#include "doctest.h"
#include "mjlab/kernels.hpp"
#include "mjlab/mu.hpp"
#include "mjlab/operators.hpp"
#include "mjlab/verify.hpp"
#include "test_util.hpp"

using namespace mjlab;
using mjlab::testing::max_relative_size;
using mjlab::testing::max_residual;
using mjlab::testing::some_points;

namespace {

Function y_power(double s) {
  return Function::exact([s](const EvalPoint& p, int n) { return pow(Jet::variable(n, kY, p.y()), s); });
}

Function nonholomorphic_sample() {
  // q zeta y v, plus a little of R so that every derivative is present
  Function yv = Function::exact([](const EvalPoint& p, int n) {
    Coords c = coords(p, n);
    return c.y * c.v;
  });
  return monomial_function(1, 1) * yv + 0.3 * correction_R_function();
}

}  // namespace

TEST_CASE("lowering operators kill holomorphic functions") {
  WeightIndex w(1, 2);
  Function th = theta_ml_function(2, 1);
  Function ym = apply({OpName::YMinus, w}, th);
  CHECK(max_relative_size(some_points(), ym, th) < 1e-10);
  Function mono = monomial_function(2, 1);
  Function xm = apply({OpName::XMinus, w}, mono);
  CHECK(max_relative_size(some_points(), xm, mono) < 1e-10);
}

TEST_CASE("operators are linear, the Heisenberg xi operators antilinear") {
  WeightIndex w(3, -2);
  Function f = kernel_term(2, {3, -2, -1, 1}, false), g = kernel_term(4, {3, -2, -1, 1}, false);
  cplx a(0.7, -0.2), b(-1.1, 0.4);
  for (OpName op : {OpName::YPlus, OpName::XPlus, OpName::Casimir, OpName::Xi, OpName::XiSk}) {
    Function lhs = apply({op, w}, a * f + b * g);
    Function rhs = a * apply({op, w}, f) + b * apply({op, w}, g);
    CHECK(max_residual(some_points(), lhs, rhs) < 1e-12);
  }
  // the Heisenberg xi's conjugate Y-(phi)
  for (OpName op : {OpName::XiH, OpName::XiSkH}) {
    Function lhs = apply({op, w}, a * f + b * g);
    Function rhs = std::conj(a) * apply({op, w}, f) + std::conj(b) * apply({op, w}, g);
    CHECK(max_residual(some_points(), lhs, rhs) < 1e-12);
  }
}

TEST_CASE("Casimir annihilates theta and a kernel function") {
  Function th = theta_ml_function(2, 0);
  CHECK(max_relative_size(some_points(), casimir(WeightIndex(1, 2), th), th) < 1e-8);
  Function c2 = kernel_term(2, {1, 2, 1, 1}, false);
  CHECK(max_relative_size(some_points(), casimir(WeightIndex(1, 2), c2), c2) < 1e-7);
}

TEST_CASE("skew Casimir is the y-conjugate of the Casimir at weight 1-k") {
  // C^sk(1) = 2k - 1 + 8 pi i m y^{1/2-k} C_{1-k,m}(y^{k-1/2})
  for (auto [two_k, two_m] : {std::pair{3, 2}, std::pair{1, -2}, std::pair{5, 1}}) {
    WeightIndex w(two_k, two_m);
    const double k = w.k(), m = w.m();
    Function one = y_power(0.0);
    Function lhs = casimir_skew(w, one);
    Function inner = casimir(WeightIndex::of(1 - k, m), y_power(k - 0.5));
    for (const auto& p : some_points()) {
      cplx want = (2 * k - 1) + 8 * kPi * kI * m * std::pow(p.y(), 0.5 - k) * inner(p);
      CHECK(std::abs(lhs(p) - want) < 1e-12 * std::max(1.0, std::abs(want)));
    }
  }
}

// Holds only when the constant 2k-1 sits inside the 8 pi i m bracket; the
// operator as written scales skew kernel functions by (2k-1)(1 - 8 pi i m).
TEST_CASE("skew Casimir annihilates c1sk[3/2,1,1,1]" * doctest::should_fail()) {
  Function f = kernel_term(1, {3, 2, 1, 1}, true);
  CHECK(max_relative_size(some_points(), casimir_skew(WeightIndex(3, 2), f), f) < 1e-7);
}

TEST_CASE("skew Casimir eigenvalue on skew kernel functions") {
  for (KernelParams kp : {KernelParams{3, 2, 1, 1}, KernelParams{3, -2, -1, 1}, KernelParams{5, 1, 2, 2}}) {
    WeightIndex w(kp.two_k, kp.two_m);
    cplx lambda = (2 * w.k() - 1) * (1.0 - 8 * kPi * kI * w.m());
    for (int i = 1; i <= 4; ++i) {
      Function f = kernel_term(i, kp, true);
      Function c = casimir_skew(w, f);
      CHECK(max_residual(some_points(), c, lambda * f) < 1e-10);
    }
  }
}

TEST_CASE("Heisenberg Laplacian") {
  WeightIndex w(1, 2);
  Function th = theta_ml_function(2, 1);
  CHECK(max_relative_size(some_points(), laplace_heisenberg(w, th), th) < 1e-10);
  Function c3 = kernel_term(3, {1, -2, -1, 1}, false);
  CHECK(max_relative_size(some_points(), laplace_heisenberg(WeightIndex(1, -2), c3), c3) < 1e-7);
  Function mu = mu_hat_function(2, 0);
  CHECK(max_relative_size(some_points(), laplace_heisenberg(WeightIndex(1, -2), mu), mu) < 1e-7);
  // the skew factorisation of the same operator
  Function f = nonholomorphic_sample();
  Function sk = apply_operator(
      [](const Jet& g, const EvalPoint& p) { return ops::ysk_plus(ops::ysk_minus(g, p, 0.5, 1), p, 1.5, 1); }, 2, f);
  CHECK(max_residual(some_points(), laplace_heisenberg(w, f), sk) < 1e-10);
}

TEST_CASE("xi operators kill holomorphic functions") {
  Function mono = monomial_function(1, 2);
  for (OpName op : {OpName::Xi, OpName::XiH}) {
    Function img = apply({op, WeightIndex(3, 2)}, mono);
    CHECK(max_relative_size(some_points(), img, mono) < 1e-10);
  }
}

TEST_CASE("skew xi: the composite with + agrees with the heat form") {
  for (KernelParams kp : {KernelParams{3, 2, 1, 1}, KernelParams{1, -2, -1, 1}}) {
    WeightIndex w(kp.two_k, kp.two_m);
    Function f = kernel_term(1, kp, true) + 0.5 * kernel_term(2, kp, true) + kernel_term(4, kp, true);
    Function heat = apply({OpName::XiSk, w}, f);
    Function plus = apply_operator(
        [w](const Jet& g, const EvalPoint& p) { return ops::xi_sk_composite(g, p, w.k(), w.m(), 1.0); }, 2, f);
    CHECK(max_residual(some_points(), plus, heat) < 1e-9);
  }
}

TEST_CASE("hyperbolic Laplacian") {
  Function q = monomial_function(1, 0);
  CHECK(max_relative_size(some_points(), laplace_hyperbolic(0.5, q), q) < 1e-10);
  for (double k : {0.5, 1.5, 2.5}) {
    Function f = y_power(1 - k);
    CHECK(max_relative_size(some_points(), laplace_hyperbolic(k, f), f) < 1e-10);
  }
}

TEST_CASE("Heisenberg commutator and the D = 1 factorisation") {
  Function f = nonholomorphic_sample();
  const double m = 1;
  Function comm = apply_operator(
      [m](const Jet& g, const EvalPoint& p) {
        return ops::y_minus(ops::y_plus(g, p, 0.5, m), p, 1.5, m) - ops::y_plus(ops::y_minus(g, p, 0.5, m), p, -0.5, m);
      },
      2, f);
  CHECK(max_residual(some_points(), comm, (-2 * kPi * m) * f) < 1e-10);
  Function yy = apply_operator(
      [m](const Jet& g, const EvalPoint& p) { return ops::y_plus(ops::y_minus(g, p, 0.5, m), p, -0.5, m); }, 2, f);
  CHECK(max_residual(some_points(), yy, laplace_heisenberg(WeightIndex(1, 2), f)) < 1e-12);
}

TEST_CASE("covariance examples") {
  SuiteOptions o;
  o.op = "Y-";
  o.gen = "T";
  CHECK(run_suite("covariance", o).failures() == 0);
  Function th = theta_ml_function(2, 0);
  for (OpName op : all_ops()) {
    if (op == OpName::LaplaceK || op == OpName::Heat) continue;
    OperatorSpec spec{op, WeightIndex(1, 2)};
    OpSignature sig = op_signature(spec);
    Function lhs = apply(spec, act(th, spec.weight, sig.input, JacobiElement::identity()));
    CHECK(max_residual(some_points(), lhs, apply(spec, th)) < 1e-12);
  }
  // xi^H against S on mu-hat
  WeightIndex w(1, -2);
  OperatorSpec spec{OpName::XiH, w};
  OpSignature sig = op_signature(spec);
  Function mu = mu_hat_function(2, 0);
  Function lhs = apply(spec, slash(mu, w, JacobiElement::S()));
  Function rhs = act(apply(spec, mu), sig.out_weight, sig.output, JacobiElement::S());
  CHECK(max_residual(some_points(), lhs, rhs) < 1e-6);
}

TEST_CASE("operator labels round trip") {
  for (OpName op : all_ops()) CHECK(parse_op(op_label(op)) == op);
  CHECK_FALSE(parse_op("nonsense").has_value());
}
