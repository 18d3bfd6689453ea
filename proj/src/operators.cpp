#include "mjlab/operators.hpp"

#include <cmath>

namespace mjlab {

namespace {

struct OpInfo {
  OpName name;
  const char* label;
  int order;
};

const OpInfo kOps[] = {
    {OpName::XPlus, "X+", 1},          {OpName::XMinus, "X-", 1},       {OpName::YPlus, "Y+", 1},
    {OpName::YMinus, "Y-", 1},         {OpName::XskPlus, "Xsk+", 1},    {OpName::XskMinus, "Xsk-", 1},
    {OpName::YskPlus, "Ysk+", 1},      {OpName::YskMinus, "Ysk-", 1},   {OpName::Casimir, "Casimir", 3},
    {OpName::CasimirSk, "CasimirSk", 3}, {OpName::LaplaceH, "LaplaceH", 2}, {OpName::LaplaceK, "LaplaceK", 2},
    {OpName::XiH, "xiH", 1},           {OpName::XiSkH, "xiSkH", 1},     {OpName::Xi, "xi", 2},
    {OpName::XiSk, "xiSk", 2},         {OpName::Heat, "Heat", 2},
};

const OpInfo& info(OpName name) {
  for (const auto& o : kOps)
    if (o.name == name) return o;
  return kOps[0];
}

Jet ycoord(const EvalPoint& p, int n) { return Jet::variable(n, kY, p.y()); }
Jet vcoord(const EvalPoint& p, int n) { return Jet::variable(n, kV, p.v()); }

}  // namespace

const char* op_label(OpName name) { return info(name).label; }

std::optional<OpName> parse_op(const std::string& label) {
  for (const auto& o : kOps)
    if (label == o.label) return o.name;
  return std::nullopt;
}

const std::vector<OpName>& all_ops() {
  static const std::vector<OpName> v = [] {
    std::vector<OpName> r;
    for (const auto& o : kOps) r.push_back(o.name);
    return r;
  }();
  return v;
}

int op_order(OpName name) { return info(name).order; }

OpSignature op_signature(const OperatorSpec& op) {
  const WeightIndex& w = op.weight;
  switch (op.name) {
    case OpName::XPlus: return {Action::Standard, Action::Standard, w.shift_k(4)};
    case OpName::XMinus: return {Action::Standard, Action::Standard, w.shift_k(-4)};
    case OpName::YPlus: return {Action::Standard, Action::Standard, w.shift_k(2)};
    case OpName::YMinus: return {Action::Standard, Action::Standard, w.shift_k(-2)};
    case OpName::XskPlus: return {Action::Skew, Action::Skew, w.shift_k(-4)};
    case OpName::XskMinus: return {Action::Skew, Action::Skew, w.shift_k(4)};
    case OpName::YskPlus: return {Action::Skew, Action::Skew, w.shift_k(-2)};
    case OpName::YskMinus: return {Action::Skew, Action::Skew, w.shift_k(2)};
    case OpName::Casimir: return {Action::Standard, Action::Standard, w};
    case OpName::CasimirSk: return {Action::Skew, Action::Skew, w};
    case OpName::LaplaceH: return {Action::Standard, Action::Standard, w};
    case OpName::LaplaceK: return {Action::Standard, Action::Standard, w};
    case OpName::XiH: return {Action::Standard, Action::Skew, w.negate_m()};
    case OpName::XiSkH: return {Action::Skew, Action::Standard, w.negate_m()};
    case OpName::Xi: return {Action::Standard, Action::Skew, w.with_k(6 - w.two_k())};
    case OpName::XiSk: return {Action::Skew, Action::Standard, w.with_k(6 - w.two_k())};
    case OpName::Heat: return {Action::Standard, Action::Standard, w};
  }
  return {Action::Standard, Action::Standard, w};
}

namespace ops {

Jet x_plus(const Jet& f, const EvalPoint& p, double k, double m) {
  int n = f.order();
  Jet y = ycoord(p, n), v = vcoord(p, n);
  Jet iy = inverse(y);
  Jet vy = v * iy;
  return 2.0 * kI * (d_tau(f) + vy * d_z(f) + 2.0 * kPi * kI * m * (vy * vy * f)) + k * (iy * f);
}

Jet x_minus(const Jet& f, const EvalPoint& p, double, double) {
  int n = f.order();
  Jet y = ycoord(p, n), v = vcoord(p, n);
  return -2.0 * kI * (y * (y * d_taubar(f) + v * d_zbar(f)));
}

Jet y_plus(const Jet& f, const EvalPoint& p, double, double m) {
  int n = f.order();
  Jet y = ycoord(p, n), v = vcoord(p, n);
  return kI * d_z(f) - 4.0 * kPi * m * (v * inverse(y) * f);
}

Jet y_minus(const Jet& f, const EvalPoint& p, double, double) {
  Jet y = ycoord(p, f.order());
  return -kI * (y * d_zbar(f));
}

Jet xsk_plus(const Jet& f, const EvalPoint& p, double, double m) {
  int n = f.order();
  Jet y = ycoord(p, n), v = vcoord(p, n);
  return 2.0 * kI * (y * y * d_tau(f) + y * v * d_z(f) + 2.0 * kPi * kI * m * (v * v * f)) + 0.5 * (y * f);
}

Jet xsk_minus(const Jet& f, const EvalPoint& p, double k, double) {
  int n = f.order();
  Jet y = ycoord(p, n), v = vcoord(p, n);
  Jet iy = inverse(y);
  return -2.0 * kI * (d_taubar(f) + v * iy * d_zbar(f)) + (k - 0.5) * (iy * f);
}

Jet ysk_plus(const Jet& f, const EvalPoint& p, double, double m) {
  int n = f.order();
  Jet y = ycoord(p, n), v = vcoord(p, n);
  return kI * (y * d_z(f)) - 4.0 * kPi * m * (v * f);
}

Jet ysk_minus(const Jet& f, const EvalPoint&, double, double) { return -kI * d_zbar(f); }

Jet casimir(const Jet& f, const EvalPoint& p, double k, double m) {
  const double c = 1.0 / (2.0 * kPi * m);
  Jet xm = x_minus(f, p, k, m);
  Jet ym = y_minus(f, p, k, m);
  Jet t1 = x_plus(xm, p, k - 2, m);
  Jet t2 = x_plus(y_minus(ym, p, k - 1, m), p, k - 2, m);
  Jet t3 = y_plus(y_plus(xm, p, k - 2, m), p, k - 1, m);
  Jet t4 = y_plus(ym, p, k - 1, m);
  return 2.0 * t1 - c * (t2 - t3) + c * (k - 2) * t4;
}

Jet casimir_skew(const Jet& f, const EvalPoint& p, double k, double m) {
  int n = f.order();
  Jet y = ycoord(p, n);
  Jet inner = casimir(pow(y, k - 0.5) * f, p, 1.0 - k, m);
  return 8.0 * kPi * kI * m * (pow(y, 0.5 - k) * inner) + (2.0 * k - 1.0) * f;
}

Jet laplace_heisenberg(const Jet& f, const EvalPoint& p, double m) {
  return y_plus(y_minus(f, p, 0, m), p, 0, m);
}

Jet laplace_hyperbolic(const Jet& f, const EvalPoint& p, double k) {
  int n = f.order();
  Jet y = ycoord(p, n);
  Jet dbar = d_taubar(f);
  return -4.0 * (y * y * d_tau(dbar)) + 2.0 * k * kI * (y * dbar);
}

Jet heat(const Jet& f, double m) { return 8.0 * kPi * kI * m * d_tau(f) - d_z(d_z(f)); }

namespace {
// sqrt(-m y) with the principal root.
Jet root_my(const EvalPoint& p, int n, double m) { return principal_sqrt(cplx(-m)) * sqrt(ycoord(p, n)); }
Jet gauss_v(const EvalPoint& p, int n, double m) {
  Jet y = ycoord(p, n), v = vcoord(p, n);
  return exp(-4.0 * kPi * m * (v * v * inverse(y)));
}
}  // namespace

Jet xi_H(const Jet& f, const EvalPoint& p, double k, double m) {
  int n = f.order();
  return inverse(root_my(p, n, m)) * gauss_v(p, n, m) * y_minus(f, p, k, m).conj();
}

Jet xi_skH(const Jet& f, const EvalPoint& p, double k, double m) {
  int n = f.order();
  return root_my(p, n, m) * gauss_v(p, n, m) * ysk_minus(f, p, k, m).conj();
}

Jet xi(const Jet& f, const EvalPoint& p, double k, double m) {
  int n = f.order();
  Jet y = ycoord(p, n);
  Jet inner = x_minus(f, p, k, m) - (1.0 / (4.0 * kPi * m)) * y_minus(y_minus(f, p, k, m), p, k - 1, m);
  return pow(y, k - 2.5) * inner;
}

Jet xi_sk(const Jet& f, const EvalPoint& p, double k, double m) {
  Jet y = ycoord(p, f.order());
  return (1.0 / (4.0 * kPi * m)) * (pow(y, k - 0.5) * heat(f, m));
}

Jet xi_sk_composite(const Jet& f, const EvalPoint& p, double k, double m, double sign) {
  Jet y = ycoord(p, f.order());
  Jet inner = xsk_plus(f, p, k, m) + (sign / (4.0 * kPi * m)) * ysk_plus(ysk_plus(f, p, k, m), p, k + 1, m);
  return pow(y, k - 2.5) * inner;
}

Jet modular_raise(const Jet& f, const EvalPoint& p, double k) {
  Jet y = ycoord(p, f.order());
  return 2.0 * kI * d_tau(f) + k * (inverse(y) * f);
}

Jet modular_lower(const Jet& f, const EvalPoint& p) {
  Jet y = ycoord(p, f.order());
  return -2.0 * kI * (y * y * d_taubar(f));
}

Jet xi_modular(const Jet& f, const EvalPoint& p, double k) {
  Jet y = ycoord(p, f.order());
  return 2.0 * kI * (pow(y, k) * d_taubar(f).conj());
}

}  // namespace ops

Jet apply_jet(const OperatorSpec& op, const Jet& f, const EvalPoint& p) {
  const double k = op.weight.k(), m = op.weight.m();
  switch (op.name) {
    case OpName::XPlus: return ops::x_plus(f, p, k, m);
    case OpName::XMinus: return ops::x_minus(f, p, k, m);
    case OpName::YPlus: return ops::y_plus(f, p, k, m);
    case OpName::YMinus: return ops::y_minus(f, p, k, m);
    case OpName::XskPlus: return ops::xsk_plus(f, p, k, m);
    case OpName::XskMinus: return ops::xsk_minus(f, p, k, m);
    case OpName::YskPlus: return ops::ysk_plus(f, p, k, m);
    case OpName::YskMinus: return ops::ysk_minus(f, p, k, m);
    case OpName::Casimir: return ops::casimir(f, p, k, m);
    case OpName::CasimirSk: return ops::casimir_skew(f, p, k, m);
    case OpName::LaplaceH: return ops::laplace_heisenberg(f, p, m);
    case OpName::LaplaceK: return ops::laplace_hyperbolic(f, p, k);
    case OpName::XiH: return ops::xi_H(f, p, k, m);
    case OpName::XiSkH: return ops::xi_skH(f, p, k, m);
    case OpName::Xi: return ops::xi(f, p, k, m);
    case OpName::XiSk: return ops::xi_sk(f, p, k, m);
    case OpName::Heat: return ops::heat(f, m);
  }
  fail(ErrorKind::DomainError, "unknown operator");
}

Function apply_operator(const JetOperator& op, int consumed, const Function& f) {
  if (f.kind() == JetKind::Exact) {
    return Function::exact([op, consumed, f](const EvalPoint& p, int n) {
      if (n + consumed > kMaxJetOrder) fail(ErrorKind::JetUnavailable, "operator chain exceeds jet order");
      return op(f.jet(p, n + consumed), p);
    });
  }
  return Function::sampled(
      [op, consumed, f](const EvalPoint& p) {
        if (consumed > kMaxFiniteDifferenceOrder)
          fail(ErrorKind::JetUnavailable, "finite-difference jets stop at order 3");
        return op(f.jet(p, consumed), p).value();
      },
      f.step());
}

Function apply(const OperatorSpec& op, const Function& f) {
  return apply_operator([op](const Jet& j, const EvalPoint& p) { return apply_jet(op, j, p); }, op_order(op.name), f);
}

Function casimir(const WeightIndex& w, const Function& f) { return apply({OpName::Casimir, w}, f); }
Function casimir_skew(const WeightIndex& w, const Function& f) { return apply({OpName::CasimirSk, w}, f); }
Function laplace_heisenberg(const WeightIndex& w, const Function& f) { return apply({OpName::LaplaceH, w}, f); }
Function laplace_hyperbolic(double k, const Function& f) {
  return apply_operator([k](const Jet& j, const EvalPoint& p) { return ops::laplace_hyperbolic(j, p, k); }, 2, f);
}

}  // namespace mjlab
