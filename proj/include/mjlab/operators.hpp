#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mjlab/group.hpp"

namespace mjlab {

enum class OpName {
  XPlus, XMinus, YPlus, YMinus,
  XskPlus, XskMinus, YskPlus, YskMinus,
  Casimir, CasimirSk, LaplaceH, LaplaceK,
  XiH, XiSkH, Xi, XiSk, Heat,
};

struct OperatorSpec {
  OpName name;
  WeightIndex weight;  // weight and index of the input
};

const char* op_label(OpName name);
std::optional<OpName> parse_op(const std::string& label);
const std::vector<OpName>& all_ops();
// Number of derivatives the operator consumes.
int op_order(OpName name);

// Action and weight of input and output, per the covariance table.
struct OpSignature {
  Action input;
  Action output;
  WeightIndex out_weight;
};
OpSignature op_signature(const OperatorSpec& op);

// Jet-level operators; each maps a jet of order n to a jet of order n - op_order.
namespace ops {
Jet x_plus(const Jet& f, const EvalPoint& p, double k, double m);
Jet x_minus(const Jet& f, const EvalPoint& p, double k, double m);
Jet y_plus(const Jet& f, const EvalPoint& p, double k, double m);
Jet y_minus(const Jet& f, const EvalPoint& p, double k, double m);
Jet xsk_plus(const Jet& f, const EvalPoint& p, double k, double m);
Jet xsk_minus(const Jet& f, const EvalPoint& p, double k, double m);
Jet ysk_plus(const Jet& f, const EvalPoint& p, double k, double m);
Jet ysk_minus(const Jet& f, const EvalPoint& p, double k, double m);
Jet casimir(const Jet& f, const EvalPoint& p, double k, double m);
Jet casimir_skew(const Jet& f, const EvalPoint& p, double k, double m);
Jet laplace_heisenberg(const Jet& f, const EvalPoint& p, double m);
Jet laplace_hyperbolic(const Jet& f, const EvalPoint& p, double k);
Jet heat(const Jet& f, double m);
Jet xi_H(const Jet& f, const EvalPoint& p, double k, double m);
Jet xi_skH(const Jet& f, const EvalPoint& p, double k, double m);
Jet xi(const Jet& f, const EvalPoint& p, double k, double m);
// Heat-operator form of the skew xi.
Jet xi_sk(const Jet& f, const EvalPoint& p, double k, double m);
// Composite form y^{k-5/2}(X+^sk f + sign/(4 pi m) Y+^sk Y+^sk f).
Jet xi_sk_composite(const Jet& f, const EvalPoint& p, double k, double m, double sign);
// Raising and lowering on functions of tau alone.
Jet modular_raise(const Jet& f, const EvalPoint& p, double k);
Jet modular_lower(const Jet& f, const EvalPoint& p);
// xi_k f = 2 i y^k conj(d_taubar f).
Jet xi_modular(const Jet& f, const EvalPoint& p, double k);
}  // namespace ops

Jet apply_jet(const OperatorSpec& op, const Jet& f, const EvalPoint& p);

using JetOperator = std::function<Jet(const Jet&, const EvalPoint&)>;
// Wraps a jet-level operator consuming `consumed` orders into a function map.
Function apply_operator(const JetOperator& op, int consumed, const Function& f);
Function apply(const OperatorSpec& op, const Function& f);

Function casimir(const WeightIndex& w, const Function& f);
Function casimir_skew(const WeightIndex& w, const Function& f);
Function laplace_heisenberg(const WeightIndex& w, const Function& f);
Function laplace_hyperbolic(double k, const Function& f);

}  // namespace mjlab
