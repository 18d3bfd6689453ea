#pragma once

#include <string>
#include <vector>

#include "mjlab/operators.hpp"

namespace mjlab {

struct KernelParams {
  int two_k;
  int two_m;
  int n;
  int r;

  double k() const { return 0.5 * two_k; }
  double m() const { return 0.5 * two_m; }
  // 4mn - r^2, always recomputed.
  int D() const { return 2 * two_m * n - r * r; }
  KernelParams dual_weight() const { return {6 - two_k, two_m, n, r}; }
  KernelParams negated() const { return {two_k, -two_m, -n, -r}; }
};

// c_i(n, r; y, v) or its skew analogue as a jet in (y, v), i = 1..4.
Jet kernel_coefficient(int i, const KernelParams& kp, bool skew, const EvalPoint& p, int order);
cplx kernel_c(int i, const KernelParams& kp, bool skew, const EvalPoint& p);
// c_i q^n zeta^r with exact jets.
Function kernel_term(int i, const KernelParams& kp, bool skew);

enum class XiKind { Xi, XiH, XiSk, XiSkH };

// One identity of the xi-image table: op(source) = constant * target.
struct XiImageRow {
  XiKind op;
  int source;         // kernel index of the argument
  int target;         // 0 when the image vanishes
  cplx constant;      // as stated
  KernelParams source_params;
  KernelParams target_params;
  bool source_skew;
  std::string label;
};

// All 16 rows for the D branch selected by (n, r).
std::vector<XiImageRow> xi_image_rows(const KernelParams& kp);

struct RowResult {
  XiImageRow row;
  double max_residual = 0.0;
};
// Residuals of each row at the given points.
std::vector<RowResult> verify_xi_image_table(const KernelParams& kp, const std::vector<EvalPoint>& points);

OpName xi_op_name(XiKind k);

}  // namespace mjlab
