#include "mjlab/kernels.hpp"

#include <cmath>

#include "mjlab/special.hpp"

namespace mjlab {

namespace {

// sqrt(pi) erf(sqrt(-pi y / m) (r + 2 m v / y)); equals sgn(w) gamma(1/2, -pi y w^2 / m)
// for m < 0 and continues it for m > 0.
Jet c3_factor(const KernelParams& kp, const Jet& y, const Jet& v) {
  const double m = kp.m();
  Jet sy = sqrt(y);
  Jet arg = principal_sqrt(cplx(-kPi / m)) * (kp.r * sy + (2.0 * m) * (v * inverse(sy)));
  return std::sqrt(kPi) * erf_jet(arg);
}

}  // namespace

Jet kernel_coefficient(int i, const KernelParams& kp, bool skew, const EvalPoint& p, int order) {
  if (i < 1 || i > 4) fail(ErrorKind::DomainError, "kernel index must be 1..4");
  Jet y = Jet::variable(order, kY, p.y());
  Jet v = Jet::variable(order, kV, p.v());
  const double s = 1.5 - kp.k();
  const int D = kp.D();
  const double lam = kPi * D / kp.m();  // pi D / m
  Jet base(order, 1.0), growth(order);
  if (D != 0) {
    if (!skew) {
      base = Jet(order, 1.0);
      growth = upper_gamma_jet(s, -lam * y);
    } else {
      base = exp(lam * y);
      growth = base * upper_gamma_jet(s, lam * y);
    }
  } else {
    growth = pow(y, s);
  }
  switch (i) {
    case 1: return base;
    case 2: return growth;
    case 3: return base * c3_factor(kp, y, v);
    default: return growth * c3_factor(kp, y, v);
  }
}

cplx kernel_c(int i, const KernelParams& kp, bool skew, const EvalPoint& p) {
  return kernel_coefficient(i, kp, skew, p, 0).value();
}

Function kernel_term(int i, const KernelParams& kp, bool skew) {
  return Function::exact([=](const EvalPoint& p, int order) {
    auto c = coords(p, order);
    return kernel_coefficient(i, kp, skew, p, order) * exp(2.0 * kPi * kI * (double(kp.n) * c.tau + double(kp.r) * c.z));
  });
}

OpName xi_op_name(XiKind k) {
  switch (k) {
    case XiKind::Xi: return OpName::Xi;
    case XiKind::XiH: return OpName::XiH;
    case XiKind::XiSk: return OpName::XiSk;
    case XiKind::XiSkH: return OpName::XiSkH;
  }
  return OpName::Xi;
}

std::vector<XiImageRow> xi_image_rows(const KernelParams& kp) {
  const int D = kp.D();
  const double s = 1.5 - kp.k();
  const double lam = kPi * D / kp.m();
  const cplx two_root_pi = -2.0 * std::sqrt(kPi);
  cplx c_xi, c_xisk;
  if (D != 0) {
    c_xi = -std::pow(principal_sqrt(cplx(-lam)), 2.0 * s);  // -(-pi D/m)^{3/2-k}
    c_xisk = -std::pow(principal_sqrt(cplx(lam)), 2.0 * s);
  } else {
    c_xi = c_xisk = s;
  }
  const char* names[] = {"xi", "xiH", "xiSk", "xiSkH"};
  std::vector<XiImageRow> rows;
  auto add = [&](XiKind op, int src, int tgt, cplx c) {
    bool src_skew = op == XiKind::XiSk || op == XiKind::XiSkH;
    KernelParams tp = (op == XiKind::Xi || op == XiKind::XiSk) ? kp.dual_weight() : kp.negated();
    std::string label = std::string(names[int(op)]) + "(c" + std::to_string(src) + (src_skew ? "sk" : "") + ") = " +
                        (tgt ? "const * c" + std::to_string(tgt) + (src_skew ? "" : "sk") : std::string("0")) +
                        (D != 0 ? "  [D!=0]" : "  [D=0]");
    rows.push_back({op, src, tgt, c, kp, tp, src_skew, label});
  };
  add(XiKind::Xi, 1, 0, 0.0);
  add(XiKind::Xi, 2, 1, c_xi);
  add(XiKind::Xi, 3, 0, 0.0);
  add(XiKind::Xi, 4, 3, c_xi);
  add(XiKind::XiH, 1, 0, 0.0);
  add(XiKind::XiH, 3, 1, two_root_pi);
  add(XiKind::XiH, 2, 0, 0.0);
  add(XiKind::XiH, 4, 2, two_root_pi);
  add(XiKind::XiSk, 1, 0, 0.0);
  add(XiKind::XiSk, 2, 1, c_xisk);
  add(XiKind::XiSk, 3, 0, 0.0);
  add(XiKind::XiSk, 4, 3, c_xisk);
  add(XiKind::XiSkH, 1, 0, 0.0);
  add(XiKind::XiSkH, 3, 1, two_root_pi);
  add(XiKind::XiSkH, 2, 0, 0.0);
  add(XiKind::XiSkH, 4, 2, two_root_pi);
  return rows;
}

std::vector<RowResult> verify_xi_image_table(const KernelParams& kp, const std::vector<EvalPoint>& points) {
  std::vector<RowResult> out;
  for (const auto& row : xi_image_rows(kp)) {
    const KernelParams& sp = row.source_params;
    Function src = kernel_term(row.source, sp, row.source_skew);
    Function lhs = apply({xi_op_name(row.op), WeightIndex(sp.two_k, sp.two_m)}, src);
    RowResult rr{row, 0.0};
    for (const auto& p : points) {
      cplx l = lhs(p);
      cplx r = 0.0;
      if (row.target) r = row.constant * kernel_term(row.target, row.target_params, !row.source_skew)(p);
      rr.max_residual = std::max(rr.max_residual, residual(l, r));
    }
    out.push_back(rr);
  }
  return out;
}

}  // namespace mjlab
