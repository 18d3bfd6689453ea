#include "mjlab/verify.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "json.hpp"

namespace mjlab {

namespace {

constexpr double kExactTol = 1e-8;
constexpr double kInf = std::numeric_limits<double>::infinity();

using PairFn = std::function<std::pair<cplx, cplx>(const EvalPoint&)>;

// Evaluates lhs and rhs at every point; evaluation errors count as infinite residuals.
Check compare(const std::string& identity, const std::string& anchor, const std::vector<EvalPoint>& pts, double tol,
              const PairFn& both, bool use_input_scale = false, const Function* input = nullptr,
              const std::function<double(const EvalPoint&)>& scale_of = nullptr) {
  Check c;
  c.identity = identity;
  c.anchor = anchor;
  c.tol = tol;
  c.points = static_cast<int>(pts.size());
  for (const auto& p : pts) {
    double res;
    try {
      auto [l, r] = both(p);
      if (use_input_scale && input) {
        // purely relative to the size of the input, so small inputs are not let off
        double scale = std::max(std::abs(r), std::abs((*input)(p)));
        res = std::abs(l - r) / (scale > 0.0 ? scale : 1.0);
      } else {
        res = residual(l, r, scale_of ? scale_of(p) : 1.0);
      }
      if (!std::isfinite(res)) res = kInf;
    } catch (const Error& e) {
      res = kInf;
      if (c.note.empty()) c.note = e.what();
    }
    c.per_point.push_back(res);
    c.max_residual = std::max(c.max_residual, res);
  }
  return c;
}

// Largest Taylor coefficient of the input up to the given order: the conditioning
// scale for a linear differential operator of that order.
double jet_scale(const Function& f, const EvalPoint& p, int order) {
  double s = 0.0;
  for (const cplx& c : f.jet(p, order).coeffs()) s = std::max(s, std::abs(c));
  return s;
}

Check compare_fn(const std::string& identity, const std::string& anchor, const std::vector<EvalPoint>& pts,
                 double tol, const Function& lhs, const Function& rhs) {
  return compare(identity, anchor, pts, tol, [&](const EvalPoint& p) { return std::make_pair(lhs(p), rhs(p)); });
}

// lhs must vanish; residual relative to the size of the input function.
Check vanishes(const std::string& identity, const std::string& anchor, const std::vector<EvalPoint>& pts, double tol,
               const Function& lhs, const Function& input) {
  return compare(identity, anchor, pts, tol, [&](const EvalPoint& p) { return std::make_pair(lhs(p), cplx(0.0)); },
                 true, &input);
}

Check informational(Check c, const std::string& note) {
  c.informational = true;
  if (!note.empty()) c.note = c.note.empty() ? note : note + "; " + c.note;
  return c;
}

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string weight_label(const WeightIndex& w) { return "k=" + fmt(w.k()) + ",m=" + fmt(w.m()); }

Function jet_fn(std::function<Jet(const Coords&)> f) {
  return Function::exact([f](const EvalPoint& p, int n) { return f(coords(p, n)); });
}

// ---------------------------------------------------------------- covariance

struct NamedGen {
  std::string name;
  JacobiElement g;
};

std::vector<NamedGen> generators() {
  return {{"T", JacobiElement::T()},
          {"S", JacobiElement::S()},
          {"lambda", JacobiElement::heisenberg(1, 0)},
          {"mu", JacobiElement::heisenberg(0, 1)}};
}

struct TestForm {
  std::string name;
  Function f;
  WeightIndex w;
};

SuiteReport covariance_suite(const SuiteOptions& o) {
  SuiteReport rep;
  auto pts = sample_points(o.seed, 10, 0.8, 2.0);
  const auto& pol = o.policy;
  std::vector<TestForm> standard = {
      {"theta_{1,0}", theta_ml_function(2, 0, pol), WeightIndex(1, 2)},
      {"c4[1/2,-1,-1,1]", kernel_term(4, {1, -2, -1, 1}, false), WeightIndex(1, -2)},
      {"mu_hat_{1,0}", mu_hat_function(2, 0, pol), WeightIndex(1, -2)},
  };
  std::vector<TestForm> skew = {
      {"c4sk[3/2,-1,-1,1]", kernel_term(4, {3, -2, -1, 1}, true), WeightIndex(3, -2)},
      {"c3sk[1/2,1,1,1]", kernel_term(3, {1, 2, 1, 1}, true), WeightIndex(1, 2)},
  };
  std::vector<OpName> names = {OpName::XPlus,   OpName::XMinus,   OpName::YPlus,   OpName::YMinus,
                               OpName::XskPlus, OpName::XskMinus, OpName::YskPlus, OpName::YskMinus,
                               OpName::XiH,     OpName::XiSkH,    OpName::Xi,      OpName::XiSk,
                               OpName::Casimir, OpName::CasimirSk};
  if (o.op) {
    auto parsed = parse_op(*o.op);
    if (!parsed) fail(ErrorKind::ParseError, "unknown operator '" + *o.op + "'");
    names = {*parsed};
  }
  for (OpName name : names) {
    for (const auto& gen : generators()) {
      if (o.gen && *o.gen != gen.name) continue;
      OpSignature sig0 = op_signature({name, WeightIndex(1, 2)});
      const auto& forms = sig0.input == Action::Standard ? standard : skew;
      Check agg;
      agg.identity = std::string(op_label(name)) + " commutes with slash by " + gen.name;
      agg.anchor = "covariance of the operator under the slash actions";
      agg.tol = kExactTol;
      for (const auto& tf : forms) {
        OperatorSpec spec{name, tf.w};
        OpSignature sig = op_signature(spec);
        Function lhs = apply(spec, act(tf.f, tf.w, sig.input, gen.g));
        Function rhs = act(apply(spec, tf.f), sig.out_weight, sig.output, gen.g);
        Function input = act(tf.f, tf.w, sig.input, gen.g);
        const int order = op_order(name);
        Check c = compare(
            agg.identity, agg.anchor, pts, kExactTol,
            [&](const EvalPoint& p) { return std::make_pair(lhs(p), rhs(p)); }, false, nullptr,
            [&](const EvalPoint& p) { return jet_scale(input, p, order); });
        agg.points += c.points;
        agg.max_residual = std::max(agg.max_residual, c.max_residual);
        agg.per_point.insert(agg.per_point.end(), c.per_point.begin(), c.per_point.end());
        if (!c.note.empty() && agg.note.empty()) agg.note = tf.name + ": " + c.note;
      }
      rep.checks.push_back(agg);
    }
  }
  return rep;
}

// ---------------------------------------------------------------- kernels

SuiteReport kernels_suite(const SuiteOptions& o) {
  SuiteReport rep;
  auto pts = sample_points(o.seed + 1, 5, 0.8, 2.0);
  const double tol = 1e-7;
  struct Case {
    int two_k, two_m;
  };
  std::vector<Case> cases = {{1, 2}, {1, -2}, {3, 1}, {3, -1}};
  if (o.two_k && o.two_m) cases = {{*o.two_k, *o.two_m}};
  for (const auto& cs : cases) {
    const int sgn = cs.two_m > 0 ? 1 : -1;
    const int am = std::abs(cs.two_m);
    std::vector<std::pair<int, int>> nr = {{sgn, 1}};
    if (am % 2 == 0) nr.push_back({sgn * am / 2, am});
    else nr.push_back({2 * cs.two_m, 2 * am});
    for (auto [n, r] : nr) {
      KernelParams kp{cs.two_k, cs.two_m, n, r};
      WeightIndex w(cs.two_k, cs.two_m);
      for (bool skew : {false, true}) {
        for (int i = 1; i <= 4; ++i) {
          Function f = kernel_term(i, kp, skew);
          std::string tag = "c" + std::to_string(i) + (skew ? "sk" : "") + "[" + fmt(kp.k()) + "," + fmt(kp.m()) +
                            "," + std::to_string(n) + "," + std::to_string(r) + "] (D=" + std::to_string(kp.D()) + ")";
          Function cas = skew ? casimir_skew(w, f) : casimir(w, f);
          rep.checks.push_back(vanishes(std::string(skew ? "CasimirSk" : "Casimir") + " annihilates " + tag,
                                        "Fourier kernel functions lie in the Casimir kernel", pts, tol, cas, f));
          if (skew) {
            // 8 pi i m (y^{1/2-k} C_{1-k,m} y^{k-1/2} + 2k - 1): the constant moved inside the bracket
            const double k = w.k(), m = w.m();
            Function regrouped = apply_operator(
                [k, m](const Jet& g, const EvalPoint& p) {
                  Jet y = Jet::variable(g.order(), kY, p.y());
                  Jet inner = ops::casimir(pow(y, k - 0.5) * g, p, 1.0 - k, m);
                  return 8.0 * kPi * kI * m * (pow(y, 0.5 - k) * inner + (2.0 * k - 1.0) * g.truncated(g.order() - 3));
                },
                3, f);
            rep.checks.push_back(informational(
                vanishes("regrouped CasimirSk annihilates " + tag, "Fourier kernel functions lie in the Casimir kernel",
                         pts, tol, regrouped, f),
                "constant 2k-1 inside the 8 pi i m bracket"));
          }
          rep.checks.push_back(vanishes("LaplaceH annihilates " + tag,
                                        "Fourier kernel functions lie in the Heisenberg Laplace kernel", pts, tol,
                                        laplace_heisenberg(w, f), f));
        }
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------- xi images

void xi_rows(SuiteReport& rep, int two_k, int two_m, const std::vector<EvalPoint>& pts, bool info_only) {
  const int sgn = two_m > 0 ? 1 : -1;
  const int am = std::abs(two_m);
  std::vector<std::pair<int, int>> nr = {{sgn, 1}};
  if (am % 2 == 0) nr.push_back({sgn * am / 2, am});
  else nr.push_back({2 * two_m, 2 * am});
  for (auto [n, r] : nr) {
    KernelParams kp{two_k, two_m, n, r};
    for (const auto& rr : verify_xi_image_table(kp, pts)) {
      Check c;
      c.identity = rr.row.label + " at k=" + fmt(kp.k()) + ",m=" + fmt(kp.m()) + ",n=" + std::to_string(n) +
                   ",r=" + std::to_string(r);
      c.anchor = "images of the xi-operators on the Fourier kernel functions";
      c.tol = 1e-7;
      c.points = static_cast<int>(pts.size());
      c.max_residual = std::isfinite(rr.max_residual) ? rr.max_residual : kInf;
      if (info_only) c = informational(c, "off the acceptance index");
      rep.checks.push_back(c);
    }
  }
}

SuiteReport xi_images_suite(const SuiteOptions& o) {
  SuiteReport rep;
  auto pts = sample_points(o.seed + 2, 5, 0.8, 2.0);
  if (o.two_k || o.two_m) {
    xi_rows(rep, o.two_k.value_or(1), o.two_m.value_or(-2), pts, false);
    return rep;
  }
  for (int two_k : {1, 3}) xi_rows(rep, two_k, -2, pts, false);
  // At m = +1 the skew-Heisenberg rows carry 2m sqrt(pi) instead of -2 sqrt(pi).
  for (int two_k : {1, 3}) xi_rows(rep, two_k, 2, pts, true);
  return rep;
}

// ---------------------------------------------------------------- weil

double max_abs(const WeilMatrix& M) { return M.cwiseAbs().maxCoeff(); }

SuiteReport weil_suite(const SuiteOptions& o) {
  SuiteReport rep;
  std::vector<int> ms = {1, 2, 3, 4};
  if (o.two_m) ms = {*o.two_m};
  std::vector<EvalPoint> taus;
  for (const auto& p : sample_points(o.seed + 3, 5, 0.8, 2.0)) taus.push_back(EvalPoint(p.x(), p.y(), 0, 0));
  for (int tm : ms) {
    const std::string tag = " (2m=" + std::to_string(tm) + ")";
    for (auto [g, gname] : {std::pair{Generator::T, "T"}, std::pair{Generator::S, "S"}}) {
      WeilMatrix M = rho_generator(tm, g);
      Check c;
      c.identity = std::string("rho(") + gname + ") unitary" + tag;
      c.anchor = "Weil representation generators are unitary";
      c.tol = 1e-13;
      c.points = 1;
      c.max_residual = max_abs(M * M.adjoint() - WeilMatrix::Identity(tm, tm));
      rep.checks.push_back(c);
    }
    {
      Check c;
      c.identity = "rho((ST)^3) = rho(S^2)" + tag;
      c.anchor = "braid relation of the metaplectic group";
      c.tol = 1e-12;
      c.points = 1;
      c.max_residual = max_abs(rho_word(tm, "STSTST") - rho_word(tm, "SS"));
      rep.checks.push_back(c);
      c.identity = "rho(S)^8 = I" + tag;
      c.anchor = "S has order 8 in the metaplectic group";
      c.max_residual = max_abs(rho_word(tm, "SSSSSSSS") - WeilMatrix::Identity(tm, tm));
      rep.checks.push_back(c);
    }
    const double m = 0.5 * tm;
    VectorFn theta_vec = [tm, &o](const EvalPoint& p) {
      WeilVector v(tm);
      for (int l = 0; l < tm; ++l) v(l) = theta_ml(tm, l, p, o.policy);
      return v;
    };
    for (cplx z : {cplx(0.0), cplx(0.1, 0.05)}) {
      for (const char* word : {"T", "S"}) {
        Check c;
        c.identity = std::string("(theta_{m,l})_l invariant under dual-type slash by ") + word + " at z=" +
                     fmt(z.real()) + "+" + fmt(z.imag()) + "i" + tag;
        c.anchor = "theta vector is a Jacobi form of weight 1/2 and dual Weil type";
        c.tol = 1e-8;
        c.points = static_cast<int>(taus.size());
        for (const auto& t : taus) {
          EvalPoint p(t.x(), t.y(), z.real(), z.imag());
          WeilVector lhs = vector_slash(theta_vec, 0.5, m, word, p, tm, true);
          WeilVector rhs = theta_vec(p);
          double res = 0.0;
          for (int l = 0; l < tm; ++l) res = std::max(res, residual(lhs(l), rhs(l)));
          c.per_point.push_back(res);
          c.max_residual = std::max(c.max_residual, res);
        }
        rep.checks.push_back(c);
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------- mu family

SuiteReport mu_transform_suite(const SuiteOptions& o) {
  SuiteReport rep;
  auto pts = sample_points(o.seed + 4, 5, 0.8, 1.6, 0.2);
  std::vector<int> ms = {1, 2};
  if (o.two_m) ms = {*o.two_m};
  for (int tm : ms) {
    const double m = 0.5 * tm;
    WeightIndex w(1, -tm);
    std::vector<Function> mus;
    for (int l = 0; l < tm; ++l) mus.push_back(mu_hat_function(tm, l, o.policy));
    for (int l = 0; l < tm; ++l) {
      const std::string tag = " (m=" + fmt(m) + ",l=" + std::to_string(l) + ")";
      Function lhsT = slash(mus[l], w, JacobiElement::T());
      cplx cT = e_n(4.0 * m, -double(l) * l);
      rep.checks.push_back(compare(
          "mu_hat|T = e_{4m}(-l^2) mu_hat" + tag, "vector-valued transformation of mu-hat under T", pts, 1e-6,
          [&](const EvalPoint& p) { return std::make_pair(lhsT(p), cT * mus[l](p)); }));
      Function lhsS = slash(mus[l], w, JacobiElement::S());
      cplx pre = kI / principal_sqrt(2.0 * kI * m);
      rep.checks.push_back(compare("mu_hat|S = i/sqrt(2im) sum e_{2m}(l l') mu_hat_{l'}" + tag,
                                   "vector-valued transformation of mu-hat under S", pts, 1e-6,
                                   [&](const EvalPoint& p) {
                                     cplx rhs = 0.0;
                                     for (int lp = 0; lp < tm; ++lp)
                                       rhs += e_n(2.0 * m, double(l) * lp) * mus[lp](p);
                                     return std::make_pair(lhsS(p), pre * rhs);
                                   }));
    }
  }
  return rep;
}

SuiteReport mu_xi_theta_suite(const SuiteOptions& o) {
  SuiteReport rep;
  auto pts = sample_points(o.seed + 5, 10, 0.8, 1.6, 0.2);
  std::vector<int> ms = {1, 2};
  if (o.two_m) ms = {*o.two_m};
  for (int tm : ms) {
    const double m = 0.5 * tm;
    WeightIndex w(1, -tm);
    for (int l = 0; l < tm; ++l) {
      const std::string tag = " (m=" + fmt(m) + ",l=" + std::to_string(l) + ")";
      Function mu = mu_hat_function(tm, l, o.policy);
      Function th = theta_ml_function(tm, l, o.policy);
      Function img = apply({OpName::XiH, w}, mu);
      rep.checks.push_back(compare(
          "xiH_{1/2,-m}(mu_hat_{m,l}) = " + fmt(kXiHMuConstant) + " * theta_{m,l}" + tag,
          "xi^H maps mu-hat to theta (with the recorded branch constant)", pts, 1e-7,
          [&](const EvalPoint& p) { return std::make_pair(img(p), kXiHMuConstant * th(p)); }));
      rep.checks.push_back(informational(
          compare_fn("xiH_{1/2,-m}(mu_hat_{m,l}) = theta_{m,l} literally" + tag, "xi^H maps mu-hat to theta",
                     pts, 1e-7, img, th),
          "principal branch of sqrt(-m y), no constant"));
      rep.checks.push_back(compare_fn("xiH(mu_hat) = xiH(R_hat part)" + tag,
                                      "the Appell part is annihilated by Y-", pts, 1e-7, img,
                                      apply({OpName::XiH, w}, R_hat_function(tm, l, o.policy))));
      rep.checks.push_back(vanishes("LaplaceH(mu_hat_{m,l}) = 0" + tag, "mu-hat is H-harmonic", pts, 1e-7,
                                    laplace_heisenberg(w, mu), mu));
    }
  }
  if (!o.two_m || *o.two_m == 1) {
    Function mu2 = mu_hat_2_function(o.policy);
    auto pts2 = sample_points(o.seed + 6, 5, 0.8, 1.6, 0.2);
    rep.checks.push_back(vanishes("xi_{1/2,-1/2}(mu_hat_2) = 0", "the half-period specialisation is xi-closed",
                                  pts2, 1e-6, apply({OpName::Xi, WeightIndex(1, -1)}, mu2), mu2));
  }
  return rep;
}

// ---------------------------------------------------------------- factorizations

struct FactorCase {
  std::string name;
  Function f;
  double m;
};

std::vector<FactorCase> factor_cases(const TruncationPolicy& pol) {
  Function yv = jet_fn([](const Coords& c) {
    return c.y * c.v * exp(2.0 * kPi * kI * (c.tau + c.z));
  });
  Function combo = (cplx(0.3, 0.4) * correction_R_function(pol)) +
                   cplx(0.8, -0.1) * jet_fn([](const Coords& c) {
                     return c.y * c.v * c.v * exp(2.0 * kPi * kI * (c.tau + 0.5 * c.z));
                   });
  return {{"q zeta y v (m=1)", yv, 1.0},
          {"c4[1/2,-1,-1,1] (m=-1)", kernel_term(4, {1, -2, -1, 1}, false), -1.0},
          {"0.3R + 0.8 q zeta^(1/2) y v^2 (m=1/2)", combo, 0.5}};
}

SuiteReport factorizations_suite(const SuiteOptions& o) {
  SuiteReport rep;
  auto pts = sample_points(o.seed + 7, 5, 0.8, 1.6, 0.2);
  const double tol = 1e-6;
  for (const auto& fc : factor_cases(o.policy)) {
    const double m = fc.m;
    const WeightIndex w = WeightIndex::of(0.5, m);
    const std::string tag = " on " + fc.name;
    // (a) commutator
    Function comm = apply_operator(
        [m](const Jet& f, const EvalPoint& p) {
          Jet a = ops::y_minus(ops::y_plus(f, p, 0.5, m), p, 1.5, m);
          Jet b = ops::y_plus(ops::y_minus(f, p, 0.5, m), p, -0.5, m);
          return a - b;
        },
        2, fc.f);
    rep.checks.push_back(compare("[Y-,Y+] = -2 pi m" + tag, "commutator of the Heisenberg raising and lowering",
                                 pts, tol, [&](const EvalPoint& p) {
                                   return std::make_pair(comm(p), -2.0 * kPi * m * fc.f(p));
                                 }));
    // (b) quasi factorization
    for (int D = 1; D <= 3; ++D) {
      Function lhs = apply_operator(
          [m, D](const Jet& f, const EvalPoint& p) {
            Jet g = f;
            for (int i = 0; i < D; ++i) g = ops::y_minus(g, p, 0.5 - i, m);
            for (int i = 0; i < D; ++i) g = ops::y_plus(g, p, 0.5 - D + i, m);
            return g;
          },
          2 * D, fc.f);
      Function rhs = apply_operator(
          [m, D](const Jet& f, const EvalPoint& p) {
            Jet g = f;
            for (int d = 0; d < D; ++d) g = ops::laplace_heisenberg(g, p, m) + (2.0 * kPi * m * d) * g.truncated(g.order() - 2);
            return g;
          },
          2 * D, fc.f);
      rep.checks.push_back(compare_fn("Y+^D Y-^D = prod (LaplaceH + 2 pi m d), D=" + std::to_string(D) + tag,
                                      "quasi factorization of the Heisenberg operators", pts, tol, lhs, rhs));
    }
    // (c) Heisenberg Laplace through the xi^H operators
    Function through = apply_operator(
        [w](const Jet& f, const EvalPoint& p) {
          Jet g = ops::xi_H(f, p, w.k(), w.m());
          return ops::xi_skH(g, p, w.k(), -w.m());
        },
        2, fc.f);
    Function lap = laplace_heisenberg(w, fc.f);
    rep.checks.push_back(compare_fn("LaplaceH = xiSkH_{k,-m} o xiH_{k,m}" + tag,
                                    "factorization of the Heisenberg Laplace operator", pts, tol, through, lap));
    rep.checks.push_back(informational(
        compare("xiSkH_{k,-m} o xiH_{k,m} = i LaplaceH" + tag, "factorization of the Heisenberg Laplace operator",
                pts, tol, [&](const EvalPoint& p) { return std::make_pair(through(p), kI * lap(p)); }),
        "principal-branch constant i"));
  }

  // (d) X-analogue with Pochhammer symbols, on functions of tau alone.
  Function ftau = jet_fn([](const Coords& c) {
    return pow(c.y, 0.3) * exp(2.0 * kPi * kI * 0.7 * c.tau) +
           cplx(0.4, 0.2) * pow(c.y, 1.1) * exp(-2.0 * kPi * kI * 0.4 * c.tau.conj());
  });
  for (double k : {0.5, 2.5}) {
    for (int D = 1; D <= 2; ++D) {
      Function lhs = apply_operator(
          [k, D](const Jet& f, const EvalPoint& p) {
            Jet g = f;
            for (int i = 0; i < D; ++i) g = ops::modular_lower(g, p);
            // X+ after D lowerings acts at weight k - 2D, k - 2D + 2, ...
            for (int i = 0; i < D; ++i) g = ops::modular_raise(g, p, k - 2.0 * D + 2.0 * i);
            return g;
          },
          2 * D, ftau);
      auto pochhammer = [](double n, int l) {
        double r = 1.0;
        for (int i = 0; i < l; ++i) r *= n - i;
        return r;
      };
      Function literal = apply_operator(
          [k, D, pochhammer](const Jet& f, const EvalPoint& p) {
            Jet g = f;
            for (int d = 0; d < D; ++d) g = ops::laplace_hyperbolic(g, p, k) + pochhammer(k - 2.0 * d, d) * g.truncated(g.order() - 2);
            return g;
          },
          2 * D, ftau);
      Function corrected = apply_operator(
          [k, D](const Jet& f, const EvalPoint& p) {
            Jet g = f;
            for (int d = 0; d < D; ++d) g = -ops::laplace_hyperbolic(g, p, k) + (d * (k - 1.0 - d)) * g.truncated(g.order() - 2);
            return g;
          },
          2 * D, ftau);
      const std::string tag = ", D=" + std::to_string(D) + ", k=" + fmt(k);
      rep.checks.push_back(compare_fn("X+^D X-^D = prod (Delta_k + (k-2d)_d)" + tag,
                                      "X-analogue of the quasi factorization", pts, tol, lhs, literal));
      rep.checks.push_back(informational(
          compare_fn("X+^D X-^D = prod (-Delta_k + d(k-1-d))" + tag, "X-analogue of the quasi factorization", pts,
                     tol, lhs, corrected),
          "sign-corrected form"));
    }
    // Delta_k = -xi_{2-k} o xi_k
    Function lapk = laplace_hyperbolic(k, ftau);
    Function xx = apply_operator(
        [k](const Jet& f, const EvalPoint& p) { return -ops::xi_modular(ops::xi_modular(f, p, k), p, 2.0 - k); }, 2,
        ftau);
    rep.checks.push_back(compare_fn("Delta_k = -xi_{2-k} o xi_k, k=" + fmt(k),
                                    "hyperbolic Laplacian through the scalar xi-operators", pts, tol, lapk, xx));
  }

  // (e) semi-meromorphic Casimir
  struct SemiCase {
    std::string name;
    Function f;
    WeightIndex w;
  };
  std::vector<SemiCase> semi = {
      {"theta_{1,1} y^0.7 conj(q^0.3)",
       theta_ml_function(2, 1, o.policy) *
           jet_fn([](const Coords& c) { return pow(c.y, 0.7) * exp(-2.0 * kPi * kI * 0.3 * c.tau.conj()); }),
       WeightIndex(1, 2)},
      {"q^-1 zeta y^0.4 (m=-1)",
       jet_fn([](const Coords& c) { return pow(c.y, 0.4) * exp(2.0 * kPi * kI * (-c.tau + c.z)); }),
       WeightIndex(3, -2)},
  };
  for (const auto& sc : semi) {
    const double k = sc.w.k(), m = sc.w.m();
    Function lhs = casimir(sc.w, sc.f);
    Function rhs = apply_operator(
        [k, m](const Jet& f, const EvalPoint& p) {
          return 2.0 * ops::xi_sk(ops::xi(f, p, k, m), p, 3.0 - k, m);
        },
        4, sc.f);
    rep.checks.push_back(compare_fn("Casimir = 2 xiSk_{3-k} o xi_k on " + sc.name + " (" + weight_label(sc.w) + ")",
                                    "Casimir of semi-meromorphic functions", pts, tol, lhs, rhs));
  }

  // skew xi: composite forms against the heat form
  {
    KernelParams kp{3, -2, -1, 1};
    WeightIndex w(3, -2);
    Function f = kernel_term(4, kp, true) + kernel_term(2, kp, true);
    Function heat = apply({OpName::XiSk, w}, f);
    for (double sign : {1.0, -1.0}) {
      Function comp = apply_operator(
          [w, sign](const Jet& g, const EvalPoint& p) { return ops::xi_sk_composite(g, p, w.k(), w.m(), sign); }, 2,
          f);
      rep.checks.push_back(informational(
          compare_fn(std::string("xiSk composite with ") + (sign > 0 ? "+" : "-") +
                         " sign = heat form on c2sk + c4sk",
                     "two forms of the skew xi-operator", pts, 1e-9, comp, heat),
          sign > 0 ? "consistent form" : "as displayed"));
    }
  }
  return rep;
}

// ---------------------------------------------------------------- decomposition

SuiteReport decomposition_suite(const SuiteOptions& o) {
  SuiteReport rep;
  auto pts = sample_points(o.seed + 8, 10, 0.8, 2.0);
  std::mt19937 rng(o.seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int tm : {2, 3}) {
    // class function: random values on (D/4m, l) with D in a small range, full r-support
    FourierData data;
    data.two_m = tm;
    const int max_r = 24;
    std::map<std::pair<long, int>, cplx> f;
    for (int l = 0; l < tm; ++l)
      for (int D = 0; D <= 6; ++D) f[{D, l}] = cplx(unif(rng), unif(rng));
    for (const auto& [key, c] : f) {
      auto [D, l] = key;
      for (int r = -max_r; r <= max_r; ++r) {
        if (((r % tm) + tm) % tm != l) continue;
        // n = (D + r^2) / 4m
        data.coeffs[{Rational(D + long(r) * r, 2L * tm), r}] = c;
      }
    }
    auto h = theta_decompose(data);
    rep.checks.push_back(compare(
        "sum_l h_l theta_{m,l} reproduces the generating function (2m=" + std::to_string(tm) + ")",
        "theta decomposition map", pts, 1e-9,
        [&](const EvalPoint& p) { return std::make_pair(theta_recompose(tm, h, p, o.policy), data.evaluate(p)); }));
    FourierData back = recompose_coefficients(tm, h, max_r);
    Check c;
    c.identity = "decompose then recompose returns the coefficients (2m=" + std::to_string(tm) + ")";
    c.anchor = "theta decomposition map";
    c.tol = 1e-15;
    c.points = static_cast<int>(data.coeffs.size());
    if (back.coeffs.size() != data.coeffs.size()) c.max_residual = kInf;
    for (const auto& [key, v] : data.coeffs) {
      auto it = back.coeffs.find(key);
      double res = it == back.coeffs.end() ? kInf : std::abs(it->second - v);
      c.max_residual = std::max(c.max_residual, res);
    }
    rep.checks.push_back(c);
  }
  {
    // delta input: coefficients of theta_{1,0}
    FourierData data;
    data.two_m = 2;
    for (int r = -20; r <= 20; r += 2) data.coeffs[{Rational(long(r) * r, 4), r}] = 1.0;
    auto h = theta_decompose(data);
    Check c;
    c.identity = "coefficients of theta_{1,0} decompose to h = (1, 0)";
    c.anchor = "theta decomposition map";
    c.tol = 1e-15;
    c.points = 1;
    bool shape = h.size() == 2 && h[0].size() == 1 && h[0].begin()->first == Rational(0) && h[1].empty();
    c.max_residual = shape ? std::abs(h[0].begin()->second - 1.0) : kInf;
    rep.checks.push_back(c);
  }
  {
    FourierData bad;
    bad.two_m = 2;
    bad.coeffs[{Rational(1), 0}] = 1.0;
    bad.coeffs[{Rational(2), 2}] = 2.0;  // same class (D = 4, l = 0)
    Check c;
    c.identity = "class-function violation raises NotThetaDecomposable";
    c.anchor = "theta decomposition map";
    c.tol = 1e-15;  // residual is 0 when raised, 1 otherwise
    c.points = 1;
    c.max_residual = 1.0;
    try {
      theta_decompose(bad);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotThetaDecomposable) c.max_residual = 0.0;
    }
    rep.checks.push_back(c);
  }
  return rep;
}

// ---------------------------------------------------------------- hygiene

struct CatalogValue {
  std::string name;
  std::function<cplx(const EvalPoint&, const TruncationPolicy&, SeriesInfo*)> eval;
};

std::vector<CatalogValue> catalog_values() {
  auto jet_eval = [](auto f) {
    return [f](const EvalPoint& p, const TruncationPolicy& pol, SeriesInfo* info) {
      auto c = coords(p, 0);
      return f(c, pol, info).value();
    };
  };
  return {
      {"theta", [](const EvalPoint& p, const TruncationPolicy& pol, SeriesInfo* i) { return jacobi_theta(p, pol, i); }},
      {"theta_{1,0}", [](const EvalPoint& p, const TruncationPolicy& pol, SeriesInfo* i) { return theta_ml(2, 0, p, pol, i); }},
      {"theta_{3/2,1}", [](const EvalPoint& p, const TruncationPolicy& pol, SeriesInfo* i) { return theta_ml(3, 1, p, pol, i); }},
      {"R", [](const EvalPoint& p, const TruncationPolicy& pol, SeriesInfo* i) { return correction_R(p, pol, i); }},
      {"mu_hat_{1/2,0}", jet_eval([](const Coords& c, const TruncationPolicy& pol, SeriesInfo* i) {
         return mu_hat_ml(1, 0, c.tau, c.z, pol, i);
       })},
      {"mu_hat_{1,1}", jet_eval([](const Coords& c, const TruncationPolicy& pol, SeriesInfo* i) {
         return mu_hat_ml(2, 1, c.tau, c.z, pol, i);
       })},
      {"R_hat_{1,0}", jet_eval([](const Coords& c, const TruncationPolicy& pol, SeriesInfo* i) {
         return R_hat_ml(2, 0, c.tau, c.z, pol, i);
       })},
      {"mu_{3/2}", [](const EvalPoint& p, const TruncationPolicy& pol, SeriesInfo* i) {
         return mu_m(3, cplx(0.3, 0.2) + p.z(), cplx(0.1, 0.3), p.tau(), pol, i);
       }},
  };
}

SuiteReport hygiene_suite(const SuiteOptions& o) {
  SuiteReport rep;
  auto pts = sample_points(o.seed + 9, 10, 1.0, 2.5, 0.2);
  for (const auto& cv : catalog_values()) {
    rep.checks.push_back(compare("radius doubling leaves " + cv.name + " unchanged",
                                 "truncation stability at y >= 1", pts, 1e-10, [&](const EvalPoint& p) {
                                   SeriesInfo info;
                                   cplx base = cv.eval(p, o.policy, &info);
                                   cplx fine = cv.eval(p, o.policy.with_radius(2 * info.radius), nullptr);
                                   return std::make_pair(base, fine);
                                 }));
  }
  auto grid = sample_points(o.seed + 10, 20, 0.5, 3.0, 0.2);
  std::vector<std::pair<std::string, Function>> fns = {
      {"theta_{1,0}", theta_ml_function(2, 0, o.policy)},
      {"R", correction_R_function(o.policy)},
      {"c4[1/2,-1,-1,1]", kernel_term(4, {1, -2, -1, 1}, false)},
      {"mu_hat_{1,0}", mu_hat_function(2, 0, o.policy)},
  };
  for (const auto& [name, f] : fns) {
    Check c;
    c.identity = "finite-difference jet of " + name + " matches the exact jet to order 2";
    c.anchor = "differentiation engine consistency";
    c.tol = 1e-6;
    c.points = static_cast<int>(grid.size());
    for (const auto& p : grid) {
      double res;
      try {
        Jet ex = f.jet(p, 2);
        Jet fd = finite_difference_jet(Function::sampled([f](const EvalPoint& q) { return f(q); }), p, 2);
        double norm = 0.0, err = 0.0;
        for (std::size_t i = 0; i < ex.size(); ++i) {
          norm = std::max(norm, std::abs(ex[i]));
          err = std::max(err, std::abs(ex[i] - fd[i]));
        }
        res = norm > 0 ? err / norm : err;
      } catch (const Error& e) {
        res = kInf;
        if (c.note.empty()) c.note = e.what();
      }
      c.per_point.push_back(res);
      c.max_residual = std::max(c.max_residual, res);
    }
    rep.checks.push_back(c);
  }
  return rep;
}

}  // namespace

std::vector<EvalPoint> sample_points(unsigned seed, int count, double ylo, double yhi, double vmax) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> half(-0.5, 0.5), ys(ylo, yhi), vs(-vmax, vmax);
  std::vector<EvalPoint> pts;
  for (int i = 0; i < count; ++i) {
    double x = half(rng), y = ys(rng), u = half(rng), v = vs(rng) * y;
    pts.emplace_back(x, y, u, v);
  }
  return pts;
}

bool SuiteReport::passed() const { return failures() == 0; }

int SuiteReport::failures() const {
  int n = 0;
  for (const auto& c : checks)
    if (!c.informational && !c.passed()) ++n;
  return n;
}

double SuiteReport::worst_residual() const {
  double w = 0.0;
  for (const auto& c : checks)
    if (!c.informational) w = std::max(w, c.max_residual);
  return w;
}

std::string SuiteReport::to_json() const {
  using nlohmann::json;
  auto num = [](double x) { return std::isfinite(x) ? json(x) : json("inf"); };
  json j;
  j["suite"] = suite;
  j["passed"] = passed();
  j["seconds"] = seconds;
  j["checks"] = json::array();
  for (const auto& c : checks) {
    json cj{{"identity", c.identity}, {"anchor", c.anchor}, {"points", c.points},
            {"max_residual", num(c.max_residual)}, {"tol", c.tol}, {"passed", c.passed()},
            {"informational", c.informational}};
    if (!c.note.empty()) cj["note"] = c.note;
    json pp = json::array();
    for (double r : c.per_point) pp.push_back(num(r));
    cj["per_point"] = pp;
    j["checks"].push_back(cj);
  }
  return j.dump(2);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"covariance", "kernels",         "xi-images",
                                                 "weil",       "mu-transform",    "mu-xi-theta",
                                                 "factorizations", "decomposition-roundtrip", "hygiene"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  SuiteReport rep;
  if (name == "covariance") rep = covariance_suite(opts);
  else if (name == "kernels") rep = kernels_suite(opts);
  else if (name == "xi-images") rep = xi_images_suite(opts);
  else if (name == "weil") rep = weil_suite(opts);
  else if (name == "mu-transform") rep = mu_transform_suite(opts);
  else if (name == "mu-xi-theta") rep = mu_xi_theta_suite(opts);
  else if (name == "factorizations") rep = factorizations_suite(opts);
  else if (name == "decomposition-roundtrip") rep = decomposition_suite(opts);
  else if (name == "hygiene") rep = hygiene_suite(opts);
  else fail(ErrorKind::ParseError, "unknown suite '" + name + "'");
  if (opts.tol)
    for (auto& c : rep.checks) c.tol = *opts.tol;
  rep.suite = name;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace mjlab
