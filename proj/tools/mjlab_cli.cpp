// mjlab: evaluate catalog functions, run verification suites, decompose
// Fourier data and emit grids.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mjlab/decompose.hpp"
#include "mjlab/kernels.hpp"
#include "mjlab/mu.hpp"
#include "mjlab/verify.hpp"

using namespace mjlab;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kPole = 2, kOverflow = 3, kFailed = 4 };

// Complex literals: a, bi, a+bi, a-bi (no spaces).
cplx parse_complex(const std::string& text) {
  static const std::regex re(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?(?:([+-]?(?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)i)?\s*$)");
  std::smatch m;
  if (text.empty() || !std::regex_match(text, m, re)) fail(ErrorKind::ParseError, "bad complex literal '" + text + "'");
  double re_part = m[1].matched ? std::stod(m[1].str()) : 0.0;
  double im_part = 0.0;
  if (m[2].matched) {
    std::string s = m[2].str();
    if (s.empty() || s == "+") im_part = 1.0;
    else if (s == "-") im_part = -1.0;
    else im_part = std::stod(s);
  } else if (!m[1].matched) {
    fail(ErrorKind::ParseError, "bad complex literal '" + text + "'");
  }
  return {re_part, im_part};
}

int twice(double x, const char* what) {
  double t = 2.0 * x;
  if (std::abs(t - std::round(t)) > 1e-12) fail(ErrorKind::ParseError, std::string(what) + " must be a half-integer");
  return static_cast<int>(std::lround(t));
}

struct Params {
  double k = 0.5, m = 1.0, w = 0.0, s = 0.5, x = 1.0;
  int l = 0, n = 0, r = 0, i = 1;
  bool skew = false;
  std::string tau = "0+1i", z = "0", z1 = "0.3+0.2i", z2 = "0.1+0.3i";
  int radius = 0;
  double tail = 1e-14;
};

TruncationPolicy make_policy(const Params& p) {
  TruncationPolicy pol;
  pol.tail_bound = p.tail;
  if (const char* env = std::getenv("MJLAB_MAX_RADIUS")) {
    try {
      pol.max_radius = std::stoi(env);
    } catch (const std::logic_error&) {
      fail(ErrorKind::ParseError, "MJLAB_MAX_RADIUS must be an integer");
    }
  }
  if (p.radius > 0) {
    if (p.radius > pol.max_radius) fail(ErrorKind::TruncationOverflow, "--radius exceeds the radius cap");
    pol.radius_override = p.radius;
  }
  pol.validate();
  return pol;
}

struct EvalResult {
  cplx value;
  SeriesInfo info;
};

using Evaluator = std::function<EvalResult(const Params&, const EvalPoint&, const TruncationPolicy&)>;

// True when the cell |Re(z - z'), Im(z - z')| <= (hx, hy) around z holds a pole.
using PoleLocator = std::function<bool(cplx tau, cplx z, double hx, double hy)>;

struct CatalogEntry {
  std::string help;
  Evaluator eval;
  bool needs_point = true;
  PoleLocator poles = nullptr;
};

// Cell test for the lattice offset + Z + Z tau.
bool lattice_in_cell(cplx offset, cplx tau, cplx z, double hx, double hy) {
  cplx w = z - offset;
  const double b0 = std::round(w.imag() / tau.imag());
  for (double b = b0 - 1; b <= b0 + 1; ++b) {
    cplx rest = w - b * tau;
    const double a = std::round(rest.real());
    if (std::abs(rest.real() - a) <= hx && std::abs(rest.imag()) <= hy) return true;
  }
  return false;
}

const std::map<std::string, CatalogEntry>& catalog() {
  static const std::map<std::string, CatalogEntry> c = {
      {"theta", {"Jacobi theta(z; tau)", [](const Params&, const EvalPoint& p, const TruncationPolicy& pol) {
                   EvalResult r;
                   r.value = jacobi_theta(p, pol, &r.info);
                   return r;
                 }}},
      {"theta_ml", {"theta_{m,l}(tau, z); --m --l", [](const Params& a, const EvalPoint& p, const TruncationPolicy& pol) {
                      EvalResult r;
                      r.value = theta_ml(twice(a.m, "--m"), a.l, p, pol, &r.info);
                      return r;
                    }}},
      {"R", {"R(z; tau)", [](const Params&, const EvalPoint& p, const TruncationPolicy& pol) {
               EvalResult r;
               r.value = correction_R(p, pol, &r.info);
               return r;
             }}},
      {"mu_m", {"mu_m(z1, z2; tau); --m --z1 --z2 --tau", [](const Params& a, const EvalPoint& p, const TruncationPolicy& pol) {
                  EvalResult r;
                  r.value = mu_m(twice(a.m, "--m"), parse_complex(a.z1), parse_complex(a.z2), p.tau(), pol, &r.info);
                  return r;
                }}},
      {"mu_hat_ml", {"completed mu_{m,l}(z; tau); --m --l", [](const Params& a, const EvalPoint& p, const TruncationPolicy& pol) {
                       EvalResult r;
                       auto c = coords(p, 0);
                       r.value = mu_hat_ml(twice(a.m, "--m"), a.l, c.tau, c.z, pol, &r.info).value();
                       return r;
                     }}},
      {"R_hat_ml", {"non-holomorphic part of mu_hat_ml; --m --l", [](const Params& a, const EvalPoint& p, const TruncationPolicy& pol) {
                      EvalResult r;
                      auto c = coords(p, 0);
                      r.value = R_hat_ml(twice(a.m, "--m"), a.l, c.tau, c.z, pol, &r.info).value();
                      return r;
                    }}},
      {"mu_hat_2", {"mu_hat(z + (1+tau)/2, (1+tau)/2; tau)", [](const Params&, const EvalPoint& p, const TruncationPolicy& pol) {
                      EvalResult r;
                      auto c = coords(p, 0);
                      r.value = mu_hat_2(c.tau, c.z, pol).value();
                      r.info = truncation_radius(kPi * p.y(), 2.0 * kPi * std::abs(p.v()) + kPi * p.y(), std::log(2.0), pol);
                      return r;
                    },
                    true,
                    // zeros of theta(z + (1+tau)/2)
                    [](cplx tau, cplx z, double hx, double hy) {
                      return lattice_in_cell(-(1.0 + tau) / 2.0, tau, z, hx, hy);
                    }}},
      {"kernel", {"c_i q^n zeta^r; --i --k --m --n --r [--skew]", [](const Params& a, const EvalPoint& p, const TruncationPolicy&) {
                    KernelParams kp{twice(a.k, "--k"), twice(a.m, "--m"), a.n, a.r};
                    return EvalResult{kernel_term(a.i, kp, a.skew)(p), {}};
                  }}},
      {"E", {"error completion E(w); --w", [](const Params& a, const EvalPoint&, const TruncationPolicy&) {
               return EvalResult{error_completion_E(a.w), {}};
             }, false}},
      {"H", {"H(w) at weight k; --w --k", [](const Params& a, const EvalPoint&, const TruncationPolicy&) {
               return EvalResult{H_function(a.w, a.k), {}};
             }, false}},
      {"gamma_lower", {"gamma(s, x); --s --x", [](const Params& a, const EvalPoint&, const TruncationPolicy&) {
                         return EvalResult{lower_incomplete_gamma(a.s, a.x), {}};
                       }, false}},
      {"gamma_upper", {"Gamma(s, x); --s --x", [](const Params& a, const EvalPoint&, const TruncationPolicy&) {
                         return EvalResult{upper_incomplete_gamma(a.s, a.x), {}};
                       }, false}},
  };
  return c;
}

std::string catalog_names() {
  std::string s;
  for (const auto& [name, e] : catalog()) s += (s.empty() ? "" : ", ") + name;
  return s;
}

const CatalogEntry& lookup(const std::string& name) {
  auto it = catalog().find(name);
  if (it == catalog().end()) fail(ErrorKind::ParseError, "unknown function '" + name + "'; valid: " + catalog_names());
  return it->second;
}

EvalPoint point_of(const Params& a) { return EvalPoint::from(parse_complex(a.tau), parse_complex(a.z)); }

json complex_json(cplx c) { return json::array({c.real(), c.imag()}); }

void add_param_flags(CLI::App* cmd, Params& a) {
  cmd->add_option("--k", a.k, "weight k (half-integer)");
  cmd->add_option("--m", a.m, "index m (half-integer)");
  cmd->add_option("--l", a.l, "residue l mod 2m");
  cmd->add_option("--n", a.n, "Fourier index n");
  cmd->add_option("--r", a.r, "Fourier index r");
  cmd->add_option("--i", a.i, "kernel number 1..4");
  cmd->add_flag("--skew", a.skew, "skew kernel");
  cmd->add_option("--w", a.w, "argument of E and H");
  cmd->add_option("--s", a.s, "order of the incomplete gamma functions");
  cmd->add_option("--x", a.x, "argument of the incomplete gamma functions");
  cmd->add_option("--tau", a.tau, "tau as a+bi");
  cmd->add_option("--z", a.z, "z as a+bi");
  cmd->add_option("--z1", a.z1, "first argument of mu_m");
  cmd->add_option("--z2", a.z2, "second argument of mu_m");
  cmd->add_option("--radius", a.radius, "fixed truncation radius");
  cmd->add_option("--tail", a.tail, "tail bound");
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) fail(ErrorKind::ParseError, "cannot write '" + path + "'");
  f << text << "\n";
}

int exit_for(const Error& e) {
  if (e.is_pole()) return kPole;
  if (e.kind() == ErrorKind::TruncationOverflow) return kOverflow;
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mjlab: Maass-Jacobi forms numerical laboratory"};
  app.require_subcommand(1);
  Params a;
  std::string out;

  std::string fn_name;
  auto* eval = app.add_subcommand("eval", "evaluate a catalog function at a point");
  eval->add_option("function", fn_name, "catalog name")->required();
  add_param_flags(eval, a);
  eval->add_option("--out", out, "output path");

  std::string suite;
  SuiteOptions sopt;
  double vk = 0.5, vm = 1.0;
  int two_m = 0;
  std::string op, gen;
  double tol = 0.0;
  unsigned seed = sopt.seed;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name")->required();
  auto* k_opt = verify->add_option("--k", vk, "weight k");
  auto* m_opt = verify->add_option("--m", vm, "index m");
  auto* tm_opt = verify->add_option("--two-m", two_m, "twice the index");
  auto* op_opt = verify->add_option("--op", op, "operator label, e.g. Y-");
  auto* gen_opt = verify->add_option("--gen", gen, "generator: T, S, lambda, mu");
  auto* tol_opt = verify->add_option("--tol", tol, "override every tolerance");
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_option("--radius", a.radius, "fixed truncation radius");
  verify->add_option("--tail", a.tail, "tail bound");
  verify->add_option("--out", out, "output path");

  std::string data_path;
  auto* decompose = app.add_subcommand("decompose", "theta-decompose Fourier data");
  decompose->add_option("file", data_path, "file with header 'index 2m=<int>' and lines 'n r re im'")->required();
  decompose->add_option("--out", out, "output path");

  std::string grid_fn, axis = "z";
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;  // a tau grid defaults to [-1/2, 1/2] x [1/2, 2]
  int nx = 50, ny = 50;
  auto* grid = app.add_subcommand("grid", "evaluate on a rectangular grid and emit CSV");
  grid->add_option("function", grid_fn, "catalog name")->required();
  add_param_flags(grid, a);
  grid->add_option("--axis", axis, "z: vary z at fixed tau; tau: vary tau at fixed z")->check(CLI::IsMember({"z", "tau"}));
  grid->add_flag_callback("--tau-grid", [&axis] { axis = "tau"; }, "shorthand for --axis tau");
  auto* x0_opt = grid->add_option("--re-min", x0, "real part lower bound");
  auto* x1_opt = grid->add_option("--re-max", x1, "real part upper bound");
  auto* y0_opt = grid->add_option("--im-min", y0, "imaginary part lower bound");
  auto* y1_opt = grid->add_option("--im-max", y1, "imaginary part upper bound");
  grid->add_option("--nx", nx, "points along the real part")->check(CLI::PositiveNumber);
  grid->add_option("--ny", ny, "points along the imaginary part")->check(CLI::PositiveNumber);
  grid->add_option("--out", out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) {
      const auto& entry = lookup(fn_name);
      TruncationPolicy pol = make_policy(a);
      EvalPoint p = entry.needs_point ? point_of(a) : EvalPoint(0, 1, 0, 0);
      EvalResult r = entry.eval(a, p, pol);
      json j;
      j["function"] = fn_name;
      j["params"] = {{"k", a.k}, {"m", a.m}, {"l", a.l}, {"n", a.n}, {"r", a.r}, {"w", a.w}};
      j["point"] = entry.needs_point ? json{{"tau", complex_json(p.tau())}, {"z", complex_json(p.z())}} : json(nullptr);
      j["value"] = complex_json(r.value);
      j["truncation_radius"] = r.info.radius;
      j["est_tail"] = r.info.est_tail;
      write_out(out, j.dump());
      return kOk;
    }
    if (*verify) {
      if (*k_opt) sopt.two_k = twice(vk, "--k");
      if (*m_opt) sopt.two_m = twice(vm, "--m");
      if (*tm_opt) sopt.two_m = two_m;
      if (*op_opt) sopt.op = op;
      if (*gen_opt) sopt.gen = gen;
      if (*tol_opt) sopt.tol = tol;
      sopt.seed = seed;
      sopt.policy = make_policy(a);
      if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
        std::string names;
        for (const auto& s : suite_names()) names += (names.empty() ? "" : ", ") + s;
        fail(ErrorKind::ParseError, "unknown suite '" + suite + "'; valid: " + names);
      }
      SuiteReport rep = run_suite(suite, sopt);
      write_out(out, rep.to_json());
      return rep.passed() ? kOk : kFailed;
    }
    if (*decompose) {
      std::ifstream in(data_path);
      if (!in) fail(ErrorKind::ParseError, "cannot read '" + data_path + "'");
      FourierData d = FourierData::read(in);
      write_out(out, h_to_json(theta_decompose(d)));
      return kOk;
    }
    if (*grid) {
      const auto& entry = lookup(grid_fn);
      TruncationPolicy pol = make_policy(a);
      cplx tau0 = parse_complex(a.tau), z0 = parse_complex(a.z);
      if (axis == "tau") {
        if (!*x0_opt) x0 = -0.5;
        if (!*x1_opt) x1 = 0.5;
        if (!*y0_opt) y0 = 0.5;
        if (!*y1_opt) y1 = 2.0;
        if (!(y0 > 0.0)) fail(ErrorKind::ParseError, "a tau grid needs --im-min > 0");
      }
      const double hx = nx > 1 ? 0.5 * (x1 - x0) / (nx - 1) : 0.0;
      const double hy = ny > 1 ? 0.5 * (y1 - y0) / (ny - 1) : 0.0;
      std::ostringstream csv;
      csv.precision(17);
      csv << "x,y,u,v,re,im,flag\n";
      for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
          double re = nx > 1 ? x0 + (x1 - x0) * i / (nx - 1) : x0;
          double im = ny > 1 ? y0 + (y1 - y0) * j / (ny - 1) : y0;
          cplx tau = axis == "tau" ? cplx(re, im) : tau0;
          cplx z = axis == "z" ? cplx(re, im) : z0;
          csv << tau.real() << "," << tau.imag() << "," << z.real() << "," << z.imag() << ",";
          std::string flag = "ok";
          if (axis == "z" && entry.poles && entry.poles(tau, z, hx, hy)) {
            csv << ",,pole\n";
            continue;
          }
          try {
            cplx v = entry.eval(a, EvalPoint::from(tau, z), pol).value;
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) fail(ErrorKind::NonFinite, "value");
            csv << v.real() << "," << v.imag();
          } catch (const Error& e) {
            csv << ",";
            flag = e.is_pole() ? "pole" : e.kind() == ErrorKind::TruncationOverflow ? "overflow" : "error";
          }
          csv << "," << flag << "\n";
        }
      }
      std::string text = csv.str();
      text.pop_back();
      write_out(out, text);
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "mjlab: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "mjlab: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
