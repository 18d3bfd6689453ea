#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <string>

#include "mjlab/errors.hpp"
#include "mjlab/jet.hpp"

namespace mjlab {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr cplx kI{0.0, 1.0};

// A point (tau, z) of H x C stored as (x, y, u, v).
class EvalPoint {
 public:
  EvalPoint(double x, double y, double u, double v);
  static EvalPoint from(cplx tau, cplx z) { return EvalPoint(tau.real(), tau.imag(), z.real(), z.imag()); }

  double x() const { return x_; }
  double y() const { return y_; }
  double u() const { return u_; }
  double v() const { return v_; }
  cplx tau() const { return {x_, y_}; }
  cplx z() const { return {u_, v_}; }
  cplx q() const;
  cplx zeta() const;
  double coord(int var) const;
  EvalPoint shifted(int var, double h) const;

 private:
  double x_, y_, u_, v_;
};

// (k, m) as twice their values; m != 0.
class WeightIndex {
 public:
  WeightIndex(int two_k, int two_m);
  static WeightIndex of(double k, double m);
  int two_k() const { return two_k_; }
  int two_m() const { return two_m_; }
  double k() const { return 0.5 * two_k_; }
  double m() const { return 0.5 * two_m_; }
  WeightIndex with_k(int two_k) const { return WeightIndex(two_k, two_m_); }
  WeightIndex shift_k(int two_dk) const { return WeightIndex(two_k_ + two_dk, two_m_); }
  WeightIndex negate_m() const { return WeightIndex(two_k_, -two_m_); }

 private:
  int two_k_, two_m_;
};

struct TruncationPolicy {
  double tail_bound = 1e-14;
  int max_radius = 64;
  // When positive, every lattice sum uses exactly this radius.
  int radius_override = 0;

  void validate() const;
  TruncationPolicy with_radius(int r) const {
    TruncationPolicy p = *this;
    p.radius_override = r;
    return p;
  }
};

struct SeriesInfo {
  int radius = 0;
  double est_tail = 0.0;
};

// Radius R such that terms with |r| > R, whose log modulus is bounded by
// -a r^2 + b |r| + c, stay below the tail bound. Overflow past max_radius
// raises TruncationOverflow.
SeriesInfo truncation_radius(double a, double b, double c, const TruncationPolicy& policy);

// Square root with argument in (-pi/2, pi/2].
cplx principal_sqrt(cplx w);

enum class JetKind { Exact, FiniteDifference };

// Evaluatable function on H x C that produces jets of partial derivatives.
class Function {
 public:
  using JetFn = std::function<Jet(const EvalPoint&, int)>;
  using ValueFn = std::function<cplx(const EvalPoint&)>;

  Function() = default;
  static Function exact(JetFn fn);
  static Function sampled(ValueFn fn, double step = 0.0);

  cplx operator()(const EvalPoint& p) const;
  // Exact jets up to kMaxJetOrder, finite-difference jets up to order 3.
  Jet jet(const EvalPoint& p, int order) const;
  JetKind kind() const { return kind_; }
  bool valid() const { return static_cast<bool>(jet_) || static_cast<bool>(value_); }
  double step() const { return step_; }

 private:
  JetKind kind_ = JetKind::Exact;
  JetFn jet_;
  ValueFn value_;
  double step_ = 0.0;
};

Function operator+(const Function& a, const Function& b);
Function operator-(const Function& a, const Function& b);
Function operator*(cplx s, const Function& a);
Function operator*(const Function& a, const Function& b);

inline constexpr int kMaxFiniteDifferenceOrder = 3;

double default_step(const EvalPoint& p);

// Central differences with one Richardson level on the tensor stencil.
Jet finite_difference_jet(const Function::ValueFn& f, const EvalPoint& p, int order, double step);
Jet finite_difference_jet(const Function& f, const EvalPoint& p, int order, double step = 0.0);

// Jets of the coordinate functions at p.
struct Coords {
  Jet x, y, u, v, tau, z;
};
Coords coords(const EvalPoint& p, int order);

// Relative residual used by every report.
double residual(cplx lhs, cplx rhs, double scale = 1.0);

}  // namespace mjlab
