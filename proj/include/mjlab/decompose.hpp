#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mjlab/mu.hpp"

namespace mjlab {

// Reduced fraction with positive denominator.
struct Rational {
  long num = 0;
  long den = 1;

  Rational() = default;
  Rational(long n, long d = 1);
  double value() const { return double(num) / double(den); }
  bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  std::string str() const;
  static Rational parse(const std::string& text);
};

// Fourier coefficients c(n, r) of an index-m function.
struct FourierData {
  int two_m = 2;
  std::map<std::pair<Rational, int>, cplx> coeffs;

  static FourierData read(std::istream& in);
  void write(std::ostream& out) const;
  // sum c(n, r) q^n zeta^r
  cplx evaluate(const EvalPoint& p) const;
};

// q-series sum_e a_e q^e with rational exponents.
using QSeries = std::map<Rational, cplx>;
cplx evaluate_q_series(const QSeries& h, cplx tau);

// h_l with h_l(tau) = sum c(D, l) q^{D/4m}, one coefficient per class (D, l mod 2m).
// Throws NotThetaDecomposable if two coefficients in one class differ.
std::vector<QSeries> theta_decompose(const FourierData& data, double tol = 1e-12);
// sum_l h_l(tau) theta_{m,l}(tau, z)
cplx theta_recompose(int two_m, const std::vector<QSeries>& h, const EvalPoint& p,
                     const TruncationPolicy& policy = {});
// Coefficients of sum_l h_l theta_{m,l} with |r| <= max_r.
FourierData recompose_coefficients(int two_m, const std::vector<QSeries>& h, int max_r);

std::string h_to_json(const std::vector<QSeries>& h);

// sum_l h_l(tau) mu-hat_{m,l}(z; tau) + varphi(tau, z)
using TauFn = std::function<cplx(cplx)>;
cplx theta_like_recompose(int two_m, const std::vector<TauFn>& h, const std::optional<Function>& varphi,
                          const EvalPoint& p, const TruncationPolicy& policy = {});
// The same as a function with exact jets when every h_l is constant.
Function theta_like_constant(int two_m, const std::vector<cplx>& h, const TruncationPolicy& policy = {});

}  // namespace mjlab
