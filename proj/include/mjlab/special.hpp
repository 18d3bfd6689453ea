#pragma once

#include <vector>

#include "mjlab/core.hpp"

namespace mjlab {

// gamma(s, x) for s > 0, x >= 0.
double lower_incomplete_gamma(double s, double x);
// Gamma(s, x) for x > 0 and any real s.
double upper_incomplete_gamma(double s, double x);
// Gamma(s, x) extended to x < 0 for integer s: finite sum for s >= 1,
// -Ei(-x) (real principal value) for s = 0 and downward recurrence below.
double upper_gamma_extended(double s, double x);
// H(w) = e^{-w} * integral_{-2w}^{inf} t^{1/2-k} e^{-t} dt.
double H_function(double w, double k);
// E(w) = 2 * integral_0^w exp(-pi u^2) du.
double error_completion_E(double w);
// exp(x^2) erfc(x).
double erfcx(double x);
// erf at a point on the real or the imaginary axis.
cplx erf_axis(cplx w);

// Jets of the above, composed with an inner jet.
Jet upper_gamma_jet(double s, const Jet& x);
Jet erf_jet(const Jet& w);

// theta(z; tau) = sum over r in Z+1/2 of (-1)^{r+1/2} q^{r^2/2} zeta^r.
Jet jacobi_theta(const Jet& tau, const Jet& z, const TruncationPolicy& policy, SeriesInfo* info = nullptr);
// sum over r = l mod 2m of q^{r^2/4m} zeta^r.
Jet theta_ml(int two_m, int l, const Jet& tau, const Jet& z, const TruncationPolicy& policy,
             SeriesInfo* info = nullptr);
// The non-holomorphic correction R(z; tau) built from E.
Jet correction_R(const Jet& tau, const Jet& z, const TruncationPolicy& policy, SeriesInfo* info = nullptr);

cplx jacobi_theta(const EvalPoint& p, const TruncationPolicy& policy, SeriesInfo* info = nullptr);
cplx theta_ml(int two_m, int l, const EvalPoint& p, const TruncationPolicy& policy, SeriesInfo* info = nullptr);
cplx correction_R(const EvalPoint& p, const TruncationPolicy& policy, SeriesInfo* info = nullptr);

Function theta_function(const TruncationPolicy& policy = {});
Function theta_ml_function(int two_m, int l, const TruncationPolicy& policy = {});
Function correction_R_function(const TruncationPolicy& policy = {});
// exp(2 pi i (n tau + r z)).
Function monomial_function(double n, double r);

}  // namespace mjlab
