#pragma once

#include "mjlab/special.hpp"

namespace mjlab {

// Largest supported lattice rank 2m for the Appell sum.
inline constexpr int kMaxMuRank = 6;

// mu_m(z1, z2; tau) as a box-truncated sum over Z^{2m}. Throws PoleAtTheta
// when z2 is a lattice point and PoleAtAppell on a vanishing denominator.
Jet mu_m(int two_m, const Jet& z1, const Jet& z2, const Jet& tau, const TruncationPolicy& policy,
         SeriesInfo* info = nullptr);
cplx mu_m(int two_m, cplx z1, cplx z2, cplx tau, const TruncationPolicy& policy, SeriesInfo* info = nullptr);

// The completed function mu-hat_{m,l}(z; tau).
Jet mu_hat_ml(int two_m, int l, const Jet& tau, const Jet& z, const TruncationPolicy& policy,
              SeriesInfo* info = nullptr);
// Its non-holomorphic part R-hat_{m,l}(z; tau).
Jet R_hat_ml(int two_m, int l, const Jet& tau, const Jet& z, const TruncationPolicy& policy,
             SeriesInfo* info = nullptr);
// The holomorphic part: prefactor times the specialised mu_m.
Jet mu_part_ml(int two_m, int l, const Jet& tau, const Jet& z, const TruncationPolicy& policy,
               SeriesInfo* info = nullptr);

// Two-variable mu(u, v; tau) in the classical normalisation and its
// completion mu + (i/2) R(u - v).
Jet appell_mu(const Jet& u, const Jet& v, const Jet& tau, const TruncationPolicy& policy);
Jet appell_mu_hat(const Jet& u, const Jet& v, const Jet& tau, const TruncationPolicy& policy);
// mu-hat(z + (1+tau)/2, (1+tau)/2; tau)
Jet mu_hat_2(const Jet& tau, const Jet& z, const TruncationPolicy& policy);

Function mu_hat_function(int two_m, int l, const TruncationPolicy& policy = {});
Function R_hat_function(int two_m, int l, const TruncationPolicy& policy = {});
Function mu_part_function(int two_m, int l, const TruncationPolicy& policy = {});
Function mu_hat_2_function(const TruncationPolicy& policy = {});

}  // namespace mjlab
