#pragma once

#include <vector>

#include "sqexc/types.hpp"

namespace sqexc {

struct PhotonDistribution {
    std::vector<double> probs;  // p_0 .. p_cutoff
    int cutoff = 0;
    double tail_mass = 0.0;
};

/// p_m for m = 0..cutoff.  Throws CutoffError when the tail mass exceeds 1e-6.
PhotonDistribution photon_distribution(const StateLabel& s, int cutoff);

/// Doubles the cutoff from a moment-based guess until the tail mass drops
/// below tail_tol (or 1e-6 at the 2^15 cap).
PhotonDistribution photon_distribution_auto(const StateLabel& s, double tail_tol = 1e-11);

double mean_photon(const StateLabel& s);

/// Mean photon number from the longer Jacobi-polynomial expression.
double mean_photon_jacobi(const StateLabel& s);

/// f_n(y) = P_{n-2}^{(1,1)}(z) / P_n(z), z = (1+y)/(1-y).  f_1 = 0;
/// f_0 returns the tabulated -(1-y) and is never used with a nonzero weight.
double f_ratio(int n, double y);

/// Rational closed forms of f_n for 0 <= n <= 5.
double f_ratio_table(int n, double y);

struct MomentReport {
    cplx mean_a{}, mean_adag{}, mean_a2{};
    double mean_N = 0.0;
    double varQ = 0.0, varP = 0.0;
    double covQP_sym = 0.0;  // <dQ dP + dP dQ>
    double unc_sum = 0.0;
    double unc_prod = 0.0;
};

MomentReport moments(const StateLabel& s);

}  // namespace sqexc
