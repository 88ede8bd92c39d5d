#pragma once

#include <vector>

#include "sqexc/types.hpp"

namespace sqexc {

/// N_n(|zeta|): the factor that normalizes |beta, n; zeta>.
double normalization(int n, double zeta_abs);

/// <0,n;zeta|0,n;zeta> = N_n^{-2} through the Legendre closed form.
double inverse_norm_squared(int n, double zeta_abs);

/// Same quantity by direct summation of the finite double series.
double inverse_norm_squared_series(int n, double zeta_abs);

/// <m| beta, n; zeta> in the Fock basis (state not normalized).
cplx fock_coefficient(const StateLabel& s, int m);

/// Jacobi form of <n + 2m | 0, n; zeta>, valid for beta = 0.
cplx squeezed_fock_coefficient_jacobi(int n, cplx zeta, int m);

struct FockCoefficients {
    std::vector<cplx> coeffs;  // m = 0 .. cutoff
    int cutoff = 0;
    bool normalized = false;
    double tail_mass = 0.0;  // 1 - sum |c_m|^2, only meaningful when normalized
};

/// Batch of fock_coefficient for m = 0..cutoff.  With normalize set the
/// coefficients are scaled by N_n and the missing weight is reported.
FockCoefficients fock_coefficients(const StateLabel& s, int cutoff, bool normalize);

/// Coordinate wavefunction psi(q) (not normalized).
cplx psi_q(const StateLabel& s, double q);

/// Momentum wavefunction, the Fourier transform of psi_q with kernel
/// exp(-i p q / hbar) / sqrt(2 pi hbar).
cplx psi_p(const StateLabel& s, double p);

/// Bargmann function f(alpha*) = exp(|alpha|^2 / 2) <alpha|beta, n; zeta>.
cplx bargmann(const StateLabel& s, cplx alpha_conj);

}  // namespace sqexc
