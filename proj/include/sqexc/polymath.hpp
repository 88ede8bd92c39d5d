#pragma once

#include <vector>

#include "sqexc/types.hpp"

namespace sqexc {

// Classical orthogonal polynomials at complex argument, all by forward
// three-term recurrence.

cplx hermite(int n, cplx z);
cplx legendre(int n, cplx z);
cplx jacobi(int n, double a, double b, cplx z);
cplx gegenbauer(int n, double lambda, cplx z);
cplx assoc_laguerre(int n, int nu, cplx z);

enum class Branch { principal, negative };

/// P_l^j(z) = (sqrt(1 - z^2))^j d^j P_l / dz^j, no Condon-Shortley phase.
/// The branch flag selects the sign of the square root.
cplx assoc_legendre(int l, int j, cplx z, Branch branch = Branch::principal);

/// Same polynomial part, multiplied by root^j for a caller-supplied root.
cplx assoc_legendre_with_root(int l, int j, cplx z, cplx root);

/// j-th derivative of the Legendre polynomial P_l.
cplx legendre_derivative(int l, int j, cplx z);

// Explicit sums used as independent checks of the recurrences.
cplx jacobi_equal_power_sum(int n, int j, cplx z);
cplx jacobi_equal_gegenbauer_sum(int n, int j, cplx z);

/// sum_l (n+j)!/(l!(l+j)!(n-2l)!) (y/(1+y)^2)^l
cplx excitation_sum(int n, int j, cplx y);

/// ((1-y)/(1+y))^n P_n^{(j,j)}((1+y)/(1-y)), the closed form of excitation_sum.
cplx excitation_closed(int n, int j, cplx y);

/// sum_l (-1)^l (n+j)!/(l!(l+j)!(n-2l)!) (x/4)^l
cplx root_argument_sum(int n, int j, cplx x);

/// sqrt(1+x)^n P_n^{(j,j)}(1/sqrt(1+x)) with the chosen root of 1+x.
cplx root_argument_closed(int n, int j, cplx x, Branch branch = Branch::principal);

/// S_k(x, w) = sum_l (-1)^l k!/(l!(k-2l)!) x^{k-2l} w^l = sqrt(w)^k H_k(x/(2 sqrt(w))).
/// Polynomial in both arguments, so no square-root branch is involved.
cplx scaled_hermite(int k, cplx x, cplx w);

/// Table of S_k(x, w) / sqrt(k!) for k = 0..kmax, optionally premultiplied
/// by a seed factor that keeps large tables in range.
std::vector<cplx> scaled_hermite_table(int kmax, cplx x, cplx w, cplx seed = 1.0);

double log_factorial(int n);
double binomial(int n, int k);

/// Gamma(k + 1/2) = (2k)! sqrt(pi) / (4^k k!)
double gamma_half(int k);

}  // namespace sqexc
