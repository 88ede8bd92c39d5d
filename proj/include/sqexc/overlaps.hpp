#pragma once

#include "sqexc/types.hpp"

namespace sqexc {

/// <alpha, m; xi | beta, n; zeta> for two unnormalized states.  Only a.beta,
/// a.n, a.zeta (alpha, m, xi) and the same fields of b are read.
cplx overlap(const StateLabel& a, const StateLabel& b);

/// The same scalar product through the coordinate integral reduced to a
/// two-variable Hermite polynomial.  Needs Re of both Gaussian widths > 0.
cplx overlap_hermite2(const StateLabel& a, const StateLabel& b);

/// <0, m; zeta | beta, n; zeta>
cplx overlap_same_zeta(cplx beta, int m, int n, cplx zeta);

/// <beta, n + 2j; xi | beta, n; zeta>, independent of beta (Jacobi form).
cplx overlap_equal_beta(int n, int j, cplx xi, cplx zeta);

/// <beta, m; xi | beta, n; zeta> as the finite double sum over zero-argument
/// Hermite values.
cplx overlap_equal_beta_double_sum(int m, int n, cplx xi, cplx zeta);

/// <beta, n + 2j; zeta | beta, n; zeta>
cplx overlap_diag_jacobi(int n, int j, cplx zeta);

}  // namespace sqexc
