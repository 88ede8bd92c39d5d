#pragma once

#include <vector>

#include "sqexc/types.hpp"

namespace sqexc::detail {

// sum_j (-1)^j kappa^j sqrt(C(m,j) C(n,j)) t1[m-j] t2[n-j]
cplx bilinear_sum(int m, int n, cplx kappa, const std::vector<cplx>& t1, const std::vector<cplx>& t2);

}  // namespace sqexc::detail
