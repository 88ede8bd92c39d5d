#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sqexc {

using Rational = boost::multiprecision::cpp_rational;

Rational factorial_exact(int n);

/// Gamma(k + 1/2) / sqrt(pi) as an exact rational.
Rational gamma_half_over_sqrt_pi(int k);

/// sum_l (n+2j)! / ((l+j)! (l-k)! (n-2l)! 2^{2l}), k <= l <= n/2
Rational gegenbauer_interior_sum(int n, int j, int k);

/// Closed form of gegenbauer_interior_sum:
/// 2^{n-2k} (2j)! Gamma(n-k+j+1/2) / (j! Gamma(j+1/2) (n-2k)!)
Rational gegenbauer_interior_closed(int n, int j, int k);

/// sum_r (-1)^r / (r! (2k-r)! (l-r)! (l-2k+r)!) over all r with
/// nonnegative factorial arguments.
Rational alternating_factorial_sum(int k, int l);

/// The intermediate form
/// 1/(l! (2l-2k)!) sum_s (-2)^s (2l-s)! / (s! (2k-s)! (l-s)!), valid for k <= l.
Rational alternating_factorial_transformed(int k, int l);

/// (-1)^k / (k! l! (l-k)!), zero for k > l.
Rational alternating_factorial_closed(int k, int l);

}  // namespace sqexc
