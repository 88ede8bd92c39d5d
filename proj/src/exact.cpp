#include "sqexc/exact.hpp"

#include <algorithm>

#include "sqexc/errors.hpp"

namespace sqexc {

using boost::multiprecision::cpp_int;

Rational factorial_exact(int n) {
    if (n < 0) throw DomainError("factorial_exact: negative argument");
    cpp_int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

Rational gamma_half_over_sqrt_pi(int k) {
    if (k < 0) throw DomainError("gamma_half_over_sqrt_pi: negative argument");
    Rational g = 1;
    for (int i = 1; i <= k; ++i) g *= Rational(2 * i - 1, 2);
    return g;
}

Rational gegenbauer_interior_sum(int n, int j, int k) {
    if (n < 0 || j < 0 || k < 0) throw DomainError("gegenbauer_interior_sum: negative index");
    Rational sum = 0;
    for (int l = k; 2 * l <= n; ++l) {
        Rational pow4 = pow(cpp_int(4), static_cast<unsigned>(l));
        sum += factorial_exact(n + 2 * j) /
               (factorial_exact(l + j) * factorial_exact(l - k) * factorial_exact(n - 2 * l) * pow4);
    }
    return sum;
}

Rational gegenbauer_interior_closed(int n, int j, int k) {
    if (n < 0 || j < 0 || k < 0) throw DomainError("gegenbauer_interior_closed: negative index");
    if (2 * k > n) return 0;
    Rational pow2 = pow(cpp_int(2), static_cast<unsigned>(n - 2 * k));
    return pow2 * factorial_exact(2 * j) * gamma_half_over_sqrt_pi(n - k + j) /
           (factorial_exact(j) * gamma_half_over_sqrt_pi(j) * factorial_exact(n - 2 * k));
}

Rational alternating_factorial_sum(int k, int l) {
    if (k < 0 || l < 0) throw DomainError("alternating_factorial_sum: negative index");
    Rational sum = 0;
    for (int r = std::max(0, 2 * k - l); r <= std::min(2 * k, l); ++r) {
        Rational term = 1 / (factorial_exact(r) * factorial_exact(2 * k - r) * factorial_exact(l - r) *
                             factorial_exact(l - 2 * k + r));
        sum += (r % 2 ? -term : term);
    }
    return sum;
}

Rational alternating_factorial_transformed(int k, int l) {
    if (k < 0 || l < k) throw DomainError("alternating_factorial_transformed: need 0 <= k <= l");
    Rational sum = 0;
    for (int s = 0; s <= std::min(2 * k, l); ++s) {
        Rational pow2 = pow(cpp_int(2), static_cast<unsigned>(s));
        Rational term = pow2 * factorial_exact(2 * l - s) /
                        (factorial_exact(s) * factorial_exact(2 * k - s) * factorial_exact(l - s));
        sum += (s % 2 ? -term : term);
    }
    return sum / (factorial_exact(l) * factorial_exact(2 * l - 2 * k));
}

Rational alternating_factorial_closed(int k, int l) {
    if (k < 0 || l < 0) throw DomainError("alternating_factorial_closed: negative index");
    if (k > l) return 0;
    Rational v = 1 / (factorial_exact(k) * factorial_exact(l) * factorial_exact(l - k));
    return k % 2 ? -v : v;
}

}  // namespace sqexc
