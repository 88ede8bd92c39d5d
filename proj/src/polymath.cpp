#include "sqexc/polymath.hpp"

#include <cmath>
#include <string>

#include "sqexc/errors.hpp"

namespace sqexc {

namespace {

using lcplx = std::complex<long double>;

void require_degree(int n, const char* what) {
    if (n < 0) throw DomainError(std::string(what) + ": negative degree");
}

lcplx widen(cplx z) { return {z.real(), z.imag()}; }
cplx narrow(lcplx z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

// sum_l (n+j)!/(l! (l+j)! (n-2l)!) u^l.  The coefficients are multinomial
// integers, generated exactly by their ratio; the sum runs in extended
// precision because it cancels strongly for negative u.
lcplx multinomial_series(int n, int j, lcplx u) {
    long double c = 1;  // (n+j)! / (j! n!)
    for (int i = 1; i <= j; ++i) c = c * (n + i) / i;
    lcplx sum = 0, pw = 1;
    for (int l = 0; 2 * l <= n; ++l) {
        sum += c * pw;
        c = c * ((n - 2 * l) * (n - 2 * l - 1)) / ((l + 1) * (l + j + 1));
        pw *= u;
    }
    return sum;
}

}  // namespace

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (n <= 60) {
        double r = 1.0;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    }
    return std::round(std::exp(log_factorial(n) - log_factorial(k) - log_factorial(n - k)));
}

double gamma_half(int k) {
    // Gamma(1/2) = sqrt(pi), Gamma(k+1/2) = (k-1/2) Gamma(k-1/2)
    double g = std::sqrt(M_PI);
    for (int i = 1; i <= k; ++i) g *= (i - 0.5);
    return g;
}

cplx hermite(int n, cplx z) {
    require_degree(n, "hermite");
    if (n == 0) return 1.0;
    cplx h0 = 1.0, h1 = 2.0 * z;
    for (int k = 1; k < n; ++k) {
        cplx h2 = 2.0 * z * h1 - 2.0 * k * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

cplx legendre(int n, cplx z) {
    require_degree(n, "legendre");
    if (n == 0) return 1.0;
    cplx p0 = 1.0, p1 = z;
    for (int k = 1; k < n; ++k) {
        cplx p2 = ((2.0 * k + 1.0) * z * p1 - double(k) * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

cplx jacobi(int n, double a, double b, cplx z) {
    require_degree(n, "jacobi");
    if (a <= -1.0 || b <= -1.0) throw DomainError("jacobi: upper indices must exceed -1");
    if (n == 0) return 1.0;
    // extended precision: the recurrence loses digits near the zeros on [-1, 1]
    using ld = long double;
    const lcplx x = widen(z);
    lcplx p0 = 1.0L;
    lcplx p1 = (ld(a) + 1) + (ld(a) + b + 2) * (x - 1.0L) / 2.0L;
    for (int k = 2; k <= n; ++k) {
        const ld s = 2.0L * k + a + b;
        const ld c0 = 2.0L * k * (k + a + b) * (s - 2);
        const ld c1 = (s - 1) * s * (s - 2);
        const ld c2 = (s - 1) * (ld(a) * a - ld(b) * b);
        const ld c3 = 2.0L * (k + a - 1) * (k + b - 1) * s;
        lcplx p2 = ((c1 * x + c2) * p1 - c3 * p0) / c0;
        p0 = p1;
        p1 = p2;
    }
    return narrow(p1);
}

cplx gegenbauer(int n, double lambda, cplx z) {
    require_degree(n, "gegenbauer");
    if (lambda <= -0.5) throw DomainError("gegenbauer: lambda must exceed -1/2");
    if (n == 0) return 1.0;
    cplx c0 = 1.0, c1 = 2.0 * lambda * z;
    for (int k = 2; k <= n; ++k) {
        cplx c2 = (2.0 * z * (k + lambda - 1.0) * c1 - (k + 2.0 * lambda - 2.0) * c0) / double(k);
        c0 = c1;
        c1 = c2;
    }
    return c1;
}

cplx assoc_laguerre(int n, int nu, cplx z) {
    require_degree(n, "assoc_laguerre");
    if (n + nu < 0) throw DomainError("assoc_laguerre: n + nu must be nonnegative");
    if (n == 0) return 1.0;
    cplx l0 = 1.0, l1 = 1.0 + double(nu) - z;
    for (int k = 1; k < n; ++k) {
        cplx l2 = ((2.0 * k + 1.0 + nu - z) * l1 - double(k + nu) * l0) / (k + 1.0);
        l0 = l1;
        l1 = l2;
    }
    return l1;
}

cplx legendre_derivative(int l, int j, cplx z) {
    require_degree(l, "legendre_derivative");
    if (j < 0) throw DomainError("legendre_derivative: negative order");
    if (j > l) return 0.0;
    // d^j P_l = (2j-1)!! C_{l-j}^{j+1/2}
    double dfact = 1.0;
    for (int i = 1; i <= j; ++i) dfact *= (2.0 * i - 1.0);
    return dfact * gegenbauer(l - j, j + 0.5, z);
}

cplx assoc_legendre_with_root(int l, int j, cplx z, cplx root) {
    if (j < 0 || j > l) throw DomainError("assoc_legendre: need 0 <= j <= l");
    return std::pow(root, j) * legendre_derivative(l, j, z);
}

cplx assoc_legendre(int l, int j, cplx z, Branch branch) {
    cplx root = std::sqrt(1.0 - z * z);
    if (branch == Branch::negative) root = -root;
    return assoc_legendre_with_root(l, j, z, root);
}

cplx jacobi_equal_power_sum(int n, int j, cplx z) {
    require_degree(n, "jacobi_equal_power_sum");
    if (j < 0) throw DomainError("jacobi_equal_power_sum: negative j");
    const lcplx x = widen(z), u = (x * x - 1.0L) / 4.0L;
    // (n+j)!/(l!(l+j)!(n-2l)!) by its term ratio, starting from C(n+j, n)
    long double c = 1.0L;
    for (int i = 1; i <= j; ++i) c = c * (n + i) / i;
    lcplx sum = 0, up = 1;
    for (int l = 0; 2 * l <= n; ++l) {
        sum += c * up * std::pow(x, n - 2 * l);
        c = c * (n - 2 * l) * (n - 2 * l - 1) / ((l + 1.0L) * (l + j + 1.0L));
        up *= u;
    }
    return narrow(sum);
}

cplx jacobi_equal_gegenbauer_sum(int n, int j, cplx z) {
    require_degree(n, "jacobi_equal_gegenbauer_sum");
    if (j < 0) throw DomainError("jacobi_equal_gegenbauer_sum: negative j");
    const lcplx x = 2.0L * widen(z);
    // Gamma(n-k+j+1/2)/(k!(n-2k)!) relative to Gamma(j+1/2): exact rational steps
    long double a = 1.0L;
    for (int i = 0; i < n; ++i) a = a * (j + 0.5L + i) / (i + 1);
    lcplx sum = 0;
    for (int k = 0; 2 * k <= n; ++k) {
        sum += (k % 2 ? -a : a) * std::pow(x, n - 2 * k);
        a = a * (n - 2 * k) * (n - 2 * k - 1) / ((k + 1.0L) * (n - k + j - 0.5L));
    }
    // (n+j)! (2j)! / ((n+2j)! j!)
    long double pre = 1.0L;
    for (int i = 1; i <= j; ++i) pre = pre * (j + i) / (n + j + i);
    return narrow(pre * sum);
}

cplx excitation_sum(int n, int j, cplx y) {
    require_degree(n, "excitation_sum");
    if (j < 0) throw DomainError("excitation_sum: negative j");
    if (y == -1.0) throw SingularParameterError("excitation_sum: y = -1");
    const lcplx yl = widen(y);
    return narrow(multinomial_series(n, j, yl / ((1.0L + yl) * (1.0L + yl))));
}

cplx excitation_closed(int n, int j, cplx y) {
    if (y == 1.0 || y == -1.0) throw SingularParameterError("excitation_closed: y = +-1");
    return std::pow((1.0 - y) / (1.0 + y), n) * jacobi(n, j, j, (1.0 + y) / (1.0 - y));
}

cplx root_argument_sum(int n, int j, cplx x) {
    require_degree(n, "root_argument_sum");
    if (j < 0) throw DomainError("root_argument_sum: negative j");
    return narrow(multinomial_series(n, j, -widen(x) / 4.0L));
}

cplx root_argument_closed(int n, int j, cplx x, Branch branch) {
    cplx r = std::sqrt(1.0 + x);
    if (r == 0.0) throw SingularParameterError("root_argument_closed: x = -1");
    if (branch == Branch::negative) r = -r;
    return std::pow(r, n) * jacobi(n, j, j, 1.0 / r);
}

cplx scaled_hermite(int k, cplx x, cplx w) {
    require_degree(k, "scaled_hermite");
    if (k == 0) return 1.0;
    cplx s0 = 1.0, s1 = x;
    for (int i = 1; i < k; ++i) {
        cplx s2 = x * s1 - 2.0 * i * w * s0;
        s0 = s1;
        s1 = s2;
    }
    return s1;
}

std::vector<cplx> scaled_hermite_table(int kmax, cplx x, cplx w, cplx seed) {
    require_degree(kmax, "scaled_hermite_table");
    std::vector<cplx> t(kmax + 1);
    t[0] = seed;
    if (kmax >= 1) t[1] = x * seed;
    for (int k = 1; k < kmax; ++k)
        t[k + 1] = (x * t[k] - 2.0 * w * std::sqrt(double(k)) * t[k - 1]) / std::sqrt(k + 1.0);
    return t;
}

}  // namespace sqexc
