#include "sqexc/hermite2v.hpp"

#include <cmath>
#include <cstdlib>

#include "sqexc/errors.hpp"
#include "sqexc/polymath.hpp"

namespace sqexc {

namespace {

void require_indices(int m, int n) {
    if (m < 0 || n < 0) throw DomainError("two-variable Hermite: negative index");
}

double fact(int n) { return std::exp(log_factorial(n)); }

bool same_parity(int m, int n) { return (m + n) % 2 == 0; }

double sign_half(int m, int n) { return ((m + n) / 2) % 2 ? -1.0 : 1.0; }

struct RootPair {
    cplx rho, sigma, r, s;
};

// sqrt(R11), sqrt(R22), r = R12/(rho sigma), s = sqrt(r^2 - 1)
RootPair roots_of(const SymMatrix2& R) {
    RootPair p;
    p.rho = std::sqrt(R.r11);
    p.sigma = std::sqrt(R.r22);
    if (p.rho == 0.0 || p.sigma == 0.0)
        throw SingularParameterError("zero-argument form needs R11, R22 != 0");
    p.r = R.r12 / (p.rho * p.sigma);
    p.s = std::sqrt(p.r * p.r - 1.0);
    if (p.s == 0.0) throw SingularParameterError("zero-argument form needs r^2 != 1");
    return p;
}

}  // namespace

std::vector<cplx> hermite2_table(const SymMatrix2& R, cplx z1, cplx z2, int mmax, int nmax) {
    require_indices(mmax, nmax);
    const int w = nmax + 1;
    std::vector<cplx> h((mmax + 1) * w);
    auto at = [&](int m, int n) -> cplx& { return h[m * w + n]; };
    at(0, 0) = 1.0;
    for (int m = 0; m < mmax; ++m)
        at(m + 1, 0) = z1 * at(m, 0) - (m > 0 ? double(m) * R.r11 * at(m - 1, 0) : 0.0);
    for (int n = 0; n < nmax; ++n) {
        for (int m = 0; m <= mmax; ++m) {
            cplx v = z2 * at(m, n);
            if (m > 0) v -= double(m) * R.r12 * at(m - 1, n);
            if (n > 0) v -= double(n) * R.r22 * at(m, n - 1);
            at(m, n + 1) = v;
        }
    }
    return h;
}

cplx hermite2_linear(const SymMatrix2& R, cplx z1, cplx z2, int m, int n) {
    return hermite2_table(R, z1, z2, m, n).back();
}

cplx hermite2(const SymMatrix2& R, cplx y1, cplx y2, int m, int n) {
    return hermite2_linear(R, R.r11 * y1 + R.r12 * y2, R.r12 * y1 + R.r22 * y2, m, n);
}

cplx hermite2_product_sum(const SymMatrix2& R, cplx y1, cplx y2, int m, int n) {
    require_indices(m, n);
    const cplx rho = std::sqrt(R.r11), sigma = std::sqrt(R.r22);
    if (rho == 0.0 || sigma == 0.0) throw SingularParameterError("product sum needs R11, R22 != 0");
    const cplx z1 = R.r11 * y1 + R.r12 * y2;
    const cplx z2 = R.r12 * y1 + R.r22 * y2;
    const cplx k = -2.0 * R.r12 / (rho * sigma);
    const cplx x1 = z1 / (std::sqrt(2.0) * rho), x2 = z2 / (std::sqrt(2.0) * sigma);
    cplx sum = 0.0;
    for (int j = 0; j <= std::min(m, n); ++j) {
        const double c = std::exp(log_factorial(m) + log_factorial(n) - log_factorial(j) -
                                  log_factorial(m - j) - log_factorial(n - j));
        sum += c * std::pow(k, j) * hermite(m - j, x1) * hermite(n - j, x2);
    }
    return std::pow(rho / std::sqrt(2.0), m) * std::pow(sigma / std::sqrt(2.0), n) * sum;
}

cplx hermite2_laguerre(cplx t, cplx y1, cplx y2, int m, int n) {
    require_indices(m, n);
    const int mu = std::min(m, n), nu = std::max(m, n);
    const cplx sign = mu % 2 ? -1.0 : 1.0;
    return fact(mu) * std::pow(t, nu) * sign * std::pow(y1, n > m ? n - m : 0) *
           std::pow(y2, m > n ? m - n : 0) * assoc_laguerre(mu, std::abs(m - n), t * y1 * y2);
}

cplx hermite2_zero(const SymMatrix2& R, int m, int n) {
    require_indices(m, n);
    if (!same_parity(m, n)) return 0.0;
    const int mu = std::min(m, n), d = std::abs(m - n) / 2;
    cplx sum = 0.0;
    for (int l = 0; 2 * l <= mu; ++l) {
        const double c = std::pow(2.0, mu - 2 * l) /
                         (fact(l) * fact(l + d) * fact(mu - 2 * l));
        sum += c * std::pow(R.r12, mu - 2 * l) * std::pow(R.r11, (m - mu) / 2 + l) *
               std::pow(R.r22, (n - mu) / 2 + l);
    }
    return sign_half(m, n) * std::pow(2.0, -(m + n) / 2) * fact(m) * fact(n) * sum;
}

cplx hermite2_zero_legendre(const SymMatrix2& R, int n) {
    require_indices(n, n);
    const cplx det = R.r11 * R.r22 - R.r12 * R.r12;
    const cplx root = std::sqrt(-det);
    if (root == 0.0) throw SingularParameterError("zero-argument Legendre form needs det R != 0");
    return fact(n) * std::pow(root, n) * legendre(n, -R.r12 / root);
}

cplx hermite2_zero_assoc_legendre(const SymMatrix2& R, int m, int n) {
    require_indices(m, n);
    if (!same_parity(m, n)) return 0.0;
    const auto p = roots_of(R);
    const int mu = std::min(m, n), l = (m + n) / 2, j = std::abs(m - n) / 2;
    // Legendre function of the first kind off the cut: (x^2 - 1)^{j/2} with
    // sqrt(x^2 - 1) = 1/s at x = r/s.
    const cplx P = assoc_legendre_with_root(l, j, p.r / p.s, 1.0 / p.s);
    return fact(mu) * sign_half(m, n) * std::pow(p.rho, m) * std::pow(p.sigma, n) *
           std::pow(p.s, l) * P;
}

cplx hermite2_zero_jacobi(const SymMatrix2& R, int m, int n) {
    require_indices(m, n);
    if (!same_parity(m, n)) return 0.0;
    const auto p = roots_of(R);
    const int mu = std::min(m, n), d = std::abs(m - n) / 2;
    const double c = fact(m) * fact(n) * sign_half(m, n) / (std::pow(2.0, d) * fact((m + n) / 2));
    return c * std::pow(p.rho, m) * std::pow(p.sigma, n) * std::pow(p.s, mu) *
           jacobi(mu, d, d, p.r / p.s);
}

cplx hermite2_zero_gegenbauer(const SymMatrix2& R, int m, int n) {
    require_indices(m, n);
    if (!same_parity(m, n)) return 0.0;
    const auto p = roots_of(R);
    const int mu = std::min(m, n), d = std::abs(m - n) / 2;
    const double c = fact(mu) * fact(std::abs(m - n)) * sign_half(m, n) / (std::pow(2.0, d) * fact(d));
    return c * std::pow(p.rho, m) * std::pow(p.sigma, n) * std::pow(p.s, mu) *
           gegenbauer(mu, d + 0.5, p.r / p.s);
}

cplx hermite_gauss_integral(int m, int n, cplx a, cplx d1, cplx b, cplx d2, cplx M, cplx c) {
    require_indices(m, n);
    if (M.real() <= 0.0) throw DivergentIntegralError("Hermite-Gauss integral needs Re(M) > 0");
    SymMatrix2 R{2.0 * (1.0 - a * a / M), -2.0 * a * b / M, 2.0 * (1.0 - b * b / M)};
    const cplx z1 = a * c / M + 2.0 * d1;
    const cplx z2 = b * c / M + 2.0 * d2;
    return std::sqrt(M_PI / M) * std::exp(c * c / (4.0 * M)) * hermite2_linear(R, z1, z2, m, n);
}

Reduction1D gauss_hermite_params_1d(const GaussIntegralParams1D& p) {
    if (p.M.real() <= 0.0) throw DivergentIntegralError("Hermite-Gauss integral needs Re(M) > 0");
    Reduction1D out;
    out.R = {2.0 * (1.0 - 1.0 / p.M), -2.0 * p.lambda / p.M, 2.0 * (1.0 - p.lambda * p.lambda / p.M)};
    out.z1 = p.c / p.M;
    out.z2 = p.lambda * p.c / p.M + 2.0 * p.d;
    const cplx den = 2.0 * (1.0 - (1.0 + p.lambda * p.lambda) / p.M);
    const double scale = std::abs(out.R.r11 * out.R.r22) + std::abs(out.R.r12 * out.R.r12);
    if (std::abs(den) * 2.0 > 1e-14 * scale) {
        out.y1 = (p.c / p.M + 2.0 * p.lambda * p.d / p.M) / den;
        out.y2 = (p.lambda * p.c / p.M + 2.0 * (1.0 - 1.0 / p.M) * p.d) / den;
    }
    return out;
}

cplx gauss_hermite_integral_1d(int m, int n, const GaussIntegralParams1D& p) {
    return hermite_gauss_integral(m, n, 1.0, 0.0, p.lambda, p.d, p.M, p.c);
}

cplx gauss_hermite_integral_1d_expanded(int m, int n, const GaussIntegralParams1D& p) {
    require_indices(m, n);
    if (p.M.real() <= 0.0) throw DivergentIntegralError("Hermite-Gauss integral needs Re(M) > 0");
    const cplx L = p.lambda, M = p.M, c = p.c, d = p.d;
    const cplx u = std::sqrt(M - 1.0), v = std::sqrt(M - L * L), sM = std::sqrt(M);
    if (u == 0.0 || v == 0.0) throw SingularParameterError("expanded integral needs M != 1, lambda^2");
    const cplx x1 = c / (2.0 * sM * u);
    const cplx x2 = (L * c + 2.0 * d * M) / (2.0 * sM * v);
    const cplx k = 2.0 * L / (u * v);
    cplx sum = 0.0;
    for (int j = 0; j <= std::min(m, n); ++j) {
        const double cj = std::exp(log_factorial(m) + log_factorial(n) - log_factorial(j) -
                                   log_factorial(m - j) - log_factorial(n - j));
        sum += cj * std::pow(k, j) * hermite(m - j, x1) * hermite(n - j, x2);
    }
    return std::sqrt(M_PI / M) * std::exp(c * c / (4.0 * M)) * std::pow(u / sM, m) *
           std::pow(v / sM, n) * sum;
}

ReductionND gauss_hermite_params_nd(const Eigen::MatrixXcd& S, const Eigen::MatrixXcd& T,
                                    const Eigen::MatrixXcd& M, const Eigen::MatrixXcd& Lambda,
                                    const Eigen::VectorXcd& c, const Eigen::VectorXcd& d) {
    const Eigen::Index N = M.rows();
    if (M.cols() != N || S.rows() != N || S.cols() != N || T.rows() != N || T.cols() != N ||
        Lambda.rows() != N || Lambda.cols() != N || c.size() != N || d.size() != N)
        throw DomainError("gauss_hermite_params_nd: dimension mismatch");
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(M);
    if (!lu.isInvertible()) throw SingularMatrixError("gauss_hermite_params_nd: M is singular");
    const Eigen::MatrixXcd Mi = lu.inverse();

    ReductionND out;
    out.R.resize(2 * N, 2 * N);
    const Eigen::MatrixXcd R12 = -0.5 * S * Mi * Lambda.transpose() * T;
    out.R.topLeftCorner(N, N) = S - 0.5 * S * Mi * S;
    out.R.bottomRightCorner(N, N) = T - 0.5 * T * Lambda * Mi * Lambda.transpose() * T;
    out.R.topRightCorner(N, N) = R12;
    out.R.bottomLeftCorner(N, N) = R12.transpose();

    out.z.resize(2 * N);
    out.z.head(N) = 0.5 * S * Mi * c;
    out.z.tail(N) = 0.5 * T * Lambda * Mi * c + T * d;

    const cplx quad = (c.transpose() * Mi * c)(0, 0);
    out.prefactor = std::pow(M_PI, 0.5 * double(N)) / std::sqrt(lu.determinant()) * std::exp(0.25 * quad);

    Eigen::FullPivLU<Eigen::MatrixXcd> rlu(out.R);
    rlu.setThreshold(1e-12);
    if (rlu.isInvertible()) out.y = rlu.solve(out.z);
    return out;
}

cplx hermite_multi(const Eigen::MatrixXcd& R, const Eigen::VectorXcd& z, std::span<const int> k) {
    const std::size_t D = k.size();
    if (static_cast<std::size_t>(z.size()) != D || static_cast<std::size_t>(R.rows()) != D ||
        static_cast<std::size_t>(R.cols()) != D)
        throw DomainError("hermite_multi: dimension mismatch");
    std::vector<std::size_t> stride(D, 1);
    std::size_t total = 1;
    for (std::size_t i = 0; i < D; ++i) {
        if (k[i] < 0) throw DomainError("hermite_multi: negative index");
        stride[i] = total;
        total *= static_cast<std::size_t>(k[i] + 1);
    }
    std::vector<cplx> h(total);
    std::vector<int> idx(D, 0);
    h[0] = 1.0;
    for (std::size_t lin = 1; lin < total; ++lin) {
        // advance the mixed-radix counter
        for (std::size_t i = 0; i < D; ++i) {
            if (++idx[i] <= k[i]) break;
            idx[i] = 0;
        }
        std::size_t i0 = 0;
        while (idx[i0] == 0) ++i0;
        const std::size_t prev = lin - stride[i0];
        cplx v = z(i0) * h[prev];
        for (std::size_t j = 0; j < D; ++j) {
            const int kj = idx[j] - (j == i0 ? 1 : 0);
            if (kj > 0) v -= R(i0, j) * double(kj) * h[prev - stride[j]];
        }
        h[lin] = v;
    }
    return h[total - 1];
}

}  // namespace sqexc
