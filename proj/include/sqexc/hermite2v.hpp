#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "sqexc/types.hpp"

namespace sqexc {

struct SymMatrix2 {
    cplx r11{}, r12{}, r22{};
};

/// Parameters of  int H_m(x) H_n(lambda x + d) exp(-M x^2 + c x) dx.
struct GaussIntegralParams1D {
    cplx lambda{1.0};
    cplx d{};
    cplx M{1.0};
    cplx c{};
};

/// H_mn^{R}(y1, y2) from the generating function exp(-a R a / 2 + a R y).
cplx hermite2(const SymMatrix2& R, cplx y1, cplx y2, int m, int n);

/// Same polynomial addressed by zeta = R y instead of y; valid for singular R.
cplx hermite2_linear(const SymMatrix2& R, cplx z1, cplx z2, int m, int n);

/// Table H[m * (nmax + 1) + n] for 0 <= m <= mmax, 0 <= n <= nmax.
std::vector<cplx> hermite2_table(const SymMatrix2& R, cplx z1, cplx z2, int mmax, int nmax);

/// Finite sum of products of one-variable Hermite polynomials, with
/// sqrt(R11), sqrt(R22) taken on the principal branch in every factor.
cplx hermite2_product_sum(const SymMatrix2& R, cplx y1, cplx y2, int m, int n);

/// Special case R = t * sigma_x through associated Laguerre polynomials.
cplx hermite2_laguerre(cplx t, cplx y1, cplx y2, int m, int n);

// Zero-argument values H_mn^{R}(0, 0).  All vanish for odd m + n.
cplx hermite2_zero(const SymMatrix2& R, int m, int n);                  // finite power sum
cplx hermite2_zero_legendre(const SymMatrix2& R, int n);                // m == n
cplx hermite2_zero_assoc_legendre(const SymMatrix2& R, int m, int n);
cplx hermite2_zero_jacobi(const SymMatrix2& R, int m, int n);
cplx hermite2_zero_gegenbauer(const SymMatrix2& R, int m, int n);

/// int H_m(a x + d1) H_n(b x + d2) exp(-M x^2 + c x) dx over the real line.
cplx hermite_gauss_integral(int m, int n, cplx a, cplx d1, cplx b, cplx d2, cplx M, cplx c);

struct Reduction1D {
    SymMatrix2 R;
    cplx z1{}, z2{};
    std::optional<cplx> y1, y2;  // empty when R is singular
};

Reduction1D gauss_hermite_params_1d(const GaussIntegralParams1D& p);

cplx gauss_hermite_integral_1d(int m, int n, const GaussIntegralParams1D& p);

/// Expanded form as a single sum of products of one-variable Hermite
/// polynomials.  Needs M != 1 and M != lambda^2.
cplx gauss_hermite_integral_1d_expanded(int m, int n, const GaussIntegralParams1D& p);

// ---- N variables ----

struct ReductionND {
    Eigen::MatrixXcd R;                  // 2N x 2N, symmetric
    Eigen::VectorXcd z;                  // (z1; z2)
    std::optional<Eigen::VectorXcd> y;   // R^{-1} z, empty when R is singular
    cplx prefactor{};                    // pi^{N/2} / sqrt(det M) * exp(c M^{-1} c / 4)
};

/// Parameters of  int H_m^{S}(x) H_n^{T}(Lambda x + d) exp(-x M x + c x) dx.
ReductionND gauss_hermite_params_nd(const Eigen::MatrixXcd& S, const Eigen::MatrixXcd& T,
                                    const Eigen::MatrixXcd& M, const Eigen::MatrixXcd& Lambda,
                                    const Eigen::VectorXcd& c, const Eigen::VectorXcd& d);

/// Multi-index Hermite polynomial H_k^{R} addressed by z = R y.
cplx hermite_multi(const Eigen::MatrixXcd& R, const Eigen::VectorXcd& z, std::span<const int> k);

}  // namespace sqexc
