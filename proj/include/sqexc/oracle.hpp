#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "sqexc/photonstats.hpp"
#include "sqexc/types.hpp"

namespace sqexc::oracle {

// Dense truncated-Fock-space reference implementation.  Vectors are kept in
// extended precision so that cancellations between unnormalized states of
// norm ~1e7 still leave ~1e-10 absolute accuracy.

using lcplx = std::complex<long double>;
using Vector = std::vector<lcplx>;

struct TruncatedOperator {
    int dim = 0;
    Eigen::MatrixXcd entries;

    static TruncatedOperator annihilation(int dim);
    static TruncatedOperator creation(int dim);
    static TruncatedOperator number(int dim);

    TruncatedOperator operator*(const TruncatedOperator& o) const;
    TruncatedOperator operator-(const TruncatedOperator& o) const;
};

// Sparse ladder actions on a vector, truncated at its length.
Vector apply_annihilation(const Vector& v);
Vector apply_creation(const Vector& v);

/// exp(beta a+ - beta* a) v in the truncated space of v's length
/// (exactly unitary there up to rounding).
Vector displace(const Vector& v, cplx beta);

long double norm2(const Vector& v);
lcplx inner(const Vector& a, const Vector& b);

struct OracleState {
    int dim = 0;
    Vector amplitudes;              // unnormalized |beta, n; zeta>, length dim
    long double tail_estimate = 0;  // relative weight beyond dim in the work space
};

/// Builds |beta, n; zeta> from the squeezed-vacuum series, n applications
/// of (a+ - zeta* a)/sqrt(1+|zeta|^2) divided by sqrt(n!), and a
/// displacement.  Work space is 2 dim.
OracleState build_state(const StateLabel& s, int dim);

/// Doubles dim from 256 until dim and 2 dim agree to 1e-12 and the weight
/// beyond dim is below 1e-24 (cap 4096).
OracleState build_state_auto(const StateLabel& s);

lcplx oracle_overlap(const OracleState& a, const OracleState& b);

enum class Ordering { normal, antinormal };

/// <a+^l a^k> (normal) or <a^k a+^l> (antinormal), divided by <v|v>.
lcplx oracle_moment(const OracleState& s, int k, int l, Ordering ord);

/// Same fields as the closed-form report, by direct operator application.
MomentReport oracle_moments(const OracleState& s, double hbar);

/// sum_m v_m phi_m(q) with oscillator eigenfunctions for the given hbar.
lcplx oracle_psi(const OracleState& s, double q, double hbar);

/// Wigner function of the normalized state by trapezoid quadrature of the
/// Weyl integral.  Throws ConsistencyError if step halving moves the value
/// by more than 1e-8.
double oracle_wigner(const OracleState& s, double q, double p, double hbar);

/// <alpha | v> with the normalized coherent state |alpha>.
lcplx oracle_coherent_overlap(const OracleState& s, cplx alpha);

/// Husimi function with measure dq dp.
double oracle_husimi(const OracleState& s, double q, double p, double hbar);

}  // namespace sqexc::oracle
