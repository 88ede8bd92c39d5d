#pragma once

#include <vector>

#include "sqexc/types.hpp"

namespace sqexc {

// Phase-space functions of the normalized state, with measure dq dp.

double wigner(const StateLabel& s, double q, double p);

/// Wigner function through the two-variable Hermite polynomial H_nn.
double wigner_hermite2(const StateLabel& s, double q, double p);

/// Wigner function in the complex variable alpha, measure d^2 alpha.
/// Equals 2 hbar wigner(s, q, p) for alpha = (q + i p) / sqrt(2 hbar).
double wigner_complex(const StateLabel& s, cplx alpha);

double husimi_q(const StateLabel& s, double q, double p);

enum class Quasi { wigner, husimi };

struct PhaseGridSpec {
    double q_min = -5.0, q_max = 5.0;
    double p_min = -5.0, p_max = 5.0;
    int nq = 101, np = 101;

    /// Sample positions; a single sample sits at the midpoint of its range.
    double q(int i) const;
    double p(int j) const;
};

struct PhaseGrid {
    PhaseGridSpec spec;
    std::vector<double> values;  // values[i * np + j] at (q(i), p(j))
};

PhaseGrid grid_eval(const StateLabel& s, Quasi which, const PhaseGridSpec& g);

struct SqueezeAxes {
    double x_max = 1.0, x_min = 1.0;
};

SqueezeAxes squeeze_axes(double zeta_abs, double hbar);

}  // namespace sqexc
