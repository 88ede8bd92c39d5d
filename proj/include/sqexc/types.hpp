#pragma once

#include <complex>

namespace sqexc {

using cplx = std::complex<double>;

/// Label of one state |beta, n; zeta> together with the action unit.
struct StateLabel {
    cplx beta{};
    int n = 0;
    cplx zeta{};
    double hbar = 1.0;
};

// Throws DomainError for n < 0 or hbar <= 0.
void check_label(const StateLabel& s);

// As check_label, and additionally requires |zeta| < 1.
void check_normalizable(const StateLabel& s);

}  // namespace sqexc
