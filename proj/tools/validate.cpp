#include "validate.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "sqexc/exact.hpp"
#include "sqexc/hermite2v.hpp"
#include "sqexc/oracle.hpp"
#include "sqexc/overlaps.hpp"
#include "sqexc/photonstats.hpp"
#include "sqexc/polymath.hpp"
#include "sqexc/quasiprob.hpp"
#include "sqexc/states.hpp"

namespace sqexc::cli {

namespace {

namespace orc = sqexc::oracle;

struct Tracker {
    PropertyResult r;
    Tracker(std::string name, double tol) { r.name = std::move(name), r.tolerance = tol; }
    void add(double err) {
        ++r.cases;
        if (!(err <= r.max_error)) r.max_error = std::isnan(err) ? INFINITY : err;
    }
    PropertyResult done() {
        r.passed = r.max_error <= r.tolerance;
        return r;
    }
};

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

cplx narrow(orc::lcplx z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

using Rng = std::mt19937_64;

double uniform(Rng& g, double a, double b) { return std::uniform_real_distribution<double>(a, b)(g); }

cplx random_disk(Rng& g, double rmax) {
    return std::polar(rmax * std::sqrt(uniform(g, 0.0, 1.0)), uniform(g, 0.0, 2.0 * M_PI));
}

void identity_checks(Rng& g, std::vector<PropertyResult>& out) {
    {
        Tracker t("excitation_sum_closed_form", 1e-10);
        for (int n = 0; n <= 20; ++n)
            for (int j = 0; j <= 5; ++j) {
                const double y = uniform(g, 0.0, 0.9);
                t.add(rel(excitation_sum(n, j, y), excitation_closed(n, j, y)));
                const double x = uniform(g, -0.5, 3.0);
                t.add(rel(root_argument_sum(n, j, x), root_argument_closed(n, j, x)));
            }
        out.push_back(t.done());
    }
    {
        Tracker t("gegenbauer_interior_sum_exact", 0.0);
        for (int n = 0; n <= 20; ++n)
            for (int j = 0; j <= 5; ++j)
                for (int k = 0; 2 * k <= n; ++k)
                    t.add(gegenbauer_interior_sum(n, j, k) == gegenbauer_interior_closed(n, j, k) ? 0.0 : 1.0);
        out.push_back(t.done());
    }
    {
        Tracker t("alternating_factorial_sum_exact", 0.0);
        for (int k = 0; k <= 10; ++k)
            for (int l = 0; l <= 20; ++l)
                t.add(alternating_factorial_sum(k, l) == alternating_factorial_closed(k, l) ? 0.0 : 1.0);
        out.push_back(t.done());
    }
    {
        Tracker t("mean_photon_long_form", 1e-12);
        for (int n = 0; n <= 20; ++n) {
            const StateLabel s{random_disk(g, 3.0), n, random_disk(g, 0.85)};
            const double a = mean_photon(s);
            t.add(std::abs(a - mean_photon_jacobi(s)) / a);
        }
        out.push_back(t.done());
    }
    {
        Tracker t("jacobi_equal_index_sums", 1e-10);
        for (int n = 0; n <= 20; ++n)
            for (int j = 0; j <= 5; ++j) {
                const double z = uniform(g, 1.0, 4.0);
                const cplx ref = jacobi(n, j, j, z);
                t.add(rel(jacobi_equal_power_sum(n, j, z), ref));
                t.add(rel(jacobi_equal_gegenbauer_sum(n, j, z), ref));
            }
        out.push_back(t.done());
    }
    {
        Tracker t("f_ratio_table", 1e-12);
        for (int n = 1; n <= 5; ++n)
            for (int i = 0; i < 10; ++i) {
                const double y = uniform(g, 0.0, 0.95);
                t.add(std::abs(f_ratio(n, y) - f_ratio_table(n, y)));
            }
        out.push_back(t.done());
    }
    {
        Tracker t("norm_legendre_vs_series", 1e-10);
        for (int n = 0; n <= 15; ++n) {
            const double z = uniform(g, 0.0, 0.85);
            const double a = inverse_norm_squared(n, z);
            t.add(std::abs(a - inverse_norm_squared_series(n, z)) / a);
        }
        out.push_back(t.done());
    }
    {
        Tracker t("hermite2_zero_argument_chain", 1e-10);
        Tracker p("hermite2_product_sum_vs_recurrence", 1e-10);
        for (int i = 0; i < 6; ++i) {
            const SymMatrix2 R{random_disk(g, 1.5) + 0.2, random_disk(g, 1.5), random_disk(g, 1.5) + 0.2};
            const cplx y1 = random_disk(g, 1.0), y2 = random_disk(g, 1.0);
            for (int m = 0; m <= 12; ++m)
                for (int n = 0; n <= 12; ++n) {
                    const cplx ref = hermite2_zero(R, m, n);
                    const double scale = std::max(1.0, std::abs(ref));
                    t.add(std::abs(hermite2_zero_assoc_legendre(R, m, n) - ref) / scale);
                    t.add(std::abs(hermite2_zero_jacobi(R, m, n) - ref) / scale);
                    t.add(std::abs(hermite2_zero_gegenbauer(R, m, n) - ref) / scale);
                    t.add(std::abs(hermite2(R, 0.0, 0.0, m, n) - ref) / scale);
                    if (m == n) t.add(std::abs(hermite2_zero_legendre(R, n) - ref) / scale);
                    const cplx h = hermite2(R, y1, y2, m, n);
                    p.add(std::abs(hermite2_product_sum(R, y1, y2, m, n) - h) / std::max(1.0, std::abs(h)));
                }
        }
        out.push_back(t.done());
        out.push_back(p.done());
    }
}

void oracle_checks(Rng& g, bool inject_fault, std::vector<PropertyResult>& out) {
    Tracker orth("orthonormality", 1e-9), norm("normalization_vs_oracle", 1e-10),
        pdist("photon_distribution_vs_oracle", 1e-9), mom("moments_vs_oracle", 1e-8),
        wig("wigner_vs_oracle", 1e-7), hus("husimi_vs_oracle", 1e-9), ov("overlap_vs_oracle", 1e-9);

    for (int draw = 0; draw < 3; ++draw) {
        const cplx beta = random_disk(g, 2.0), zeta = random_disk(g, 0.6);
        constexpr int kMax = 4;
        std::vector<orc::OracleState> plus, minus;
        const int dim = orc::build_state_auto({beta, kMax, zeta}).dim;
        for (int n = 0; n <= kMax; ++n) {
            plus.push_back(orc::build_state({beta, n, zeta}, dim));
            minus.push_back(orc::build_state({beta, n, -zeta}, dim));
        }
        for (int m = 0; m <= kMax; ++m)
            for (int n = 0; n <= kMax; ++n) {
                const double delta = m == n ? 1.0 : 0.0;
                orth.add(std::abs(narrow(orc::oracle_overlap(minus[m], plus[n])) - delta));
                orth.add(std::abs(overlap({beta, m, -zeta}, {beta, n, zeta}) - delta));
            }
        for (int n = 0; n <= kMax; ++n) {
            const double ref = inverse_norm_squared(n, std::abs(zeta));
            norm.add(std::abs(static_cast<double>(orc::norm2(plus[n].amplitudes)) - ref) / ref);
        }

        const StateLabel s{beta, static_cast<int>(uniform(g, 0.0, 5.0)), zeta};
        const auto os = orc::build_state(s, dim);
        const auto pd = photon_distribution(s, dim - 1);
        const double on = static_cast<double>(orc::norm2(os.amplitudes));
        for (int m = 0; m < dim; ++m) pdist.add(std::abs(pd.probs[m] - std::norm(narrow(os.amplitudes[m])) / on));

        auto closed = moments(s);
        if (inject_fault) closed.covQP_sym = -closed.covQP_sym;
        const auto ref = orc::oracle_moments(os, s.hbar);
        mom.add(rel(closed.mean_a, ref.mean_a));
        mom.add(rel(closed.mean_a2, ref.mean_a2));
        mom.add(rel(closed.mean_N, ref.mean_N));
        mom.add(rel(closed.varQ, ref.varQ));
        mom.add(rel(closed.varP, ref.varP));
        mom.add(rel(closed.covQP_sym, ref.covQP_sym));
        mom.add(rel(closed.unc_sum, ref.unc_sum));
        mom.add(rel(closed.unc_prod, ref.unc_prod));

        for (int i = 0; i < 3; ++i) {
            const double q = uniform(g, -4.0, 4.0), p = uniform(g, -4.0, 4.0);
            wig.add(std::abs(wigner(s, q, p) - orc::oracle_wigner(os, q, p, s.hbar)));
            hus.add(std::abs(husimi_q(s, q, p) - orc::oracle_husimi(os, q, p, s.hbar)));
        }

        const StateLabel a{random_disk(g, 2.0), static_cast<int>(uniform(g, 0.0, 5.0)), random_disk(g, 0.6)};
        const auto oa = orc::build_state(a, dim);
        const cplx o = narrow(orc::oracle_overlap(oa, os));
        ov.add(rel(overlap(a, s), o));
    }
    for (auto* t : {&orth, &norm, &pdist, &mom, &wig, &hus, &ov}) out.push_back(t->done());
}

}  // namespace

bool ValidationReport::passed() const {
    return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.passed; });
}

ValidationReport run_validation(Suite suite, std::uint64_t seed, bool inject_fault) {
    Rng g(seed);
    ValidationReport rep;
    if (suite != Suite::oracle) identity_checks(g, rep.properties);
    if (suite != Suite::identities) oracle_checks(g, inject_fault, rep.properties);
    return rep;
}

}  // namespace sqexc::cli
