// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <deque>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "reference.hpp"
#include "sqexc/errors.hpp"
#include "sqexc/exact.hpp"
#include "sqexc/hermite2v.hpp"
#include "sqexc/oracle.hpp"
#include "sqexc/overlaps.hpp"
#include "sqexc/photonstats.hpp"
#include "sqexc/polymath.hpp"
#include "sqexc/quasiprob.hpp"
#include "sqexc/states.hpp"

using namespace sqexc;
using namespace sqexc::testing;
namespace orc = sqexc::oracle;

namespace {

using Clock = std::chrono::steady_clock;
using Rng = std::mt19937_64;

// Largest error seen for one named check, against its pinned tolerance.
struct Check {
    std::string what;
    double tol;
    double worst = 0.0;
    long cases = 0;
    void add(double err) {
        ++cases;
        if (!(err <= worst)) worst = std::isnan(err) ? INFINITY : err;
    }
    bool ok() const { return worst <= tol; }
};

struct Criterion {
    std::string name;
    std::deque<Check> checks;
    std::vector<std::string> notes;
    bool extra_ok = true;
    Check& check(const std::string& what, double tol) { return checks.emplace_back(Check{what, tol}); }
    bool ok() const {
        bool r = extra_ok;
        for (const auto& c : checks) r = r && c.ok();
        return r;
    }
};

double uniform(Rng& g, double a, double b) { return std::uniform_real_distribution<double>(a, b)(g); }
cplx disk(Rng& g, double r) { return std::polar(r * std::sqrt(uniform(g, 0, 1)), uniform(g, 0, 2 * M_PI)); }
double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

int common_dim(const std::vector<StateLabel>& labels) {
    int d = 0;
    for (const auto& s : labels) d = std::max(d, orc::build_state_auto(s).dim);
    return d;
}

Criterion orthonormality() {
    Criterion c{"orthonormality"};
    auto& closed = c.check("closed form |<b,m;-z|b,n;z> - delta|", 1e-9);
    auto& oracle = c.check("oracle |<b,m;-z|b,n;z> - delta|", 1e-9);
    const auto t0 = Clock::now();
    for (const double za : {0.2, 0.5, 0.8})
        for (const double arg : {0.0, 1.1})
            for (const cplx beta : {cplx(0), cplx(1, 2)}) {
                const cplx zeta = std::polar(za, arg);
                const int dim = common_dim({{beta, 8, zeta}, {beta, 8, -zeta}});
                std::vector<orc::OracleState> plus, minus;
                for (int n = 0; n <= 8; ++n) {
                    plus.push_back(orc::build_state({beta, n, zeta}, dim));
                    minus.push_back(orc::build_state({beta, n, -zeta}, dim));
                }
                for (int m = 0; m <= 8; ++m)
                    for (int n = 0; n <= 8; ++n) {
                        const double delta = m == n;
                        closed.add(std::abs(overlap({beta, m, -zeta}, {beta, n, zeta}) - delta));
                        oracle.add(std::abs(narrow(orc::oracle_overlap(minus[m], plus[n])) - delta));
                    }
            }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    c.extra_ok = secs < 10.0;
    c.notes.push_back("runtime " + std::to_string(secs) + " s (limit 10 s)");
    return c;
}

Criterion normalization_check() {
    Criterion c{"normalization"};
    auto& series = c.check("legendre vs series, relative", 1e-10);
    auto& oracle = c.check("legendre vs oracle norm, relative", 1e-10);
    for (int n = 0; n <= 15; ++n)
        for (int i = 0; i <= 17; ++i) {
            const double z = 0.05 * i;
            const double ref = inverse_norm_squared(n, z);
            series.add(std::abs(inverse_norm_squared_series(n, z) - ref) / ref);
            const cplx beta = n % 2 ? cplx(0.6, -0.3) : cplx(0);
            const auto os = orc::build_state_auto({beta, n, std::polar(z, 0.3 * n)});
            oracle.add(std::abs(static_cast<double>(orc::norm2(os.amplitudes)) - ref) / ref);
        }
    return c;
}

void compare_distribution(const StateLabel& s, Check& sum, Check& vs_oracle) {
    const auto d = photon_distribution_auto(s);
    double total = 0;
    for (double p : d.probs) total += p;
    sum.add(std::abs(total - 1.0));
    const auto os = orc::build_state_auto(s);
    const long double n2 = orc::norm2(os.amplitudes);
    const int top = std::max(d.cutoff + 1, os.dim);
    for (int m = 0; m < top; ++m) {
        const double a = m <= d.cutoff ? d.probs[m] : 0.0;
        const double b = m < os.dim ? static_cast<double>(std::norm(os.amplitudes[m]) / n2) : 0.0;
        vs_oracle.add(std::abs(a - b));
    }
}

Criterion photon_distribution_check() {
    Criterion c{"photon distribution"};
    auto& sum = c.check("|sum p_m - 1| with automatic cutoff", 1e-8);
    auto& oracle = c.check("max |p_m - oracle p_m|", 1e-9);
    for (int n = 0; n <= 5; ++n) compare_distribution({3.53533, n, 0.0}, sum, oracle);
    for (int i = 0; i <= 19; ++i) compare_distribution({5.0, 0, 0.05 * i}, sum, oracle);
    for (const double z : {0.0, 0.2, 0.4, 0.6, 0.8}) compare_distribution({3.87298, 10, z}, sum, oracle);
    c.notes.push_back("sets: beta=3.53533 zeta=0 n=0..5; beta=5 n=0 zeta=0..0.95; beta=3.87298 n=10 zeta=0..0.8");
    return c;
}

Criterion mean_photon_check(Rng& g) {
    Criterion c{"mean photon number"};
    auto& dist = c.check("|closed - sum m p_m|", 1e-6);
    auto& oracle = c.check("|closed - oracle <a+a>|", 1e-6);
    for (int i = 0; i < 40; ++i) {
        const StateLabel s{disk(g, 5.0), i % 11, disk(g, 0.8)};
        const double nbar = mean_photon(s);
        const auto d = photon_distribution_auto(s);
        double m1 = 0;
        for (int m = 0; m <= d.cutoff; ++m) m1 += m * d.probs[m];
        dist.add(std::abs(m1 - nbar));
        const auto os = orc::build_state_auto(s);
        oracle.add(std::abs(narrow(orc::oracle_moment(os, 1, 1, orc::Ordering::normal)).real() - nbar));
    }
    return c;
}

Criterion uncertainty_check(Rng& g) {
    Criterion c{"uncertainty relations"};
    auto& formula = c.check("unc_sum vs oracle, relative", 1e-8);
    auto& phase = c.check("unc_sum phase invariance, relative", 1e-12);
    auto& ineq = c.check("violations of unc_sum >= 2 sqrt(varQ varP)", 0.0);
    for (int i = 0; i < 30; ++i) {
        const double hbar = i % 3 ? 1.0 : 0.7, za = uniform(g, 0.0, 0.8), y = za * za;
        const StateLabel s{disk(g, 4.0), i % 11, std::polar(za, uniform(g, 0, 2 * M_PI)), hbar};
        const auto r = moments(s);
        const double closed = hbar * (2 * s.n + 1) * (1 + y) / (1 - y);
        formula.add(std::abs(r.unc_sum - closed) / closed);
        const auto os = orc::build_state_auto(s);
        formula.add(std::abs(orc::oracle_moments(os, hbar).unc_sum - closed) / closed);
        for (int k = 0; k < 4; ++k) {
            StateLabel t = s;
            t.zeta = std::polar(za, uniform(g, 0, 2 * M_PI));
            const auto rt = moments(t);
            phase.add(std::abs(rt.unc_sum - r.unc_sum) / r.unc_sum);
            ineq.add(rt.unc_sum >= 2 * std::sqrt(rt.varQ * rt.varP) ? 0.0 : 1.0);
        }
        ineq.add(r.unc_sum >= 2 * std::sqrt(r.varQ * r.varP) ? 0.0 : 1.0);
    }
    return c;
}

Criterion phase_space_check(Rng& g) {
    Criterion c{"wigner and husimi"};
    auto& norm = c.check("|integral - 1| by trapezoid quadrature", 1e-6);
    auto& peaks = c.check("|W(0,0) -+ 1/pi| for vacuum and n = 1", 1e-8);
    auto& bound = c.check("excess of Q over 1/(2 pi)", 1e-9);
    auto& wig = c.check("|W closed - W oracle| on 200 points", 1e-7);
    auto& hus = c.check("|Q closed - Q oracle| on 200 points", 1e-7);

    std::vector<StateLabel> states;
    for (int n = 0; n <= 5; ++n) states.push_back({0.0, n, 0.381966});
    states.push_back({{1, -0.5}, 3, std::polar(0.6, 2.0)});
    states.push_back({{0.5, 0.5}, 2, {0.3, -0.4}, 0.5});
    for (const auto& s : states) {
        const double qc = std::sqrt(2 * s.hbar) * s.beta.real(), pc = std::sqrt(2 * s.hbar) * s.beta.imag();
        norm.add(std::abs(trapezoid2d([&](double q, double p) { return wigner(s, q + qc, p + pc); }, 14, 0.1) - 1));
        norm.add(std::abs(trapezoid2d([&](double q, double p) { return husimi_q(s, q + qc, p + pc); }, 18, 0.1) - 1));
        const auto grid = grid_eval(s, Quasi::husimi, {-6 + qc, 6 + qc, -6 + pc, 6 + pc, 121, 121});
        for (double v : grid.values) bound.add(std::max(0.0, v - 1 / (2 * M_PI)));
    }
    peaks.add(std::abs(wigner({0.0, 0, 0.0}, 0, 0) - 1 / M_PI));
    for (const cplx zeta : {cplx(0), cplx(0.381966), std::polar(0.7, 1.0)})
        peaks.add(std::abs(wigner({0.0, 1, zeta}, 0, 0) + 1 / M_PI));
    for (int i = 0; i < 2000; ++i) {
        const StateLabel s{disk(g, 3.0), i % 8, disk(g, 0.9)};
        bound.add(std::max(0.0, husimi_q(s, uniform(g, -6, 6), uniform(g, -6, 6)) - 1 / (2 * M_PI)));
    }

    for (int k = 0; k < 20; ++k) {
        const StateLabel s{disk(g, 2.0), k % 6, disk(g, 0.6)};
        const auto os = orc::build_state_auto(s);
        const double qc = std::sqrt(2.0) * s.beta.real(), pc = std::sqrt(2.0) * s.beta.imag();
        for (int i = 0; i < 10; ++i) {
            const double q = qc + uniform(g, -3, 3), p = pc + uniform(g, -3, 3);
            wig.add(std::abs(wigner(s, q, p) - orc::oracle_wigner(os, q, p, s.hbar)));
            hus.add(std::abs(husimi_q(s, q, p) - orc::oracle_husimi(os, q, p, s.hbar)));
        }
    }
    return c;
}

Criterion polynomial_identities(Rng& g) {
    Criterion c{"polynomial identities"};
    auto& excitation = c.check("excitation sum vs jacobi closed form, relative", 1e-10);
    auto& root = c.check("root-argument sum vs jacobi closed form, relative", 1e-10);
    auto& interior = c.check("gegenbauer interior sum, exact rational mismatches", 0.0);
    auto& alternating = c.check("alternating factorial sum, exact rational mismatches", 0.0);
    auto& three_term = c.check("jacobi three-term identity, relative", 1e-10);
    for (int n = 0; n <= 20; ++n)
        for (int j = 0; j <= 5; ++j) {
            for (int k = 0; k < 4; ++k) {
                const double y = uniform(g, 0.0, 0.95);
                excitation.add(rel(excitation_sum(n, j, y), excitation_closed(n, j, y)));
                const double x = uniform(g, -0.5, 3.0);
                root.add(rel(root_argument_sum(n, j, x), root_argument_closed(n, j, x)));
            }
            for (int k = 0; 2 * k <= n; ++k)
                interior.add(gegenbauer_interior_sum(n, j, k) == gegenbauer_interior_closed(n, j, k) ? 0 : 1);
        }
    for (int k = 0; k <= 10; ++k)
        for (int l = 0; l <= 20; ++l)
            alternating.add(alternating_factorial_sum(k, l) == alternating_factorial_closed(k, l) ? 0 : 1);
    for (int n = 0; n <= 20; ++n)
        for (int i = 0; i < 10; ++i) {
            const double z = uniform(g, 1.0, 20.0);
            const cplx a = (n + 2.0) * jacobi(n, 1, 1, z);
            const cplx b = n >= 2 ? double(n) * jacobi(n - 2, 1, 1, z) : 0.0;
            const cplx d = 2.0 * (2 * n + 1) * legendre(n, z);
            three_term.add(std::abs(a - b - d) / std::max({std::abs(a), std::abs(b), std::abs(d)}));
        }
    return c;
}

Criterion hermite2_check(Rng& g) {
    Criterion c{"two-variable hermite"};
    auto& chain = c.check("zero-argument forms vs recurrence, relative", 1e-10);
    auto& integral = c.check("gauss integral vs quadrature, relative", 1e-9);
    auto& product = c.check("product sum vs recurrence, relative", 1e-10);
    for (int i = 0; i < 20; ++i) {
        const SymMatrix2 R{disk(g, 2.0) + 0.1, disk(g, 2.0), disk(g, 2.0) + 0.1};
        const cplx y1 = disk(g, 1.5), y2 = disk(g, 1.5);
        for (int m = 0; m <= 12; ++m)
            for (int n = 0; n <= 12; ++n) {
                const cplx ref = hermite2(R, 0.0, 0.0, m, n);
                const double s = std::max(1.0, std::abs(ref));
                chain.add(std::abs(hermite2_zero(R, m, n) - ref) / s);
                chain.add(std::abs(hermite2_zero_assoc_legendre(R, m, n) - ref) / s);
                chain.add(std::abs(hermite2_zero_jacobi(R, m, n) - ref) / s);
                chain.add(std::abs(hermite2_zero_gegenbauer(R, m, n) - ref) / s);
                if (m == n) chain.add(std::abs(hermite2_zero_legendre(R, n) - ref) / s);
                const cplx h = hermite2(R, y1, y2, m, n);
                product.add(std::abs(hermite2_product_sum(R, y1, y2, m, n) - h) / std::max(1.0, std::abs(h)));
            }
    }
    for (int draw = 0; draw < 100; ++draw) {
        const GaussIntegralParams1D p{cplx(uniform(g, 0.2, 1.4), uniform(g, -0.15, 0.15)), disk(g, 0.8),
                                      cplx(uniform(g, 0.6, 2.0), uniform(g, -0.3, 0.3)), disk(g, 1.0)};
        const int m = static_cast<int>(uniform(g, 0, 7)), n = static_cast<int>(uniform(g, 0, 7));
        double l1 = 0;
        const cplx ref = integrate(
            [&](double x) {
                return hermite(m, x) * hermite(n, p.lambda * x + p.d) * std::exp(-p.M * x * x + p.c * x);
            },
            -kInf, kInf, 1e-13, &l1);
        const cplx v = gauss_hermite_integral_1d(m, n, p);
        // relative to the integrand's L1 norm where the integral itself nearly cancels
        integral.add(std::abs(v - ref) / std::max(std::abs(ref), 1e-3 * l1));
        if (std::abs(p.M - 1.0) > 0.05 && std::abs(p.M - p.lambda * p.lambda) > 0.05)
            integral.add(std::abs(gauss_hermite_integral_1d_expanded(m, n, p) - ref) /
                         std::max(std::abs(ref), 1e-3 * l1));
    }
    return c;
}

Criterion oscillation_check() {
    Criterion c{"photon-number oscillations"};
    auto& missing = c.check("parameters with fewer than 3 maxima past the principal peak", 0.0);
    std::string counts;
    for (int i = 0; i <= 20; ++i) {
        const double z = 0.75 + 0.01 * i;
        const auto d = photon_distribution_auto({5.0, 0, z});
        const auto& p = d.probs;
        const int top = static_cast<int>(std::max_element(p.begin(), p.end()) - p.begin());
        int maxima = 0;
        for (int m = top + 1; m + 1 < static_cast<int>(p.size()); ++m)
            if (p[m] > p[m - 1] && p[m] > p[m + 1] && p[m] > 1e-6 * p[top]) ++maxima;
        missing.add(maxima >= 3 ? 0 : 1);
        if (i % 5 == 0) counts += (counts.empty() ? "" : ", ") + std::to_string(z).substr(0, 4) + ":" + std::to_string(maxima);
    }
    c.notes.push_back("maxima past the principal peak (zeta:count) " + counts);
    return c;
}

}  // namespace

int main() {
    Rng g(20240611);
    const auto t0 = Clock::now();
    const std::vector<std::function<Criterion()>> suite = {
        orthonormality,
        normalization_check,
        photon_distribution_check,
        [&] { return mean_photon_check(g); },
        [&] { return uncertainty_check(g); },
        [&] { return phase_space_check(g); },
        [&] { return polynomial_identities(g); },
        [&] { return hermite2_check(g); },
        oscillation_check,
    };
    int failures = 0;
    for (const auto& run : suite) {
        const auto s = Clock::now();
        Criterion c;
        try {
            c = run();
        } catch (const std::exception& e) {
            c.extra_ok = false;
            c.notes.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(Clock::now() - s).count();
        std::printf("%s  %-28s (%.2f s)\n", c.ok() ? "PASS" : "FAIL", c.name.c_str(), secs);
        for (const auto& k : c.checks)
            std::printf("        %-4s %-62s max %.3e  tol %.1e  n=%ld\n", k.ok() ? "ok" : "BAD", k.what.c_str(),
                        k.worst, k.tol, k.cases);
        for (const auto& note : c.notes) std::printf("        %s\n", note.c_str());
        failures += !c.ok();
    }
    const double total = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("%d of %zu criteria passed in %.1f s\n", static_cast<int>(suite.size()) - failures, suite.size(), total);
    return failures == 0 ? 0 : 1;
}
