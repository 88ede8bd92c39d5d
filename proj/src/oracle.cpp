#include "sqexc/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "sqexc/errors.hpp"

namespace sqexc::oracle {

namespace {

using ld = long double;

constexpr int kStartDim = 256;
constexpr int kMaxDim = 4096;
constexpr ld kSeriesTail = 1e-12L;
constexpr ld kSelfConsistency = 1e-12L;
constexpr double kQuadratureAgreement = 1e-8;

lcplx widen(cplx z) { return {static_cast<ld>(z.real()), static_cast<ld>(z.imag())}; }

ld max_abs(const Vector& v, int end) {
    ld m = 0;
    for (int i = 0; i < end; ++i) m = std::max({m, std::abs(v[i].real()), std::abs(v[i].imag())});
    return m;
}

// One past the last entry above 1e-40 of the largest; entries beyond are
// zeroed so that later sweeps can stop there.
int support_end(Vector& v, int end = -1) {
    if (end < 0) end = static_cast<int>(v.size());
    const ld cut = 1e-40L * max_abs(v, end);
    int last = end;
    while (last > 0 && std::abs(v[last - 1].real()) <= cut && std::abs(v[last - 1].imag()) <= cut) --last;
    std::fill(v.begin() + last, v.begin() + end, lcplx(0));
    return last;
}

// Largest index carrying relative weight above 1e-32; the rest is ignored
// when reconstructing wavefunctions.
int effective_dim(const Vector& v) {
    const ld total = norm2(v);
    int last = 0;
    for (int m = 0; m < static_cast<int>(v.size()); ++m)
        if (std::norm(v[m]) > 1e-32L * total) last = m;
    return last + 1;
}

// Oscillator eigenfunctions phi_0..phi_{count-1} at position q.
void eigenfunctions(int count, ld q, ld hbar, std::vector<ld>& phi) {
    phi.assign(count, 0);
    const ld x = q / std::sqrt(hbar);
    phi[0] = std::pow(M_PIl * hbar, -0.25L) * std::exp(-x * x / 2);
    if (count > 1) phi[1] = std::sqrt(2.0L) * x * phi[0];
    for (int m = 1; m + 1 < count; ++m)
        phi[m + 1] = std::sqrt(2.0L / (m + 1)) * x * phi[m] - std::sqrt(static_cast<ld>(m) / (m + 1)) * phi[m - 1];
}

lcplx psi_at(const Vector& v, int count, ld q, ld hbar, std::vector<ld>& scratch) {
    eigenfunctions(count, q, hbar, scratch);
    lcplx sum = 0;
    for (int m = 0; m < count; ++m) sum += v[m] * scratch[m];
    return sum;
}

// Relative weight of the squeezed-vacuum series beyond Fock index dim.
ld squeezed_vacuum_tail(ld y, int dim) {
    if (y == 0) return 0;
    const ld total = 1 / std::sqrt(1 - y);
    ld r = 1, tail = 0;
    for (int m = 0;; ++m) {
        if (2 * m >= dim) {
            tail += r;
            if (r < 1e-30L * total) break;
        }
        r *= y * (2 * m + 1) / (2 * m + 2);
        if (r == 0) break;
    }
    return tail / total;
}

Vector padded(const Vector& v, int extra) {
    Vector w(v);
    w.resize(v.size() + extra);
    return w;
}

}  // namespace

TruncatedOperator TruncatedOperator::annihilation(int dim) {
    TruncatedOperator op{dim, Eigen::MatrixXcd::Zero(dim, dim)};
    for (int m = 1; m < dim; ++m) op.entries(m - 1, m) = std::sqrt(static_cast<double>(m));
    return op;
}

TruncatedOperator TruncatedOperator::creation(int dim) {
    auto op = annihilation(dim);
    op.entries.adjointInPlace();
    return op;
}

TruncatedOperator TruncatedOperator::number(int dim) {
    TruncatedOperator op{dim, Eigen::MatrixXcd::Zero(dim, dim)};
    for (int m = 0; m < dim; ++m) op.entries(m, m) = static_cast<double>(m);
    return op;
}

TruncatedOperator TruncatedOperator::operator*(const TruncatedOperator& o) const {
    if (dim != o.dim) throw DomainError("operator dimensions differ");
    return {dim, entries * o.entries};
}

TruncatedOperator TruncatedOperator::operator-(const TruncatedOperator& o) const {
    if (dim != o.dim) throw DomainError("operator dimensions differ");
    return {dim, entries - o.entries};
}

Vector apply_annihilation(const Vector& v) {
    Vector w(v.size());
    for (std::size_t m = 1; m < v.size(); ++m) w[m - 1] = std::sqrt(static_cast<ld>(m)) * v[m];
    return w;
}

Vector apply_creation(const Vector& v) {
    Vector w(v.size());
    for (std::size_t m = 0; m + 1 < v.size(); ++m) w[m + 1] = std::sqrt(static_cast<ld>(m + 1)) * v[m];
    return w;
}

Vector displace(const Vector& v, cplx beta) {
    if (beta == 0.0) return v;
    const int W = static_cast<int>(v.size());
    const ld bmag = std::abs(widen(beta));
    const lcplx unit = widen(beta) / bmag;
    std::vector<ld> root(W + 1);
    for (int m = 0; m <= W; ++m) root[m] = std::sqrt(static_cast<ld>(m));

    // Each step advances the generator by dt with |dt G| <= 2 on the
    // currently occupied block plus a margin for the growth within the step.
    Vector cur(v), term(W), next(W), acc(W);
    int top = support_end(cur);
    ld remaining = bmag;
    while (remaining > 0) {
        const ld dt = std::min(remaining, 1 / (std::sqrt(static_cast<ld>(std::min(W, top + 64)))));
        remaining -= dt;
        const ld br = unit.real() * dt, bi = unit.imag() * dt;
        term = cur;
        acc = cur;
        int t_top = top;
        for (int k = 1; k < 200; ++k) {
            const int hi = std::min(W, t_top + 1);
            const ld inv_k = 1 / static_cast<ld>(k);
            // (b a+ - b* a) term, written out in real arithmetic
            for (int m = 0; m < hi; ++m) {
                ld ur = 0, ui = 0, dr = 0, di = 0;
                if (m > 0) ur = root[m] * term[m - 1].real(), ui = root[m] * term[m - 1].imag();
                if (m + 1 < W) dr = root[m + 1] * term[m + 1].real(), di = root[m + 1] * term[m + 1].imag();
                next[m] = {(br * (ur - dr) - bi * (ui + di)) * inv_k, (br * (ui - di) + bi * (ur + dr)) * inv_k};
            }
            t_top = hi;
            term.swap(next);
            for (int m = 0; m < t_top; ++m) acc[m] += term[m];
            if (max_abs(term, t_top) < 1e-22L * max_abs(acc, t_top)) break;
        }
        cur.swap(acc);
        top = support_end(cur, std::max(top, t_top));
    }
    return cur;
}

long double norm2(const Vector& v) {
    ld s = 0;
    for (const auto& x : v) s += std::norm(x);
    return s;
}

lcplx inner(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DomainError("oracle vectors have different dimensions");
    lcplx s = 0;
    for (std::size_t m = 0; m < a.size(); ++m) s += std::conj(a[m]) * b[m];
    return s;
}

OracleState build_state(const StateLabel& s, int dim) {
    check_normalizable(s);
    if (dim < 2) throw DomainError("oracle dimension must be at least 2");
    const ld y = std::norm(widen(s.zeta));
    if (squeezed_vacuum_tail(y, dim) > kSeriesTail)
        throw CutoffError("oracle dimension " + std::to_string(dim) + " too small for the squeezed-vacuum series");

    const int W = 2 * dim;
    Vector v(W);
    const lcplx mz = -widen(s.zeta);
    lcplx c = std::pow(1 + y, 0.25L);
    for (int m = 0; 2 * m < W; ++m) {
        v[2 * m] = c;
        c *= mz * std::sqrt(static_cast<ld>(2 * m + 1) / (2 * m + 2));
    }

    const lcplx zc = std::conj(widen(s.zeta));
    const ld scale = std::sqrt(1 + y);
    for (int k = 0; k < s.n; ++k) {
        const Vector up = apply_creation(v), down = apply_annihilation(v);
        const ld f = scale * std::sqrt(static_cast<ld>(k + 1));
        for (int m = 0; m < W; ++m) v[m] = (up[m] - zc * down[m]) / f;
    }

    v = displace(v, s.beta);

    OracleState out;
    out.dim = dim;
    ld tail = 0;
    for (int m = dim; m < W; ++m) tail += std::norm(v[m]);
    out.tail_estimate = tail / norm2(v);
    v.resize(dim);
    out.amplitudes = std::move(v);
    return out;
}

OracleState build_state_auto(const StateLabel& s) {
    check_normalizable(s);
    for (int dim = kStartDim; 2 * dim <= kMaxDim; dim *= 2) {
        OracleState a, b;
        try {
            a = build_state(s, dim);
            b = build_state(s, 2 * dim);
        } catch (const CutoffError&) {
            continue;
        }
        ld diff = 0;
        for (int m = 0; m < dim; ++m) diff = std::max(diff, std::abs(a.amplitudes[m] - b.amplitudes[m]));
        const ld tail_weight = a.tail_estimate * (norm2(a.amplitudes) / (1 - a.tail_estimate));
        if (diff <= kSelfConsistency && tail_weight <= kSelfConsistency * kSelfConsistency) return a;
    }
    throw CutoffError("oracle did not reach self-consistency below dimension " + std::to_string(kMaxDim));
}

lcplx oracle_overlap(const OracleState& a, const OracleState& b) {
    if (a.dim != b.dim) throw DomainError("oracle states have different dimensions");
    return inner(a.amplitudes, b.amplitudes);
}

lcplx oracle_moment(const OracleState& s, int k, int l, Ordering ord) {
    if (k < 0 || l < 0) throw DomainError("moment orders must be nonnegative");
    if (4 * (k + l) > s.dim) throw DomainError("moment order too high for the oracle dimension");
    Vector x = padded(s.amplitudes, k + l), w = x;
    if (ord == Ordering::normal) {
        for (int i = 0; i < k; ++i) x = apply_annihilation(x);
        for (int i = 0; i < l; ++i) w = apply_annihilation(w);
    } else {
        for (int i = 0; i < l; ++i) x = apply_creation(x);
        for (int i = 0; i < k; ++i) w = apply_creation(w);
    }
    return inner(w, x) / norm2(s.amplitudes);
}

MomentReport oracle_moments(const OracleState& s, double hbar) {
    if (!(hbar > 0)) throw DomainError("hbar must be positive");
    const ld hb = hbar;
    const ld n2 = norm2(s.amplitudes);
    const Vector v = padded(s.amplitudes, 2);
    const Vector av = apply_annihilation(v), cv = apply_creation(v);
    const ld r = std::sqrt(hb / 2);
    Vector Q(v.size()), P(v.size());
    for (std::size_t m = 0; m < v.size(); ++m) {
        Q[m] = r * (av[m] + cv[m]);
        P[m] = lcplx(0, -1) * r * (av[m] - cv[m]);
    }
    const lcplx a1 = oracle_moment(s, 1, 0, Ordering::normal);
    const ld meanQ = std::sqrt(2 * hb) * a1.real(), meanP = std::sqrt(2 * hb) * a1.imag();

    MomentReport rep;
    const cplx a1d(static_cast<double>(a1.real()), static_cast<double>(a1.imag()));
    const lcplx a2 = oracle_moment(s, 2, 0, Ordering::normal);
    rep.mean_a = a1d;
    rep.mean_adag = std::conj(a1d);
    rep.mean_a2 = cplx(static_cast<double>(a2.real()), static_cast<double>(a2.imag()));
    rep.mean_N = static_cast<double>(oracle_moment(s, 1, 1, Ordering::normal).real());
    const ld varQ = norm2(Q) / n2 - meanQ * meanQ;
    const ld varP = norm2(P) / n2 - meanP * meanP;
    rep.varQ = static_cast<double>(varQ);
    rep.varP = static_cast<double>(varP);
    rep.covQP_sym = static_cast<double>(2 * inner(Q, P).real() / n2 - 2 * meanQ * meanP);
    rep.unc_sum = static_cast<double>(varQ + varP);
    rep.unc_prod = static_cast<double>(varQ * varP);
    return rep;
}

lcplx oracle_psi(const OracleState& s, double q, double hbar) {
    if (!(hbar > 0)) throw DomainError("hbar must be positive");
    std::vector<ld> scratch;
    return psi_at(s.amplitudes, effective_dim(s.amplitudes), q, hbar, scratch);
}

double oracle_wigner(const OracleState& s, double q, double p, double hbar) {
    if (!(hbar > 0)) throw DomainError("hbar must be positive");
    const ld hb = hbar;
    const int count = effective_dim(s.amplitudes);
    const ld rh = std::sqrt(hb);
    const ld reach = std::sqrt(2.0L * count + 1);
    const ld freq = reach / rh + std::abs(static_cast<ld>(p)) / hb;
    const ld h = std::min(M_PIl / (6 * freq), 0.05L * rh);
    const ld L = rh * (reach + 10) + std::abs(static_cast<ld>(q));
    const int K = static_cast<int>(std::ceil(L / h));

    std::vector<ld> scratch;
    lcplx fine = 0, coarse = 0;
    for (int k = -K; k <= K; ++k) {
        const ld sft = k * h;
        const lcplx term = std::polar(1.0L, 2 * p * sft / hb) * psi_at(s.amplitudes, count, q - sft, hb, scratch) *
                           std::conj(psi_at(s.amplitudes, count, q + sft, hb, scratch));
        fine += term;
        if (k % 2 == 0) coarse += term;
    }
    const ld norm = norm2(s.amplitudes) * M_PIl * hb;
    const ld wf = (h * fine.real()) / norm, wc = (2 * h * coarse.real()) / norm;
    if (std::abs(wf - wc) > kQuadratureAgreement)
        throw ConsistencyError("oracle Wigner quadrature did not converge");
    return static_cast<double>(wf);
}

lcplx oracle_coherent_overlap(const OracleState& s, cplx alpha) {
    const lcplx ac = std::conj(widen(alpha));
    lcplx c = std::exp(-std::norm(widen(alpha)) / 2), sum = 0;
    for (int m = 0; m < s.dim; ++m) {
        sum += c * s.amplitudes[m];
        c *= ac / std::sqrt(static_cast<ld>(m + 1));
    }
    return sum;
}

double oracle_husimi(const OracleState& s, double q, double p, double hbar) {
    if (!(hbar > 0)) throw DomainError("hbar must be positive");
    const cplx alpha = cplx(q, p) / std::sqrt(2.0 * hbar);
    const ld v = std::norm(oracle_coherent_overlap(s, alpha)) / (M_PIl * norm2(s.amplitudes));
    return static_cast<double>(v / (2 * hbar));
}

}  // namespace sqexc::oracle
