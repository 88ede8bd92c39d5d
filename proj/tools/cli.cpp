#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sqexc/errors.hpp"
#include "sqexc/oracle.hpp"
#include "sqexc/overlaps.hpp"
#include "sqexc/photonstats.hpp"
#include "sqexc/quasiprob.hpp"
#include "validate.hpp"

namespace sqexc::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr const char* kOutputDirVar = "SQEXC_OUTPUT_DIR";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool parse_real(std::string_view s, double& x) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    return ec == std::errc() && ptr == s.data() + s.size();
}

// Coefficient of an imaginary part: "", "+" and "-" stand for 1, 1 and -1.
bool parse_imag_coefficient(std::string_view s, double& x) {
    if (s.empty() || s == "+") return x = 1.0, true;
    if (s == "-") return x = -1.0, true;
    return parse_real(s, x);
}

// Flags describing one state; the same block is reused for the bra of an
// overlap under different names.
struct StateFlags {
    std::string beta = "0", zeta = "0";
    std::optional<double> zeta_abs, zeta_arg;
    int n = 0;
};

void add_state_flags(CLI::App* app, StateFlags& f, const std::string& b, const std::string& n, const std::string& z) {
    app->add_option("--" + b, f.beta, "displacement, a+bi")->capture_default_str();
    app->add_option("--" + n, f.n, "excitation number")->capture_default_str()->check(CLI::NonNegativeNumber);
    auto* zc = app->add_option("--" + z, f.zeta, "squeezing parameter, a+bi")->capture_default_str();
    auto* za = app->add_option("--" + z + "-abs", f.zeta_abs, "modulus of the squeezing parameter");
    auto* zp = app->add_option("--" + z + "-arg", f.zeta_arg, "phase of the squeezing parameter (radians)");
    zc->excludes(za)->excludes(zp);
}

cplx complex_flag(const std::string& name, const std::string& text) {
    const auto v = parse_complex(text);
    if (!v) throw UsageError("--" + name + ": cannot parse '" + text + "' as a complex number");
    return *v;
}

StateLabel resolve(const StateFlags& f, double hbar, const std::string& b, const std::string& z) {
    StateLabel s;
    s.beta = complex_flag(b, f.beta);
    s.n = f.n;
    s.hbar = hbar;
    if (f.zeta_abs || f.zeta_arg)
        s.zeta = std::polar(f.zeta_abs.value_or(0.0), f.zeta_arg.value_or(0.0));
    else
        s.zeta = complex_flag(z, f.zeta);
    return s;
}

std::pair<double, double> parse_range(const std::string& name, const std::string& text) {
    const auto colon = text.find(':');
    double a = 0, b = 0;
    if (colon == std::string::npos || !parse_real(std::string_view(text).substr(0, colon), a) ||
        !parse_real(std::string_view(text).substr(colon + 1), b))
        throw UsageError("--" + name + ": expected MIN:MAX, got '" + text + "'");
    return {a, b};
}

fs::path output_path(const std::string& prefix, const std::string& ext) {
    fs::path p(prefix + ext);
    if (p.is_relative()) {
        if (const char* dir = std::getenv(kOutputDirVar); dir && *dir) p = fs::path(dir) / p;
    }
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    return p;
}

void write_file(const fs::path& p, const std::string& body) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + p.string() + " for writing");
    f << body;
}

// Negative zero prints as "-0.0"; report it as 0.
double tidy(double x) { return x == 0.0 ? 0.0 : x; }

json complex_json(cplx z) { return {{"re", tidy(z.real())}, {"im", tidy(z.imag())}}; }

json label_json(const StateLabel& s) {
    return {{"beta", complex_json(s.beta)}, {"n", s.n}, {"zeta", complex_json(s.zeta)}, {"hbar", s.hbar}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int cmd_pdist(const StateLabel& s, const std::string& cutoff, const std::string& prefix, std::ostream& out) {
    PhotonDistribution d;
    if (cutoff == "auto") {
        d = photon_distribution_auto(s);
    } else {
        int m = -1;
        const auto [ptr, ec] = std::from_chars(cutoff.data(), cutoff.data() + cutoff.size(), m);
        if (ec != std::errc() || ptr != cutoff.data() + cutoff.size() || m < 0)
            throw UsageError("--cutoff: expected a nonnegative integer or 'auto'");
        d = photon_distribution(s, m);
    }
    std::string csv = "m,p_m\n";
    double sum = 0.0;
    for (std::size_t m = 0; m < d.probs.size(); ++m) {
        csv += std::to_string(m) + "," + format_number(d.probs[m]) + "\n";
        sum += d.probs[m];
    }
    const auto csv_path = output_path(prefix, ".csv");
    write_file(csv_path, csv);
    json params = label_json(s);
    params["cutoff"] = cutoff;
    const json manifest = {{"kind", "pdist"},
                           {"params", params},
                           {"cutoff", d.cutoff},
                           {"tail_mass", d.tail_mass},
                           {"sum", sum},
                           {"mean_photon", mean_photon(s)},
                           {"columns", {"m", "p_m"}},
                           {"csv", csv_path.filename().string()}};
    const auto body = dump(manifest);
    write_file(output_path(prefix, ".json"), body);
    out << body;
    return ok;
}

int cmd_grid(const StateLabel& s, const std::string& which, const PhaseGridSpec& spec, const std::string& prefix,
             std::ostream& out) {
    const auto kind = which == "wigner" ? Quasi::wigner : Quasi::husimi;
    const auto g = grid_eval(s, kind, spec);
    std::string csv = "q,p,value\n";
    for (int i = 0; i < spec.nq; ++i)
        for (int j = 0; j < spec.np; ++j)
            csv += format_number(spec.q(i)) + "," + format_number(spec.p(j)) + "," +
                   format_number(g.values[static_cast<std::size_t>(i) * spec.np + j]) + "\n";
    const auto csv_path = output_path(prefix, ".csv");
    write_file(csv_path, csv);
    const auto [lo, hi] = std::minmax_element(g.values.begin(), g.values.end());
    const json manifest = {
        {"kind", which},
        {"params", label_json(s)},
        {"grid",
         {{"q_min", spec.q_min}, {"q_max", spec.q_max}, {"p_min", spec.p_min}, {"p_max", spec.p_max},
          {"nq", spec.nq}, {"np", spec.np}}},
        {"ordering", "row-major: q outer, p inner"},
        {"measure", "dq dp"},
        {"min", *lo},
        {"max", *hi},
        {"columns", {"q", "p", "value"}},
        {"csv", csv_path.filename().string()}};
    const auto body = dump(manifest);
    write_file(output_path(prefix, ".json"), body);
    out << body;
    return ok;
}

int cmd_moments(const StateLabel& s, std::ostream& out) {
    const auto r = moments(s);
    const json j = {{"params", label_json(s)},        {"mean_a", complex_json(r.mean_a)},
                    {"mean_adag", complex_json(r.mean_adag)}, {"mean_a2", complex_json(r.mean_a2)},
                    {"mean_N", tidy(r.mean_N)},              {"varQ", tidy(r.varQ)},
                    {"varP", tidy(r.varP)},                  {"covQP_sym", tidy(r.covQP_sym)},
                    {"unc_sum", tidy(r.unc_sum)},            {"unc_prod", tidy(r.unc_prod)}};
    out << dump(j);
    return ok;
}

int cmd_overlap(const StateLabel& bra, const StateLabel& ket, bool with_oracle, std::ostream& out) {
    const cplx v = overlap(bra, ket);
    json j = {{"bra", label_json(bra)}, {"ket", label_json(ket)}, {"re", tidy(v.real())}, {"im", tidy(v.imag())},
              {"abs", std::abs(v)}};
    if (with_oracle) {
        const int dim = std::max(oracle::build_state_auto(bra).dim, oracle::build_state_auto(ket).dim);
        const auto o = oracle::oracle_overlap(oracle::build_state(bra, dim), oracle::build_state(ket, dim));
        j["oracle"] = complex_json({static_cast<double>(o.real()), static_cast<double>(o.imag())});
        j["oracle_dim"] = dim;
    }
    out << dump(j);
    return ok;
}

int cmd_validate(const std::string& suite, std::uint64_t seed, bool inject_fault, std::ostream& out) {
    const Suite which = suite == "identities" ? Suite::identities : suite == "oracle" ? Suite::oracle : Suite::all;
    const auto rep = run_validation(which, seed, inject_fault);
    json props = json::array();
    for (const auto& p : rep.properties)
        props.push_back({{"name", p.name},
                         {"max_error", p.max_error},
                         {"tolerance", p.tolerance},
                         {"cases", p.cases},
                         {"passed", p.passed}});
    const json j = {{"suite", suite},
                    {"seed", seed},
                    {"inject_fault", inject_fault},
                    {"passed", rep.passed()},
                    {"properties", props}};
    out << dump(j);
    return rep.passed() ? ok : validation_failed;
}

}  // namespace

std::optional<cplx> parse_complex(const std::string& text) {
    std::string_view s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) return std::nullopt;
    double re = 0, im = 0;
    if (s.back() != 'i' && s.back() != 'j') {
        if (!parse_real(s, re)) return std::nullopt;
        return cplx(re, 0.0);
    }
    s.remove_suffix(1);
    // split at the last sign that is not part of an exponent
    std::size_t cut = std::string_view::npos;
    for (std::size_t k = s.size(); k-- > 1;)
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            cut = k;
            break;
        }
    if (cut == std::string_view::npos) {
        if (!parse_imag_coefficient(s, im)) return std::nullopt;
        return cplx(0.0, im);
    }
    if (!parse_real(s.substr(0, cut), re) || !parse_imag_coefficient(s.substr(cut), im)) return std::nullopt;
    return cplx(re, im);
}

std::string format_number(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Closed-form numerics for excited squeezed states"};
    app.require_subcommand(1);
    double hbar = 1.0;
    app.add_option("--hbar", hbar, "action unit")->capture_default_str()->check(CLI::PositiveNumber);

    StateFlags ket;
    std::string prefix, cutoff = "auto";

    auto* pdist = app.add_subcommand("pdist", "photon-number distribution to CSV + JSON");
    add_state_flags(pdist, ket, "beta", "n", "zeta");
    pdist->add_option("--cutoff", cutoff, "largest photon number, or 'auto'")->capture_default_str();
    pdist->add_option("--out", prefix, "output prefix (PREFIX.csv, PREFIX.json)")->default_val("pdist");

    std::string which = "wigner", qrange = "-5:5", prange = "-5:5";
    PhaseGridSpec spec;
    auto* grid = app.add_subcommand("grid", "Wigner or Husimi function on a phase-space grid");
    grid->add_option("kind", which, "wigner or husimi")->required()->check(CLI::IsMember({"wigner", "husimi"}));
    add_state_flags(grid, ket, "beta", "n", "zeta");
    grid->add_option("--qrange", qrange, "MIN:MAX")->capture_default_str();
    grid->add_option("--prange", prange, "MIN:MAX")->capture_default_str();
    grid->add_option("--nq", spec.nq, "samples along q")->capture_default_str()->check(CLI::PositiveNumber);
    grid->add_option("--np", spec.np, "samples along p")->capture_default_str()->check(CLI::PositiveNumber);
    grid->add_option("--out", prefix, "output prefix (PREFIX.csv, PREFIX.json)")->default_val("grid");

    auto* mom = app.add_subcommand("moments", "expectation values and uncertainties as JSON");
    add_state_flags(mom, ket, "beta", "n", "zeta");

    StateFlags bra;
    bool with_oracle = false;
    auto* ov = app.add_subcommand("overlap", "scalar product <alpha, m; xi | beta, n; zeta>");
    add_state_flags(ov, bra, "alpha", "m", "xi");
    add_state_flags(ov, ket, "beta", "n", "zeta");
    ov->add_flag("--oracle", with_oracle, "also evaluate in the truncated Fock space");

    std::string suite = "all";
    std::uint64_t seed = 42;
    bool inject_fault = false;
    auto* val = app.add_subcommand("validate", "identity and oracle-equivalence checks");
    val->add_option("--suite", suite)->capture_default_str()->check(CLI::IsMember({"identities", "oracle", "all"}));
    val->add_option("--seed", seed)->capture_default_str();
    val->add_flag("--inject-fault", inject_fault, "negate one closed-form value (the suite must fail)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage;
    }

    try {
        if (*pdist) return cmd_pdist(resolve(ket, hbar, "beta", "zeta"), cutoff, prefix, out);
        if (*grid) {
            std::tie(spec.q_min, spec.q_max) = parse_range("qrange", qrange);
            std::tie(spec.p_min, spec.p_max) = parse_range("prange", prange);
            return cmd_grid(resolve(ket, hbar, "beta", "zeta"), which, spec, prefix, out);
        }
        if (*mom) return cmd_moments(resolve(ket, hbar, "beta", "zeta"), out);
        if (*ov) return cmd_overlap(resolve(bra, hbar, "alpha", "xi"), resolve(ket, hbar, "beta", "zeta"),
                                    with_oracle, out);
        if (*val) return cmd_validate(suite, seed, inject_fault, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return domain;
    } catch (const CutoffError& e) {
        err << "error: " << e.what() << " (try a larger --cutoff)\n";
        return domain;
    } catch (const ConsistencyError& e) {
        err << "error: " << e.what() << "\n";
        return domain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return validation_failed;
    }
    return usage;
}

}  // namespace sqexc::cli
