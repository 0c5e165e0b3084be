// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Usage: holext_acceptance <path-to-holext-cli>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "holext/errors.hpp"
#include "holext/extend_test.hpp"
#include "holext/oracle.hpp"
#include "holext/winding.hpp"
#include "holext/witness.hpp"
#include "test_support.hpp"

using namespace holext;
using holext::testing::random_complex;
using holext::testing::random_laurent;
using holext::testing::random_point_off_circle;

namespace {

// Pinned tolerances.
constexpr double kWorstMomentTol = 1e-9;
constexpr double kVietaRelTol = 1e-6;
constexpr double kModulusBoundSlack = 1e-9;
constexpr double kCauchyPolyTol = 1e-9;
constexpr double kCauchyConjTol = 1e-9;
constexpr double kReLo = 0.55;
constexpr double kReHi = 1.45;

constexpr double kLimitWinding = 1.0;
constexpr double kLimitRational = 30.0;
constexpr double kLimitCampaigns = 120.0;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

// Every verdict computed anywhere in the suite, for the concordance check.
std::vector<Verdict> g_verdicts;

Verdict recorded_verdict(const BoundarySamples& f) {
    g_verdicts.push_back(verdict(f));
    return g_verdicts.back();
}

WindingResult exact_winding(const std::function<cplx(cplx)>& fn, std::size_t n_start = 256) {
    return winding_with_refinement([&](std::size_t n) { return sample(fn, n); }, n_start);
}

Outcome winding_exactness() {
    Outcome o;
    for (int k = -8; k <= 8; ++k) {
        const WindingResult r = change_of_argument(sample(LaurentExpression::monomial(k), 256));
        if (r.winding != k) o.fail("z^" + std::to_string(k) + " gave " + std::to_string(r.winding));
    }
    return o;
}

Outcome argument_principle() {
    Outcome o;
    std::mt19937_64 gen(20240601);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<cplx> zeros(std::uniform_int_distribution<int>(0, 8)(gen));
        std::vector<cplx> poles(std::uniform_int_distribution<int>(0, 8)(gen));
        int expected = 0;
        for (cplx& a : zeros) {
            a = random_point_off_circle(gen, 0.02);
            if (std::abs(a) < 1.0) ++expected;
        }
        for (cplx& b : poles) {
            b = random_point_off_circle(gen, 0.02);
            if (std::abs(b) < 1.0) --expected;
        }
        const cplx lead = std::polar(holext::testing::uniform(gen, 0.5, 2.0), holext::testing::uniform(gen, 0.0, 6.28));
        const RationalFunction r{ComplexPolynomial::from_roots(zeros, lead), ComplexPolynomial::from_roots(poles)};

        const int numeric = exact_winding([&](cplx z) { return r(z); }).winding;
        const int oracle = rational_winding(r);
        if (numeric != expected || oracle != expected) {
            o.fail("trial " + std::to_string(trial) + ": numeric " + std::to_string(numeric) + ", oracle " +
                   std::to_string(oracle) + ", constructed " + std::to_string(expected));
        }
    }
    return o;
}

// Re(z (f/c - P - Q)) on the grid, with f/c - P - Q = (f + W)/c.
std::pair<double, double> grid_real_range(const BoundarySamples& f, const WitnessCertificate& cert) {
    const std::vector<cplx> w = cert.witness.on_grid(f.size());
    double lo = INFINITY;
    double hi = -INFINITY;
    for (std::size_t j = 0; j < f.size(); ++j) {
        const double re = (f.node(j) * (f[j] + w[j]) / cert.trace.normalizer).real();
        lo = std::min(lo, re);
        hi = std::max(hi, re);
    }
    return {lo, hi};
}

Outcome direct_certificates() {
    Outcome o;
    std::vector<LaurentExpression> cases{
        LaurentExpression::monomial(-1),
        LaurentExpression::monomial(3) + LaurentExpression::monomial(-1, 0.5),
    };
    std::mt19937_64 gen(777);
    while (cases.size() < 24) {
        LaurentExpression e = random_laurent(gen, -6, 10, 5);
        e += LaurentExpression::monomial(-1, random_complex(gen, 1.5));
        cases.push_back(e);
    }
    int qualifying = 0;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const LaurentExpression& e = cases[i];
        const BoundarySamples f = sample(e, 1024);
        (void)recorded_verdict(f);
        if (!(std::abs(e.coefficient(-1)) > 1e-6 * f.rms())) continue;
        ++qualifying;
        try {
            const WitnessCertificate cert = construct_direct(f);
            const int w = winding_of_sum(e, cert.witness).winding;
            const auto [lo, hi] = grid_real_range(f, cert);
            if (cert.winding != -1 || w != -1) o.fail("case " + std::to_string(i) + " winding " + std::to_string(w));
            if (lo < kReLo || hi > kReHi) {
                o.fail("case " + std::to_string(i) + " real part range [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
            }
        } catch (const Error& err) {
            o.fail("case " + std::to_string(i) + ": " + err.what());
        }
    }
    if (qualifying < 20) o.fail("only " + std::to_string(qualifying) + " qualifying functions");
    o.detail = o.pass ? std::to_string(qualifying) + " functions" : o.detail;
    return o;
}

Outcome pole_lift() {
    Outcome o;
    std::vector<LaurentExpression> cases{
        LaurentExpression::monomial(-2),
        LaurentExpression::monomial(-5) + LaurentExpression::monomial(2),
        LaurentExpression::monomial(-3, 2.0) - LaurentExpression::monomial(4, cplx{0.0, 1.0}),
    };
    std::mt19937_64 gen(31337);
    while (cases.size() < 24) {
        LaurentExpression e = random_laurent(gen, 0, 8, 3);
        const int m = std::uniform_int_distribution<int>(2, 8)(gen);
        e += LaurentExpression::monomial(-m, random_complex(gen, 1.0) + 0.3);
        e += random_laurent(gen, -8, -2, 2);
        cases.push_back(e);
    }
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const LaurentExpression& e = cases[i];
        const BoundarySamples f = sample(e, 1024);
        (void)recorded_verdict(f);
        const std::string tag = "case " + std::to_string(i);
        try {
            const LiftDetail d = construct_lifted_detail(f, kDefaultTolerance);
            const WitnessCertificate& cert = d.certificate;
            const cplx w = cert.pole;
            const int lifted = exact_winding([&](cplx z) { return e(z) + cert.witness(z); }).winding;
            const int divided = exact_winding([&](cplx z) { return e(z) / (z - w) + d.lifted_from(z); }).winding;
            if (cert.winding > -1 || lifted > -1) o.fail(tag + " winding " + std::to_string(lifted));
            if (lifted != divided) {
                o.fail(tag + ": lifted " + std::to_string(lifted) + " vs divided " + std::to_string(divided));
            }
        } catch (const Error& err) {
            o.fail(tag + ": " + err.what());
        }
    }
    if (o.pass) o.detail = std::to_string(cases.size()) + " functions";
    return o;
}

Outcome worked_example() {
    Outcome o;
    const LaurentExpression e = LaurentExpression::monomial(3) + LaurentExpression::monomial(-1, 0.5);
    const BoundarySamples f = sample(e, 1024);
    const PipelineResult r = pipeline(f);
    g_verdicts.push_back(r.verdict);
    if (r.verdict.status != Status::NotExtendible) o.fail(std::string("status ") + to_string(r.verdict.status));
    if (r.verdict.worst_moment.n != 0 || std::abs(r.verdict.worst_moment.modulus - 0.5) > kWorstMomentTol) {
        o.fail("worst moment (" + std::to_string(r.verdict.worst_moment.n) + ", " +
               std::to_string(r.verdict.worst_moment.modulus) + ")");
    }
    if (!r.certificate || r.certificate->winding != -1) o.fail("no certificate of winding -1");
    if (winding_of_sum(e, ComplexPolynomial::monomial(3, -1.0)).winding != -1) o.fail("W = -z^3 did not verify");
    return o;
}

Outcome campaigns() {
    Outcome o;
    const std::pair<int, int> shapes[] = {{0, 1}, {1, 2}, {2, 3}, {3, 5}};
    std::size_t completed = 0;
    for (const auto& [n0, n] : shapes) {
        const CampaignReport rep = prop41_campaign({n0, n, 1000, 42, 5.0, CoefficientSampler::Disc});
        const std::string tag = "(" + std::to_string(n0) + ", " + std::to_string(n) + ")";
        completed += rep.completed;
        if (rep.aborted || !rep.failures.empty()) o.fail(tag + " has failures");
        if (rep.completed + rep.skipped != 1000) o.fail(tag + " trial count");
        for (const auto& [w, count] : rep.winding_histogram) {
            if (w < 0 && count > 0) o.fail(tag + " negative winding");
        }
        if (rep.max_vieta_error > kVietaRelTol) o.fail(tag + " Vieta error " + std::to_string(rep.max_vieta_error));
        const double bound = std::pow(0.5, 1.0 / (n + 1));
        if (rep.min_root_modulus_max > bound + kModulusBoundSlack) o.fail(tag + " root modulus above bound");
    }
    if (o.pass) o.detail = std::to_string(completed) + " trials completed";
    return o;
}

Outcome cauchy_sanity() {
    Outcome o;
    std::mt19937_64 gen(1234);
    for (int trial = 0; trial < 20; ++trial) {
        const int degree = std::uniform_int_distribution<int>(0, 10)(gen);
        std::vector<cplx> c(static_cast<std::size_t>(degree) + 1);
        for (cplx& a : c) a = random_complex(gen, 2.0);
        c.back() += 0.5;
        const BoundarySamples f = sample(LaurentExpression(ComplexPolynomial(c)), 1024);
        (void)recorded_verdict(f);
        const FourierCoefficients coeffs = dft(f);
        for (const cplx& w : default_w_grid()) {
            const double g = std::abs(cauchy_outside(f, coeffs, w));
            if (g > kCauchyPolyTol * f.rms()) o.fail("trial " + std::to_string(trial) + " |G| = " + std::to_string(g));
        }
    }
    const BoundarySamples conj_z = sample([](cplx z) { return std::conj(z); }, 1024);
    (void)recorded_verdict(conj_z);
    const cplx g2 = cauchy_outside(conj_z, 2.0);
    if (std::abs(g2 + 0.5) > kCauchyConjTol) o.fail("G(2) for conj(z) = " + std::to_string(g2.real()));
    return o;
}

// Pass / Fail classification redone here from the reported magnitudes.
Outcome concordance() {
    Outcome o;
    std::size_t index = 0;
    for (const Verdict& v : g_verdicts) {
        const double pass_at = v.tol * v.norm;
        const double values[] = {v.negative_energy, v.worst_moment.modulus, v.worst_cauchy.modulus};
        bool any_pass = false;
        bool any_fail = false;
        for (double x : values) {
            any_pass = any_pass || x <= pass_at;
            any_fail = any_fail || x > 10.0 * pass_at;
        }
        if ((any_pass && any_fail) || !v.concordant) o.fail("verdict " + std::to_string(index) + " discordant");
        ++index;
    }
    if (o.pass) o.detail = std::to_string(g_verdicts.size()) + " verdicts";
    return o;
}

Outcome determinism(const std::string& cli) {
    Outcome o;
    if (cli.empty()) {
        o.fail("CLI path not given");
        return o;
    }
    const auto dir = std::filesystem::temp_directory_path();
    const std::string family = (dir / "holext_acceptance_family.json").string();
    const std::string scalar = (dir / "holext_acceptance_conj.json").string();
    const std::string setup[] = {
        cli + " synth 'z^3 + 0.5*z^-1' --n 1024 --out " + family,
        cli + " synth 'z^-2 + z^3' --n 1024 --out " + scalar,
    };
    for (const std::string& cmd : setup) {
        if (holext::testing::run_command(cmd).exit_code != 0) o.fail("setup failed: " + cmd);
    }
    const std::string commands[] = {
        cli + " synth '(z-0.5)/(z-3)' --n 64",
        cli + " analyze " + family,
        cli + " witness " + family,
        cli + " witness " + scalar,
        cli + " prop41 2 3 --trials 300 --seed 9",
        cli + " prop41 3 5 --trials 300 --seed 9 --sampler log_uniform",
        cli + " oracle '(z^2-0.25)/(z-3)'",
    };
    for (const std::string& cmd : commands) {
        const auto a = holext::testing::run_command(cmd);
        const auto b = holext::testing::run_command(cmd);
        if (a.out.empty() || a.out != b.out || a.exit_code != b.exit_code) o.fail("output differs: " + cmd);
    }
    if (o.pass) o.detail = std::to_string(std::size(commands)) + " commands";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    struct Criterion {
        int id;
        const char* name;
        double limit_seconds;  // 0 means untimed
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "winding of z^k is exact for k in [-8, 8]", kLimitWinding, winding_exactness},
        {2, "numeric winding matches zero and pole count", kLimitRational, argument_principle},
        {3, "direct certificates", 0.0, direct_certificates},
        {4, "pole lift certificates", 0.0, pole_lift},
        {5, "z^3 + 1/(2z) example", 0.0, worked_example},
        {6, "counterexample campaigns", kLimitCampaigns, campaigns},
        {7, "Cauchy transform sanity", 0.0, cauchy_sanity},
        {8, "criterion concordance", 0.0, concordance},
        {9, "CLI determinism", 0.0, [&cli] { return determinism(cli); }},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0.0 && secs >= c.limit_seconds) {
            o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s");
        }
        if (!o.pass) ++failed;
        std::printf("[%s] %d %s (%.3f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                    o.detail.empty() ? "" : ": ", o.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
