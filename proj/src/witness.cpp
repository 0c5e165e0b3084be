#include "holext/witness.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>
#include <vector>

#include "holext/errors.hpp"

namespace holext {

namespace {

constexpr double kReLower = 1.0 - kTailBudget;
constexpr double kReUpper = 1.0 + kTailBudget;

struct Split {
    ComplexPolynomial p;
    ComplexPolynomial q;
    int truncation = 0;
    double tail = 0.0;
    double re_min = 0.0;
    double re_max = 0.0;
};

// Range of Re(z (f/c - P - Q)) over the sample grid.
std::pair<double, double> real_part_range(const BoundarySamples& f, cplx c, const ComplexPolynomial& p,
                                          const ComplexPolynomial& q) {
    const std::vector<cplx> pv = p.on_grid(f.size());
    const std::vector<cplx> qv = q.on_grid(f.size());
    double lo = INFINITY;
    double hi = -INFINITY;
    for (std::size_t j = 0; j < f.size(); ++j) {
        const double re = (f.node(j) * (f[j] / c - pv[j] - qv[j])).real();
        lo = std::min(lo, re);
        hi = std::max(hi, re);
    }
    return {lo, hi};
}

// Splits z f / c - 1 into z P + conj(z Q) + g with an l1-bounded remainder g.
// The coefficients of z f / c are those of f shifted by one, which keeps the
// split exact for the band-limited interpolant, not only on the grid.
Split split_normalized(const BoundarySamples& f, const FourierCoefficients& coeffs, cplx c) {
    const long long half = static_cast<long long>(f.size() / 2);
    const auto h = [&](long long k) {
        cplx v = coeffs.at(k - 1) / c;
        if (k == 0) v -= 1.0;
        return v;
    };

    // tail(M) = |h_0| + sum_{0 < |k|, |k| > M} |h_k| over k in [-half + 1, half].
    double tail = 0.0;
    for (long long k = -half + 1; k <= half; ++k) tail += std::abs(h(k));
    long long m = 0;
    while (tail > kTailBudget && m < half) {
        ++m;
        tail -= std::abs(h(m));
        if (-m >= -half + 1) tail -= std::abs(h(-m));
    }
    if (tail > kTailBudget) {
        throw Error(ErrorCode::TailNotBounded, "remainder l1 norm " + std::to_string(tail) + " exceeds 0.45");
    }

    for (; m <= half; ++m) {
        std::vector<cplx> pc(static_cast<std::size_t>(m));
        std::vector<cplx> qc(static_cast<std::size_t>(m));
        for (long long k = 1; k <= m; ++k) {
            pc[static_cast<std::size_t>(k - 1)] = h(k);
            if (-k >= -half + 1) qc[static_cast<std::size_t>(k - 1)] = std::conj(h(-k));
        }
        Split s{ComplexPolynomial(std::move(pc)), ComplexPolynomial(std::move(qc)), static_cast<int>(m), tail};
        std::tie(s.re_min, s.re_max) = real_part_range(f, c, s.p, s.q);
        if (s.re_min >= kReLower && s.re_max <= kReUpper) return s;
        // Rounding pushed a grid value over the edge; take one more term.
        if (m < half) {
            tail -= std::abs(h(m + 1));
            if (-(m + 1) >= -half + 1) tail -= std::abs(h(-(m + 1)));
        }
    }
    throw Error(ErrorCode::TailNotBounded, "grid real part left [0.55, 1.45] at full band");
}

}  // namespace

WitnessCertificate construct_direct(const BoundarySamples& f) {
    const FourierCoefficients coeffs = dft(f);
    const cplx c = moment(f, coeffs, 0);
    const double norm = f.rms();
    if (!(std::abs(c) > kNormalizerFloor * norm)) {
        throw Error(ErrorCode::AverageTooSmall,
                    "|(1/2 pi i) int f dz| = " + std::to_string(std::abs(c)) + " against ||f|| = " + std::to_string(norm));
    }

    const Split split = split_normalized(f, coeffs, c);

    WitnessCertificate cert;
    cert.witness = (split.p + split.q) * (-c);
    cert.route = Route::Direct;
    cert.trace = {c, split.truncation, split.tail, f.size(), split.re_min, split.re_max};

    const WindingResult check = winding_of_sum(f, cert.witness);
    if (check.winding != -1) {
        throw Error(ErrorCode::VerificationFailed,
                    "direct witness re-verified with winding " + std::to_string(check.winding));
    }
    cert.winding = check.winding;
    return cert;
}

LiftDetail construct_lifted_detail(const BoundarySamples& f, double tol) {
    const Verdict v = verdict(f, tol);
    if (v.status != Status::NotExtendible) {
        throw Error(ErrorCode::NotApplicable, std::string("lift requires NotExtendible input, verdict was ") +
                                                  to_string(v.status));
    }

    const FourierCoefficients coeffs = dft(f);
    const auto& grid = default_w_grid();
    std::size_t best = 0;
    double best_modulus = -1.0;
    cplx best_value{};
    // Grid order is radius-major then angle, so the first maximum wins ties;
    // values within 1e-12 relative count as tied.
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const cplx g = cauchy_outside(f, coeffs, grid[i]);
        if (std::abs(g) > best_modulus * (1.0 + 1e-12)) {
            best = i;
            best_modulus = std::abs(g);
            best_value = g;
        }
    }
    if (!(best_modulus > kNormalizerFloor * f.rms())) {
        throw Error(ErrorCode::NoUsablePole, "max |G(w)| on the grid is " + std::to_string(best_modulus));
    }
    const cplx w = grid[best];

    std::vector<cplx> divided(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) divided[j] = f[j] / (f.node(j) - w);
    BoundarySamples g(std::move(divided));

    const WitnessCertificate inner = construct_direct(g);
    const ComplexPolynomial linear(std::vector<cplx>{-w, 1.0});

    LiftDetail out{{}, inner.witness, std::move(g)};
    WitnessCertificate& cert = out.certificate;
    cert.witness = linear * inner.witness;
    cert.route = Route::PoleLift;
    cert.pole = w;
    cert.trace = inner.trace;
    cert.trace.normalizer = best_value;

    const WindingResult check = winding_of_sum(f, cert.witness);
    if (check.winding > -1) {
        throw Error(ErrorCode::VerificationFailed,
                    "lifted witness re-verified with winding " + std::to_string(check.winding));
    }
    cert.winding = check.winding;
    return out;
}

WitnessCertificate construct_lifted(const BoundarySamples& f, double tol) {
    return construct_lifted_detail(f, tol).certificate;
}

PipelineResult pipeline(const BoundarySamples& f, double tol) {
    PipelineResult result{verdict(f, tol), std::nullopt, std::nullopt};
    if (result.verdict.status != Status::NotExtendible) return result;

    std::string reasons;
    try {
        result.certificate = construct_direct(f);
        return result;
    } catch (const Error& e) {
        reasons = std::string("direct: ") + e.what();
    }
    try {
        result.certificate = construct_lifted(f, tol);
        return result;
    } catch (const Error& e) {
        reasons += std::string("; pole_lift: ") + e.what();
    }
    result.failure = std::move(reasons);
    return result;
}

}  // namespace holext
