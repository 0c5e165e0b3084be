#include "holext/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "holext/errors.hpp"
#include "holext/winding.hpp"

namespace holext {

namespace {

constexpr int kAberthIterations = 1000;
constexpr int kPolishSteps = 8;

double backward_residual(const ComplexPolynomial& p, cplx z) {
    double scale = 0.0;
    double zpow = 1.0;
    for (const cplx& a : p.coefficients()) {
        scale += std::abs(a) * zpow;
        zpow *= std::abs(z);
    }
    return scale == 0.0 ? 0.0 : std::abs(p(z)) / scale;
}

// p and p' together by Horner.
std::pair<cplx, cplx> eval_with_derivative(const ComplexPolynomial& p, cplx z) {
    cplx value{};
    cplx slope{};
    const auto c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        slope = slope * z + value;
        value = value * z + *it;
    }
    return {value, slope};
}

std::vector<cplx> aberth(const ComplexPolynomial& p) {
    const int d = p.degree();
    const auto c = p.coefficients();
    // Starting circle at the geometric mean of the root moduli.
    const double radius = std::pow(std::abs(c.front() / c.back()), 1.0 / d);
    std::vector<cplx> z(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        z[static_cast<std::size_t>(k)] = std::polar(radius, 2.0 * std::numbers::pi * k / d + 0.4);
    }
    std::vector<bool> done(z.size(), false);
    for (int iter = 0; iter < kAberthIterations; ++iter) {
        bool all_done = true;
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (done[i]) continue;
            const auto [value, slope] = eval_with_derivative(p, z[i]);
            if (value == cplx{}) {
                done[i] = true;
                continue;
            }
            cplx repulsion{};
            for (std::size_t j = 0; j < z.size(); ++j) {
                if (j != i && z[i] != z[j]) repulsion += 1.0 / (z[i] - z[j]);
            }
            cplx step;
            if (slope == cplx{}) {
                step = std::polar(1e-8 * std::max(1.0, std::abs(z[i])), 0.7);
            } else {
                const cplx ratio = value / slope;
                step = ratio / (1.0 - ratio * repulsion);
            }
            z[i] -= step;
            if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(z[i]), 1e-300)) {
                done[i] = true;
            } else {
                all_done = false;
            }
        }
        if (all_done) break;
    }
    return z;
}

void polish(const ComplexPolynomial& p, cplx& z) {
    double best = std::abs(p(z));
    for (int s = 0; s < kPolishSteps && best > 0.0; ++s) {
        const auto [value, slope] = eval_with_derivative(p, z);
        if (slope == cplx{}) return;
        const cplx candidate = z - value / slope;
        const double r = std::abs(p(candidate));
        if (!(r < best)) return;
        z = candidate;
        best = r;
    }
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

double uniform01(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

}  // namespace

RootSet roots(const ComplexPolynomial& p) {
    if (p.degree() < 1) throw Error(ErrorCode::InvalidArgument, "root finding needs degree >= 1");
    const auto c = p.coefficients();
    std::size_t zeros = 0;
    while (c[zeros] == cplx{}) ++zeros;
    const ComplexPolynomial reduced(std::vector<cplx>(c.begin() + static_cast<std::ptrdiff_t>(zeros), c.end()));

    RootSet out;
    out.roots.assign(zeros, cplx{});
    if (reduced.degree() >= 1) {
        std::vector<cplx> found = aberth(reduced);
        for (cplx& z : found) {
            polish(reduced, z);
            out.residual = std::max(out.residual, backward_residual(reduced, z));
        }
        out.roots.insert(out.roots.end(), found.begin(), found.end());
    }
    if (!(out.residual <= kRootResidualLimit)) {
        throw Error(ErrorCode::NoConvergence, "best residual " + std::to_string(out.residual));
    }
    return out;
}

namespace {

int count_inside(const ComplexPolynomial& p, const char* which) {
    if (p.degree() < 1) return 0;
    int inside = 0;
    for (const cplx& r : roots(p).roots) {
        const double m = std::abs(r);
        if (std::abs(m - 1.0) < kCircleExclusion) {
            throw Error(ErrorCode::RootNearCircle,
                        std::string(which) + " root of modulus " + std::to_string(m) + " is within 1e-6 of the circle");
        }
        if (m < 1.0 - kInsideMargin) ++inside;
    }
    return inside;
}

}  // namespace

int rational_winding(const RationalFunction& r) {
    if (r.numerator.is_zero() || r.denominator.is_zero()) {
        throw Error(ErrorCode::InvalidArgument, "rational function with a zero numerator or denominator");
    }
    return count_inside(r.numerator, "numerator") - count_inside(r.denominator, "denominator");
}

RationalFunction as_rational(const LaurentExpression& numerator, const LaurentExpression& denominator) {
    const int shift = std::max({0, -numerator.min_exponent(), -denominator.min_exponent()});
    const auto to_poly = [shift](const LaurentExpression& e) {
        std::vector<cplx> c(static_cast<std::size_t>(std::max(0, e.max_exponent() + shift) + 1));
        for (const auto& [m, v] : e.terms()) c[static_cast<std::size_t>(m + shift)] = v;
        return ComplexPolynomial(std::move(c));
    };
    return {to_poly(numerator), to_poly(denominator)};
}

LaurentExpression counterexample_family(int n) {
    return LaurentExpression::monomial(n) + LaurentExpression::monomial(-1, 0.5);
}

TrialRecord prop41_trial(int n0, int n, const ComplexPolynomial& p) {
    if (n0 < 0) throw Error(ErrorCode::InvalidArgument, "n0 must be nonnegative");
    if (n < n0 + 1) throw Error(ErrorCode::InvalidArgument, "requires n >= n0 + 1");
    if (p.degree() > n0) throw Error(ErrorCode::InvalidArgument, "deg P exceeds n0");

    TrialRecord rec;
    rec.p = p;
    // q(z) = z^(n+1) + z P(z) + 1/2
    const ComplexPolynomial q = ComplexPolynomial::monomial(n + 1) + ComplexPolynomial::monomial(1) * p +
                                ComplexPolynomial(std::vector<cplx>{0.5});

    RootSet rs;
    try {
        rs = roots(q);
    } catch (const Error& e) {
        rec.violations.emplace_back(e.what());
        return rec;
    }
    rec.residual = rs.residual;
    rec.root_product = 1.0;
    rec.min_root_modulus = INFINITY;
    for (const cplx& r : rs.roots) {
        rec.root_product *= std::abs(r);
        rec.min_root_modulus = std::min(rec.min_root_modulus, std::abs(r));
    }

    if (std::abs(rec.root_product - 0.5) > 1e-6 * 0.5) rec.violations.emplace_back("Vieta product differs from 1/2");
    const double bound = std::pow(0.5, 1.0 / (n + 1));
    if (rec.min_root_modulus > bound + 1e-9) rec.violations.emplace_back("no root within the Vieta bound");

    try {
        rec.oracle_winding = rational_winding({q, ComplexPolynomial::monomial(1)});
    } catch (const Error& e) {
        if (e.code() != ErrorCode::RootNearCircle) throw;
        rec.skipped = true;
        rec.skip_reason = e.what();
        return rec;
    }
    rec.inside = rec.oracle_winding + 1;
    if (rec.oracle_winding < 0) rec.violations.emplace_back("negative oracle winding");

    try {
        rec.numeric_winding = winding_of_sum(counterexample_family(n), p, 256).winding;
        if (*rec.numeric_winding != rec.oracle_winding) {
            rec.violations.emplace_back("numeric winding " + std::to_string(*rec.numeric_winding) +
                                        " disagrees with oracle " + std::to_string(rec.oracle_winding));
        }
    } catch (const Error& e) {
        // Unresolvable on the grid (root just outside the exclusion band):
        // the oracle value stands, the cross-check is absent.
        if (e.code() != ErrorCode::Unresolved && e.code() != ErrorCode::ZeroOnCurve) throw;
    }
    return rec;
}

const char* to_string(CoefficientSampler s) noexcept {
    return s == CoefficientSampler::Disc ? "disc" : "log_uniform";
}

std::uint64_t trial_seed(std::uint64_t campaign_seed, std::size_t trial) {
    return splitmix64(splitmix64(campaign_seed) ^ splitmix64(static_cast<std::uint64_t>(trial)));
}

ComplexPolynomial draw_trial_polynomial(const CampaignConfig& config, std::size_t trial) {
    std::mt19937_64 gen(trial_seed(config.seed, trial));
    const auto degree = static_cast<int>(gen() % static_cast<std::uint64_t>(config.n0 + 1));
    std::vector<cplx> c(static_cast<std::size_t>(degree) + 1);
    for (cplx& a : c) {
        double modulus = 0.0;
        if (config.sampler == CoefficientSampler::Disc) {
            modulus = config.radius * std::sqrt(uniform01(gen));
        } else {
            modulus = std::pow(10.0, -3.0 + 6.0 * uniform01(gen));
        }
        a = std::polar(modulus, 2.0 * std::numbers::pi * uniform01(gen));
    }
    return ComplexPolynomial(std::move(c));
}

CampaignReport prop41_campaign(const CampaignConfig& config) {
    if (config.trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");
    if (config.n0 < 0 || config.n < config.n0 + 1) {
        throw Error(ErrorCode::InvalidArgument, "requires n0 >= 0 and n >= n0 + 1");
    }
    if (!(config.radius > 0.0) || !std::isfinite(config.radius)) {
        throw Error(ErrorCode::InvalidArgument, "coefficient radius must be positive");
    }

    std::vector<TrialRecord> records(config.trials);
    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::min<std::size_t>(config.trials, 16));
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < config.trials; i += workers) {
                    const ComplexPolynomial p = draw_trial_polynomial(config, i);
                    try {
                        records[i] = prop41_trial(config.n0, config.n, p);
                    } catch (const std::exception& e) {
                        records[i] = TrialRecord{};
                        records[i].p = p;
                        records[i].violations.emplace_back(e.what());
                    }
                    records[i].index = i;
                }
            });
        }
    }

    CampaignReport report;
    report.config = config;
    report.bound = std::pow(0.5, 1.0 / (config.n + 1));
    double modulus_sum = 0.0;
    std::size_t counted = 0;
    for (const TrialRecord& rec : records) {
        ++report.completed;
        if (rec.skipped) {
            ++report.skipped;
            continue;
        }
        if (rec.root_product > 0.0) {
            ++report.winding_histogram[rec.oracle_winding];
            if (counted == 0) {
                report.min_root_modulus_min = report.min_root_modulus_max = rec.min_root_modulus;
            }
            report.min_root_modulus_min = std::min(report.min_root_modulus_min, rec.min_root_modulus);
            report.min_root_modulus_max = std::max(report.min_root_modulus_max, rec.min_root_modulus);
            modulus_sum += rec.min_root_modulus;
            ++counted;
            report.max_vieta_error = std::max(report.max_vieta_error, std::abs(rec.root_product - 0.5) / 0.5);
            report.max_residual = std::max(report.max_residual, rec.residual);
        }
        if (!rec.violations.empty()) {
            report.failures.push_back({rec.index, rec.p, rec.violations});
            const bool negative = rec.oracle_winding < 0 || (rec.numeric_winding && *rec.numeric_winding < 0);
            if (negative) {
                report.aborted = true;
                break;
            }
        }
    }
    report.min_root_modulus_mean = counted == 0 ? 0.0 : modulus_sum / static_cast<double>(counted);
    return report;
}

}  // namespace holext
