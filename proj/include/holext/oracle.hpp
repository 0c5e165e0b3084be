#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "holext/boundary_fn.hpp"

namespace holext {

/// Roots closer than this to |z| = 1 make the argument principle unusable.
inline constexpr double kCircleExclusion = 1e-6;
/// A root counts as inside the disc when |r| < 1 - kInsideMargin.
inline constexpr double kInsideMargin = 1e-9;
inline constexpr double kRootResidualLimit = 1e-8;

struct RationalFunction {
    ComplexPolynomial numerator;
    ComplexPolynomial denominator{std::vector<cplx>{1.0}};

    [[nodiscard]] cplx operator()(cplx z) const { return numerator(z) / denominator(z); }
};

struct RootSet {
    std::vector<cplx> roots;
    /// max_i |p(r_i)| / sum_k |a_k| |r_i|^k, a backward-error style residual.
    double residual = 0.0;
};

/// All roots by Aberth-Ehrlich simultaneous iteration from a fixed starting
/// circle, followed by Newton polishing. Throws NoConvergence if the residual
/// stays above 1e-8.
[[nodiscard]] RootSet roots(const ComplexPolynomial& p);

/// (#zeros in the disc) - (#poles in the disc), multiplicities counted.
/// Throws RootNearCircle for any root within 1e-6 of the circle.
[[nodiscard]] int rational_winding(const RationalFunction& r);

/// Rational function equal to expr on the circle (multiplied through by z^s).
[[nodiscard]] RationalFunction as_rational(const LaurentExpression& numerator,
                                           const LaurentExpression& denominator = LaurentExpression(1.0));

// ---------------------------------------------------------------------------
// Counterexample family f = z^n + 1/(2z): f + P has the zeros of
// q(z) = z^(n+1) + z P(z) + 1/2.

/// f = z^n + (1/2) z^-1.
[[nodiscard]] LaurentExpression counterexample_family(int n);

struct TrialRecord {
    std::size_t index = 0;
    ComplexPolynomial p;
    bool skipped = false;
    std::string skip_reason;
    int inside = 0;  // zeros of q in the disc
    int oracle_winding = 0;
    std::optional<int> numeric_winding;
    double root_product = 0.0;
    double min_root_modulus = 0.0;
    double residual = 0.0;
    /// Empty when every check held.
    std::vector<std::string> violations;
};

[[nodiscard]] TrialRecord prop41_trial(int n0, int n, const ComplexPolynomial& p);

enum class CoefficientSampler { Disc, LogUniform };

[[nodiscard]] const char* to_string(CoefficientSampler s) noexcept;

struct CampaignConfig {
    int n0 = 2;
    int n = 3;
    std::size_t trials = 1000;
    std::uint64_t seed = 42;
    double radius = 5.0;
    CoefficientSampler sampler = CoefficientSampler::Disc;
};

struct CampaignFailure {
    std::size_t trial = 0;
    ComplexPolynomial p;
    std::vector<std::string> violations;
};

struct CampaignReport {
    CampaignConfig config;
    std::size_t completed = 0;
    std::size_t skipped = 0;
    bool aborted = false;
    std::vector<CampaignFailure> failures;
    std::map<int, std::size_t> winding_histogram;
    double bound = 0.0;  // (1/2)^(1/(n+1))
    double min_root_modulus_min = 0.0;
    double min_root_modulus_max = 0.0;
    double min_root_modulus_mean = 0.0;
    double max_vieta_error = 0.0;
    double max_residual = 0.0;
};

/// Seed of trial i, derived so that trials are independent of run order.
[[nodiscard]] std::uint64_t trial_seed(std::uint64_t campaign_seed, std::size_t trial);

/// Random P with deg P <= n0 drawn from the configured sampler for trial i.
[[nodiscard]] ComplexPolynomial draw_trial_polynomial(const CampaignConfig& config, std::size_t trial);

/// Runs every trial (in parallel) and folds the results in trial order. A
/// negative winding aborts the fold and records the offending P.
[[nodiscard]] CampaignReport prop41_campaign(const CampaignConfig& config);

}  // namespace holext
