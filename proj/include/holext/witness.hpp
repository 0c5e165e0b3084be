#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "holext/boundary_fn.hpp"
#include "holext/extend_test.hpp"
#include "holext/winding.hpp"

namespace holext {

/// Remainder budget for the truncated trigonometric split; strictly inside 1/2.
inline constexpr double kTailBudget = 0.45;
/// |c| or |G(w)| below this fraction of ||f|| is too small to normalize by.
inline constexpr double kNormalizerFloor = 1e-6;

enum class Route { Direct, PoleLift };

struct WitnessTrace {
    /// (1/2 pi i) * integral of f dz for the direct route, G(w) for the lift.
    cplx normalizer{};
    int truncation = 0;
    double tail_bound = 0.0;
    std::size_t n_used = 0;
    /// Range of Re(z * (g/c - P - Q)) over the grid, g the function split.
    double re_min = 0.0;
    double re_max = 0.0;
};

/// A polynomial W with f + W nonvanishing on the circle and negative winding.
struct WitnessCertificate {
    ComplexPolynomial witness;
    int winding = 0;
    Route route = Route::Direct;
    /// Set for the PoleLift route.
    cplx pole{};
    WitnessTrace trace;
};

/// Builds W = -c (P + Q) from the split z f / c - 1 = z P + conj(z Q) + g with
/// sum |g_k| <= 0.45, where c = (1/2 pi i) * integral of f dz. Throws
/// AverageTooSmall, TailNotBounded, or VerificationFailed if the re-checked
/// winding of f + W is not -1.
[[nodiscard]] WitnessCertificate construct_direct(const BoundarySamples& f);

/// Pole-lift route for f with vanishing mean: picks w on the default grid
/// maximizing |G(w)|, runs the direct route on f / (z - w) and returns
/// W = (z - w) P. Requires verdict(f) = NotExtendible (else NotApplicable);
/// throws NoUsablePole when every |G(w)| is below the floor.
[[nodiscard]] WitnessCertificate construct_lifted(const BoundarySamples& f, double tol = kDefaultTolerance);

/// Result of the lift together with the intermediate polynomial, so callers
/// can compare winding(f + (z - w) P) against winding(f / (z - w) + P).
struct LiftDetail {
    WitnessCertificate certificate;
    ComplexPolynomial lifted_from;
    BoundarySamples divided;
};
[[nodiscard]] LiftDetail construct_lifted_detail(const BoundarySamples& f, double tol = kDefaultTolerance);

struct PipelineResult {
    Verdict verdict;
    std::optional<WitnessCertificate> certificate;
    /// Why no certificate was produced for a NotExtendible input.
    std::optional<std::string> failure;
};

/// Verdict, then the direct route, then the lift. Failures are reported as data.
[[nodiscard]] PipelineResult pipeline(const BoundarySamples& f, double tol = kDefaultTolerance);

}  // namespace holext
