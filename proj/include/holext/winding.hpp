#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "holext/boundary_fn.hpp"

namespace holext {

/// Values closer to zero than this fraction of the largest modulus count as
/// a zero on the curve.
inline constexpr double kZeroThreshold = 1e-9;

struct WindingResult {
    int winding = 0;
    double min_modulus = 0.0;
    /// Largest |principal argument| of consecutive ratios, in radians.
    double max_step_turn = 0.0;
    std::size_t n_used = 0;
    /// Sum of the principal argument increments, in radians.
    double raw_total = 0.0;

    /// Steps stay below pi/2 and raw_total is within 0.1 turns of the integer.
    [[nodiscard]] bool accepted() const noexcept;
};

/// Produces samples of the same function on an N-point grid.
using Resampler = std::function<BoundarySamples(std::size_t)>;

/// Diagnostics only: fills every field and never rejects on step size.
/// Throws ZeroOnCurve when the curve comes within the zero threshold.
[[nodiscard]] WindingResult measure_winding(std::span<const cplx> values);

/// Change of argument of the closed sampled curve divided by 2*pi.
/// Throws ZeroOnCurve, or Unresolved when the result is not accepted.
[[nodiscard]] WindingResult change_of_argument(const BoundarySamples& samples);

/// Doubles N from n_start until the result is accepted and two consecutive
/// grids agree, or until the 2^20 cap (where an accepted result is returned
/// as is and anything else is Unresolved).
[[nodiscard]] WindingResult winding_with_refinement(const Resampler& source, std::size_t n_start);
[[nodiscard]] WindingResult winding_with_refinement(const LaurentExpression& expr, std::size_t n_start);

/// Winding of f + P; samples are refined through their band-limited interpolant.
[[nodiscard]] WindingResult winding_of_sum(const BoundarySamples& f, const ComplexPolynomial& p);
[[nodiscard]] WindingResult winding_of_sum(const LaurentExpression& f, const ComplexPolynomial& p,
                                           std::size_t n_start = kDefaultSamples);

}  // namespace holext
