#include "holext/winding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "holext/errors.hpp"

namespace holext {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMaxTurn = std::numbers::pi / 2.0;

}  // namespace

bool WindingResult::accepted() const noexcept {
    return max_step_turn < kMaxTurn && std::abs(raw_total / kTwoPi - winding) < 0.1;
}

WindingResult measure_winding(std::span<const cplx> values) {
    if (values.empty()) throw Error(ErrorCode::InvalidArgument, "empty curve");
    WindingResult r;
    r.n_used = values.size();
    double max_mod = 0.0;
    r.min_modulus = std::abs(values[0]);
    for (const cplx& v : values) {
        const double m = std::abs(v);
        max_mod = std::max(max_mod, m);
        r.min_modulus = std::min(r.min_modulus, m);
    }
    if (!(r.min_modulus > kZeroThreshold * max_mod)) {
        throw Error(ErrorCode::ZeroOnCurve, "curve value of modulus " + std::to_string(r.min_modulus) +
                                                " against maximum " + std::to_string(max_mod));
    }
    const std::size_t n = values.size();
    for (std::size_t j = 0; j < n; ++j) {
        // std::arg lies in [-pi, pi]; a step of exactly pi is never accepted anyway.
        const double step = std::arg(values[(j + 1) % n] * std::conj(values[j]));
        r.raw_total += step;
        r.max_step_turn = std::max(r.max_step_turn, std::abs(step));
    }
    r.winding = static_cast<int>(std::lround(r.raw_total / kTwoPi));
    return r;
}

WindingResult change_of_argument(const BoundarySamples& samples) {
    WindingResult r = measure_winding(samples.values());
    if (!r.accepted()) {
        throw Error(ErrorCode::Unresolved, "largest step turn " + std::to_string(r.max_step_turn) + " rad at N = " +
                                               std::to_string(r.n_used));
    }
    return r;
}

WindingResult winding_with_refinement(const Resampler& source, std::size_t n_start) {
    if (!is_valid_sample_count(n_start)) {
        throw Error(ErrorCode::InvalidArgument, "starting sample count must be a power of two in [16, 2^20]");
    }
    std::optional<int> previous;
    for (std::size_t n = n_start;; n *= 2) {
        const WindingResult r = measure_winding(source(n).values());
        if (r.accepted()) {
            if (previous == r.winding) return r;
            previous = r.winding;
        } else {
            previous.reset();
        }
        if (n >= kMaxSamples) {
            if (r.accepted()) return r;
            throw Error(ErrorCode::Unresolved,
                        "largest step turn " + std::to_string(r.max_step_turn) + " rad at the refinement cap");
        }
    }
}

WindingResult winding_with_refinement(const LaurentExpression& expr, std::size_t n_start) {
    return winding_with_refinement([&expr](std::size_t n) { return sample(expr, n); }, n_start);
}

WindingResult winding_of_sum(const BoundarySamples& f, const ComplexPolynomial& p) {
    return winding_with_refinement(
        [&](std::size_t n) {
            const BoundarySamples base = resample(f, n);
            std::vector<cplx> values(base.values().begin(), base.values().end());
            const std::vector<cplx> poly = p.on_grid(n);
            for (std::size_t j = 0; j < n; ++j) values[j] += poly[j];
            return BoundarySamples(std::move(values));
        },
        f.size());
}

WindingResult winding_of_sum(const LaurentExpression& f, const ComplexPolynomial& p, std::size_t n_start) {
    return winding_with_refinement(f + LaurentExpression(p), n_start);
}

}  // namespace holext
