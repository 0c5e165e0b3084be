#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace holext {

using cplx = std::complex<double>;

inline constexpr std::size_t kMinSamples = 16;
inline constexpr std::size_t kDefaultSamples = 1024;
inline constexpr std::size_t kMaxSamples = std::size_t{1} << 20;

/// Relative threshold below which polynomial coefficients are dropped.
inline constexpr double kTrimThreshold = 1e-14;

[[nodiscard]] bool is_valid_sample_count(std::size_t n) noexcept;

/// exp(2*pi*i*j/n), reduced mod n first so large exponents stay exact.
[[nodiscard]] cplx unit_root(long long j, std::size_t n);

/// Values of f at exp(2*pi*i*j/N), j = 0..N-1 (counterclockwise).
/// N is a power of two, at least 16, and every value is finite.
class BoundarySamples {
public:
    explicit BoundarySamples(std::vector<cplx> values);

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] std::span<const cplx> values() const noexcept { return values_; }
    [[nodiscard]] const cplx& operator[](std::size_t j) const { return values_[j]; }
    [[nodiscard]] cplx node(std::size_t j) const { return unit_root(static_cast<long long>(j), size()); }

    /// Root mean square over the grid; the normalization for all tolerances.
    [[nodiscard]] double rms() const noexcept;
    [[nodiscard]] double max_modulus() const noexcept;

    [[nodiscard]] BoundarySamples operator+(const BoundarySamples& other) const;
    [[nodiscard]] BoundarySamples scaled(cplx s) const;

private:
    std::vector<cplx> values_;
};

/// Two-sided coefficients c_k, k in [-N/2, N/2), with the analyst's
/// normalization c_k = (1/2pi) * integral f(e^it) e^-ikt dt.
class FourierCoefficients {
public:
    explicit FourierCoefficients(std::vector<cplx> by_frequency);

    [[nodiscard]] std::size_t source_size() const noexcept { return coeffs_.size(); }
    [[nodiscard]] long long min_frequency() const noexcept { return -static_cast<long long>(coeffs_.size() / 2); }
    [[nodiscard]] long long max_frequency() const noexcept { return static_cast<long long>(coeffs_.size() / 2) - 1; }
    [[nodiscard]] bool contains(long long k) const noexcept { return k >= min_frequency() && k <= max_frequency(); }

    /// Coefficient at frequency k; k must be in range.
    [[nodiscard]] cplx at(long long k) const;
    /// Coefficient whose frequency is congruent to k mod N (grid aliasing).
    [[nodiscard]] cplx aliased(long long k) const;

    [[nodiscard]] double energy() const noexcept;

private:
    std::vector<cplx> coeffs_;  // index k - min_frequency()
};

/// a_0 + a_1 z + ... + a_d z^d, trimmed so the leading coefficient is nonzero.
class ComplexPolynomial {
public:
    ComplexPolynomial() = default;
    explicit ComplexPolynomial(std::vector<cplx> coefficients);

    [[nodiscard]] static ComplexPolynomial monomial(int degree, cplx coefficient = 1.0);
    [[nodiscard]] static ComplexPolynomial from_roots(std::span<const cplx> roots, cplx leading = 1.0);

    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree, or -1 for the zero polynomial.
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] std::span<const cplx> coefficients() const noexcept { return coeffs_; }
    [[nodiscard]] cplx coefficient(int k) const noexcept;
    [[nodiscard]] cplx leading() const noexcept { return coeffs_.empty() ? cplx{} : coeffs_.back(); }

    [[nodiscard]] cplx operator()(cplx z) const noexcept;
    [[nodiscard]] ComplexPolynomial derivative() const;

    ComplexPolynomial& operator+=(const ComplexPolynomial& rhs);
    ComplexPolynomial& operator-=(const ComplexPolynomial& rhs);
    ComplexPolynomial& operator*=(cplx s);
    [[nodiscard]] friend ComplexPolynomial operator+(ComplexPolynomial a, const ComplexPolynomial& b) { return a += b; }
    [[nodiscard]] friend ComplexPolynomial operator-(ComplexPolynomial a, const ComplexPolynomial& b) { return a -= b; }
    [[nodiscard]] friend ComplexPolynomial operator*(ComplexPolynomial a, cplx s) { return a *= s; }
    [[nodiscard]] friend ComplexPolynomial operator*(cplx s, ComplexPolynomial a) { return a *= s; }
    [[nodiscard]] friend ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b);

    /// Values on the N-point grid.
    [[nodiscard]] std::vector<cplx> on_grid(std::size_t n) const;

private:
    void trim();
    std::vector<cplx> coeffs_;
};

/// Finite sum of c_m z^m with m of either sign.
class LaurentExpression {
public:
    LaurentExpression() = default;
    explicit LaurentExpression(std::map<int, cplx> terms);
    LaurentExpression(cplx constant);  // NOLINT: implicit so constants read naturally
    explicit LaurentExpression(const ComplexPolynomial& p);

    [[nodiscard]] static LaurentExpression monomial(int exponent, cplx coefficient = 1.0);

    [[nodiscard]] const std::map<int, cplx>& terms() const noexcept { return terms_; }
    [[nodiscard]] cplx coefficient(int m) const noexcept;
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] int min_exponent() const noexcept;
    [[nodiscard]] int max_exponent() const noexcept;

    [[nodiscard]] cplx operator()(cplx z) const;
    /// Exact value at the grid node exp(2*pi*i*j/N).
    [[nodiscard]] cplx at_node(std::size_t j, std::size_t n) const;

    LaurentExpression& operator+=(const LaurentExpression& rhs);
    LaurentExpression& operator-=(const LaurentExpression& rhs);
    LaurentExpression& operator*=(cplx s);
    [[nodiscard]] friend LaurentExpression operator+(LaurentExpression a, const LaurentExpression& b) { return a += b; }
    [[nodiscard]] friend LaurentExpression operator-(LaurentExpression a, const LaurentExpression& b) { return a -= b; }
    [[nodiscard]] friend LaurentExpression operator*(LaurentExpression a, cplx s) { return a *= s; }
    [[nodiscard]] friend LaurentExpression operator*(cplx s, LaurentExpression a) { return a *= s; }
    [[nodiscard]] friend LaurentExpression operator*(const LaurentExpression& a, const LaurentExpression& b);

    /// Multiply by z^k.
    [[nodiscard]] LaurentExpression shifted(int k) const;

private:
    void set(int m, cplx c);
    std::map<int, cplx> terms_;
};

/// Samples an exact expression on the N-point grid.
[[nodiscard]] BoundarySamples sample(const LaurentExpression& expr, std::size_t n);
/// Samples an arbitrary function of the grid node.
[[nodiscard]] BoundarySamples sample(const std::function<cplx(cplx)>& fn, std::size_t n);

/// c_k = (1/N) sum_j values[j] exp(-2*pi*i*k*j/N) via radix-2 FFT.
[[nodiscard]] FourierCoefficients dft(const BoundarySamples& samples);
/// Inverse of dft: evaluates the full band on the grid.
[[nodiscard]] BoundarySamples synthesize(const FourierCoefficients& coeffs);

/// sum_{k_lo <= k <= k_hi} c_k point^k. An empty band (k_lo > k_hi) gives 0.
[[nodiscard]] cplx truncated_eval(const FourierCoefficients& coeffs, long long k_lo, long long k_hi, cplx point);

/// sum_{|k| > m} |c_k|, an upper bound for the sup norm of the discarded tail.
[[nodiscard]] double l1_tail(const FourierCoefficients& coeffs, long long m);

/// Band-limited trigonometric interpolant of the samples evaluated on a new grid.
[[nodiscard]] BoundarySamples resample(const BoundarySamples& samples, std::size_t n);

}  // namespace holext
