#include "holext/boundary_fn.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "holext/errors.hpp"

namespace holext {

namespace {

void require_sample_count(std::size_t n) {
    if (!is_valid_sample_count(n)) {
        throw Error(ErrorCode::InvalidArgument,
                    "sample count must be a power of two in [16, 2^20], got " + std::to_string(n));
    }
}

long long floor_mod(long long a, long long n) {
    const long long r = a % n;
    return r < 0 ? r + n : r;
}

// In-place iterative radix-2 transform computing sum_j x_j exp(sign*2*pi*i*k*j/N).
void fft_in_place(std::vector<cplx>& x, int sign) {
    const std::size_t n = x.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    std::vector<cplx> twiddle(n / 2);
    for (std::size_t j = 0; j < n / 2; ++j) twiddle[j] = unit_root(sign * static_cast<long long>(j), n);

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2;
        const std::size_t stride = n / len;
        for (std::size_t start = 0; start < n; start += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const cplx t = twiddle[k * stride] * x[start + k + half];
                x[start + k + half] = x[start + k] - t;
                x[start + k] += t;
            }
        }
    }
}

}  // namespace

bool is_valid_sample_count(std::size_t n) noexcept {
    return n >= kMinSamples && n <= kMaxSamples && std::has_single_bit(n);
}

cplx unit_root(long long j, std::size_t n) {
    const auto nn = static_cast<long long>(n);
    const long long r = floor_mod(j, nn);
    if ((4 * r) % nn == 0) {
        switch ((4 * r) / nn) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
    return {std::cos(angle), std::sin(angle)};
}

// ---------------------------------------------------------------------------
// BoundarySamples

BoundarySamples::BoundarySamples(std::vector<cplx> values) : values_(std::move(values)) {
    require_sample_count(values_.size());
    for (std::size_t j = 0; j < values_.size(); ++j) {
        if (!std::isfinite(values_[j].real()) || !std::isfinite(values_[j].imag())) {
            throw Error(ErrorCode::InvalidArgument, "sample " + std::to_string(j) + " is not finite");
        }
    }
}

double BoundarySamples::rms() const noexcept {
    double acc = 0.0;
    for (const cplx& v : values_) acc += std::norm(v);
    return std::sqrt(acc / static_cast<double>(values_.size()));
}

double BoundarySamples::max_modulus() const noexcept {
    double m = 0.0;
    for (const cplx& v : values_) m = std::max(m, std::abs(v));
    return m;
}

BoundarySamples BoundarySamples::operator+(const BoundarySamples& other) const {
    if (other.size() != size()) throw Error(ErrorCode::InvalidArgument, "sample grids differ in size");
    std::vector<cplx> out(values_);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += other.values_[j];
    return BoundarySamples(std::move(out));
}

BoundarySamples BoundarySamples::scaled(cplx s) const {
    std::vector<cplx> out(values_);
    for (cplx& v : out) v *= s;
    return BoundarySamples(std::move(out));
}

// ---------------------------------------------------------------------------
// FourierCoefficients

FourierCoefficients::FourierCoefficients(std::vector<cplx> by_frequency) : coeffs_(std::move(by_frequency)) {
    require_sample_count(coeffs_.size());
}

cplx FourierCoefficients::at(long long k) const {
    if (!contains(k)) throw Error(ErrorCode::InvalidArgument, "frequency " + std::to_string(k) + " out of range");
    return coeffs_[static_cast<std::size_t>(k - min_frequency())];
}

cplx FourierCoefficients::aliased(long long k) const {
    const auto n = static_cast<long long>(coeffs_.size());
    long long r = floor_mod(k, n);
    if (r > max_frequency()) r -= n;
    return at(r);
}

double FourierCoefficients::energy() const noexcept {
    double acc = 0.0;
    for (const cplx& c : coeffs_) acc += std::norm(c);
    return acc;
}

// ---------------------------------------------------------------------------
// ComplexPolynomial

ComplexPolynomial::ComplexPolynomial(std::vector<cplx> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

ComplexPolynomial ComplexPolynomial::monomial(int degree, cplx coefficient) {
    if (degree < 0) throw Error(ErrorCode::InvalidArgument, "negative polynomial degree");
    std::vector<cplx> c(static_cast<std::size_t>(degree) + 1);
    c.back() = coefficient;
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial ComplexPolynomial::from_roots(std::span<const cplx> roots, cplx leading) {
    std::vector<cplx> c{leading};
    for (const cplx& r : roots) {
        std::vector<cplx> next(c.size() + 1);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    return ComplexPolynomial(std::move(c));
}

void ComplexPolynomial::trim() {
    double largest = 0.0;
    for (const cplx& a : coeffs_) largest = std::max(largest, std::abs(a));
    while (!coeffs_.empty() && std::abs(coeffs_.back()) <= kTrimThreshold * largest) coeffs_.pop_back();
}

cplx ComplexPolynomial::coefficient(int k) const noexcept {
    if (k < 0 || k > degree()) return {};
    return coeffs_[static_cast<std::size_t>(k)];
}

cplx ComplexPolynomial::operator()(cplx z) const noexcept {
    cplx acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

ComplexPolynomial ComplexPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<cplx> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
    return ComplexPolynomial(std::move(d));
}

ComplexPolynomial& ComplexPolynomial::operator+=(const ComplexPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

ComplexPolynomial& ComplexPolynomial::operator-=(const ComplexPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

ComplexPolynomial& ComplexPolynomial::operator*=(cplx s) {
    for (cplx& a : coeffs_) a *= s;
    trim();
    return *this;
}

ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<cplx> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return ComplexPolynomial(std::move(c));
}

std::vector<cplx> ComplexPolynomial::on_grid(std::size_t n) const {
    std::vector<cplx> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = (*this)(unit_root(static_cast<long long>(j), n));
    return out;
}

// ---------------------------------------------------------------------------
// LaurentExpression

LaurentExpression::LaurentExpression(std::map<int, cplx> terms) {
    for (const auto& [m, c] : terms) set(m, c);
}

LaurentExpression::LaurentExpression(cplx constant) { set(0, constant); }

LaurentExpression::LaurentExpression(const ComplexPolynomial& p) {
    for (int k = 0; k <= p.degree(); ++k) set(k, p.coefficient(k));
}

LaurentExpression LaurentExpression::monomial(int exponent, cplx coefficient) {
    LaurentExpression e;
    e.set(exponent, coefficient);
    return e;
}

void LaurentExpression::set(int m, cplx c) {
    if (c == cplx{}) {
        terms_.erase(m);
    } else {
        terms_[m] = c;
    }
}

cplx LaurentExpression::coefficient(int m) const noexcept {
    const auto it = terms_.find(m);
    return it == terms_.end() ? cplx{} : it->second;
}

int LaurentExpression::min_exponent() const noexcept { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentExpression::max_exponent() const noexcept { return terms_.empty() ? 0 : terms_.rbegin()->first; }

cplx LaurentExpression::operator()(cplx z) const {
    if (terms_.empty()) return {};
    // Horner separately on the z and 1/z parts.
    cplx pos{};
    for (int m = std::max(0, max_exponent()); m >= 0; --m) pos = pos * z + coefficient(m);
    cplx neg{};
    if (min_exponent() < 0) {
        if (z == cplx{}) throw Error(ErrorCode::InvalidArgument, "Laurent expression has a pole at 0");
        const cplx w = 1.0 / z;
        for (int m = min_exponent(); m <= -1; ++m) neg = neg * w + coefficient(m);
        neg *= w;
    }
    return pos + neg;
}

cplx LaurentExpression::at_node(std::size_t j, std::size_t n) const {
    cplx acc{};
    for (const auto& [m, c] : terms_) acc += c * unit_root(static_cast<long long>(m) * static_cast<long long>(j), n);
    return acc;
}

LaurentExpression& LaurentExpression::operator+=(const LaurentExpression& rhs) {
    for (const auto& [m, c] : rhs.terms_) set(m, coefficient(m) + c);
    return *this;
}

LaurentExpression& LaurentExpression::operator-=(const LaurentExpression& rhs) {
    for (const auto& [m, c] : rhs.terms_) set(m, coefficient(m) - c);
    return *this;
}

LaurentExpression& LaurentExpression::operator*=(cplx s) {
    std::map<int, cplx> old;
    old.swap(terms_);
    for (const auto& [m, c] : old) set(m, c * s);
    return *this;
}

LaurentExpression operator*(const LaurentExpression& a, const LaurentExpression& b) {
    LaurentExpression out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) out.set(ma + mb, out.coefficient(ma + mb) + ca * cb);
    }
    return out;
}

LaurentExpression LaurentExpression::shifted(int k) const {
    LaurentExpression out;
    for (const auto& [m, c] : terms_) out.set(m + k, c);
    return out;
}

// ---------------------------------------------------------------------------
// Sampling and transforms

BoundarySamples sample(const LaurentExpression& expr, std::size_t n) {
    require_sample_count(n);
    std::vector<cplx> values(n);
    for (std::size_t j = 0; j < n; ++j) values[j] = expr.at_node(j, n);
    return BoundarySamples(std::move(values));
}

BoundarySamples sample(const std::function<cplx(cplx)>& fn, std::size_t n) {
    require_sample_count(n);
    std::vector<cplx> values(n);
    for (std::size_t j = 0; j < n; ++j) values[j] = fn(unit_root(static_cast<long long>(j), n));
    return BoundarySamples(std::move(values));
}

FourierCoefficients dft(const BoundarySamples& samples) {
    const std::size_t n = samples.size();
    std::vector<cplx> x(samples.values().begin(), samples.values().end());
    fft_in_place(x, -1);
    // x[m] holds N*c_m for m in [0, N); rotate so index 0 is frequency -N/2.
    std::vector<cplx> by_frequency(n);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) by_frequency[i] = x[(i + n / 2) % n] * inv_n;
    return FourierCoefficients(std::move(by_frequency));
}

BoundarySamples synthesize(const FourierCoefficients& coeffs) {
    const std::size_t n = coeffs.source_size();
    std::vector<cplx> x(n);
    for (long long k = coeffs.min_frequency(); k <= coeffs.max_frequency(); ++k) {
        x[static_cast<std::size_t>(floor_mod(k, static_cast<long long>(n)))] = coeffs.at(k);
    }
    fft_in_place(x, +1);
    return BoundarySamples(std::move(x));
}

cplx truncated_eval(const FourierCoefficients& coeffs, long long k_lo, long long k_hi, cplx point) {
    if (k_lo > k_hi) return {};
    if (!coeffs.contains(k_lo) || !coeffs.contains(k_hi)) {
        throw Error(ErrorCode::InvalidArgument, "band [" + std::to_string(k_lo) + ", " + std::to_string(k_hi) +
                                                    "] outside stored frequencies");
    }
    // Horner in point over c_{k_hi}..c_{k_lo}, then scale by point^k_lo.
    cplx acc{};
    for (long long k = k_hi; k >= k_lo; --k) acc = acc * point + coeffs.at(k);
    return acc * std::pow(point, static_cast<int>(k_lo));
}

double l1_tail(const FourierCoefficients& coeffs, long long m) {
    if (m < 0) throw Error(ErrorCode::InvalidArgument, "tail cutoff must be nonnegative");
    double acc = 0.0;
    for (long long k = coeffs.min_frequency(); k <= coeffs.max_frequency(); ++k) {
        if (k > m || k < -m) acc += std::abs(coeffs.at(k));
    }
    return acc;
}

BoundarySamples resample(const BoundarySamples& samples, std::size_t n) {
    require_sample_count(n);
    if (n == samples.size()) return samples;
    const FourierCoefficients source = dft(samples);
    std::vector<cplx> target(n);
    const auto half = static_cast<long long>(n / 2);
    for (long long k = source.min_frequency(); k <= source.max_frequency(); ++k) {
        if (k >= -half && k < half) target[static_cast<std::size_t>(k + half)] = source.at(k);
    }
    return synthesize(FourierCoefficients(std::move(target)));
}

}  // namespace holext
