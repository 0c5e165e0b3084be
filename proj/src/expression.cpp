#include "holext/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "holext/errors.hpp"

namespace holext {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ParsedExpression parse() {
        ParsedExpression out;
        out.numerator = sum();
        skip_space();
        if (peek() == '/') {
            ++pos_;
            const std::size_t at = pos_;
            out.denominator = term();
            if (out.denominator.is_zero()) throw ParseError(at, "division by zero");
        }
        skip_space();
        if (pos_ != text_.size()) throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
        return out;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    LaurentExpression sum() {
        LaurentExpression acc;
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = text_[pos_++] == '-';
        for (;;) {
            LaurentExpression t = term();
            if (negate) t *= -1.0;
            acc += t;
            const char c = peek();
            if (c != '+' && c != '-') return acc;
            negate = c == '-';
            ++pos_;
        }
    }

    LaurentExpression term() {
        LaurentExpression acc = factor();
        while (peek() == '*') {
            ++pos_;
            acc = acc * factor();
        }
        return acc;
    }

    LaurentExpression factor() {
        const char c = peek();
        if (c == 'z') {
            ++pos_;
            int k = 1;
            if (peek() == '^') {
                ++pos_;
                k = exponent();
            }
            return LaurentExpression::monomial(k);
        }
        if (c == 'i') {
            ++pos_;
            return LaurentExpression(cplx{0.0, 1.0});
        }
        if (c == '(') {
            ++pos_;
            LaurentExpression inner = sum();
            expect(')');
            if (peek() == '^') {
                ++pos_;
                const std::size_t at = pos_;
                const int k = exponent();
                if (k < 0) {
                    if (inner.terms().size() != 1) throw ParseError(at, "negative power of a sum is not Laurent");
                    const auto [m, coeff] = *inner.terms().begin();
                    return LaurentExpression::monomial(m * k, std::pow(coeff, k));
                }
                LaurentExpression power(1.0);
                for (int i = 0; i < k; ++i) power = power * inner;
                return power;
            }
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const double value = number();
            if (pos_ < text_.size() && text_[pos_] == 'i') {
                ++pos_;
                return LaurentExpression(cplx{0.0, value});
            }
            return LaurentExpression(cplx{value, 0.0});
        }
        if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of expression");
        throw ParseError(pos_, std::string("unexpected '") + c + "'");
    }

    int exponent() {
        bool wrapped = false;
        if (peek() == '(') {
            wrapped = true;
            ++pos_;
        }
        bool negative = false;
        if (peek() == '+' || peek() == '-') negative = text_[pos_++] == '-';
        skip_space();
        const std::size_t start = pos_;
        int value = 0;
        const auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc{}) throw ParseError(start, "expected integer exponent");
        pos_ = static_cast<std::size_t>(end - text_.data());
        if (wrapped) expect(')');
        return negative ? -value : value;
    }

    double number() {
        const std::size_t start = pos_;
        double value = 0.0;
        const auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc{}) throw ParseError(start, "malformed number");
        pos_ = static_cast<std::size_t>(end - text_.data());
        return value;
    }

    void expect(char c) {
        if (peek() != c) {
            if (pos_ >= text_.size()) throw ParseError(pos_, std::string("expected '") + c + "' before end");
            throw ParseError(pos_, std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string shortest(double v) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

// Coefficient text and whether it should be subtracted rather than added.
std::pair<std::string, bool> coefficient_text(cplx c) {
    if (c.imag() == 0.0) {
        return {shortest(std::abs(c.real())), std::signbit(c.real())};
    }
    if (c.real() == 0.0) return {shortest(std::abs(c.imag())) + "i", std::signbit(c.imag())};
    const std::string im = shortest(std::abs(c.imag()));
    return {"(" + shortest(c.real()) + (std::signbit(c.imag()) ? "-" : "+") + im + "i)", false};
}

}  // namespace

LaurentExpression ParsedExpression::as_laurent() const {
    if (!is_laurent()) throw Error(ErrorCode::InvalidArgument, "expression is a ratio, not a Laurent polynomial");
    const auto [m, c] = *denominator.terms().begin();
    return numerator.shifted(-m) * (1.0 / c);
}

RationalFunction ParsedExpression::as_rational() const { return holext::as_rational(numerator, denominator); }

ParsedExpression parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string format_expression(const LaurentExpression& expr) {
    if (expr.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = expr.terms().rbegin(); it != expr.terms().rend(); ++it) {
        const auto [text, minus] = coefficient_text(it->second);
        if (first) {
            out += minus ? "-" : "";
        } else {
            out += minus ? " - " : " + ";
        }
        out += text + "*z^" + std::to_string(it->first);
        first = false;
    }
    return out;
}

std::string format_expression(const ParsedExpression& expr) {
    if (expr.denominator.terms().size() == 1 && expr.denominator.coefficient(0) == cplx{1.0}) {
        return format_expression(expr.numerator);
    }
    return "(" + format_expression(expr.numerator) + ")/(" + format_expression(expr.denominator) + ")";
}

BoundarySamples sample_expression(const ParsedExpression& expr, std::size_t n) {
    if (expr.is_laurent()) return sample(expr.as_laurent(), n);
    const RationalFunction r = expr.as_rational();
    if (r.denominator.degree() >= 1) {
        for (const cplx& root : roots(r.denominator).roots) {
            if (std::abs(std::abs(root) - 1.0) < kCircleExclusion) {
                throw Error(ErrorCode::InvalidArgument, "pole on the unit circle near " + shortest(root.real()) +
                                                            (root.imag() < 0 ? "" : "+") + shortest(root.imag()) + "i");
            }
        }
    }
    std::vector<cplx> values(n);
    for (std::size_t j = 0; j < n; ++j) {
        values[j] = expr.numerator.at_node(j, n) / expr.denominator.at_node(j, n);
    }
    return BoundarySamples(std::move(values));
}

}  // namespace holext
