#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "holext/boundary_fn.hpp"
#include "holext/oracle.hpp"

namespace holext {

/// A Laurent polynomial or a ratio of two, as written on the command line.
///
/// Grammar (whitespace ignored):
///   expr     := sum [ '/' term ]
///   sum      := [sign] term { sign term }
///   term     := factor { '*' factor }
///   factor   := number ['i'] | 'i' | 'z' ['^' exponent] | '(' sum ')' ['^' natural]
///   exponent := [sign] digits | '(' [sign] digits ')'
struct ParsedExpression {
    LaurentExpression numerator;
    LaurentExpression denominator{1.0};

    /// True when the denominator is a single monomial, so the ratio is Laurent.
    [[nodiscard]] bool is_laurent() const noexcept { return denominator.terms().size() == 1; }
    /// The ratio as a Laurent expression; InvalidArgument when !is_laurent().
    [[nodiscard]] LaurentExpression as_laurent() const;
    [[nodiscard]] RationalFunction as_rational() const;
    [[nodiscard]] cplx operator()(cplx z) const { return numerator(z) / denominator(z); }
};

/// Throws ParseError with the byte offset of the first bad token.
[[nodiscard]] ParsedExpression parse_expression(std::string_view text);

/// Prints terms as c*z^k in descending order; parse(print(e)) == e exactly.
[[nodiscard]] std::string format_expression(const LaurentExpression& expr);
[[nodiscard]] std::string format_expression(const ParsedExpression& expr);

/// Grid samples of the expression. Rational expressions whose denominator has
/// a root within 1e-6 of the circle are rejected with InvalidArgument.
[[nodiscard]] BoundarySamples sample_expression(const ParsedExpression& expr, std::size_t n);

}  // namespace holext
