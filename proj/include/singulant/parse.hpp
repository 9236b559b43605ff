#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "singulant/matrix.hpp"
#include "singulant/polynomial.hpp"

namespace singulant {

/// Syntax error carrying the 1-based line and column of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

/// Infix polynomial: integers, variable names, + - * ^ and parentheses.
/// Division is accepted only by a nonzero constant, so printed rational
/// coefficients such as 3/2*x read back.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::span<const std::string> names);

/// "(g1, ..., gc)"; "()" is the zero ideal.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring,
                                              std::span<const std::string> names);

/// "[[a, b], [c, d]]", row by row.
PolyMatrix parse_matrix(std::string_view text, const RingPtr& ring, std::span<const std::string> names);

}  // namespace singulant
