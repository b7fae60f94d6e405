#pragma once

// Numeric expressions for command-line parameters, so constants such as
// "atanh(sqrt(3)/2)" enter at full double precision.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' unary)?
//   primary := number | 'pi' | 'e' | name '(' expr ')' | '(' expr ')'
//
// Functions: sqrt exp log sin cos tan asin acos atan sinh cosh tanh asinh
// acosh atanh.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hypflex {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

double evaluate_expression(std::string_view text);

}  // namespace hypflex
