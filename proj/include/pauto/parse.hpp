#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pauto/endo.hpp"

namespace pauto {

/// Syntax error with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

/// Polynomial expressions over x1, x2 with + - * / ^, parentheses, integer
/// literals and roots z(m) = e^(2 pi i/m) for prime powers m. Division is
/// only allowed by nonzero constants, so `3/2*z(4)^3` and `x1/2` parse.
Poly parse_poly(std::string_view text);

/// A constant expression; rejects x1, x2.
Cyclotomic parse_scalar(std::string_view text);

/// `(expr1, expr2)`.
PlaneEndo parse_endo(std::string_view text);

/// Splits a comma-separated list at parenthesis depth 0.
std::vector<std::string> split_list(std::string_view text);

}  // namespace pauto
