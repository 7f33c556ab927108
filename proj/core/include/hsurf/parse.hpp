#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hsurf/polynomial.hpp"

namespace hsurf {

/// Parses a homogeneous polynomial in x0..xn.
///
/// Grammar: terms joined by '+' or '-'; a term is an optional integer or
/// fraction coefficient followed by an optional '*' and a product of
/// powers `x<i>^<e>` joined by '*'. Whitespace is ignored.
RationalPolynomial parse_polynomial(std::string_view text, int n);

template <Field F>
Polynomial<F> parse_polynomial(std::string_view text, int n, const F& field) {
  return parse_polynomial(text, n).convert(field);
}

/// Smallest n such that every variable index in `text` is at most n.
int infer_ambient_dimension(std::string_view text);

/// "[a0 : a1 : ... : an]" with integer or fraction entries.
std::vector<mpq_class> parse_point(std::string_view text, int n);

/// One point per line; blank lines and lines starting with '#' are skipped.
std::vector<std::vector<mpq_class>> parse_points(std::string_view text, int n);

/// One polynomial per line, all of the given degree.
std::vector<RationalPolynomial> parse_polynomial_lines(std::string_view text, int n);

}  // namespace hsurf
