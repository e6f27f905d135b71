#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quatpoly/polynomial.hpp"

namespace quatpoly {

// Expression syntax: z, + - * / ^n, parentheses, numbers (decimal or p/q),
// units i j k with an optional numeric prefix ("2i", "3/5*k"). Division is
// only by real constants. ")(" is the one implicit product.
//
// Polynomials are also accepted as "coeffs=[q0, q1, ...]" (ascending) or as
// JSON {"coeffs": ["q0", ...]}.
template <class S>
QPolynomial<S> parse_polynomial(std::string_view text);

template <class S>
Quat<S> parse_quaternion(std::string_view text);

// "[a, b, c]", "a, b, c" or a JSON array of strings.
template <class S>
std::vector<Quat<S>> parse_quaternion_list(std::string_view text);

template <class S>
std::string format_scalar(const S& x);

template <class S>
std::string format_quaternion(const Quat<S>& q);

// Descending powers, e.g. "z^2 - z*(j + 2*k) + 2*i".
template <class S>
std::string format_polynomial(const QPolynomial<S>& f);

} // namespace quatpoly
