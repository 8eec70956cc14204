#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qpathlen {

// Exact arbitrary-precision rational scalar used by all verification paths.
using Rational = mpq_class;

// Accepts "a/b", a plain integer, or a terminating decimal such as "0.25";
// all three parse exactly. Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

// True when `text` contains a '/' (explicit numerator/denominator form).
bool is_ratio_literal(std::string_view text);

// Lowest terms; denominator 1 prints as a bare integer.
std::string to_string(const Rational& value);

// Exclusive unit interval test, 0 < q < 1.
bool in_unit_interval(const Rational& q);

Rational rational_pow(const Rational& base, unsigned long exponent);

double to_double(const Rational& value);

}  // namespace qpathlen
