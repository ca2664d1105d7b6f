#pragma once

// Exact rationals used for every exponent and coefficient in the exact layer.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace singlet
{

using Rational = mpq_class;

/// Canonical rational num/den (den > 0, reduced).
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "a", "-a", "a/b" (whitespace not allowed). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Always "num/den", also for integers ("3/1"), so the form is uniform in JSON.
std::string to_string(const Rational &x);

bool is_integer(const Rational &x);

/// Requires is_integer(x); throws std::domain_error on overflow or non-integers.
std::int64_t to_int64(const Rational &x);

mpz_class floor(const Rational &x);

double to_double(const Rational &x);

} // namespace singlet
