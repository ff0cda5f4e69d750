#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace loopalg {

// Exact rationals; always kept canonical (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

// Parses "p" or "p/q" (optional leading '-'); throws parse_error.
Rational parse_rational(std::string_view text);

// q^e for any integer e; q must be nonzero when e < 0.
Rational pow(const Rational& q, std::int64_t e);

}  // namespace loopalg
