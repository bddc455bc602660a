#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>

namespace parcone {

// Exact arithmetic everywhere; GMP handles the bignum work.
using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws std::invalid_argument on den == 0.
Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p" or "p/q".
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

bool is_integral(const Rational& q);
Rational power(const Rational& base, unsigned exponent);
Integer lcm_of_denominators(std::span<const Rational> values);

/// Narrowing conversion; throws std::overflow_error when z does not fit.
long to_long(const Integer& z);

}  // namespace parcone
