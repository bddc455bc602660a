#include "parcone/rational.hpp"

#include <stdexcept>

namespace parcone {

Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    return make_rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal '" + s + "'");
  }
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

bool is_integral(const Rational& q) { return q.get_den() == 1; }

Rational power(const Rational& base, unsigned exponent) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  return make_rational(num, den);
}

Integer lcm_of_denominators(std::span<const Rational> values) {
  Integer acc = 1;
  for (const auto& v : values) acc = lcm(acc, Integer(v.get_den()));
  return acc;
}

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer " + z.get_str() + " exceeds long");
  return z.get_si();
}

}  // namespace parcone
