#pragma once

// Numerical classes on the projectivization P(E*) of a parabolic bundle over
// a curve. The ring is generated by the tautological class xi and the fibre
// class L subject to
//
//   L^2 = 0,   xi^{r-1} L = N^{r-1} [pt],   xi^r = N^r par-deg(E*) [pt],
//
// where N is the level of E*. A homogeneous class of grade g lives in the
// two-dimensional span of xi^g and xi^{g-1} L (only xi^0 when g = 0).
//
// The same polynomial represents a Chern class in N^g and, capped with the
// fundamental class, a cycle class in N_{r-g}; `Reading` records which.

#include <array>
#include <stdexcept>
#include <string>

#include "parcone/parabolic_model.hpp"
#include "parcone/rational.hpp"

namespace parcone {

class RingError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct RingContext {
  int rank = 1;
  long level = 1;
  Rational degree;  // par-deg on P(E*); deg of the bundle on a cover ring

  static RingContext of(const ParabolicBundleSpec& spec);

  friend bool operator==(const RingContext& a, const RingContext& b) {
    return a.rank == b.rank && a.level == b.level && a.degree == b.degree;
  }
};

enum class Reading { cocycle, cycle };

class NumericalClass {
 public:
  /// The zero class of the given grade.
  NumericalClass(RingContext ctx, int grade, Reading reading = Reading::cocycle);

  /// xi_coeff * xi^g + fiber_coeff * xi^{g-1} L.
  NumericalClass(RingContext ctx, int grade, Rational xi_coeff, Rational fiber_coeff,
                 Reading reading = Reading::cocycle);

  static NumericalClass xi_power(const RingContext& ctx, int exponent);
  /// xi^{grade-1} L.
  static NumericalClass fiber_monomial(const RingContext& ctx, int grade);

  const RingContext& context() const noexcept { return ctx_; }
  int grade() const noexcept { return grade_; }
  Reading reading() const noexcept { return reading_; }

  const Rational& xi_coeff() const noexcept { return coeffs_[0]; }
  const Rational& fiber_coeff() const noexcept { return coeffs_[1]; }
  /// Coefficient of xi^a L^b; zero for anything outside the grade.
  Rational coefficient(int xi_exponent, int fiber_exponent) const;
  bool is_zero() const { return coeffs_[0] == 0 && coeffs_[1] == 0; }

  NumericalClass with_reading(Reading r) const;

  NumericalClass& operator+=(const NumericalClass& other);
  NumericalClass& operator-=(const NumericalClass& other);
  NumericalClass& operator*=(const Rational& s);
  friend NumericalClass operator+(NumericalClass a, const NumericalClass& b) { return a += b; }
  friend NumericalClass operator-(NumericalClass a, const NumericalClass& b) { return a -= b; }
  friend NumericalClass operator*(const Rational& s, NumericalClass a) { return a *= s; }
  friend NumericalClass operator-(NumericalClass a) { return a *= Rational(-1); }

  /// Same grade, context and coefficients; the reading is ignored.
  friend bool operator==(const NumericalClass& a, const NumericalClass& b);

 private:
  RingContext ctx_;
  int grade_;
  Reading reading_;
  std::array<Rational, 2> coeffs_;
};

std::string to_string(const NumericalClass& c, std::string_view xi = "xi",
                      std::string_view fiber = "L");

/// Truncated product. Errors on context mismatch, on grade > rank, and on two
/// cycle readings; a cocycle times a cycle reads as a cycle.
NumericalClass multiply(const NumericalClass& a, const NumericalClass& b);

/// a^exponent, with a^0 the unit class.
NumericalClass power(const NumericalClass& a, int exponent);

/// Multiple of [pt] represented by a top-grade class.
Rational degree_of_top(const NumericalClass& c);

/// Intersection pairing of a grade-k class with a grade-(r-k) class.
Rational pair(const NumericalClass& upper, const NumericalClass& lower);

/// Cap with the fundamental class: N^k -> N_{r-k}. Identity on the polynomial.
NumericalClass cyclify(const NumericalClass& c);

/// Numerics of the orbifold cover P(E~) -> P(E*) with group order gamma.
class CoverContext {
 public:
  /// gamma must be a positive multiple of the level.
  CoverContext(RingContext base, long gamma);

  const RingContext& base() const noexcept { return base_; }
  long gamma() const noexcept { return gamma_; }
  /// Ring of P(E~): rank r, level 1, degree gamma * par-deg.
  const RingContext& cover_ring() const noexcept { return cover_; }

 private:
  RingContext base_;
  long gamma_;
  RingContext cover_;
};

/// xi -> N xi~, L -> gamma L~.
NumericalClass pullback_to_cover(const CoverContext& cover, const NumericalClass& c);

/// xi~^j -> (gamma / N^j) xi^j, xi~^{j-1} L~ -> (1 / N^{j-1}) xi^{j-1} L.
NumericalClass pushforward_from_cover(const CoverContext& cover, const NumericalClass& c);

}  // namespace parcone
