#pragma once

// Two-ray cones in a graded slice of the numerical ring, the closed-form
// positive cones of P(E*), and the semistability criterion built on them.
//
// Conventions: Eff_k (k-dimensional cycles) is a `lower` cone whose
// generators are grade r-k polynomials; Nef^k and Eff^k are `upper` cones of
// grade k. Duality exchanges the two sides and sends grade g to r-g.

#include <array>
#include <vector>

#include "parcone/numerical_ring.hpp"
#include "parcone/parabolic_model.hpp"

namespace parcone {

enum class ConeSide { upper, lower };

const char* to_string(ConeSide side);

/// Positive rescaling of c to coprime integer coefficients. The ray is kept,
/// so the sign of the leading coefficient is never flipped.
NumericalClass primitive(const NumericalClass& c);

class Cone2D {
 public:
  /// Throws RingError if the generators differ in grade or context, are zero,
  /// or are proportional.
  Cone2D(ConeSide side, NumericalClass first, NumericalClass second);

  ConeSide side() const noexcept { return side_; }
  int grade() const noexcept { return rays_[0].grade(); }
  const RingContext& context() const noexcept { return rays_[0].context(); }
  /// Primitive generators, ordered by descending (xi, fibre) coefficients.
  const std::array<NumericalClass, 2>& rays() const noexcept { return rays_; }

  struct Coordinates {
    Rational first;
    Rational second;
  };
  /// Coefficients of c in the generator basis.
  Coordinates coordinates(const NumericalClass& c) const;

  friend bool operator==(const Cone2D& a, const Cone2D& b);

 private:
  ConeSide side_;
  std::array<NumericalClass, 2> rays_;
};

/// Closed membership (boundary included).
bool membership(const NumericalClass& c, const Cone2D& cone);
/// Both generator coordinates strictly positive.
bool interior_membership(const NumericalClass& c, const Cone2D& cone);
bool cone_equal(const Cone2D& a, const Cone2D& b);
bool cone_contains(const Cone2D& outer, const Cone2D& inner);

/// {P : pair(P, a) >= 0 for all a in c}, computed from the intersection pairing.
Cone2D dual_cone(const Cone2D& c);

/// nu_k for k = 1..r-1.
class NuTable {
 public:
  explicit NuTable(std::vector<Rational> values) : values_(std::move(values)) {}
  const Rational& operator()(int k) const { return values_.at(static_cast<std::size_t>(k - 1)); }
  int size() const noexcept { return static_cast<int>(values_.size()); }
  const std::vector<Rational>& values() const noexcept { return values_; }

 private:
  std::vector<Rational> values_;
};

/// nu_{rbar_{s-1}+j} = (j mu_s - dbar_{s-1}) N over the admissible (s, j).
/// Throws std::invalid_argument for rank one.
NuTable nu_table(const HNData& hn, long level);

struct SemistabilityVerdict {
  bool by_hn_length = false;
  bool by_homogeneity = false;

  bool agree() const { return by_hn_length == by_homogeneity; }
};

/// The closed-form cones of one bundle, with HN data and nu computed once.
class ConeCalculator {
 public:
  explicit ConeCalculator(const ParabolicBundleSpec& spec);
  ConeCalculator(RingContext ctx, HNData hn);

  const RingContext& context() const noexcept { return ctx_; }
  const HNData& hn() const noexcept { return hn_; }
  /// Empty for rank one.
  const NuTable& nu() const noexcept { return nu_; }

  /// Class of P(Q^1) inside P(E*): xi^{r-r1} + (d1 - d) N xi^{r-r1-1} L.
  NumericalClass quotient_class() const;

  Cone2D eff_lower(int k) const;
  Cone2D nef_upper(int k) const;
  Cone2D eff_upper(int k) const;
  Cone2D nef_1() const;

  bool is_k_homogeneous(int k) const;
  SemistabilityVerdict semistability() const;

 private:
  void require_k(int k) const;
  NumericalClass eff_lower_tilted(int k) const;

  RingContext ctx_;
  HNData hn_;
  NuTable nu_{{}};
};

Cone2D eff_cone_lower(const ParabolicBundleSpec& spec, int k);
Cone2D nef_cone_upper(const ParabolicBundleSpec& spec, int k);
Cone2D eff_cone_upper(const ParabolicBundleSpec& spec, int k);
Cone2D nef_cone_1(const ParabolicBundleSpec& spec);
bool is_k_homogeneous(const ParabolicBundleSpec& spec, int k);
SemistabilityVerdict is_semistable(const ParabolicBundleSpec& spec);

/// Image of a class on P(E^1_*) (level `sub_level`) in the ring of P(E*) under
/// the cycle shift Eff_j(P(E^1_*)) -> Eff_{r1+j}(P(E*)), obtained by lifting to
/// the cover, including P(E~^1) -> P(E~) by the same polynomial, and pushing down:
///   xi1^a -> (N1/N)^a xi^a,   xi1^{a-1} L1 -> (N1/N)^{a-1} xi^{a-1} L.
NumericalClass shift_from_subbundle(const NumericalClass& sub_class, const RingContext& target);

}  // namespace parcone
