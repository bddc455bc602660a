#pragma once

// Independent route to the cones of P(E*): work on the smooth cover P(E~),
// where the classical descriptions apply (Miyaoka's nef cone, Fulger's
// pseudoeffective cones of projective bundles over curves), then push the
// generators down. Nothing here reads the nu_k closed form.

#include <optional>
#include <stdexcept>
#include <vector>

#include "parcone/cone_engine.hpp"
#include "parcone/numerical_ring.hpp"
#include "parcone/parabolic_model.hpp"

namespace parcone {

class InadmissibleGammaError : public std::invalid_argument {
 public:
  InadmissibleGammaError(long gamma, long suggested, const std::string& reason);
  long gamma() const noexcept { return gamma_; }
  /// Smallest cover order that would be accepted.
  long suggested() const noexcept { return suggested_; }

 private:
  long gamma_;
  long suggested_;
};

struct OrbifoldPiece {
  int rank = 0;
  Integer degree;

  Rational slope() const { return Rational(degree) / rank; }
};

/// Numerical shadow of the orbifold bundle E~ on a degree-gamma Galois cover.
struct OrbifoldBundleData {
  int rank = 0;
  long gamma = 1;
  Integer degree;
  std::vector<OrbifoldPiece> pieces;  // HN quotients, slopes increasing

  /// Ring of P(E~): xi~^r = deg, xi~^{r-1} L~ = 1.
  RingContext ring() const { return RingContext{rank, 1, Rational(degree)}; }
  bool semistable() const { return pieces.size() == 1; }
};

/// Smallest multiple of the level that makes every scaled degree integral.
long smallest_admissible_gamma(const ParabolicBundleSpec& spec);

/// {N, 2N, 3N}, keeping the orders with integral scaled degrees.
std::vector<long> default_gammas(const ParabolicBundleSpec& spec);

OrbifoldBundleData lift(const ParabolicBundleSpec& spec, long gamma);

/// [P(Q~^1)] = xi~^{r-r1} + (d~1 - d~) xi~^{r-r1-1} L~. Requires an unstable bundle.
NumericalClass quotient_class(const OrbifoldBundleData& orb);

/// Eff_k(P(E~)) as a lower cone in the cover ring.
Cone2D fulton_eff_lower(const OrbifoldBundleData& orb, int k);

/// <xi~ - mu~1 L~, L~>.
Cone2D miyaoka_nef(const OrbifoldBundleData& orb);

struct GammaCheck {
  long gamma = 0;
  Cone2D pushed_eff;      // p~_* of the cover Eff_k
  Cone2D cover_nef;       // dual of the cover Eff_k
  bool eff_match = false;
  bool nef_match = false;        // p~^* Nef^k equals the cover Nef^k
  bool miyaoka_match = true;     // k = 1 only: p~^* Nef^1 equals Miyaoka's cone

  bool passed() const { return eff_match && nef_match && miyaoka_match; }
};

struct CrossCheckReport {
  int k = 0;
  Cone2D expected_eff;
  Cone2D expected_nef;
  std::vector<GammaCheck> per_gamma;
  bool gamma_independent = true;

  bool passed() const;
  /// Human-readable generator diff for every failing gamma; empty when passed.
  std::vector<std::string> mismatches() const;
};

/// Throws InadmissibleGammaError before doing any work if a gamma is rejected.
CrossCheckReport cross_check(const ParabolicBundleSpec& spec, int k, const std::vector<long>& gammas);

}  // namespace parcone
