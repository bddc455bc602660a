#include "parcone/orbifold_oracle.hpp"

namespace parcone {

namespace {

OrbifoldBundleData drop_first_piece(const OrbifoldBundleData& orb) {
  OrbifoldBundleData tail;
  tail.rank = orb.rank - orb.pieces.front().rank;
  tail.gamma = orb.gamma;
  tail.degree = orb.degree - orb.pieces.front().degree;
  tail.pieces.assign(orb.pieces.begin() + 1, orb.pieces.end());
  return tail;
}

// Non-fibre generator of Eff_k(P(F)), expanded in the ring of P(F).
NumericalClass tilted_generator(const OrbifoldBundleData& orb, int k) {
  const RingContext ring = orb.ring();
  const NumericalClass xi = NumericalClass::xi_power(ring, 1);
  const NumericalClass fiber = NumericalClass::fiber_monomial(ring, 1);
  const OrbifoldPiece& first = orb.pieces.front();

  if (orb.semistable()) {
    return power(xi - first.slope() * fiber, orb.rank - k).with_reading(Reading::cycle);
  }
  if (k <= first.rank) {
    return multiply(quotient_class(orb), power(xi - first.slope() * fiber, first.rank - k))
        .with_reading(Reading::cycle);
  }
  // Cycles of dimension r1 + j on P(F) correspond to j-cycles on P(F^1); the
  // correspondence keeps the polynomial in xi and L.
  const NumericalClass sub = tilted_generator(drop_first_piece(orb), k - first.rank);
  return NumericalClass(ring, sub.grade(), sub.xi_coeff(), sub.fiber_coeff(), Reading::cycle);
}

void require_k(const OrbifoldBundleData& orb, int k) {
  if (k < 1 || k > orb.rank - 1) {
    throw std::out_of_range("k = " + std::to_string(k) + " outside [1, " + std::to_string(orb.rank - 1) + "]");
  }
}

std::string describe(const Cone2D& c) {
  return "<" + to_string(c.rays()[0]) + ", " + to_string(c.rays()[1]) + ">";
}

}  // namespace

InadmissibleGammaError::InadmissibleGammaError(long gamma, long suggested, const std::string& reason)
    : std::invalid_argument("inadmissible gamma " + std::to_string(gamma) + ": " + reason +
                            "; smallest admissible order is " + std::to_string(suggested)),
      gamma_(gamma),
      suggested_(suggested) {}

long smallest_admissible_gamma(const ParabolicBundleSpec& spec) {
  std::vector<Rational> degrees{parabolic_degree(spec)};
  const HNData hn = resolve_hn(spec);
  for (const auto& piece : hn.pieces()) degrees.push_back(piece.degree);
  return to_long(lcm(Integer(level(spec)), lcm_of_denominators(degrees)));
}

std::vector<long> default_gammas(const ParabolicBundleSpec& spec) {
  const long n = level(spec);
  const long smallest = smallest_admissible_gamma(spec);
  std::vector<long> out;
  for (long m = 1; m <= 3; ++m) {
    if ((m * n) % smallest == 0) out.push_back(m * n);
  }
  return out;
}

OrbifoldBundleData lift(const ParabolicBundleSpec& spec, long gamma) {
  const long n = level(spec);
  const long suggested = smallest_admissible_gamma(spec);
  if (gamma < 1 || gamma % n != 0) {
    throw InadmissibleGammaError(gamma, suggested, "not a positive multiple of the level " + std::to_string(n));
  }
  const Rational d = parabolic_degree(spec) * gamma;
  if (!is_integral(d)) throw InadmissibleGammaError(gamma, suggested, "scaled degree " + to_string(d) + " is not an integer");

  OrbifoldBundleData orb;
  orb.rank = spec.rank();
  orb.gamma = gamma;
  orb.degree = d.get_num();
  const HNData hn = resolve_hn(spec);
  for (const auto& piece : hn.pieces()) {
    const Rational scaled = piece.degree * gamma;
    if (!is_integral(scaled)) {
      throw InadmissibleGammaError(gamma, suggested, "scaled HN degree " + to_string(scaled) + " is not an integer");
    }
    orb.pieces.push_back({piece.rank, scaled.get_num()});
  }
  return orb;
}

NumericalClass quotient_class(const OrbifoldBundleData& orb) {
  if (orb.semistable()) throw std::logic_error("quotient_class: bundle is semistable");
  const OrbifoldPiece& first = orb.pieces.front();
  return NumericalClass(orb.ring(), orb.rank - first.rank, 1, Rational(first.degree - orb.degree));
}

Cone2D fulton_eff_lower(const OrbifoldBundleData& orb, int k) {
  require_k(orb, k);
  return Cone2D(ConeSide::lower, tilted_generator(orb, k), NumericalClass::fiber_monomial(orb.ring(), orb.rank - k));
}

Cone2D miyaoka_nef(const OrbifoldBundleData& orb) {
  const RingContext ring = orb.ring();
  return Cone2D(ConeSide::upper, NumericalClass(ring, 1, 1, -orb.pieces.front().slope()),
                NumericalClass::fiber_monomial(ring, 1));
}

bool CrossCheckReport::passed() const {
  if (!gamma_independent || per_gamma.empty()) return false;
  for (const auto& g : per_gamma) {
    if (!g.passed()) return false;
  }
  return true;
}

std::vector<std::string> CrossCheckReport::mismatches() const {
  std::vector<std::string> out;
  for (const auto& g : per_gamma) {
    const std::string where = "k=" + std::to_string(k) + " gamma=" + std::to_string(g.gamma) + ": ";
    if (!g.eff_match) {
      out.push_back(where + "Eff pushed forward " + describe(g.pushed_eff) + " vs closed form " + describe(expected_eff));
    }
    if (!g.nef_match) out.push_back(where + "pulled-back Nef differs from cover Nef " + describe(g.cover_nef));
    if (!g.miyaoka_match) out.push_back(where + "pulled-back Nef^1 differs from Miyaoka's cone");
  }
  if (!gamma_independent) out.push_back("k=" + std::to_string(k) + ": pushed-forward cones depend on gamma");
  return out;
}

CrossCheckReport cross_check(const ParabolicBundleSpec& spec, int k, const std::vector<long>& gammas) {
  std::vector<OrbifoldBundleData> lifts;
  for (long gamma : gammas) lifts.push_back(lift(spec, gamma));

  const ConeCalculator calc(spec);
  CrossCheckReport report{k, calc.eff_lower(k), calc.nef_upper(k), {}, true};
  const std::optional<Cone2D> nef_1 = k == 1 ? std::optional<Cone2D>(calc.nef_1()) : std::nullopt;

  for (const auto& orb : lifts) {
    const CoverContext cover(calc.context(), orb.gamma);
    const Cone2D cover_eff = fulton_eff_lower(orb, k);
    const Cone2D pushed(ConeSide::lower, pushforward_from_cover(cover, cover_eff.rays()[0]),
                        pushforward_from_cover(cover, cover_eff.rays()[1]));
    const Cone2D cover_nef = dual_cone(cover_eff);
    const Cone2D pulled(ConeSide::upper, pullback_to_cover(cover, report.expected_nef.rays()[0]),
                        pullback_to_cover(cover, report.expected_nef.rays()[1]));

    GammaCheck check{orb.gamma, pushed, cover_nef, pushed == report.expected_eff, pulled == cover_nef, true};
    if (nef_1) {
      const Cone2D pulled_1(ConeSide::upper, pullback_to_cover(cover, nef_1->rays()[0]),
                            pullback_to_cover(cover, nef_1->rays()[1]));
      check.miyaoka_match = pulled_1 == miyaoka_nef(orb);
    }
    if (!report.per_gamma.empty() && !(report.per_gamma.front().pushed_eff == pushed)) {
      report.gamma_independent = false;
    }
    report.per_gamma.push_back(std::move(check));
  }
  return report;
}

}  // namespace parcone
