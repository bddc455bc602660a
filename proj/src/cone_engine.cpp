#include "parcone/cone_engine.hpp"

#include <algorithm>

namespace parcone {

namespace {

Reading reading_for(ConeSide side) { return side == ConeSide::upper ? Reading::cocycle : Reading::cycle; }

Rational determinant(const NumericalClass& a, const NumericalClass& b) {
  return a.xi_coeff() * b.fiber_coeff() - b.xi_coeff() * a.fiber_coeff();
}

bool descending(const NumericalClass& a, const NumericalClass& b) {
  if (a.xi_coeff() != b.xi_coeff()) return a.xi_coeff() > b.xi_coeff();
  return a.fiber_coeff() > b.fiber_coeff();
}

bool is_positive_multiple(const NumericalClass& a, const NumericalClass& b) {
  if (a.grade() != b.grade() || !(a.context() == b.context()) || a.is_zero() || b.is_zero()) return false;
  return determinant(a, b) == 0 && primitive(a) == primitive(b);
}

void require_comparable(const NumericalClass& c, const Cone2D& cone) {
  if (!(c.context() == cone.context()) || c.grade() != cone.grade()) {
    throw RingError("membership: class of grade " + std::to_string(c.grade()) + " tested against a grade " +
                    std::to_string(cone.grade()) + " cone");
  }
  if (c.reading() != reading_for(cone.side())) {
    throw RingError(std::string("membership: class reading does not match the ") + to_string(cone.side()) +
                    " cone side");
  }
}

}  // namespace

const char* to_string(ConeSide side) { return side == ConeSide::upper ? "upper" : "lower"; }

NumericalClass primitive(const NumericalClass& c) {
  if (c.is_zero()) throw RingError("primitive: zero class has no ray");
  const Integer den = lcm(Integer(c.xi_coeff().get_den()), Integer(c.fiber_coeff().get_den()));
  const Rational x = c.xi_coeff() * den;
  const Rational y = c.fiber_coeff() * den;
  const Integer g = gcd(Integer(x.get_num()), Integer(y.get_num()));
  const Rational scale = Rational(den) / Rational(g);
  return scale * c;
}

Cone2D::Cone2D(ConeSide side, NumericalClass first, NumericalClass second)
    : side_(side),
      rays_{primitive(first).with_reading(reading_for(side)), primitive(second).with_reading(reading_for(side))} {
  if (!(first.context() == second.context()) || first.grade() != second.grade()) {
    throw RingError("cone generators must share a ring and a grade");
  }
  if (determinant(rays_[0], rays_[1]) == 0) throw RingError("degenerate cone: proportional generators");
  if (descending(rays_[1], rays_[0])) std::swap(rays_[0], rays_[1]);
}

Cone2D::Coordinates Cone2D::coordinates(const NumericalClass& c) const {
  const auto& [g1, g2] = rays_;
  const Rational det = determinant(g1, g2);
  return {(c.xi_coeff() * g2.fiber_coeff() - g2.xi_coeff() * c.fiber_coeff()) / det,
          (g1.xi_coeff() * c.fiber_coeff() - c.xi_coeff() * g1.fiber_coeff()) / det};
}

bool operator==(const Cone2D& a, const Cone2D& b) {
  return a.side_ == b.side_ && a.rays_[0] == b.rays_[0] && a.rays_[1] == b.rays_[1];
}

bool membership(const NumericalClass& c, const Cone2D& cone) {
  require_comparable(c, cone);
  const auto xy = cone.coordinates(c);
  return xy.first >= 0 && xy.second >= 0;
}

bool interior_membership(const NumericalClass& c, const Cone2D& cone) {
  require_comparable(c, cone);
  const auto xy = cone.coordinates(c);
  return xy.first > 0 && xy.second > 0;
}

bool cone_equal(const Cone2D& a, const Cone2D& b) {
  if (a.side() != b.side() || a.grade() != b.grade() || !(a.context() == b.context())) {
    throw RingError("cone_equal: cones live in different slices");
  }
  return a == b;
}

bool cone_contains(const Cone2D& outer, const Cone2D& inner) {
  return membership(inner.rays()[0], outer) && membership(inner.rays()[1], outer);
}

Cone2D dual_cone(const Cone2D& c) {
  const auto& ctx = c.context();
  const int g = c.grade();
  if (g < 1 || g > ctx.rank - 1) throw RingError("dual_cone: grade must lie in [1, r-1]");
  const int h = ctx.rank - g;
  const NumericalClass e0 = NumericalClass::xi_power(ctx, h);
  const NumericalClass e1 = NumericalClass::fiber_monomial(ctx, h);

  // Each generator v becomes the linear form p -> pair(p, v) on the dual slice.
  std::array<std::array<Rational, 2>, 2> forms;
  for (std::size_t i = 0; i < 2; ++i) {
    forms[i] = {pair(e0, c.rays()[i]), pair(e1, c.rays()[i])};
  }
  auto kernel_ray = [&](std::size_t zero, std::size_t positive) {
    Rational x = forms[zero][1];
    Rational y = -forms[zero][0];
    if (x * forms[positive][0] + y * forms[positive][1] < 0) {
      x = -x;
      y = -y;
    }
    return NumericalClass(ctx, h, x, y);
  };
  const ConeSide side = c.side() == ConeSide::upper ? ConeSide::lower : ConeSide::upper;
  return Cone2D(side, kernel_ray(0, 1), kernel_ray(1, 0));
}

NuTable nu_table(const HNData& hn, long level) {
  const int r = hn.rank();
  if (r < 2) throw std::invalid_argument("nu_table: rank one has no proper cycle dimensions");
  std::vector<Rational> values(static_cast<std::size_t>(r - 1));
  std::vector<bool> seen(values.size(), false);
  const Rational n = level;
  for (std::size_t s = 0; s < hn.length(); ++s) {
    const int offset = hn.rank_through(s);
    const Rational dbar = hn.degree_after(s);
    for (int j = 1; j <= hn[s].rank; ++j) {
      if (s + 1 == hn.length() && j == hn[s].rank) continue;
      const auto idx = static_cast<std::size_t>(offset + j - 1);
      values[idx] = (j * hn[s].slope() - dbar) * n;
      seen[idx] = true;
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
    throw std::logic_error("nu_table: HN pieces do not cover every k");
  }
  return NuTable(std::move(values));
}

ConeCalculator::ConeCalculator(const ParabolicBundleSpec& spec)
    : ConeCalculator(RingContext::of(spec), resolve_hn(spec)) {}

ConeCalculator::ConeCalculator(RingContext ctx, HNData hn) : ctx_(std::move(ctx)), hn_(std::move(hn)) {
  hn_.check_totals(ctx_.rank, ctx_.degree);
  if (ctx_.rank >= 2) nu_ = nu_table(hn_, ctx_.level);
}

void ConeCalculator::require_k(int k) const {
  if (k < 1 || k > ctx_.rank - 1) {
    throw std::out_of_range("k = " + std::to_string(k) + " outside [1, " + std::to_string(ctx_.rank - 1) + "]");
  }
}

NumericalClass ConeCalculator::quotient_class() const {
  const int r1 = hn_[0].rank;
  if (r1 >= ctx_.rank) throw std::logic_error("quotient_class: bundle is semistable");
  return NumericalClass(ctx_, ctx_.rank - r1, 1, (hn_[0].degree - ctx_.degree) * ctx_.level);
}

NumericalClass ConeCalculator::eff_lower_tilted(int k) const {
  return NumericalClass(ctx_, ctx_.rank - k, 1, nu_(k), Reading::cycle);
}

Cone2D ConeCalculator::eff_lower(int k) const {
  require_k(k);
  const NumericalClass tilted = eff_lower_tilted(k);

  // The semistable and the first-quotient presentations must agree with nu_k.
  const Rational n = ctx_.level;
  const NumericalClass xi = NumericalClass::xi_power(ctx_, 1);
  const NumericalClass fiber = NumericalClass::fiber_monomial(ctx_, 1);
  if (hn_.semistable()) {
    const NumericalClass expected = power(xi - (hn_[0].slope() * n) * fiber, ctx_.rank - k);
    if (!(expected == tilted)) {
      throw std::logic_error("eff_lower: semistable form " + to_string(expected) + " disagrees with " +
                             to_string(tilted));
    }
  } else if (k <= hn_[0].rank) {
    const NumericalClass expected =
        multiply(quotient_class(), power(xi - (hn_[0].slope() * n) * fiber, hn_[0].rank - k));
    if (!is_positive_multiple(expected, tilted)) {
      throw std::logic_error("eff_lower: quotient-class form " + to_string(expected) + " disagrees with " +
                             to_string(tilted));
    }
  }
  return Cone2D(ConeSide::lower, tilted, NumericalClass::fiber_monomial(ctx_, ctx_.rank - k));
}

Cone2D ConeCalculator::nef_upper(int k) const {
  require_k(k);
  const Rational tilt = -(ctx_.level * ctx_.degree + nu_(k));
  Cone2D cone(ConeSide::upper, NumericalClass(ctx_, k, 1, tilt), NumericalClass::fiber_monomial(ctx_, k));
  if (!(cone == dual_cone(eff_lower(k)))) throw std::logic_error("nef_upper: closed form is not dual to Eff_k");
  return cone;
}

Cone2D ConeCalculator::eff_upper(int k) const {
  require_k(k);
  Cone2D cone(ConeSide::upper, NumericalClass(ctx_, k, 1, nu_(ctx_.rank - k)),
              NumericalClass::fiber_monomial(ctx_, k));
  const Cone2D lower = eff_lower(ctx_.rank - k);
  if (!(cone.rays()[0] == lower.rays()[0] && cone.rays()[1] == lower.rays()[1])) {
    throw std::logic_error("eff_upper: generators differ from Eff_{r-k}");
  }
  return cone;
}

Cone2D ConeCalculator::nef_1() const {
  const Rational n = hn_[0].slope() * ctx_.level;
  Cone2D cone(ConeSide::upper, NumericalClass(ctx_, 1, 1, -n), NumericalClass::fiber_monomial(ctx_, 1));
  if (ctx_.rank >= 2 && !(cone == nef_upper(1))) throw std::logic_error("nef_1: differs from Nef^1");
  return cone;
}

bool ConeCalculator::is_k_homogeneous(int k) const {
  const Cone2D eff = eff_upper(k);
  const Cone2D nef = nef_upper(k);
  if (!cone_contains(eff, nef)) throw std::logic_error("Nef^" + std::to_string(k) + " is not inside Eff^k");
  return eff == nef;
}

SemistabilityVerdict ConeCalculator::semistability() const {
  SemistabilityVerdict v;
  v.by_hn_length = hn_.semistable();
  v.by_homogeneity = true;
  for (int k = 1; k < ctx_.rank; ++k) v.by_homogeneity = is_k_homogeneous(k) && v.by_homogeneity;
  return v;
}

Cone2D eff_cone_lower(const ParabolicBundleSpec& spec, int k) { return ConeCalculator(spec).eff_lower(k); }
Cone2D nef_cone_upper(const ParabolicBundleSpec& spec, int k) { return ConeCalculator(spec).nef_upper(k); }
Cone2D eff_cone_upper(const ParabolicBundleSpec& spec, int k) { return ConeCalculator(spec).eff_upper(k); }
Cone2D nef_cone_1(const ParabolicBundleSpec& spec) { return ConeCalculator(spec).nef_1(); }
bool is_k_homogeneous(const ParabolicBundleSpec& spec, int k) { return ConeCalculator(spec).is_k_homogeneous(k); }
SemistabilityVerdict is_semistable(const ParabolicBundleSpec& spec) { return ConeCalculator(spec).semistability(); }

NumericalClass shift_from_subbundle(const NumericalClass& sub_class, const RingContext& target) {
  const int a = sub_class.grade();
  if (a > target.rank) throw RingError("shift_from_subbundle: grade exceeds the target rank");
  const Rational ratio = make_rational(sub_class.context().level, target.level);
  Rational fiber = 0;
  if (a >= 1) fiber = sub_class.fiber_coeff() * power(ratio, static_cast<unsigned>(a - 1));
  return NumericalClass(target, a, sub_class.xi_coeff() * power(ratio, static_cast<unsigned>(a)), fiber,
                        sub_class.reading());
}

}  // namespace parcone
