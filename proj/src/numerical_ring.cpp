#include "parcone/numerical_ring.hpp"

#include <sstream>

namespace parcone {

namespace {

void require_same_context(const NumericalClass& a, const NumericalClass& b, const char* op) {
  if (!(a.context() == b.context())) throw RingError(std::string(op) + ": classes live in different rings");
}

void append_term(std::ostringstream& out, const Rational& coeff, const std::string& monomial) {
  if (coeff == 0) return;
  const bool first = out.tellp() == 0;
  Rational magnitude = abs(coeff);
  if (coeff < 0) out << (first ? "-" : " - ");
  else if (!first) out << " + ";
  if (monomial.empty()) {
    out << to_string(magnitude);
  } else {
    if (magnitude != 1) out << to_string(magnitude) << ' ';
    out << monomial;
  }
}

}  // namespace

RingContext RingContext::of(const ParabolicBundleSpec& spec) {
  return RingContext{spec.rank(), parcone::level(spec), parabolic_degree(spec)};
}

NumericalClass::NumericalClass(RingContext ctx, int grade, Reading reading)
    : NumericalClass(std::move(ctx), grade, 0, 0, reading) {}

NumericalClass::NumericalClass(RingContext ctx, int grade, Rational xi_coeff, Rational fiber_coeff,
                               Reading reading)
    : ctx_(std::move(ctx)), grade_(grade), reading_(reading), coeffs_{std::move(xi_coeff), std::move(fiber_coeff)} {
  if (grade_ < 0 || grade_ > ctx_.rank) {
    throw RingError("grade " + std::to_string(grade_) + " outside [0, " + std::to_string(ctx_.rank) + "]");
  }
  if (grade_ == 0 && coeffs_[1] != 0) throw RingError("grade 0 has no fibre monomial");
}

NumericalClass NumericalClass::xi_power(const RingContext& ctx, int exponent) {
  return NumericalClass(ctx, exponent, 1, 0);
}

NumericalClass NumericalClass::fiber_monomial(const RingContext& ctx, int grade) {
  if (grade < 1) throw RingError("xi^{g-1} L needs grade >= 1");
  return NumericalClass(ctx, grade, 0, 1);
}

Rational NumericalClass::coefficient(int xi_exponent, int fiber_exponent) const {
  if (fiber_exponent == 0 && xi_exponent == grade_) return coeffs_[0];
  if (fiber_exponent == 1 && xi_exponent + 1 == grade_) return coeffs_[1];
  return 0;
}

NumericalClass NumericalClass::with_reading(Reading r) const {
  NumericalClass out = *this;
  out.reading_ = r;
  return out;
}

NumericalClass& NumericalClass::operator+=(const NumericalClass& other) {
  require_same_context(*this, other, "add");
  if (grade_ != other.grade_) throw RingError("add: classes are of different grades");
  coeffs_[0] += other.coeffs_[0];
  coeffs_[1] += other.coeffs_[1];
  return *this;
}

NumericalClass& NumericalClass::operator-=(const NumericalClass& other) {
  require_same_context(*this, other, "subtract");
  if (grade_ != other.grade_) throw RingError("subtract: classes are of different grades");
  coeffs_[0] -= other.coeffs_[0];
  coeffs_[1] -= other.coeffs_[1];
  return *this;
}

NumericalClass& NumericalClass::operator*=(const Rational& s) {
  coeffs_[0] *= s;
  coeffs_[1] *= s;
  return *this;
}

bool operator==(const NumericalClass& a, const NumericalClass& b) {
  return a.ctx_ == b.ctx_ && a.grade_ == b.grade_ && a.coeffs_ == b.coeffs_;
}

std::string to_string(const NumericalClass& c, std::string_view xi, std::string_view fiber) {
  auto xi_pow = [&](int e) -> std::string {
    if (e == 0) return "";
    if (e == 1) return std::string(xi);
    return std::string(xi) + "^" + std::to_string(e);
  };
  std::ostringstream out;
  append_term(out, c.xi_coeff(), xi_pow(c.grade()));
  if (c.grade() >= 1) {
    std::string mono = xi_pow(c.grade() - 1);
    mono += mono.empty() ? std::string(fiber) : "*" + std::string(fiber);
    append_term(out, c.fiber_coeff(), mono);
  }
  if (out.tellp() == 0) return "0";
  return out.str();
}

NumericalClass multiply(const NumericalClass& a, const NumericalClass& b) {
  require_same_context(a, b, "multiply");
  const int grade = a.grade() + b.grade();
  if (grade > a.context().rank) {
    throw RingError("multiply: grade " + std::to_string(grade) + " exceeds the top grade " +
                    std::to_string(a.context().rank));
  }
  if (a.reading() == Reading::cycle && b.reading() == Reading::cycle) {
    throw RingError("multiply: cannot intersect two cycle classes");
  }
  const Reading reading =
      (a.reading() == Reading::cycle || b.reading() == Reading::cycle) ? Reading::cycle : Reading::cocycle;
  // The L * L cross term vanishes.
  return NumericalClass(a.context(), grade, a.xi_coeff() * b.xi_coeff(),
                        a.xi_coeff() * b.fiber_coeff() + a.fiber_coeff() * b.xi_coeff(), reading);
}

NumericalClass power(const NumericalClass& a, int exponent) {
  if (exponent < 0) throw RingError("power: negative exponent");
  NumericalClass out(a.context(), 0, 1, 0, a.reading());
  for (int i = 0; i < exponent; ++i) out = multiply(out, a);
  return out;
}

Rational degree_of_top(const NumericalClass& c) {
  const auto& ctx = c.context();
  if (c.grade() != ctx.rank) {
    throw RingError("degree_of_top: grade " + std::to_string(c.grade()) + " is not the top grade " +
                    std::to_string(ctx.rank));
  }
  const Rational n = ctx.level;
  return c.xi_coeff() * power(n, ctx.rank) * ctx.degree + c.fiber_coeff() * power(n, ctx.rank - 1);
}

Rational pair(const NumericalClass& upper, const NumericalClass& lower) {
  require_same_context(upper, lower, "pair");
  if (upper.grade() + lower.grade() != upper.context().rank) {
    throw RingError("pair: grades " + std::to_string(upper.grade()) + " and " + std::to_string(lower.grade()) +
                    " do not sum to the rank");
  }
  return degree_of_top(multiply(upper.with_reading(Reading::cocycle), lower.with_reading(Reading::cocycle)));
}

NumericalClass cyclify(const NumericalClass& c) { return c.with_reading(Reading::cycle); }

CoverContext::CoverContext(RingContext base, long gamma)
    : base_(std::move(base)), gamma_(gamma), cover_{base_.rank, 1, base_.degree * gamma} {
  if (gamma_ < 1 || gamma_ % base_.level != 0) {
    throw RingError("cover order " + std::to_string(gamma_) + " is not a positive multiple of the level " +
                    std::to_string(base_.level));
  }
}

NumericalClass pullback_to_cover(const CoverContext& cover, const NumericalClass& c) {
  if (!(c.context() == cover.base())) throw RingError("pullback: class is not on the base of this cover");
  const int g = c.grade();
  const Rational n = cover.base().level;
  const Rational gamma = cover.gamma();
  // xi^g -> N^g xi~^g ;  xi^{g-1} L -> N^{g-1} gamma xi~^{g-1} L~
  Rational fiber = 0;
  if (g >= 1) fiber = c.fiber_coeff() * power(n, g - 1) * gamma;
  return NumericalClass(cover.cover_ring(), g, c.xi_coeff() * power(n, g), fiber, c.reading());
}

NumericalClass pushforward_from_cover(const CoverContext& cover, const NumericalClass& c) {
  if (!(c.context() == cover.cover_ring())) throw RingError("pushforward: class is not on this cover");
  const int j = c.grade();
  const Rational n = cover.base().level;
  const Rational gamma = cover.gamma();
  Rational fiber = 0;
  if (j >= 1) fiber = c.fiber_coeff() / power(n, j - 1);
  return NumericalClass(cover.base(), j, c.xi_coeff() * gamma / power(n, j), fiber, c.reading());
}

}  // namespace parcone
