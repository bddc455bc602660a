#pragma once

// Seeded random bundle data for property tests. All generators are
// deterministic for a given seed.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "parcone/cone_engine.hpp"
#include "parcone/numerical_ring.hpp"
#include "parcone/parabolic_model.hpp"

namespace parcone::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  bool coin() { return integer(0, 1) == 1; }

  /// p/q with |p| <= bound * q and q in [1, max_den].
  Rational rational(long bound = 6, long max_den = 12) {
    const long q = integer(1, max_den);
    return make_rational(integer(-bound * q, bound * q), q);
  }

 private:
  std::mt19937_64 engine_;
};

inline std::string point_label(int i) { return "x" + std::to_string(i); }

/// Split bundle of rank in [min_rank, max_rank] with up to three points whose
/// weight denominators are at most 12.
inline ParabolicBundleSpec random_split(Rng& rng, int min_rank = 1, int max_rank = 8) {
  const int rank = static_cast<int>(rng.integer(min_rank, max_rank));
  const int npoints = static_cast<int>(rng.integer(0, 3));
  std::vector<long> dens;
  for (int p = 0; p < npoints; ++p) dens.push_back(rng.integer(1, 12));
  std::vector<LineSummand> summands(static_cast<std::size_t>(rank));
  for (auto& s : summands) {
    s.degree = rng.integer(-4, 4);
    for (int p = 0; p < npoints; ++p) {
      const long den = dens[static_cast<std::size_t>(p)];
      s.weights[point_label(p)] = make_rational(rng.integer(0, den - 1), den);
    }
  }
  return ParabolicBundleSpec::from_summands(std::move(summands));
}

/// Split bundle whose summands share one parabolic degree. All weights at all
/// points use a common denominator D <= 12; the last point absorbs the
/// fractional part so every summand lands on the same slope.
inline ParabolicBundleSpec random_semistable_split(Rng& rng, int min_rank = 1, int max_rank = 8) {
  const int rank = static_cast<int>(rng.integer(min_rank, max_rank));
  const int npoints = static_cast<int>(rng.integer(0, 3));
  const long den = rng.integer(1, 12);
  const long target_frac = rng.integer(0, den - 1);
  const long target_int = rng.integer(-3, 3);
  std::vector<LineSummand> summands(static_cast<std::size_t>(rank));
  for (auto& s : summands) {
    long numerator_sum = 0;
    for (int p = 0; p + 1 < npoints; ++p) {
      const long j = rng.integer(0, den - 1);
      numerator_sum += j;
      s.weights[point_label(p)] = make_rational(j, den);
    }
    if (npoints == 0) {
      s.degree = target_int;
      continue;
    }
    const long last = (((target_frac - numerator_sum) % den) + den) % den;
    s.weights[point_label(npoints - 1)] = make_rational(last, den);
    // weight sum = (numerator_sum + last) / den = target_frac / den + m
    const long m = (numerator_sum + last - target_frac) / den;
    s.degree = target_int - m;
  }
  return ParabolicBundleSpec::from_summands(std::move(summands));
}

inline ParabolicBundleSpec random_unstable_split(Rng& rng, int min_rank = 2, int max_rank = 8) {
  for (;;) {
    ParabolicBundleSpec spec = random_split(rng, std::max(min_rank, 2), max_rank);
    if (!hn_from_split(spec).semistable()) return spec;
  }
}

/// Same numerics as a random split bundle, but presented through explicit HN data.
inline ParabolicBundleSpec random_explicit_hn(Rng& rng, int min_rank = 2, int max_rank = 8) {
  const ParabolicBundleSpec split = random_split(rng, min_rank, max_rank);
  BundleData data = split.data();
  data.hn = hn_from_split(split);
  data.split.reset();
  return ParabolicBundleSpec(std::move(data));
}

inline RingContext random_context(Rng& rng, int min_rank = 1, int max_rank = 8) {
  return RingContext{static_cast<int>(rng.integer(min_rank, max_rank)), rng.integer(1, 12), rng.rational()};
}

inline NumericalClass random_class(Rng& rng, const RingContext& ctx, int grade) {
  const Rational fiber = grade == 0 ? Rational(0) : rng.rational();
  return NumericalClass(ctx, grade, rng.rational(), fiber);
}

/// a = lambda * b for some lambda > 0.
inline bool positive_multiple(const NumericalClass& a, const NumericalClass& b) {
  if (!(a.context() == b.context()) || a.grade() != b.grade() || a.is_zero() || b.is_zero()) return false;
  const Rational cross = a.xi_coeff() * b.fiber_coeff() - a.fiber_coeff() * b.xi_coeff();
  const Rational dot = a.xi_coeff() * b.xi_coeff() + a.fiber_coeff() * b.fiber_coeff();
  return cross == 0 && dot > 0;
}

inline LineSummand summand(long degree, std::map<std::string, Rational> weights = {}) {
  LineSummand s;
  s.degree = degree;
  s.weights = std::move(weights);
  return s;
}

// The three worked examples, all over a single point x.
inline ParabolicBundleSpec example_a() {
  return ParabolicBundleSpec::from_summands(
      {summand(0, {{"x", make_rational(1, 2)}}), summand(0, {{"x", make_rational(1, 2)}})});
}
inline ParabolicBundleSpec example_b() {
  return ParabolicBundleSpec::from_summands({summand(0, {{"x", make_rational(1, 2)}}), summand(1)});
}
inline ParabolicBundleSpec example_c() {
  return ParabolicBundleSpec::from_summands({summand(0), summand(0), summand(1, {{"x", make_rational(1, 2)}})});
}

/// Independent nu_k: walk the HN pieces, skipping the last index of the last piece.
inline std::vector<Rational> reference_nu(const HNData& hn, long level) {
  std::vector<Rational> out;
  Rational remaining = hn.degree();
  for (std::size_t s = 0; s < hn.length(); ++s) {
    const int last = s + 1 == hn.length() ? hn[s].rank - 1 : hn[s].rank;
    for (int j = 1; j <= last; ++j) out.push_back((j * hn[s].slope() - remaining) * level);
    remaining -= hn[s].degree;
  }
  return out;
}

/// Independent 2D dual: evaluate the pairing matrix directly and take kernel rays.
/// `lower_gens` are grade r-k classes; returns upper grade-k generators.
inline std::array<NumericalClass, 2> reference_dual(const RingContext& ctx, int k,
                                                    const std::array<NumericalClass, 2>& lower_gens) {
  const Rational n = ctx.level;
  const Rational top = power(n, static_cast<unsigned>(ctx.rank)) * ctx.degree;
  const Rational mixed = power(n, static_cast<unsigned>(ctx.rank - 1));
  // Upper (u0, u1) paired with lower (l0, l1): u0 l0 top + (u0 l1 + u1 l0) mixed.
  auto form = [&](const NumericalClass& l) {
    return std::array<Rational, 2>{l.xi_coeff() * top + l.fiber_coeff() * mixed, l.xi_coeff() * mixed};
  };
  std::array<NumericalClass, 2> out{NumericalClass(ctx, k), NumericalClass(ctx, k)};
  for (int i = 0; i < 2; ++i) {
    const auto f = form(lower_gens[static_cast<std::size_t>(i)]);
    const auto g = form(lower_gens[static_cast<std::size_t>(1 - i)]);
    NumericalClass v(ctx, k, -f[1], f[0]);
    if (g[0] * v.xi_coeff() + g[1] * v.fiber_coeff() < 0) v *= Rational(-1);
    out[static_cast<std::size_t>(i)] = v;
  }
  return out;
}

}  // namespace parcone::testing
