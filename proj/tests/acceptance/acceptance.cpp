// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "../support/bundle_generators.hpp"
#include "parcone/corpus.hpp"
#include "parcone/orbifold_oracle.hpp"
#include "parcone/report.hpp"

using namespace parcone;
using namespace parcone::testing;

namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = PARCONE_FIXTURE_DIR;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

#define EXPECT(out, cond, why)        \
  do {                                \
    if (!(cond)) (out).fail(why);     \
  } while (0)

Cone2D upper(const RingContext& c, int g, const Rational& xi, const Rational& fiber) {
  return Cone2D(ConeSide::upper, NumericalClass(c, g, xi, fiber), NumericalClass::fiber_monomial(c, g));
}
Cone2D lower(const RingContext& c, int g, const Rational& xi, const Rational& fiber) {
  return Cone2D(ConeSide::lower, NumericalClass(c, g, xi, fiber), NumericalClass::fiber_monomial(c, g));
}

std::vector<ParabolicBundleSpec> shipped_specs() {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(kFixtures / "corpus")) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<ParabolicBundleSpec> out;
  for (const auto& f : files) out.push_back(to_spec(load_document(f)));
  return out;
}

Outcome degree_formula() {
  Outcome out;
  Rng rng(1001);
  int n = 0;
  for (; n < 250; ++n) {
    const auto spec = n % 4 == 3 ? random_explicit_hn(rng, 1) : random_split(rng);
    Rational finite = spec.degree();
    for (const auto& p : spec.points()) {
      for (const auto& w : p.weights) finite += w.alpha * w.multiplicity;
    }
    EXPECT(out, parabolic_degree_by_integral(spec) == finite, "integral form differs on bundle " + std::to_string(n));
  }
  out.detail = out.ok ? std::to_string(n) + " bundles, exact agreement" : out.detail;
  return out;
}

Outcome ring_relations() {
  Outcome out;
  Rng rng(1002);
  int contexts = 0;
  for (; contexts < 300; ++contexts) {
    const RingContext ctx = contexts < 200 ? random_context(rng) : RingContext::of(random_split(rng));
    const int r = ctx.rank;
    const Rational n = ctx.level;
    EXPECT(out, degree_of_top(NumericalClass::fiber_monomial(ctx, r)) == power(n, r - 1), "xi^{r-1} L");
    EXPECT(out, degree_of_top(NumericalClass::xi_power(ctx, r)) == power(n, r) * ctx.degree, "xi^r");
    if (r >= 2) {
      const auto l = NumericalClass::fiber_monomial(ctx, 1);
      EXPECT(out, multiply(l, l).is_zero(), "L^2");
    }
    for (int k = 0; k <= r; ++k) {
      const std::array<NumericalClass, 2> up{NumericalClass::xi_power(ctx, k),
                                             k >= 1 ? NumericalClass::fiber_monomial(ctx, k) : NumericalClass(ctx, k)};
      const std::array<NumericalClass, 2> down{NumericalClass::xi_power(ctx, r - k),
                                               r - k >= 1 ? NumericalClass::fiber_monomial(ctx, r - k)
                                                          : NumericalClass(ctx, r - k)};
      if (k == 0 || k == r) {
        // One-dimensional end slices: xi^0 against the top class.
        const auto& top = k == 0 ? down : up;
        EXPECT(out, degree_of_top(top[1]) != 0, "end pairing degenerate");
        continue;
      }
      const Rational det = pair(up[0], down[0]) * pair(up[1], down[1]) - pair(up[0], down[1]) * pair(up[1], down[0]);
      EXPECT(out, det == -power(n, 2 * r - 2), "pairing determinant");
    }
  }
  if (out.ok) out.detail = std::to_string(contexts) + " contexts, all relations exact, pairings nondegenerate";
  return out;
}

Outcome cover_laws() {
  Outcome out;
  Rng rng(1003);
  int checks = 0;
  for (int i = 0; i < 150; ++i) {
    const RingContext ctx = i % 2 ? random_context(rng) : RingContext::of(random_split(rng));
    const Rational n = ctx.level;
    for (long m = 1; m <= 3; ++m) {
      const long gamma = m * ctx.level;
      const CoverContext cover(ctx, gamma);
      for (int g = 0; g <= ctx.rank; ++g) {
        const auto c = random_class(rng, ctx, g);
        EXPECT(out, pushforward_from_cover(cover, pullback_to_cover(cover, c)) == Rational(gamma) * c, "p_* p^*");
        const auto xi = NumericalClass::xi_power(cover.cover_ring(), g);
        EXPECT(out, pushforward_from_cover(cover, xi) == (Rational(gamma) / power(n, g)) * NumericalClass::xi_power(ctx, g),
               "xi~^j scaling");
        if (g >= 1) {
          const auto fl = NumericalClass::fiber_monomial(cover.cover_ring(), g);
          EXPECT(out, pushforward_from_cover(cover, fl) == (1 / power(n, g - 1)) * NumericalClass::fiber_monomial(ctx, g),
                 "xi~^{j-1} L~ scaling");
        }
        ++checks;
      }
    }
  }
  if (out.ok) out.detail = std::to_string(checks) + " class checks over gamma in {N, 2N, 3N}";
  return out;
}

Outcome duality() {
  Outcome out;
  Rng rng(1004);
  int cones = 0;
  for (int i = 0; i < 300; ++i) {
    const auto spec = i % 3 == 2 ? random_explicit_hn(rng) : random_split(rng, 2);
    const RingContext ctx = RingContext::of(spec);
    const auto nu = reference_nu(resolve_hn(spec), ctx.level);
    const ConeCalculator calc(spec);
    for (int k = 1; k < ctx.rank; ++k) {
      const Rational nu_k = nu[static_cast<std::size_t>(k - 1)];
      const Cone2D eff = lower(ctx, ctx.rank - k, 1, nu_k);
      const Cone2D nef = upper(ctx, k, 1, -(ctx.level * ctx.degree + nu_k));
      const auto ref = reference_dual(ctx, k, eff.rays());
      EXPECT(out, Cone2D(ConeSide::upper, ref[0], ref[1]) == nef, "pairing-matrix dual differs from closed form");
      EXPECT(out, dual_cone(eff) == nef, "dual_cone differs from closed form");
      EXPECT(out, calc.nef_upper(k) == nef && calc.eff_lower(k) == eff, "calculator differs from closed form");
      ++cones;
    }
  }
  if (out.ok) out.detail = std::to_string(cones) + " (bundle, k) pairs, exact equality";
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  Rng rng(1005);
  int bundles = 0, runs = 0;
  for (; bundles < 120; ++bundles) {
    const auto spec = bundles % 2 ? random_semistable_split(rng, 2) : random_split(rng, 2);
    const long n = level(spec);
    const std::vector<long> gammas{n, 2 * n, 3 * n};
    for (int k = 1; k < spec.rank(); ++k) {
      const auto report = cross_check(spec, k, gammas);
      if (!report.passed()) out.fail(report.mismatches().front());
      EXPECT(out, report.gamma_independent, "gamma dependence");
      EXPECT(out, report.per_gamma.size() == 3, "fewer than 3 gammas");
      ++runs;
    }
  }
  if (out.ok) out.detail = std::to_string(bundles) + " split bundles, " + std::to_string(runs) + " k-runs x 3 gammas";
  return out;
}

Outcome presentation_consistency() {
  Outcome out;
  Rng rng(1006);
  std::vector<ParabolicBundleSpec> specs = shipped_specs();
  for (int i = 0; i < 150; ++i) specs.push_back(random_unstable_split(rng));
  int unstable = 0, products = 0;
  for (const auto& spec : specs) {
    const ConeCalculator calc(spec);
    const RingContext& ctx = calc.context();
    if (ctx.rank >= 2) EXPECT(out, calc.nef_1() == calc.nef_upper(1), "Nef^1 differs from Nef^k at k = 1");
    if (calc.hn().semistable()) continue;
    ++unstable;
    const HNPiece& first = calc.hn()[0];
    const auto xi = NumericalClass::xi_power(ctx, 1);
    const auto fiber = NumericalClass::fiber_monomial(ctx, 1);
    const NumericalClass delta(ctx, ctx.rank - first.rank, 1, (first.degree - ctx.degree) * ctx.level);
    for (int k = 1; k <= first.rank && k < ctx.rank; ++k) {
      const auto product = multiply(delta, power(xi - (first.slope() * ctx.level) * fiber, first.rank - k));
      EXPECT(out, positive_multiple(product, calc.eff_lower(k).rays()[0]), "delta product differs from nu form");
      ++products;
    }
  }
  if (out.ok) {
    out.detail = std::to_string(unstable) + " unstable bundles, " + std::to_string(products) + " delta products";
  }
  return out;
}

Outcome semistability_theorem() {
  Outcome out;
  Rng rng(1007);
  int semistable = 0, unstable = 0, disagreements = 0;
  std::vector<ParabolicBundleSpec> specs;
  for (int i = 0; i < 80; ++i) specs.push_back(random_semistable_split(rng));
  for (int i = 0; i < 80; ++i) specs.push_back(random_unstable_split(rng));
  for (int i = 0; i < 40; ++i) specs.push_back(random_explicit_hn(rng, 1));
  for (const auto& spec : specs) {
    const ConeCalculator calc(spec);
    bool all_homogeneous = true;
    for (int k = 1; k < spec.rank(); ++k) {
      const Cone2D nef = calc.nef_upper(k);
      const Cone2D eff = calc.eff_upper(k);
      EXPECT(out, cone_contains(eff, nef), "Nef^k not inside Eff^k");
      all_homogeneous = all_homogeneous && eff == nef;
    }
    const bool hn_one = resolve_hn(spec).length() == 1;
    (hn_one ? semistable : unstable)++;
    if (hn_one != all_homogeneous || !calc.semistability().agree()) ++disagreements;
  }
  EXPECT(out, semistable >= 50 && unstable >= 50, "corpus too small");
  EXPECT(out, disagreements == 0, std::to_string(disagreements) + " disagreements");
  if (out.ok) {
    out.detail = std::to_string(semistable) + " semistable, " + std::to_string(unstable) + " unstable, 0 disagreements";
  }
  return out;
}

Outcome classical_degeneration() {
  Outcome out;
  Rng rng(1008);
  int bundles = 0;
  for (; bundles < 120; ++bundles) {
    const int rank = static_cast<int>(rng.integer(2, 8));
    std::vector<LineSummand> summands;
    for (int i = 0; i < rank; ++i) summands.push_back(summand(rng.integer(-4, 4)));
    const auto spec = ParabolicBundleSpec::from_summands(std::move(summands));
    const ConeCalculator calc(spec);
    const RingContext& ctx = calc.context();
    EXPECT(out, ctx.level == 1, "level is not 1");
    const auto orb = lift(spec, 1);
    EXPECT(out, orb.ring() == ctx, "gamma = 1 cover ring differs");
    const Rational mu1 = calc.hn()[0].slope();
    EXPECT(out, calc.nef_1() == upper(ctx, 1, 1, -mu1), "Nef^1 is not <xi - mu1 L, L>");
    EXPECT(out, calc.nef_1() == miyaoka_nef(orb), "Nef^1 differs from Miyaoka's cone");
    for (int k = 1; k < rank; ++k) {
      EXPECT(out, calc.eff_lower(k) == fulton_eff_lower(orb, k), "Eff_k differs from Fulton's cone");
      EXPECT(out, calc.nef_upper(k) == dual_cone(fulton_eff_lower(orb, k)), "Nef^k differs from dual of Fulton");
    }
  }
  if (out.ok) out.detail = std::to_string(bundles) + " bundles with empty parabolic divisor";
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome worked_fixtures() {
  Outcome out;
  auto report = [](const char* name) { return run_report(load_document(kFixtures / "corpus" / (std::string(name) + ".json"))); };

  const auto a = report("example_A");
  const RingContext ca{2, 2, 1};
  EXPECT(out, a.records.size() == 1, "A: record count");
  EXPECT(out, a.records[0].eff_lower == lower(ca, 1, 1, -1), "A: Eff_1");
  EXPECT(out, a.records[0].nef_upper == upper(ca, 1, 1, -1), "A: Nef^1");
  EXPECT(out, a.records[0].k_homogeneous && a.semistable.by_hn_length, "A: semistable");

  const auto b = report("example_B");
  const RingContext cb{2, 2, make_rational(3, 2)};
  EXPECT(out, b.nu == std::vector<Rational>{-2}, "B: nu");
  EXPECT(out, *b.nef_1 == upper(cb, 1, 1, -1), "B: Nef^1");
  EXPECT(out, b.records[0].eff_lower == lower(cb, 1, 1, -2), "B: Eff_1");
  EXPECT(out, b.records[0].eff_upper == upper(cb, 1, 1, -2), "B: Eff^1");
  EXPECT(out, !b.semistable.by_hn_length && !b.records[0].k_homogeneous, "B: unstable");

  const auto c = report("example_C");
  const RingContext cc{3, 2, make_rational(3, 2)};
  EXPECT(out, c.nu == (std::vector<Rational>{-3, -3}), "C: nu");
  EXPECT(out, *c.nef_1 == upper(cc, 1, 1, 0), "C: Nef^1");
  EXPECT(out, c.records[1].nef_upper == upper(cc, 2, 1, 0), "C: Nef^2");
  EXPECT(out, c.records[1].eff_lower == lower(cc, 1, 1, -3), "C: Eff_2");
  EXPECT(out, c.records[0].eff_lower == lower(cc, 2, 1, -3), "C: Eff_1");
  EXPECT(out, c.records[1].eff_upper == upper(cc, 2, 1, -3), "C: Eff^2");

  for (const char* name : {"example_A", "example_B", "example_C"}) {
    const std::string golden = slurp(kFixtures / "golden" / (std::string(name) + ".json"));
    EXPECT(out, report_to_json(report(name)).dump(2) + "\n" == golden, std::string(name) + ": golden file differs");
  }
  if (out.ok) out.detail = "examples A, B, C match listed cones and golden reports";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 degree-formula agreement", degree_formula},
      {"AC2 intersection-ring relations", ring_relations},
      {"AC3 pushforward/pullback laws", cover_laws},
      {"AC4 duality reproduction", duality},
      {"AC5 oracle equivalence", oracle_equivalence},
      {"AC6 presentation consistency", presentation_consistency},
      {"AC7 semistability theorem", semistability_theorem},
      {"AC8 classical degeneration", classical_degeneration},
      {"AC9 worked fixtures", worked_fixtures},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome result;
    try {
      result = run();
    } catch (const std::exception& e) {
      result.fail(std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    failures += result.ok ? 0 : 1;
    std::cout << (result.ok ? "PASS " : "FAIL ") << name << " (" << result.detail << "; " << static_cast<long>(ms)
              << " ms)\n";
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed\n" : std::to_string(failures) + " criteria failed\n");
  return failures == 0 ? 0 : 1;
}
