#include "parcone/report.hpp"

#include <sstream>

namespace parcone {

using nlohmann::ordered_json;

namespace {

ordered_json cone_to_json(const Cone2D& cone) {
  ordered_json out;
  out["side"] = to_string(cone.side());
  out["grade"] = cone.grade();
  out["generators"] = ordered_json::array({class_to_json(cone.rays()[0]), class_to_json(cone.rays()[1])});
  return out;
}

std::string cone_text(const Cone2D& cone) {
  return "<" + to_string(cone.rays()[0]) + ", " + to_string(cone.rays()[1]) + ">";
}

std::vector<int> selected_ks(int rank, const std::vector<int>& requested) {
  std::vector<int> ks;
  if (requested.empty()) {
    for (int k = 1; k < rank; ++k) ks.push_back(k);
    return ks;
  }
  for (int k : requested) {
    if (k < 1 || k > rank - 1) {
      throw std::out_of_range("k = " + std::to_string(k) + " outside [1, " + std::to_string(rank - 1) + "]");
    }
    if (std::find(ks.begin(), ks.end(), k) == ks.end()) ks.push_back(k);
  }
  std::sort(ks.begin(), ks.end());
  return ks;
}

}  // namespace

bool OracleSection::passed() const {
  for (const auto& c : checks) {
    if (!c.passed()) return false;
  }
  return true;
}

ConeReport run_report(const BundleDocument& doc, const ReportOptions& opts) {
  const ParabolicBundleSpec spec = to_spec(doc);
  const ConeCalculator calc(spec);
  const std::vector<int> ks = selected_ks(spec.rank(), opts.ks);

  ConeReport report;
  report.name = doc.name;
  report.rank = spec.rank();
  report.level = calc.context().level;
  report.parabolic_degree = calc.context().degree;
  report.hn = calc.hn();
  report.nu = calc.nu().values();
  report.warnings = doc.warnings;
  if (spec.rank() >= 2) report.nef_1 = calc.nef_1();
  for (int k : ks) {
    report.records.push_back({k, calc.eff_lower(k), calc.nef_upper(k), calc.eff_upper(k), calc.is_k_homogeneous(k)});
  }
  report.semistable = calc.semistability();

  if (opts.check_oracle) {
    OracleSection oracle;
    oracle.gammas = opts.gammas.empty() ? default_gammas(spec) : opts.gammas;
    for (long gamma : oracle.gammas) lift(spec, gamma);  // reject bad gammas even when there is no k
    for (int k : ks) oracle.checks.push_back(cross_check(spec, k, oracle.gammas));
    report.oracle = std::move(oracle);
  }
  return report;
}

ordered_json class_to_json(const NumericalClass& c) {
  ordered_json terms = ordered_json::array();
  auto add = [&](int a, int b, const Rational& q) {
    if (q == 0) return;
    ordered_json t{{"xi", a}, {"L", b}};
    t.update(rational_to_json(q));
    terms.push_back(std::move(t));
  };
  add(c.grade(), 0, c.xi_coeff());
  if (c.grade() >= 1) add(c.grade() - 1, 1, c.fiber_coeff());
  return terms;
}

ordered_json report_to_json(const ConeReport& report) {
  ordered_json out;
  out["schema_version"] = kSchemaVersion;
  out["name"] = report.name;
  out["rank"] = report.rank;
  out["level"] = report.level;
  out["parabolic_degree"] = rational_to_json(report.parabolic_degree);

  ordered_json hn = ordered_json::array();
  for (const auto& piece : report.hn.pieces()) {
    hn.push_back({{"rank", piece.rank}, {"degree", rational_to_json(piece.degree)},
                  {"slope", rational_to_json(piece.slope())}});
  }
  out["hn"] = std::move(hn);

  ordered_json nu = ordered_json::array();
  for (std::size_t i = 0; i < report.nu.size(); ++i) {
    nu.push_back({{"k", i + 1}, {"value", rational_to_json(report.nu[i])}});
  }
  out["nu"] = std::move(nu);
  out["nef_1"] = report.nef_1 ? cone_to_json(*report.nef_1) : ordered_json(nullptr);

  ordered_json records = ordered_json::array();
  for (const auto& rec : report.records) {
    records.push_back({{"k", rec.k},
                       {"eff_lower", cone_to_json(rec.eff_lower)},
                       {"nef_upper", cone_to_json(rec.nef_upper)},
                       {"eff_upper", cone_to_json(rec.eff_upper)},
                       {"k_homogeneous", rec.k_homogeneous}});
  }
  out["k_records"] = std::move(records);
  out["semistable"] = {{"by_hn_length", report.semistable.by_hn_length},
                       {"by_homogeneity", report.semistable.by_homogeneity}};

  if (report.oracle) {
    ordered_json checks = ordered_json::array();
    for (const auto& check : report.oracle->checks) {
      ordered_json per_gamma = ordered_json::array();
      for (const auto& g : check.per_gamma) {
        per_gamma.push_back({{"gamma", g.gamma},
                             {"eff_match", g.eff_match},
                             {"nef_match", g.nef_match},
                             {"miyaoka_match", g.miyaoka_match},
                             {"pushed_eff", cone_to_json(g.pushed_eff)},
                             {"cover_nef", cone_to_json(g.cover_nef)}});
      }
      checks.push_back({{"k", check.k},
                        {"passed", check.passed()},
                        {"gamma_independent", check.gamma_independent},
                        {"per_gamma", std::move(per_gamma)},
                        {"mismatches", check.mismatches()}});
    }
    out["oracle"] = {{"gammas", report.oracle->gammas}, {"passed", report.oracle->passed()}, {"checks", std::move(checks)}};
  }
  out["warnings"] = report.warnings;
  return out;
}

std::string report_to_text(const ConeReport& report) {
  std::ostringstream os;
  os << "bundle " << report.name << "\n";
  os << "  rank " << report.rank << ", level N = " << report.level
     << ", par-deg = " << to_string(report.parabolic_degree) << "\n";
  os << "  HN pieces (rank, degree, slope):";
  for (const auto& piece : report.hn.pieces()) {
    os << " (" << piece.rank << ", " << to_string(piece.degree) << ", " << to_string(piece.slope()) << ")";
  }
  os << "\n";
  if (!report.nu.empty()) {
    os << "  nu:";
    for (std::size_t i = 0; i < report.nu.size(); ++i) os << " nu_" << i + 1 << " = " << to_string(report.nu[i]) << ";";
    os << "\n";
  }
  if (report.nef_1) os << "  Nef^1 = " << cone_text(*report.nef_1) << "\n";
  for (const auto& rec : report.records) {
    os << "  k = " << rec.k << "\n";
    os << "    Eff_" << rec.k << " = " << cone_text(rec.eff_lower) << "\n";
    os << "    Nef^" << rec.k << " = " << cone_text(rec.nef_upper) << "\n";
    os << "    Eff^" << rec.k << " = " << cone_text(rec.eff_upper) << "\n";
    os << "    k-homogeneous: " << (rec.k_homogeneous ? "yes" : "no") << "\n";
  }
  os << "  semistable: " << (report.semistable.by_hn_length ? "yes" : "no")
     << " (HN length: " << (report.semistable.by_hn_length ? "yes" : "no")
     << ", homogeneity: " << (report.semistable.by_homogeneity ? "yes" : "no") << ")\n";
  if (report.oracle) {
    os << "  oracle over gammas";
    for (long g : report.oracle->gammas) os << " " << g;
    os << ": " << (report.oracle->passed() ? "pass" : "FAIL") << "\n";
    for (const auto& check : report.oracle->checks) {
      os << "    k = " << check.k << ":";
      for (const auto& g : check.per_gamma) os << " gamma " << g.gamma << (g.passed() ? " ok" : " mismatch") << ";";
      os << (check.gamma_independent ? " gamma-independent" : " gamma-dependent") << "\n";
      for (const auto& m : check.mismatches()) os << "      " << m << "\n";
    }
  }
  for (const auto& w : report.warnings) os << "  warning: " << w << "\n";
  return os.str();
}

}  // namespace parcone
