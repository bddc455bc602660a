#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "parcone/cone_engine.hpp"
#include "parcone/document.hpp"
#include "parcone/orbifold_oracle.hpp"

namespace parcone {

struct ReportOptions {
  std::vector<int> ks;        // empty: every k in [1, r-1]
  bool check_oracle = false;
  std::vector<long> gammas;   // empty: default_gammas
};

struct KRecord {
  int k = 0;
  Cone2D eff_lower;
  Cone2D nef_upper;
  Cone2D eff_upper;
  bool k_homogeneous = false;
};

struct OracleSection {
  std::vector<long> gammas;
  std::vector<CrossCheckReport> checks;

  bool passed() const;
};

struct ConeReport {
  std::string name;
  int rank = 1;
  long level = 1;
  Rational parabolic_degree;
  HNData hn;
  std::vector<Rational> nu;
  std::optional<Cone2D> nef_1;  // absent for rank one
  std::vector<KRecord> records;
  SemistabilityVerdict semistable;
  std::optional<OracleSection> oracle;
  std::vector<std::string> warnings;

  bool oracle_passed() const { return !oracle || oracle->passed(); }
};

/// Throws std::out_of_range for a requested k outside [1, r-1],
/// UnderdeterminedBundleError and InadmissibleGammaError.
ConeReport run_report(const BundleDocument& doc, const ReportOptions& opts = {});

/// Generators as [{"xi": a, "L": b, "num": p, "den": q}, ...], zero terms omitted.
nlohmann::ordered_json class_to_json(const NumericalClass& c);
nlohmann::ordered_json report_to_json(const ConeReport& report);
std::string report_to_text(const ConeReport& report);

}  // namespace parcone
