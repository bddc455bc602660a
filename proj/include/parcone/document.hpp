#pragma once

// On-disk bundle documents (JSON, schema_version 1). Rationals are always
// integer num/den pairs.
//
//   {
//     "schema_version": 1,
//     "name": "example_B",
//     "genus": 0,                                   // optional, metadata only
//     "rank": 2,
//     "degree": 1,
//     "points": [{"label": "x",
//                 "weights": [{"num": 0, "den": 1, "mult": 1},
//                             {"num": 1, "den": 2, "mult": 1}]}],
//     "split": [{"degree": 0, "weights": [{"point": "x", "num": 1, "den": 2}]},
//               {"degree": 1, "weights": []}]
//     // or instead of "split":
//     // "hn": [{"rank": 1, "deg_num": 1, "deg_den": 2}, ...]
//   }

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "parcone/parabolic_model.hpp"

namespace parcone {

inline constexpr int kSchemaVersion = 1;

/// Every problem found in a document: syntax, schema, and bundle invariants.
class DocumentError : public std::runtime_error {
 public:
  explicit DocumentError(std::vector<std::string> issues);
  const std::vector<std::string>& issues() const noexcept { return issues_; }

 private:
  std::vector<std::string> issues_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BundleDocument {
  int schema_version = kSchemaVersion;
  std::string name;
  std::optional<int> genus;
  BundleData bundle;
  std::vector<std::string> warnings;
};

/// With `strict`, warnings are reported as errors.
BundleDocument parse_document(std::string_view text, bool strict = false);
BundleDocument load_document(const std::filesystem::path& path, bool strict = false);

nlohmann::ordered_json document_to_json(const BundleDocument& doc);
ParabolicBundleSpec to_spec(const BundleDocument& doc);

/// {"num": n, "den": d}; components outside the long range are written as strings.
nlohmann::ordered_json rational_to_json(const Rational& q);

}  // namespace parcone
