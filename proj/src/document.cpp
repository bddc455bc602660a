#include "parcone/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace parcone {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string join(const std::vector<std::string>& issues) {
  std::string out;
  for (const auto& s : issues) out += (out.empty() ? "" : "; ") + s;
  return out;
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

// Walks a parsed document, recording every schema problem under its field path.
class Reader {
 public:
  std::vector<std::string> errors;
  std::vector<std::string> warnings;

  void check_keys(const json& obj, const std::string& path, std::initializer_list<const char*> known) {
    std::set<std::string> allowed(known.begin(), known.end());
    for (const auto& [key, value] : obj.items()) {
      if (!allowed.count(key)) warnings.push_back(path + key + ": unknown field ignored");
    }
  }

  const json* field(const json& obj, const std::string& path, const char* key, bool required) {
    auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) errors.push_back(path + key + ": missing required field");
      return nullptr;
    }
    return &*it;
  }

  std::optional<long> integer(const json& obj, const std::string& path, const char* key, bool required = true) {
    const json* v = field(obj, path, key, required);
    if (!v) return std::nullopt;
    if (!v->is_number_integer()) {
      errors.push_back(path + key + ": expected an integer");
      return std::nullopt;
    }
    return v->get<long>();
  }

  std::optional<std::string> string(const json& obj, const std::string& path, const char* key, bool required = true) {
    const json* v = field(obj, path, key, required);
    if (!v) return std::nullopt;
    if (!v->is_string()) {
      errors.push_back(path + key + ": expected a string");
      return std::nullopt;
    }
    return v->get<std::string>();
  }

  const json* array(const json& obj, const std::string& path, const char* key, bool required = true) {
    const json* v = field(obj, path, key, required);
    if (v && !v->is_array()) {
      errors.push_back(path + key + ": expected an array");
      return nullptr;
    }
    return v;
  }

  bool object(const json& v, const std::string& path) {
    if (v.is_object()) return true;
    errors.push_back(path + ": expected an object");
    return false;
  }

  std::optional<Rational> rational(const json& obj, const std::string& path, const char* num_key, const char* den_key) {
    auto num = integer(obj, path, num_key);
    auto den = integer(obj, path, den_key);
    if (!num || !den) return std::nullopt;
    if (*den <= 0) {
      errors.push_back(path + den_key + ": denominator must be positive");
      return std::nullopt;
    }
    return make_rational(*num, *den);
  }
};

ParabolicPoint read_point(Reader& rd, const json& p, const std::string& path) {
  ParabolicPoint point;
  if (!rd.object(p, path)) return point;
  rd.check_keys(p, path + ".", {"label", "weights"});
  point.label = rd.string(p, path + ".", "label").value_or("");
  const json* weights = rd.array(p, path + ".", "weights");
  if (!weights) return point;
  for (std::size_t i = 0; i < weights->size(); ++i) {
    const std::string wpath = path + ".weights[" + std::to_string(i) + "]";
    const json& w = (*weights)[i];
    if (!rd.object(w, wpath)) continue;
    rd.check_keys(w, wpath + ".", {"num", "den", "mult"});
    auto alpha = rd.rational(w, wpath + ".", "num", "den");
    auto mult = rd.integer(w, wpath + ".", "mult");
    if (alpha && mult) point.weights.push_back({*alpha, static_cast<int>(*mult)});
  }
  return point;
}

LineSummand read_summand(Reader& rd, const json& s, const std::string& path) {
  LineSummand summand;
  if (!rd.object(s, path)) return summand;
  rd.check_keys(s, path + ".", {"degree", "weights"});
  summand.degree = rd.integer(s, path + ".", "degree").value_or(0);
  const json* weights = rd.array(s, path + ".", "weights", false);
  if (!weights) return summand;
  for (std::size_t i = 0; i < weights->size(); ++i) {
    const std::string wpath = path + ".weights[" + std::to_string(i) + "]";
    const json& w = (*weights)[i];
    if (!rd.object(w, wpath)) continue;
    rd.check_keys(w, wpath + ".", {"point", "num", "den"});
    auto label = rd.string(w, wpath + ".", "point");
    auto alpha = rd.rational(w, wpath + ".", "num", "den");
    if (!label || !alpha) continue;
    if (!summand.weights.emplace(*label, *alpha).second) {
      rd.errors.push_back(wpath + ".point: point '" + *label + "' listed twice");
    }
  }
  return summand;
}

}  // namespace

DocumentError::DocumentError(std::vector<std::string> issues)
    : std::runtime_error(join(issues)), issues_(std::move(issues)) {}

BundleDocument parse_document(std::string_view text, bool strict) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_and_column(text, e.byte);
    throw DocumentError({"syntax error at line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + e.what()});
  }

  Reader rd;
  BundleDocument doc;
  if (!rd.object(root, "document")) throw DocumentError(rd.errors);
  rd.check_keys(root, "", {"schema_version", "name", "genus", "rank", "degree", "points", "split", "hn"});

  if (auto v = rd.integer(root, "", "schema_version")) {
    if (*v != kSchemaVersion) rd.errors.push_back("schema_version: unsupported version " + std::to_string(*v));
    doc.schema_version = static_cast<int>(*v);
  }
  doc.name = rd.string(root, "", "name").value_or("");
  if (auto g = rd.integer(root, "", "genus", false)) {
    if (*g < 0) rd.errors.emplace_back("genus: must be non-negative");
    doc.genus = static_cast<int>(*g);
  }
  if (auto r = rd.integer(root, "", "rank")) doc.bundle.rank = static_cast<int>(*r);
  if (auto d = rd.integer(root, "", "degree")) doc.bundle.degree = *d;

  if (const json* points = rd.array(root, "", "points", false)) {
    for (std::size_t i = 0; i < points->size(); ++i) {
      doc.bundle.points.push_back(read_point(rd, (*points)[i], "points[" + std::to_string(i) + "]"));
    }
  }
  for (const auto& p : doc.bundle.points) {
    bool trivial = true;
    for (const auto& w : p.weights) trivial = trivial && w.alpha == 0;
    if (trivial && !p.label.empty()) rd.warnings.push_back("point '" + p.label + "' carries only weight 0");
  }

  if (const json* split = rd.array(root, "", "split", false)) {
    std::vector<LineSummand> summands;
    for (std::size_t i = 0; i < split->size(); ++i) {
      summands.push_back(read_summand(rd, (*split)[i], "split[" + std::to_string(i) + "]"));
    }
    doc.bundle.split = std::move(summands);
  }
  if (const json* hn = rd.array(root, "", "hn", false)) {
    std::vector<HNPiece> pieces;
    for (std::size_t i = 0; i < hn->size(); ++i) {
      const std::string path = "hn[" + std::to_string(i) + "]";
      const json& h = (*hn)[i];
      if (!rd.object(h, path)) continue;
      rd.check_keys(h, path + ".", {"rank", "deg_num", "deg_den"});
      auto rank = rd.integer(h, path + ".", "rank");
      auto degree = rd.rational(h, path + ".", "deg_num", "deg_den");
      if (rank && degree) pieces.push_back({static_cast<int>(*rank), *degree});
    }
    try {
      doc.bundle.hn = HNData(std::move(pieces));
    } catch (const ValidationError& e) {
      for (const auto& issue : e.issues()) rd.errors.push_back("hn: " + issue);
    }
  }

  if (rd.errors.empty()) {
    for (const auto& issue : ParabolicBundleSpec::validate(doc.bundle)) rd.errors.push_back(issue);
  }
  if (strict) {
    for (const auto& w : rd.warnings) rd.errors.push_back("warning treated as error: " + w);
  }
  if (!rd.errors.empty()) throw DocumentError(std::move(rd.errors));
  doc.warnings = std::move(rd.warnings);
  return doc;
}

BundleDocument load_document(const std::filesystem::path& path, bool strict) {
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec)) throw IoError("cannot read " + path.string() + ": is a directory");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error while reading " + path.string());
  return parse_document(buf.str(), strict);
}

ordered_json rational_to_json(const Rational& q) {
  auto component = [](const Integer& z) -> ordered_json {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
  };
  ordered_json out;
  out["num"] = component(q.get_num());
  out["den"] = component(q.get_den());
  return out;
}

ordered_json document_to_json(const BundleDocument& doc) {
  ordered_json out;
  out["schema_version"] = doc.schema_version;
  out["name"] = doc.name;
  if (doc.genus) out["genus"] = *doc.genus;
  out["rank"] = doc.bundle.rank;
  out["degree"] = doc.bundle.degree;
  ordered_json points = ordered_json::array();
  for (const auto& p : doc.bundle.points) {
    ordered_json weights = ordered_json::array();
    for (const auto& w : p.weights) {
      ordered_json entry = rational_to_json(w.alpha);
      entry["mult"] = w.multiplicity;
      weights.push_back(std::move(entry));
    }
    points.push_back({{"label", p.label}, {"weights", std::move(weights)}});
  }
  out["points"] = std::move(points);
  if (doc.bundle.split) {
    ordered_json split = ordered_json::array();
    for (const auto& s : *doc.bundle.split) {
      ordered_json weights = ordered_json::array();
      for (const auto& [label, alpha] : s.weights) {
        ordered_json entry{{"point", label}};
        entry.update(rational_to_json(alpha));
        weights.push_back(std::move(entry));
      }
      split.push_back({{"degree", s.degree}, {"weights", std::move(weights)}});
    }
    out["split"] = std::move(split);
  }
  if (doc.bundle.hn) {
    ordered_json hn = ordered_json::array();
    for (const auto& piece : doc.bundle.hn->pieces()) {
      const auto q = rational_to_json(piece.degree);
      hn.push_back({{"rank", piece.rank}, {"deg_num", q["num"]}, {"deg_den", q["den"]}});
    }
    out["hn"] = std::move(hn);
  }
  return out;
}

ParabolicBundleSpec to_spec(const BundleDocument& doc) { return ParabolicBundleSpec(doc.bundle); }

}  // namespace parcone
