// parcone: positive cones of projectivized parabolic bundles over a curve.
//
// Exit codes: 0 success, 1 validation failure, 2 oracle mismatch, 3 I/O error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "parcone/corpus.hpp"
#include "parcone/report.hpp"

namespace {

enum Exit { kOk = 0, kInvalid = 1, kOracle = 2, kIo = 3 };

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << text;
  out.close();
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kIo;
  }
  return kOk;
}

void print_issues(const std::string& where, const std::vector<std::string>& issues) {
  std::cerr << where << ": invalid\n";
  for (const auto& issue : issues) std::cerr << "  " << issue << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nef and pseudoeffective cones of projectivized parabolic bundles"};
  std::string input, corpus, format = "text", out_path;
  parcone::ReportOptions opts;
  bool strict = false;

  auto* in_opt = app.add_option("--input", input, "bundle document (JSON)");
  auto* corpus_opt = app.add_option("--corpus", corpus, "directory of bundle documents");
  in_opt->excludes(corpus_opt);
  app.add_option("--k", opts.ks, "comma-separated k values (default: all)")->delimiter(',');
  app.add_flag("--check-oracle", opts.check_oracle, "cross-check against the orbifold cover");
  app.add_option("--gammas", opts.gammas, "comma-separated cover orders (default: N, 2N, 3N)")->delimiter(',');
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--strict", strict, "treat warnings as errors");
  app.add_option("--out", out_path, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }
  if (input.empty() && corpus.empty()) {
    std::cerr << "error: one of --input or --corpus is required\n";
    return kInvalid;
  }
  const bool json = format == "json";

  if (!corpus.empty()) {
    try {
      const auto summary = parcone::run_corpus(corpus, opts, strict);
      const std::string text = json ? parcone::summary_to_json(summary).dump(2) + "\n" : parcone::summary_to_text(summary);
      const int rc = emit(text, out_path);
      return rc != kOk ? rc : summary.exit_code();
    } catch (const parcone::IoError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kIo;
    }
  }

  try {
    const auto doc = parcone::load_document(input, strict);
    const auto report = parcone::run_report(doc, opts);
    const std::string text = json ? parcone::report_to_json(report).dump(2) + "\n" : parcone::report_to_text(report);
    const int rc = emit(text, out_path);
    if (rc != kOk) return rc;
    if (!report.oracle_passed()) {
      for (const auto& check : report.oracle->checks) {
        for (const auto& m : check.mismatches()) std::cerr << "oracle mismatch: " << m << "\n";
      }
      return kOracle;
    }
    return kOk;
  } catch (const parcone::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const parcone::DocumentError& e) {
    print_issues(input, e.issues());
    return kInvalid;
  } catch (const parcone::ValidationError& e) {
    print_issues(input, e.issues());
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kOracle;
  }
}
