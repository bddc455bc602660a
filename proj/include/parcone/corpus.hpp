#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "parcone/report.hpp"

namespace parcone {

enum class EntryStatus { ok, invalid, io_error, internal_error };

const char* to_string(EntryStatus status);

struct CorpusEntry {
  std::string file;
  EntryStatus status = EntryStatus::ok;
  std::optional<ConeReport> report;
  std::vector<std::string> errors;
};

struct CorpusSummary {
  std::vector<CorpusEntry> entries;  // sorted by file name
  double runtime_ms = 0;

  int semistable_count() const;
  int unstable_count() const;
  int invalid_count() const;
  /// Fraction of oracle-checked entries that passed; 1 when none were checked.
  double oracle_pass_rate() const;
  /// 3 if any file was unreadable, else 2 on an oracle or internal failure,
  /// else 1 on an invalid file, else 0.
  int exit_code() const;
};

/// Every *.json file directly inside `dir`, processed concurrently.
/// Throws IoError if `dir` itself cannot be listed.
CorpusSummary run_corpus(const std::filesystem::path& dir, const ReportOptions& opts, bool strict = false);

nlohmann::ordered_json summary_to_json(const CorpusSummary& summary);
std::string summary_to_text(const CorpusSummary& summary);

}  // namespace parcone
