#include "parcone/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <sstream>

namespace parcone {

using nlohmann::ordered_json;

namespace {

CorpusEntry process(const std::filesystem::path& file, const ReportOptions& opts, bool strict) {
  CorpusEntry entry;
  entry.file = file.filename().string();
  try {
    entry.report = run_report(load_document(file, strict), opts);
  } catch (const IoError& e) {
    entry.status = EntryStatus::io_error;
    entry.errors.push_back(e.what());
  } catch (const DocumentError& e) {
    entry.status = EntryStatus::invalid;
    entry.errors = e.issues();
  } catch (const ValidationError& e) {
    entry.status = EntryStatus::invalid;
    entry.errors = e.issues();
  } catch (const std::invalid_argument& e) {
    entry.status = EntryStatus::invalid;
    entry.errors.push_back(e.what());
  } catch (const std::out_of_range& e) {
    entry.status = EntryStatus::invalid;
    entry.errors.push_back(e.what());
  } catch (const std::exception& e) {
    entry.status = EntryStatus::internal_error;
    entry.errors.push_back(e.what());
  }
  return entry;
}

}  // namespace

const char* to_string(EntryStatus status) {
  switch (status) {
    case EntryStatus::ok: return "ok";
    case EntryStatus::invalid: return "invalid";
    case EntryStatus::io_error: return "io_error";
    case EntryStatus::internal_error: return "internal_error";
  }
  return "?";
}

int CorpusSummary::semistable_count() const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](const CorpusEntry& e) {
    return e.report && e.report->semistable.by_hn_length;
  }));
}

int CorpusSummary::unstable_count() const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](const CorpusEntry& e) {
    return e.report && !e.report->semistable.by_hn_length;
  }));
}

int CorpusSummary::invalid_count() const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                        [](const CorpusEntry& e) { return e.status != EntryStatus::ok; }));
}

double CorpusSummary::oracle_pass_rate() const {
  int checked = 0, passed = 0;
  for (const auto& e : entries) {
    if (!e.report || !e.report->oracle) continue;
    ++checked;
    passed += e.report->oracle->passed() ? 1 : 0;
  }
  return checked == 0 ? 1.0 : static_cast<double>(passed) / checked;
}

int CorpusSummary::exit_code() const {
  bool io = false, oracle = false, invalid = false;
  for (const auto& e : entries) {
    io = io || e.status == EntryStatus::io_error;
    oracle = oracle || e.status == EntryStatus::internal_error || (e.report && !e.report->oracle_passed());
    invalid = invalid || e.status == EntryStatus::invalid;
  }
  if (io) return 3;
  if (oracle) return 2;
  return invalid ? 1 : 0;
}

CorpusSummary run_corpus(const std::filesystem::path& dir, const ReportOptions& opts, bool strict) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  std::filesystem::directory_iterator it(dir, ec);
  if (ec) throw IoError("cannot list " + dir.string() + ": " + ec.message());
  for (const auto& item : it) {
    if (item.path().extension() == ".json") files.push_back(item.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<std::future<CorpusEntry>> futures;
  futures.reserve(files.size());
  for (const auto& file : files) {
    futures.push_back(std::async(std::launch::async, process, file, std::cref(opts), strict));
  }
  CorpusSummary summary;
  for (auto& f : futures) summary.entries.push_back(f.get());
  summary.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

ordered_json summary_to_json(const CorpusSummary& summary) {
  ordered_json entries = ordered_json::array();
  for (const auto& e : summary.entries) {
    ordered_json item{{"file", e.file}, {"status", to_string(e.status)}};
    if (e.report) item["report"] = report_to_json(*e.report);
    if (!e.errors.empty()) item["errors"] = e.errors;
    entries.push_back(std::move(item));
  }
  ordered_json out;
  out["entries"] = std::move(entries);
  out["aggregate"] = {{"files", summary.entries.size()},
                      {"semistable", summary.semistable_count()},
                      {"unstable", summary.unstable_count()},
                      {"invalid", summary.invalid_count()},
                      {"oracle_pass_rate", summary.oracle_pass_rate()},
                      {"runtime_ms", summary.runtime_ms},
                      {"exit_code", summary.exit_code()}};
  return out;
}

std::string summary_to_text(const CorpusSummary& summary) {
  std::ostringstream os;
  for (const auto& e : summary.entries) {
    if (e.report) {
      os << report_to_text(*e.report);
    } else {
      os << e.file << ": " << to_string(e.status) << "\n";
      for (const auto& err : e.errors) os << "  " << err << "\n";
    }
  }
  os << "corpus: " << summary.entries.size() << " files, " << summary.semistable_count() << " semistable, "
     << summary.unstable_count() << " unstable, " << summary.invalid_count() << " invalid; oracle pass rate "
     << summary.oracle_pass_rate() * 100 << "%; " << summary.runtime_ms << " ms\n";
  return os.str();
}

}  // namespace parcone
