#pragma once

#include <string>
#include <utility>
#include <vector>

namespace kanmeasure {

enum class CheckStatus { pass, fail, skipped };

inline const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "skipped";
  }
}

/// One verification record: named check, the statement label it validates,
/// outcome, a witness on failure, and exact values as rational strings.
struct CheckRecord {
  std::string name;
  std::string paper_anchor;
  CheckStatus status = CheckStatus::fail;
  std::string witness;
  std::vector<std::pair<std::string, std::string>> values;
};

struct Report {
  std::string title;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> records;

  std::size_t count(CheckStatus s) const {
    std::size_t n = 0;
    for (const auto& r : records)
      if (r.status == s) ++n;
    return n;
  }
  bool ok() const { return count(CheckStatus::fail) == 0; }

  CheckRecord& add(std::string name, std::string anchor) {
    records.push_back(CheckRecord{std::move(name), std::move(anchor), CheckStatus::fail, "", {}});
    return records.back();
  }
};

}  // namespace kanmeasure
