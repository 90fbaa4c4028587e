#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace ainf {

struct Violation {
  std::string input;  ///< offending tuple or key, rendered with basis labels
  std::string lhs;
  std::string rhs;
};

/// Outcome of one verification sweep. Caps record the range a pass certifies.
struct Report {
  std::string check;
  std::map<std::string, int> caps;
  bool passed = true;
  std::size_t violation_count = 0;
  std::vector<Violation> violations;  ///< first kMaxStored violations, in sweep order
  std::vector<std::string> notes;
  std::vector<Report> children;
  double elapsed_ms = 0;

  static constexpr std::size_t kMaxStored = 20;

  void fail(Violation v);
  void note(std::string n) { notes.push_back(std::move(n)); }
  /// Adds a sub-report; the parent fails when the child fails.
  void merge(Report child);

  /// Machine rendering; timing is omitted unless requested so reruns are byte-identical.
  [[nodiscard]] nlohmann::ordered_json to_json(bool with_timing = false) const;
  [[nodiscard]] std::string to_text(int indent = 0) const;
};

/// Measures wall time of the enclosing scope into a report.
class ReportTimer {
 public:
  explicit ReportTimer(Report& r);
  ~ReportTimer();
  ReportTimer(const ReportTimer&) = delete;
  ReportTimer& operator=(const ReportTimer&) = delete;

 private:
  Report& report_;
  long long start_ns_;
};

}  // namespace ainf
