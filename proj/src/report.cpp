#include "ainf/report.hpp"

#include <chrono>
#include <sstream>

namespace ainf {

void Report::fail(Violation v) {
  passed = false;
  ++violation_count;
  if (violations.size() < kMaxStored) violations.push_back(std::move(v));
}

void Report::merge(Report child) {
  if (!child.passed) passed = false;
  children.push_back(std::move(child));
}

nlohmann::ordered_json Report::to_json(bool with_timing) const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["passed"] = passed;
  j["caps"] = caps;
  j["violation_count"] = violation_count;
  auto& vs = j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : violations) vs.push_back({{"input", v.input}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  if (!notes.empty()) j["notes"] = notes;
  if (!children.empty()) {
    auto& cs = j["children"] = nlohmann::ordered_json::array();
    for (const auto& c : children) cs.push_back(c.to_json(with_timing));
  }
  if (with_timing) j["elapsed_ms"] = elapsed_ms;
  return j;
}

std::string Report::to_text(int indent) const {
  std::ostringstream os;
  std::string pad(indent, ' ');
  os << pad << (passed ? "PASS " : "FAIL ") << check;
  if (!caps.empty()) {
    os << " [";
    bool first = true;
    for (const auto& [k, v] : caps) {
      os << (first ? "" : ", ") << k << "=" << v;
      first = false;
    }
    os << "]";
  }
  os << "\n";
  for (const auto& n : notes) os << pad << "  note: " << n << "\n";
  for (const auto& v : violations) os << pad << "  at " << v.input << ": " << v.lhs << " != " << v.rhs << "\n";
  if (violation_count > violations.size())
    os << pad << "  ... " << (violation_count - violations.size()) << " more violations\n";
  for (const auto& c : children) os << c.to_text(indent + 2);
  return os.str();
}

namespace {
long long now_ns() {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}
}  // namespace

ReportTimer::ReportTimer(Report& r) : report_(r), start_ns_(now_ns()) {}
ReportTimer::~ReportTimer() { report_.elapsed_ms = static_cast<double>(now_ns() - start_ns_) / 1e6; }

}  // namespace ainf
