#ifndef ELLQ_REPORT_HPP
#define ELLQ_REPORT_HPP

#include <string>
#include <vector>

namespace ellq {

struct CheckResult {
  enum class Status { PASS, FAIL, SKIPPED };
  std::string id;        // relation or table-cell identifier
  std::string instance;  // instance parameters, human readable
  Status status = Status::PASS;
  std::string detail;    // first failure witness / diagnosis, empty on PASS
};

struct VerificationReport {
  std::vector<CheckResult> entries;

  void pass(const std::string& id, const std::string& inst) {
    entries.push_back({id, inst, CheckResult::Status::PASS, ""});
  }
  void fail(const std::string& id, const std::string& inst, const std::string& detail) {
    entries.push_back({id, inst, CheckResult::Status::FAIL, detail});
  }
  void skip(const std::string& id, const std::string& inst, const std::string& why) {
    entries.push_back({id, inst, CheckResult::Status::SKIPPED, why});
  }
  void merge(const VerificationReport& o) {
    entries.insert(entries.end(), o.entries.begin(), o.entries.end());
  }
  bool all_pass() const {
    for (const auto& e : entries)
      if (e.status == CheckResult::Status::FAIL) return false;
    return true;
  }
  size_t fail_count() const {
    size_t n = 0;
    for (const auto& e : entries)
      if (e.status == CheckResult::Status::FAIL) ++n;
    return n;
  }
  std::string to_json(int indent = 2) const;
  std::string summary() const;
};

}  // namespace ellq

#endif
