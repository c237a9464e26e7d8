#include "ellq/report.hpp"

#include <json.hpp>

namespace ellq {

namespace {
const char* status_str(CheckResult::Status s) {
  switch (s) {
    case CheckResult::Status::PASS: return "PASS";
    case CheckResult::Status::FAIL: return "FAIL";
    case CheckResult::Status::SKIPPED: return "SKIPPED";
  }
  return "?";
}
}  // namespace

std::string VerificationReport::to_json(int indent) const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json j;
    j["relation"] = e.id;
    j["instance"] = e.instance;
    j["status"] = status_str(e.status);
    if (!e.detail.empty()) j["detail"] = e.detail;
    arr.push_back(j);
  }
  nlohmann::json doc;
  doc["schema"] = "ellizq/1";
  doc["entries"] = arr;
  return doc.dump(indent);
}

std::string VerificationReport::summary() const {
  size_t pass = 0, fail = 0, skip = 0;
  for (const auto& e : entries) {
    if (e.status == CheckResult::Status::PASS) ++pass;
    if (e.status == CheckResult::Status::FAIL) ++fail;
    if (e.status == CheckResult::Status::SKIPPED) ++skip;
  }
  return std::to_string(pass) + " pass, " + std::to_string(fail) + " fail, " +
         std::to_string(skip) + " skipped";
}

}  // namespace ellq
