#include "edgecodes/report.hpp"

#include <algorithm>

namespace edgecodes {

std::string to_string(Status status) {
  switch (status) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "unknown";
}

void Report::add(CheckResult result) {
  if (result.status == Status::Fail && !result.witness) result.witness = "unspecified";
  results_.push_back(std::move(result));
}

void Report::pass(std::string check, std::optional<unsigned> degree, std::string expected, std::string got) {
  add(CheckResult{std::move(check), degree, std::move(expected), std::move(got), std::nullopt, Status::Pass, {}, 0.0});
}

void Report::fail(std::string check, std::optional<unsigned> degree, std::string expected, std::string got,
                  std::string witness) {
  add(CheckResult{std::move(check), degree, std::move(expected), std::move(got), std::move(witness), Status::Fail, {},
                  0.0});
}

void Report::skip(std::string check, std::string reason) {
  add(CheckResult{std::move(check), std::nullopt, {}, {}, std::nullopt, Status::Skipped, std::move(reason), 0.0});
}

void Report::compare(std::string check, std::optional<unsigned> degree, const std::string& expected,
                     const std::string& got, const std::string& witness) {
  if (expected == got)
    pass(std::move(check), degree, expected, got);
  else
    fail(std::move(check), degree, expected, got, witness);
}

void Report::append(const Report& other) {
  results_.insert(results_.end(), other.results_.begin(), other.results_.end());
}

bool Report::passed() const {
  return std::none_of(results_.begin(), results_.end(), [](const CheckResult& r) { return r.status == Status::Fail; });
}

std::size_t Report::count(Status status) const {
  return static_cast<std::size_t>(
      std::count_if(results_.begin(), results_.end(), [&](const CheckResult& r) { return r.status == status; }));
}

nlohmann::json to_json(const CheckResult& r) {
  nlohmann::json j;
  j["check"] = r.check;
  j["degree"] = r.degree ? nlohmann::json(*r.degree) : nlohmann::json(nullptr);
  j["expected"] = r.expected;
  j["got"] = r.got;
  if (r.witness) j["witness"] = *r.witness;
  j["status"] = to_string(r.status);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

nlohmann::json Report::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results_) arr.push_back(edgecodes::to_json(r));
  return arr;
}

}  // namespace edgecodes
