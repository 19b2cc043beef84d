#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace edgecodes {

enum class Status { Pass, Fail, Skipped };

std::string to_string(Status status);

/// One verified statement. A failure always carries a witness.
struct CheckResult {
  std::string check;
  std::optional<unsigned> degree;
  std::string expected;
  std::string got;
  std::optional<std::string> witness;
  Status status = Status::Pass;
  std::string note;
  double seconds = 0.0;
};

class Report {
 public:
  void add(CheckResult result);
  void pass(std::string check, std::optional<unsigned> degree, std::string expected, std::string got);
  void fail(std::string check, std::optional<unsigned> degree, std::string expected, std::string got,
            std::string witness);
  void skip(std::string check, std::string reason);
  /// Pass when expected == got, else fail with the given witness.
  void compare(std::string check, std::optional<unsigned> degree, const std::string& expected, const std::string& got,
               const std::string& witness);
  void append(const Report& other);

  const std::vector<CheckResult>& results() const { return results_; }
  bool passed() const;
  std::size_t count(Status status) const;

  nlohmann::json to_json() const;

 private:
  std::vector<CheckResult> results_;
};

nlohmann::json to_json(const CheckResult& result);

}  // namespace edgecodes
