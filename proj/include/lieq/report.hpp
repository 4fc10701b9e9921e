#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace lieq {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Warn };

std::string to_string(Status s);

/// One named check inside a report.
struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string detail;
  std::optional<std::string> residue;
  Json data;  // check-specific payload, null when absent
  double elapsed_ms = 0.0;
};

/// Ordered collection of checks. Rendering is deterministic apart from timings.
class Report {
 public:
  explicit Report(std::string title) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  const std::vector<Check>& checks() const { return checks_; }

  void add(Check check) { checks_.push_back(std::move(check)); }
  void append(const Report& other);

  /// Runs `body`, times it, and records the returned check. Exceptions become failures.
  template <typename Body>
  void run(const std::string& name, Body body) {
    auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = body();
    } catch (const std::exception& e) {
      c.status = Status::Fail;
      c.detail = std::string("error: ") + e.what();
    }
    c.name = name;
    c.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    checks_.push_back(std::move(c));
  }

  bool all_pass() const;  // warnings do not count as failures
  std::size_t count(Status s) const;

  Json to_json(bool include_timing = true) const;
  std::string to_text() const;

 private:
  std::string title_;
  std::vector<Check> checks_;
};

inline Check pass(std::string detail = {}) { return {{}, Status::Pass, std::move(detail), std::nullopt, nullptr, 0}; }
inline Check fail(std::string detail, std::optional<std::string> residue = std::nullopt) {
  return {{}, Status::Fail, std::move(detail), std::move(residue), nullptr, 0};
}
inline Check verdict(bool ok, std::string detail, std::optional<std::string> residue = std::nullopt) {
  return ok ? pass(std::move(detail)) : fail(std::move(detail), std::move(residue));
}

}  // namespace lieq
