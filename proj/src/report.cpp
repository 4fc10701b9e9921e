#include "lieq/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lieq {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Warn: return "warn";
  }
  return "?";
}

void Report::append(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool Report::all_pass() const { return count(Status::Fail) == 0; }

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [s](const Check& c) { return c.status == s; }));
}

Json Report::to_json(bool include_timing) const {
  Json j;
  j["title"] = title_;
  j["summary"] = {{"pass", count(Status::Pass)},
                  {"fail", count(Status::Fail)},
                  {"warn", count(Status::Warn)},
                  {"all_pass", all_pass()}};
  Json checks = Json::array();
  for (const auto& c : checks_) {
    Json entry;
    entry["name"] = c.name;
    entry["status"] = to_string(c.status);
    entry["detail"] = c.detail;
    if (c.residue) entry["residue"] = *c.residue;
    if (!c.data.is_null()) entry["data"] = c.data;
    if (include_timing) entry["elapsed_ms"] = std::round(c.elapsed_ms * 1000.0) / 1000.0;
    checks.push_back(std::move(entry));
  }
  j["checks"] = std::move(checks);
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << title_ << "\n";
  for (const auto& c : checks_) {
    std::string tag = to_string(c.status);
    std::transform(tag.begin(), tag.end(), tag.begin(), [](unsigned char ch) { return std::toupper(ch); });
    os << "[" << tag << "] " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
    if (c.residue) os << "       residue: " << *c.residue << "\n";
  }
  os << count(Status::Pass) << " passed, " << count(Status::Fail) << " failed, " << count(Status::Warn)
     << " warnings\n";
  return os.str();
}

}  // namespace lieq
