#pragma once

#include <chrono>
#include <string>

#include <nlohmann/json.hpp>

namespace ordtop {

// Outcome of one exhaustive law check.  `violations` keeps at most
// kMaxStoredViolations serialized counterexamples; the count is exact.
// `complete` drops to false when a scan is interrupted, in which case
// `pass` only reflects the instances actually visited.
struct AuditReport {
  std::string id;
  std::string statement;
  int bound = 0;
  bool iso_reduced = false;
  std::size_t instances = 0;
  std::size_t violation_count = 0;
  nlohmann::json violations = nlohmann::json::array();
  double wall_ms = 0.0;
  bool complete = true;
  bool pass = false;

  static constexpr std::size_t kMaxStoredViolations = 32;

  void record_violation(nlohmann::json v) {
    if (violations.size() < kMaxStoredViolations) violations.push_back(std::move(v));
    ++violation_count;
  }
  void finish() { pass = complete && violation_count == 0; }

  nlohmann::json to_json() const {
    return {{"id", id},           {"statement", statement},
            {"bound", bound},     {"iso_reduced", iso_reduced},
            {"instances", instances}, {"violations", violation_count},
            {"witnesses", violations}, {"wall_ms", wall_ms},
            {"complete", complete},    {"pass", pass}};
  }
};

// Wall-clock helper for audit bodies.
struct StopWatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double elapsed_ms() const {
    auto d = std::chrono::steady_clock::now() - start;
    return std::chrono::duration<double, std::milli>(d).count();
  }
};

}  // namespace ordtop
