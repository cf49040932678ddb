#pragma once

#include <string>
#include <vector>

#include "tfg/presentation.hpp"

namespace tfg {

enum class Status { pass, fail, inconclusive };
std::string to_string(Status s);

struct CheckResult {
  std::string name;
  Status status = Status::pass;
  std::string detail;
};

struct SuiteReport {
  std::vector<CheckResult> results;
  /// fail if any check failed, else inconclusive if any was, else pass.
  Status overall() const;
};

/// Checks stored in the presentation file.
std::vector<CheckResult> run_stored_checks(const Presentation& p);

/// Loads every presentation in dir, runs its stored checks, then replays the
/// worked example, the A5 closure, expansivity, H0 and quasicrystal checks.
SuiteReport verify_bundled(const std::string& dir);

std::string report_text(const SuiteReport& r);
std::string report_json(const SuiteReport& r);

/// Involutions τ_F for the prefix exchanges F = (v, id, u) between
/// incomparable tail-compatible words of length 1..max_len.
std::vector<FullGroupElement> tau_generators(const GroupoidPtr& groupoid, std::size_t max_len);

}  // namespace tfg
