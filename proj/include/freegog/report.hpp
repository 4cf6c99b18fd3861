#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "freegog/scenario.hpp"

namespace freegog {

enum class CheckStatus { kPass, kFail, kUnsupported };

std::string to_string(CheckStatus status);

struct CheckResult {
  std::string name;
  std::string anchor;
  CheckStatus status = CheckStatus::kFail;
  std::string witness;
  double millis = 0;
};

struct RunOptions {
  /// nullopt runs everything; otherwise names or name prefixes (an empty
  /// list runs nothing).
  std::optional<std::vector<std::string>> filter;
  std::uint64_t seed = 0;
  bool timing = true;
};

struct Report {
  std::string scenario;
  std::vector<CheckResult> results;  // sorted by name

  bool ok() const;
  std::size_t count(CheckStatus status) const;
};

/// Names of every check the scenario defines, sorted.
std::vector<std::string> check_names(const Scenario& scenario);

Report run_scenario(const Scenario& scenario, const RunOptions& options = {});

std::string format_text(const Report& report);
/// One JSON object per line: scenario, name, anchor, status, witness, millis.
std::string format_jsonl(const Report& report);

struct FixClaim {
  std::string name;
  std::string automorphism;
  std::vector<std::string> generators;
  bool generators_fixed = false;
  int max_length = 0;
  long fixed_words = 0;
  /// Fixed words of length <= max_length outside the claimed subgroup.
  std::vector<std::string> outside;
  std::string maximality = "not verified (out of scope)";

  bool pass() const { return generators_fixed && outside.empty(); }
};

/// The three fixed-subgroup claims of a section4-shaped scenario:
/// phi2 Ad(g^-1) fixes <a,b>, phi2 fixes <g,gamma>, phi2 Ad(gamma^-1) fixes
/// <alpha,beta>.
std::vector<FixClaim> verify_fixed_claims(const Scenario& scenario, int max_length = 6);

std::string format_fix_claims(const std::vector<FixClaim>& claims);

}  // namespace freegog
