#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "kfrob/report.hpp"
#include "kfrob/split_class.hpp"

namespace kfrob {

inline constexpr int kSuiteSchemaVersion = 1;

struct CaseDescriptor {
  std::string id;
  std::string kind;  // arr, arr-relative, tau, frobenius, equivariant, properties
  nlohmann::json params;
};

struct SuiteConfig {
  std::vector<CaseDescriptor> cases;
  std::string output_path;
  int jobs = 1;

  // Validates kinds, required parameters, desk-scale limits and that every
  // randomized case carries a seed.  Throws InvalidArgument.
  static SuiteConfig from_json(const nlohmann::json& j);
  static SuiteConfig load(const std::string& path);
};

struct SuiteResult {
  std::vector<VerificationReport> reports;

  int count(Status s) const;
  bool all_passed() const { return count(Status::pass) == static_cast<int>(reports.size()); }
  int exit_code() const { return all_passed() ? 0 : 1; }

  // {"schema_version", "summary", "cases", "timing"}; "timing" is the only
  // run-dependent member.
  nlohmann::json to_json() const;
};

// Strips run-dependent members so reports can be diffed against goldens.
nlohmann::json without_timing(nlohmann::json report);

// The split-class grammar of the CLI; an alias kept for the command layer.
SplitClass parse_bundle_spec(const std::string& text, const RingDescriptor& ring);

RingDescriptor ambient_ring(const std::string& name);

// Runs one case.  Library exceptions become ERROR reports.
VerificationReport run_case(const CaseDescriptor& c);

// Cases run on up to config.jobs threads; reports keep config order.
SuiteResult run_suite(const SuiteConfig& config);

}  // namespace kfrob
