#pragma once

// Claim ledger: every checkable statement of the source material is a claim
// with a stable id; run_all derives each object independently and diffs it
// against the transcribed fixtures.

#include "octo/fixtures.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace octo {

inline constexpr const char* kToolkitVersion = "octo-so8 0.1.0";

enum class Status { Confirmed, Refuted, Degenerate };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

/// Registry entry. `covers` lists the anchors (equations, tables, sections)
/// the claim exercises; `checker` names the operation it runs.
struct ClaimInfo {
  std::string id;
  std::string anchor;
  std::vector<std::string> covers;
  std::string checker;
};

/// Registered claims, sorted by id.
const std::vector<ClaimInfo>& claim_registry();

/// Every anchor that must be covered by at least one claim.
const std::vector<std::string>& required_anchors();

struct ClaimResult {
  std::string id;
  std::string anchor;
  Status status = Status::Refuted;
  nlohmann::json details;

  friend bool operator==(const ClaimResult&, const ClaimResult&) = default;
};

struct Summary {
  int confirmed = 0;
  int refuted = 0;
  int degenerate = 0;

  friend bool operator==(const Summary&, const Summary&) = default;
};

struct ClaimReport {
  std::string version = kToolkitVersion;
  std::vector<FixtureDigest> fixtures;
  std::vector<ClaimResult> claims;  // sorted by id

  Summary summary() const;
  const ClaimResult* find(const std::string& id) const;

  friend bool operator==(const ClaimReport&, const ClaimReport&) = default;
};

/// Runs every registered claim. Claims run concurrently; the report is
/// assembled in id order. Refutations never throw.
ClaimReport run_all(const FixtureStore& fixtures);

/// Runs one claim by id; throws std::out_of_range for unknown ids.
ClaimResult run_claim(const std::string& id, const FixtureStore& fixtures);

nlohmann::json to_json(const ClaimReport& report);
ClaimReport report_from_json(const nlohmann::json& j);
std::string to_markdown(const ClaimReport& report);

// JSON helpers shared with the CLI.
nlohmann::json matrix_json(const Matrix8& m);
nlohmann::json table_json(const SignedTable& t);
nlohmann::json table_diff_json(const TableDiff& d, char left_unit, char right_unit);
nlohmann::json component_map_json(const ComponentMap& m);

}  // namespace octo
