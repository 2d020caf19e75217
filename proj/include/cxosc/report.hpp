#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace cxosc {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;
inline constexpr const char* kToolName = "cxosc";
inline constexpr const char* kToolVersion = "0.1.0";

/// Whose closed form a candidate is: the stated form under test (or a
/// literal variant of it), or one derived by direct computation.
enum class Role { paper, derived };

std::string to_string(Role role);

struct Candidate {
  std::string name;
  Role role;
  double residual;
};

/// One checked identity at one parameter point, with a residual per
/// candidate closed form.
struct VerificationEntry {
  std::string suite;
  std::string identity;
  Json indices = Json::object();
  std::vector<Candidate> candidates;
  long margin = 0;
  double tol = 0.0;
  std::string note;

  bool matches(const Candidate& candidate) const { return candidate.residual <= tol; }
  /// pass iff the smallest candidate residual is within tolerance.
  bool pass() const;
  std::vector<std::string> matched_candidates() const;
  /// "paper", "derived", "both" or "neither".
  std::string matched_form() const;
  double min_residual() const;
};

Json to_json(const VerificationEntry& entry);

/// Verdict for one identity checked over a grid: which candidates match at
/// every grid point.
struct Adjudication {
  std::string suite;
  std::string identity;
  long points = 0;
  std::vector<std::string> candidates;
  std::vector<std::string> matching_everywhere;

  /// Exactly one candidate matches at every point.
  bool unique() const { return matching_everywhere.size() == 1; }
  std::string verdict() const;
};

/// Groups entries by (suite, identity) and records, for every identity with
/// more than one candidate, the candidates that match at all points.
std::vector<Adjudication> adjudicate(const std::vector<VerificationEntry>& entries);

Json to_json(const Adjudication& adjudication);

struct VerificationReport {
  Json config = Json::object();
  std::vector<VerificationEntry> entries;

  bool all_pass() const;
  long passed() const;
  Json to_json() const;
};

/// Structural check of a report document against schema 1. Returns an empty
/// string when valid, otherwise a description of the first problem.
std::string validate_report(const Json& report);

}  // namespace cxosc
