#pragma once

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "sl2coh/harness/config.hpp"

namespace sl2coh::harness {

enum class Status { pass, fail, skipped };
std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct CheckRecord {
  std::string suite;
  std::string name;
  Params params;
  Status status = Status::pass;
  /// Canonical rendering of the offending polynomial, matrix or pair; empty on success.
  std::string witness;
  std::string message;
  double seconds = 0;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct RunMetadata {
  std::string tool = "sl2coh";
  std::string version;
  std::string timestamp;
  std::string gmp;
  std::string compiler;
  std::uint64_t seed = kDefaultSeed;
  Grid grid;
  std::vector<std::string> suites;

  friend bool operator==(const RunMetadata&, const RunMetadata&) = default;
};

struct VerificationReport {
  RunMetadata meta;
  std::vector<CheckRecord> checks;

  std::size_t count(Status s) const;
  bool passed() const { return count(Status::fail) == 0; }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

nlohmann::json to_json(const VerificationReport& r);
/// Throws ConfigError on schema violations.
VerificationReport report_from_json(const nlohmann::json& j);
std::string to_markdown(const VerificationReport& r);

/// "p=2 r=1".
std::string format_params(const Params& p);

}  // namespace sl2coh::harness
