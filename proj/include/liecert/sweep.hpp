#pragma once

#include <cstdint>
#include <set>

#include "liecert/json_io.hpp"

namespace liecert {

struct SweepConfig {
  std::vector<SimpleType> types;
  std::set<std::string> claims = all_claims();
  int pairing_bound = 8;
  int claim_a_bound = 2;
  std::uint64_t seed = 0x5eed5eedULL;  // randomized reversor spot checks
  int threads = 0;                     // 0 = hardware concurrency

  /// A1-A8, B2-B8, C3-C8, D4-D9, E6, E7, E8, F4, G2.
  static std::vector<SimpleType> default_types();
  static const std::set<std::string>& all_claims();
};

enum class CaseStatus { Pass, Fail, Inapplicable };
const char* case_status_name(CaseStatus s);

struct CaseRow {
  std::string id;
  SimpleType system;
  std::string claim;
  std::optional<Vec> lambda;
  CaseStatus status = CaseStatus::Pass;
  Json payload;  // self-contained certificate (pass) or witness (fail)
  long long elapsed_ms = 0;
};

struct Report {
  std::vector<CaseRow> cases;
  int pass = 0;
  int fail = 0;
  int inapplicable = 0;
  void recount();
};

/// Dominant lattice points with <lambda, delta> <= bound, sorted
/// lexicographically (zero included). Enumerates by interval propagation over
/// the canonical staircase basis inside the per-type coordinate box of the
/// dominant slice.
std::vector<Vec> enumerate_dominant(const RootSystem& rs, const Lattice& lat, const Int& bound);

/// Runs the requested claim groups over the configured types, fanning types
/// out to a worker pool; row order is deterministic regardless of threads.
Report run_verification_suite(const SweepConfig& cfg);

/// "text": one row per case plus the summary line; "json": the versioned
/// report schema. Throws UsageError on any other format.
std::string render_report(const Report& r, const std::string& format);

/// Re-checks a pass row's certificate from its serialized payload alone
/// (rebuilding the root system from the row's type).
bool reverify_case(const CaseRow& row);

}  // namespace liecert
