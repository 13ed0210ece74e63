#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "riley/knot.hpp"
#include "riley/root_finder.hpp"

namespace riley {

/// Outcome of a root-existence check for one (n, m, r).
///  - certified:       a root y > 2 was found and cross-checked.
///  - not_found:       no sign change on the scanned range. Never a
///                     claim of nonexistence.
///  - below_threshold: r is under the tabulated lower bound for this
///                     (n, m); the scan outcome is still reported via
///                     roots_found.
enum class Status { certified, not_found, below_threshold };

std::string_view to_string(Status s);

struct OrderabilityVerdict {
  int n = 0;
  int m = 0;
  int r = 0;
  std::optional<int> r_min_claimed;
  Status status = Status::not_found;
  std::optional<RootCertificate> certificate;  // present iff certified
  int roots_found = 0;
  std::string error;  // non-empty when the scan failed internally

  std::string to_json_string() const;
  std::string to_csv_row() const;
};

/// The r-threshold of the seven-case table for C(2n+1, 2m, 2), or
/// absent when (n, m) is not covered by any clause (n = -1, or n = -2
/// with 1 <= m <= 5).
std::optional<int> thm_lower_bound(const KnotParams& p);

/// Runs scan_roots and classifies the outcome. Scan failures are
/// embedded in the verdict, not thrown. Requires r >= 2.
OrderabilityVerdict certify(const KnotParams& p, int r,
                            const ScanConfig& cfg = {});

/// Inclusive integer range with positive step.
struct IntRange {
  int lo = 0;
  int hi = -1;  // default-constructed range is empty
  int step = 1;

  bool empty() const { return hi < lo; }
};

/// The full (n, m, r) grid of verdicts, ordered by (n, then m, then r).
/// Values n = 0 and m = 0 are skipped. Grid points run in parallel on
/// `threads` workers (0 = hardware concurrency).
std::vector<OrderabilityVerdict> sweep(IntRange n_range, IntRange m_range,
                                       IntRange r_range,
                                       const ScanConfig& cfg = {},
                                       unsigned threads = 0);

struct SweepSummary {
  int total = 0;
  int certified = 0;
  int not_found = 0;
  int below_threshold = 0;
  int errors = 0;
  /// Grid points where the table claims a root (r >= bound) but the
  /// scan did not certify one.
  int claim_mismatches = 0;
};

SweepSummary summarize(const std::vector<OrderabilityVerdict>& verdicts);

std::string verdicts_to_json(const std::vector<OrderabilityVerdict>& verdicts);
/// CSV with header: n,m,r,status,r_min_claimed,y_star,residual
std::string verdicts_to_csv(const std::vector<OrderabilityVerdict>& verdicts);

}  // namespace riley
