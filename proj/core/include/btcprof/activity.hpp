// Switching activity of a bus trace.
//
// tau = transitions / (width * transfers), where a trace of n words has
// n - 1 transfers. A bus that toggles every line on every clock has tau 1.

#ifndef BTCPROF_ACTIVITY_HPP_
#define BTCPROF_ACTIVITY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "btcprof/bits.hpp"

namespace btcprof {

// Throws std::invalid_argument for width 0 or zero transfers and
// std::out_of_range when total exceeds width * transfers.
double switching_activity(std::uint64_t total_transitions, std::size_t width,
                          std::uint64_t transfers);

struct ActivityReport {
  std::size_t width = 0;
  std::uint64_t transfers = 0;
  std::uint64_t total_transitions = 0;
  double tau = 0.0;
  // Indexed by bit position, bit 0 first.
  std::vector<std::uint64_t> per_bit_toggles;
  // Transitions per transfer, when requested.
  std::optional<std::vector<std::uint64_t>> per_cycle;

  friend bool operator==(const ActivityReport&, const ActivityReport&) = default;
};

// Throws std::invalid_argument when the trace has fewer than two words.
ActivityReport analyze_trace(const Trace& trace, bool keep_per_cycle = false);

struct ReductionSummary {
  double relative = 0.0;  // (a.tau - b.tau) / a.tau
  double tau_delta = 0.0;  // a.tau - b.tau
  std::int64_t transition_delta = 0;  // a.total - b.total
};

// How much `b` lowers activity relative to `a`. Throws std::invalid_argument
// on a width mismatch and std::domain_error when a.tau is zero.
ReductionSummary compare_reports(const ActivityReport& a,
                                 const ActivityReport& b);

enum class Rounding { kHalfUp, kTruncate };

// Decimal rendering of numerator / denominator computed exactly on the
// integers, so 1/8 at 2 decimals half-up is "0.13" with no binary
// floating-point drift.
std::string format_ratio(std::uint64_t numerator, std::uint64_t denominator,
                         int decimals, Rounding rounding);

// tau of `report` rendered with a fixed number of decimals.
std::string tau_display(const ActivityReport& report, int decimals = 2,
                        Rounding rounding = Rounding::kHalfUp);

}  // namespace btcprof

#endif  // BTCPROF_ACTIVITY_HPP_
