#include "btcprof/activity.hpp"

#include <stdexcept>
#include <string>

namespace btcprof {
namespace {

__extension__ typedef unsigned __int128 u128;

}  // namespace

double switching_activity(std::uint64_t total_transitions, std::size_t width,
                          std::uint64_t transfers) {
  if (width == 0) throw std::invalid_argument("switching_activity: width 0");
  if (transfers == 0) {
    throw std::invalid_argument("switching_activity: zero transfers");
  }
  const auto capacity = static_cast<u128>(width) * transfers;
  if (total_transitions > capacity) {
    throw std::out_of_range("switching_activity: " +
                            std::to_string(total_transitions) +
                            " transitions exceed width * transfers");
  }
  return static_cast<double>(total_transitions) /
         static_cast<double>(capacity);
}

ActivityReport analyze_trace(const Trace& trace, bool keep_per_cycle) {
  if (trace.size() < 2) {
    throw std::invalid_argument("trace needs at least two words, got " +
                                std::to_string(trace.size()));
  }
  ActivityReport r;
  r.width = trace.width();
  r.transfers = trace.transfers();
  r.per_bit_toggles.assign(r.width, 0);
  if (keep_per_cycle) r.per_cycle.emplace().reserve(r.transfers);

  for (std::size_t k = 1; k < trace.size(); ++k) {
    const Word diff = trace[k - 1] ^ trace[k];
    const std::size_t flips = diff.popcount();
    r.total_transitions += flips;
    if (r.per_cycle) r.per_cycle->push_back(flips);
    if (flips == 0) continue;
    for (std::size_t i = 0; i < r.width; ++i) {
      if (diff.bit(i)) ++r.per_bit_toggles[i];
    }
  }
  r.tau = switching_activity(r.total_transitions, r.width, r.transfers);
  return r;
}

ReductionSummary compare_reports(const ActivityReport& a,
                                 const ActivityReport& b) {
  if (a.width != b.width) {
    throw std::invalid_argument("compare_reports: width mismatch");
  }
  if (a.tau == 0.0) {
    throw std::domain_error("compare_reports: baseline tau is zero");
  }
  return {.relative = (a.tau - b.tau) / a.tau,
          .tau_delta = a.tau - b.tau,
          .transition_delta = static_cast<std::int64_t>(a.total_transitions) -
                              static_cast<std::int64_t>(b.total_transitions)};
}

std::string format_ratio(std::uint64_t numerator, std::uint64_t denominator,
                         int decimals, Rounding rounding) {
  if (denominator == 0) throw std::invalid_argument("format_ratio: zero denominator");
  if (decimals < 0 || decimals > 18) {
    throw std::out_of_range("format_ratio: decimals outside 0..18");
  }
  u128 scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;

  const u128 scaled = static_cast<u128>(numerator) * scale;
  u128 q = scaled / denominator;
  const u128 rem = scaled % denominator;
  if (rounding == Rounding::kHalfUp && 2 * rem >= denominator) ++q;

  const auto whole = static_cast<std::uint64_t>(q / scale);
  auto frac = static_cast<std::uint64_t>(q % scale);
  std::string out = std::to_string(whole);
  if (decimals > 0) {
    std::string digits(static_cast<std::size_t>(decimals), '0');
    for (int i = decimals - 1; i >= 0; --i) {
      digits[static_cast<std::size_t>(i)] = static_cast<char>('0' + frac % 10);
      frac /= 10;
    }
    out += '.';
    out += digits;
  }
  return out;
}

std::string tau_display(const ActivityReport& report, int decimals,
                        Rounding rounding) {
  const std::uint64_t capacity = report.width * report.transfers;
  if (capacity == 0) return format_ratio(0, 1, decimals, rounding);
  return format_ratio(report.total_transitions, capacity, decimals, rounding);
}

}  // namespace btcprof
