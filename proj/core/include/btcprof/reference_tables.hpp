// Published switching-activity measurements and their recomputation.
//
// Two benchmark tables are reproduced:
//
//  * counter table: binary and gray address counters of 4 and 8 bits run
//    through one full period from zero (2^w - 1 transfers);
//  * pattern-generator table: 16-bit LFSRs and CAs seeded with
//    1011001010110110 and clocked 8, 16 and 32 times (transfers = cycles).
//
// The published pattern-generator figures print tau truncated to two
// decimals, the counter figures round half up.

#ifndef BTCPROF_REFERENCE_TABLES_HPP_
#define BTCPROF_REFERENCE_TABLES_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "btcprof/activity.hpp"
#include "btcprof/generators.hpp"

namespace btcprof {

struct CounterReference {
  std::string_view label;
  GeneratorKind kind;
  std::size_t width;
  std::uint64_t transitions;
  std::string_view tau;
  int decimals;  // as printed
};

inline constexpr std::array<CounterReference, 4> kCounterReference{{
    {"Binary Counter (4-bit)", GeneratorKind::kBinaryCounter, 4, 26, "0.43", 2},
    {"Gray Counter (4-bit)", GeneratorKind::kGrayCounter, 4, 15, "0.25", 2},
    {"Binary Counter (8-bit)", GeneratorKind::kBinaryCounter, 8, 502, "0.246", 3},
    {"Gray Counter (8-bit)", GeneratorKind::kGrayCounter, 8, 255, "0.125", 3},
}};

inline constexpr std::size_t kPatternWidth = 16;
inline constexpr std::string_view kPatternSeed = "1011001010110110";
inline constexpr std::array<std::size_t, 3> kPatternCycles{8, 16, 32};
inline constexpr Rounding kPatternRounding = Rounding::kTruncate;

struct PatternReference {
  std::string_view label;
  GeneratorKind kind;
  std::array<std::uint64_t, 3> transitions;  // per kPatternCycles entry
  std::array<std::string_view, 3> tau;
};

inline constexpr std::array<PatternReference, 4> kPatternReference{{
    {"Internal LFSR", GeneratorKind::kLfsrInternal, {66, 114, 236}, {"0.51", "0.44", "0.46"}},
    {"External LFSR", GeneratorKind::kLfsrExternal, {88, 163, 266}, {"0.68", "0.63", "0.51"}},
    {"CA-90", GeneratorKind::kCa90, {66, 138, 276}, {"0.51", "0.53", "0.53"}},
    {"CA150", GeneratorKind::kCa150, {67, 135, 259}, {"0.52", "0.52", "0.50"}},
}};

struct CounterRow {
  CounterReference reference;
  ActivityReport report;
  std::string tau_text;  // computed, at the reference's decimals
  bool transitions_match = false;
  bool tau_match = false;
};

// Rows in kCounterReference order.
std::vector<CounterRow> reproduce_counter_table();

struct PatternCell {
  std::size_t cycles = 0;
  std::uint64_t reference_transitions = 0;
  std::string_view reference_tau;
  // reference_transitions / (16 * cycles) rendered with kPatternRounding.
  std::string reference_tau_from_count;
  bool reference_consistent = false;
  std::uint64_t computed_transitions = 0;
  double computed_tau = 0.0;
  std::string computed_tau_text;
  bool transitions_match = false;
};

struct PatternRow {
  PatternReference reference;
  std::array<PatternCell, 3> cells;
};

struct PatternTableOptions {
  std::vector<std::size_t> taps = default_taps(kPatternWidth);
  CaBoundary boundary = CaBoundary::kNull;
};

// Rows in kPatternReference order.
std::vector<PatternRow> reproduce_pattern_table(
    const PatternTableOptions& options = {});

std::string render_counter_table(const std::vector<CounterRow>& rows);
std::string render_pattern_table(const std::vector<PatternRow>& rows,
                                 const PatternTableOptions& options);

}  // namespace btcprof

#endif  // BTCPROF_REFERENCE_TABLES_HPP_
