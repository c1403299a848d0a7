#include "btcprof/reference_tables.hpp"

#include <cstdio>
#include <sstream>
#include <string>

#include "btcprof/bits.hpp"

namespace btcprof {
namespace {

std::string pad(std::string_view s, std::size_t width) {
  std::string out(s);
  if (out.size() < width) out.append(width - out.size(), ' ');
  return out;
}

std::string rpad(std::string_view s, std::size_t width) {
  std::string out(s);
  if (out.size() < width) out.insert(0, width - out.size(), ' ');
  return out;
}

}  // namespace

std::vector<CounterRow> reproduce_counter_table() {
  std::vector<CounterRow> rows;
  for (const CounterReference& ref : kCounterReference) {
    GeneratorConfig config{
        .kind = ref.kind, .seed = Word(ref.width), .taps = {}};
    const std::size_t transfers = (std::size_t{1} << ref.width) - 1;
    CounterRow row{.reference = ref,
                   .report = analyze_trace(generate(config, transfers)),
                   .tau_text = {}};
    row.tau_text = tau_display(row.report, ref.decimals, Rounding::kHalfUp);
    row.transitions_match = row.report.total_transitions == ref.transitions;
    row.tau_match = row.tau_text == ref.tau;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<PatternRow> reproduce_pattern_table(
    const PatternTableOptions& options) {
  const Word seed = word_from_text(kPatternSeed, Radix::kBinary, kPatternWidth);
  std::vector<PatternRow> rows;
  for (const PatternReference& ref : kPatternReference) {
    GeneratorConfig config{.kind = ref.kind,
                           .seed = seed,
                           .taps = {},
                           .boundary = options.boundary};
    if (is_lfsr(ref.kind)) config.taps = options.taps;

    // One long run; each column reads the prefix it needs.
    const Trace trace = generate(config, kPatternCycles.back());
    const ActivityReport full = analyze_trace(trace, /*keep_per_cycle=*/true);

    PatternRow row{.reference = ref, .cells = {}};
    for (std::size_t c = 0; c < kPatternCycles.size(); ++c) {
      const std::size_t cycles = kPatternCycles[c];
      PatternCell& cell = row.cells[c];
      cell.cycles = cycles;
      cell.reference_transitions = ref.transitions[c];
      cell.reference_tau = ref.tau[c];
      cell.reference_tau_from_count =
          format_ratio(ref.transitions[c], kPatternWidth * cycles, 2,
                       kPatternRounding);
      cell.reference_consistent = cell.reference_tau_from_count == ref.tau[c];

      for (std::size_t k = 0; k < cycles; ++k) {
        cell.computed_transitions += (*full.per_cycle)[k];
      }
      cell.computed_tau =
          switching_activity(cell.computed_transitions, kPatternWidth, cycles);
      cell.computed_tau_text = format_ratio(
          cell.computed_transitions, kPatternWidth * cycles, 2, kPatternRounding);
      cell.transitions_match = cell.computed_transitions == ref.transitions[c];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_counter_table(const std::vector<CounterRow>& rows) {
  std::ostringstream out;
  out << "Switching activity of binary and gray counters (full period from 0)\n"
      << pad("Module", 24) << rpad("No. of transitions", 20)
      << rpad("Switching Activity", 20) << rpad("Reference", 16) << "  Match\n";
  for (const CounterRow& r : rows) {
    const std::string ref = std::to_string(r.reference.transitions) + " / " +
                            std::string(r.reference.tau);
    const bool ok = r.transitions_match && r.tau_match;
    out << pad(r.reference.label, 24)
        << rpad(std::to_string(r.report.total_transitions), 20)
        << rpad(r.tau_text, 20) << rpad(ref, 16) << "  "
        << (ok ? "yes" : "NO") << '\n';
  }
  return out.str();
}

std::string render_pattern_table(const std::vector<PatternRow>& rows,
                                 const PatternTableOptions& options) {
  std::ostringstream out;
  out << "Switching activity of pattern generators (seed " << kPatternSeed
      << ", taps ";
  for (std::size_t i = 0; i < options.taps.size(); ++i) {
    out << (i ? "," : "") << options.taps[i];
  }
  out << ", " << to_string(options.boundary) << " CA boundary)\n"
      << "tau is truncated to two decimals; reference tau is checked against "
         "reference count / (16 x cycles)\n";

  out << pad("Module", 16);
  for (std::size_t cycles : kPatternCycles) {
    out << rpad("transitions@" + std::to_string(cycles), 16);
  }
  for (std::size_t cycles : kPatternCycles) {
    out << rpad("tau@" + std::to_string(cycles), 14);
  }
  out << '\n';

  for (const PatternRow& r : rows) {
    out << pad(r.reference.label, 16);
    for (const PatternCell& c : r.cells) {
      out << rpad(std::to_string(c.computed_transitions) + " (" +
                      std::to_string(c.reference_transitions) +
                      (c.transitions_match ? " =)" : " x)"),
                  16);
    }
    for (const PatternCell& c : r.cells) {
      out << rpad(c.computed_tau_text + " (" + std::string(c.reference_tau) +
                      (c.reference_consistent ? ")" : "?)"),
                  14);
    }
    out << '\n';
  }
  out << "cells read: computed (reference =: counts match, x: differ; "
         "?: reference tau inconsistent with its count)\n";
  return out.str();
}

}  // namespace btcprof
