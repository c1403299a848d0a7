// Trace file format and report serialization.
//
// Trace files are line oriented:
//
//   # comment
//   width=16 radix=hex
//   0000
//   0303   # trailing comments are fine
//   0F03
//
// The first non-blank, non-comment line is the header. Each following
// non-blank line holds one word, MSB first, in the declared radix
// ("bin" or "hex").

#ifndef BTCPROF_TRACE_IO_HPP_
#define BTCPROF_TRACE_IO_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "btcprof/activity.hpp"
#include "btcprof/bits.hpp"

namespace btcprof {

// Malformed trace or report input. line() is 1-based, 0 when not tied to a
// line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct TraceFileHeader {
  std::size_t width = 0;
  Radix radix = Radix::kHex;
};

std::string_view radix_name(Radix radix);  // "bin" | "hex"
std::optional<Radix> parse_radix_name(std::string_view name);

// Throws ParseError on a missing or bad header, an invalid digit, a word
// wider than the header declares or an empty body.
Trace read_trace(std::istream& in);
Trace parse_trace(std::string_view text);

void write_trace(std::ostream& out, const Trace& trace, Radix radix);
std::string render_trace(const Trace& trace, Radix radix);

enum class ReportFormat { kJson, kCsv, kTable };
std::optional<ReportFormat> parse_report_format(std::string_view name);

// JSON keys: width, transfers, total_transitions, tau, tau_display,
// per_bit_toggles and, when present, per_cycle.
std::string write_report(const ActivityReport& report, ReportFormat format);

// Inverse of the JSON form of write_report. Throws ParseError.
ActivityReport report_from_json(std::string_view json);

}  // namespace btcprof

#endif  // BTCPROF_TRACE_IO_HPP_
