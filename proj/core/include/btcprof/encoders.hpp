// Low-transition bus encodings: reflected gray code and bus-invert.

#ifndef BTCPROF_ENCODERS_HPP_
#define BTCPROF_ENCODERS_HPP_

#include <optional>
#include <string_view>

#include "btcprof/bits.hpp"

namespace btcprof {

// g = w ^ (w >> 1).
Word gray_encode(const Word& word);
// Prefix XOR from the MSB down; inverse of gray_encode.
Word gray_decode(const Word& gray);

// Data lines plus the invert line of a bus-invert coded bus.
struct BusLineState {
  Word word;
  bool invert = false;

  friend bool operator==(const BusLineState&, const BusLineState&) = default;
};

// Sends the complement of `next_raw` with invert set when more than half of
// the data lines would otherwise toggle. A tie at exactly width/2 does not
// invert. Throws std::invalid_argument on a width mismatch.
BusLineState bus_invert_encode(const BusLineState& prev, const Word& next_raw);
Word bus_invert_decode(const BusLineState& line);

// The width + 1 physical lines; the invert line is bit `width`.
Word bus_lines(const BusLineState& line);

enum class Encoding { kNone, kGray, kBusInvert };

std::string_view to_string(Encoding encoding);
// "none", "gray", "businvert".
std::optional<Encoding> parse_encoding(std::string_view name);

// Word-by-word gray mapping; same width.
Trace gray_encode_trace(const Trace& trace);

// Bus-invert coding of a whole trace, returned as width + 1 line words. The
// first word goes out uninverted. Throws std::out_of_range when width + 1
// exceeds kMaxWidth.
Trace bus_invert_encode_trace(const Trace& trace);

// Recovers the raw words from a trace produced by bus_invert_encode_trace.
Trace bus_invert_decode_trace(const Trace& lines);

Trace apply_encoding(const Trace& trace, Encoding encoding);

}  // namespace btcprof

#endif  // BTCPROF_ENCODERS_HPP_
