#include "btcprof/encoders.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace btcprof {

Word gray_encode(const Word& word) { return word ^ word.shifted_toward_lsb(); }

Word gray_decode(const Word& gray) {
  Word out(gray.width());
  bool acc = false;
  for (std::size_t i = gray.width(); i-- > 0;) {
    acc ^= gray.bit(i);
    out.set_bit(i, acc);
  }
  return out;
}

BusLineState bus_invert_encode(const BusLineState& prev, const Word& next_raw) {
  const std::size_t flips = hamming_distance(prev.word, next_raw);
  if (2 * flips > next_raw.width()) return {~next_raw, true};
  return {next_raw, false};
}

Word bus_invert_decode(const BusLineState& line) {
  return line.invert ? ~line.word : line.word;
}

Word bus_lines(const BusLineState& line) {
  const std::size_t width = line.word.width();
  Word out(width + 1);
  for (std::size_t i = 0; i < width; ++i) out.set_bit(i, line.word.bit(i));
  out.set_bit(width, line.invert);
  return out;
}

std::string_view to_string(Encoding encoding) {
  switch (encoding) {
    case Encoding::kNone: return "none";
    case Encoding::kGray: return "gray";
    case Encoding::kBusInvert: return "businvert";
  }
  return "unknown";
}

std::optional<Encoding> parse_encoding(std::string_view name) {
  for (Encoding e : {Encoding::kNone, Encoding::kGray, Encoding::kBusInvert}) {
    if (to_string(e) == name) return e;
  }
  return std::nullopt;
}

Trace gray_encode_trace(const Trace& trace) {
  std::vector<Word> words;
  words.reserve(trace.size());
  for (const Word& w : trace) words.push_back(gray_encode(w));
  return Trace(trace.width(), std::move(words));
}

Trace bus_invert_encode_trace(const Trace& trace) {
  const std::size_t width = trace.width();
  if (width + 1 > kMaxWidth) {
    throw std::out_of_range("bus-invert needs width + 1 <= " +
                            std::to_string(kMaxWidth));
  }
  std::vector<Word> words;
  words.reserve(trace.size());
  if (!trace.empty()) {
    BusLineState line{trace[0], false};
    words.push_back(bus_lines(line));
    for (std::size_t i = 1; i < trace.size(); ++i) {
      line = bus_invert_encode(line, trace[i]);
      words.push_back(bus_lines(line));
    }
  }
  return Trace(width + 1, std::move(words));
}

Trace bus_invert_decode_trace(const Trace& lines) {
  if (lines.width() < 2) {
    throw std::invalid_argument("bus-invert line trace needs width >= 2");
  }
  const std::size_t width = lines.width() - 1;
  std::vector<Word> words;
  words.reserve(lines.size());
  for (const Word& l : lines) {
    BusLineState line{Word(width), l.bit(width)};
    for (std::size_t i = 0; i < width; ++i) line.word.set_bit(i, l.bit(i));
    words.push_back(bus_invert_decode(line));
  }
  return Trace(width, std::move(words));
}

Trace apply_encoding(const Trace& trace, Encoding encoding) {
  switch (encoding) {
    case Encoding::kGray: return gray_encode_trace(trace);
    case Encoding::kBusInvert: return bus_invert_encode_trace(trace);
    case Encoding::kNone: break;
  }
  return trace;
}

}  // namespace btcprof
