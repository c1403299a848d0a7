#include "btcprof/generators.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>

#include "btcprof/encoders.hpp"

namespace btcprof {
namespace {

void check_taps(std::size_t width, std::span<const std::size_t> taps) {
  for (std::size_t t : taps) {
    if (t == 0 || t > width) {
      throw std::invalid_argument("tap position " + std::to_string(t) +
                                  " outside 1.." + std::to_string(width));
    }
  }
}

bool neighbour(const Word& state, std::ptrdiff_t index, CaBoundary boundary) {
  const auto width = static_cast<std::ptrdiff_t>(state.width());
  if (index < 0 || index >= width) {
    if (boundary == CaBoundary::kNull) return false;
    index = (index + width) % width;
  }
  return state.bit(static_cast<std::size_t>(index));
}

}  // namespace

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kLfsrInternal: return "lfsr_internal";
    case GeneratorKind::kLfsrExternal: return "lfsr_external";
    case GeneratorKind::kCa90: return "ca90";
    case GeneratorKind::kCa150: return "ca150";
    case GeneratorKind::kBinaryCounter: return "binary";
    case GeneratorKind::kGrayCounter: return "gray";
  }
  return "unknown";
}

std::string_view to_string(CaBoundary boundary) {
  return boundary == CaBoundary::kNull ? "null" : "cyclic";
}

std::optional<GeneratorKind> parse_generator_kind(std::string_view name) {
  for (GeneratorKind k :
       {GeneratorKind::kLfsrInternal, GeneratorKind::kLfsrExternal,
        GeneratorKind::kCa90, GeneratorKind::kCa150,
        GeneratorKind::kBinaryCounter, GeneratorKind::kGrayCounter}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::optional<CaBoundary> parse_ca_boundary(std::string_view name) {
  if (name == "null") return CaBoundary::kNull;
  if (name == "cyclic") return CaBoundary::kCyclic;
  return std::nullopt;
}

bool is_lfsr(GeneratorKind kind) noexcept {
  return kind == GeneratorKind::kLfsrInternal ||
         kind == GeneratorKind::kLfsrExternal;
}

bool is_ca(GeneratorKind kind) noexcept {
  return kind == GeneratorKind::kCa90 || kind == GeneratorKind::kCa150;
}

std::vector<std::size_t> default_taps(std::size_t width) {
  // Xilinx XAPP052 table, except 16 which uses the common
  // x^16 + x^14 + x^13 + x^11 + 1 register.
  static const std::array<std::vector<std::size_t>, 33> kTable = {{
      {},
      {1},
      {2, 1},
      {3, 2},
      {4, 3},
      {5, 3},
      {6, 5},
      {7, 6},
      {8, 6, 5, 4},
      {9, 5},
      {10, 7},
      {11, 9},
      {12, 6, 4, 1},
      {13, 4, 3, 1},
      {14, 5, 3, 1},
      {15, 14},
      {16, 14, 13, 11},
      {17, 14},
      {18, 11},
      {19, 6, 2, 1},
      {20, 17},
      {21, 19},
      {22, 21},
      {23, 18},
      {24, 23, 22, 17},
      {25, 22},
      {26, 6, 2, 1},
      {27, 5, 2, 1},
      {28, 25},
      {29, 27},
      {30, 6, 4, 1},
      {31, 28},
      {32, 22, 2, 1},
  }};
  return width < kTable.size() ? kTable[width] : std::vector<std::size_t>{};
}

void validate(const GeneratorConfig& config) {
  if (!is_lfsr(config.kind)) return;
  const std::size_t width = config.width();
  if (config.taps.empty()) throw std::invalid_argument("LFSR tap set is empty");
  check_taps(width, config.taps);
  if (std::find(config.taps.begin(), config.taps.end(), width) ==
      config.taps.end()) {
    throw std::invalid_argument("LFSR taps must include position " +
                                std::to_string(width));
  }
  if (config.seed.is_zero()) throw std::invalid_argument("all-zero LFSR seed");
}

Word lfsr_external_step(const Word& state, std::span<const std::size_t> taps) {
  const std::size_t width = state.width();
  check_taps(width, taps);
  bool feedback = false;
  for (std::size_t t : taps) feedback ^= state.bit(width - t);
  Word next = state.shifted_toward_lsb();
  next.set_bit(width - 1, feedback);
  return next;
}

Word lfsr_internal_step(const Word& state, std::span<const std::size_t> taps) {
  const std::size_t width = state.width();
  check_taps(width, taps);
  const bool out = state.bit(0);
  Word next = state.shifted_toward_lsb();
  if (out) {
    next.set_bit(width - 1, true);
    for (std::size_t t : taps) {
      if (t < width) next.flip_bit(t - 1);
    }
  }
  return next;
}

Word ca_step(const Word& state, CaRule rule, CaBoundary boundary) {
  const std::vector<CaRule> rules(state.width(), rule);
  return ca_step(state, rules, boundary);
}

Word ca_step(const Word& state, std::span<const CaRule> rules,
             CaBoundary boundary) {
  if (rules.size() != state.width()) {
    throw std::invalid_argument("CA rule vector length differs from width");
  }
  Word next(state.width());
  for (std::size_t i = 0; i < state.width(); ++i) {
    const auto idx = static_cast<std::ptrdiff_t>(i);
    bool v = neighbour(state, idx + 1, boundary) ^
             neighbour(state, idx - 1, boundary);
    if (rules[i] == CaRule::kRule150) v ^= state.bit(i);
    next.set_bit(i, v);
  }
  return next;
}

Word binary_counter_step(const Word& state) {
  Word next = state;
  return next.increment();
}

Word gray_counter_step(const Word& state) {
  Word n = gray_decode(state);
  return gray_encode(n.increment());
}

Generator::Generator(GeneratorConfig config)
    : config_(std::move(config)), current_(config_.seed) {
  validate(config_);
}

const Word& Generator::advance() {
  switch (config_.kind) {
    case GeneratorKind::kLfsrInternal:
      current_ = lfsr_internal_step(current_, config_.taps);
      break;
    case GeneratorKind::kLfsrExternal:
      current_ = lfsr_external_step(current_, config_.taps);
      break;
    case GeneratorKind::kCa90:
      current_ = ca_step(current_, CaRule::kRule90, config_.boundary);
      break;
    case GeneratorKind::kCa150:
      current_ = ca_step(current_, CaRule::kRule150, config_.boundary);
      break;
    case GeneratorKind::kBinaryCounter:
      current_.increment();
      break;
    case GeneratorKind::kGrayCounter:
      current_ = gray_counter_step(current_);
      break;
  }
  return current_;
}

Trace generate(const GeneratorConfig& config, std::size_t cycles) {
  Generator gen(config);
  std::vector<Word> words;
  words.reserve(cycles + 1);
  words.push_back(gen.current());
  for (std::size_t i = 0; i < cycles; ++i) words.push_back(gen.advance());
  return Trace(config.width(), std::move(words));
}

}  // namespace btcprof
