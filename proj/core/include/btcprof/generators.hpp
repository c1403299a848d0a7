// Deterministic stimulus sources: LFSRs, linear cellular automata, counters.
//
// Tap positions are numbered 1..width following the usual polynomial
// notation; a tap set {16,14,13,11} stands for x^16 + x^14 + x^13 + x^11 + 1
// and must contain `width` itself. Every register shifts toward bit 0 and
// takes its new MSB from the feedback path.

#ifndef BTCPROF_GENERATORS_HPP_
#define BTCPROF_GENERATORS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "btcprof/bits.hpp"

namespace btcprof {

enum class GeneratorKind {
  kLfsrInternal,  // Galois form
  kLfsrExternal,  // Fibonacci form
  kCa90,
  kCa150,
  kBinaryCounter,
  kGrayCounter,
};

enum class CaRule { kRule90 = 90, kRule150 = 150 };
enum class CaBoundary { kNull, kCyclic };

std::string_view to_string(GeneratorKind kind);
std::string_view to_string(CaBoundary boundary);
// Accepts the names printed by to_string: lfsr_internal, lfsr_external,
// ca90, ca150, binary, gray.
std::optional<GeneratorKind> parse_generator_kind(std::string_view name);
std::optional<CaBoundary> parse_ca_boundary(std::string_view name);

bool is_lfsr(GeneratorKind kind) noexcept;
bool is_ca(GeneratorKind kind) noexcept;

// Maximal-length tap sets for widths 1..32. Width 16 uses {16,14,13,11}.
// Returns an empty vector for other widths.
std::vector<std::size_t> default_taps(std::size_t width);

struct GeneratorConfig {
  GeneratorKind kind = GeneratorKind::kBinaryCounter;
  Word seed{1};
  std::vector<std::size_t> taps;  // LFSR kinds only
  CaBoundary boundary = CaBoundary::kNull;  // CA kinds only

  std::size_t width() const noexcept { return seed.width(); }
};

// Throws std::invalid_argument when an LFSR config has an empty tap set, a
// tap outside 1..width, no tap at `width`, or an all-zero seed.
void validate(const GeneratorConfig& config);

// Fibonacci step: the feedback bit is the XOR of the tapped stages (tap t
// reads bit width - t, so tap `width` is the bit about to be shifted out),
// every bit moves one place toward bit 0 and the feedback enters at the MSB.
Word lfsr_external_step(const Word& state, std::span<const std::size_t> taps);

// Galois step: the bit shifted out of bit 0 re-enters at the MSB and is
// XORed into new bit t - 1 for every tap t < width.
Word lfsr_internal_step(const Word& state, std::span<const std::size_t> taps);

// Uniform rule across all cells. Left neighbour of cell i is i + 1.
Word ca_step(const Word& state, CaRule rule, CaBoundary boundary);
// Hybrid register; rules[i] applies to cell i. Throws std::invalid_argument
// if rules.size() != state.width().
Word ca_step(const Word& state, std::span<const CaRule> rules,
             CaBoundary boundary);

Word binary_counter_step(const Word& state);
Word gray_counter_step(const Word& state);

class Generator {
 public:
  // Validates the config.
  explicit Generator(GeneratorConfig config);

  const GeneratorConfig& config() const noexcept { return config_; }
  const Word& current() const noexcept { return current_; }
  const Word& advance();

 private:
  GeneratorConfig config_;
  Word current_;
};

// [seed, s1, ..., s_cycles]: cycles + 1 words, `cycles` transfers.
Trace generate(const GeneratorConfig& config, std::size_t cycles);

}  // namespace btcprof

#endif  // BTCPROF_GENERATORS_HPP_
