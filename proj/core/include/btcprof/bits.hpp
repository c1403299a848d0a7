// Fixed-width bit vectors and bus traces.
//
// A Word holds exactly `width` bits. Bit 0 is the least significant bit and
// the rightmost character of the binary text form, so "00111100" has bits
// 2..5 set. Bits above `width` are never stored.

#ifndef BTCPROF_BITS_HPP_
#define BTCPROF_BITS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace btcprof {

inline constexpr std::size_t kMaxWidth = 1024;

// Throws std::out_of_range unless 1 <= width <= kMaxWidth.
void check_width(std::size_t width);

class Word {
 public:
  // All-zero word of the given width.
  explicit Word(std::size_t width);

  // Low bits of `value`; bits at or above `width` must be zero.
  static Word from_uint(std::size_t width, std::uint64_t value);
  static Word ones(std::size_t width);

  std::size_t width() const noexcept { return width_; }

  bool bit(std::size_t index) const;
  void set_bit(std::size_t index, bool value);
  void flip_bit(std::size_t index);

  std::size_t popcount() const noexcept;
  bool is_zero() const noexcept;

  // Value of the low 64 bits.
  std::uint64_t low_bits() const noexcept { return limbs_[0]; }
  std::span<const std::uint64_t> limbs() const noexcept { return limbs_; }

  // Shifts by one position toward bit 0 (right) or toward the MSB (left).
  // The vacated bit is zero and the bit shifted out is dropped.
  Word shifted_toward_lsb() const;
  Word shifted_toward_msb() const;

  // Adds one modulo 2^width.
  Word& increment() noexcept;

  Word operator~() const;
  Word& operator^=(const Word& other);
  Word& operator&=(const Word& other);
  Word& operator|=(const Word& other);

  friend Word operator^(Word a, const Word& b) { return a ^= b; }
  friend Word operator&(Word a, const Word& b) { return a &= b; }
  friend Word operator|(Word a, const Word& b) { return a |= b; }
  friend bool operator==(const Word&, const Word&) = default;

 private:
  void clear_unused_bits() noexcept;
  void require_same_width(const Word& other) const;

  std::size_t width_;
  std::vector<std::uint64_t> limbs_;
};

enum class Radix { kBinary = 2, kHex = 16 };

// Parses MSB-first text. Hex accepts either case and may carry leading zeros
// beyond ceil(width/4) digits as long as the value fits. Throws
// std::invalid_argument on an empty string or bad digit and std::out_of_range
// when the value needs more than `width` bits.
Word word_from_text(std::string_view text, Radix radix, std::size_t width);

// Binary: exactly `width` characters. Hex: uppercase, ceil(width/4) digits.
std::string to_binary(const Word& word);
std::string to_hex(const Word& word);
std::string to_text(const Word& word, Radix radix);

// Number of differing bit positions. Throws std::invalid_argument when the
// widths differ.
std::size_t hamming_distance(const Word& a, const Word& b);
std::size_t popcount(const Word& word) noexcept;

// Ordered sequence of same-width words, one per clock cycle.
class Trace {
 public:
  explicit Trace(std::size_t width);
  Trace(std::size_t width, std::vector<Word> words);

  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  // Word-to-word transfers, size() - 1 for a non-empty trace.
  std::size_t transfers() const noexcept {
    return words_.empty() ? 0 : words_.size() - 1;
  }

  void push_back(Word word);

  const Word& operator[](std::size_t cycle) const { return words_[cycle]; }
  const std::vector<Word>& words() const noexcept { return words_; }
  auto begin() const noexcept { return words_.begin(); }
  auto end() const noexcept { return words_.end(); }

  friend bool operator==(const Trace&, const Trace&) = default;

 private:
  std::size_t width_;
  std::vector<Word> words_;
};

}  // namespace btcprof

#endif  // BTCPROF_BITS_HPP_
