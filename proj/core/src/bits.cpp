#include "btcprof/bits.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace btcprof {
namespace {

constexpr std::size_t kLimbBits = 64;

std::size_t limb_count(std::size_t width) {
  return (width + kLimbBits - 1) / kLimbBits;
}

int digit_value(char c, Radix radix) {
  int v = -1;
  if (c >= '0' && c <= '9') {
    v = c - '0';
  } else if (c >= 'a' && c <= 'f') {
    v = c - 'a' + 10;
  } else if (c >= 'A' && c <= 'F') {
    v = c - 'A' + 10;
  }
  return v < static_cast<int>(radix) ? v : -1;
}

}  // namespace

void check_width(std::size_t width) {
  if (width == 0 || width > kMaxWidth) {
    throw std::out_of_range("width " + std::to_string(width) +
                            " outside 1.." + std::to_string(kMaxWidth));
  }
}

Word::Word(std::size_t width) : width_(width) {
  check_width(width);
  limbs_.assign(limb_count(width), 0);
}

Word Word::from_uint(std::size_t width, std::uint64_t value) {
  Word w(width);
  w.limbs_[0] = value;
  if (width < kLimbBits && (value >> width) != 0) {
    throw std::out_of_range("value " + std::to_string(value) +
                            " does not fit in " + std::to_string(width) +
                            " bits");
  }
  return w;
}

Word Word::ones(std::size_t width) { return ~Word(width); }

bool Word::bit(std::size_t index) const {
  if (index >= width_) throw std::out_of_range("bit index out of range");
  return (limbs_[index / kLimbBits] >> (index % kLimbBits)) & 1U;
}

void Word::set_bit(std::size_t index, bool value) {
  if (index >= width_) throw std::out_of_range("bit index out of range");
  const std::uint64_t mask = std::uint64_t{1} << (index % kLimbBits);
  if (value) {
    limbs_[index / kLimbBits] |= mask;
  } else {
    limbs_[index / kLimbBits] &= ~mask;
  }
}

void Word::flip_bit(std::size_t index) {
  if (index >= width_) throw std::out_of_range("bit index out of range");
  limbs_[index / kLimbBits] ^= std::uint64_t{1} << (index % kLimbBits);
}

std::size_t Word::popcount() const noexcept {
  std::size_t n = 0;
  for (std::uint64_t limb : limbs_) n += static_cast<std::size_t>(std::popcount(limb));
  return n;
}

bool Word::is_zero() const noexcept {
  for (std::uint64_t limb : limbs_) {
    if (limb != 0) return false;
  }
  return true;
}

Word Word::shifted_toward_lsb() const {
  Word out(width_);
  const std::size_t n = limbs_.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t v = limbs_[i] >> 1;
    if (i + 1 < n) v |= limbs_[i + 1] << 63;
    out.limbs_[i] = v;
  }
  return out;
}

Word Word::shifted_toward_msb() const {
  Word out(width_);
  const std::size_t n = limbs_.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t v = limbs_[i] << 1;
    if (i > 0) v |= limbs_[i - 1] >> 63;
    out.limbs_[i] = v;
  }
  out.clear_unused_bits();
  return out;
}

Word& Word::increment() noexcept {
  for (std::uint64_t& limb : limbs_) {
    if (++limb != 0) break;
  }
  clear_unused_bits();
  return *this;
}

Word Word::operator~() const {
  Word out(*this);
  for (std::uint64_t& limb : out.limbs_) limb = ~limb;
  out.clear_unused_bits();
  return out;
}

Word& Word::operator^=(const Word& other) {
  require_same_width(other);
  for (std::size_t i = 0; i < limbs_.size(); ++i) limbs_[i] ^= other.limbs_[i];
  return *this;
}

Word& Word::operator&=(const Word& other) {
  require_same_width(other);
  for (std::size_t i = 0; i < limbs_.size(); ++i) limbs_[i] &= other.limbs_[i];
  return *this;
}

Word& Word::operator|=(const Word& other) {
  require_same_width(other);
  for (std::size_t i = 0; i < limbs_.size(); ++i) limbs_[i] |= other.limbs_[i];
  return *this;
}

void Word::clear_unused_bits() noexcept {
  const std::size_t used = width_ % kLimbBits;
  if (used != 0) limbs_.back() &= (std::uint64_t{1} << used) - 1;
}

void Word::require_same_width(const Word& other) const {
  if (other.width_ != width_) {
    throw std::invalid_argument("width mismatch: " + std::to_string(width_) +
                                " vs " + std::to_string(other.width_));
  }
}

Word word_from_text(std::string_view text, Radix radix, std::size_t width) {
  check_width(width);
  if (text.empty()) throw std::invalid_argument("empty word text");

  const std::size_t bits_per_digit = radix == Radix::kHex ? 4 : 1;
  Word w(width);
  // Walk from the least significant digit, placing its bits directly.
  std::size_t position = 0;
  for (auto it = text.rbegin(); it != text.rend(); ++it) {
    const int v = digit_value(*it, radix);
    if (v < 0) {
      throw std::invalid_argument(std::string("invalid digit '") + *it +
                                  "' for radix " +
                                  std::to_string(static_cast<int>(radix)));
    }
    for (std::size_t b = 0; b < bits_per_digit; ++b, ++position) {
      if (((v >> b) & 1) == 0) continue;
      if (position >= width) {
        throw std::out_of_range("value '" + std::string(text) +
                                "' exceeds width " + std::to_string(width));
      }
      w.set_bit(position, true);
    }
  }
  return w;
}

std::string to_binary(const Word& word) {
  std::string s(word.width(), '0');
  for (std::size_t i = 0; i < word.width(); ++i) {
    if (word.bit(i)) s[word.width() - 1 - i] = '1';
  }
  return s;
}

std::string to_hex(const Word& word) {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  const std::size_t digits = (word.width() + 3) / 4;
  std::string s(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    int v = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t i = d * 4 + b;
      if (i < word.width() && word.bit(i)) v |= 1 << b;
    }
    s[digits - 1 - d] = kDigits[v];
  }
  return s;
}

std::string to_text(const Word& word, Radix radix) {
  return radix == Radix::kHex ? to_hex(word) : to_binary(word);
}

std::size_t hamming_distance(const Word& a, const Word& b) {
  if (a.width() != b.width()) {
    throw std::invalid_argument("hamming_distance: width mismatch " +
                                std::to_string(a.width()) + " vs " +
                                std::to_string(b.width()));
  }
  const auto la = a.limbs();
  const auto lb = b.limbs();
  std::size_t n = 0;
  for (std::size_t i = 0; i < la.size(); ++i) {
    n += static_cast<std::size_t>(std::popcount(la[i] ^ lb[i]));
  }
  return n;
}

std::size_t popcount(const Word& word) noexcept { return word.popcount(); }

Trace::Trace(std::size_t width) : width_(width) { check_width(width); }

Trace::Trace(std::size_t width, std::vector<Word> words)
    : width_(width), words_(std::move(words)) {
  check_width(width);
  for (const Word& w : words_) {
    if (w.width() != width_) {
      throw std::invalid_argument("trace word width " +
                                  std::to_string(w.width()) +
                                  " differs from trace width " +
                                  std::to_string(width_));
    }
  }
}

void Trace::push_back(Word word) {
  if (word.width() != width_) {
    throw std::invalid_argument("trace word width " +
                                std::to_string(word.width()) +
                                " differs from trace width " +
                                std::to_string(width_));
  }
  words_.push_back(std::move(word));
}

}  // namespace btcprof
