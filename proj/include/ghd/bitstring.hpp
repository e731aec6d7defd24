#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ghd {

// Hard cap on string length; enumerations have their own, much smaller caps.
inline constexpr std::size_t kMaxBits = std::size_t{1} << 20;

/// Fixed-length Boolean string packed into 64-bit words, bit i stored at
/// word i/64, bit i%64 (least-significant-bit first). All bits beyond
/// length() are kept zero so equality and hashing can work word-wise.
class BitString {
 public:
  BitString() = default;

  explicit BitString(std::size_t length) : len_(check_len(length)), words_(word_count(length), 0) {}

  /// Builds from the low n bits of a word (handy for n <= 64 enumerations).
  static BitString from_word(std::size_t length, std::uint64_t value) {
    BitString s(length);
    if (length < 64) value &= (std::uint64_t{1} << length) - 1;
    if (!s.words_.empty()) s.words_[0] = value;
    return s;
  }

  /// Parses a '0'/'1' string, index 0 leftmost. This is the text form used
  /// in every report and CLI argument.
  static BitString parse(std::string_view text) {
    BitString s(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (c == '1') {
        s.set(i, true);
      } else if (c != '0') {
        throw std::invalid_argument("BitString::parse: expected only '0'/'1'");
      }
    }
    return s;
  }

  std::size_t length() const { return len_; }
  std::size_t word_count() const { return words_.size(); }
  const std::uint64_t* words() const { return words_.data(); }
  std::uint64_t word(std::size_t i) const { return words_[i]; }
  std::uint64_t& mutable_word(std::size_t i) { return words_[i]; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  void set(std::size_t i, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t weight() const {
    std::size_t w = 0;
    for (std::uint64_t x : words_) w += static_cast<std::size_t>(std::popcount(x));
    return w;
  }

  BitString operator^(const BitString& o) const {
    require_same_length(o);
    BitString r(len_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] ^ o.words_[i];
    return r;
  }

  BitString complement() const {
    BitString r(len_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.mask_tail();
    return r;
  }

  bool operator==(const BitString& o) const { return len_ == o.len_ && words_ == o.words_; }
  bool operator!=(const BitString& o) const { return !(*this == o); }

  /// Lexicographic order of the text form: first differing index decides,
  /// 0 < 1. Within a word the lowest set bit of the XOR is the first
  /// differing index.
  bool lex_less(const BitString& o) const {
    require_same_length(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t d = words_[i] ^ o.words_[i];
      if (d) {
        std::uint64_t low = d & (~d + 1);
        return (words_[i] & low) == 0;
      }
    }
    return false;
  }

  std::string to_string() const {
    std::string out(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
      if (get(i)) out[i] = '1';
    return out;
  }

  void require_same_length(const BitString& o) const {
    if (len_ != o.len_) throw std::invalid_argument("BitString: length mismatch");
  }

 private:
  static std::size_t check_len(std::size_t n) {
    if (n > kMaxBits) throw std::invalid_argument("BitString: length exceeds cap 2^20");
    return n;
  }
  static std::size_t word_count(std::size_t n) { return (n + 63) / 64; }
  void mask_tail() {
    if (len_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (len_ % 64)) - 1;
  }

  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Number of coordinates where x and y differ.
inline std::size_t hamming_distance(const BitString& x, const BitString& y) {
  x.require_same_length(y);
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.word_count(); ++i)
    d += static_cast<std::size_t>(std::popcount(x.word(i) ^ y.word(i)));
  return d;
}

struct BitStringHash {
  std::size_t operator()(const BitString& s) const {
    std::uint64_t h = 0xcbf29ce484222325ull ^ s.length();
    for (std::size_t i = 0; i < s.word_count(); ++i) {
      h ^= s.word(i);
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace ghd
