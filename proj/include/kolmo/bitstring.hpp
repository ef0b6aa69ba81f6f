#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kolmo {

/// A finite sequence of bits, packed 64 per word. Bit 0 is the first
/// (leftmost) bit of the string. Unused high bits of the last word are
/// kept zero so equality and hashing can work word-wise.
class BitString {
 public:
  BitString() = default;

  // Parses a string of '0'/'1' characters; "-" is accepted as the empty
  // string to match the on-disk record formats.
  static BitString from_text(std::string_view text) {
    BitString s;
    if (text == "-") return s;
    s.reserve(text.size());
    for (char c : text) {
      if (c != '0' && c != '1') throw std::invalid_argument("BitString: expected '0' or '1'");
      s.push_back(c == '1');
    }
    return s;
  }

  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }

  bool bit(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  void clear() {
    words_.clear();
    len_ = 0;
  }

  void reserve(std::size_t bits) { words_.reserve((bits + 63) >> 6); }

  void push_back(bool b) {
    if ((len_ & 63) == 0) words_.push_back(0);
    if (b) words_.back() |= std::uint64_t{1} << (len_ & 63);
    ++len_;
  }

  /// Appends a copy of the whole string to itself (doubles the length).
  void append_copy_of_self() { append_bits(*this, false); }

  /// Appends the bitwise complement of the whole string to itself.
  void append_complement_of_self() { append_bits(*this, true); }

  void append(const BitString& other) { append_bits(other, false); }

  std::string to_text() const {
    std::string out(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
      if (bit(i)) out[i] = '1';
    return out;
  }

  // Renders "-" for the empty string, as the record formats require.
  std::string to_field() const { return len_ == 0 ? std::string("-") : to_text(); }

  friend bool operator==(const BitString& a, const BitString& b) {
    return a.len_ == b.len_ && a.words_ == b.words_;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
      for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xff;
        h *= 1099511628211ull;
      }
    };
    mix(len_);
    for (std::uint64_t w : words_) mix(w);
    return static_cast<std::size_t>(h);
  }

 private:
  // Appends `src.len_` bits read from src (possibly *this) to the tail,
  // complemented when `invert` is set. Safe for self-append: the source
  // region [0, old_len) is never clobbered before it is read.
  void append_bits(const BitString& src, bool invert) {
    const std::size_t n = src.len_;
    if (n == 0) return;
    const std::size_t old_len = len_;
    words_.resize((old_len + n + 63) >> 6, 0);
    const std::uint64_t* sw = (&src == this) ? words_.data() : src.words_.data();
    for (std::size_t done = 0; done < n; done += 64) {
      const std::size_t chunk = std::min<std::size_t>(64, n - done);
      std::uint64_t v = sw[done >> 6];
      if (invert) v = ~v;
      if (chunk < 64) v &= (std::uint64_t{1} << chunk) - 1;
      const std::size_t pos = old_len + done;
      const std::size_t word = pos >> 6;
      const std::size_t off = pos & 63;
      words_[word] |= v << off;
      if (off != 0 && off + chunk > 64) words_[word + 1] |= v >> (64 - off);
    }
    len_ = old_len + n;
  }

  std::vector<std::uint64_t> words_;
  std::size_t len_ = 0;
};

/// Length-lexicographic order: shorter strings first, then lexicographic
/// with 0 before 1. This is the canonical order of the whole project.
inline bool length_lex_less(const BitString& a, const BitString& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.bit(i) != b.bit(i)) return !a.bit(i);
  return false;
}

struct BitStringHash {
  std::size_t operator()(const BitString& s) const { return s.hash(); }
};

struct LengthLexLess {
  bool operator()(const BitString& a, const BitString& b) const { return length_lex_less(a, b); }
};

}  // namespace kolmo
