#pragma once

#include <cstdint>
#include <gmpxx.h>

#include "kolmo/bitstring.hpp"

namespace kolmo {

/// 1-based ordinal of a nonempty bitstring in length-lexicographic order.
/// Arbitrary precision so no desk-scale enumeration can overflow.
using Ordinal = mpz_class;

/// The n-th nonempty bitstring in length-lex order: write n+1 in binary
/// and drop the leading 1. Throws std::domain_error for n < 1.
BitString ordinal_to_string(const Ordinal& n);

/// Inverse bijection: prepend 1, read as binary, subtract 1. Throws
/// std::domain_error on the empty string (the ordinal table starts at
/// one-bit strings).
Ordinal string_to_ordinal(const BitString& p);

/// Fast fixed-width path used by the sweep engines. Index 0 denotes the
/// empty string; index n >= 1 agrees with ordinal_to_string(n).
BitString string_at(std::uint64_t index);

/// Inverse of string_at for strings of fewer than 64 bits.
std::uint64_t index_of(const BitString& p);

/// Number of nonempty strings of length <= max_len: 2^(max_len+1) - 2.
Ordinal string_count_up_to(unsigned max_len);

/// Streams all nonempty strings of length in [1, max_len] in length-lex
/// order. Usage: for (StringEnumerator e(L); e.valid(); e.next()) ...
class StringEnumerator {
 public:
  explicit StringEnumerator(unsigned max_len) : max_len_(max_len) {
    if (max_len_ >= 1) current_.push_back(false);
  }

  bool valid() const { return !current_.empty(); }
  const BitString& value() const { return current_; }

  void next() {
    // Increment within the current length block, 0 before 1; on overflow
    // move to the all-zeros string one bit longer.
    std::size_t i = current_.size();
    while (i > 0 && current_.bit(i - 1)) --i;
    if (i == 0) {
      if (current_.size() >= max_len_) {
        current_.clear();
        return;
      }
      const std::size_t len = current_.size() + 1;
      current_.clear();
      for (std::size_t j = 0; j < len; ++j) current_.push_back(false);
      return;
    }
    BitString next;
    next.reserve(current_.size());
    for (std::size_t j = 0; j + 1 < i; ++j) next.push_back(current_.bit(j));
    next.push_back(true);
    for (std::size_t j = i; j < current_.size(); ++j) next.push_back(false);
    current_ = next;
  }

 private:
  unsigned max_len_;
  BitString current_;
};

}  // namespace kolmo
