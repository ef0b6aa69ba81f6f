#include "kolmo/enumeration.hpp"

#include <bit>
#include <stdexcept>

namespace kolmo {

BitString ordinal_to_string(const Ordinal& n) {
  if (n < 1) throw std::domain_error("ordinal_to_string: ordinals are 1-based");
  const Ordinal shifted = n + 1;
  const std::string digits = shifted.get_str(2);
  return BitString::from_text(std::string_view(digits).substr(1));
}

Ordinal string_to_ordinal(const BitString& p) {
  if (p.empty()) throw std::domain_error("string_to_ordinal: the empty string has no ordinal");
  Ordinal value("1" + p.to_text(), 2);
  return value - 1;
}

BitString string_at(std::uint64_t index) {
  BitString s;
  const std::uint64_t shifted = index + 1;
  const int width = std::bit_width(shifted) - 1;
  s.reserve(static_cast<std::size_t>(width));
  for (int j = width - 1; j >= 0; --j) s.push_back((shifted >> j) & 1);
  return s;
}

std::uint64_t index_of(const BitString& p) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < p.size(); ++i) v = (v << 1) | (p.bit(i) ? 1 : 0);
  return v - 1;
}

Ordinal string_count_up_to(unsigned max_len) {
  Ordinal c;
  mpz_ui_pow_ui(c.get_mpz_t(), 2, max_len + 1);
  return c - 2;
}

}  // namespace kolmo
