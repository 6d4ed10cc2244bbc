#include "eqsig/integer.hpp"

#include <limits>

namespace eqsig {

int sign(const Integer& value) { return sgn(value); }

int sign(const Rational& value) { return sgn(value); }

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

std::optional<Integer> parse_integer(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) return std::nullopt;
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return std::nullopt;
  }
  // GMP rejects a leading '+'.
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  Integer value;
  if (value.set_str(digits, 10) != 0) return std::nullopt;
  return value;
}

std::optional<std::int64_t> to_int64(const Integer& value) {
  static const Integer lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const Integer hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  if (value < lo || value > hi) return std::nullopt;
  return std::stoll(value.get_str());
}

}  // namespace eqsig
