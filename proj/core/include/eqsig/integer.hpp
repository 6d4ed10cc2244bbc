#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace eqsig {

using Integer = mpz_class;
using Rational = mpq_class;

/// Sign of an exact value: -1, 0 or +1.
int sign(const Integer& value);
int sign(const Rational& value);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Parses an optionally signed decimal literal ("-12", "+7", "0").
/// Returns nullopt on anything else, including empty input and whitespace.
std::optional<Integer> parse_integer(std::string_view text);

/// Narrowing conversion; nullopt when the value does not fit.
std::optional<std::int64_t> to_int64(const Integer& value);

}  // namespace eqsig
