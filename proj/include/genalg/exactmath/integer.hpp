#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace genalg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses an optionally signed decimal integer. Throws InputError.
Integer parse_integer(std::string_view text);

/// Parses "a" or "a/b" into a canonical rational. Throws InputError on a zero
/// denominator or garbage.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

std::optional<std::uint64_t> to_u64(const Integer& value);
Integer from_u64(std::uint64_t value);

/// Nonnegative remainder of a modulo m (m > 0).
Integer mod_floor(const Integer& a, const Integer& m);

}  // namespace genalg
