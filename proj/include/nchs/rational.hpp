#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace nchs {

// Exact scalar types. mpq_class values stay in lowest terms with a positive
// denominator as long as the raw mpq_t is never touched; every constructor
// below canonicalizes.
using Int = mpz_class;
using Rat = mpq_class;

// p/q in canonical form. q must be nonzero.
Rat frac(long num, long den);
Rat frac(const Int& num, const Int& den);

// Accepts an optional sign, a decimal integer, and an optional "/denominator".
// No floats, no whitespace. Returns nullopt on anything else or on a zero
// denominator.
std::optional<Rat> parse_rat(std::string_view text);

// "p" or "p/q", lowest terms.
std::string to_string(const Rat& value);
std::string to_string(const Int& value);

double to_double(const Rat& value);

} // namespace nchs
