#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace liecoh {

// Exact arithmetic everywhere: no floating point appears in the library.
// GMP's canonical form (lowest terms, positive denominator) is maintained by
// all arithmetic operators; raw two-argument construction is routed through
// make_rat which canonicalizes.
using Int = mpz_class;
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);

/// Parses "n", "-n" or "n/d" with optional surrounding whitespace.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rat parse_rat(std::string_view text);

int sign_of(const Rat& x);

/// lcm of the denominators of xs; returns 1 for an empty list.
Int denominator_lcm(const std::vector<Rat>& xs);

std::string to_string(const Rat& x);
std::string to_string(const Int& x);

}  // namespace liecoh
