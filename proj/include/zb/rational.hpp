#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace zb {

// Exact rational coefficients. All symbolic modules work over Rat; no
// floating point enters until the numerics module.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "-p", "p/q". Returns nullopt on malformed input.
std::optional<Rat> parse_rational(std::string_view s);

std::string to_string(const Rat& q);

}  // namespace zb
