#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "zb/indices.hpp"
#include "zb/poly.hpp"
#include "zb/xalgebra.hpp"

namespace zb {

// Letters of the alphabet: e_0, e_1, and formal symbols a_i with their
// involutes 1-a_i. Encoded so that the involution is XOR with 1:
//   0 -> e_0, 1 -> e_1, 2i -> a_i, 2i+1 -> 1-a_i (i >= 1).
using Letter = int;

constexpr Letter kZero = 0;
constexpr Letter kOne = 1;
inline Letter sym(int i) { return 2 * i; }
inline Letter bar_sym(int i) { return 2 * i + 1; }
inline Letter iota(Letter x) { return x ^ 1; }
inline bool is_concrete(Letter x) { return x < 2; }

std::string letter_name(Letter x);

using APoly = BasicPoly<ATag>;
using LWord = APoly::Word;

LWord lword(const Word01& w);
Word01 lword_to_word01(const LWord& w);  // throws if symbolic letters occur
bool lword_concrete(const LWord& w);

std::string to_string(const LWord& w);
std::string to_string(const APoly& p);

// Applies the involution letterwise, k times (only parity matters).
APoly iota_pow(int k, const APoly& p);
LWord iota_word(const LWord& w);

// W(t;b) = e_{i^0(t)} e_{i^1(t)} ... e_{i^{b-1}(t)}; zero for b < 0.
APoly alt_word(int t, int b);
// U(b) = W(0;b) + W(1;b); zero for b < 0; U(0) = 2.
APoly U(int b);
// U^-(b) = W(0;b) - W(1;b).
APoly U_minus(int b);

// Block notation map B on non-constant monomials, extended linearly.
LWord block_B(const XWord& u);
APoly block_B(const XPoly& u);

// Multivariable block shuffle product (recursive production path).
APoly diamond(const XPoly& u, const APoly& w);

// Closed form over B_d tuples; independent oracle on monomial inputs.
APoly diamond_closed(const XWord& u, const LWord& w);

// Second recursion formula (tail form), for cross-validation.
APoly diamond_second_recursion(const XWord& u, const LWord& w);

// Splitting identity at position s (1 <= s <= n-1).
APoly diamond_split(const XWord& u, const LWord& w, int s);

// Sum over the S_{n,m} word description, for cross-validation; also reports
// the number of enumerated words through count if non-null.
APoly diamond_snm(const XWord& u, const LWord& w, long* count = nullptr);

// Endpoint strip [[.]]: drops first and last letter, 0 for short words.
APoly strip(const APoly& p);

// Cut operator: keeps words of the form prefix * w' * suffix, returning w'.
APoly cut(const APoly& p, const LWord& prefix, const LWord& suffix);

// Plain shuffle product.
APoly shuffle(const APoly& u, const APoly& v);

// Two-sided shuffle regularization on {0,1}-words: the unique projection
// onto Q + e_1 A e_0 along shuffle multiples of e_0 (left) and e_1 (right).
APoly shuffle_regularize(const APoly& p);

// Randomized probe for the conjectural associativity u<>(v<>w) = (u[]v)<>w.
// Returns the number of mismatches found (asserts nothing).
int diamond_assoc_probe(int trials, unsigned long seed);

}  // namespace zb
