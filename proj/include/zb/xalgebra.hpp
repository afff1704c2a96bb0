#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "zb/indices.hpp"
#include "zb/poly.hpp"

namespace zb {

// The free algebra Q<x_1,x_2,...>. Words are subscript sequences; the empty
// word is the unit.
using XPoly = BasicPoly<XTag>;
using XWord = XPoly::Word;

inline XWord xword(const Index& k) { return XWord(k.entries().begin(), k.entries().end()); }
inline Index xword_index(const XWord& w) { return Index(std::vector<int>(w.begin(), w.end())); }

int xword_weight(const XWord& w);
bool xword_odd_parity(const XWord& w);
bool xword_all_ones(const XWord& w);

// s_k: raises the first subscript by k, kills the constant term.
XPoly shift_s(int k, const XPoly& u);

// Block shuffle product (recursive definition; the production path).
XPoly block_shuffle(const XPoly& u, const XPoly& v);

// Independent oracle for the block shuffle on monomials: the closed form
// summing over weakly increasing pairs (f,g) with fiber-size differences +-1.
XPoly block_shuffle_closed(const XWord& u, const XWord& v);

// f_c maps: f_c(u,1) = f_c(1,u) = x_c u and the recursion
// f_c(x_a u, x_b v) = x_c f_a(u, x_b v) + x_c f_b(x_a u, v) - f_{c+a+b}(u, v).
XPoly f_c(int c, const XPoly& u, const XPoly& v);

// Closed-form oracle for f_c on monomials.
XPoly f_c_closed(int c, const XWord& u, const XWord& v);

// Anti-automorphism with S(x_k) = -x_k.
XPoly antipode_S(const XPoly& u);

// The star product on {2,3}-indices.
using IndexCombo = std::map<Index, Rat>;
IndexCombo star(const Index& k, const Index& kp);

// iota on {2,3}-indices not ending in 2; theta on all {2,3}-indices.
// Both produce a single signed monomial.
XPoly iota_map(const Index& k);
XPoly theta_map(const Index& k);
// theta extended linearly to an index combination, with {2}^c appended.
XPoly theta_map(const IndexCombo& combo, int twos_appended);

// Text grammar: terms "c x[k1,k2,...]" joined by +/-, "1" for the empty word.
std::optional<XPoly> parse_xpoly(std::string_view s);
std::string to_string(const XPoly& p);

}  // namespace zb
