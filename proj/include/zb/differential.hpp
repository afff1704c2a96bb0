#pragma once

#include "zb/walgebra.hpp"

namespace zb {

// Unordered pair {alpha,beta} of letters selecting a boundary divisor.
struct DeltaSpec {
    Letter alpha;
    Letter beta;
};

// Delta_{x,y}^{alpha,beta}: 1 iff {alpha,beta} equals {x,y} or {1-x,1-y}.
int delta_pair(const DeltaSpec& spec, Letter x, Letter y);

// partial_{alpha,beta}: deletes interior letters with the Delta-weighted
// coefficients; zero on words of length <= 1.
APoly partial(const DeltaSpec& spec, const APoly& w);

// D_{alpha,beta}(w1, a, w2) measuring the failure of the Leibniz rule across
// a fixed middle letter; w1, w2 in A^+.
APoly big_D(const DeltaSpec& spec, const APoly& w1, Letter a, const APoly& w2);

// Concatenation derivation with D(e_a) = -e_1 e_0 on the {0,1} alphabet.
APoly d_operator(const APoly& w);

// Checks the algebraic differential formula for x_{b_1..b_m} <> e_{a_1..a_n}
// with n formal letters a_1..a_n; returns true iff both sides agree exactly.
bool verify_alg_der_formula(const std::vector<int>& b, int n, const DeltaSpec& spec);

}  // namespace zb
