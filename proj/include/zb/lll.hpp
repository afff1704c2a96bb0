#pragma once

#include <string>
#include <vector>

#include "zb/bigreal.hpp"
#include "zb/rational.hpp"

namespace zb {

// Row-major integer matrix with arbitrary-precision entries.
using IntMatrix = std::vector<std::vector<Int>>;

// All-integer LLL reduction (de Weger / Cohen variant); exact arithmetic,
// deterministic. delta is given as a rational delta_num/delta_den in (1/4,1).
// Throws if the rows are linearly dependent.
IntMatrix lll_reduce(const IntMatrix& basis, long delta_num = 99, long delta_den = 100);

// Hermite normal form (row-style, pivots left-to-right); used to compare
// lattices exactly.
IntMatrix hermite_normal_form(const IntMatrix& m);

struct IntegerRelation {
    std::vector<Int> coeffs;
    Int norm_sq;
    std::string norm_str;   // sqrt of norm_sq in scientific notation
    std::string residual;   // |sum coeffs*values| as a decimal string
};

// LLL-based integer relation search: finds small integer vectors x with
// sum x_i values_i ~ 0 at the working precision of `digits` decimal digits.
// Every value must carry at least digits+20 decimal digits of precision.
std::vector<IntegerRelation> integer_relations(const std::vector<BigReal>& values, int digits,
                                               int max_count);

std::string norm_to_scientific(const Int& norm_sq);

}  // namespace zb
