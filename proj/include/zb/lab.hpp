#pragma once

#include <string>
#include <vector>

#include "zb/indices.hpp"
#include "zb/linalg.hpp"
#include "zb/lll.hpp"
#include "zb/numerics.hpp"
#include "zb/relations.hpp"
#include "zb/xalgebra.hpp"

namespace zb {

struct KernelReport {
    int weight = 0;          // MZV weight (even)
    int generators = 0;      // number of quasi-Hoffman indices
    int hoffman = 0;         // number of {2,3}-compositions of the weight
    long products = 0;       // block shuffle products fed into the span
    int span_rank = 0;       // rank of the product span at this weight
    int kernel_dim = 0;      // dim of (span of products) cap (quasi-Hoffman coords)
    int witness_rank = 0;    // rank of the explicit witness family
    bool witnesses_in_span = true;
    std::vector<std::map<Index, Rat>> witness_basis;  // exact kernel witnesses
    std::string max_witness_residual;  // empty when no numeric check ran
};

// Exact kernel computation at even MZV weight w: the span of all block
// shuffle products at entry sum w+2, intersected with the quasi-Hoffman
// coordinate subspace. Ranks are computed modulo two 31-bit primes (results
// must agree); witnesses are exact integer vectors. When ev is non-null each
// witness is also evaluated numerically.
KernelReport quasi_hoffman_kernel(int w, const Evaluator* ev, bool parallel = true);

// The explicit kernel witnesses S(iota(l)) x_{2c+2} iota(k) - (-1)^c theta(k*l, {2}^c)
// of entry sum `block_weight`, as exact combinations of quasi-Hoffman indices.
std::vector<XPoly> quasi_hoffman_witnesses(int block_weight);

struct Degree2Report {
    int weight = 0;
    int digits = 0;
    std::vector<Index> generators;  // I_ooe then I_eee then the single block
    int ooe_count = 0;
    int eee_count = 0;
    std::vector<IntegerRelation> relations;
    bool conjecture_i_in_lattice = false;
    std::string conjecture_i_norm;
    std::string json;
};

// Numeric replication of the block-degree-two experiment: evaluates the
// generator family, searches integer relations by LLL, and matches the
// reduced form of the first conjectural relation.
Degree2Report degree2_experiment(int w, int digits, const Evaluator& ev);

// The reduced (generator-basis) coefficient vector of conjecture part i at
// even weight w, in the generator order of degree2_experiment.
std::vector<Int> degree2_conjecture_vector(int w);

// Formal set-sequence combinations for ker M_d checks.
using SetSeq = std::vector<std::vector<int>>;  // ordered partition into subsets
using SetSeqCombo = std::map<SetSeq, Rat>;

// The hat-shuffle product of two set sequences.
SetSeqCombo setseq_shuffle(const SetSeq& a, const SetSeq& b);

// Evaluates M_d on the combination at the sample point (l_1..l_d), l_i >= 2.
BigReal eval_Md(const SetSeqCombo& combo, const std::vector<int>& l, const Evaluator& ev);

// True iff M_d(combo) vanishes numerically on `samples` random points with
// entries in [2, 2+range), to the given tolerance exponent 10^{-tol10}.
bool formal_ker_Md_check(int d, const SetSeqCombo& combo, int samples, unsigned long seed,
                         const Evaluator& ev, int tol10);

// The cyclic and alternating elements of ker M_d quoted in the paper.
SetSeqCombo cyclic_kernel_element(int d);
SetSeqCombo alternating_kernel_element(int n);  // lives in ker M_{2n+1}

}  // namespace zb
