#pragma once

#include <map>
#include <string>
#include <vector>

#include "zb/indices.hpp"
#include "zb/numerics.hpp"
#include "zb/rational.hpp"
#include "zb/xalgebra.hpp"

namespace zb {

// rational * pi^pi_power
struct PiConst {
    Rat rational = Rat(0);
    int pi_power = 0;
};

// A homogeneous linear relation: sum coeff * L_B(index) = constant.
struct Relation {
    int weight = 0;  // MZV weight (entry sum of each index minus 2)
    std::map<Index, Rat> combo;
    PiConst constant;
    std::string label;
    bool conjectural = false;

    void add(const Index& k, const Rat& c);
};

// I_bl of the single even block (2m) as an exact pi-power constant.
PiConst ibl_single_block(int even_entry);

// Residual |sum coeff L_B(k) - constant| at the evaluator's precision.
BigReal verify(const Relation& r, const Evaluator& ev);
// Same, but evaluating with L_B^sh (no block regularization).
BigReal verify_plain(const Relation& r, const Evaluator& ev);

// Second form of the block shuffle identity: L_B(u [] v) = 0 for
// u even non-constant, v odd.
Relation block_shuffle_relation(const XWord& u, const XWord& v);

// Full cyclic insertion for l_1..l_d with odd sum of (l_i - 1).
Relation cyclic_insertion(const std::vector<int>& l);

// Signed permutation sum over interleaved (a_sigma, b) block indices.
Relation alternating_sum_relation(const std::vector<int>& a, const std::vector<int>& b);

// zeta(k', k-dual) = zeta(k * k') translated to block indices.
Relation hoffman_star_expansion(const Index& k, const Index& kp);

// The three block-degree-two relation families at even MZV weight w:
// the I_bl(a,1,b) reduction and the two conjectural families.
std::vector<Relation> degree2_relations(int w);

// Max residual of the real-part symmetric identity over all even indices of
// MZV weight <= W (coefficientwise comparison of both generating series).
BigReal symmetric_real_part_check(int W, const Evaluator& ev);

// A_r coefficients 2 mu^r / (r+2)! (even r), as real numbers.
BigReal cyclic_A(int r, const Evaluator& ev);

// Residual of the cyclic insertion identity in its A_r form (evaluated with
// L_B^sh directly, following the explicit formula).
BigReal cyclic_insertion_Ar_residual(const std::vector<int>& l, const Evaluator& ev);

// Residual of L~(D(w)) = sum_{N>=2} (-1)^N zeta(N) L~(Cut_{0^{N-1};}(w))
//                      + sum_{N>=2} zeta(N) L~(Cut_{;1^{N-1}}(w)).
BigReal d_operator_lemma_residual(const Word01& w, const Evaluator& ev);

// The BBB index ({2}^m,1,{2}^m,3)^n,{2}^m and the residual of its Eulerian
// evaluation 1/(2n+1) * pi^wt / (wt+1)!.
Index bbb_index(int m, int n);
BigReal bbb_residual(int m, int n, const Evaluator& ev);

// JSON (de)serialization; schema documented in the README.
std::string relation_to_json(const Relation& r);
std::string relations_to_json(const std::vector<Relation>& rs);
Relation relation_from_json(const std::string& text);
std::vector<Relation> relations_from_json(const std::string& text);

}  // namespace zb
