#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zb {

// A (block or MZV) index: a finite sequence of positive integers.
// Value semantics, structural equality, no interning.
class Index {
public:
    Index() = default;
    explicit Index(std::vector<int> entries);
    Index(std::initializer_list<int> entries) : Index(std::vector<int>(entries)) {}

    const std::vector<int>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    int depth() const { return static_cast<int>(entries_.size()); }
    int weight() const;

    // Parity of sum(l_i - 1); empty index is even.
    bool odd_parity() const;

    // Block sense: empty, or first and last entries > 1.
    bool block_admissible() const;
    // MZV sense: empty, or last entry > 1.
    bool mzv_admissible() const;

    bool operator==(const Index&) const = default;
    auto operator<=>(const Index&) const = default;

private:
    std::vector<int> entries_;
};

// Word over {0,1}; each letter is 0 or 1.
using Word01 = std::vector<uint8_t>;

// Integration word of an MZV index: (1,0^{k1-1},1,0^{k2-1},...), together
// with the sign (-1)^depth so that zeta(k) = sign * I(0; word; 1).
std::pair<Word01, int> mzv_word(const Index& k);

// Inverse of mzv_word on words starting with 1.
Index word_to_mzv_index(const Word01& w);

// Duality: word reversal plus 0<->1 swap on the integration word.
Index dual_index(const Index& k);

// Reverse + swap a {0,1} word (the involution behind duality).
Word01 reverse_swap(const Word01& w);

// Inverse of the block-notation map B on words that start with 0 and end
// with 1: cut after every position i with w[i+1] == w[i].
Index block_decompose(const Word01& w);

// Z(m0,...,m_{2n}) -> block index (2m0+2,...,2m_{2n}+2) with sign (-1)^{sum m_i}.
std::pair<Index, int> z_to_block(const std::vector<int>& m);

// Text grammar "[k1,k2,...]"; empty index is "[]".
std::optional<Index> parse_index(std::string_view s);
std::string to_string(const Index& k);

std::optional<Word01> parse_word01(std::string_view s);
std::string to_string(const Word01& w);

// All compositions of n (n >= 0); n = 0 yields the single empty index.
std::vector<Index> compositions(int n);

// All compositions of n with entries in {2,3} (the Hoffman indices of weight n).
std::vector<Index> hoffman_indices(int n);

// Block indices of quasi-Hoffman type with given entry sum: all entries >= 2
// and exactly one even entry.
std::vector<Index> quasi_hoffman_indices(int entry_sum);

}  // namespace zb
