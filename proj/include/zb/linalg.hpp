#pragma once

#include <cstdint>
#include <vector>

#include "zb/rational.hpp"

namespace zb {

// Incremental row-echelon basis over GF(p), dense rows. Insertion keeps the
// invariant that basis rows have strictly increasing pivot columns; rows are
// not inter-reduced. Reduction of a row against a fixed pivot set is
// deterministic, so parallel pre-reduction gives results identical to the
// serial path.
class ModEchelon {
public:
    ModEchelon(int cols, uint32_t p);

    int cols() const { return cols_; }
    uint32_t prime() const { return p_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    // Reduces the row in place against the basis; returns the pivot column or
    // -1 if it vanished.
    int reduce(std::vector<uint32_t>& row) const;

    // Reduce and, if nonzero, normalize and insert. True if rank grew.
    bool insert(std::vector<uint32_t> row);

    bool reduces_to_zero(std::vector<uint32_t> row) const;

    // Number of pivots in columns [0, split).
    int pivots_below(int split) const;

    // Inserts rows one by one (reference implementation).
    void insert_rows_serial(std::vector<std::vector<uint32_t>>& rows);
    // Same result, but pre-reduces blocks of rows in parallel.
    void insert_rows_parallel(std::vector<std::vector<uint32_t>>& rows);

private:
    int cols_;
    uint32_t p_;
    std::vector<std::vector<uint32_t>> rows_;  // echelon rows
    std::vector<int> pivot_of_row_;
    std::vector<int> row_of_pivot_;  // col -> row index or -1
};

// Exact echelon basis over Q, for small cross-check instances.
class RatEchelon {
public:
    explicit RatEchelon(int cols);
    int rank() const { return static_cast<int>(rows_.size()); }
    bool insert(std::vector<Rat> row);
    bool reduces_to_zero(std::vector<Rat> row) const;
    int pivots_below(int split) const;

private:
    int reduce(std::vector<Rat>& row) const;
    int cols_;
    std::vector<std::vector<Rat>> rows_;
    std::vector<int> pivot_of_row_;
    std::vector<int> row_of_pivot_;
};

uint32_t mod_of_rat(const Rat& q, uint32_t p);

}  // namespace zb
