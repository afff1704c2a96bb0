#include "zb/linalg.hpp"

#include <omp.h>

#include <stdexcept>

namespace zb {

namespace {

uint32_t mulmod(uint32_t a, uint32_t b, uint32_t p) {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
}

uint32_t powmod(uint32_t a, uint64_t e, uint32_t p) {
    uint64_t r = 1, base = a % p;
    while (e) {
        if (e & 1) r = (r * base) % p;
        base = (base * base) % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(r);
}

uint32_t invmod(uint32_t a, uint32_t p) { return powmod(a, p - 2, p); }

// row -= f * other (mod p)
void axpy(std::vector<uint32_t>& row, uint32_t f, const std::vector<uint32_t>& other, uint32_t p,
          size_t from) {
    const uint64_t fp = f;
    const size_t n = row.size();
#pragma omp simd
    for (size_t i = from; i < n; ++i) {
        uint64_t sub = fp * other[i] % p;
        uint64_t v = row[i] + p - sub;
        row[i] = static_cast<uint32_t>(v >= p ? v - p : v);
    }
}

}  // namespace

uint32_t mod_of_rat(const Rat& q, uint32_t p) {
    Int num = q.get_num(), den = q.get_den();
    uint32_t n = static_cast<uint32_t>(mpz_fdiv_ui(num.get_mpz_t(), p));
    uint32_t d = static_cast<uint32_t>(mpz_fdiv_ui(den.get_mpz_t(), p));
    if (d == 0) throw std::invalid_argument("denominator divisible by modulus");
    return mulmod(n, invmod(d, p), p);
}

ModEchelon::ModEchelon(int cols, uint32_t p) : cols_(cols), p_(p), row_of_pivot_(cols, -1) {}

int ModEchelon::reduce(std::vector<uint32_t>& row) const {
    int lead = 0;
    while (lead < cols_) {
        while (lead < cols_ && row[static_cast<size_t>(lead)] == 0) ++lead;
        if (lead == cols_) return -1;
        int r = row_of_pivot_[static_cast<size_t>(lead)];
        if (r < 0) return lead;
        // basis row is normalized to leading 1
        axpy(row, row[static_cast<size_t>(lead)], rows_[static_cast<size_t>(r)], p_,
             static_cast<size_t>(lead));
    }
    return -1;
}

bool ModEchelon::insert(std::vector<uint32_t> row) {
    if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("bad row width");
    int piv = reduce(row);
    if (piv < 0) return false;
    uint32_t inv = invmod(row[static_cast<size_t>(piv)], p_);
    for (int i = piv; i < cols_; ++i)
        row[static_cast<size_t>(i)] = mulmod(row[static_cast<size_t>(i)], inv, p_);
    row_of_pivot_[static_cast<size_t>(piv)] = static_cast<int>(rows_.size());
    pivot_of_row_.push_back(piv);
    rows_.push_back(std::move(row));
    return true;
}

bool ModEchelon::reduces_to_zero(std::vector<uint32_t> row) const { return reduce(row) < 0; }

int ModEchelon::pivots_below(int split) const {
    int n = 0;
    for (int piv : pivot_of_row_)
        if (piv < split) ++n;
    return n;
}

void ModEchelon::insert_rows_serial(std::vector<std::vector<uint32_t>>& rows) {
    for (auto& r : rows) insert(std::move(r));
    rows.clear();
}

void ModEchelon::insert_rows_parallel(std::vector<std::vector<uint32_t>>& rows) {
    const size_t block = 256;
    for (size_t start = 0; start < rows.size(); start += block) {
        size_t end = std::min(rows.size(), start + block);
#pragma omp parallel for schedule(dynamic)
        for (long i = static_cast<long>(start); i < static_cast<long>(end); ++i) {
            reduce(rows[static_cast<size_t>(i)]);
        }
        for (size_t i = start; i < end; ++i) insert(std::move(rows[i]));
    }
    rows.clear();
}

RatEchelon::RatEchelon(int cols) : cols_(cols), row_of_pivot_(cols, -1) {}

int RatEchelon::reduce(std::vector<Rat>& row) const {
    int lead = 0;
    while (lead < cols_) {
        while (lead < cols_ && row[static_cast<size_t>(lead)] == 0) ++lead;
        if (lead == cols_) return -1;
        int r = row_of_pivot_[static_cast<size_t>(lead)];
        if (r < 0) return lead;
        Rat f = row[static_cast<size_t>(lead)];
        const auto& base = rows_[static_cast<size_t>(r)];
        for (int i = lead; i < cols_; ++i)
            row[static_cast<size_t>(i)] -= f * base[static_cast<size_t>(i)];
    }
    return -1;
}

bool RatEchelon::insert(std::vector<Rat> row) {
    if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("bad row width");
    int piv = reduce(row);
    if (piv < 0) return false;
    Rat inv = 1 / row[static_cast<size_t>(piv)];
    for (int i = piv; i < cols_; ++i) row[static_cast<size_t>(i)] *= inv;
    row_of_pivot_[static_cast<size_t>(piv)] = static_cast<int>(rows_.size());
    pivot_of_row_.push_back(piv);
    rows_.push_back(std::move(row));
    return true;
}

bool RatEchelon::reduces_to_zero(std::vector<Rat> row) const { return reduce(row) < 0; }

int RatEchelon::pivots_below(int split) const {
    int n = 0;
    for (int piv : pivot_of_row_)
        if (piv < split) ++n;
    return n;
}

}  // namespace zb
