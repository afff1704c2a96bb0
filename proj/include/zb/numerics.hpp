#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <vector>

#include "zb/bigreal.hpp"
#include "zb/indices.hpp"
#include "zb/walgebra.hpp"

namespace zb {

// Coefficients of Gamma_1(t)^{-2} (c) and Gamma_1(-t)^{-2} (cp), where
// Gamma_1(t) = exp(sum_{n>=2} zeta(n) (-t)^n / n).
struct GammaCoeffs {
    int order = 0;
    std::vector<BigReal> c;
    std::vector<BigReal> cp;
};

mpfr_prec_t prec_for_digits(int digits);

// High-precision evaluation of shuffle-regularized iterated integrals over
// {0,1}, MZVs, and block integrals. Evaluations of distinct inputs are
// independent; the caches allow concurrent readers and idempotent insertion,
// so the batch entry points may fan out with OpenMP.
class Evaluator {
public:
    // prec_bits: precision of the published values. Work happens at
    // prec_bits + kGuardBits; truncated series use kGuardBits + 32 extra terms.
    explicit Evaluator(mpfr_prec_t prec_bits);

    static constexpr mpfr_prec_t kGuardBits = 64;

    mpfr_prec_t prec_bits() const { return prec_; }
    mpfr_prec_t work_bits() const { return wprec_; }

    BigReal pi() const;
    BigReal mu_sq() const;  // mu^2 = -4 pi^2 (mu the motivic 2*pi*i)
    // mu^r for even r, as a real number.
    BigReal mu_pow(int r) const;

    BigReal zeta(int n) const;

    // Shuffle-regularized iterated integral I(0; w; 1), any {0,1} word.
    BigReal itint(const Word01& w) const;
    // Linear extension to polynomials in concrete letters.
    BigReal itint(const APoly& p) const;

    BigReal mzv(const Index& k) const;

    // L_B^sh: block integral of an odd-parity index.
    BigReal L_block_sh(const Index& k) const;
    // Block-regularized L_B of an odd-parity index.
    BigReal L_block_reg(const Index& k) const;

    GammaCoeffs gamma_coeffs(int order) const;

    // Evaluates a convergent word by composing the path at num/den instead of
    // 1/2 (consistency check for the split evaluation).
    BigReal itint_convergent_split(const Word01& w, long num, long den) const;

    // Batch evaluation; the parallel variant uses OpenMP and returns results
    // identical to the serial one.
    std::vector<BigReal> itint_batch(const std::vector<Word01>& ws) const;
    std::vector<BigReal> itint_batch_serial(const std::vector<Word01>& ws) const;
    std::vector<BigReal> L_block_sh_batch(const std::vector<Index>& ks) const;
    std::vector<BigReal> L_block_sh_batch_serial(const std::vector<Index>& ks) const;

private:
    BigReal itint_nocache(const Word01& w) const;
    BigReal convergent_value(const Word01& w) const;
    BigReal li_half(const Word01& w) const;
    BigReal li_at(const Word01& w, long num, long den) const;
    BigReal zeta_even_exact(int m) const;

    mpfr_prec_t prec_;
    mpfr_prec_t wprec_;
    int terms_;

    mutable std::shared_mutex mtx_;
    mutable std::map<int, BigReal> zeta_cache_;
    mutable std::map<Word01, BigReal> itint_cache_;
    mutable std::map<Word01, BigReal> li_half_cache_;
    mutable std::vector<Rat> bernoulli_;  // B_0..B_k, grown on demand
};

}  // namespace zb
