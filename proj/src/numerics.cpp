#include "zb/numerics.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

#include "zb/xalgebra.hpp"

namespace zb {

mpfr_prec_t prec_for_digits(int digits) {
    if (digits < 1) digits = 1;
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626) + 16);
}

Evaluator::Evaluator(mpfr_prec_t prec_bits)
    : prec_(prec_bits), wprec_(prec_bits + kGuardBits), terms_(static_cast<int>(wprec_) + 32) {
    if (prec_bits < 32) throw std::invalid_argument("need at least 32 bits of precision");
}

BigReal Evaluator::pi() const { return BigReal::pi(wprec_); }

BigReal Evaluator::mu_sq() const {
    BigReal p = pi();
    return BigReal(-4, wprec_) * p * p;
}

BigReal Evaluator::mu_pow(int r) const {
    if (r % 2 != 0) throw std::invalid_argument("odd powers of mu are not real");
    BigReal m2 = mu_sq();
    BigReal r2(1, wprec_);
    for (int i = 0; i < r / 2; ++i) r2 *= m2;
    return r2;
}

namespace {

// Exponent pattern of a word starting with 1: (k_1,...,k_d) with the word
// equal to 1 0^{k_1-1} 1 0^{k_2-1} ... 1 0^{k_d-1}.
std::vector<int> exponent_groups(const Word01& w) {
    std::vector<int> ks;
    for (size_t i = 0; i < w.size();) {
        if (w[i] != 1) throw std::logic_error("word must start each group with 1");
        size_t j = i + 1;
        while (j < w.size() && w[j] == 0) ++j;
        ks.push_back(static_cast<int>(j - i));
        i = j;
    }
    return ks;
}

}  // namespace

// I(0; w; 1/2) = (-1)^d sum_{m_1<...<m_d} 2^{-m_d} / prod m_i^{k_i}.
BigReal Evaluator::li_half(const Word01& w) const {
    if (w.empty()) return BigReal(1, wprec_);
    {
        std::shared_lock lk(mtx_);
        if (auto it = li_half_cache_.find(w); it != li_half_cache_.end()) return it->second;
    }
    auto ks = exponent_groups(w);
    const int d = static_cast<int>(ks.size());
    const int N = terms_;
    // prefix[m] = sum over tuples m_1<...<m_j<=m of the inner product;
    // level 0 is the empty tuple, identically 1
    std::vector<BigReal> prefix(static_cast<size_t>(N) + 1, BigReal(1, wprec_));
    for (int j = 0; j < d - 1; ++j) {
        BigReal acc(0, wprec_);
        std::vector<BigReal> next(static_cast<size_t>(N) + 1, BigReal(0, wprec_));
        for (int m = 1; m <= N; ++m) {
            BigReal t = prefix[static_cast<size_t>(m - 1)];
            for (int e = 0; e < ks[static_cast<size_t>(j)]; ++e)
                mpfr_div_ui(t.raw(), t.raw(), static_cast<unsigned long>(m), MPFR_RNDN);
            acc += t;
            next[static_cast<size_t>(m)] = acc;
        }
        prefix = std::move(next);
    }
    BigReal sum(0, wprec_);
    for (int m = 1; m <= N; ++m) {
        BigReal t = prefix[static_cast<size_t>(m - 1)];
        for (int e = 0; e < ks[static_cast<size_t>(d - 1)]; ++e)
            mpfr_div_ui(t.raw(), t.raw(), static_cast<unsigned long>(m), MPFR_RNDN);
        mpfr_mul_2si(t.raw(), t.raw(), -m, MPFR_RNDN);  // times 2^{-m}
        sum += t;
    }
    if (d % 2 != 0) sum = -sum;
    {
        std::unique_lock lk(mtx_);
        li_half_cache_.try_emplace(w, sum);
    }
    return sum;
}

BigReal Evaluator::li_at(const Word01& w, long num, long den) const {
    if (w.empty()) return BigReal(1, wprec_);
    auto ks = exponent_groups(w);
    const int d = static_cast<int>(ks.size());
    // number of series terms for |z| = num/den: 2^-wprec ~ (num/den)^N
    double ratio = std::log2(static_cast<double>(den) / static_cast<double>(num));
    int N = static_cast<int>(static_cast<double>(wprec_ + 32) / ratio) + 16;
    BigReal z(Rat(num, den), wprec_);
    std::vector<BigReal> prefix(static_cast<size_t>(N) + 1, BigReal(1, wprec_));
    for (int j = 0; j < d - 1; ++j) {
        BigReal acc(0, wprec_);
        std::vector<BigReal> next(static_cast<size_t>(N) + 1, BigReal(0, wprec_));
        for (int m = 1; m <= N; ++m) {
            BigReal t = prefix[static_cast<size_t>(m - 1)];
            for (int e = 0; e < ks[static_cast<size_t>(j)]; ++e)
                mpfr_div_ui(t.raw(), t.raw(), static_cast<unsigned long>(m), MPFR_RNDN);
            acc += t;
            next[static_cast<size_t>(m)] = acc;
        }
        prefix = std::move(next);
    }
    BigReal sum(0, wprec_);
    BigReal zpow(1, wprec_);
    for (int m = 1; m <= N; ++m) {
        zpow *= z;
        BigReal t = prefix[static_cast<size_t>(m - 1)];
        for (int e = 0; e < ks[static_cast<size_t>(d - 1)]; ++e)
            mpfr_div_ui(t.raw(), t.raw(), static_cast<unsigned long>(m), MPFR_RNDN);
        t *= zpow;
        sum += t;
    }
    if (d % 2 != 0) sum = -sum;
    return sum;
}

// Convergent word (starts with 1, ends with 0): compose the path at 1/2 and
// map the upper half to [0,1/2] by t -> 1-t (reversal plus letter swap).
BigReal Evaluator::convergent_value(const Word01& w) const {
    const size_t n = w.size();
    BigReal sum(0, wprec_);
    for (size_t j = 0; j <= n; ++j) {
        Word01 prefix(w.begin(), w.begin() + static_cast<long>(j));
        Word01 suffix(w.begin() + static_cast<long>(j), w.end());
        Word01 tail = reverse_swap(suffix);
        sum += li_half(prefix) * li_half(tail);
    }
    return sum;
}

BigReal Evaluator::itint_convergent_split(const Word01& w, long num, long den) const {
    if (w.empty()) return BigReal(1, wprec_);
    if (w.front() != 1 || w.back() != 0)
        throw std::invalid_argument("split evaluation needs a convergent word");
    if (num < 1 || den <= num) throw std::invalid_argument("split point must be in (0,1)");
    const size_t n = w.size();
    BigReal sum(0, wprec_);
    for (size_t j = 0; j <= n; ++j) {
        Word01 prefix(w.begin(), w.begin() + static_cast<long>(j));
        Word01 suffix(w.begin() + static_cast<long>(j), w.end());
        Word01 tail = reverse_swap(suffix);
        // I(0;prefix;z) * I(0;tail;1-z)
        sum += li_at(prefix, num, den) * li_at(tail, den - num, den);
    }
    return sum;
}

BigReal Evaluator::itint_nocache(const Word01& w) const {
    APoly reg = shuffle_regularize(APoly::mono(lword(w)));
    BigReal sum(0, wprec_);
    for (const auto& [word, c] : reg.terms()) {
        BigReal coeff(c, wprec_);
        if (word.empty()) {
            sum += coeff;
        } else {
            sum += coeff * convergent_value(lword_to_word01(word));
        }
    }
    return sum;
}

BigReal Evaluator::itint(const Word01& w) const {
    {
        std::shared_lock lk(mtx_);
        if (auto it = itint_cache_.find(w); it != itint_cache_.end()) return it->second;
    }
    BigReal v = itint_nocache(w);
    {
        std::unique_lock lk(mtx_);
        itint_cache_.try_emplace(w, v);
    }
    return v;
}

BigReal Evaluator::itint(const APoly& p) const {
    BigReal sum(0, wprec_);
    for (const auto& [word, c] : p.terms()) {
        BigReal coeff(c, wprec_);
        if (word.empty())
            sum += coeff;
        else
            sum += coeff * itint(lword_to_word01(word));
    }
    return sum;
}

BigReal Evaluator::mzv(const Index& k) const {
    if (!k.mzv_admissible() || k.empty())
        throw std::invalid_argument("mzv needs a non-empty admissible index");
    auto [w, sign] = mzv_word(k);
    BigReal v = itint(w);
    if (sign < 0) v = -v;
    return v;
}

BigReal Evaluator::L_block_sh(const Index& k) const {
    if (!k.odd_parity()) throw std::invalid_argument("L_B^sh needs an odd-parity index");
    LWord bw = block_B(xword(k));
    Word01 interior(bw.begin() + 1, bw.end() - 1);
    return itint(interior);
}

BigReal Evaluator::L_block_reg(const Index& k) const {
    if (!k.odd_parity()) throw std::invalid_argument("L_B needs an odd-parity index");
    const auto& e = k.entries();
    const int d = k.depth();
    int lead = 0;
    while (lead < d && e[static_cast<size_t>(lead)] == 1) ++lead;
    int trail = 0;
    while (trail < d - lead && e[static_cast<size_t>(d - 1 - trail)] == 1) ++trail;
    if (lead == 0 && trail == 0) return L_block_sh(k);
    GammaCoeffs g = gamma_coeffs(std::max(lead, trail));
    BigReal sum(0, wprec_);
    for (int p = 0; p <= lead; ++p)
        for (int q = 0; q <= trail; ++q) {
            Index mid(std::vector<int>(e.begin() + p, e.end() - q));
            sum += g.c[static_cast<size_t>(p)] * L_block_sh(mid) * g.cp[static_cast<size_t>(q)];
        }
    return sum;
}

BigReal Evaluator::zeta_even_exact(int m) const {
    // zeta(2m) = (-1)^{m+1} B_{2m} (2 pi)^{2m} / (2 (2m)!)
    {
        std::unique_lock lk(mtx_);
        while (static_cast<int>(bernoulli_.size()) <= 2 * m) {
            size_t k = bernoulli_.size();
            if (k == 0) {
                bernoulli_.emplace_back(1);
                continue;
            }
            // B_k = -1/(k+1) sum_{j<k} C(k+1,j) B_j
            Rat s(0);
            Rat binom(1);  // C(k+1, 0)
            for (size_t j = 0; j < k; ++j) {
                s += binom * bernoulli_[j];
                binom *= Rat(static_cast<long>(k + 1 - j), static_cast<long>(j + 1));
            }
            Rat bk = -s / Rat(static_cast<long>(k + 1));
            bernoulli_.push_back(bk);
        }
    }
    Rat b2m;
    {
        std::shared_lock lk(mtx_);
        b2m = bernoulli_[static_cast<size_t>(2 * m)];
    }
    Rat fact(1);
    for (int i = 2; i <= 2 * m; ++i) fact *= i;
    Rat coeff = b2m / (2 * fact);
    if (m % 2 == 0) coeff = -coeff;  // (-1)^{m+1}
    BigReal twopi = BigReal(2, wprec_) * pi();
    return BigReal(coeff, wprec_) * pow_si(twopi, 2 * m);
}

BigReal Evaluator::zeta(int n) const {
    if (n < 2) throw std::invalid_argument("zeta(n) needs n >= 2");
    {
        std::shared_lock lk(mtx_);
        if (auto it = zeta_cache_.find(n); it != zeta_cache_.end()) return it->second;
    }
    BigReal v(wprec_);
    if (n % 2 == 0) {
        v = zeta_even_exact(n / 2);
    } else {
        Word01 w;
        w.push_back(1);
        for (int i = 1; i < n; ++i) w.push_back(0);
        v = -convergent_value(w);
    }
    {
        std::unique_lock lk(mtx_);
        zeta_cache_.try_emplace(n, v);
    }
    return v;
}

GammaCoeffs Evaluator::gamma_coeffs(int order) const {
    if (order < 0) throw std::invalid_argument("order must be non-negative");
    GammaCoeffs g;
    g.order = order;
    // log of Gamma_1(t)^{-2}: h_k = -2 zeta(k) (-1)^k / k for k >= 2
    std::vector<BigReal> h(static_cast<size_t>(order) + 1, BigReal(0, wprec_));
    for (int k = 2; k <= order; ++k) {
        BigReal z = zeta(k);
        BigReal c = BigReal(Rat((k % 2 == 0) ? -2 : 2, k), wprec_);
        h[static_cast<size_t>(k)] = c * z;
    }
    // exp via E' = h' E: k E_k = sum_{j=1..k} j h_j E_{k-j}
    g.c.assign(static_cast<size_t>(order) + 1, BigReal(0, wprec_));
    g.c[0] = BigReal(1, wprec_);
    for (int k = 1; k <= order; ++k) {
        BigReal s(0, wprec_);
        for (int j = 1; j <= k; ++j) {
            if (h[static_cast<size_t>(j)].is_zero()) continue;
            s += BigReal(j, wprec_) * h[static_cast<size_t>(j)] * g.c[static_cast<size_t>(k - j)];
        }
        g.c[static_cast<size_t>(k)] = s / BigReal(k, wprec_);
    }
    g.cp = g.c;
    for (int k = 1; k <= order; k += 2) g.cp[static_cast<size_t>(k)] = -g.cp[static_cast<size_t>(k)];
    return g;
}

std::vector<BigReal> Evaluator::itint_batch_serial(const std::vector<Word01>& ws) const {
    std::vector<BigReal> out;
    out.reserve(ws.size());
    for (const auto& w : ws) out.push_back(itint(w));
    return out;
}

std::vector<BigReal> Evaluator::itint_batch(const std::vector<Word01>& ws) const {
    std::vector<BigReal> out(ws.size(), BigReal(wprec_));
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(ws.size()); ++i)
        out[static_cast<size_t>(i)] = itint(ws[static_cast<size_t>(i)]);
    return out;
}

std::vector<BigReal> Evaluator::L_block_sh_batch(const std::vector<Index>& ks) const {
    std::vector<BigReal> out(ks.size(), BigReal(wprec_));
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(ks.size()); ++i)
        out[static_cast<size_t>(i)] = L_block_sh(ks[static_cast<size_t>(i)]);
    return out;
}

std::vector<BigReal> Evaluator::L_block_sh_batch_serial(const std::vector<Index>& ks) const {
    std::vector<BigReal> out;
    out.reserve(ks.size());
    for (const auto& k : ks) out.push_back(L_block_sh(k));
    return out;
}

}  // namespace zb
