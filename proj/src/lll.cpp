#include "zb/lll.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace zb {

namespace {

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int exact_div(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// round(a/b) to nearest, ties away from zero
Int round_div(const Int& a, const Int& b) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    // b > 0 in our uses; r in [0,b)
    if (2 * r >= b) q += 1;
    return q;
}

}  // namespace

IntMatrix lll_reduce(const IntMatrix& basis, long delta_num, long delta_den) {
    const int n = static_cast<int>(basis.size());
    if (n == 0) return {};
    const size_t cols = basis[0].size();
    for (const auto& row : basis)
        if (row.size() != cols) throw std::invalid_argument("ragged matrix");
    if (!(delta_den > 0 && 4 * delta_num > delta_den && delta_num < delta_den))
        throw std::invalid_argument("delta must lie in (1/4,1)");

    IntMatrix b = basis;
    // Integral Gram-Schmidt bookkeeping: d[0..n], lam[i][j] for j < i.
    std::vector<Int> d(static_cast<size_t>(n) + 1);
    d[0] = 1;
    std::vector<std::vector<Int>> lam(static_cast<size_t>(n), std::vector<Int>());
    for (int i = 0; i < n; ++i) lam[static_cast<size_t>(i)].assign(static_cast<size_t>(i), Int(0));

    int kmax = 0;  // 0-based index of the last initialized row
    auto init_row = [&](int k) {
        for (int j = 0; j <= k; ++j) {
            Int u = dot(b[static_cast<size_t>(k)], b[static_cast<size_t>(j)]);
            for (int i = 0; i < j; ++i) {
                u = exact_div(d[static_cast<size_t>(i) + 1] * u -
                                  lam[static_cast<size_t>(k)][static_cast<size_t>(i)] *
                                      lam[static_cast<size_t>(j)][static_cast<size_t>(i)],
                              d[static_cast<size_t>(i)]);
            }
            if (j < k)
                lam[static_cast<size_t>(k)][static_cast<size_t>(j)] = u;
            else {
                d[static_cast<size_t>(k) + 1] = u;
                if (u == 0) throw std::invalid_argument("dependent rows");
            }
        }
    };
    init_row(0);

    auto redi = [&](int k, int l) {
        // size-reduce b_k against b_l
        const Int& dl = d[static_cast<size_t>(l) + 1];
        Int lkl = lam[static_cast<size_t>(k)][static_cast<size_t>(l)];
        if (2 * abs(lkl) <= dl) return;
        Int q = round_div(lkl, dl);
        for (size_t c = 0; c < cols; ++c)
            b[static_cast<size_t>(k)][c] -= q * b[static_cast<size_t>(l)][c];
        lam[static_cast<size_t>(k)][static_cast<size_t>(l)] -= q * dl;
        for (int i = 0; i < l; ++i)
            lam[static_cast<size_t>(k)][static_cast<size_t>(i)] -=
                q * lam[static_cast<size_t>(l)][static_cast<size_t>(i)];
    };

    auto swapi = [&](int k) {
        std::swap(b[static_cast<size_t>(k)], b[static_cast<size_t>(k) - 1]);
        for (int j = 0; j < k - 1; ++j)
            std::swap(lam[static_cast<size_t>(k)][static_cast<size_t>(j)],
                      lam[static_cast<size_t>(k) - 1][static_cast<size_t>(j)]);
        Int l = lam[static_cast<size_t>(k)][static_cast<size_t>(k) - 1];
        Int bb = exact_div(d[static_cast<size_t>(k) - 1] * d[static_cast<size_t>(k) + 1] + l * l,
                           d[static_cast<size_t>(k)]);
        for (int i = k + 1; i <= kmax; ++i) {
            Int t = lam[static_cast<size_t>(i)][static_cast<size_t>(k)];
            lam[static_cast<size_t>(i)][static_cast<size_t>(k)] =
                exact_div(d[static_cast<size_t>(k) + 1] *
                                  lam[static_cast<size_t>(i)][static_cast<size_t>(k) - 1] -
                              l * t,
                          d[static_cast<size_t>(k)]);
            lam[static_cast<size_t>(i)][static_cast<size_t>(k) - 1] =
                exact_div(bb * t + l * lam[static_cast<size_t>(i)][static_cast<size_t>(k)],
                          d[static_cast<size_t>(k) + 1]);
        }
        d[static_cast<size_t>(k)] = bb;
    };

    int k = 1;
    while (k < n) {
        if (k > kmax) {
            kmax = k;
            init_row(k);
        }
        redi(k, k - 1);
        // Lovasz test: swap iff den*d_{k+1}*d_{k-1} < num*d_k^2 - den*lam^2
        const Int& lkk = lam[static_cast<size_t>(k)][static_cast<size_t>(k) - 1];
        Int lhs = Int(delta_den) * d[static_cast<size_t>(k) + 1] * d[static_cast<size_t>(k) - 1];
        Int rhs = Int(delta_num) * d[static_cast<size_t>(k)] * d[static_cast<size_t>(k)] -
                  Int(delta_den) * lkk * lkk;
        if (lhs < rhs) {
            swapi(k);
            k = std::max(1, k - 1);
        } else {
            for (int l = k - 2; l >= 0; --l) redi(k, l);
            ++k;
        }
    }
    return b;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // find a row with nonzero entry in column c at or below r
        size_t piv = r;
        bool found = false;
        for (size_t i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                piv = i;
                found = true;
                break;
            }
        if (!found) continue;
        std::swap(a[r], a[piv]);
        // eliminate below by gcd steps
        for (size_t i = r + 1; i < rows; ++i) {
            while (a[i][c] != 0) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a[r][c].get_mpz_t(), a[i][c].get_mpz_t());
                for (size_t j = 0; j < cols; ++j) a[r][j] -= q * a[i][j];
                std::swap(a[r], a[i]);
            }
        }
        if (a[r][c] < 0)
            for (size_t j = 0; j < cols; ++j) a[r][j] = -a[r][j];
        // reduce above
        for (size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
            if (q != 0)
                for (size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
        }
        ++r;
    }
    a.resize(r);  // drop zero rows
    return a;
}

std::string norm_to_scientific(const Int& norm_sq) {
    // sqrt in double after scaling to avoid overflow
    double d = mpz_get_d(norm_sq.get_mpz_t());
    double nrm = std::sqrt(d);
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << nrm;
    return os.str();
}

std::vector<IntegerRelation> integer_relations(const std::vector<BigReal>& values, int digits,
                                               int max_count) {
    const int n = static_cast<int>(values.size());
    if (n == 0) return {};
    auto need = static_cast<mpfr_prec_t>(std::ceil((digits + 20) * 3.3219280948873626));
    for (const auto& v : values)
        if (v.prec_bits() < need)
            throw std::invalid_argument("values carry insufficient precision for the requested digits");

    // scale column: round(10^digits * v_i)
    Int C = 1;
    for (int i = 0; i < digits; ++i) C *= 10;
    BigReal Cb(C, values[0].prec_bits());
    IntMatrix m(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto& row = m[static_cast<size_t>(i)];
        row.assign(static_cast<size_t>(n) + 1, Int(0));
        row[static_cast<size_t>(i)] = 1;
        row[static_cast<size_t>(n)] = (Cb * values[static_cast<size_t>(i)]).round_to_int();
    }
    IntMatrix red = lll_reduce(m);

    // acceptance threshold 10^{-digits/2}
    mpfr_prec_t wp = values[0].prec_bits();
    BigReal thresh = BigReal::pow10(-(digits / 2), wp);
    std::vector<IntegerRelation> out;
    for (const auto& row : red) {
        std::vector<Int> x(row.begin(), row.end() - 1);
        bool nonzero = false;
        for (const auto& e : x)
            if (e != 0) nonzero = true;
        if (!nonzero) continue;
        BigReal resid(0, wp);
        for (int i = 0; i < n; ++i) resid += BigReal(x[static_cast<size_t>(i)], wp) * values[static_cast<size_t>(i)];
        resid = abs(resid);
        if (!(resid <= thresh)) continue;
        IntegerRelation rel;
        rel.norm_sq = dot(x, x);
        rel.coeffs = std::move(x);
        rel.norm_str = norm_to_scientific(rel.norm_sq);
        rel.residual = resid.str(6);
        out.push_back(std::move(rel));
    }
    std::sort(out.begin(), out.end(),
              [](const IntegerRelation& a, const IntegerRelation& b) { return a.norm_sq < b.norm_sq; });
    if (static_cast<int>(out.size()) > max_count) out.resize(static_cast<size_t>(max_count));
    return out;
}

}  // namespace zb
