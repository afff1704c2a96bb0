#include "zb/walgebra.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace zb {

std::string letter_name(Letter x) {
    if (x == kZero) return "0";
    if (x == kOne) return "1";
    std::string s = (x & 1) ? "~a" : "a";
    s += std::to_string(x / 2);
    return s;
}

LWord lword(const Word01& w) { return LWord(w.begin(), w.end()); }

Word01 lword_to_word01(const LWord& w) {
    Word01 r;
    r.reserve(w.size());
    for (Letter x : w) {
        if (!is_concrete(x)) throw std::invalid_argument("word contains symbolic letters");
        r.push_back(static_cast<uint8_t>(x));
    }
    return r;
}

bool lword_concrete(const LWord& w) {
    return std::all_of(w.begin(), w.end(), [](Letter x) { return is_concrete(x); });
}

std::string to_string(const LWord& w) {
    if (w.empty()) return "1";
    if (lword_concrete(w)) {
        std::string s;
        for (Letter x : w) s.push_back(x ? '1' : '0');
        return s;
    }
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += letter_name(w[i]);
    }
    return s;
}

std::string to_string(const APoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        Rat a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || w.empty()) os << a.get_str() << (w.empty() ? "" : " ");
        if (!w.empty()) os << "(" << to_string(w) << ")";
    }
    return os.str();
}

LWord iota_word(const LWord& w) {
    LWord r = w;
    for (Letter& x : r) x = iota(x);
    return r;
}

APoly iota_pow(int k, const APoly& p) {
    if (((k % 2) + 2) % 2 == 0) return p;
    APoly r;
    for (const auto& [w, c] : p.terms()) r.add(iota_word(w), c);
    return r;
}

APoly alt_word(int t, int b) {
    if (b < 0) return APoly::zero();
    LWord w;
    w.reserve(static_cast<size_t>(b));
    Letter x = t;
    for (int i = 0; i < b; ++i) {
        w.push_back(x);
        x = iota(x);
    }
    return APoly::mono(std::move(w));
}

APoly U(int b) {
    if (b < 0) return APoly::zero();
    return alt_word(0, b) + alt_word(1, b);
}

APoly U_minus(int b) {
    if (b < 0) return APoly::zero();
    return alt_word(0, b) - alt_word(1, b);
}

LWord block_B(const XWord& u) {
    if (u.empty()) throw std::invalid_argument("B is defined on non-constant monomials");
    LWord w;
    w.reserve(static_cast<size_t>(xword_weight(u)));
    Letter cur = kZero;
    for (size_t blk = 0; blk < u.size(); ++blk) {
        if (blk > 0) cur = iota(cur);  // letters repeat across block boundaries
        for (int i = 0; i < u[blk]; ++i) {
            w.push_back(cur);
            cur = iota(cur);
        }
    }
    return w;
}

APoly block_B(const XPoly& u) {
    APoly r;
    for (const auto& [w, c] : u.terms()) {
        if (w.empty()) throw std::invalid_argument("B is defined on X^+");
        r.add(block_B(w), c);
    }
    return r;
}

namespace {

APoly prepend(Letter a, const APoly& p) {
    APoly r;
    for (const auto& [w, c] : p.terms()) {
        LWord s;
        s.reserve(w.size() + 1);
        s.push_back(a);
        s.insert(s.end(), w.begin(), w.end());
        r.add(std::move(s), c);
    }
    return r;
}

// DP over (suffix of blocks, suffix of letters) using the head recursion of
// the diamond product. Terms of the form u <> 1 are zero by convention.
class DiamondWords {
public:
    DiamondWords(const XWord& b, const LWord& a) : b_(b), a_(a) {
        memo_.assign((b.size() + 1) * (a.size() + 1), std::nullopt);
    }

    const APoly& run(size_t i, size_t j) {
        auto& slot = memo_[i * (a_.size() + 1) + j];
        if (slot) return *slot;
        APoly r;
        const size_t m = b_.size();
        const size_t n = a_.size();
        if (j == n) {
            // u <> 1 = 0; never used by the recursion below
            r = (i == m) ? APoly::one() : APoly::zero();
        } else if (i == m) {
            r = APoly::mono(LWord(a_.begin() + j, a_.end()));
        } else {
            Letter a1 = a_[j];
            int d = 0;
            for (size_t k = i; k < m; ++k) {
                d += b_[k];
                int ck = d - static_cast<int>(k - i + 1);
                int sgn = ((k - i) % 2 == 0) ? 1 : -1;
                APoly t1 = prepend(a1, U(d - 1) * iota_pow(ck, run(k + 1, j)));
                t1 *= Rat(sgn);
                r += t1;
                if (j + 1 < n) {
                    APoly t2 = prepend(a1, U(d) * iota_pow(ck, run(k + 1, j + 1)));
                    t2 *= Rat(-sgn);
                    r += t2;
                }
            }
            if (j + 1 < n) r += prepend(a1, run(i, j + 1));
        }
        slot = std::move(r);
        return *slot;
    }

private:
    const XWord& b_;
    const LWord& a_;
    std::vector<std::optional<APoly>> memo_;
};

}  // namespace

APoly diamond(const XPoly& u, const APoly& w) {
    APoly r;
    for (const auto& [lw, cw] : w.terms()) {
        if (lw.empty()) throw std::invalid_argument("diamond needs the right factor in A^+");
        for (const auto& [xw, cu] : u.terms()) {
            DiamondWords dp(xw, lw);
            APoly p = dp.run(0, 0);
            p *= cu * cw;
            r += p;
        }
    }
    return r;
}

APoly diamond_closed(const XWord& u, const LWord& w) {
    if (w.empty()) throw std::invalid_argument("diamond needs the right factor in A^+");
    const int m = static_cast<int>(u.size());
    const int n = static_cast<int>(w.size());
    APoly out;
    // Tuples (i_1,...,i_d,f): i_1 = 1, i_d = n, steps in {0,1}, f weakly
    // increasing with empty fibers forcing a step of 1. The walk chooses, per
    // gap, a contiguous run of b's (the fiber) and the step.
    auto rec = [&](auto&& self, int letter_idx, int used_b, int d_so_far, const APoly& acc,
                   int s_acc) -> void {
        if (letter_idx == n - 1 && used_b == m) {
            int d = d_so_far;
            int sgn = ((n + m - d) % 2 == 0) ? 1 : -1;
            APoly t = acc;
            t *= Rat(sgn);
            out += t;
            return;
        }
        for (int take = 0; used_b + take <= m; ++take) {
            int bsum = 0;
            for (int t = 0; t < take; ++t) bsum += u[used_b + t];
            for (int step = (take == 0 ? 1 : 0); step <= 1; ++step) {
                int next_letter = letter_idx + step;
                if (next_letter > n - 1) continue;
                APoly vk = (take == 0) ? APoly::one() : U(step - 1 + bsum);
                if (vk.is_zero()) continue;
                int s_next = s_acc + bsum - take;
                APoly acc2 = acc * vk * iota_pow(s_next, APoly::mono(LWord{w[next_letter]}));
                self(self, next_letter, used_b + take, d_so_far + 1, acc2, s_next);
            }
        }
    };
    APoly start = APoly::mono(LWord{w[0]});
    rec(rec, 0, 0, 1, start, 0);
    return out;
}

APoly diamond_second_recursion(const XWord& u, const LWord& w) {
    if (w.empty()) throw std::invalid_argument("diamond needs the right factor in A^+");
    const int m = static_cast<int>(u.size());
    const int n = static_cast<int>(w.size());
    if (m == 0) return APoly::mono(w);
    int total_c = xword_weight(u) - m;
    APoly r;
    LWord head(w.begin(), w.end() - 1);
    APoly last_tail = iota_pow(total_c, APoly::mono(LWord{w[n - 1]}));
    for (int l = 0; l <= m - 1; ++l) {
        int sgn = ((m - 1 - l) % 2 == 0) ? 1 : -1;
        int bsum = 0;
        for (int k = l; k < m; ++k) bsum += u[k];
        XPoly uprefix = XPoly::mono(XWord(u.begin(), u.begin() + l));
        {
            APoly t = diamond(uprefix, APoly::mono(w)) * U(bsum - 1) * last_tail;
            t *= Rat(sgn);
            r += t;
        }
        if (n >= 2) {
            APoly t = diamond(uprefix, APoly::mono(head)) * U(bsum) * last_tail;
            t *= Rat(-sgn);
            r += t;
        }
    }
    if (n >= 2) r += diamond(XPoly::mono(u), APoly::mono(head)) * last_tail;
    return r;
}

APoly diamond_split(const XWord& u, const LWord& w, int s) {
    const int m = static_cast<int>(u.size());
    const int n = static_cast<int>(w.size());
    if (s < 1 || s >= n) throw std::invalid_argument("split position out of range");
    LWord left_w(w.begin(), w.begin() + s);
    LWord right_w(w.begin() + s, w.end());
    auto dsum = [&](int k) {
        int d = 0;
        for (int j = 0; j < k; ++j) d += u[j];
        return d;
    };
    APoly r;
    for (int k = 0; k <= m; ++k) {
        XPoly upre = XPoly::mono(XWord(u.begin(), u.begin() + k));
        XPoly upost = XPoly::mono(XWord(u.begin() + k, u.end()));
        int ck = dsum(k) - k;
        r += diamond(upre, APoly::mono(left_w)) * iota_pow(ck, diamond(upost, APoly::mono(right_w)));
    }
    for (int k = 0; k < m; ++k)
        for (int l = k + 1; l <= m; ++l) {
            XPoly upre = XPoly::mono(XWord(u.begin(), u.begin() + k));
            XPoly upost = XPoly::mono(XWord(u.begin() + l, u.end()));
            int cl = dsum(l) - l;
            int sgn = ((l - k) % 2 == 0) ? 1 : -1;
            APoly t = diamond(upre, APoly::mono(left_w)) * U(dsum(l) - dsum(k)) *
                      iota_pow(cl, diamond(upost, APoly::mono(right_w)));
            t *= Rat(sgn);
            r += t;
        }
    return r;
}

APoly diamond_snm(const XWord& u, const LWord& w, long* count) {
    const int m = static_cast<int>(u.size());
    const int n = static_cast<int>(w.size());
    if (n == 0) throw std::invalid_argument("diamond needs the right factor in A^+");
    if (m == 0) {
        if (count) *count = 1;
        return APoly::mono(w);
    }
    // S_{n,m} words encoded as +p for A_p, -i for B_i.
    std::vector<int> seq{+1};
    long cnt = 0;
    APoly out;

    auto h_eval = [&](auto&& self, size_t pos) -> APoly {
        int p = seq[pos];
        if (pos + 1 == seq.size()) return APoly::mono(LWord{w[p - 1]});
        size_t q = pos + 1;
        if (seq[q] > 0) return prepend(w[p - 1], self(self, q));
        int i = -seq[q];
        size_t r = q;
        while (r + 1 < seq.size() && seq[r + 1] < 0) ++r;
        int j = -seq[r];
        int bsum = 0, csum = 0;
        for (int t = i; t <= j; ++t) {
            bsum += u[t - 1];
            csum += u[t - 1] - 1;
        }
        int pnext = seq[r + 1];
        APoly rest = iota_pow(csum, self(self, r + 1));
        if (pnext == p) {
            APoly t = prepend(w[p - 1], U(bsum - 1) * rest);
            t *= Rat(((j - i) % 2 == 0) ? 1 : -1);
            return t;
        }
        APoly t = prepend(w[p - 1], U(bsum) * rest);
        t *= Rat(((j - i + 1) % 2 == 0) ? 1 : -1);
        return t;
    };

    auto rec = [&](auto&& self, int cur_a, int next_b) -> void {
        if (cur_a == n && next_b == m + 1 && seq.back() == n) {
            ++cnt;
            out += h_eval(h_eval, 0);
        }
        if (next_b <= m) {
            seq.push_back(-next_b);
            self(self, cur_a, next_b + 1);
            seq.pop_back();
        }
        if (seq.back() < 0) {  // A_p may repeat only after an intervening B
            seq.push_back(cur_a);
            self(self, cur_a, next_b);
            seq.pop_back();
        }
        if (cur_a < n) {
            seq.push_back(cur_a + 1);
            self(self, cur_a + 1, next_b);
            seq.pop_back();
        }
    };
    rec(rec, 1, 1);
    if (count) *count = cnt;
    return out;
}

APoly strip(const APoly& p) {
    APoly r;
    for (const auto& [w, c] : p.terms()) {
        if (w.size() < 2) continue;
        r.add(LWord(w.begin() + 1, w.end() - 1), c);
    }
    return r;
}

APoly cut(const APoly& p, const LWord& prefix, const LWord& suffix) {
    APoly r;
    for (const auto& [w, c] : p.terms()) {
        if (w.size() < prefix.size() + suffix.size()) continue;
        if (!std::equal(prefix.begin(), prefix.end(), w.begin())) continue;
        if (!std::equal(suffix.rbegin(), suffix.rend(), w.rbegin())) continue;
        r.add(LWord(w.begin() + prefix.size(), w.end() - suffix.size()), c);
    }
    return r;
}

namespace {

class ShuffleWords {
public:
    ShuffleWords(const LWord& u, const LWord& v) : u_(u), v_(v) {
        memo_.assign((u.size() + 1) * (v.size() + 1), std::nullopt);
    }
    const APoly& run(size_t i, size_t j) {
        auto& slot = memo_[i * (v_.size() + 1) + j];
        if (slot) return *slot;
        APoly r;
        if (i == u_.size()) {
            r = APoly::mono(LWord(v_.begin() + j, v_.end()));
        } else if (j == v_.size()) {
            r = APoly::mono(LWord(u_.begin() + i, u_.end()));
        } else {
            r = prepend(u_[i], run(i + 1, j));
            r += prepend(v_[j], run(i, j + 1));
        }
        slot = std::move(r);
        return *slot;
    }

private:
    const LWord& u_;
    const LWord& v_;
    std::vector<std::optional<APoly>> memo_;
};

size_t trailing_ones(const LWord& w) {
    size_t q = 0;
    while (q < w.size() && w[w.size() - 1 - q] == kOne) ++q;
    return q;
}

size_t leading_zeros(const LWord& w) {
    size_t p = 0;
    while (p < w.size() && w[p] == kZero) ++p;
    return p;
}

}  // namespace

APoly shuffle(const APoly& u, const APoly& v) {
    APoly r;
    for (const auto& [wu, cu] : u.terms())
        for (const auto& [wv, cv] : v.terms()) {
            ShuffleWords dp(wu, wv);
            APoly p = dp.run(0, 0);
            p *= cu * cv;
            r += p;
        }
    return r;
}

namespace {

// Projection along shuffle multiples of e_1 onto words without trailing e_1:
// repeatedly rewrite (u e_1^q) = u sh e_1^q - R where R has strictly fewer
// trailing ones, using reg(anything sh e_1) = 0.
APoly reg_right(const APoly& p) {
    APoly done, pending = p;
    while (!pending.is_zero()) {
        size_t best_q = 0;
        LWord best;
        Rat coeff;
        for (const auto& [w, c] : pending.terms()) {
            size_t q = trailing_ones(w);
            if (q >= best_q) {
                best_q = q;
                best = w;
                coeff = c;
            }
        }
        if (best_q == 0) {
            done += pending;
            break;
        }
        LWord u(best.begin(), best.end() - static_cast<long>(best_q));
        APoly sh = shuffle(APoly::mono(u), APoly::mono(LWord(best_q, kOne)));
        sh *= -coeff;  // cancels the picked term, substitutes -coeff * R
        pending += sh;
    }
    return done;
}

APoly reg_left(const APoly& p) {
    APoly done, pending = p;
    while (!pending.is_zero()) {
        size_t best_p = 0;
        LWord best;
        Rat coeff;
        for (const auto& [w, c] : pending.terms()) {
            size_t q = leading_zeros(w);
            if (q >= best_p) {
                best_p = q;
                best = w;
                coeff = c;
            }
        }
        if (best_p == 0) {
            done += pending;
            break;
        }
        LWord u(best.begin() + static_cast<long>(best_p), best.end());
        APoly sh = shuffle(APoly::mono(LWord(best_p, kZero)), APoly::mono(u));
        sh *= -coeff;
        pending += sh;
    }
    return done;
}

}  // namespace

APoly shuffle_regularize(const APoly& p) {
    for (const auto& [w, c] : p.terms())
        if (!lword_concrete(w))
            throw std::invalid_argument("regularization defined on {0,1} only");
    return reg_left(reg_right(p));
}

int diamond_assoc_probe(int trials, unsigned long seed) {
    std::mt19937_64 rng(seed);
    auto rand_xword = [&](int maxlen, int maxsub) {
        std::uniform_int_distribution<int> len(0, maxlen), sub(1, maxsub);
        XWord w(static_cast<size_t>(len(rng)));
        for (auto& e : w) e = sub(rng);
        return w;
    };
    auto rand_lword = [&](int maxlen) {
        std::uniform_int_distribution<int> len(1, maxlen), bit(0, 1);
        LWord w(static_cast<size_t>(len(rng)));
        for (auto& e : w) e = bit(rng);
        return w;
    };
    int mismatches = 0;
    for (int t = 0; t < trials; ++t) {
        XPoly u = XPoly::mono(rand_xword(2, 2));
        XPoly v = XPoly::mono(rand_xword(2, 2));
        APoly w = APoly::mono(rand_lword(3));
        APoly lhs = diamond(u, diamond(v, w));
        APoly rhs = diamond(block_shuffle(u, v), w);
        if (!(lhs == rhs)) ++mismatches;
    }
    return mismatches;
}

}  // namespace zb
