#include "zb/differential.hpp"

#include <stdexcept>

namespace zb {

int delta_pair(const DeltaSpec& spec, Letter x, Letter y) {
    auto same = [](Letter a, Letter b, Letter c, Letter d) {
        return (a == c && b == d) || (a == d && b == c);
    };
    if (same(spec.alpha, spec.beta, x, y)) return 1;
    if (same(spec.alpha, spec.beta, iota(x), iota(y))) return 1;
    return 0;
}

APoly partial(const DeltaSpec& spec, const APoly& w) {
    APoly r;
    for (const auto& [word, c] : w.terms()) {
        const size_t len = word.size();
        if (len < 3) continue;  // partial(1) = partial(e_z) = 0; length 2 has no interior
        for (size_t i = 1; i + 1 < len; ++i) {
            int coeff = delta_pair(spec, word[i], word[i + 1]) - delta_pair(spec, word[i], word[i - 1]);
            if (coeff == 0) continue;
            LWord del;
            del.reserve(len - 1);
            del.insert(del.end(), word.begin(), word.begin() + static_cast<long>(i));
            del.insert(del.end(), word.begin() + static_cast<long>(i) + 1, word.end());
            r.add(std::move(del), c * coeff);
        }
    }
    return r;
}

APoly big_D(const DeltaSpec& spec, const APoly& w1, Letter a, const APoly& w2) {
    APoly r;
    // sum over s of Delta_{a,s} (w1 e_s w2_s - w1_s e_s w2), where w2_s strips
    // the leading e_s from w2 and w1_s the trailing e_s from w1
    for (const auto& [word, c] : w2.terms()) {
        if (word.empty()) continue;
        int d = delta_pair(spec, a, word.front());
        if (d == 0) continue;
        for (const auto& [w1word, c1] : w1.terms()) {
            LWord t = w1word;
            t.insert(t.end(), word.begin(), word.end());
            r.add(std::move(t), c * c1 * d);
        }
    }
    for (const auto& [word, c] : w1.terms()) {
        if (word.empty()) continue;
        int d = delta_pair(spec, a, word.back());
        if (d == 0) continue;
        for (const auto& [w2word, c2] : w2.terms()) {
            LWord t = word;
            t.insert(t.end(), w2word.begin(), w2word.end());
            r.add(std::move(t), -c * c2 * d);
        }
    }
    return r;
}

APoly d_operator(const APoly& w) {
    APoly r;
    for (const auto& [word, c] : w.terms()) {
        if (!lword_concrete(word)) throw std::invalid_argument("D is defined on {0,1} words");
        for (size_t i = 0; i < word.size(); ++i) {
            // replace letter i by -e_1 e_0
            LWord t;
            t.reserve(word.size() + 1);
            t.insert(t.end(), word.begin(), word.begin() + static_cast<long>(i));
            t.push_back(kOne);
            t.push_back(kZero);
            t.insert(t.end(), word.begin() + static_cast<long>(i) + 1, word.end());
            r.add(std::move(t), -c);
        }
    }
    return r;
}

bool verify_alg_der_formula(const std::vector<int>& b, int n, const DeltaSpec& spec) {
    if (n < 1) throw std::invalid_argument("need at least one letter");
    for (int bi : b)
        if (bi < 1) throw std::invalid_argument("b entries must be positive");
    LWord letters;
    for (int i = 1; i <= n; ++i) letters.push_back(sym(i));
    APoly word = APoly::mono(letters);
    XPoly xb = XPoly::mono(XWord(b.begin(), b.end()));

    APoly lhs = partial(spec, diamond(xb, word));

    APoly pw = partial(spec, word);
    APoly rhs = pw.is_zero() ? APoly::zero() : diamond(xb, pw);
    const int m = static_cast<int>(b.size());
    if (m >= 1) {
        Letter a1 = letters.front(), an = letters.back();
        if (b.front() == 1) {
            int coef = delta_pair(spec, a1, kZero) + delta_pair(spec, a1, kOne) -
                       delta_pair(spec, a1, a1);
            if (coef != 0) {
                XPoly tail = XPoly::mono(XWord(b.begin() + 1, b.end()));
                APoly t = diamond(tail, word);
                t *= Rat(coef);
                rhs += t;
            }
        }
        if (b.back() == 1) {
            int coef = delta_pair(spec, an, kZero) + delta_pair(spec, an, kOne) -
                       delta_pair(spec, an, an);
            if (coef != 0) {
                XPoly headp = XPoly::mono(XWord(b.begin(), b.end() - 1));
                APoly t = diamond(headp, word);
                t *= Rat(coef);
                rhs -= t;
            }
        }
    }
    return lhs == rhs;
}

}  // namespace zb
