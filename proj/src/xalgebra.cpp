#include "zb/xalgebra.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace zb {

int xword_weight(const XWord& w) { return std::accumulate(w.begin(), w.end(), 0); }

bool xword_odd_parity(const XWord& w) {
    int s = 0;
    for (int e : w) s += e - 1;
    return (s & 1) != 0;
}

bool xword_all_ones(const XWord& w) {
    for (int e : w)
        if (e != 1) return false;
    return true;
}

XPoly shift_s(int k, const XPoly& u) {
    if (k < 0) throw std::invalid_argument("shift_s needs k >= 0");
    XPoly r;
    for (const auto& [w, c] : u.terms()) {
        if (w.empty()) continue;  // s_k(1) = 0
        XWord s = w;
        s[0] += k;
        r.add(std::move(s), c);
    }
    return r;
}

namespace {

XPoly prepend(int a, const XPoly& p) {
    XPoly r;
    for (const auto& [w, c] : p.terms()) {
        XWord s;
        s.reserve(w.size() + 1);
        s.push_back(a);
        s.insert(s.end(), w.begin(), w.end());
        r.add(std::move(s), c);
    }
    return r;
}

// DP over suffix pairs of two fixed monomials.
class BlockShuffleWords {
public:
    BlockShuffleWords(const XWord& u, const XWord& v) : u_(u), v_(v) {
        memo_.assign((u.size() + 1) * (v.size() + 1), std::nullopt);
    }

    const XPoly& run(size_t i, size_t j) {
        auto& slot = memo_[i * (v_.size() + 1) + j];
        if (slot) return *slot;
        XPoly r;
        if (i == u_.size()) {
            r = XPoly::mono(XWord(v_.begin() + j, v_.end()));
        } else if (j == v_.size()) {
            r = XPoly::mono(XWord(u_.begin() + i, u_.end()));
        } else {
            int a = u_[i], b = v_[j];
            r = prepend(a, run(i + 1, j));
            r += prepend(b, run(i, j + 1));
            r -= shift_s(a + b, run(i + 1, j + 1));
        }
        slot = std::move(r);
        return *slot;
    }

private:
    const XWord& u_;
    const XWord& v_;
    std::vector<std::optional<XPoly>> memo_;
};

}  // namespace

XPoly block_shuffle(const XPoly& u, const XPoly& v) {
    XPoly r;
    for (const auto& [wu, cu] : u.terms())
        for (const auto& [wv, cv] : v.terms()) {
            BlockShuffleWords dp(wu, wv);
            XPoly p = dp.run(0, 0);
            p *= cu * cv;
            r += p;
        }
    return r;
}

namespace {

// Enumerates (f,g) pairs of the closed forms. At each letter position the
// fiber sizes (df,dg) must differ by +-1, except that start_zero allows the
// first position to have df == dg (the f_c variant, where x_c is prefixed).
void enumerate_fibers(const XWord& a, const XWord& b, bool start_zero, int c0, XPoly& out) {
    const int l = static_cast<int>(a.size());
    const int m = static_cast<int>(b.size());
    XWord word;
    auto rec = [&](auto&& self, int p, int q, bool first) -> void {
        if (p == l && q == m && !first) {
            int n = static_cast<int>(word.size());
            int excess = l + m + (start_zero ? 1 : 0) - n;
            // excess is even by construction of the fiber constraints
            int sign = (excess / 2) % 2 == 0 ? 1 : -1;
            out.add(word, Rat(sign));
            return;
        }
        if (p == l && q == m) return;
        // choose fiber sizes at next position
        for (int df = 0; p + df <= l; ++df) {
            int base = 0;
            for (int k = 0; k < df; ++k) base += a[p + k];
            for (int dg = 0; q + dg <= m; ++dg) {
                int diff = df - dg;
                bool ok = first && start_zero ? (diff == 0) : (diff == 1 || diff == -1);
                if (!ok) {
                    if (dg > df + 1) break;
                    continue;
                }
                int ci = base + (first && start_zero ? c0 : 0);
                for (int k = 0; k < dg; ++k) ci += b[q + k];
                if (ci == 0) continue;  // cannot happen except empty first fiber in f_c with c0>0
                word.push_back(ci);
                self(self, p + df, q + dg, false);
                word.pop_back();
            }
        }
    };
    rec(rec, 0, 0, true);
}

}  // namespace

XPoly block_shuffle_closed(const XWord& u, const XWord& v) {
    XPoly r;
    enumerate_fibers(u, v, /*start_zero=*/false, 0, r);
    return r;
}

XPoly f_c_closed(int c, const XWord& u, const XWord& v) {
    if (c < 1) throw std::invalid_argument("f_c needs c >= 1");
    XPoly r;
    enumerate_fibers(u, v, /*start_zero=*/true, c, r);
    return r;
}

namespace {

class FcWords {
public:
    FcWords(const XWord& u, const XWord& v) : u_(u), v_(v) {}

    XPoly run(int c, size_t i, size_t j) {
        auto key = std::tuple<int, size_t, size_t>(c, i, j);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        XPoly r;
        if (i == u_.size()) {
            XWord w;
            w.push_back(c);
            w.insert(w.end(), v_.begin() + j, v_.end());
            r = XPoly::mono(std::move(w));
        } else if (j == v_.size()) {
            XWord w;
            w.push_back(c);
            w.insert(w.end(), u_.begin() + i, u_.end());
            r = XPoly::mono(std::move(w));
        } else {
            int a = u_[i], b = v_[j];
            r = prepend(c, run(a, i + 1, j));
            r += prepend(c, run(b, i, j + 1));
            r -= run(c + a + b, i + 1, j + 1);
        }
        memo_.emplace(key, r);
        return r;
    }

private:
    const XWord& u_;
    const XWord& v_;
    std::map<std::tuple<int, size_t, size_t>, XPoly> memo_;
};

}  // namespace

XPoly f_c(int c, const XPoly& u, const XPoly& v) {
    if (c < 1) throw std::invalid_argument("f_c needs c >= 1");
    XPoly r;
    for (const auto& [wu, cu] : u.terms())
        for (const auto& [wv, cv] : v.terms()) {
            FcWords dp(wu, wv);
            XPoly p = dp.run(c, 0, 0);
            p *= cu * cv;
            r += p;
        }
    return r;
}

XPoly antipode_S(const XPoly& u) {
    XPoly r;
    for (const auto& [w, c] : u.terms()) {
        XWord s(w.rbegin(), w.rend());
        int sign = (w.size() % 2 == 0) ? 1 : -1;
        r.add(std::move(s), c * sign);
    }
    return r;
}

namespace {

void check_23(const Index& k) {
    for (int e : k.entries())
        if (e != 2 && e != 3) throw std::invalid_argument("star is defined on {2,3}-indices");
}

void combo_add(IndexCombo& m, const Index& k, const Rat& c) {
    auto [it, inserted] = m.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) m.erase(it);
    }
}

Index drop_last(const Index& k) {
    auto e = k.entries();
    e.pop_back();
    return Index(std::move(e));
}

Index append(const Index& k, std::initializer_list<int> tail) {
    auto e = k.entries();
    e.insert(e.end(), tail);
    return Index(std::move(e));
}

}  // namespace

IndexCombo star(const Index& k, const Index& kp) {
    check_23(k);
    check_23(kp);
    std::map<std::pair<Index, Index>, IndexCombo> memo;
    auto rec = [&](auto&& self, const Index& a, const Index& b) -> const IndexCombo& {
        auto key = std::make_pair(a, b);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        IndexCombo out;
        if (a.empty()) {
            combo_add(out, b, Rat(1));
        } else if (b.empty()) {
            combo_add(out, a, Rat(1));
        } else if (a.entries().back() == 2) {
            for (const auto& [w, c] : self(self, drop_last(a), b)) combo_add(out, append(w, {2}), c);
        } else if (b.entries().back() == 2) {
            for (const auto& [w, c] : self(self, a, drop_last(b))) combo_add(out, append(w, {2}), c);
        } else {
            // both end with 3
            for (const auto& [w, c] : self(self, drop_last(a), b)) combo_add(out, append(w, {3}), c);
            for (const auto& [w, c] : self(self, a, drop_last(b))) combo_add(out, append(w, {3}), c);
            for (const auto& [w, c] : self(self, drop_last(a), drop_last(b)))
                combo_add(out, append(w, {2, 2, 2}), c);
        }
        return memo.emplace(std::move(key), std::move(out)).first->second;
    };
    return rec(rec, k, kp);
}

XPoly iota_map(const Index& k) {
    check_23(k);
    if (!k.empty() && k.entries().back() == 2)
        throw std::invalid_argument("iota is defined on {2,3}-indices not ending in 2");
    // reading order: ({2}^{c_1},3,...,{2}^{c_d},3); monomial lists blocks in
    // reverse reading order.
    std::vector<int> twos;
    int run = 0, total = 0;
    for (int e : k.entries()) {
        if (e == 2) {
            ++run;
        } else {
            twos.push_back(run);
            total += run;
            run = 0;
        }
    }
    XWord w;
    for (auto it = twos.rbegin(); it != twos.rend(); ++it) w.push_back(2 * *it + 3);
    return XPoly::mono(std::move(w), Rat(total % 2 == 0 ? 1 : -1));
}

XPoly theta_map(const Index& k) {
    check_23(k);
    std::vector<int> twos;
    int run = 0, total = 0;
    for (int e : k.entries()) {
        if (e == 2) {
            ++run;
        } else {
            twos.push_back(run);
            total += run;
            run = 0;
        }
    }
    // trailing block of 2s
    total += run;
    XWord w;
    w.push_back(2 * run + 2);
    for (auto it = twos.rbegin(); it != twos.rend(); ++it) w.push_back(2 * *it + 3);
    return XPoly::mono(std::move(w), Rat(total % 2 == 0 ? 1 : -1));
}

XPoly theta_map(const IndexCombo& combo, int twos_appended) {
    XPoly r;
    for (const auto& [k, c] : combo) {
        auto e = k.entries();
        e.insert(e.end(), twos_appended, 2);
        XPoly t = theta_map(Index(std::move(e)));
        t *= c;
        r += t;
    }
    return r;
}

std::optional<XPoly> parse_xpoly(std::string_view s) {
    XPoly out;
    size_t i = 0, n = s.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip_ws();
    if (i == n) return std::nullopt;
    bool first = true;
    while (i < n) {
        skip_ws();
        Rat sign(1);
        if (i < n && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (!first) {
            return std::nullopt;
        }
        first = false;
        // optional rational coefficient
        Rat coeff(1);
        size_t start = i;
        while (i < n && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
        if (i > start) {
            auto q = parse_rational(s.substr(start, i - start));
            if (!q) return std::nullopt;
            coeff = *q;
        }
        skip_ws();
        if (i < n && s[i] == '*') {
            ++i;
            skip_ws();
        }
        if (i < n && s[i] == 'x') {
            ++i;
            size_t open = i;
            if (open >= n || s[open] != '[') return std::nullopt;
            size_t close = s.find(']', open);
            if (close == std::string_view::npos) return std::nullopt;
            auto idx = parse_index(s.substr(open, close - open + 1));
            if (!idx) return std::nullopt;
            i = close + 1;
            out.add(xword(*idx), sign * coeff);
        } else {
            // bare rational term: a multiple of the empty word; require that a
            // coefficient (possibly "1") was present
            if (i == start) return std::nullopt;
            out.add(XWord{}, sign * coeff);
        }
        skip_ws();
    }
    return out;
}

std::string to_string(const XPoly& p) {
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
        bool unit_coeff = (a == 1);
        if (!unit_coeff || w.empty()) os << a.get_str();
        if (!w.empty()) {
            if (!unit_coeff) os << ' ';
            os << "x[";
            for (size_t i = 0; i < w.size(); ++i) {
                if (i) os << ',';
                os << w[i];
            }
            os << ']';
        }
    }
    return os.str();
}

}  // namespace zb
