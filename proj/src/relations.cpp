#include "zb/relations.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "zb/differential.hpp"
#include "zb/walgebra.hpp"

namespace zb {

void Relation::add(const Index& k, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = combo.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) combo.erase(it);
    }
}

PiConst ibl_single_block(int even_entry) {
    if (even_entry < 2 || even_entry % 2 != 0)
        throw std::invalid_argument("single block must be even and >= 2");
    // I_bl(2m) = (-1)^{m-1} pi^{2m-2} / (2m-1)!
    int m = even_entry / 2;
    Rat fact(1);
    for (int i = 2; i <= 2 * m - 1; ++i) fact *= i;
    PiConst c;
    c.rational = Rat((m % 2 == 1) ? 1 : -1) / fact;
    c.pi_power = 2 * m - 2;
    return c;
}

namespace {

BigReal constant_value(const PiConst& c, const Evaluator& ev) {
    BigReal v(c.rational, ev.work_bits());
    if (c.pi_power != 0) v *= pow_si(ev.pi(), c.pi_power);
    return v;
}

BigReal residual_impl(const Relation& r, const Evaluator& ev, bool regularized) {
    BigReal acc(0, ev.work_bits());
    for (const auto& [k, c] : r.combo) {
        BigReal v = regularized ? ev.L_block_reg(k) : ev.L_block_sh(k);
        acc += BigReal(c, ev.work_bits()) * v;
    }
    acc -= constant_value(r.constant, ev);
    return abs(acc);
}

}  // namespace

BigReal verify(const Relation& r, const Evaluator& ev) { return residual_impl(r, ev, true); }
BigReal verify_plain(const Relation& r, const Evaluator& ev) { return residual_impl(r, ev, false); }

Relation block_shuffle_relation(const XWord& u, const XWord& v) {
    if (u.empty() || xword_odd_parity(u))
        throw std::invalid_argument("left factor must be even and non-constant");
    if (!xword_odd_parity(v)) throw std::invalid_argument("right factor must be odd");
    XPoly p = block_shuffle(XPoly::mono(u), XPoly::mono(v));
    Relation r;
    r.weight = xword_weight(u) + xword_weight(v) - 2;
    for (const auto& [w, c] : p.terms()) r.add(xword_index(w), c);
    r.label = "bsh2(" + to_string(xword_index(u)) + "," + to_string(xword_index(v)) + ")";
    return r;
}

Relation cyclic_insertion(const std::vector<int>& l) {
    Index base{std::vector<int>(l)};
    if (!base.odd_parity()) throw std::invalid_argument("cyclic insertion needs odd sum of (l_i - 1)");
    const int d = static_cast<int>(l.size());
    Relation r;
    int total = std::accumulate(l.begin(), l.end(), 0);
    r.weight = total - 2;
    for (int s = 0; s < d; ++s) {
        std::vector<int> rot;
        rot.reserve(l.size());
        rot.insert(rot.end(), l.begin() + s, l.end());
        rot.insert(rot.end(), l.begin(), l.begin() + s);
        r.add(Index(std::move(rot)), Rat(1));
    }
    if (d % 2 == 1) r.constant = ibl_single_block(total);
    r.label = "cyclic(" + to_string(base) + ")";
    return r;
}

Relation alternating_sum_relation(const std::vector<int>& a, const std::vector<int>& b) {
    const int n = static_cast<int>(b.size());
    if (static_cast<int>(a.size()) != n + 1 || n < 1)
        throw std::invalid_argument("need n+1 a-entries and n b-entries");
    for (int x : a)
        if (x < 2) throw std::invalid_argument("entries must be >= 2");
    for (int x : b)
        if (x < 2) throw std::invalid_argument("entries must be >= 2");
    long total = std::accumulate(a.begin(), a.end(), 0L) + std::accumulate(b.begin(), b.end(), 0L);
    if (total % 2 != 0) throw std::invalid_argument("entry sum must be even");
    Relation r;
    r.weight = static_cast<int>(total) - 2;
    std::vector<int> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        // sign of the permutation by counting inversions
        int inv = 0;
        for (size_t i = 0; i < perm.size(); ++i)
            for (size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inv;
        std::vector<int> e;
        for (int i = 0; i <= n; ++i) {
            e.push_back(a[static_cast<size_t>(perm[static_cast<size_t>(i)])]);
            if (i < n) e.push_back(b[static_cast<size_t>(i)]);
        }
        r.add(Index(std::move(e)), Rat(inv % 2 == 0 ? 1 : -1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    r.label = "altsum(n=" + std::to_string(n) + ")";
    return r;
}

namespace {

// Splits a {2,3}-index as (core, {2}^t) with core not ending in 2.
std::pair<Index, int> split_trailing_twos(const Index& k) {
    auto e = k.entries();
    int t = 0;
    while (!e.empty() && e.back() == 2) {
        e.pop_back();
        ++t;
    }
    return {Index(std::move(e)), t};
}

}  // namespace

Relation hoffman_star_expansion(const Index& k, const Index& kp) {
    for (int e : k.entries())
        if (e != 2 && e != 3) throw std::invalid_argument("indices must lie in {2,3}");
    for (int e : kp.entries())
        if (e != 2 && e != 3) throw std::invalid_argument("indices must lie in {2,3}");
    auto [kcore, a] = split_trailing_twos(k);
    auto [lcore, b] = split_trailing_twos(kp);
    // zeta(k',k-dual) = (-1)^{a+b} L_B( S(iota(lcore)) x_{2+2a+2b} iota(kcore) )
    XPoly lhs = antipode_S(iota_map(lcore)) * XPoly::mono(XWord{2 + 2 * (a + b)}) * iota_map(kcore);
    lhs *= Rat((a + b) % 2 == 0 ? 1 : -1);
    // zeta(k * k') = L_B(theta(k * k'))
    XPoly rhs = theta_map(star(k, kp), 0);
    XPoly diff = lhs - rhs;
    Relation r;
    r.weight = k.weight() + kp.weight();
    for (const auto& [w, c] : diff.terms()) r.add(xword_index(w), c);
    r.label = "star(" + to_string(k) + "," + to_string(kp) + ")";
    return r;
}

namespace {

Rat poly_p(long a, long b, long c) { return Rat((a - b) * (a + b - 6 * c + 3)); }

Rat poly_q(long a, long b, long c) {
    Rat s = Rat(17) * (a * a * a + b * b * b) + Rat(197) * a * b * (a + b) +
            Rat(12) * (a * a + b * b - 16 * a * b) * c - Rat(222) * (a + b) * c * c -
            Rat(168) * c * c * c - Rat(362) * (a * a + b * b) - Rat(1238) * a * b +
            Rat(798) * (a + b) * c + Rat(1674) * c * c + Rat(1075) * (a + b) - Rat(3774) * c +
            Rat(590);
    return Rat(a - b) * s / 12;
}

long kron(long x, long y) { return x == y ? 1 : 0; }

Rat poly_r(long a, long b, long c) {
    Rat v = poly_q(a, 1, b);
    v += Rat((a - 1) * (c - 1) *
             (a * a + 19 * a * b - 3 * b * b + a * c - 6 * b * c - 26 * a - 17 * b + 4 * c + 30));
    v += Rat(26 * kron(a, 5) + 39 * kron(b, 5) - 21 * kron(a, 3) * kron(b, 3));
    v += Rat(2 * (b + c - b * b + 2 * b * c - c * c) * kron(a, 3));
    v += Rat(3 * c * (3 - c) * kron(b, 3));
    return v;
}

Rat poly_rp(long a, long b, long c) {
    return poly_q(a, b, c) +
           Rat(18 * kron(a, 2) * kron(b, 2) + 63 * kron(a, 2) * kron(b, 4) +
               117 * kron(a, 4) * kron(b, 2));
}

PiConst scaled_single_block(const Rat& scale, int even_total) {
    PiConst c = ibl_single_block(even_total);
    c.rational *= scale;
    return c;
}

}  // namespace

std::vector<Relation> degree2_relations(int w) {
    if (w < 2 || w % 2 != 0) throw std::invalid_argument("weight must be even and >= 2");
    std::vector<Relation> out;

    // I_bl(a,1,b) = -I_bl(a+b+1) - sum_j I_bl(j,a+1-j,b) - sum_j I_bl(a,b+1-j,j)
    for (int a = 2; a <= w - 1; ++a) {
        int b = w + 1 - a;
        if (b < 2) continue;
        Relation r;
        r.weight = w;
        r.add(Index{a, 1, b}, Rat(1));
        r.add(Index{a + b + 1}, Rat(1));
        for (int j = 2; j <= a - 1; ++j) r.add(Index{j, a + 1 - j, b}, Rat(1));
        for (int j = 2; j <= b - 1; ++j) r.add(Index{a, b + 1 - j, j}, Rat(1));
        r.label = "Ibl(a,1,b)(" + std::to_string(a) + "," + std::to_string(b) + ")";
        out.push_back(std::move(r));
    }

    // conjectural family i
    {
        Relation r;
        r.weight = w;
        r.conjectural = true;
        r.label = "except_rel_i(w=" + std::to_string(w) + ")";
        for (int a = 1; a <= w; a += 2)
            for (int b = 3; a + b <= w; b += 2) {
                int c = w + 2 - a - b;
                if (c < 2 || c % 2 != 0) continue;
                Rat coeff = Rat(3) * (poly_p(a, 1, b) + Rat(kron(a, 1) * kron(b, 3)));
                r.add(Index{a, b, c}, coeff);
            }
        for (int a = 2; a <= w; a += 2)
            for (int b = 2; a + b <= w; b += 2) {
                int c = w + 2 - a - b;
                if (c < 2 || c % 2 != 0) continue;
                r.add(Index{a, b, c}, -poly_p(a, b, c));
            }
        Rat scale = Rat(static_cast<long>(w) * w * (w - 2) * (5L * w - 11), 24);
        r.constant = scaled_single_block(scale, w + 2);
        out.push_back(std::move(r));
    }

    // conjectural family ii
    if (w >= 4) {
        Relation r;
        r.weight = w;
        r.conjectural = true;
        r.label = "except_rel_ii(w=" + std::to_string(w) + ")";
        for (int a = 3; a <= w; a += 2)
            for (int b = 3; a + b <= w; b += 2) {
                int c = w + 2 - a - b;
                if (c < 2 || c % 2 != 0) continue;
                Rat coeff = Rat(3) * poly_r(a, b, c);
                if (coeff.get_den() != 1) throw std::logic_error("r coefficients must be integral");
                r.add(Index{a, b, c}, coeff);
            }
        for (int a = 2; a <= w; a += 2)
            for (int b = 2; a + b <= w; b += 2) {
                int c = w + 2 - a - b;
                if (c < 2 || c % 2 != 0) continue;
                Rat coeff = poly_rp(a, b, c);
                if (coeff.get_den() != 1) throw std::logic_error("r' coefficients must be integral");
                r.add(Index{a, b, c}, -coeff);
            }
        long lw = w;
        Rat num = Rat(-220) * lw * lw * lw * lw * lw * lw + Rat(2751) * lw * lw * lw * lw * lw -
                  Rat(10375) * lw * lw * lw * lw + Rat(16620) * lw * lw * lw -
                  Rat(35620) * lw * lw - Rat(7536) * lw + Rat(285120);
        r.constant = scaled_single_block(num / 1440, w + 2);
        out.push_back(std::move(r));
    }
    return out;
}

BigReal cyclic_A(int r, const Evaluator& ev) {
    if (r % 2 != 0) return BigReal(0, ev.work_bits());
    Rat fact(1);
    for (int i = 2; i <= r + 2; ++i) fact *= i;
    return BigReal(Rat(2) / fact, ev.work_bits()) * ev.mu_pow(r);
}

BigReal cyclic_insertion_Ar_residual(const std::vector<int>& l, const Evaluator& ev) {
    Index base{std::vector<int>(l)};
    if (!base.odd_parity()) throw std::invalid_argument("cyclic insertion needs odd sum of (l_i - 1)");
    const int d = static_cast<int>(l.size());
    const int total = std::accumulate(l.begin(), l.end(), 0);
    BigReal lhs(0, ev.work_bits());
    for (int r = 0; r <= d; r += 2) {
        BigReal ar = cyclic_A(r, ev);
        for (int s = 0; s < d; ++s) {
            bool ones = true;
            for (int j = 1; j <= r; ++j)
                if (l[static_cast<size_t>((s + j) % d)] != 1) ones = false;
            if (!ones) continue;
            std::vector<int> rest;
            for (int j = r + 1; j <= d; ++j) rest.push_back(l[static_cast<size_t>((s + j) % d)]);
            BigReal val = rest.empty() ? BigReal(1, ev.work_bits()) : ev.L_block_sh(Index(rest));
            lhs += ar * val;
        }
    }
    BigReal rhs(0, ev.work_bits());
    if (d % 2 == 1) rhs = ev.L_block_sh(Index{total});
    return abs(lhs - rhs);
}

BigReal d_operator_lemma_residual(const Word01& w, const Evaluator& ev) {
    APoly pw = APoly::mono(lword(w));
    BigReal lhs = ev.itint(d_operator(pw));
    BigReal rhs(0, ev.work_bits());
    const int len = static_cast<int>(w.size());
    for (int n = 2; n - 1 <= len; ++n) {
        BigReal zn = ev.zeta(n);
        APoly left_cut = cut(pw, LWord(static_cast<size_t>(n - 1), kZero), LWord{});
        APoly right_cut = cut(pw, LWord{}, LWord(static_cast<size_t>(n - 1), kOne));
        BigReal term = ev.itint(left_cut);
        if (n % 2 != 0) term = -term;
        rhs += zn * (term + ev.itint(right_cut));
    }
    return abs(lhs - rhs);
}

Index bbb_index(int m, int n) {
    std::vector<int> e;
    for (int rep = 0; rep < n; ++rep) {
        e.insert(e.end(), static_cast<size_t>(m), 2);
        e.push_back(1);
        e.insert(e.end(), static_cast<size_t>(m), 2);
        e.push_back(3);
    }
    e.insert(e.end(), static_cast<size_t>(m), 2);
    return Index(std::move(e));
}

BigReal bbb_residual(int m, int n, const Evaluator& ev) {
    if (m < 0 || n < 0) throw std::invalid_argument("m, n must be non-negative");
    const int wt = 4 * (m + 1) * n + 2 * m;
    BigReal lhs(1, ev.work_bits());
    if (wt > 0) lhs = ev.mzv(bbb_index(m, n));
    Rat fact(1);
    for (int i = 2; i <= wt + 1; ++i) fact *= i;
    BigReal rhs = BigReal(Rat(1, 2 * n + 1) / fact, ev.work_bits()) * pow_si(ev.pi(), wt);
    return abs(lhs - rhs);
}

BigReal symmetric_real_part_check(int W, const Evaluator& ev) {
    const mpfr_prec_t wp = ev.work_bits();
    GammaCoeffs g = ev.gamma_coeffs(W + 2);
    BigReal mu2 = ev.mu_sq();

    // real part of the closed-path block series, per index
    auto r_sh = [&](const Index& kappa) {
        LWord bw = block_B(xword(kappa));
        std::vector<uint8_t> w;
        if (bw.size() >= 2) w.assign(bw.begin() + 1, bw.end() - 1);
        const int k = static_cast<int>(w.size());
        BigReal sum(0, wp);
        for (int i = 0; i <= k; ++i)
            for (int j = i + 2; j <= k; j += 2) {
                bool all_ones = true;
                for (int t = i; t < j; ++t)
                    if (w[static_cast<size_t>(t)] != 1) all_ones = false;
                if (!all_ones) continue;
                Word01 head(w.begin(), w.begin() + i);
                Word01 tail(w.begin() + j, w.end());
                std::reverse(tail.begin(), tail.end());
                Rat fact(1);
                for (int t = 2; t <= j - i; ++t) fact *= t;
                BigReal term = ev.itint(head) * ev.mu_pow(j - i) * BigReal(Rat(1) / fact, wp) *
                               ev.itint(tail);
                if ((k - j) % 2 != 0) term = -term;
                sum += term;
            }
        return BigReal(2, wp) * sum;
    };

    BigReal worst(0, wp);
    for (int bw = 2; bw <= W + 2; ++bw) {
        for (const auto& idx : compositions(bw)) {
            if (idx.odd_parity() || idx.empty()) continue;
            const auto& e = idx.entries();
            const int d = idx.depth();
            // LHS: Gamma-conjugated coefficient of the real part
            BigReal lhs(0, wp);
            int lead = 0;
            while (lead < d && e[static_cast<size_t>(lead)] == 1) ++lead;
            int trail = 0;
            while (trail < d - lead && e[static_cast<size_t>(d - 1 - trail)] == 1) ++trail;
            for (int p = 0; p <= lead; ++p)
                for (int q = 0; q <= trail && p + q < d; ++q) {
                    Index mid(std::vector<int>(e.begin() + p, e.end() - q));
                    lhs += g.c[static_cast<size_t>(p)] * r_sh(mid) * g.cp[static_cast<size_t>(q)];
                }
            // RHS: mu^2 * sum over odd+odd concatenation splittings
            BigReal rhs(0, wp);
            for (int cutpos = 1; cutpos < d; ++cutpos) {
                Index k1(std::vector<int>(e.begin(), e.begin() + cutpos));
                Index k2(std::vector<int>(e.begin() + cutpos, e.end()));
                if (!k1.odd_parity() || !k2.odd_parity()) continue;
                rhs += ev.L_block_reg(k1) * ev.L_block_reg(k2);
            }
            rhs *= mu2;
            BigReal diff = abs(lhs - rhs);
            if (diff > worst) worst = diff;
        }
    }
    return worst;
}

namespace {

using nlohmann::json;

json pi_const_to_json(const PiConst& c) {
    return json{{"rational", c.rational.get_str()}, {"pi_power", c.pi_power}};
}

json relation_to_json_obj(const Relation& r) {
    json terms = json::array();
    for (const auto& [k, c] : r.combo) {
        terms.push_back(json{{"index", k.entries()}, {"coeff", c.get_str()}});
    }
    return json{{"weight", r.weight},
                {"terms", terms},
                {"constant", pi_const_to_json(r.constant)},
                {"label", r.label},
                {"conjectural", r.conjectural}};
}

Relation relation_from_json_obj(const json& j) {
    Relation r;
    r.weight = j.at("weight").get<int>();
    r.label = j.value("label", "");
    r.conjectural = j.value("conjectural", false);
    for (const auto& t : j.at("terms")) {
        auto ents = t.at("index").get<std::vector<int>>();
        auto q = parse_rational(t.at("coeff").get<std::string>());
        if (!q) throw std::invalid_argument("bad rational in relation");
        r.add(Index(std::move(ents)), *q);
    }
    if (j.contains("constant")) {
        auto q = parse_rational(j.at("constant").at("rational").get<std::string>());
        if (!q) throw std::invalid_argument("bad rational constant");
        r.constant.rational = *q;
        r.constant.pi_power = j.at("constant").at("pi_power").get<int>();
    }
    return r;
}

}  // namespace

std::string relation_to_json(const Relation& r) { return relation_to_json_obj(r).dump(2); }

std::string relations_to_json(const std::vector<Relation>& rs) {
    json arr = json::array();
    for (const auto& r : rs) arr.push_back(relation_to_json_obj(r));
    return arr.dump(2);
}

Relation relation_from_json(const std::string& text) {
    return relation_from_json_obj(json::parse(text));
}

std::vector<Relation> relations_from_json(const std::string& text) {
    json parsed = json::parse(text);
    std::vector<Relation> out;
    if (parsed.is_array()) {
        for (const auto& j : parsed) out.push_back(relation_from_json_obj(j));
    } else {
        out.push_back(relation_from_json_obj(parsed));
    }
    return out;
}

}  // namespace zb
