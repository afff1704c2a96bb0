#include "zb/lab.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "zb/walgebra.hpp"

namespace zb {

namespace {

constexpr uint32_t kPrimes[2] = {2147483629u, 2147483587u};

bool is_quasi_hoffman(const Index& k) {
    int evens = 0;
    for (int e : k.entries()) {
        if (e < 2) return false;
        if (e % 2 == 0) ++evens;
    }
    return evens == 1 && !k.empty();
}

// W'_{2,3}: {2,3}-compositions of n not ending in 2 (the empty index for n=0).
std::vector<Index> w23_prime(int n) {
    std::vector<Index> out;
    for (const auto& k : hoffman_indices(n))
        if (k.empty() || k.entries().back() != 2) out.push_back(k);
    return out;
}

}  // namespace

std::vector<XPoly> quasi_hoffman_witnesses(int block_weight) {
    std::vector<XPoly> out;
    for (int wk = 0; wk + 2 <= block_weight; ++wk) {
        for (int wl = 0; wk + wl + 2 <= block_weight; ++wl) {
            int rest = block_weight - wk - wl - 2;
            if (rest % 2 != 0) continue;
            int c = rest / 2;
            for (const auto& k : w23_prime(wk))
                for (const auto& l : w23_prime(wl)) {
                    XPoly lhs = antipode_S(iota_map(l)) * XPoly::mono(XWord{2 + 2 * c}) * iota_map(k);
                    XPoly rhs = theta_map(star(k, l), c);
                    if (c % 2 != 0) rhs *= Rat(-1);
                    XPoly xi = lhs - rhs;
                    if (!xi.is_zero()) out.push_back(std::move(xi));
                }
        }
    }
    return out;
}

KernelReport quasi_hoffman_kernel(int w, const Evaluator* ev, bool parallel) {
    if (w < 2 || w % 2 != 0) throw std::invalid_argument("weight must be even and >= 2");
    const int bw = w + 2;
    KernelReport rep;
    rep.weight = w;

    // column order: non-quasi-Hoffman compositions first, then quasi-Hoffman
    auto comps = compositions(bw);
    std::vector<const Index*> non_qh, qh;
    for (const auto& k : comps) (is_quasi_hoffman(k) ? qh : non_qh).push_back(&k);
    const int ncols = static_cast<int>(comps.size());
    const int nR = static_cast<int>(non_qh.size());
    std::map<XWord, int> col_of;
    {
        int c = 0;
        for (const auto* k : non_qh) col_of.emplace(xword(*k), c++);
        for (const auto* k : qh) col_of.emplace(xword(*k), c++);
    }
    rep.generators = static_cast<int>(qh.size());
    rep.hoffman = static_cast<int>(hoffman_indices(w).size());

    auto xpoly_row = [&](const XPoly& p, uint32_t prime) {
        std::vector<uint32_t> row(static_cast<size_t>(ncols), 0);
        for (const auto& [word, coeff] : p.terms())
            row[static_cast<size_t>(col_of.at(word))] = mod_of_rat(coeff, prime);
        return row;
    };

    auto witnesses = quasi_hoffman_witnesses(bw);

    int span_rank[2] = {0, 0}, kernel_dim[2] = {0, 0};
    bool members[2] = {true, true};
    long products = 0;
    for (int pi = 0; pi < 2; ++pi) {
        const uint32_t prime = kPrimes[pi];
        ModEchelon ech(ncols, prime);
        long count = 0;
        std::vector<std::vector<uint32_t>> block;
        auto flush = [&] {
            if (parallel)
                ech.insert_rows_parallel(block);
            else
                ech.insert_rows_serial(block);
        };
        for (int s = 1; 2 * s <= bw; ++s) {
            auto us = compositions(s);
            auto vs = compositions(bw - s);
            for (size_t i = 0; i < us.size(); ++i) {
                size_t jstart = (2 * s == bw) ? i : 0;
                for (size_t j = jstart; j < vs.size(); ++j) {
                    XPoly prod = block_shuffle(XPoly::mono(xword(us[i])), XPoly::mono(xword(vs[j])));
                    block.push_back(xpoly_row(prod, prime));
                    ++count;
                    if (block.size() >= 256) flush();
                }
            }
        }
        flush();
        span_rank[pi] = ech.rank();
        kernel_dim[pi] = ech.rank() - ech.pivots_below(nR);
        for (const auto& xi : witnesses)
            if (!ech.reduces_to_zero(xpoly_row(xi, prime))) members[pi] = false;
        products = count;
    }
    if (span_rank[0] != span_rank[1] || kernel_dim[0] != kernel_dim[1])
        throw std::runtime_error("modular ranks disagree; enlarge the prime set");
    rep.products = products;
    rep.span_rank = span_rank[0];
    rep.kernel_dim = kernel_dim[0];
    rep.witnesses_in_span = members[0] && members[1];

    // exact rank of the witness family over the quasi-Hoffman coordinates,
    // keeping the ones that grow the rank as the reported kernel basis
    std::map<XWord, int> qh_col;
    {
        int c = 0;
        for (const auto* k : qh) qh_col.emplace(xword(*k), c++);
    }
    RatEchelon rat(static_cast<int>(qh.size()));
    for (const auto& xi : witnesses) {
        std::vector<Rat> row(qh.size(), Rat(0));
        bool ok = true;
        for (const auto& [word, coeff] : xi.terms()) {
            auto it = qh_col.find(word);
            if (it == qh_col.end()) {
                ok = false;  // witness reaches outside X' (cannot happen)
                break;
            }
            row[static_cast<size_t>(it->second)] = coeff;
        }
        if (!ok) continue;
        if (rat.insert(std::move(row))) {
            std::map<Index, Rat> combo;
            for (const auto& [word, coeff] : xi.terms()) combo.emplace(xword_index(word), coeff);
            rep.witness_basis.push_back(std::move(combo));
        }
    }
    rep.witness_rank = rat.rank();

    if (ev) {
        BigReal worst(0, ev->work_bits());
        for (const auto& combo : rep.witness_basis) {
            BigReal acc(0, ev->work_bits());
            for (const auto& [k, c] : combo) acc += BigReal(c, ev->work_bits()) * ev->L_block_sh(k);
            acc = abs(acc);
            if (acc > worst) worst = acc;
        }
        rep.max_witness_residual = worst.str(5);
    }
    return rep;
}

namespace {

std::vector<Index> ooe_family(int w) {
    std::vector<Index> out;
    for (int a = 3; a <= w; a += 2)
        for (int b = 3; a + b <= w; b += 2) {
            int c = w + 2 - a - b;
            if (c >= 2 && c % 2 == 0) out.push_back(Index{a, b, c});
        }
    return out;
}

std::vector<Index> eee_family(int w) {
    std::vector<Index> out;
    for (int a = 2; a <= w; a += 2)
        for (int b = a; a + b <= w; b += 2) {
            int c = w + 2 - a - b;
            if (c >= 2 && c % 2 == 0 && a < c) out.push_back(Index{a, b, c});
        }
    return out;
}

Rat footnote_p(long n) {
    Rat v = Rat(41, 216) * n * n * n * n - Rat(91, 108) * n * n * n + Rat(17, 12) * n * n;
    switch (n % 6) {
        case 0: v += Rat(-11, 3) * n + 9; break;
        case 2: v += Rat(-107, 27) * n + Rat(161, 27); break;
        case 4: v += Rat(-139, 27) * n + Rat(169, 27); break;
        default: throw std::invalid_argument("n must be even");
    }
    return v;
}

Rat fp_poly_p(long a, long b, long c) { return Rat((a - b) * (a + b - 6 * c + 3)); }

}  // namespace

std::vector<Int> degree2_conjecture_vector(int w) {
    auto ooe = ooe_family(w);
    auto eee = eee_family(w);
    std::vector<Int> v;
    v.reserve(ooe.size() + eee.size() + 1);
    for (const auto& k : ooe) {
        long a = k.entries()[0], b = k.entries()[1];
        Rat coeff = Rat(3) * (fp_poly_p(a, 1, b) - Rat(2 * (a == 3 ? 1 : 0)) - Rat(3 * (b == 3 ? 1 : 0)));
        if (coeff.get_den() != 1) throw std::logic_error("non-integral conjecture coefficient");
        v.push_back(coeff.get_num());
    }
    for (const auto& k : eee) {
        long a = k.entries()[0], b = k.entries()[1], c = k.entries()[2];
        Rat coeff;
        if (a == b)
            coeff = Rat(-3) * (fp_poly_p(c, a, a) - Rat(3 * (a == 2 ? 1 : 0)));
        else
            coeff = Rat(-3) * fp_poly_p(a, b, c);
        if (coeff.get_den() != 1) throw std::logic_error("non-integral conjecture coefficient");
        v.push_back(coeff.get_num());
    }
    Rat pn = footnote_p(w + 2);
    if (pn.get_den() != 1) throw std::logic_error("footnote polynomial must be integral");
    v.push_back(-pn.get_num());
    return v;
}

Degree2Report degree2_experiment(int w, int digits, const Evaluator& ev) {
    if (w < 6 || w % 2 != 0) throw std::invalid_argument("weight must be even and >= 6");
    Degree2Report rep;
    rep.weight = w;
    rep.digits = digits;
    auto ooe = ooe_family(w);
    auto eee = eee_family(w);
    rep.ooe_count = static_cast<int>(ooe.size());
    rep.eee_count = static_cast<int>(eee.size());
    rep.generators = ooe;
    rep.generators.insert(rep.generators.end(), eee.begin(), eee.end());
    rep.generators.push_back(Index{w + 2});

    std::vector<BigReal> values = ev.L_block_sh_batch(rep.generators);
    rep.relations = integer_relations(values, digits, rep.eee_count + 4);

    // reduced form of conjecture part i over the generator family
    std::vector<Int> conj = degree2_conjecture_vector(w);
    BigReal resid(0, ev.work_bits());
    for (size_t i = 0; i < conj.size(); ++i)
        resid += BigReal(conj[i], ev.work_bits()) * values[i];
    rep.conjecture_i_norm = norm_to_scientific([&] {
        Int s = 0;
        for (const auto& e : conj) s += e * e;
        return s;
    }());

    // membership of the conjecture vector in the lattice of found relations
    if (!rep.relations.empty()) {
        IntMatrix found;
        for (const auto& r : rep.relations) found.push_back(r.coeffs);
        IntMatrix with = found;
        with.push_back(conj);
        rep.conjecture_i_in_lattice = (hermite_normal_form(found) == hermite_normal_form(with));
    }

    nlohmann::json j;
    j["weight"] = w;
    j["digits"] = digits;
    j["delta"] = "99/100";
    j["ooe_count"] = rep.ooe_count;
    j["eee_count"] = rep.eee_count;
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : rep.generators) gens.push_back(g.entries());
    j["generators"] = gens;
    nlohmann::json rels = nlohmann::json::array();
    for (const auto& r : rep.relations) {
        nlohmann::json e;
        e["norm"] = r.norm_str;
        e["residual"] = r.residual;
        std::vector<std::string> coeffs;
        for (const auto& c : r.coeffs) coeffs.push_back(c.get_str());
        e["vector"] = coeffs;
        rels.push_back(e);
    }
    j["relations"] = rels;
    j["conjecture_i"] = {{"in_lattice", rep.conjecture_i_in_lattice},
                         {"norm", rep.conjecture_i_norm},
                         {"residual", abs(resid).str(5)}};
    rep.json = j.dump(2);
    return rep;
}

namespace {

void check_setseq(int d, const SetSeq& s) {
    std::set<int> seen;
    for (const auto& part : s) {
        if (part.empty() || part.size() % 2 == 0)
            throw std::invalid_argument("parts must have odd cardinality");
        for (int x : part) {
            if (x < 1 || x > d || !seen.insert(x).second)
                throw std::invalid_argument("parts must partition {1..d}");
        }
    }
    if (static_cast<int>(seen.size()) != d)
        throw std::invalid_argument("parts must partition {1..d}");
}

std::vector<int> sorted_union(const std::vector<std::vector<int>>& parts) {
    std::vector<int> u;
    for (const auto& p : parts) u.insert(u.end(), p.begin(), p.end());
    std::sort(u.begin(), u.end());
    return u;
}

}  // namespace

SetSeqCombo setseq_shuffle(const SetSeq& a, const SetSeq& b) {
    const int l = static_cast<int>(a.size());
    const int m = static_cast<int>(b.size());
    SetSeqCombo out;
    SetSeq cur;
    auto rec = [&](auto&& self, int p, int q) -> void {
        if (p == l && q == m) {
            int n = static_cast<int>(cur.size());
            int sign = ((l + m - n) / 2) % 2 == 0 ? 1 : -1;
            auto [it, inserted] = out.try_emplace(cur, Rat(sign));
            if (!inserted) {
                it->second += sign;
                if (it->second == 0) out.erase(it);
            }
            return;
        }
        for (int df = 0; p + df <= l; ++df)
            for (int dg = (df >= 1 ? df - 1 : 1 - df); dg <= df + 1; dg += 2) {
                if (dg < 0 || q + dg > m) continue;
                if (df == 0 && dg == 0) continue;
                std::vector<std::vector<int>> parts;
                for (int t = 0; t < df; ++t) parts.push_back(a[static_cast<size_t>(p + t)]);
                for (int t = 0; t < dg; ++t) parts.push_back(b[static_cast<size_t>(q + t)]);
                cur.push_back(sorted_union(parts));
                self(self, p + df, q + dg);
                cur.pop_back();
            }
    };
    rec(rec, 0, 0);
    return out;
}

BigReal eval_Md(const SetSeqCombo& combo, const std::vector<int>& l, const Evaluator& ev) {
    BigReal acc(0, ev.work_bits());
    for (const auto& [seq, coeff] : combo) {
        std::vector<int> entries;
        entries.reserve(seq.size());
        for (const auto& part : seq) {
            int s = 0;
            for (int x : part) s += l[static_cast<size_t>(x - 1)];
            entries.push_back(s);
        }
        Index k(std::move(entries));
        if (!k.odd_parity()) continue;  // I_bl regarded as 0 for even parity
        acc += BigReal(coeff, ev.work_bits()) * ev.L_block_sh(k);
    }
    return abs(acc);
}

bool formal_ker_Md_check(int d, const SetSeqCombo& combo, int samples, unsigned long seed,
                         const Evaluator& ev, int tol10) {
    for (const auto& [seq, coeff] : combo) {
        (void)coeff;
        check_setseq(d, seq);
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(2, 4);
    BigReal tol = BigReal::pow10(-tol10, ev.work_bits());
    for (int s = 0; s < samples; ++s) {
        std::vector<int> l(static_cast<size_t>(d));
        for (auto& x : l) x = entry(rng);
        if (eval_Md(combo, l, ev) > tol) return false;
    }
    return true;
}

SetSeqCombo cyclic_kernel_element(int d) {
    SetSeqCombo out;
    for (int i = 0; i < d; ++i) {
        SetSeq s;
        for (int j = 0; j < d; ++j) s.push_back({(i + j) % d + 1});
        auto [it, inserted] = out.try_emplace(std::move(s), Rat(1));
        if (!inserted) it->second += 1;
    }
    if (d % 2 == 1) {
        std::vector<int> all(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) all[static_cast<size_t>(i)] = i + 1;
        SetSeq whole{all};
        auto [it, inserted] = out.try_emplace(std::move(whole), Rat(-1));
        if (!inserted) {
            it->second -= 1;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

SetSeqCombo alternating_kernel_element(int n) {
    SetSeqCombo out;
    std::vector<int> perm(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) perm[static_cast<size_t>(i)] = i + 1;
    do {
        int inv = 0;
        for (size_t i = 0; i < perm.size(); ++i)
            for (size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inv;
        SetSeq s;
        for (int i = 0; i <= n; ++i) {
            s.push_back({perm[static_cast<size_t>(i)]});
            if (i < n) s.push_back({n + 2 + i});
        }
        Rat c(inv % 2 == 0 ? 1 : -1);
        auto [it, inserted] = out.try_emplace(std::move(s), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace zb
