#include <omp.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "zb/differential.hpp"
#include "zb/indices.hpp"
#include "zb/lab.hpp"
#include "zb/lll.hpp"
#include "zb/numerics.hpp"
#include "zb/relations.hpp"
#include "zb/walgebra.hpp"
#include "zb/xalgebra.hpp"

namespace {

using namespace zb;

struct Options {
    int digits = 0;
    long prec_bits = 0;
    std::string format = "text";
    int jobs = 0;
    unsigned long seed = 20240915;
    bool heavy = false;
};

mpfr_prec_t resolve_prec(const Options& o) {
    if (o.prec_bits > 0) return static_cast<mpfr_prec_t>(o.prec_bits);
    if (o.digits > 0) return prec_for_digits(o.digits);
    return 256;
}

int digits_out(const Options& o, mpfr_prec_t prec) {
    if (o.digits > 0) return o.digits;
    return static_cast<int>(static_cast<double>(prec) * 0.30102999566398) - 10;
}

struct VerifyResult {
    bool ok = true;
    bool conjectural_only_failures = true;
    std::ostringstream out;

    void line(bool pass, const std::string& what, const std::string& detail, bool conj = false) {
        out << (pass ? "ok   " : "FAIL ") << what;
        if (!detail.empty()) out << "  " << detail;
        if (conj) out << "  [conjectural]";
        out << "\n";
        if (!pass) {
            ok = false;
            if (!conj) conjectural_only_failures = false;
        }
    }
};

std::vector<XWord> random_xwords(std::mt19937_64& rng, int count, int max_weight, bool even,
                                 bool exclude_all_ones, bool allow_ones = true) {
    std::vector<XWord> out;
    std::uniform_int_distribution<int> wd(1, max_weight);
    while (static_cast<int>(out.size()) < count) {
        int weight = wd(rng);
        XWord w;
        int rest = weight;
        while (rest > 0) {
            std::uniform_int_distribution<int> ed(allow_ones ? 1 : 2, std::min(rest, 6));
            if (!allow_ones && rest < 2) break;
            int e = ed(rng);
            w.push_back(e);
            rest -= e;
        }
        if (w.empty() || rest != 0) continue;
        if (xword_odd_parity(w) == even) continue;
        if (exclude_all_ones && xword_all_ones(w)) continue;
        out.push_back(std::move(w));
    }
    return out;
}

BigReal tolerance(const Evaluator& ev, int digits10) {
    return BigReal::pow10(-digits10, ev.work_bits());
}

int run_verify(const std::string& family, const Options& opt, int weight, int count, int m_arg,
               int n_arg) {
    mpfr_prec_t prec = resolve_prec(opt);
    Evaluator ev(prec);
    std::mt19937_64 rng(opt.seed);
    VerifyResult res;
    int told = std::max(10, digits_out(opt, prec) - 10);
    BigReal tol = tolerance(ev, told);

    if (family == "compat") {
        int W = weight > 0 ? weight : 8;
        long checked = 0, bad = 0;
        for (int uw = 0; uw <= W; ++uw)
            for (const auto& u : compositions(uw))
                for (int vw = 1; uw + vw <= W; ++vw)
                    for (const auto& v : compositions(vw)) {
                        APoly lhs = diamond(XPoly::mono(xword(u)), block_B(XPoly::mono(xword(v))));
                        APoly rhs = block_B(block_shuffle(XPoly::mono(xword(u)), XPoly::mono(xword(v))));
                        ++checked;
                        if (!(lhs == rhs)) ++bad;
                    }
        res.line(bad == 0, "compat exhaustive (total weight <= " + std::to_string(W) + ")",
                 std::to_string(checked) + " pairs");
    } else if (family == "derivative") {
        int K = weight > 0 ? weight : 4;
        long checked = 0, bad = 0;
        for (int m = 0; m + 1 <= K; ++m)
            for (int n = 1; m + n <= K; ++n)
                for (const auto& bidx : compositions(m)) {
                    XWord b = xword(bidx);
                    bool entries_ok = true;
                    for (int e : b)
                        if (e > 3) entries_ok = false;
                    if (!entries_ok || static_cast<int>(b.size()) != m) continue;
                    std::vector<Letter> alphabet{kZero, kOne};
                    for (int i = 1; i <= n; ++i) {
                        alphabet.push_back(sym(i));
                        alphabet.push_back(bar_sym(i));
                    }
                    for (Letter a : alphabet)
                        for (Letter bb : alphabet) {
                            ++checked;
                            if (!verify_alg_der_formula(std::vector<int>(b.begin(), b.end()), n,
                                                        DeltaSpec{a, bb}))
                                ++bad;
                        }
                }
        res.line(bad == 0, "algebraic differential formula", std::to_string(checked) + " cases");
    } else if (family == "bsh1") {
        int W = weight > 0 ? weight : 12;
        int C = count > 0 ? count : 40;
        auto us = random_xwords(rng, C, W - 1, /*even=*/true, /*exclude_all_ones=*/true);
        BigReal worst(0, ev.work_bits());
        for (const auto& u : us) {
            auto vs = random_xwords(rng, 1, W - xword_weight(u), /*even=*/false, false);
            XPoly prod = block_shuffle(XPoly::mono(u), XPoly::mono(vs[0]));
            BigReal acc(0, ev.work_bits());
            for (const auto& [w, c] : prod.terms())
                acc += BigReal(c, ev.work_bits()) * ev.L_block_sh(xword_index(w));
            acc = abs(acc);
            if (acc > worst) worst = acc;
        }
        res.line(worst <= tol, "block shuffle identity, first form", "max residual " + worst.str(5));
    } else if (family == "bsh2") {
        int W = weight > 0 ? weight : 10;
        int C = count > 0 ? count : 30;
        BigReal worst(0, ev.work_bits());
        for (int i = 0; i < C; ++i) {
            auto us = random_xwords(rng, 1, W - 1, /*even=*/true, /*exclude_all_ones=*/false);
            auto vs = random_xwords(rng, 1, W - xword_weight(us[0]), /*even=*/false, false);
            Relation r = block_shuffle_relation(us[0], vs[0]);
            BigReal acc = verify(r, ev);
            if (acc > worst) worst = acc;
        }
        res.line(worst <= tol, "block shuffle identity, second form", "max residual " + worst.str(5));
    } else if (family == "cyclic") {
        int W = weight > 0 ? weight : 10;
        int C = count > 0 ? count : 30;
        BigReal worst(0, ev.work_bits());
        for (int i = 0; i < C; ++i) {
            std::uniform_int_distribution<int> dd(1, 5), ee(1, 4);
            std::vector<int> l;
            do {
                l.assign(static_cast<size_t>(dd(rng)), 1);
                int s = 0;
                for (auto& x : l) {
                    x = ee(rng);
                    s += x;
                }
                while (s > W) {
                    s -= l.back();
                    l.pop_back();
                }
                if (l.empty()) continue;
            } while (!Index(std::vector<int>(l)).odd_parity());
            BigReal r1 = verify(cyclic_insertion(l), ev);
            BigReal r2 = cyclic_insertion_Ar_residual(l, ev);
            if (r1 > worst) worst = r1;
            if (r2 > worst) worst = r2;
        }
        res.line(worst <= tol, "full cyclic insertion", "max residual " + worst.str(5));
    } else if (family == "altsum") {
        int C = count > 0 ? count : 10;
        BigReal worst(0, ev.work_bits());
        std::uniform_int_distribution<int> nd(1, 2), ad(2, 4);
        for (int i = 0; i < C; ++i) {
            int n = nd(rng);
            std::vector<int> a(static_cast<size_t>(n) + 1), b(static_cast<size_t>(n));
            long total;
            do {
                total = 0;
                for (auto& x : a) {
                    x = ad(rng);
                    total += x;
                }
                for (auto& x : b) {
                    x = ad(rng);
                    total += x;
                }
            } while (total % 2 != 0);
            BigReal r = verify(alternating_sum_relation(a, b), ev);
            if (r > worst) worst = r;
        }
        res.line(worst <= tol, "alternating block sums", "max residual " + worst.str(5));
    } else if (family == "star") {
        int W = weight > 0 ? weight : 8;
        BigReal worst(0, ev.work_bits());
        bool integral = true;
        long pairs = 0;
        for (int wk = 0; wk <= W; ++wk)
            for (const auto& k : hoffman_indices(wk))
                for (int wl = 0; wk + wl <= W; ++wl)
                    for (const auto& l : hoffman_indices(wl)) {
                        for (const auto& [idx, c] : star(k, l)) {
                            (void)idx;
                            if (c.get_den() != 1 || c < 0) integral = false;
                        }
                        BigReal r = verify(hoffman_star_expansion(k, l), ev);
                        if (r > worst) worst = r;
                        ++pairs;
                    }
        res.line(worst <= tol && integral, "Hoffman star expansion",
                 std::to_string(pairs) + " pairs, max residual " + worst.str(5));
    } else if (family == "dop") {
        int C = count > 0 ? count : 30;
        BigReal worst(0, ev.work_bits());
        std::uniform_int_distribution<int> len(1, 8), bit(0, 1);
        for (int i = 0; i < C; ++i) {
            Word01 w(static_cast<size_t>(len(rng)));
            for (auto& x : w) x = static_cast<uint8_t>(bit(rng));
            BigReal r = d_operator_lemma_residual(w, ev);
            if (r > worst) worst = r;
        }
        res.line(worst <= tol, "D-operator lemma", "max residual " + worst.str(5));
    } else if (family == "symreal") {
        int W = weight > 0 ? weight : 6;
        BigReal r = symmetric_real_part_check(W, ev);
        res.line(r <= tol, "real part of the closed-path identity (weight <= " + std::to_string(W) + ")",
                 "max residual " + r.str(5));
    } else if (family == "bbb") {
        int m = m_arg >= 0 ? m_arg : 1;
        int n = n_arg >= 0 ? n_arg : 1;
        BigReal r = bbb_residual(m, n, ev);
        res.line(r <= tol, "BBB evaluation m=" + std::to_string(m) + " n=" + std::to_string(n),
                 "residual " + r.str(5));
    } else {
        std::cerr << "unknown verify family: " << family << "\n";
        return 1;
    }
    std::cout << res.out.str();
    if (res.ok) return 0;
    return res.conjectural_only_failures ? 0 : 2;
}

int run_relations(const std::string& family, const Options& opt, int weight) {
    std::vector<Relation> rels;
    std::mt19937_64 rng(opt.seed);
    if (family == "degree2") {
        rels = degree2_relations(weight > 0 ? weight : 8);
    } else if (family == "cyclic") {
        int W = weight > 0 ? weight : 8;
        for (const auto& k : compositions(W))
            if (k.odd_parity()) rels.push_back(cyclic_insertion(k.entries()));
    } else if (family == "star") {
        int W = weight > 0 ? weight : 6;
        for (int wk = 2; wk <= W; ++wk)
            for (const auto& k : hoffman_indices(wk))
                for (int wl = 0; wk + wl <= W; ++wl)
                    for (const auto& l : hoffman_indices(wl)) rels.push_back(hoffman_star_expansion(k, l));
    } else if (family == "bsh") {
        int W = weight > 0 ? weight : 8;
        for (int uw = 2; uw < W; uw += 2)
            for (const auto& u : compositions(uw)) {
                if (u.odd_parity()) continue;
                for (const auto& v : compositions(W - uw))
                    if (v.odd_parity()) rels.push_back(block_shuffle_relation(xword(u), xword(v)));
            }
    } else {
        std::cerr << "unknown relations family: " << family << "\n";
        return 1;
    }
    std::cout << relations_to_json(rels) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"block shuffle identities for multiple zeta values"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--digits", opt.digits, "decimal digits of working precision");
    app.add_option("--prec-bits", opt.prec_bits, "binary working precision");
    app.add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", opt.jobs, "parallel evaluation threads (0 = default)");
    app.add_option("--seed", opt.seed, "seed for randomized selections");
    app.add_flag("--heavy", opt.heavy, "allow long-running parameter ranges");

    // product
    auto* prod = app.add_subcommand("product", "block shuffle, shuffle, diamond, f_c and star products");
    bool p_block = false, p_shuffle = false, p_diamond = false, p_star = false;
    int p_f = 0;
    std::vector<std::string> p_args;
    prod->add_flag("--block", p_block, "block shuffle of two x-polynomials");
    prod->add_flag("--shuffle", p_shuffle, "plain shuffle of two {0,1} words");
    prod->add_flag("--diamond", p_diamond, "diamond product of an x-polynomial and a word");
    prod->add_option("--f", p_f, "f_c product with the given c >= 1");
    prod->add_flag("--star", p_star, "star product of two {2,3}-indices");
    prod->add_option("operands", p_args, "two operands")->expected(2);

    // convert
    auto* conv = app.add_subcommand("convert", "index/word/block conversions");
    std::string c_op, c_index, c_word, c_z;
    conv->add_option("op", c_op, "one of: word, index, dual, blocks, B, z")->required();
    conv->add_option("--index", c_index, "index like [1,2]");
    conv->add_option("--word", c_word, "word over 01");
    conv->add_option("--z", c_z, "comma-separated Z-notation arguments");

    // eval
    auto* ev_cmd = app.add_subcommand("eval", "numeric evaluation");
    std::string e_index, e_word, e_block, e_blockreg;
    int e_zeta = 0;
    ev_cmd->add_option("--index", e_index, "zeta of an admissible index");
    ev_cmd->add_option("--word", e_word, "regularized iterated integral of a 01 word");
    ev_cmd->add_option("--block", e_block, "block integral L_B^sh of an odd index");
    ev_cmd->add_option("--block-reg", e_blockreg, "block-regularized L_B of an odd index");
    ev_cmd->add_option("--zeta", e_zeta, "Riemann zeta at an integer >= 2");

    // verify
    auto* ver = app.add_subcommand("verify", "verify an identity family");
    std::string v_family, v_from_file;
    int v_weight = 0, v_count = 0, v_m = -1, v_n = -1;
    ver->add_option("family", v_family,
                    "bsh1|bsh2|cyclic|altsum|star|dop|symreal|derivative|compat|bbb");
    ver->add_option("--weight", v_weight, "weight bound");
    ver->add_option("--count", v_count, "number of random instances");
    ver->add_option("--m", v_m, "BBB parameter m");
    ver->add_option("--n", v_n, "BBB parameter n");
    ver->add_option("--from-file", v_from_file, "verify relations from a JSON file");

    // relations
    auto* rel = app.add_subcommand("relations", "emit relation families as JSON");
    std::string r_family;
    int r_weight = 0;
    rel->add_option("family", r_family, "degree2|cyclic|star|bsh")->required();
    rel->add_option("--weight", r_weight, "MZV weight");

    // lab
    auto* lab = app.add_subcommand("lab", "kernel computations and LLL experiments");
    lab->require_subcommand(1);
    auto* lab_kernel = lab->add_subcommand("kernel", "quasi-Hoffman kernel at even weight");
    int lk_weight = 6;
    lab_kernel->add_option("--weight", lk_weight, "even MZV weight")->required();
    auto* lab_lll = lab->add_subcommand("lll", "LLL-reduce an integer matrix");
    std::string ll_file;
    lab_lll->add_option("--matrix", ll_file, "JSON file with integer rows")->required();
    auto* lab_deg2 = lab->add_subcommand("degree2", "block-degree-two relation search");
    int d2_weight = 10, d2_digits = 0;
    lab_deg2->add_option("--weight", d2_weight, "even MZV weight >= 6")->required();
    lab_deg2->add_option("--exp-digits", d2_digits, "digits used in the lattice scaling");
    auto* lab_kermd = lab->add_subcommand("kerMd", "numeric probes of ker M_d elements");
    int md_d = 3, md_samples = 5;
    lab_kermd->add_option("--d", md_d, "number of slots")->required();
    lab_kermd->add_option("--samples", md_samples, "sample points");

    CLI11_PARSE(app, argc, argv);

    if (opt.jobs > 0) omp_set_num_threads(opt.jobs);

    try {
        if (prod->parsed()) {
            int kinds = (p_block ? 1 : 0) + (p_shuffle ? 1 : 0) + (p_diamond ? 1 : 0) +
                        (p_star ? 1 : 0) + (p_f > 0 ? 1 : 0);
            if (kinds != 1) {
                std::cerr << "choose exactly one of --block/--shuffle/--diamond/--star/--f\n";
                return 1;
            }
            if (p_block || p_f > 0) {
                auto u = parse_xpoly(p_args[0]);
                auto v = parse_xpoly(p_args[1]);
                if (!u || !v) {
                    std::cerr << "malformed x-polynomial operand\n";
                    return 1;
                }
                XPoly r = p_block ? block_shuffle(*u, *v) : f_c(p_f, *u, *v);
                std::cout << to_string(r) << "\n";
            } else if (p_shuffle) {
                auto u = parse_word01(p_args[0]);
                auto v = parse_word01(p_args[1]);
                if (!u || !v) {
                    std::cerr << "malformed 01 word\n";
                    return 1;
                }
                std::cout << to_string(shuffle(APoly::mono(lword(*u)), APoly::mono(lword(*v))))
                          << "\n";
            } else if (p_diamond) {
                auto u = parse_xpoly(p_args[0]);
                auto v = parse_word01(p_args[1]);
                if (!u || !v || v->empty()) {
                    std::cerr << "diamond needs an x-polynomial and a non-empty 01 word\n";
                    return 1;
                }
                std::cout << to_string(diamond(*u, APoly::mono(lword(*v)))) << "\n";
            } else {
                auto k = parse_index(p_args[0]);
                auto l = parse_index(p_args[1]);
                if (!k || !l) {
                    std::cerr << "malformed index operand\n";
                    return 1;
                }
                auto combo = star(*k, *l);
                bool first = true;
                for (const auto& [idx, c] : combo) {
                    if (!first) std::cout << " + ";
                    first = false;
                    if (c != 1) std::cout << c.get_str() << " ";
                    std::cout << to_string(idx);
                }
                std::cout << "\n";
            }
            return 0;
        }

        if (conv->parsed()) {
            if (c_op == "word") {
                auto k = parse_index(c_index);
                if (!k || k->empty()) {
                    std::cerr << "need a non-empty --index\n";
                    return 1;
                }
                auto [w, sign] = mzv_word(*k);
                std::cout << to_string(w) << " sign " << (sign > 0 ? "+1" : "-1") << "\n";
            } else if (c_op == "index") {
                auto w = parse_word01(c_word);
                if (!w) {
                    std::cerr << "need --word over 01\n";
                    return 1;
                }
                std::cout << to_string(word_to_mzv_index(*w)) << "\n";
            } else if (c_op == "dual") {
                auto k = parse_index(c_index);
                if (!k) {
                    std::cerr << "need --index\n";
                    return 1;
                }
                std::cout << to_string(dual_index(*k)) << "\n";
            } else if (c_op == "blocks") {
                auto w = parse_word01(c_word);
                if (!w) {
                    std::cerr << "need --word over 01\n";
                    return 1;
                }
                std::cout << to_string(block_decompose(*w)) << "\n";
            } else if (c_op == "B") {
                auto k = parse_index(c_index);
                if (!k || k->empty()) {
                    std::cerr << "need a non-empty --index\n";
                    return 1;
                }
                std::cout << to_string(block_B(xword(*k))) << "\n";
            } else if (c_op == "z") {
                std::vector<int> ms;
                std::stringstream ss(c_z);
                std::string tok;
                while (std::getline(ss, tok, ',')) ms.push_back(std::stoi(tok));
                auto [idx, sign] = z_to_block(ms);
                std::cout << to_string(idx) << " sign " << (sign > 0 ? "+1" : "-1") << "\n";
            } else {
                std::cerr << "unknown conversion\n";
                return 1;
            }
            return 0;
        }

        if (ev_cmd->parsed()) {
            mpfr_prec_t prec = resolve_prec(opt);
            Evaluator evx(prec);
            int nd = digits_out(opt, prec);
            BigReal v(evx.work_bits());
            if (!e_index.empty()) {
                auto k = parse_index(e_index);
                if (!k) {
                    std::cerr << "malformed index\n";
                    return 1;
                }
                v = evx.mzv(*k);
            } else if (!e_word.empty()) {
                auto w = parse_word01(e_word);
                if (!w) {
                    std::cerr << "malformed word\n";
                    return 1;
                }
                v = evx.itint(*w);
            } else if (!e_block.empty()) {
                auto k = parse_index(e_block);
                if (!k) {
                    std::cerr << "malformed index\n";
                    return 1;
                }
                v = evx.L_block_sh(*k);
            } else if (!e_blockreg.empty()) {
                auto k = parse_index(e_blockreg);
                if (!k) {
                    std::cerr << "malformed index\n";
                    return 1;
                }
                v = evx.L_block_reg(*k);
            } else if (e_zeta >= 2) {
                v = evx.zeta(e_zeta);
            } else {
                std::cerr << "nothing to evaluate\n";
                return 1;
            }
            if (opt.format == "json") {
                nlohmann::json j{{"value", v.str(nd)}, {"digits", nd}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << v.str(nd) << "\n";
            }
            return 0;
        }

        if (ver->parsed()) {
            if (!v_from_file.empty()) {
                std::ifstream in(v_from_file);
                if (!in) {
                    std::cerr << "cannot open " << v_from_file << "\n";
                    return 1;
                }
                std::stringstream buf;
                buf << in.rdbuf();
                auto rels = relations_from_json(buf.str());
                mpfr_prec_t prec = resolve_prec(opt);
                Evaluator evx(prec);
                int told = std::max(10, digits_out(opt, prec) - 10);
                BigReal tol = tolerance(evx, told);
                bool all_ok = true, hard_fail = false;
                for (const auto& r : rels) {
                    BigReal resid = verify(r, evx);
                    bool pass = resid <= tol;
                    std::cout << (pass ? "ok   " : "FAIL ") << r.label << "  residual "
                              << resid.str(5) << (r.conjectural ? "  [conjectural]" : "") << "\n";
                    if (!pass) {
                        all_ok = false;
                        if (!r.conjectural) hard_fail = true;
                    }
                }
                (void)all_ok;
                return hard_fail ? 2 : 0;
            }
            if (v_family.empty()) {
                std::cerr << "need a family or --from-file\n";
                return 1;
            }
            return run_verify(v_family, opt, v_weight, v_count, v_m, v_n);
        }

        if (rel->parsed()) return run_relations(r_family, opt, r_weight);

        if (lab->parsed()) {
            if (lab_kernel->parsed()) {
                mpfr_prec_t prec = resolve_prec(opt);
                Evaluator evx(prec);
                KernelReport rep = quasi_hoffman_kernel(lk_weight, &evx);
                nlohmann::json j{{"weight", rep.weight},
                                 {"generators", rep.generators},
                                 {"hoffman", rep.hoffman},
                                 {"products", rep.products},
                                 {"span_rank", rep.span_rank},
                                 {"kernel_dim", rep.kernel_dim},
                                 {"witness_rank", rep.witness_rank},
                                 {"witnesses_in_span", rep.witnesses_in_span},
                                 {"max_witness_residual", rep.max_witness_residual}};
                std::cout << j.dump(2) << "\n";
                bool ok = rep.kernel_dim == rep.generators - rep.hoffman &&
                          rep.witness_rank == rep.kernel_dim && rep.witnesses_in_span;
                return ok ? 0 : 2;
            }
            if (lab_lll->parsed()) {
                std::ifstream in(ll_file);
                if (!in) {
                    std::cerr << "cannot open " << ll_file << "\n";
                    return 1;
                }
                nlohmann::json j = nlohmann::json::parse(in);
                IntMatrix m;
                for (const auto& row : j) {
                    std::vector<Int> r;
                    for (const auto& e : row) {
                        if (e.is_number_integer())
                            r.emplace_back(static_cast<long>(e.get<long long>()));
                        else
                            r.emplace_back(e.get<std::string>());
                    }
                    m.push_back(std::move(r));
                }
                IntMatrix red = lll_reduce(m);
                nlohmann::json out = nlohmann::json::array();
                for (const auto& row : red) {
                    nlohmann::json jr = nlohmann::json::array();
                    for (const auto& e : row) jr.push_back(e.get_str());
                    out.push_back(jr);
                }
                std::cout << out.dump(2) << "\n";
                return 0;
            }
            if (lab_deg2->parsed()) {
                if (d2_weight > 16 && !opt.heavy) {
                    std::cerr << "weights above 16 need --heavy\n";
                    return 1;
                }
                int digits = d2_digits > 0 ? d2_digits : 30 + 2 * d2_weight;
                mpfr_prec_t prec = prec_for_digits(digits + 25);
                if (opt.prec_bits > 0 || opt.digits > 0) prec = std::max(prec, resolve_prec(opt));
                Evaluator evx(prec);
                Degree2Report rep = degree2_experiment(d2_weight, digits, evx);
                std::cout << rep.json << "\n";
                return rep.conjecture_i_in_lattice ? 0 : 2;
            }
            if (lab_kermd->parsed()) {
                mpfr_prec_t prec = resolve_prec(opt);
                Evaluator evx(prec);
                int told = std::max(10, digits_out(opt, prec) - 10);
                bool ok = true;
                SetSeqCombo cyc = cyclic_kernel_element(md_d);
                ok = formal_ker_Md_check(md_d, cyc, md_samples, opt.seed, evx, told) && ok;
                std::cout << (ok ? "ok   " : "FAIL ") << "cyclic element in ker M_" << md_d << "\n";
                if (md_d % 2 == 1 && md_d >= 3) {
                    SetSeqCombo alt = alternating_kernel_element((md_d - 1) / 2);
                    bool aok = formal_ker_Md_check(md_d, alt, md_samples, opt.seed + 1, evx, told);
                    std::cout << (aok ? "ok   " : "FAIL ") << "alternating element in ker M_" << md_d
                              << "\n";
                    ok = ok && aok;
                }
                // products lie in the kernel as well
                if (md_d >= 2) {
                    SetSeq a{{1}}, b{{2}};
                    for (int i = 3; i <= md_d; ++i) b.push_back({i});
                    bool pok = formal_ker_Md_check(md_d, setseq_shuffle(a, b), md_samples,
                                                   opt.seed + 2, evx, told);
                    std::cout << (pok ? "ok   " : "FAIL ") << "hat-shuffle product in ker M_" << md_d
                              << "\n";
                    ok = ok && pok;
                }
                return ok ? 0 : 2;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
