// Serial vs OpenMP comparison for the two data-parallel kernels: batch
// evaluation of block integrals and mod-p row reduction.
#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>

#include "zb/lab.hpp"
#include "zb/linalg.hpp"
#include "zb/numerics.hpp"
#include "zb/xalgebra.hpp"

namespace {

using namespace zb;

std::vector<Index> eval_workload() {
    std::vector<Index> out;
    for (const auto& k : compositions(11))
        if (k.odd_parity()) out.push_back(k);
    return out;
}

void bench_batch_eval_serial(benchmark::State& state) {
    auto ks = eval_workload();
    for (auto _ : state) {
        Evaluator ev(192);  // fresh evaluator: no cache reuse across iterations
        auto vs = ev.L_block_sh_batch_serial(ks);
        benchmark::DoNotOptimize(vs);
    }
}

void bench_batch_eval_parallel(benchmark::State& state) {
    auto ks = eval_workload();
    for (auto _ : state) {
        Evaluator ev(192);
        auto vs = ev.L_block_sh_batch(ks);
        benchmark::DoNotOptimize(vs);
    }
}

std::vector<std::vector<uint32_t>> elimination_rows(uint32_t p) {
    const int bw = 12;
    auto comps = compositions(bw);
    std::map<XWord, int> col_of;
    int c = 0;
    for (const auto& k : comps) col_of.emplace(xword(k), c++);
    std::vector<std::vector<uint32_t>> rows;
    for (int s = 1; 2 * s <= bw; ++s)
        for (const auto& u : compositions(s))
            for (const auto& v : compositions(bw - s)) {
                XPoly prod = block_shuffle(XPoly::mono(xword(u)), XPoly::mono(xword(v)));
                std::vector<uint32_t> row(comps.size(), 0);
                for (const auto& [word, coeff] : prod.terms())
                    row[static_cast<size_t>(col_of.at(word))] = mod_of_rat(coeff, p);
                rows.push_back(std::move(row));
            }
    return rows;
}

void bench_elimination_serial(benchmark::State& state) {
    const uint32_t p = 2147483629u;
    auto rows = elimination_rows(p);
    for (auto _ : state) {
        auto work = rows;
        ModEchelon ech(static_cast<int>(rows[0].size()), p);
        ech.insert_rows_serial(work);
        benchmark::DoNotOptimize(ech.rank());
    }
}

void bench_elimination_parallel(benchmark::State& state) {
    const uint32_t p = 2147483629u;
    auto rows = elimination_rows(p);
    for (auto _ : state) {
        auto work = rows;
        ModEchelon ech(static_cast<int>(rows[0].size()), p);
        ech.insert_rows_parallel(work);
        benchmark::DoNotOptimize(ech.rank());
    }
}

BENCHMARK(bench_batch_eval_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_batch_eval_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_elimination_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_elimination_parallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
