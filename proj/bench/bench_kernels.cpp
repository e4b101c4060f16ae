// Benchmark comparing the serial reference kernels against their OpenMP
// variants: regularity verification (all point pairs of a scheme) and
// composite-label filling (all pairs of a product point set). Results from
// the two variants are checked for equality before timing is reported, so a
// run doubles as an agreement test at benchmark scale.
//
// The speedup column reports serial/parallel; on a single-core host the
// parallel variant is expected to be at or slightly below 1.0x because of
// thread-team overhead.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ascheme/fixtures.hpp"
#include "ascheme/kernels.hpp"
#include "ascheme/scheme.hpp"

using namespace ascheme;
using Clock = std::chrono::steady_clock;

namespace {

double best_of(int reps, const std::function<void()>& fn) {
    double best = 1e100;
    for (int i = 0; i < reps; ++i) {
        auto t0 = Clock::now();
        fn();
        double s = std::chrono::duration<double>(Clock::now() - t0).count();
        if (s < best) best = s;
    }
    return best;
}

void row(const std::string& name, int size, double serial_s, double parallel_s) {
    std::printf("%-28s %8d %12.3f %12.3f %9.2fx\n", name.c_str(), size,
                serial_s * 1e3, parallel_s * 1e3, serial_s / parallel_s);
}

void bench_verify(const std::string& name, const Scheme& s, int reps) {
    auto constants = kernels::constants_from_witnesses(s.color, s.n, s.r);
    auto a = kernels::verify_constants_serial(s.color, s.n, s.r, constants);
    auto b = kernels::verify_constants_parallel(s.color, s.n, s.r, constants);
    if (a.has_value() || b.has_value()) {
        std::printf("%-28s DISAGREEMENT: a valid table was rejected\n", name.c_str());
        return;
    }
    double serial_s = best_of(reps, [&] {
        (void)kernels::verify_constants_serial(s.color, s.n, s.r, constants);
    });
    double parallel_s = best_of(reps, [&] {
        (void)kernels::verify_constants_parallel(s.color, s.n, s.r, constants);
    });
    row(name, s.n, serial_s, parallel_s);
}

// Synthetic but well-formed label tables: every index stays in range and the
// patterns vary per ordered pair so the inner lookups cannot be hoisted.
kernels::LabelTables synthetic_tables(int m, int n) {
    kernels::LabelTables t;
    t.m = m;
    t.n = n;
    int pairs = m * m;
    t.dom_image_block.resize(pairs);
    t.cod_block.resize(pairs);
    t.qcolor.resize(pairs);
    t.qn.resize(pairs);
    t.rel_index.resize(pairs);
    const int qrels = 11;
    for (int pr = 0; pr < pairs; ++pr) {
        int qb = (pr % 3 == 0) ? n : 1 + pr % 5;
        t.qn[pr] = qb;
        t.dom_image_block[pr].resize(n);
        t.cod_block[pr].resize(n);
        for (int x = 0; x < n; ++x) {
            t.dom_image_block[pr][x] = (x * 7 + pr) % qb;
            t.cod_block[pr][x] = (x * 5 + pr * 3) % qb;
        }
        t.qcolor[pr].resize(static_cast<size_t>(qb) * qb);
        for (size_t i = 0; i < t.qcolor[pr].size(); ++i)
            t.qcolor[pr][i] = static_cast<int>((i * 13 + pr) % qrels);
        t.rel_index[pr].resize(qrels);
        for (int c = 0; c < qrels; ++c) t.rel_index[pr][c] = (pr * 7 + c * 3) % 64;
    }
    return t;
}

void bench_fill(const std::string& name, int m, int n, int reps) {
    kernels::LabelTables t = synthetic_tables(m, n);
    auto a = kernels::fill_labels_serial(t);
    auto b = kernels::fill_labels_parallel(t);
    if (a != b) {
        std::printf("%-28s DISAGREEMENT between variants\n", name.c_str());
        return;
    }
    double serial_s = best_of(reps, [&] { (void)kernels::fill_labels_serial(t); });
    double parallel_s = best_of(reps, [&] { (void)kernels::fill_labels_parallel(t); });
    row(name, m * n, serial_s, parallel_s);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP: not enabled (both variants run serially)\n");
#endif
    std::printf("%-28s %8s %12s %12s %10s\n", "case", "points", "serial ms",
                "parallel ms", "speedup");

    bench_verify("verify: 3-class, 20x20", *fixtures::group_divisible_scheme(20, 20), 3);
    bench_verify("verify: thin cyclic 128", *fixtures::cyclic_scheme(128), 3);
    bench_verify("verify: 3-class, 32x32", *fixtures::group_divisible_scheme(32, 32), 1);

    bench_fill("fill: 16 x 64 composite", 16, 64, 5);
    bench_fill("fill: 32 x 64 composite", 32, 64, 3);
    return 0;
}
