// Benchmark comparing the serial reference elimination with the production
// OpenMP kernel, on synthetic sparse matrices and on the syzygy-slice
// recursion that dominates the heaviest supported workload (resolving the
// residue field over an Artinian Gorenstein quadratic algebra).

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "homalg/field.hpp"
#include "homalg/rref.hpp"
#include "homalg/sparse.hpp"

using namespace homalg;
using Clock = std::chrono::steady_clock;

static double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

static SparseMat<Fp> random_sparse(const Fp& f, std::mt19937& rng, std::uint32_t r,
                                   std::uint32_t c, double density) {
    std::uniform_real_distribution<double> u(0, 1);
    SparseMat<Fp> m(r, c);
    for (std::uint32_t i = 0; i < r; ++i)
        for (std::uint32_t j = 0; j < c; ++j)
            if (u(rng) < density) m.set(f, i, j, 1 + rng() % 100);
    return m;
}

static void bench_random() {
    Fp f(101);
    std::mt19937 rng(2024);
    struct Case { std::uint32_t r, c; double d; };
    std::vector<Case> cases = {{300, 400, 0.02}, {800, 1000, 0.01}, {2000, 2500, 0.004}};
    std::printf("%-28s %10s %10s %8s\n", "case", "serial[s]", "openmp[s]", "agree");
    for (const auto& cs : cases) {
        auto m = random_sparse(f, rng, cs.r, cs.c, cs.d);
        auto t0 = Clock::now();
        auto a = rref_serial(f, m);
        double ts = seconds_since(t0);
        t0 = Clock::now();
        auto b = rref(f, m);
        double tp = seconds_since(t0);
        std::string name = "random " + std::to_string(cs.r) + "x" + std::to_string(cs.c);
        std::printf("%-28s %10.3f %10.3f %8s\n", name.c_str(), ts, tp,
                    (a.reduced == b.reduced && a.rank == b.rank) ? "yes" : "NO");
    }
}

// Syzygy strand recursion for k over k[x_1..x_e]/(x_i x_j, x_i^2 - x_{i+1}^2):
// the stage-n elimination is the kernel of the concatenated action slices of
// the previous differential. This reproduces the shape and sparsity of the
// matrices met inside minimal-resolution runs without the algebra layer.
static void bench_syzygy(int stages, bool parallel) {
    Fp f(101);
    const int e = 3;
    std::vector<SparseMat<Fp>> slices(e, SparseMat<Fp>(1, e));
    for (int j = 0; j < e; ++j) slices[j].set(f, 0, j, 1);
    std::uint32_t b_prev = 1, b_cur = e;
    auto t0 = Clock::now();
    for (int n = 2; n <= stages; ++n) {
        SparseMat<Fp> m(b_prev, e * b_cur);
        for (std::uint32_t i = 0; i < b_prev; ++i) {
            typename SparseMat<Fp>::Row row;
            for (int j = 0; j < e; ++j)
                for (const auto& en : slices[j].row(i))
                    row.push_back({static_cast<std::uint32_t>(j) * b_cur + en.col, en.val});
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b2) { return a.col < b2.col; });
            m.set_row(i, std::move(row));
        }
        auto ech = parallel ? rref(f, m) : rref_serial(f, m);
        auto k = kernel_from_echelon(f, ech, m.cols());
        std::uint32_t b_next = k.cols();
        std::vector<SparseMat<Fp>> next(e, SparseMat<Fp>(b_cur, b_next));
        auto kt = k.transpose();
        for (std::uint32_t col = 0; col < b_next; ++col)
            for (const auto& en : kt.row(col))
                next[en.col / b_cur].set(f, en.col % b_cur, col, en.val);
        slices = std::move(next);
        b_prev = b_cur;
        b_cur = b_next;
    }
    std::printf("%-28s %10.3f   (top rank %u)\n",
                parallel ? "syzygy recursion (openmp)" : "syzygy recursion (serial)",
                seconds_since(t0), b_cur);
}

int main(int argc, char** argv) {
    int stages = argc > 1 ? std::atoi(argv[1]) : 12;
    bench_random();
    bench_syzygy(stages, false);
    bench_syzygy(stages, true);
    return 0;
}
