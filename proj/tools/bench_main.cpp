#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ckforms/ck_ops.hpp"
#include "ckforms/matrix.hpp"

namespace {

using namespace ckforms;

linalg::RationalMatrix random_matrix(std::size_t rows, std::size_t cols, int fill_percent,
                                     std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> gate(0, 99);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    linalg::RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (gate(rng) < fill_percent) m(r, c) = make_rational(num(rng), den(rng));
    return m;
}

double best_of_ms(int reps, const std::function<void()>& fn) {
    double best = 0;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        auto t1 = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (i == 0 || ms < best) best = ms;
    }
    return best;
}

bool bench_case(const std::string& name, const linalg::RationalMatrix& m, int reps = 3) {
    std::size_t prod_rank = 0, ref_rank = 0;
    std::vector<linalg::Vec> prod_kernel, ref_kernel;

    const double prod_ms = best_of_ms(reps, [&] {
        prod_rank = linalg::rank(m);
        prod_kernel = linalg::kernel_basis(m);
    });
    const double ref_ms = best_of_ms(reps, [&] {
        ref_rank = linalg::reference::rank(m);
        ref_kernel = linalg::reference::kernel_basis(m);
    });

    const bool agree = prod_rank == ref_rank && prod_kernel == ref_kernel;
    std::printf("%-22s %4zux%-4zu %10.2f %10.2f %7.2fx  %s\n", name.c_str(), m.rows(), m.cols(),
                prod_ms, ref_ms, prod_ms > 0 ? ref_ms / prod_ms : 0.0,
                agree ? "agree" : "DISAGREE");
    return agree;
}

}  // namespace

int main() {
    std::printf("%-22s %-9s %10s %10s %8s  %s\n", "case", "size", "prod ms", "ref ms", "speedup",
                "check");

    bool ok = true;
    ok &= bench_case("t3 operator", t3_matrix());
    ok &= bench_case("t4 operator", t4_matrix());
    ok &= bench_case("inner contraction", inner_contraction_matrix());
    ok &= bench_case("dense random", random_matrix(90, 70, 100, 41), 2);
    ok &= bench_case("sparse random", random_matrix(150, 100, 18, 42), 2);
    ok &= bench_case("wide random", random_matrix(48, 160, 60, 43), 2);

    if (!ok) {
        std::printf("production and reference kernels disagree\n");
        return 1;
    }
    return 0;
}
