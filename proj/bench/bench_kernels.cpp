// Serial reference vs OpenMP kernel timings.
//
//   bench_kernels [repeats]
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>

#include <omp.h>

#include "jointspec/classical.hpp"
#include "jointspec/spectrum.hpp"

using namespace jointspec;

namespace {

double best_of(int repeats, const std::function<void()>& fn) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const double t0 = omp_get_wtime();
        fn();
        best = std::min(best, omp_get_wtime() - t0);
    }
    return best;
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %9.4f s   parallel %9.4f s   speedup %5.2fx\n", name, serial, parallel,
                serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
    std::printf("threads: %d\n", omp_get_max_threads());

    std::mt19937_64 rng(1);
    std::normal_distribution<double> normal;
    PointCloud a(4000, 2), b(4000, 2);
    for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = normal(rng);
    for (Eigen::Index i = 0; i < b.size(); ++i) b.data()[i] = normal(rng);
    volatile double sink = 0.0;
    report("directed hausdorff 4000x4000",
           best_of(repeats, [&] { sink = directed_hausdorff_serial(a, b); }),
           best_of(repeats, [&] { sink = directed_hausdorff_parallel(a, b); }));

    const ClassicalSystem jc = jaynes_cummings_classical();
    const GridResolution grid{48, 48};
    report("JC moment image 48^4",
           best_of(repeats, [&] { sink = sample_moment_image_serial(jc, grid, 3.0).sum(); }),
           best_of(repeats, [&] { sink = sample_moment_image_parallel(jc, grid, 3.0).sum(); }));

    const auto blocks = build_jaynes_cummings(40, 400);
    report("JC blocks n=40, T<=400",
           best_of(repeats, [&] { sink = jc_block_spectrum_serial(blocks, 40).residual; }),
           best_of(repeats, [&] { sink = jc_block_spectrum(blocks, 40).residual; }));
    (void)sink;
    return 0;
}
