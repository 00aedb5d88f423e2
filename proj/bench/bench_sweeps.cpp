// Times the exhaustive labeling sweeps, serial reference vs OpenMP kernel,
// and checks that both produce identical counts.
//
//   bench_sweeps [--n N] [--jobs J] [--reps R]

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "promo/checks.hpp"
#include "promo/enumerate.hpp"
#include "promo/families.hpp"

using Clock = std::chrono::steady_clock;

namespace {

template <class F>
double time_ms(int reps, F&& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto start = Clock::now();
        fn();
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        if (ms < best) best = ms;
    }
    return best;
}

struct Case {
    std::string name;
    promo::Poset poset;
};

}  // namespace

int main(int argc, char** argv) {
    int n = 9, jobs = 0, reps = 3;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--n") && i + 1 < argc) n = std::atoi(argv[++i]);
        else if (!std::strcmp(argv[i], "--jobs") && i + 1 < argc) jobs = std::atoi(argv[++i]);
        else if (!std::strcmp(argv[i], "--reps") && i + 1 < argc) reps = std::atoi(argv[++i]);
        else {
            std::fprintf(stderr, "usage: bench_sweeps [--n N] [--jobs J] [--reps R]\n");
            return 2;
        }
    }
    const int grid_dims[] = {2, (n + 1) / 2};
    const Case cases[] = {
        {"chain-" + std::to_string(n), promo::make_chain(n)},
        {"grid-2x" + std::to_string(grid_dims[1]), promo::make_product_of_chains(grid_dims)},
        {"random-n" + std::to_string(n), promo::make_random(n, 0.3, 42)},
    };
    const promo::SweepOptions opts{n + 2, jobs};

    std::printf("%-12s %-16s %12s %12s %8s\n", "poset", "kernel", "serial ms", "parallel ms",
                "speedup");
    bool ok = true;
    for (const Case& c : cases) {
        promo::BigInt serial_count, parallel_count;
        double serial_ms = time_ms(reps, [&] { serial_count = promo::count_k_untangled_serial(c.poset, 0, opts); });
        double parallel_ms = time_ms(reps, [&] { parallel_count = promo::count_k_untangled(c.poset, 0, opts); });
        ok = ok && serial_count == parallel_count;
        std::printf("%-12s %-16s %12.1f %12.1f %7.2fx\n", c.name.c_str(), "count-tangled",
                    serial_ms, parallel_ms, serial_ms / parallel_ms);

        promo::SortingProfile sp, pp;
        serial_ms = time_ms(reps, [&] { sp = promo::sorting_profile_serial(c.poset, opts); });
        parallel_ms = time_ms(reps, [&] { pp = promo::sorting_profile(c.poset, opts); });
        ok = ok && sp.a == pp.a && sp.a_hat == pp.a_hat;
        std::printf("%-12s %-16s %12.1f %12.1f %7.2fx\n", c.name.c_str(), "profile", serial_ms,
                    parallel_ms, serial_ms / parallel_ms);
    }
    if (!ok) {
        std::fprintf(stderr, "serial and parallel kernels disagree\n");
        return 1;
    }
    return 0;
}
