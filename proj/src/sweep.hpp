#pragma once

// Internal permutation-sweep machinery. The labeling space of an n-element
// poset is the n! permutations of {1..n}; sweeps partition the lexicographic
// rank range into blocks, unrank each block's first permutation, and advance
// with std::next_permutation. Per-block states are merged in block order, so
// results do not depend on thread scheduling.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace promo::detail {

inline std::uint64_t factorial_u64(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;  // exact for n <= 20
}

inline std::vector<int> unrank_permutation(int n, std::uint64_t rank) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n));
    std::uint64_t radix = factorial_u64(n);
    for (int i = n; i >= 1; --i) {
        radix /= static_cast<std::uint64_t>(i);
        auto idx = static_cast<std::size_t>(rank / radix);
        rank %= radix;
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return out;
}

inline int sweep_threads(int jobs) {
#if defined(_OPENMP)
    return jobs > 0 ? jobs : omp_get_max_threads();
#else
    (void)jobs;
    return 1;
#endif
}

/// Visits every permutation of {1..n} once. State must be copyable; visit is
/// called as visit(state, labels) and merge as merge(acc, part).
template <class State, class Visit, class Merge>
State sweep_labelings(int n, int jobs, const State& init, const Visit& visit, const Merge& merge) {
    const std::uint64_t total = factorial_u64(n);
    const int threads = sweep_threads(jobs);
    const int blocks = static_cast<int>(std::min<std::uint64_t>(
        total, static_cast<std::uint64_t>(std::max(1, threads * 8))));
    std::vector<State> parts(static_cast<std::size_t>(blocks), init);
    const std::uint64_t q = total / static_cast<std::uint64_t>(blocks);
    const std::uint64_t rem = total % static_cast<std::uint64_t>(blocks);

#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
    for (int b = 0; b < blocks; ++b) {
        const auto ub = static_cast<std::uint64_t>(b);
        const std::uint64_t lo = ub * q + std::min<std::uint64_t>(ub, rem);
        const std::uint64_t count = q + (ub < rem ? 1 : 0);
        std::vector<int> perm = unrank_permutation(n, lo);
        State& state = parts[static_cast<std::size_t>(b)];
        for (std::uint64_t r = 0; r < count; ++r) {
            visit(state, perm.data());
            std::next_permutation(perm.begin(), perm.end());
        }
    }

    State acc = init;
    for (const State& part : parts) merge(acc, part);
    return acc;
}

/// Serial reference sweep, kept for cross-checking the parallel kernels.
template <class State, class Visit>
State sweep_labelings_serial(int n, const State& init, const Visit& visit) {
    State state = init;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        visit(state, perm.data());
    } while (std::next_permutation(perm.begin(), perm.end()));
    return state;
}

}  // namespace promo::detail
