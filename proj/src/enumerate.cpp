#include "promo/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sweep.hpp"

namespace promo {

namespace {

void check_cap(const Poset& p, const SweepOptions& opts) {
    if (p.size() > opts.cap)
        throw resource_error("poset has " + std::to_string(p.size()) +
                             " elements, above the exhaustive cap of " + std::to_string(opts.cap));
    if (p.size() > 20)
        throw resource_error("exhaustive sweeps are limited to 20 elements");
}

void count_le_rec(const Poset& p, std::vector<int>& below_left, std::vector<char>& used,
                  int placed, std::uint64_t& count) {
    if (placed == p.size()) {
        ++count;
        return;
    }
    for (int x = 0; x < p.size(); ++x) {
        if (used[static_cast<std::size_t>(x)] || below_left[static_cast<std::size_t>(x)] != 0)
            continue;
        used[static_cast<std::size_t>(x)] = 1;
        for (int y : p.above(x)) --below_left[static_cast<std::size_t>(y)];
        count_le_rec(p, below_left, used, placed + 1, count);
        for (int y : p.above(x)) ++below_left[static_cast<std::size_t>(y)];
        used[static_cast<std::size_t>(x)] = 0;
    }
}

bool k_untangled_buffer(const Poset& p, const int* labels, int k, int* scratch, int* chain) {
    const int n = p.size();
    if (n <= k + 1) return false;
    std::copy(labels, labels + n, scratch);
    for (int step = 0; step < n - k - 2; ++step) {
        if (is_linear_extension(p, scratch)) return false;
        promote_inplace(p, scratch, chain);
    }
    return !is_linear_extension(p, scratch);
}

struct CountState {
    std::uint64_t count = 0;
    std::vector<int> scratch, chain;
};

CountState make_count_state(int n) {
    return {0, std::vector<int>(static_cast<std::size_t>(n)), std::vector<int>(static_cast<std::size_t>(n))};
}

}  // namespace

BigInt count_linear_extensions(const Poset& p) {
    const int n = p.size();
    std::vector<int> below_left(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        below_left[static_cast<std::size_t>(x)] = static_cast<int>(p.below(x).size());
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::uint64_t count = 0;
    count_le_rec(p, below_left, used, 0, count);
    return BigInt(count);
}

BigInt count_k_untangled(const Poset& p, int k, const SweepOptions& opts) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    check_cap(p, opts);
    auto result = detail::sweep_labelings(
        p.size(), opts.jobs, make_count_state(p.size()),
        [&](CountState& s, const int* labels) {
            if (k_untangled_buffer(p, labels, k, s.scratch.data(), s.chain.data())) ++s.count;
        },
        [](CountState& acc, const CountState& part) { acc.count += part.count; });
    return BigInt(result.count);
}

BigInt count_k_untangled_serial(const Poset& p, int k, const SweepOptions& opts) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    check_cap(p, opts);
    auto result = detail::sweep_labelings_serial(
        p.size(), make_count_state(p.size()), [&](CountState& s, const int* labels) {
            if (k_untangled_buffer(p, labels, k, s.scratch.data(), s.chain.data())) ++s.count;
        });
    return BigInt(result.count);
}

KUntangledWitness has_k_untangled(const Poset& p, int k) {
    const int n = p.size();
    if (k < 0 || k > n - 2)
        throw std::invalid_argument("k must lie in 0..n-2");
    for (const SizedIdeal& ideal : lower_ideals_of_size(p, k + 2)) {
        if (ideal.antichain) continue;
        // Lexicographically least comparable pair x < y inside the ideal.
        int cx = -1, cy = -1;
        for (std::size_t i = 0; i < ideal.elements.size() && cx == -1; ++i)
            for (std::size_t j = 0; j < ideal.elements.size(); ++j)
                if (p.less(ideal.elements[i], ideal.elements[j])) {
                    cx = ideal.elements[i];
                    cy = ideal.elements[j];
                    break;
                }
        std::vector<char> in_ideal(static_cast<std::size_t>(n), 0);
        for (int e : ideal.elements) in_ideal[static_cast<std::size_t>(e)] = 1;
        std::vector<int> labels(static_cast<std::size_t>(n), 0);
        labels[static_cast<std::size_t>(cx)] = n;
        labels[static_cast<std::size_t>(cy)] = n - 1;
        int next_ideal_label = n - k - 1;
        int next_outside_label = 1;
        for (int x = 0; x < n; ++x) {
            if (x == cx || x == cy) continue;
            if (in_ideal[static_cast<std::size_t>(x)])
                labels[static_cast<std::size_t>(x)] = next_ideal_label++;
            else
                labels[static_cast<std::size_t>(x)] = next_outside_label++;
        }
        return {true, Labeling(std::move(labels))};
    }
    return {false, std::nullopt};
}

std::optional<Labeling> find_k_untangled_sweep(const Poset& p, int k, const SweepOptions& opts) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    check_cap(p, opts);
    const int n = p.size();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> scratch(static_cast<std::size_t>(n)), chain(static_cast<std::size_t>(n));
    do {
        if (k_untangled_buffer(p, perm.data(), k, scratch.data(), chain.data()))
            return Labeling(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

std::vector<int> golden_elements(const Poset& p, const Labeling& l) {
    if (l.size() != p.size())
        throw std::invalid_argument("labeling length does not match poset size");
    std::vector<int> out;
    for (int x = 0; x < p.size(); ++x) {
        bool golden = true;
        for (int y : p.above(x))
            if (l.label_of(y) < l.label_of(x)) {
                golden = false;
                break;
            }
        if (golden) out.push_back(x);
    }
    return out;
}

namespace {

// Chains are grown downward from the element labeled n; descending holds the
// chain top-first. Each chain yields one preimage by the inverse relabeling.
void emit_preimage_chains(const Poset& p, const Labeling& l, const std::vector<char>& golden,
                          std::vector<int>& descending, std::vector<Labeling>& out) {
    const int n = p.size();
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) labels[static_cast<std::size_t>(x)] = l.label_of(x) + 1;
    for (std::size_t i = 0; i + 1 < descending.size(); ++i)
        labels[static_cast<std::size_t>(descending[i])] =
            l.label_of(descending[i + 1]) + 1;
    labels[static_cast<std::size_t>(descending.back())] = 1;
    out.emplace_back(std::move(labels));

    const int low = descending.back();
    for (int u : p.below(low)) {
        if (!golden[static_cast<std::size_t>(u)]) continue;
        descending.push_back(u);
        emit_preimage_chains(p, l, golden, descending, out);
        descending.pop_back();
    }
}

}  // namespace

std::vector<Labeling> preimages(const Poset& p, const Labeling& l) {
    if (l.size() != p.size())
        throw std::invalid_argument("labeling length does not match poset size");
    const int n = p.size();
    if (n == 0) return {l};
    const int top = l.element_with(n);
    if (!p.is_maximal(top)) return {};
    std::vector<char> golden(static_cast<std::size_t>(n), 0);
    for (int x : golden_elements(p, l)) golden[static_cast<std::size_t>(x)] = 1;
    std::vector<Labeling> out;
    std::vector<int> descending{top};
    emit_preimage_chains(p, l, golden, descending, out);
    return out;
}

BigInt count_sortable_formula(const Poset& p) {
    BigInt total(0ll);
    std::vector<int> keep;
    for (int x : maximal_elements(p)) {
        keep.clear();
        for (int e = 0; e < p.size(); ++e)
            if (e != x) keep.push_back(e);
        total += chains_through(p, x) * count_linear_extensions(induced_subposet(p, keep));
    }
    return total;
}

namespace {

std::uint64_t sortable_sweep_count(const Poset& p, const SweepOptions& opts, bool parallel) {
    auto visit = [&](CountState& s, const int* labels) {
        std::copy(labels, labels + p.size(), s.scratch.data());
        promote_inplace(p, s.scratch.data(), s.chain.data());
        if (is_linear_extension(p, s.scratch.data())) ++s.count;
    };
    if (parallel)
        return detail::sweep_labelings(
                   p.size(), opts.jobs, make_count_state(p.size()), visit,
                   [](CountState& acc, const CountState& part) { acc.count += part.count; })
            .count;
    return detail::sweep_labelings_serial(p.size(), make_count_state(p.size()), visit).count;
}

}  // namespace

SortableCount count_sortable(const Poset& p, const SweepOptions& opts) {
    check_cap(p, opts);
    return {count_sortable_formula(p), BigInt(sortable_sweep_count(p, opts, true))};
}

BigInt count_sortable_sweep_serial(const Poset& p, const SweepOptions& opts) {
    check_cap(p, opts);
    return BigInt(sortable_sweep_count(p, opts, false));
}

namespace {

struct ProfileState {
    std::vector<std::uint64_t> hist;
    std::vector<int> scratch, chain;
};

SortingProfile profile_from_hist(const std::vector<std::uint64_t>& hist) {
    SortingProfile out;
    std::uint64_t running = 0;
    for (std::uint64_t h : hist) {
        running += h;
        out.a.emplace_back(running);
        out.a_hat.emplace_back(h);
    }
    return out;
}

}  // namespace

SortingProfile sorting_profile(const Poset& p, const SweepOptions& opts) {
    check_cap(p, opts);
    const int n = p.size();
    if (n == 0) return {};
    ProfileState init{std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0),
                      std::vector<int>(static_cast<std::size_t>(n)),
                      std::vector<int>(static_cast<std::size_t>(n))};
    auto result = detail::sweep_labelings(
        n, opts.jobs, init,
        [&](ProfileState& s, const int* labels) {
            std::copy(labels, labels + n, s.scratch.data());
            int t = sorting_time_inplace(p, s.scratch.data(), s.chain.data());
            ++s.hist[static_cast<std::size_t>(t)];
        },
        [](ProfileState& acc, const ProfileState& part) {
            for (std::size_t i = 0; i < acc.hist.size(); ++i) acc.hist[i] += part.hist[i];
        });
    return profile_from_hist(result.hist);
}

SortingProfile sorting_profile_serial(const Poset& p, const SweepOptions& opts) {
    check_cap(p, opts);
    const int n = p.size();
    if (n == 0) return {};
    ProfileState init{std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0),
                      std::vector<int>(static_cast<std::size_t>(n)),
                      std::vector<int>(static_cast<std::size_t>(n))};
    auto result = detail::sweep_labelings_serial(n, init, [&](ProfileState& s, const int* labels) {
        std::copy(labels, labels + n, s.scratch.data());
        int t = sorting_time_inplace(p, s.scratch.data(), s.chain.data());
        ++s.hist[static_cast<std::size_t>(t)];
    });
    return profile_from_hist(result.hist);
}

}  // namespace promo
