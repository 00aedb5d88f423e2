#pragma once

#include <optional>
#include <vector>

#include "promo/dynamics.hpp"
#include "promo/poset.hpp"

namespace promo {

/// Guard for the exhaustive n!-sweeps. Exceeding cap raises resource_error
/// rather than truncating. jobs = 0 uses the OpenMP default thread count.
struct SweepOptions {
    int cap = 9;
    int jobs = 0;
};

/// |L(P)| by backtracking over lower-ideal frontiers.
BigInt count_linear_extensions(const Poset& p);

/// Number of k-untangled labelings, by exhaustive sweep (parallel kernel).
BigInt count_k_untangled(const Poset& p, int k, const SweepOptions& opts = {});
/// Serial reference implementation of the same count.
BigInt count_k_untangled_serial(const Poset& p, int k, const SweepOptions& opts = {});

inline BigInt count_tangled(const Poset& p, const SweepOptions& opts = {}) {
    return count_k_untangled(p, 0, opts);
}

struct KUntangledWitness {
    bool exists = false;
    std::optional<Labeling> witness;  // k-untangled labeling when exists
};

/// Ideal criterion: P has a k-untangled labeling iff it has a lower order
/// ideal of size k+2 that is not an antichain. When it does, the returned
/// witness is built constructively (labels n, n-1 on a comparable pair of
/// the ideal, the remaining ideal labels descending, the rest ascending).
KUntangledWitness has_k_untangled(const Poset& p, int k);

/// Exhaustive search for any k-untangled labeling; the independent route
/// checked against has_k_untangled.
std::optional<Labeling> find_k_untangled_sweep(const Poset& p, int k, const SweepOptions& opts = {});

/// Elements x with L(y) > L(x) for every y above x.
std::vector<int> golden_elements(const Poset& p, const Labeling& l);

/// All preimages of l under promotion: one per golden chain through the
/// element labeled n, empty when that element is not maximal.
std::vector<Labeling> preimages(const Poset& p, const Labeling& l);

struct SortableCount {
    BigInt via_formula;  // sum over maximal x of chains_through(x) * |L(P \ x)|
    BigInt via_sweep;    // #{L : promote(L) is a linear extension}
    bool agree() const { return via_formula == via_sweep; }
};

/// Both routes to the sortable-labeling count; they must agree.
SortableCount count_sortable(const Poset& p, const SweepOptions& opts = {});
BigInt count_sortable_formula(const Poset& p);
BigInt count_sortable_sweep_serial(const Poset& p, const SweepOptions& opts = {});

/// a[k] = #{L : promote^k(L) is a linear extension}, k = 0..n-1, and the
/// difference sequence a_hat (a_hat[0] = a[0]). a_hat is the histogram of
/// sorting times.
struct SortingProfile {
    std::vector<BigInt> a;
    std::vector<BigInt> a_hat;
};

SortingProfile sorting_profile(const Poset& p, const SweepOptions& opts = {});
SortingProfile sorting_profile_serial(const Poset& p, const SweepOptions& opts = {});

}  // namespace promo
