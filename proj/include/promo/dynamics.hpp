#pragma once

#include <optional>
#include <vector>

#include "promo/poset.hpp"

namespace promo {

/// One application of the promotion operator: the walked chain and the
/// relabeled output alongside the input.
struct PromotionTrace {
    Labeling input;
    std::vector<int> chain;  // v_1 < ... < v_m in P, v_1 carrying label 1
    Labeling output;
};

struct FrozenReport {
    std::vector<int> frozen;  // ascending ids; an upper order ideal
    int count = 0;            // == frozen.size(), the maximal suffix length
};

/// Element above x with the smallest label; nullopt when x is maximal.
std::optional<int> l_successor(const Poset& p, const Labeling& l, int x);

PromotionTrace promote(const Poset& p, const Labeling& l);

/// Swap of labels i and i+1 unless their carriers satisfy
/// L^{-1}(i) < L^{-1}(i+1); an involution.
Labeling toggle(const Poset& p, const Labeling& l, int i);

/// Promotion realized as the toggle composition tau_{n-1} ... tau_1.
Labeling promote_via_toggles(const Poset& p, const Labeling& l);

FrozenReport frozen_report(const Poset& p, const Labeling& l);

/// Smallest gamma >= 0 with promote^gamma(l) a linear extension; <= n-1.
int sorting_time(const Poset& p, const Labeling& l);

/// Whether promote^{n-k-2}(l) fails to be a linear extension. By convention
/// false whenever n <= k+1. k = 0 is the tangled case.
bool is_k_untangled(const Poset& p, const Labeling& l, int k);

inline bool is_tangled(const Poset& p, const Labeling& l) { return is_k_untangled(p, l, 0); }

// Raw-buffer kernels shared with the exhaustive sweeps. labels must be a
// permutation of 1..n; chain needs capacity n.
int promotion_chain(const Poset& p, const int* labels, int* chain);
void promote_inplace(const Poset& p, int* labels, int* chain);
int frozen_count(const Poset& p, const int* labels);
int sorting_time_inplace(const Poset& p, int* labels, int* chain);

}  // namespace promo
