#include "promo/dynamics.hpp"

#include <algorithm>
#include <cassert>

namespace promo {

namespace {

int position_of_label(const Poset& p, const int* labels, int wanted) {
    for (int x = 0; x < p.size(); ++x)
        if (labels[x] == wanted) return x;
    assert(false && "label missing from buffer");
    return -1;
}

void check_labeling(const Poset& p, const Labeling& l) {
    if (l.size() != p.size())
        throw std::invalid_argument("labeling length does not match poset size");
}

}  // namespace

std::optional<int> l_successor(const Poset& p, const Labeling& l, int x) {
    check_labeling(p, l);
    p.require_element(x);
    int best = -1;
    for (int y : p.above(x))
        if (best == -1 || l.label_of(y) < l.label_of(best)) best = y;
    if (best == -1) return std::nullopt;
    return best;
}

int promotion_chain(const Poset& p, const int* labels, int* chain) {
    int cur = position_of_label(p, labels, 1);
    int m = 0;
    chain[m++] = cur;
    while (true) {
        int best = -1;
        for (int y : p.above(cur))
            if (best == -1 || labels[y] < labels[best]) best = y;
        if (best == -1) break;
        cur = best;
        chain[m++] = cur;
    }
    return m;
}

void promote_inplace(const Poset& p, int* labels, int* chain) {
    if (p.size() == 0) return;
    const int m = promotion_chain(p, labels, chain);
    for (int i = 0; i + 1 < m; ++i) labels[chain[i]] = labels[chain[i + 1]];
    labels[chain[m - 1]] = p.size() + 1;
    for (int x = 0; x < p.size(); ++x) --labels[x];
}

PromotionTrace promote(const Poset& p, const Labeling& l) {
    check_labeling(p, l);
    if (p.size() == 0) return {l, {}, l};
    std::vector<int> labels = l.labels();
    std::vector<int> chain(static_cast<std::size_t>(p.size()));
    const int m = promotion_chain(p, labels.data(), chain.data());
    chain.resize(static_cast<std::size_t>(m));
    for (int i = 0; i + 1 < m; ++i)
        labels[static_cast<std::size_t>(chain[static_cast<std::size_t>(i)])] =
            labels[static_cast<std::size_t>(chain[static_cast<std::size_t>(i + 1)])];
    labels[static_cast<std::size_t>(chain.back())] = p.size() + 1;
    for (auto& lab : labels) --lab;
    return {l, std::move(chain), Labeling(std::move(labels))};
}

Labeling toggle(const Poset& p, const Labeling& l, int i) {
    check_labeling(p, l);
    if (i < 1 || i > p.size() - 1)
        throw std::invalid_argument("toggle index must lie in 1..n-1");
    int x = l.element_with(i);
    int y = l.element_with(i + 1);
    if (p.less(x, y)) return l;
    std::vector<int> labels = l.labels();
    std::swap(labels[static_cast<std::size_t>(x)], labels[static_cast<std::size_t>(y)]);
    return Labeling(std::move(labels));
}

Labeling promote_via_toggles(const Poset& p, const Labeling& l) {
    check_labeling(p, l);
    const int n = p.size();
    std::vector<int> labels = l.labels();
    std::vector<int> pos(static_cast<std::size_t>(n) + 1);
    for (int x = 0; x < n; ++x) pos[static_cast<std::size_t>(labels[static_cast<std::size_t>(x)])] = x;
    for (int i = 1; i <= n - 1; ++i) {
        int x = pos[static_cast<std::size_t>(i)];
        int y = pos[static_cast<std::size_t>(i + 1)];
        if (p.less(x, y)) continue;
        std::swap(labels[static_cast<std::size_t>(x)], labels[static_cast<std::size_t>(y)]);
        std::swap(pos[static_cast<std::size_t>(i)], pos[static_cast<std::size_t>(i + 1)]);
    }
    return Labeling(std::move(labels));
}

int frozen_count(const Poset& p, const int* labels) {
    const int n = p.size();
    // Scan j = n..1, growing the top-label suffix; the suffix stays an upper
    // order ideal exactly while every element above the newcomer is in it.
    for (int j = n; j >= 1; --j) {
        int x = position_of_label(p, labels, j);
        for (int y : p.above(x))
            if (labels[y] < j) return n - j;
    }
    return n;
}

FrozenReport frozen_report(const Poset& p, const Labeling& l) {
    check_labeling(p, l);
    FrozenReport out;
    out.count = frozen_count(p, l.labels().data());
    const int threshold = p.size() - out.count;
    for (int x = 0; x < p.size(); ++x)
        if (l.label_of(x) > threshold) out.frozen.push_back(x);
    return out;
}

int sorting_time_inplace(const Poset& p, int* labels, int* chain) {
    int steps = 0;
    while (!is_linear_extension(p, labels)) {
        promote_inplace(p, labels, chain);
        ++steps;
        assert(steps < p.size() && "promotion must sort within n-1 steps");
    }
    return steps;
}

int sorting_time(const Poset& p, const Labeling& l) {
    check_labeling(p, l);
    if (p.size() == 0) return 0;
    std::vector<int> labels = l.labels();
    std::vector<int> chain(static_cast<std::size_t>(p.size()));
    return sorting_time_inplace(p, labels.data(), chain.data());
}

bool is_k_untangled(const Poset& p, const Labeling& l, int k) {
    check_labeling(p, l);
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    const int n = p.size();
    if (n <= k + 1) return false;
    std::vector<int> labels = l.labels();
    std::vector<int> chain(static_cast<std::size_t>(n));
    for (int step = 0; step < n - k - 2; ++step) {
        if (is_linear_extension(p, labels.data())) return false;  // already sorted, stays sorted
        promote_inplace(p, labels.data(), chain.data());
    }
    return !is_linear_extension(p, labels.data());
}

}  // namespace promo
