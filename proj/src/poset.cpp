#include "promo/poset.hpp"

#include <algorithm>
#include <numeric>

namespace promo {

Poset::Poset(int n, const std::vector<std::pair<int, int>>& relations) : n_(n) {
    if (n < 0) throw std::invalid_argument("poset size must be nonnegative");
    less_.assign(static_cast<std::size_t>(n) * n, 0);
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : relations) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("relation references element id out of range");
        if (u == v) throw std::invalid_argument("order relation is irreflexive; got (x, x)");
        succ[static_cast<std::size_t>(u)].push_back(v);
        ++indeg[static_cast<std::size_t>(v)];
    }

    // Kahn topological order; leftover nodes mean a cycle.
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<int> queue;
    for (int x = 0; x < n; ++x)
        if (indeg[static_cast<std::size_t>(x)] == 0) queue.push_back(x);
    while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        order.push_back(x);
        for (int y : succ[static_cast<std::size_t>(x)])
            if (--indeg[static_cast<std::size_t>(y)] == 0) queue.push_back(y);
    }
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("relations contain a cycle");

    // Transitive closure in reverse topological order.
    for (std::size_t i = order.size(); i-- > 0;) {
        int x = order[i];
        for (int y : succ[static_cast<std::size_t>(x)]) {
            less_[static_cast<std::size_t>(x) * n_ + y] = 1;
            for (int z = 0; z < n; ++z)
                if (less(y, z)) less_[static_cast<std::size_t>(x) * n_ + z] = 1;
        }
    }

    // Hasse: keep (u, v) iff nothing sits strictly between.
    up_.assign(static_cast<std::size_t>(n), {});
    down_.assign(static_cast<std::size_t>(n), {});
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (!less(u, v)) continue;
            up_[static_cast<std::size_t>(u)].push_back(v);
            down_[static_cast<std::size_t>(v)].push_back(u);
            bool covered = true;
            for (int w = 0; w < n && covered; ++w)
                if (less(u, w) && less(w, v)) covered = false;
            if (covered) covers_.emplace_back(u, v);
        }
    }
    std::sort(covers_.begin(), covers_.end());
}

Labeling::Labeling(std::vector<int> labels) : labels_(std::move(labels)) {
    const int n = static_cast<int>(labels_.size());
    pos_.assign(static_cast<std::size_t>(n) + 1, -1);
    for (int x = 0; x < n; ++x) {
        int lab = labels_[static_cast<std::size_t>(x)];
        if (lab < 1 || lab > n)
            throw std::invalid_argument("labeling values must lie in 1..n");
        if (pos_[static_cast<std::size_t>(lab)] != -1)
            throw std::invalid_argument("labeling repeats the label " + std::to_string(lab));
        pos_[static_cast<std::size_t>(lab)] = x;
    }
}

bool is_linear_extension(const Poset& p, const int* labels) {
    for (auto [u, v] : p.covers())
        if (labels[u] > labels[v]) return false;
    return true;
}

bool is_linear_extension(const Poset& p, const Labeling& l) {
    if (l.size() != p.size())
        throw std::invalid_argument("labeling length does not match poset size");
    return is_linear_extension(p, l.labels().data());
}

namespace {

std::vector<std::uint8_t> member_mask(const Poset& p, std::span<const int> elements) {
    std::vector<std::uint8_t> in(static_cast<std::size_t>(p.size()), 0);
    for (int x : elements) {
        p.require_element(x);
        in[static_cast<std::size_t>(x)] = 1;
    }
    return in;
}

}  // namespace

bool is_lower_order_ideal(const Poset& p, std::span<const int> elements) {
    auto in = member_mask(p, elements);
    for (int x : elements)
        for (int y : p.below(x))
            if (!in[static_cast<std::size_t>(y)]) return false;
    return true;
}

bool is_upper_order_ideal(const Poset& p, std::span<const int> elements) {
    auto in = member_mask(p, elements);
    for (int x : elements)
        for (int y : p.above(x))
            if (!in[static_cast<std::size_t>(y)]) return false;
    return true;
}

bool is_antichain(const Poset& p, std::span<const int> elements) {
    member_mask(p, elements);  // id validation
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = i + 1; j < elements.size(); ++j)
            if (p.less(elements[i], elements[j]) || p.less(elements[j], elements[i])) return false;
    return true;
}

std::vector<SizedIdeal> lower_ideals_of_size(const Poset& p, int k) {
    if (k < 0 || k > p.size())
        throw std::invalid_argument("ideal size out of range");
    std::vector<SizedIdeal> out;
    std::vector<int> pick(static_cast<std::size_t>(k));
    // k-combinations in lexicographic order; the filter keeps output ordered.
    std::iota(pick.begin(), pick.end(), 0);
    const int n = p.size();
    while (true) {
        if (is_lower_order_ideal(p, pick))
            out.push_back({pick, is_antichain(p, pick)});
        if (k == 0) break;
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::vector<int> component_index(const Poset& p) {
    const int n = p.size();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1) continue;
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s)] = next;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            auto visit = [&](int y) {
                if (comp[static_cast<std::size_t>(y)] == -1) {
                    comp[static_cast<std::size_t>(y)] = next;
                    stack.push_back(y);
                }
            };
            for (int y : p.above(x)) visit(y);
            for (int y : p.below(x)) visit(y);
        }
        ++next;
    }
    return comp;
}

Poset induced_subposet(const Poset& p, std::span<const int> elements) {
    std::vector<int> sorted(elements.begin(), elements.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> local(static_cast<std::size_t>(p.size()), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        p.require_element(sorted[i]);
        local[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> rel;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = 0; j < sorted.size(); ++j)
            if (p.less(sorted[i], sorted[j]))
                rel.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Poset(static_cast<int>(sorted.size()), rel);
}

std::vector<Component> connected_components(const Poset& p) {
    auto comp = component_index(p);
    int count = 0;
    for (int c : comp) count = std::max(count, c + 1);
    std::vector<Component> out(static_cast<std::size_t>(count));
    for (int x = 0; x < p.size(); ++x)
        out[static_cast<std::size_t>(comp[static_cast<std::size_t>(x)])].elements.push_back(x);
    for (auto& c : out) c.poset = induced_subposet(p, c.elements);
    return out;
}

Labeling standardize(std::span<const long long> values) {
    const int n = static_cast<int>(values.size());
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return values[static_cast<std::size_t>(a)] < values[static_cast<std::size_t>(b)]; });
    for (int i = 0; i + 1 < n; ++i)
        if (values[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] ==
            values[static_cast<std::size_t>(order[static_cast<std::size_t>(i + 1)])])
            throw std::invalid_argument("standardization requires distinct values");
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        labels[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i + 1;
    return Labeling(std::move(labels));
}

Labeling standardize(std::span<const int> values) {
    std::vector<long long> wide(values.begin(), values.end());
    return standardize(std::span<const long long>(wide));
}

BigInt chains_through(const Poset& p, int x) {
    p.require_element(x);
    const int n = p.size();
    // chains_into[v]: chains (possibly empty) inside the strict down-set of v.
    // Processing by |below| ascending is a valid topological order.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return p.below(a).size() < p.below(b).size();
    });
    std::vector<BigInt> chains_into(static_cast<std::size_t>(n));
    for (int v : order) {
        BigInt total(1ll);
        for (int u : p.below(v)) total += chains_into[static_cast<std::size_t>(u)];
        chains_into[static_cast<std::size_t>(v)] = total;
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return p.above(a).size() < p.above(b).size();
    });
    std::vector<BigInt> chains_from(static_cast<std::size_t>(n));
    for (int v : order) {
        BigInt total(1ll);
        for (int w : p.above(v)) total += chains_from[static_cast<std::size_t>(w)];
        chains_from[static_cast<std::size_t>(v)] = total;
    }
    return chains_into[static_cast<std::size_t>(x)] * chains_from[static_cast<std::size_t>(x)];
}

std::vector<int> maximal_elements(const Poset& p) {
    std::vector<int> out;
    for (int x = 0; x < p.size(); ++x)
        if (p.is_maximal(x)) out.push_back(x);
    return out;
}

std::vector<int> minimal_elements(const Poset& p) {
    std::vector<int> out;
    for (int x = 0; x < p.size(); ++x)
        if (p.is_minimal(x)) out.push_back(x);
    return out;
}

}  // namespace promo
