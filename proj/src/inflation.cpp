#include "promo/inflation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace promo {

namespace {

void validate_tree(const InflatedTree& t) {
    const auto n = t.parent.size();
    if (n == 0) throw std::invalid_argument("inflated tree has no vertices");
    if (t.fiber.size() != n)
        throw std::invalid_argument("fiber array length does not match vertex count");
    if (!t.shape.empty() && t.shape.size() != n)
        throw std::invalid_argument("shape array length does not match vertex count");
    int roots = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (t.parent[v] == -1)
            ++roots;
        else if (t.parent[v] < 0 || t.parent[v] >= static_cast<int>(n) ||
                 t.parent[v] == static_cast<int>(v))
            throw std::invalid_argument("bad parent index for vertex " + std::to_string(v));
        if (t.fiber[v] < 1) throw std::invalid_argument("fiber sizes must be at least 1");
    }
    if (roots != 1) throw std::invalid_argument("tree must have exactly one root");
    // Every vertex must reach the root; a walk longer than n means a cycle.
    for (std::size_t v = 0; v < n; ++v) {
        int cur = static_cast<int>(v), steps = 0;
        while (t.parent[static_cast<std::size_t>(cur)] != -1) {
            cur = t.parent[static_cast<std::size_t>(cur)];
            if (++steps > static_cast<int>(n))
                throw std::invalid_argument("parent array contains a cycle");
        }
    }
    for (std::size_t v = 0; v < t.shape.size(); ++v) {
        if (!t.shape[v]) continue;
        if (t.shape[v]->size() != t.fiber[v])
            throw std::invalid_argument("fiber shape size disagrees with fiber size");
        if (minimal_elements(*t.shape[v]).size() != 1)
            throw std::invalid_argument("fiber shape must have a unique minimal element");
    }
}

}  // namespace

std::vector<std::vector<int>> tree_children(const InflatedTree& t) {
    std::vector<std::vector<int>> children(t.parent.size());
    for (std::size_t v = 0; v < t.parent.size(); ++v)
        if (t.parent[v] != -1) children[static_cast<std::size_t>(t.parent[v])].push_back(static_cast<int>(v));
    return children;
}

int tree_root(const InflatedTree& t) {
    for (std::size_t v = 0; v < t.parent.size(); ++v)
        if (t.parent[v] == -1) return static_cast<int>(v);
    throw std::invalid_argument("tree has no root");
}

int total_size(const InflatedTree& t) {
    return std::accumulate(t.fiber.begin(), t.fiber.end(), 0);
}

int total_size(const InflatedForest& f) {
    int n = 0;
    for (const auto& t : f.trees) n += total_size(t);
    return n;
}

bool is_reduced(const InflatedTree& t) {
    validate_tree(t);
    for (const auto& kids : tree_children(t))
        if (kids.size() == 1) return false;
    return true;
}

namespace {

Poset chain_poset(int n) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
    return Poset(n, covers);
}

Poset fiber_shape(const InflatedTree& t, int v) {
    if (!t.shape.empty() && t.shape[static_cast<std::size_t>(v)])
        return *t.shape[static_cast<std::size_t>(v)];
    return chain_poset(t.fiber[static_cast<std::size_t>(v)]);
}

// Ordinal sum: everything in `upper` above everything in `lower`.
Poset stack_shapes(const Poset& lower, const Poset& upper) {
    std::vector<std::pair<int, int>> rel;
    const int off = lower.size();
    for (int x = 0; x < lower.size(); ++x)
        for (int y = 0; y < lower.size(); ++y)
            if (lower.less(x, y)) rel.emplace_back(x, y);
    for (int x = 0; x < upper.size(); ++x)
        for (int y = 0; y < upper.size(); ++y)
            if (upper.less(x, y)) rel.emplace_back(off + x, off + y);
    for (int x = 0; x < lower.size(); ++x)
        for (int y = 0; y < upper.size(); ++y) rel.emplace_back(x, off + y);
    return Poset(lower.size() + upper.size(), rel);
}

}  // namespace

InflatedTree reduce(const InflatedTree& t) {
    validate_tree(t);
    InflatedTree cur = t;
    if (cur.shape.empty()) cur.shape.assign(cur.parent.size(), std::nullopt);
    while (true) {
        auto children = tree_children(cur);
        int victim = -1;
        for (std::size_t v = 0; v < children.size(); ++v)
            if (children[v].size() == 1) {
                victim = static_cast<int>(v);
                break;
            }
        if (victim == -1) break;
        const int child = children[static_cast<std::size_t>(victim)][0];
        // The victim sits directly above its only child: stack its fiber on top.
        if (cur.shape[static_cast<std::size_t>(child)] || cur.shape[static_cast<std::size_t>(victim)])
            cur.shape[static_cast<std::size_t>(child)] =
                stack_shapes(fiber_shape(cur, child), fiber_shape(cur, victim));
        cur.fiber[static_cast<std::size_t>(child)] += cur.fiber[static_cast<std::size_t>(victim)];
        cur.parent[static_cast<std::size_t>(child)] = cur.parent[static_cast<std::size_t>(victim)];
        // Compact out the contracted vertex, preserving relative order.
        InflatedTree next;
        std::vector<int> new_id(cur.parent.size(), -1);
        int k = 0;
        for (std::size_t v = 0; v < cur.parent.size(); ++v)
            if (static_cast<int>(v) != victim) new_id[v] = k++;
        for (std::size_t v = 0; v < cur.parent.size(); ++v) {
            if (static_cast<int>(v) == victim) continue;
            int par = cur.parent[v];
            next.parent.push_back(par == -1 ? -1 : new_id[static_cast<std::size_t>(par)]);
            next.fiber.push_back(cur.fiber[v]);
            next.shape.push_back(cur.shape[v]);
        }
        cur = std::move(next);
    }
    bool any_shape = false;
    for (const auto& s : cur.shape) any_shape = any_shape || s.has_value();
    if (!any_shape) cur.shape.clear();
    return cur;
}

InflatedForest reduce(const InflatedForest& f) {
    InflatedForest out;
    out.trees.reserve(f.trees.size());
    for (const auto& t : f.trees) out.trees.push_back(reduce(t));
    return out;
}

namespace {

// Children before parents, ascending among siblings. Contracting a
// single-child vertex then leaves element ids untouched, so realize and
// reduce commute on the nose.
std::vector<int> post_order(const InflatedTree& t) {
    auto children = tree_children(t);
    std::vector<int> out;
    out.reserve(t.parent.size());
    std::vector<std::pair<int, std::size_t>> stack{{tree_root(t), 0}};
    while (!stack.empty()) {
        auto& [v, next_child] = stack.back();
        if (next_child < children[static_cast<std::size_t>(v)].size()) {
            int c = children[static_cast<std::size_t>(v)][next_child++];
            stack.emplace_back(c, 0);
        } else {
            out.push_back(v);
            stack.pop_back();
        }
    }
    return out;
}

}  // namespace

Realization realize(const InflatedForest& f) {
    if (f.trees.empty()) throw std::invalid_argument("forest has no trees");
    Realization out;
    std::vector<std::pair<int, int>> rel;
    std::vector<std::vector<int>> base;  // per tree: first element id of each fiber
    int next_id = 0;
    for (std::size_t ti = 0; ti < f.trees.size(); ++ti) {
        const InflatedTree& t = f.trees[ti];
        validate_tree(t);
        base.emplace_back(t.parent.size(), 0);
        for (int v : post_order(t)) {
            base.back()[static_cast<std::size_t>(v)] = next_id;
            Poset shape = fiber_shape(t, v);
            for (int x = 0; x < shape.size(); ++x) {
                out.tree_of.push_back(static_cast<int>(ti));
                out.vertex_of.push_back(v);
            }
            for (int x = 0; x < shape.size(); ++x)
                for (int y = 0; y < shape.size(); ++y)
                    if (shape.less(x, y)) rel.emplace_back(next_id + x, next_id + y);
            next_id += shape.size();
        }
        // Cross-fiber relations follow the tree's ancestor relation.
        const auto& parent = t.parent;
        for (std::size_t v = 0; v < parent.size(); ++v) {
            int anc = parent[v];
            while (anc != -1) {
                for (int x = 0; x < t.fiber[v]; ++x)
                    for (int y = 0; y < t.fiber[static_cast<std::size_t>(anc)]; ++y)
                        rel.emplace_back(base[ti][v] + x,
                                         base[ti][static_cast<std::size_t>(anc)] + y);
                anc = parent[static_cast<std::size_t>(anc)];
            }
        }
    }
    out.poset = Poset(next_id, rel);
    return out;
}

Realization realize(const InflatedTree& t) { return realize(InflatedForest{{t}}); }

std::vector<LeafPathCoefficients> leaf_coefficients(const InflatedTree& t) {
    if (!is_reduced(t))
        throw std::invalid_argument("leaf coefficients require a reduced tree");
    auto children = tree_children(t);
    const auto n = t.parent.size();
    // Subtree fiber mass, computable in any child-before-parent order.
    std::vector<long long> subtree(n, 0);
    std::vector<int> order;
    order.reserve(n);
    std::vector<int> stack{tree_root(t)};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int c : children[static_cast<std::size_t>(v)]) stack.push_back(c);
    }
    for (std::size_t i = order.size(); i-- > 0;) {
        int v = order[i];
        subtree[static_cast<std::size_t>(v)] = t.fiber[static_cast<std::size_t>(v)];
        for (int c : children[static_cast<std::size_t>(v)])
            subtree[static_cast<std::size_t>(v)] += subtree[static_cast<std::size_t>(c)];
    }
    std::vector<LeafPathCoefficients> out;
    for (std::size_t v = 0; v < n; ++v) {
        if (!children[v].empty()) continue;
        LeafPathCoefficients lc;
        lc.leaf = static_cast<int>(v);
        int cur = static_cast<int>(v);
        lc.path.push_back(cur);
        while (t.parent[static_cast<std::size_t>(cur)] != -1) {
            int up = t.parent[static_cast<std::size_t>(cur)];
            lc.b.push_back(subtree[static_cast<std::size_t>(cur)]);
            lc.c.push_back(subtree[static_cast<std::size_t>(up)] - t.fiber[static_cast<std::size_t>(up)]);
            lc.path.push_back(up);
            cur = up;
        }
        out.push_back(std::move(lc));
    }
    return out;
}

BigInt tangled_count_tree(const InflatedTree& t) {
    InflatedTree reduced = reduce(t);
    const int n = total_size(reduced);
    if (n < 2) throw std::domain_error("tangled counts require at least 2 elements");
    if (reduced.parent.size() == 1) return BigInt::factorial(static_cast<unsigned>(n - 1));
    Rational sum(0);
    for (const auto& lc : leaf_coefficients(reduced)) {
        Rational prod(1);
        for (std::size_t j = 0; j < lc.b.size(); ++j)
            prod *= Rational(BigInt(lc.b[j] - 1), BigInt(lc.c[j] - 1));
        sum += prod;
    }
    return (BigInt::factorial(static_cast<unsigned>(n - 1)) * sum).to_integer();
}

BigInt tangled_count_forest(const InflatedForest& f) {
    if (f.trees.empty()) throw std::invalid_argument("forest has no trees");
    int n = 0;
    Rational sum(0);
    for (const auto& t : f.trees) {
        validate_tree(t);
        const int ni = total_size(t);
        n += ni;
        if (ni < 2) continue;  // singleton components carry no tangled labelings
        sum += Rational(tangled_count_tree(t),
                        BigInt::factorial(static_cast<unsigned>(ni - 2)));
    }
    if (sum.is_zero()) return BigInt(0ll);
    return (BigInt::factorial(static_cast<unsigned>(n - 2)) * sum).to_integer();
}

BigInt tangled_count_star(int root_fiber, std::span<const int> leaf_fibers) {
    if (root_fiber < 1) throw std::invalid_argument("root fiber must be at least 1");
    if (leaf_fibers.empty()) throw std::invalid_argument("star needs at least one leaf");
    long long mu = 0;
    for (int f : leaf_fibers) {
        if (f < 1) throw std::invalid_argument("leaf fibers must be at least 1");
        mu += f;
    }
    const long long n = mu + root_fiber;
    const auto s = static_cast<long long>(leaf_fibers.size());
    if (mu == 1)  // single leaf of size 1: the star is a chain
        return BigInt::factorial(static_cast<unsigned>(n - 1));
    Rational value = BigInt::factorial(static_cast<unsigned>(n - 1)) *
                     Rational(BigInt(mu - s), BigInt(mu - 1));
    return value.to_integer();
}

BigInt tangled_count_unique_min(long long n, long long r) {
    if (r < 1 || n < r) throw std::invalid_argument("need 1 <= r <= n");
    if (n < 2) throw std::domain_error("tangled counts require at least 2 elements");
    return BigInt(n - r) * BigInt::factorial(static_cast<unsigned>(n - 2));
}

}  // namespace promo
