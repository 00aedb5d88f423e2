#pragma once

#include <optional>
#include <span>
#include <vector>

#include "promo/poset.hpp"

namespace promo {

/// Rooted tree whose root is the unique maximal element, together with a
/// fiber size per vertex describing an inflation: vertex v blows up into a
/// subposet with |fiber| = fiber[v] elements and a unique minimal element
/// (a chain unless an explicit shape is given).
struct InflatedTree {
    std::vector<int> parent;  // parent[v] covers v; -1 marks the root
    std::vector<int> fiber;   // all >= 1
    std::vector<std::optional<Poset>> shape;  // empty vector: chains throughout
};

struct InflatedForest {
    std::vector<InflatedTree> trees;
};

/// Children of each vertex (elements the vertex covers), ascending.
std::vector<std::vector<int>> tree_children(const InflatedTree& t);
int tree_root(const InflatedTree& t);
int total_size(const InflatedTree& t);
int total_size(const InflatedForest& f);

/// True when no vertex has exactly one child.
bool is_reduced(const InflatedTree& t);

/// Contracts every single-child vertex into its child, adding its fiber to
/// the child's (stacking the shapes), so the realized poset is unchanged.
/// Surviving vertices keep their relative order.
InflatedTree reduce(const InflatedTree& t);
InflatedForest reduce(const InflatedForest& f);

struct Realization {
    Poset poset;
    std::vector<int> tree_of;    // element -> tree index
    std::vector<int> vertex_of;  // element -> vertex within its tree
};

/// Concrete poset of an inflation: fiber shapes inside each fiber, and
/// x < y across fibers exactly when the fibers' vertices compare in the tree.
Realization realize(const InflatedForest& f);
Realization realize(const InflatedTree& t);

/// Per leaf: the path to the root and the coefficient sequences
/// b[j] = fiber mass weakly below path[j-1], c[j] = fiber mass strictly
/// below path[j]. Requires a reduced tree.
struct LeafPathCoefficients {
    int leaf = -1;
    std::vector<int> path;  // leaf, ..., root
    std::vector<long long> b, c;
};

std::vector<LeafPathCoefficients> leaf_coefficients(const InflatedTree& t);

/// Tangled labelings of a connected inflated tree, by the closed form
/// (n-1)! * sum over leaves of prod_j (b_j - 1)/(c_j - 1). Normalizes via
/// reduce first; requires total size >= 2.
BigInt tangled_count_tree(const InflatedTree& t);

/// Tangled labelings of an inflated forest: (n-2)! * sum_i t_i / (n_i - 2)!
/// with t_i the per-tree counts (0 for singleton trees).
BigInt tangled_count_forest(const InflatedForest& f);

/// Star specialization: root fiber over s leaf fibers gives
/// (n-1)! (mu - s)/(mu - 1) with mu the total leaf mass.
BigInt tangled_count_star(int root_fiber, std::span<const int> leaf_fibers);

/// (n - r)(n - 2)! for a poset with r components, each with a unique
/// minimal element. Requires n >= 2.
BigInt tangled_count_unique_min(long long n, long long r);

}  // namespace promo
