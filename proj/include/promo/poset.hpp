#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "promo/bigint.hpp"

namespace promo {

/// Thrown when an exhaustive operation would exceed its configured size cap.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Finite poset on element ids 0..n-1.
///
/// Construction takes an arbitrary set of order relations (u, v) meaning
/// u < v, rejects cycles, and canonicalizes to the Hasse diagram: covers()
/// holds exactly the cover pairs, less() the full strict comparability.
/// Instances are immutable and safe to share across threads.
class Poset {
public:
    Poset() = default;
    Poset(int n, const std::vector<std::pair<int, int>>& relations);

    int size() const { return n_; }

    /// Strict order x < y. Element ids must be valid.
    bool less(int x, int y) const { return less_[static_cast<std::size_t>(x) * n_ + y] != 0; }
    bool leq(int x, int y) const { return x == y || less(x, y); }

    /// Cover pairs (u, v) with v covering u, sorted lexicographically.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    /// Elements strictly above / below x, ascending ids.
    std::span<const int> above(int x) const { return up_[static_cast<std::size_t>(x)]; }
    std::span<const int> below(int x) const { return down_[static_cast<std::size_t>(x)]; }

    bool is_maximal(int x) const { return up_[static_cast<std::size_t>(x)].empty(); }
    bool is_minimal(int x) const { return down_[static_cast<std::size_t>(x)].empty(); }

    void require_element(int x) const {
        if (x < 0 || x >= n_) throw std::invalid_argument("element id out of range");
    }

    friend bool operator==(const Poset& a, const Poset& b) {
        return a.n_ == b.n_ && a.covers_ == b.covers_;
    }

private:
    int n_ = 0;
    std::vector<std::uint8_t> less_;             // n*n strict comparability matrix
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<int>> up_, down_;
};

/// Bijective labeling P -> {1..n}. Keeps the inverse for O(1) lookups.
class Labeling {
public:
    Labeling() = default;
    explicit Labeling(std::vector<int> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    int label_of(int x) const { return labels_[static_cast<std::size_t>(x)]; }
    /// Element carrying the given label in 1..n.
    int element_with(int label) const { return pos_[static_cast<std::size_t>(label)]; }
    const std::vector<int>& labels() const { return labels_; }

    friend bool operator==(const Labeling& a, const Labeling& b) { return a.labels_ == b.labels_; }
    friend bool operator!=(const Labeling& a, const Labeling& b) { return !(a == b); }

private:
    std::vector<int> labels_;
    std::vector<int> pos_;  // pos_[label] = element, slot 0 unused
};

bool is_linear_extension(const Poset& p, const Labeling& l);
/// Raw-buffer variant used by the exhaustive sweeps; labels must be a
/// permutation of 1..n.
bool is_linear_extension(const Poset& p, const int* labels);

bool is_lower_order_ideal(const Poset& p, std::span<const int> elements);
bool is_upper_order_ideal(const Poset& p, std::span<const int> elements);
bool is_antichain(const Poset& p, std::span<const int> elements);

struct SizedIdeal {
    std::vector<int> elements;  // ascending ids
    bool antichain;
};

/// All lower order ideals of cardinality exactly k, in lexicographic order
/// of their sorted element lists, each tagged with the antichain property.
std::vector<SizedIdeal> lower_ideals_of_size(const Poset& p, int k);

struct Component {
    Poset poset;
    std::vector<int> elements;  // local id -> original id, ascending
};

/// Connected components of the Hasse diagram, ordered by smallest original
/// element id, each as an induced subposet with the id mapping back to P.
std::vector<Component> connected_components(const Poset& p);

/// Component index of every element, matching connected_components order.
std::vector<int> component_index(const Poset& p);

/// Order-preserving relabeling of distinct values to {1..n}.
Labeling standardize(std::span<const long long> values);
Labeling standardize(std::span<const int> values);

/// Number of nonempty chains (totally ordered subsets) containing x;
/// singleton chains count.
BigInt chains_through(const Poset& p, int x);

std::vector<int> maximal_elements(const Poset& p);
std::vector<int> minimal_elements(const Poset& p);

/// Induced subposet on the given elements (ascending id order in the result).
Poset induced_subposet(const Poset& p, std::span<const int> elements);

}  // namespace promo
