#include "promo/families.hpp"

#include <random>

namespace promo {

Poset make_chain(int n) {
    if (n < 1) throw std::invalid_argument("chain needs at least 1 element");
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
    return Poset(n, covers);
}

Poset make_antichain(int n) {
    if (n < 1) throw std::invalid_argument("antichain needs at least 1 element");
    return Poset(n, {});
}

Poset make_product_of_chains(std::span<const int> dims) {
    if (dims.empty()) throw std::invalid_argument("product of chains needs dimensions");
    long long total = 1;
    for (int d : dims) {
        if (d < 1) throw std::invalid_argument("chain lengths must be at least 1");
        total *= d;
        if (total > 1 << 20) throw std::invalid_argument("product of chains too large");
    }
    const int n = static_cast<int>(total);
    std::vector<std::pair<int, int>> covers;
    std::vector<int> coord(dims.size(), 0);
    for (int id = 0; id < n; ++id) {
        long long stride = 1;
        for (std::size_t d = dims.size(); d-- > 0;) {
            if (coord[d] + 1 < dims[d]) covers.emplace_back(id, id + static_cast<int>(stride));
            stride *= dims[d];
        }
        for (std::size_t d = dims.size(); d-- > 0;) {
            if (++coord[d] < dims[d]) break;
            coord[d] = 0;
        }
    }
    return Poset(n, covers);
}

Poset make_rooted_tree(std::span<const int> parent) {
    const int n = static_cast<int>(parent.size());
    std::vector<std::pair<int, int>> covers;
    for (int v = 0; v < n; ++v)
        if (parent[static_cast<std::size_t>(v)] != -1)
            covers.emplace_back(v, parent[static_cast<std::size_t>(v)]);
    Poset p(n, covers);
    if (maximal_elements(p).size() != 1)
        throw std::invalid_argument("rooted tree must have exactly one root");
    return p;
}

Poset make_random(int n, double density, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random poset needs at least 1 element");
    if (density < 0.0 || density > 1.0) throw std::invalid_argument("density must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    // Explicit threshold draw keeps results identical across standard libraries.
    const auto threshold =
        static_cast<std::uint64_t>(density * 9007199254740992.0);  // 2^53
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((rng() >> 11) < threshold) rel.emplace_back(i, j);
    return Poset(n, rel);
}

}  // namespace promo
