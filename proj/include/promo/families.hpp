#pragma once

#include <cstdint>
#include <span>

#include "promo/poset.hpp"

namespace promo {

Poset make_chain(int n);
Poset make_antichain(int n);

/// Componentwise order on the product of chains with the given sizes;
/// element ids are mixed-radix with the last dimension fastest.
Poset make_product_of_chains(std::span<const int> dims);

/// The rooted tree poset itself: each vertex covered by its parent.
Poset make_rooted_tree(std::span<const int> parent);

/// Seeded random order: each pair (i, j), i < j, becomes a relation with the
/// given probability, then the result is closed and Hasse-reduced. Identical
/// seeds give identical posets on every platform.
Poset make_random(int n, double density, std::uint64_t seed);

}  // namespace promo
