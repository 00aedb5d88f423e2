#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "promo/enumerate.hpp"
#include "promo/inflation.hpp"
#include "promo/report.hpp"

namespace promo {

/// One left-to-right bubble pass: adjacent out-of-order entries swap, the
/// larger entry riding along.
std::vector<int> bubble_sort_pass(std::span<const int> perm);

/// For the n-element chain, the inverse word of promote(L) must equal the
/// bubble pass of the inverse word of L, for all n! labelings.
ExperimentReport check_bubble_equivalence(int n, const SweepOptions& opts = {});

/// Chain profile against a_0 = 1 and a_k = (k+1)^{n-k-1} (k+1)!.
ExperimentReport check_chain_ak(int n, const SweepOptions& opts = {});

struct NamedPoset {
    std::string name;
    Poset poset;
};

/// Chains and antichains up to cap, small grids, the star and tree
/// inflations, plus seeded random posets. Only posets with at most cap
/// elements are returned.
std::vector<NamedPoset> default_catalog(int cap, int random_count = 50);

struct ScanOptions {
    int cap = 6;
    int jobs = 0;
    int random_count = 200;
    std::uint64_t seed = 1;
    double density = 0.35;
    bool include_catalog = true;
};

/// Empirical scan: tangled count <= (n-1)!, a_hat unimodal, a log-concave.
/// Posets above the cap are reported as skipped, never as passing.
ExperimentReport scan_conjectures(const std::vector<NamedPoset>& posets,
                                  const ScanOptions& opts = {});
ExperimentReport scan_conjectures(const ScanOptions& opts = {});

struct VerifyOptions {
    int cap = 6;
    int jobs = 0;
    int random_count = 50;
    /// Promotion map used by the toggle-equivalence check. Tests override it
    /// to confirm the suite flags a broken promotion with a witness.
    std::function<Labeling(const Poset&, const Labeling&)> promote_impl;
};

/// Runs every invariant suite over the default catalog: toggle equivalence,
/// termination, frozen growth, top-label freeze, component locality, the
/// k-untangled ideal criterion, minimality of the n-carrier in tangled
/// labelings, preimage counts, sortable-count agreement, and the closed-form
/// tangled counts against the sweep oracle.
ExperimentReport verify_all(const VerifyOptions& opts = {});

/// Forest specs whose closed-form counts the verification suite compares
/// against the sweep, capped at the given total size.
std::vector<std::pair<std::string, InflatedForest>> formula_spec_catalog(int max_n);

}  // namespace promo
