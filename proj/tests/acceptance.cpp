// Acceptance suite: every criterion below is an exact combinatorial identity
// (or an exhaustive property) and must hold with zero tolerance. One line is
// printed per criterion; the exit code is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "promo/checks.hpp"
#include "promo/dynamics.hpp"
#include "promo/enumerate.hpp"
#include "promo/families.hpp"
#include "promo/inflation.hpp"
#include "promo/io.hpp"

using namespace promo;
using Clock = std::chrono::steady_clock;

namespace {

struct Failure {
    std::string message;
};

void expect(bool ok, const std::string& message) {
    if (!ok) throw Failure{message};
}

const SweepOptions kSweep{9, 0};

InflatedTree star_spec() { return InflatedTree{{-1, 0, 0}, {1, 2, 1}, {}}; }
InflatedTree tree_spec() { return InflatedTree{{-1, 0, 0, 2, 2}, {1, 2, 1, 1, 1}, {}}; }
InflatedTree point_spec(int fiber) { return InflatedTree{{-1}, {fiber}, {}}; }

Poset grid22() {
    const int dims[] = {2, 2};
    return make_product_of_chains(dims);
}

// --- criteria -------------------------------------------------------------

void chain_tangled_counts(std::string& detail) {
    const auto start = Clock::now();
    const std::uint64_t expected[] = {1, 2, 6, 24, 120, 720};
    for (int n = 2; n <= 7; ++n) {
        const BigInt count = count_tangled(make_chain(n), kSweep);
        expect(count == BigInt(expected[n - 2]),
               "chain-" + std::to_string(n) + " tangled count " + count.str() + " != " +
                   std::to_string(expected[n - 2]));
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    expect(secs < 60.0, "runtime budget exceeded: " + std::to_string(secs) + "s");
    detail = "n=2..7 counts (1,2,6,24,120,720), " + std::to_string(secs) + "s";
}

void forest_reduction(std::string& detail) {
    const InflatedForest two_chains{{point_spec(2), point_spec(2)}};
    const BigInt f1 = tangled_count_forest(two_chains);
    const BigInt b1 = count_tangled(realize(two_chains).poset, kSweep);
    expect(f1 == BigInt(4) && b1 == BigInt(4),
           "two disjoint 2-chains: formula " + f1.str() + ", sweep " + b1.str());

    const InflatedForest chain_point{{point_spec(2), point_spec(1)}};
    const BigInt f2 = tangled_count_forest(chain_point);
    const BigInt b2 = count_tangled(realize(chain_point).poset, kSweep);
    expect(f2 == BigInt(1) && b2 == BigInt(1),
           "2-chain + point: formula " + f2.str() + ", sweep " + b2.str());
    detail = "two 2-chains -> 4, 2-chain+point -> 1, formula = sweep";
}

void inflated_star(std::string& detail) {
    const int leaves[] = {2, 1};
    const BigInt corolla = tangled_count_star(1, leaves);
    const BigInt tree = tangled_count_tree(star_spec());
    const BigInt swept = count_tangled(realize(star_spec()).poset, kSweep);
    expect(corolla == BigInt(3), "star formula gave " + corolla.str());
    expect(tree == BigInt(3), "tree formula gave " + tree.str());
    expect(swept == BigInt(3), "sweep gave " + swept.str());
    detail = "root fiber 1 over (2,1): 3 by formula and by 4! sweep";
}

void inflated_tree(std::string& detail) {
    const auto start = Clock::now();
    const BigInt formula = tangled_count_tree(tree_spec());
    const BigInt swept = count_tangled(realize(tree_spec()).poset, kSweep);
    expect(formula == BigInt(30), "formula gave " + formula.str());
    expect(swept == BigInt(30), "sweep gave " + swept.str());
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    expect(secs < 5.0, "runtime budget exceeded: " + std::to_string(secs) + "s");
    detail = "5!*(1/4) = 30 = 6! sweep, " + std::to_string(secs) + "s";
}

void unique_minimum(std::string& detail) {
    const BigInt formula = tangled_count_unique_min(4, 1);
    const BigInt swept = count_tangled(grid22(), kSweep);
    expect(formula == BigInt(6), "(n-r)(n-2)! gave " + formula.str());
    expect(swept == BigInt(6), "sweep gave " + swept.str());
    detail = "2x2 grid: 6 tangled labelings, sweep = (n-r)(n-2)!";
}

void chain_profiles(std::string& detail) {
    for (int n = 1; n <= 7; ++n) {
        const SortingProfile sp = sorting_profile(make_chain(n), kSweep);
        expect(sp.a[0] == BigInt(1), "a_0 != 1 at n=" + std::to_string(n));
        for (int k = 1; k <= n - 1; ++k) {
            const BigInt want = BigInt::pow(BigInt(k + 1), static_cast<unsigned>(n - k - 1)) *
                                BigInt::factorial(static_cast<unsigned>(k + 1));
            expect(sp.a[static_cast<std::size_t>(k)] == want,
                   "chain-" + std::to_string(n) + " a_" + std::to_string(k) + " = " +
                       sp.a[static_cast<std::size_t>(k)].str() + " != " + want.str());
        }
    }
    const SortingProfile s3 = sorting_profile(make_chain(3), kSweep);
    const SortingProfile s4 = sorting_profile(make_chain(4), kSweep);
    expect(s3.a == std::vector<BigInt>{1, 4, 6}, "spot value a(3)");
    expect(s4.a == std::vector<BigInt>{1, 8, 18, 24}, "spot value a(4)");
    detail = "a_k = (k+1)^{n-k-1} (k+1)! for n <= 7; spots (1,4,6) and (1,8,18,24)";
}

void toggle_equivalence(std::string& detail) {
    std::uint64_t checked = 0;
    for (const auto& [name, p] : default_catalog(6, 50)) {
        oracles::for_each_labeling(p.size(), [&](const std::vector<int>& perm) {
            Labeling l(perm);
            expect(promote(p, l).output == promote_via_toggles(p, l),
                   name + ": toggle mismatch");
            ++checked;
        });
    }
    detail = std::to_string(checked) + " labelings, zero mismatches";
}

void termination(std::string& detail) {
    std::uint64_t checked = 0;
    for (const auto& [name, p] : default_catalog(6, 50)) {
        oracles::for_each_labeling(p.size(), [&](const std::vector<int>& perm) {
            Labeling l(perm);
            for (int step = 0; step < p.size() - 1; ++step) l = promote(p, l).output;
            expect(is_linear_extension(p, l), name + ": unsorted after n-1 promotions");
            ++checked;
        });
    }
    detail = std::to_string(checked) + " labelings sorted within n-1 promotions";
}

void frozen_lemmas(std::string& detail) {
    std::uint64_t pairs = 0;
    for (const auto& [name, p] : default_catalog(6, 50)) {
        const int n = p.size();
        oracles::for_each_labeling(n, [&](const std::vector<int>& perm) {
            Labeling l(perm);
            FrozenReport prev = frozen_report(p, l);
            for (int gamma = 0; gamma <= n; ++gamma) {
                const FrozenReport cur = frozen_report(p, l);
                expect(cur.count >= gamma,
                       name + ": top labels not frozen at gamma=" + std::to_string(gamma));
                if (gamma > 0) {
                    const bool grew =
                        prev.count < cur.count &&
                        std::includes(cur.frozen.begin(), cur.frozen.end(), prev.frozen.begin(),
                                      prev.frozen.end());
                    expect(prev.count == n || grew, name + ": frozen set failed to grow");
                }
                ++pairs;
                if (gamma < n) {
                    prev = cur;
                    l = promote(p, l).output;
                }
            }
        });
    }
    detail = std::to_string(pairs) + " (labeling, gamma) pairs";
}

void thm1_equivalence(std::string& detail) {
    int cases = 0;
    for (const auto& [name, p] : default_catalog(6, 50)) {
        for (int k = 0; k + 2 <= p.size(); ++k) {
            const KUntangledWitness ideal_route = has_k_untangled(p, k);
            const auto swept = find_k_untangled_sweep(p, k, kSweep);
            expect(ideal_route.exists == swept.has_value(),
                   name + ": criterion mismatch at k=" + std::to_string(k));
            if (ideal_route.exists)
                expect(is_k_untangled(p, *ideal_route.witness, k),
                       name + ": constructed witness fails at k=" + std::to_string(k));
            ++cases;
        }
    }
    detail = std::to_string(cases) + " (poset, k) cases, ideal criterion = witness search";
}

void tangled_minimality(std::string& detail) {
    std::vector<Poset> posets;
    for (int n = 2; n <= 7; ++n) posets.push_back(make_chain(n));
    posets.push_back(realize(InflatedForest{{point_spec(2), point_spec(2)}}).poset);
    posets.push_back(realize(InflatedForest{{point_spec(2), point_spec(1)}}).poset);
    posets.push_back(realize(star_spec()).poset);
    posets.push_back(realize(tree_spec()).poset);
    posets.push_back(grid22());
    std::uint64_t tangled_seen = 0;
    for (const Poset& p : posets) {
        oracles::for_each_labeling(p.size(), [&](const std::vector<int>& perm) {
            Labeling l(perm);
            if (!is_tangled(p, l)) return;
            ++tangled_seen;
            expect(p.is_minimal(l.element_with(p.size())),
                   "tangled labeling with label n off a minimal element");
        });
    }
    detail = std::to_string(tangled_seen) + " tangled labelings, all with n on a minimal element";
}

void preimage_counts(std::string& detail) {
    std::uint64_t checked = 0;
    for (const auto& [name, p] : default_catalog(5, 50)) {
        const int n = p.size();
        std::map<std::vector<int>, std::uint64_t> image_count;
        oracles::for_each_labeling(n, [&](const std::vector<int>& perm) {
            ++image_count[promote(p, Labeling(perm)).output.labels()];
        });
        std::uint64_t total = 0;
        oracles::for_each_labeling(n, [&](const std::vector<int>& perm) {
            const Labeling l(perm);
            const std::vector<Labeling> pre = preimages(p, l);
            const auto it = image_count.find(perm);
            const std::uint64_t brute = it == image_count.end() ? 0 : it->second;
            if (!p.is_maximal(l.element_with(n)))
                expect(pre.empty(), name + ": preimages for a non-maximal n carrier");
            expect(pre.size() == brute, name + ": golden-chain count != swept preimages");
            for (const Labeling& q : pre)
                expect(promote(p, q).output == l, name + ": preimage does not promote back");
            total += pre.size();
            ++checked;
        });
        expect(total == oracles::factorial(n), name + ": preimage total != n!");
    }
    detail = std::to_string(checked) + " labelings, golden-chain counts = sweep, totals n!";
}

void sortable_counts(std::string& detail) {
    for (const auto& [name, p] : default_catalog(7, 50)) {
        const SortableCount c = count_sortable(p, kSweep);
        expect(c.agree(), name + ": formula " + c.via_formula.str() + " != sweep " +
                              c.via_sweep.str());
    }
    expect(count_sortable(make_chain(3), kSweep).via_formula == BigInt(4), "chain-3 spot value");
    expect(count_sortable(make_chain(4), kSweep).via_formula == BigInt(8), "chain-4 spot value");
    detail = "formula = sweep on the full catalog (n <= 7); chain spots 4 and 8";
}

void bubble_equivalence(std::string& detail) {
    std::uint64_t checked = 0;
    for (int n = 1; n <= 6; ++n) {
        const ExperimentReport rep = check_bubble_equivalence(n, kSweep);
        expect(rep.all_passed(), "mismatch at n=" + std::to_string(n));
        checked += oracles::factorial(n);
    }
    detail = std::to_string(checked) + " labelings across chains n <= 6";
}

// Independent route for the triage below: sorting times measured with the
// toggle composition instead of the chain-walk promotion.
std::vector<BigInt> a_hat_via_toggles(const Poset& p) {
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(p.size()), 0);
    oracles::for_each_labeling(p.size(), [&](const std::vector<int>& perm) {
        Labeling l(perm);
        int t = 0;
        while (!is_linear_extension(p, l)) {
            l = promote_via_toggles(p, l);
            ++t;
        }
        ++hist[static_cast<std::size_t>(t)];
    });
    std::vector<BigInt> out;
    for (std::uint64_t h : hist) out.emplace_back(h);
    return out;
}

bool unimodal(const std::vector<BigInt>& v) {
    std::size_t i = 0;
    while (i + 1 < v.size() && v[i] <= v[i + 1]) ++i;
    while (i + 1 < v.size() && v[i] >= v[i + 1]) ++i;
    return v.empty() || i == v.size() - 1;
}

void conjecture_scan(std::string& detail) {
    ScanOptions opts;
    opts.cap = 6;
    opts.random_count = 200;
    const ExperimentReport rep = scan_conjectures(opts);
    expect(rep.skips() == 0, "scan skipped a poset");
    if (rep.all_passed()) {
        detail = std::to_string(rep.checks.size()) +
                 " posets: tangled <= (n-1)!, a_hat unimodal, a log-concave";
        return;
    }
    // Triage every counterexample against an independent dynamics route
    // before concluding anything. A reproduced failure is a genuine finding;
    // a non-reproduced one would be an implementation bug.
    int confirmed = 0, unconfirmed = 0;
    std::string sample;
    for (const CheckResult& c : rep.checks) {
        if (c.status != CheckStatus::fail) continue;
        const Poset p = poset_from_json(c.witness->poset);
        const std::vector<BigInt> hat = a_hat_via_toggles(p);
        const SortingProfile swept = sorting_profile(p, kSweep);
        const bool reproduced = hat == swept.a_hat && !unimodal(hat);
        reproduced ? ++confirmed : ++unconfirmed;
        if (sample.empty() && reproduced)
            sample = c.name + " " + c.witness->poset.dump() + " " + c.witness->note;
    }
    expect(unconfirmed == 0,
           std::to_string(unconfirmed) + " counterexamples did NOT reproduce under the "
                                         "toggle route: implementation bug");
    expect(confirmed == 0,
           std::to_string(confirmed) +
           " a_hat unimodality counterexamples, each reproduced by the independent "
           "toggle-route oracle (smallest at n=5); e.g. " + sample);
    detail = "";
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string name;
        std::function<void(std::string&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "chain tangled counts (n-1)!", chain_tangled_counts},
        {2, "forest reduction formula", forest_reduction},
        {3, "inflated star formula", inflated_star},
        {4, "inflated tree formula", inflated_tree},
        {5, "unique-minimum formula", unique_minimum},
        {6, "chain sorting profiles", chain_profiles},
        {7, "toggle equivalence", toggle_equivalence},
        {8, "termination within n-1 promotions", termination},
        {9, "frozen growth and top-label freeze", frozen_lemmas},
        {10, "k-untangled ideal criterion", thm1_equivalence},
        {11, "tangled labelings have n minimal", tangled_minimality},
        {12, "preimage counts via golden chains", preimage_counts},
        {13, "sortable count formula", sortable_counts},
        {14, "bubble-sort equivalence on chains", bubble_equivalence},
        {15, "conjecture scan with zero counterexamples", conjecture_scan},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = Clock::now();
        std::string detail;
        bool ok = true;
        std::string why;
        try {
            c.run(detail);
        } catch (const Failure& f) {
            ok = false;
            why = f.message;
        } catch (const std::exception& e) {
            ok = false;
            why = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (ok) {
            std::printf("PASS %2d  %-42s %7.2fs  %s\n", c.id, c.name.c_str(), secs,
                        detail.c_str());
        } else {
            ++failures;
            std::printf("FAIL %2d  %-42s %7.2fs  %s\n", c.id, c.name.c_str(), secs, why.c_str());
        }
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures;
}
