#include "promo/checks.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <sstream>

#include "promo/dynamics.hpp"
#include "promo/families.hpp"
#include "promo/io.hpp"

namespace promo {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <class F>
void for_each_labeling(int n, F&& fn) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        fn(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

CheckWitness make_witness(const Poset& p, std::vector<int> labeling, std::string note) {
    return {poset_to_json(p), std::move(labeling), std::move(note)};
}

bool is_unimodal(const std::vector<BigInt>& v) {
    std::size_t i = 0;
    while (i + 1 < v.size() && v[i] <= v[i + 1]) ++i;
    while (i + 1 < v.size() && v[i] >= v[i + 1]) ++i;
    return v.empty() || i == v.size() - 1;
}

bool is_log_concave(const std::vector<BigInt>& v) {
    for (std::size_t i = 1; i + 1 < v.size(); ++i)
        if (v[i - 1] * v[i + 1] > v[i] * v[i]) return false;
    return true;
}

std::string join_bigints(const std::vector<BigInt>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
    return out + ")";
}

InflatedTree star_spec(int root_fiber, std::vector<int> leaf_fibers) {
    InflatedTree t;
    t.parent.push_back(-1);
    t.fiber.push_back(root_fiber);
    for (int f : leaf_fibers) {
        t.parent.push_back(0);
        t.fiber.push_back(f);
    }
    return t;
}

// root -> {a, b}, b -> {c, d}; vertex order root, a, b, c, d.
InflatedTree two_level_tree(int fiber_a, int fiber_c) {
    InflatedTree t;
    t.parent = {-1, 0, 0, 2, 2};
    t.fiber = {1, fiber_a, 1, fiber_c, 1};
    return t;
}

InflatedTree point_spec(int fiber) {
    InflatedTree t;
    t.parent = {-1};
    t.fiber = {fiber};
    return t;
}

}  // namespace

std::vector<int> bubble_sort_pass(std::span<const int> perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : perm) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("bubble pass needs a permutation of 1..n");
        seen[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<int> out(perm.begin(), perm.end());
    for (int i = 0; i + 1 < n; ++i)
        if (out[static_cast<std::size_t>(i)] > out[static_cast<std::size_t>(i + 1)])
            std::swap(out[static_cast<std::size_t>(i)], out[static_cast<std::size_t>(i + 1)]);
    return out;
}

ExperimentReport check_bubble_equivalence(int n, const SweepOptions& opts) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > opts.cap)
        throw resource_error("bubble equivalence sweep exceeds the cap of " +
                             std::to_string(opts.cap));
    auto start = Clock::now();
    ExperimentReport rep;
    rep.title = "bubble-equivalence";
    rep.params = {{"n", std::to_string(n)}};
    const Poset chain = make_chain(n);
    std::uint64_t checked = 0;
    CheckResult result{"inverse-word-commutes-with-bubble-pass", CheckStatus::pass, "", {}};
    for_each_labeling(n, [&](const std::vector<int>& perm) {
        if (result.status == CheckStatus::fail) return;
        std::vector<int> inv(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)] - 1)] = i + 1;
        const Labeling promoted = promote(chain, Labeling(perm)).output;
        std::vector<int> inv_promoted(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            inv_promoted[static_cast<std::size_t>(promoted.label_of(i) - 1)] = i + 1;
        if (inv_promoted != bubble_sort_pass(inv)) {
            result.status = CheckStatus::fail;
            result.witness = make_witness(chain, perm, "inverse word disagrees with bubble pass");
        }
        ++checked;
    });
    result.details = std::to_string(checked) + " labelings";
    rep.checks.push_back(std::move(result));
    rep.elapsed_ms = ms_since(start);
    return rep;
}

ExperimentReport check_chain_ak(int n, const SweepOptions& opts) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    auto start = Clock::now();
    ExperimentReport rep;
    rep.title = "chain-profile";
    rep.params = {{"n", std::to_string(n)}};
    const Poset chain = make_chain(n);
    const SortingProfile profile = sorting_profile(chain, opts);
    std::vector<BigInt> expected{BigInt(1ll)};
    for (int k = 1; k <= n - 1; ++k)
        expected.push_back(BigInt::pow(BigInt(static_cast<long long>(k + 1)),
                                       static_cast<unsigned>(n - k - 1)) *
                           BigInt::factorial(static_cast<unsigned>(k + 1)));
    CheckResult result{"profile-matches-closed-form", CheckStatus::pass,
                       "a = " + join_bigints(profile.a), {}};
    if (profile.a != expected) {
        result.status = CheckStatus::fail;
        result.witness = make_witness(chain, {}, "expected a = " + join_bigints(expected));
    }
    rep.checks.push_back(std::move(result));
    rep.elapsed_ms = ms_since(start);
    return rep;
}

std::vector<NamedPoset> default_catalog(int cap, int random_count) {
    std::vector<NamedPoset> out;
    auto add = [&](const std::string& name, Poset p) {
        if (p.size() <= cap) out.push_back({name, std::move(p)});
    };
    for (int n = 1; n <= cap; ++n) add("chain-" + std::to_string(n), make_chain(n));
    for (int n = 1; n <= cap; ++n) add("antichain-" + std::to_string(n), make_antichain(n));
    const int grid22[] = {2, 2};
    const int grid23[] = {2, 3};
    add("grid-2x2", make_product_of_chains(grid22));
    add("grid-2x3", make_product_of_chains(grid23));
    add("star-inflation-4", realize(star_spec(1, {2, 1})).poset);
    add("tree-inflation-6", realize(two_level_tree(2, 1)).poset);
    const double densities[] = {0.2, 0.35, 0.5};
    for (int i = 0; i < random_count; ++i) {
        const int span = std::max(1, std::min(5, cap - 1));
        const int n = 2 + i % span;
        const std::uint64_t seed = 1000 + static_cast<std::uint64_t>(i);
        add("random-n" + std::to_string(n) + "-s" + std::to_string(seed),
            make_random(n, densities[i % 3], seed));
    }
    return out;
}

std::vector<std::pair<std::string, InflatedForest>> formula_spec_catalog(int max_n) {
    std::vector<std::pair<std::string, InflatedForest>> out;
    auto add = [&](const std::string& name, InflatedForest f) {
        if (total_size(f) <= max_n) out.emplace_back(name, std::move(f));
    };
    for (int n = 2; n <= 6; ++n)
        add("point-fiber-" + std::to_string(n), InflatedForest{{point_spec(n)}});
    add("star-1-21", InflatedForest{{star_spec(1, {2, 1})}});
    add("star-1-32", InflatedForest{{star_spec(1, {3, 2})}});
    add("star-2-221", InflatedForest{{star_spec(2, {2, 2, 1})}});
    add("tree-6", InflatedForest{{two_level_tree(2, 1)}});
    add("tree-8", InflatedForest{{two_level_tree(3, 2)}});
    add("forest-two-2chains", InflatedForest{{point_spec(2), point_spec(2)}});
    add("forest-2chain-point", InflatedForest{{point_spec(2), point_spec(1)}});
    add("forest-star-2chain", InflatedForest{{star_spec(1, {2, 1}), point_spec(2)}});
    add("path-as-inflation", InflatedForest{{InflatedTree{{-1, 0, 1}, {1, 1, 1}, {}}}});
    return out;
}

ExperimentReport scan_conjectures(const std::vector<NamedPoset>& posets, const ScanOptions& opts) {
    auto start = Clock::now();
    ExperimentReport rep;
    rep.title = "conjecture-scan";
    rep.params = {{"cap", std::to_string(opts.cap)},
                  {"posets", std::to_string(posets.size())}};
    const SweepOptions sweep{opts.cap, opts.jobs};
    for (const auto& [name, p] : posets) {
        const int n = p.size();
        if (n > opts.cap) {
            rep.checks.push_back({name, CheckStatus::skip,
                                  "skipped: " + std::to_string(n) + " elements exceeds cap", {}});
            continue;
        }
        const SortingProfile profile = sorting_profile(p, sweep);
        const BigInt tangled =
            n >= 2 ? profile.a_hat[static_cast<std::size_t>(n - 1)] : BigInt(0ll);
        const BigInt bound = BigInt::factorial(static_cast<unsigned>(n - 1));
        const bool bound_ok = tangled <= bound;
        const bool unimodal_ok = is_unimodal(profile.a_hat);
        const bool logconcave_ok = is_log_concave(profile.a);
        if (bound_ok && unimodal_ok && logconcave_ok) {
            rep.checks.push_back({name, CheckStatus::pass,
                                  "tangled " + tangled.str() + " <= " + bound.str() +
                                      "; a_hat unimodal; a log-concave",
                                  {}});
        } else {
            std::string note = "a = " + join_bigints(profile.a) +
                               ", a_hat = " + join_bigints(profile.a_hat) +
                               ", tangled = " + tangled.str();
            std::string what;
            if (!bound_ok) what += "tangled bound exceeded; ";
            if (!unimodal_ok) what += "a_hat not unimodal; ";
            if (!logconcave_ok) what += "a not log-concave; ";
            rep.checks.push_back(
                {name, CheckStatus::fail, what, make_witness(p, {}, note)});
        }
    }
    rep.elapsed_ms = ms_since(start);
    return rep;
}

ExperimentReport scan_conjectures(const ScanOptions& opts) {
    std::vector<NamedPoset> posets;
    if (opts.include_catalog) posets = default_catalog(opts.cap, 50);
    const int span = std::max(1, std::min(5, opts.cap - 1));
    for (int i = 0; i < opts.random_count; ++i) {
        const int n = 2 + i % span;
        const std::uint64_t seed = opts.seed * 2654435761ull + static_cast<std::uint64_t>(i);
        posets.push_back({"scan-random-n" + std::to_string(n) + "-s" + std::to_string(seed),
                          make_random(n, opts.density, seed)});
    }
    ExperimentReport rep = scan_conjectures(posets, opts);
    rep.params.push_back({"seed", std::to_string(opts.seed)});
    rep.params.push_back({"random_count", std::to_string(opts.random_count)});
    return rep;
}

namespace {

struct VerifyContext {
    const std::vector<NamedPoset>& catalog;
    SweepOptions sweep;
    std::function<Labeling(const Poset&, const Labeling&)> promote_fn;
};

CheckResult check_toggle_equivalence(const VerifyContext& ctx) {
    CheckResult out{"toggle-composition-equals-promotion", CheckStatus::pass, "", {}};
    std::uint64_t checked = 0;
    for (const auto& [name, p] : ctx.catalog) {
        for_each_labeling(p.size(), [&](const std::vector<int>& perm) {
            if (out.status == CheckStatus::fail) return;
            Labeling l(perm);
            if (ctx.promote_fn(p, l) != promote_via_toggles(p, l)) {
                out.status = CheckStatus::fail;
                out.witness = make_witness(p, perm, name + ": promotion != toggle composition");
            }
            ++checked;
        });
        if (out.status == CheckStatus::fail) break;
    }
    out.details = std::to_string(checked) + " labelings";
    return out;
}

CheckResult check_termination(const VerifyContext& ctx) {
    CheckResult out{"sorts-within-n-minus-1-promotions", CheckStatus::pass, "", {}};
    std::uint64_t checked = 0;
    for (const auto& [name, p] : ctx.catalog) {
        for_each_labeling(p.size(), [&](const std::vector<int>& perm) {
            if (out.status == CheckStatus::fail) return;
            Labeling l(perm);
            for (int step = 0; step < p.size() - 1; ++step) l = promote(p, l).output;
            if (!is_linear_extension(p, l)) {
                out.status = CheckStatus::fail;
                out.witness = make_witness(p, perm, name + ": not sorted after n-1 promotions");
            }
            ++checked;
        });
        if (out.status == CheckStatus::fail) break;
    }
    out.details = std::to_string(checked) + " labelings";
    return out;
}

CheckResult check_frozen_growth(const VerifyContext& ctx) {
    CheckResult out{"frozen-set-strict-growth", CheckStatus::pass, "", {}};
    for (const auto& [name, p] : ctx.catalog) {
        for_each_labeling(p.size(), [&](const std::vector<int>& perm) {
            if (out.status == CheckStatus::fail) return;
            Labeling l(perm);
            while (!is_linear_extension(p, l)) {
                const FrozenReport before = frozen_report(p, l);
                l = promote(p, l).output;
                const FrozenReport after = frozen_report(p, l);
                const bool contained = std::includes(after.frozen.begin(), after.frozen.end(),
                                                     before.frozen.begin(), before.frozen.end());
                if (!contained || before.count >= after.count) {
                    out.status = CheckStatus::fail;
                    out.witness =
                        make_witness(p, perm, name + ": frozen set did not grow strictly");
                    return;
                }
            }
        });
        if (out.status == CheckStatus::fail) break;
    }
    return out;
}

CheckResult check_top_label_freeze(const VerifyContext& ctx) {
    CheckResult out{"top-labels-freeze", CheckStatus::pass, "", {}};
    for (const auto& [name, p] : ctx.catalog) {
        const int n = p.size();
        for_each_labeling(n, [&](const std::vector<int>& perm) {
            if (out.status == CheckStatus::fail) return;
            Labeling l(perm);
            for (int gamma = 0; gamma <= n; ++gamma) {
                const FrozenReport fr = frozen_report(p, l);
                // labels n-gamma+1..n must already be frozen
                if (fr.count < gamma) {
                    out.status = CheckStatus::fail;
                    out.witness = make_witness(
                        p, perm, name + ": top " + std::to_string(gamma) +
                                     " labels not frozen after " + std::to_string(gamma) +
                                     " promotions");
                    return;
                }
                if (gamma < n) l = promote(p, l).output;
            }
        });
        if (out.status == CheckStatus::fail) break;
    }
    return out;
}

CheckResult check_component_locality(const VerifyContext& ctx) {
    CheckResult out{"labels-stay-in-their-component", CheckStatus::pass, "", {}};
    for (const auto& [name, p] : ctx.catalog) {
        const int n = p.size();
        const std::vector<int> comp = component_index(p);
        for_each_labeling(n, [&](const std::vector<int>& perm) {
            if (out.status == CheckStatus::fail) return;
            Labeling original(perm);
            Labeling l = original;
            for (int gamma = 0; gamma <= n; ++gamma) {
                for (int j = 1; j + gamma <= n; ++j) {
                    if (comp[static_cast<std::size_t>(original.element_with(j + gamma))] !=
                        comp[static_cast<std::size_t>(l.element_with(j))]) {
                        out.status = CheckStatus::fail;
                        out.witness = make_witness(p, perm, name + ": label drifted across components");
                        return;
                    }
                }
                if (gamma < n) l = promote(p, l).output;
            }
        });
        if (out.status == CheckStatus::fail) break;
    }
    return out;
}

CheckResult check_kuntangled_equivalence(const VerifyContext& ctx) {
    CheckResult out{"kuntangled-ideal-criterion", CheckStatus::pass, "", {}};
    for (const auto& [name, p] : ctx.catalog) {
        const int n = p.size();
        for (int k = 0; k <= n - 2; ++k) {
            const KUntangledWitness ideal_route = has_k_untangled(p, k);
            const auto sweep_route = find_k_untangled_sweep(p, k, ctx.sweep);
            if (ideal_route.exists != sweep_route.has_value()) {
                out.status = CheckStatus::fail;
                out.witness = make_witness(p, {}, name + ": ideal criterion and sweep disagree at k=" +
                                                      std::to_string(k));
                return out;
            }
            if (ideal_route.exists && !is_k_untangled(p, *ideal_route.witness, k)) {
                out.status = CheckStatus::fail;
                out.witness = make_witness(p, ideal_route.witness->labels(),
                                           name + ": constructed witness not k-untangled, k=" +
                                               std::to_string(k));
                return out;
            }
        }
    }
    return out;
}

CheckResult check_n_minimal(const VerifyContext& ctx) {
    CheckResult out{"tangled-top-label-on-minimal", CheckStatus::pass, "", {}};
    for (const auto& [name, p] : ctx.catalog) {
        for_each_labeling(p.size(), [&](const std::vector<int>& perm) {
            if (out.status == CheckStatus::fail) return;
            Labeling l(perm);
            if (is_tangled(p, l) && !p.is_minimal(l.element_with(p.size()))) {
                out.status = CheckStatus::fail;
                out.witness = make_witness(p, perm, name + ": tangled labeling with non-minimal n");
            }
        });
        if (out.status == CheckStatus::fail) break;
    }
    return out;
}

std::uint64_t golden_chain_count_oracle(const Poset& p, const Labeling& l) {
    const int n = p.size();
    const int top = l.element_with(n);
    std::vector<int> golden = golden_elements(p, l);
    std::vector<char> is_golden(static_cast<std::size_t>(n), 0);
    for (int x : golden) is_golden[static_cast<std::size_t>(x)] = 1;
    std::uint64_t count = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!(mask & (1u << top))) continue;
        bool ok = true;
        std::vector<int> members;
        for (int x = 0; x < n && ok; ++x) {
            if (!(mask & (1u << x))) continue;
            if (!is_golden[static_cast<std::size_t>(x)]) ok = false;
            members.push_back(x);
        }
        for (std::size_t i = 0; i < members.size() && ok; ++i)
            for (std::size_t j = i + 1; j < members.size() && ok; ++j)
                if (!p.less(members[i], members[j]) && !p.less(members[j], members[i])) ok = false;
        if (ok) ++count;
    }
    return count;
}

CheckResult check_preimages(const VerifyContext& ctx) {
    CheckResult out{"preimages-via-golden-chains", CheckStatus::pass, "", {}};
    for (const auto& [name, p] : ctx.catalog) {
        const int n = p.size();
        if (n > 5) continue;
        std::map<std::vector<int>, std::uint64_t> image_count;
        for_each_labeling(n, [&](const std::vector<int>& perm) {
            ++image_count[promote(p, Labeling(perm)).output.labels()];
        });
        std::uint64_t total = 0;
        for_each_labeling(n, [&](const std::vector<int>& perm) {
            if (out.status == CheckStatus::fail) return;
            const Labeling l(perm);
            const std::vector<Labeling> pre = preimages(p, l);
            const auto it = image_count.find(perm);
            const std::uint64_t brute = it == image_count.end() ? 0 : it->second;
            std::uint64_t expected_golden = 0;
            if (p.is_maximal(l.element_with(n)))
                expected_golden = golden_chain_count_oracle(p, l);
            bool ok = pre.size() == brute && pre.size() == expected_golden;
            std::map<std::vector<int>, int> distinct;
            for (const Labeling& q : pre) {
                ++distinct[q.labels()];
                if (promote(p, q).output != l) ok = false;
            }
            if (distinct.size() != pre.size()) ok = false;
            if (!ok) {
                out.status = CheckStatus::fail;
                out.witness = make_witness(p, perm, name + ": preimage mismatch (constructed " +
                                                       std::to_string(pre.size()) + ", swept " +
                                                       std::to_string(brute) + ", golden " +
                                                       std::to_string(expected_golden) + ")");
                return;
            }
            total += pre.size();
        });
        if (out.status == CheckStatus::fail) return out;
        std::uint64_t expected_total = 1;
        for (int i = 2; i <= n; ++i) expected_total *= static_cast<std::uint64_t>(i);
        if (total != expected_total) {
            out.status = CheckStatus::fail;
            out.witness = make_witness(p, {}, name + ": preimage total != n!");
            return out;
        }
    }
    return out;
}

CheckResult check_sortable_agreement(const VerifyContext& ctx) {
    CheckResult out{"sortable-count-agreement", CheckStatus::pass, "", {}};
    for (const auto& [name, p] : ctx.catalog) {
        const SortableCount counts = count_sortable(p, ctx.sweep);
        if (!counts.agree()) {
            out.status = CheckStatus::fail;
            out.witness = make_witness(p, {}, name + ": formula " + counts.via_formula.str() +
                                                  " != sweep " + counts.via_sweep.str());
            return out;
        }
    }
    return out;
}

CheckResult check_closed_forms(const VerifyContext& ctx) {
    CheckResult out{"closed-form-vs-sweep", CheckStatus::pass, "", {}};
    int compared = 0;
    for (const auto& [name, spec] : formula_spec_catalog(ctx.sweep.cap)) {
        const BigInt formula = tangled_count_forest(spec);
        const BigInt swept = count_tangled(realize(spec).poset, ctx.sweep);
        ++compared;
        if (formula != swept) {
            out.status = CheckStatus::fail;
            out.witness = make_witness(realize(spec).poset, {},
                                       name + ": formula " + formula.str() + " != sweep " +
                                           swept.str());
            return out;
        }
    }
    out.details = std::to_string(compared) + " specs";
    return out;
}

CheckResult check_le_bijection(const VerifyContext& ctx) {
    CheckResult out{"promotion-bijects-linear-extensions", CheckStatus::pass, "", {}};
    for (const auto& [name, p] : ctx.catalog) {
        std::map<std::vector<int>, int> extensions, images;
        for_each_labeling(p.size(), [&](const std::vector<int>& perm) {
            Labeling l(perm);
            if (!is_linear_extension(p, l)) return;
            ++extensions[perm];
            ++images[promote(p, l).output.labels()];
        });
        if (extensions != images) {
            out.status = CheckStatus::fail;
            out.witness = make_witness(p, {}, name + ": promotion does not permute L(P)");
            return out;
        }
    }
    return out;
}

CheckResult check_tangled_frozen_characterization(const VerifyContext& ctx) {
    CheckResult out{"tangled-iff-minimal-frozen-growth", CheckStatus::pass, "", {}};
    for (const auto& [name, p] : ctx.catalog) {
        const int n = p.size();
        if (n < 2) continue;
        for_each_labeling(n, [&](const std::vector<int>& perm) {
            if (out.status == CheckStatus::fail) return;
            Labeling l(perm);
            bool minimal_growth = true;
            Labeling cur = l;
            for (int gamma = 0; gamma <= n - 2; ++gamma) {
                if (frozen_report(p, cur).count != gamma) {
                    minimal_growth = false;
                    break;
                }
                cur = promote(p, cur).output;
            }
            if (minimal_growth != is_tangled(p, l)) {
                out.status = CheckStatus::fail;
                out.witness = make_witness(p, perm, name + ": frozen-count characterization failed");
            }
        });
        if (out.status == CheckStatus::fail) break;
    }
    return out;
}

}  // namespace

ExperimentReport verify_all(const VerifyOptions& opts) {
    auto start = Clock::now();
    const std::vector<NamedPoset> catalog = default_catalog(opts.cap, opts.random_count);
    VerifyContext ctx{catalog,
                      SweepOptions{opts.cap, opts.jobs},
                      opts.promote_impl
                          ? opts.promote_impl
                          : [](const Poset& p, const Labeling& l) { return promote(p, l).output; }};
    ExperimentReport rep;
    rep.title = "verify-all";
    rep.params = {{"cap", std::to_string(opts.cap)},
                  {"posets", std::to_string(catalog.size())},
                  {"jobs", std::to_string(opts.jobs)}};
    rep.checks.push_back(check_toggle_equivalence(ctx));
    rep.checks.push_back(check_termination(ctx));
    rep.checks.push_back(check_frozen_growth(ctx));
    rep.checks.push_back(check_top_label_freeze(ctx));
    rep.checks.push_back(check_component_locality(ctx));
    rep.checks.push_back(check_kuntangled_equivalence(ctx));
    rep.checks.push_back(check_n_minimal(ctx));
    rep.checks.push_back(check_preimages(ctx));
    rep.checks.push_back(check_sortable_agreement(ctx));
    rep.checks.push_back(check_closed_forms(ctx));
    rep.checks.push_back(check_le_bijection(ctx));
    rep.checks.push_back(check_tangled_frozen_characterization(ctx));
    rep.elapsed_ms = ms_since(start);
    return rep;
}

}  // namespace promo
