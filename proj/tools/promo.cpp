// Command-line surface for the promotion-sorting library: apply promotion,
// measure sorting times and profiles, evaluate the closed-form tangled
// counts, generate posets, and run the verification and conjecture scans.
//
// Exit codes: 0 all checks pass, 1 a counterexample or disagreement was
// found, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "promo/checks.hpp"
#include "promo/dynamics.hpp"
#include "promo/enumerate.hpp"
#include "promo/families.hpp"
#include "promo/inflation.hpp"
#include "promo/io.hpp"

namespace {

using nlohmann::json;

struct CommonOpts {
    int cap = 9;
    int jobs = 0;
    std::string out;
    std::string format = "text";
};

void add_common(CLI::App* sub, CommonOpts& c) {
    sub->add_option("--cap", c.cap, "size cap for exhaustive sweeps");
    sub->add_option("--jobs", c.jobs, "worker count (0 = all cores)");
    sub->add_option("--out", c.out, "also write the result to this file");
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
}

void write_output(const std::string& text, const json& structured, const CommonOpts& c) {
    const bool structured_wanted = c.format == "structured";
    if (structured_wanted)
        std::cout << structured.dump(2) << "\n";
    else
        std::cout << text;
    if (!c.out.empty()) {
        std::ofstream f(c.out);
        if (!f) throw std::invalid_argument("cannot write " + c.out);
        if (structured_wanted)
            f << structured.dump(2) << "\n";
        else
            f << text;
    }
}

int emit_report(const promo::ExperimentReport& rep, const CommonOpts& c) {
    write_output(rep.to_text(), rep.to_json(true), c);
    return rep.failures() > 0 ? 1 : 0;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        out.push_back(std::stoi(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

std::string labeling_str(const promo::Labeling& l) { return json(l.labels()).dump(); }

int run_promote(const std::string& poset_path, const std::string& labeling_arg, int steps,
                bool trace, const CommonOpts& c) {
    const promo::Poset p = promo::load_poset(poset_path);
    promo::Labeling l = promo::parse_labeling_arg(labeling_arg);
    json jsteps = json::array();
    std::string text;
    for (int s = 0; s < steps; ++s) {
        promo::PromotionTrace t = promo::promote(p, l);
        jsteps.push_back({{"chain", t.chain}, {"labeling", t.output.labels()}});
        if (trace) {
            text += "step " + std::to_string(s + 1) + ": chain " + json(t.chain).dump() +
                    " -> " + labeling_str(t.output) + "\n";
        }
        l = t.output;
    }
    text += labeling_str(l) + "\n";
    write_output(text, json{{"steps", jsteps}, {"output", l.labels()}}, c);
    return 0;
}

int run_sort_time(const std::string& poset_path, const std::string& labeling_arg,
                  const CommonOpts& c) {
    const promo::Poset p = promo::load_poset(poset_path);
    const int t = promo::sorting_time(p, promo::parse_labeling_arg(labeling_arg));
    write_output(std::to_string(t) + "\n", json{{"sorting_time", t}}, c);
    return 0;
}

json bigints_to_json(const std::vector<promo::BigInt>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

int run_profile(const std::string& poset_path, const CommonOpts& c) {
    const promo::Poset p = promo::load_poset(poset_path);
    const promo::SortingProfile profile =
        promo::sorting_profile(p, promo::SweepOptions{c.cap, c.jobs});
    promo::BigInt weighted(0);
    for (std::size_t k = 0; k < profile.a_hat.size(); ++k)
        weighted += promo::BigInt(static_cast<long long>(k)) * profile.a_hat[k];
    const promo::BigInt total = profile.a.empty() ? promo::BigInt(1) : profile.a.back();
    const promo::Rational mean(weighted, total);
    const double approx =
        profile.a.empty() ? 0.0 : std::stod(weighted.str()) / std::stod(total.str());
    std::string text;
    text += "a     =";
    for (const auto& x : profile.a) text += " " + x.str();
    text += "\na_hat =";
    for (const auto& x : profile.a_hat) text += " " + x.str();
    text += "\nmean sorting time = " + mean.str() + " (~" + std::to_string(approx) + ")\n";
    write_output(text,
                 json{{"n", p.size()},
                      {"a", bigints_to_json(profile.a)},
                      {"a_hat", bigints_to_json(profile.a_hat)},
                      {"mean_sorting_time", {{"exact", mean.str()}, {"approx", approx}}}},
                 c);
    return 0;
}

int run_count(const std::string& what, const std::string& poset_path, int k,
              const CommonOpts& c) {
    const promo::Poset p = promo::load_poset(poset_path);
    const promo::SweepOptions sweep{c.cap, c.jobs};
    if (what == "linext") {
        const promo::BigInt count = promo::count_linear_extensions(p);
        write_output(count.str() + "\n", json{{"linear_extensions", count.str()}}, c);
        return 0;
    }
    if (what == "tangled" || what == "k-untangled") {
        const int kk = what == "tangled" ? 0 : k;
        if (kk < 0) throw std::invalid_argument("k-untangled counts need --k");
        const promo::BigInt count = promo::count_k_untangled(p, kk, sweep);
        write_output(count.str() + "\n", json{{"k", kk}, {"count", count.str()}}, c);
        return 0;
    }
    // sortable: both routes, which must agree
    const promo::SortableCount counts = promo::count_sortable(p, sweep);
    const std::string verdict = counts.agree() ? "agree" : "DISAGREE";
    write_output("formula = " + counts.via_formula.str() + "\nsweep   = " +
                     counts.via_sweep.str() + "\n" + verdict + "\n",
                 json{{"formula", counts.via_formula.str()},
                      {"sweep", counts.via_sweep.str()},
                      {"agree", counts.agree()}},
                 c);
    return counts.agree() ? 0 : 1;
}

int run_formula(const std::string& what, const std::string& spec_path, int root_fiber,
                const std::string& leaf_fibers, long long n, long long r, const CommonOpts& c) {
    promo::BigInt count;
    if (what == "tree") {
        const promo::InflatedForest f = promo::load_forest(spec_path);
        if (f.trees.size() != 1)
            throw std::invalid_argument("formula tree expects a single-tree spec");
        count = promo::tangled_count_tree(f.trees[0]);
    } else if (what == "forest") {
        count = promo::tangled_count_forest(promo::load_forest(spec_path));
    } else if (what == "star") {
        const std::vector<int> leaves = parse_int_list(leaf_fibers);
        count = promo::tangled_count_star(root_fiber, leaves);
    } else {  // unique-min
        count = promo::tangled_count_unique_min(n, r);
    }
    write_output(count.str() + "\n", json{{"tangled", count.str()}}, c);
    return 0;
}

int run_generate(const std::string& family, int n, const std::string& dims,
                 const std::string& parents, const std::string& spec_path, double density,
                 std::uint64_t seed, const CommonOpts& c) {
    promo::Poset p;
    if (family == "chain") {
        p = promo::make_chain(n);
    } else if (family == "antichain") {
        p = promo::make_antichain(n);
    } else if (family == "product-of-chains") {
        const std::vector<int> d = parse_int_list(dims);
        p = promo::make_product_of_chains(d);
    } else if (family == "rooted-tree") {
        const std::vector<int> par = parse_int_list(parents);
        p = promo::make_rooted_tree(par);
    } else if (family == "inflated-forest") {
        p = promo::realize(promo::load_forest(spec_path)).poset;
    } else if (family == "random") {
        p = promo::make_random(n, density, seed);
    } else {
        throw std::invalid_argument("unknown family: " + family);
    }
    const json doc = promo::poset_to_json(p);
    write_output(doc.dump() + "\n", doc, c);
    return 0;
}

int run_verify(int random_count, const CommonOpts& c) {
    promo::VerifyOptions opts;
    opts.cap = c.cap;
    opts.jobs = c.jobs;
    opts.random_count = random_count;
    return emit_report(promo::verify_all(opts), c);
}

int run_scan(const std::vector<std::string>& files, int random_count, std::uint64_t seed,
             double density, bool no_catalog, const CommonOpts& c) {
    promo::ScanOptions opts;
    opts.cap = c.cap;
    opts.jobs = c.jobs;
    opts.random_count = random_count;
    opts.seed = seed;
    opts.density = density;
    opts.include_catalog = !no_catalog;
    if (!files.empty()) {
        std::vector<promo::NamedPoset> posets;
        for (const auto& f : files) posets.push_back({f, promo::load_poset(f)});
        return emit_report(promo::scan_conjectures(posets, opts), c);
    }
    return emit_report(promo::scan_conjectures(opts), c);
}

int run(int argc, char** argv) {
    CLI::App app{"promotion sorting on poset labelings"};
    app.require_subcommand(1);
    int rc = 0;

    auto* cmd_promote = app.add_subcommand("promote", "apply promotion to a labeling");
    CommonOpts c_promote;
    std::string promote_poset, promote_labeling;
    int promote_steps = 1;
    bool promote_trace = false;
    cmd_promote->add_option("poset", promote_poset, "poset file")->required();
    cmd_promote->add_option("labeling", promote_labeling, "labeling (file, JSON, or comma list)")
        ->required();
    cmd_promote->add_option("--steps", promote_steps, "number of applications")
        ->check(CLI::NonNegativeNumber);
    cmd_promote->add_flag("--trace", promote_trace, "print each promotion chain");
    add_common(cmd_promote, c_promote);
    cmd_promote->callback([&]() {
        rc = run_promote(promote_poset, promote_labeling, promote_steps, promote_trace, c_promote);
    });

    auto* cmd_sort = app.add_subcommand("sort-time", "promotions needed to sort a labeling");
    CommonOpts c_sort;
    std::string sort_poset, sort_labeling;
    cmd_sort->add_option("poset", sort_poset, "poset file")->required();
    cmd_sort->add_option("labeling", sort_labeling, "labeling (file, JSON, or comma list)")
        ->required();
    add_common(cmd_sort, c_sort);
    cmd_sort->callback([&]() { rc = run_sort_time(sort_poset, sort_labeling, c_sort); });

    auto* cmd_profile = app.add_subcommand("profile", "sorting profile a_k and a_hat_k");
    CommonOpts c_profile;
    std::string profile_poset;
    cmd_profile->add_option("poset", profile_poset, "poset file")->required();
    add_common(cmd_profile, c_profile);
    cmd_profile->callback([&]() { rc = run_profile(profile_poset, c_profile); });

    auto* cmd_count = app.add_subcommand("count", "exact counts over all labelings");
    CommonOpts c_count;
    std::string count_what, count_poset;
    int count_k = -1;
    cmd_count->add_option("what", count_what, "tangled | k-untangled | sortable | linext")
        ->required()
        ->check(CLI::IsMember({"tangled", "k-untangled", "sortable", "linext"}));
    cmd_count->add_option("poset", count_poset, "poset file")->required();
    cmd_count->add_option("--k", count_k, "k for k-untangled");
    add_common(cmd_count, c_count);
    cmd_count->callback([&]() { rc = run_count(count_what, count_poset, count_k, c_count); });

    auto* cmd_formula = app.add_subcommand("formula", "closed-form tangled counts");
    CommonOpts c_formula;
    std::string formula_what, formula_spec, formula_leaves;
    int formula_root = 1;
    long long formula_n = 0, formula_r = 1;
    cmd_formula->add_option("what", formula_what, "tree | forest | star | unique-min")
        ->required()
        ->check(CLI::IsMember({"tree", "forest", "star", "unique-min"}));
    cmd_formula->add_option("spec", formula_spec, "forest spec file (tree/forest)");
    cmd_formula->add_option("--root-fiber", formula_root, "star root fiber size");
    cmd_formula->add_option("--leaf-fibers", formula_leaves, "star leaf fiber sizes, comma list");
    cmd_formula->add_option("--n", formula_n, "element count (unique-min)");
    cmd_formula->add_option("--r", formula_r, "component count (unique-min)");
    add_common(cmd_formula, c_formula);
    cmd_formula->callback([&]() {
        rc = run_formula(formula_what, formula_spec, formula_root, formula_leaves, formula_n,
                         formula_r, c_formula);
    });

    auto* cmd_generate = app.add_subcommand("generate", "emit a poset file for a family");
    CommonOpts c_generate;
    std::string gen_family, gen_dims, gen_parents, gen_spec;
    int gen_n = 0;
    double gen_density = 0.35;
    std::uint64_t gen_seed = 1;
    cmd_generate
        ->add_option("family", gen_family,
                     "chain | antichain | product-of-chains | rooted-tree | inflated-forest | random")
        ->required();
    cmd_generate->add_option("--n", gen_n, "element count (chain/antichain/random)");
    cmd_generate->add_option("--dims", gen_dims, "chain sizes, comma list (product-of-chains)");
    cmd_generate->add_option("--parents", gen_parents, "parent array, comma list (rooted-tree)");
    cmd_generate->add_option("--spec", gen_spec, "forest spec file (inflated-forest)");
    cmd_generate->add_option("--density", gen_density, "relation density (random)");
    cmd_generate->add_option("--seed", gen_seed, "random seed");
    add_common(cmd_generate, c_generate);
    cmd_generate->callback([&]() {
        rc = run_generate(gen_family, gen_n, gen_dims, gen_parents, gen_spec, gen_density,
                          gen_seed, c_generate);
    });

    auto* cmd_verify = app.add_subcommand("verify", "run every invariant suite on the catalog");
    CommonOpts c_verify;
    c_verify.cap = 6;
    int verify_random = 50;
    cmd_verify->add_option("--random-count", verify_random, "seeded random posets in the catalog");
    add_common(cmd_verify, c_verify);
    cmd_verify->callback([&]() { rc = run_verify(verify_random, c_verify); });

    auto* cmd_scan = app.add_subcommand("scan-conjectures",
                                        "tangled bound, unimodality, log-concavity scan");
    CommonOpts c_scan;
    c_scan.cap = 6;
    std::vector<std::string> scan_files;
    int scan_random = 200;
    std::uint64_t scan_seed = 1;
    double scan_density = 0.35;
    bool scan_no_catalog = false;
    cmd_scan->add_option("posets", scan_files, "poset files to scan (default: catalog + random)");
    cmd_scan->add_option("--count", scan_random, "number of seeded random posets");
    cmd_scan->add_option("--seeds", scan_seed, "base seed for the random posets");
    cmd_scan->add_option("--density", scan_density, "density of the random posets");
    cmd_scan->add_flag("--no-catalog", scan_no_catalog, "scan only the random posets");
    add_common(cmd_scan, c_scan);
    cmd_scan->callback([&]() {
        rc = run_scan(scan_files, scan_random, scan_seed, scan_density, scan_no_catalog, c_scan);
    });

    auto* cmd_bubble = app.add_subcommand("bubble-check",
                                          "chain promotion vs bubble pass, all n! labelings");
    CommonOpts c_bubble;
    int bubble_n = 0;
    cmd_bubble->add_option("n", bubble_n, "chain length")->required();
    add_common(cmd_bubble, c_bubble);
    cmd_bubble->callback([&]() {
        rc = emit_report(
            promo::check_bubble_equivalence(bubble_n, promo::SweepOptions{c_bubble.cap, c_bubble.jobs}),
            c_bubble);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
