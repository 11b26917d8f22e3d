#include "suites.hpp"

#include <chrono>
#include <sstream>

#include "generators.hpp"
#include "treepack/clique_dp.hpp"
#include "treepack/errors.hpp"
#include "treepack/gadgets.hpp"
#include "treepack/hpack_dp.hpp"
#include "treepack/oracle.hpp"
#include "treepack/reductions.hpp"
#include "treepack/relation.hpp"
#include "treepack/treedec.hpp"

namespace treepack::tools {

using nlohmann::json;

void SuiteReport::record(bool pass, const std::string& what) {
    ++cases;
    if (pass) {
        ++passed;
    } else if (failures.size() < kMaxFailures) {
        failures.push_back(what);
    }
}

std::string SuiteReport::to_json(bool with_timing) const {
    json j;
    j["suite"] = suite;
    j["seed"] = seed;
    j["cases"] = cases;
    j["passed"] = passed;
    j["ok"] = ok();
    j["failures"] = failures;
    j["details"] = details;
    if (with_timing) j["seconds"] = seconds;
    return j.dump();
}

std::string SuiteReport::to_human() const {
    std::ostringstream os;
    os << suite << " (seed " << seed << "): " << passed << "/" << cases << (ok() ? " pass" : " FAIL");
    os << " in " << seconds << " s\n";
    for (const auto& f : failures) os << "  failed: " << f << "\n";
    for (auto it = details.begin(); it != details.end(); ++it) os << "  " << it.key() << ": " << it.value().dump() << "\n";
    return os.str();
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string graph_tag(int index, const Graph& g) {
    return "graph " + std::to_string(index) + " (n=" + std::to_string(g.num_vertices()) +
           ", m=" + std::to_string(g.num_edges()) + ")";
}

SearchLimits limits_of(const SuiteOptions& o) {
    SearchLimits l;
    l.node_budget = o.oracle_budget;
    l.stop = o.stop;
    return l;
}

NiceTreeDecomposition checked_nice(const Graph& g, const TreeDecomposition& td) {
    auto v = validate(td, g);
    if (!v.ok) throw std::logic_error("generated decomposition invalid: " + v.message);
    return nicify(td);
}

// Instances of the clique-DP suite: n in 4..10, edge probability cycling
// through 0.3, 0.5, 0.8.
std::vector<Graph> clique_suite_graphs(std::uint64_t seed) {
    Rng rng(seed);
    const double probs[] = {0.3, 0.5, 0.8};
    std::vector<Graph> out;
    for (int i = 0; i < pinned::kCliqueGraphs; ++i) out.push_back(erdos_renyi(4 + i % 7, probs[i % 3], rng));
    return out;
}

struct HpackCase {
    Graph graph;
    TreeDecomposition td;
    bool small = true;
};

// n in 4..9 with edge probability cycling through 0.3, 0.5, 0.7, then partial
// 3-trees with n in 10..30.
std::vector<HpackCase> hpack_suite_graphs(std::uint64_t seed) {
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<HpackCase> out;
    const double probs[] = {0.3, 0.5, 0.7};
    for (int i = 0; i < pinned::kHpackSmallGraphs; ++i) {
        Graph g = erdos_renyi(4 + i % 6, probs[i % 3], rng);
        out.push_back({g, heuristic_treedec(g), true});
    }
    for (int i = 0; i < pinned::kHpackTreeGraphs; ++i) {
        int n = 10 + static_cast<int>(std::uniform_int_distribution<int>(0, 20)(rng));
        auto kt = partial_ktree(n, 3, 0.7, rng);
        out.push_back({kt.graph, kt.td, false});
    }
    return out;
}

const std::vector<std::pair<std::string, Graph>>& hpack_patterns() {
    static const std::vector<std::pair<std::string, Graph>> p = {
        {"K3", complete_graph(3)}, {"P3", path_graph(3)}, {"paw", paw_graph()}, {"C4", cycle_graph(4)}, {"K4", complete_graph(4)}};
    return p;
}

SuiteReport suite_clique(std::uint64_t seed, const SuiteOptions& opt) {
    SuiteReport rep;
    auto graphs = clique_suite_graphs(seed);
    int partition_checks = 0, partition_mismatches = 0, configurations = 0, config_failures = 0;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const Graph& g = graphs[gi];
        int n = g.num_vertices();
        auto ntd = checked_nice(g, heuristic_treedec(g));
        std::string bad;
        for (int c = 1; c <= 3; ++c)
            for (int d = 3; d <= 4; ++d)
                for (Variant var : {Variant::Dist, Variant::Arb}) {
                    CliqueDPOptions o;
                    o.want_witness = true;
                    o.stop = opt.stop;
                    auto dp = solve_clique_packing(g, ntd, c, d, var, o);
                    auto oracle = max_packing_bruteforce(g, complete_graph(d), c, var, limits_of(opt));
                    long long wsize = 0;
                    for (const auto& pc : dp.witness) wsize += pc.multiplicity;
                    std::string why;
                    bool witness_ok = wsize == dp.value &&
                                      check_packing(g, complete_graph(d), dp.witness, var, std::vector<int>(n, c), {}, &why);
                    std::string tag = graph_tag(static_cast<int>(gi), g) + " c=" + std::to_string(c) +
                                      " d=" + std::to_string(d) + " " + to_string(var);
                    ++configurations;
                    if (dp.value != oracle.value || !witness_ok) {
                        ++config_failures;
                        if (bad.empty())
                            bad = tag + ": dp " + std::to_string(dp.value) + " oracle " + std::to_string(oracle.value) +
                                  (witness_ok ? "" : " witness " + why);
                    }
                    bool dp_part = (c * n) % d == 0 && dp.value == static_cast<long long>(c) * n / d;
                    bool or_part = exact_cover_feasible(g, complete_graph(d), std::vector<int>(n, c), var, limits_of(opt)).feasible;
                    ++partition_checks;
                    if (dp_part != or_part) ++partition_mismatches;
                }
        rep.record(bad.empty(), bad);
    }
    rep.details["graphs"] = graphs.size();
    rep.details["configurations"] = configurations;
    rep.details["configuration_failures"] = config_failures;
    rep.details["partition_checks"] = partition_checks;
    rep.details["partition_mismatches"] = partition_mismatches;
    return rep;
}

SuiteReport suite_hpack(std::uint64_t seed, const SuiteOptions& opt) {
    SuiteReport rep;
    auto cases = hpack_suite_graphs(seed);
    int partition_checks = 0, partition_mismatches = 0;
    int max_width_small = 0, max_width_tree = 0, witness_checks = 0;
    for (std::size_t gi = 0; gi < cases.size(); ++gi) {
        const auto& cs = cases[gi];
        const Graph& g = cs.graph;
        int n = g.num_vertices();
        auto ntd = checked_nice(g, cs.td);
        (cs.small ? max_width_small : max_width_tree) = std::max(cs.small ? max_width_small : max_width_tree, ntd.width());
        for (const auto& [name, h] : hpack_patterns()) {
            HPackOptions o;
            o.stop = opt.stop;
            auto dp = solve_h_packing(g, ntd, h, o);
            auto oracle = max_packing_bruteforce(g, h, 1, Variant::Dist, limits_of(opt));
            // Witnesses keep every table alive, so they are only rebuilt when
            // the tables are small enough to hold at once.
            std::size_t stored = 0;
            for (const auto& s : dp.nodes) stored += s.entries;
            std::string why;
            bool witness_ok = true;
            if (stored <= pinned::kHpackWitnessEntries) {
                o.want_witness = true;
                auto traced = solve_h_packing(g, ntd, h, o);
                witness_ok = traced.value == dp.value && static_cast<long long>(traced.witness.size()) == dp.value &&
                             traced.closures_in_trace == dp.value &&
                             check_packing(g, h, traced.witness, Variant::Dist, std::vector<int>(n, 1), {}, &why);
                ++witness_checks;
            }
            rep.record(dp.value == oracle.value && witness_ok,
                       graph_tag(static_cast<int>(gi), g) + " " + name + ": dp " + std::to_string(dp.value) + " oracle " +
                           std::to_string(oracle.value) + (witness_ok ? "" : " witness " + why));
            int hs = h.num_vertices();
            bool dp_part = n % hs == 0 && dp.value == n / hs;
            bool or_part = exact_cover_feasible(g, h, std::vector<int>(n, 1), Variant::Dist, limits_of(opt)).feasible;
            ++partition_checks;
            if (dp_part != or_part) ++partition_mismatches;
        }
    }
    rep.details["small_graphs"] = pinned::kHpackSmallGraphs;
    rep.details["tree_graphs"] = pinned::kHpackTreeGraphs;
    rep.details["max_width_small"] = max_width_small;
    rep.details["max_width_tree"] = max_width_tree;
    rep.details["witness_checks"] = witness_checks;
    rep.details["partition_checks"] = partition_checks;
    rep.details["partition_mismatches"] = partition_mismatches;
    return rep;
}

SuiteReport suite_state_space(std::uint64_t seed, const SuiteOptions& opt) {
    SuiteReport rep;
    Rng rng(seed + 3);
    const double probs[] = {0.3, 0.5, 0.8};
    int clique_nodes = 0;
    for (int gi = 0; gi < 20; ++gi) {
        Graph g = erdos_renyi(5 + gi % 5, probs[gi % 3], rng);
        auto ntd = checked_nice(g, heuristic_treedec(g));
        for (int c = 1; c <= 3; ++c)
            for (int d = 3; d <= 4; ++d) {
                CliqueDPOptions o;
                o.dense = true;
                o.stop = opt.stop;
                auto dense = solve_clique_packing(g, ntd, c, d, Variant::Arb, o);
                bool laws = true;
                for (const auto& st : dense.nodes) {
                    std::size_t expect = 1;
                    for (int i = 0; i < st.bag_size; ++i) expect *= static_cast<std::size_t>(c + 1);
                    laws = laws && st.entries == expect;
                    ++clique_nodes;
                }
                auto sparse = solve_clique_packing(g, ntd, c, d, Variant::Arb);
                rep.record(laws && dense.value == sparse.value,
                           "clique " + graph_tag(gi, g) + " c=" + std::to_string(c) + " d=" + std::to_string(d));
            }
    }
    int hpack_nodes = 0;
    long double worst_ratio = 0;
    Graph k3 = complete_graph(3);
    for (int gi = 0; gi < 10; ++gi) {
        auto kt = partial_ktree(6 + gi % 7, 3, 0.8, rng);
        auto ntd = checked_nice(kt.graph, kt.td);
        HPackOptions o;
        o.dense = true;
        o.dense_max_bag = 4;
        o.stop = opt.stop;
        auto dense = solve_h_packing(kt.graph, ntd, k3, o);
        bool laws = true;
        for (std::size_t t = 0; t < ntd.nodes.size(); ++t) {
            const auto& st = dense.nodes[t];
            if (st.bag_size > 4) continue;
            long double bound = type_count_bound(st.bag_size, 3);
            std::size_t enumerated = enumerate_types(kt.graph, ntd.nodes[t].bag, k3, 4).size();
            laws = laws && static_cast<long double>(st.entries) <= bound && st.entries == enumerated;
            if (st.bag_size > 0) worst_ratio = std::max(worst_ratio, static_cast<long double>(st.entries) / bound);
            ++hpack_nodes;
        }
        auto sparse = solve_h_packing(kt.graph, ntd, k3);
        rep.record(laws && dense.value == sparse.value, "hpack " + graph_tag(gi, kt.graph));
    }
    rep.details["clique_nodes_checked"] = clique_nodes;
    rep.details["hpack_nodes_checked"] = hpack_nodes;
    rep.details["hpack_max_fill_of_bound"] = static_cast<double>(worst_ratio);
    return rep;
}

SuiteReport suite_join(std::uint64_t seed, const SuiteOptions&) {
    SuiteReport rep;
    Rng rng(seed + 4);
    for (int i = 0; i < pinned::kJoinPairs; ++i) {
        int width = 1 + static_cast<int>(std::uniform_int_distribution<int>(0, 4)(rng));
        int c = 1 + static_cast<int>(std::uniform_int_distribution<int>(0, 2)(rng));
        double absent = std::uniform_real_distribution<double>(0.0, 0.9)(rng);
        int span = 1 + static_cast<int>(std::uniform_int_distribution<int>(0, 40)(rng));
        DenseTable a(width, c), b(width, c);
        for (auto* t : {&a, &b})
            for (auto& v : t->values)
                v = std::uniform_real_distribution<double>(0.0, 1.0)(rng) < absent
                        ? DenseTable::kAbsent
                        : static_cast<long long>(std::uniform_int_distribution<int>(0, span)(rng));
        auto naive = join_naive(a, b);
        auto conv = join_convolution(a, b);
        rep.record(naive.values == conv.values,
                   "pair " + std::to_string(i) + " width=" + std::to_string(width) + " c=" + std::to_string(c));
    }
    return rep;
}

SuiteReport suite_gadgets(std::uint64_t, const SuiteOptions& opt) {
    SuiteReport rep;
    NeqSource k3 = NeqSource::builtin(complete_graph(3));
    std::vector<std::pair<std::string, Gadget>> list;
    list.emplace_back("neq(1,3)", neq_gadget(1, 3));
    list.emplace_back("neq(2,3)", neq_gadget(2, 3));
    list.emplace_back("neq(1,4)", neq_gadget(1, 4));
    list.emplace_back("eq_single(1,K3)", eq_gadget_single(1, k3));
    list.emplace_back("toggle(K3)", toggle_gadget(k3));
    // Weights 1, 1, 1 (residue 1) and 0, 3 (residue 0).
    list.emplace_back("arb_relation(K3,one-hot)", arb_relation_gadget(k3, Relation(3, 1, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
    list.emplace_back("arb_relation(K3,all-or-none)", arb_relation_gadget(k3, Relation(3, 1, {{0, 0, 0}, {1, 1, 1}})));
    json per = json::object();
    for (const auto& [name, g] : list) {
        auto t0 = Clock::now();
        auto report = verify_gadget(g, limits_of(opt));
        double secs = since(t0);
        bool fast = secs < pinned::kGadgetSecondsLimit;
        rep.record(report.ok() && fast, name + ": " + report.to_json() + (fast ? "" : " (over time limit)"));
        per[name] = {{"vertices", g.graph.num_vertices()}, {"dist_ok", report.dist_ok}, {"arb_ok", report.arb_ok}};
    }
    rep.details["gadgets"] = per;
    return rep;
}

SuiteReport suite_multi_single(std::uint64_t seed, const SuiteOptions& opt) {
    SuiteReport rep;
    Rng rng(seed + 6);
    std::vector<Graph> graphs = {complete_graph(3), complete_graph(4)};
    const double probs[] = {0.5, 0.7, 0.9};
    for (int i = 0; static_cast<int>(graphs.size()) < pinned::kMultiSingleGraphs; ++i) {
        if (i % 2 == 0) {
            graphs.push_back(erdos_renyi(3 + i % 6, probs[i % 3], rng));
        } else {
            int c = 1 + (i / 2) % 2;
            graphs.push_back(planted_clique_partition(i % 4 == 1 ? 6 : 3, 3, c, 0.2, rng));
        }
    }
    int yes = 0;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const Graph& g = graphs[gi];
        int n = g.num_vertices();
        for (int c = 1; c <= 2; ++c) {
            bool multi = exact_cover_feasible(g, complete_graph(3), std::vector<int>(n, c), Variant::Arb, limits_of(opt)).feasible;
            TreeDecomposition base = heuristic_treedec(g);
            auto out = reduce_multi_to_single(g, c, 3, base);
            auto v = validate(out.decomposition, out.graph);
            bool width_ok = out.decomposition.width() <= base.width() + out.max_gadget_bag;
            bool single = false;
            if (v.ok) {
                CliqueDPOptions o;
                o.stop = opt.stop;
                single = solve_clique_partition(out.graph, nicify(out.decomposition), c, 3, Variant::Dist, o);
            }
            yes += multi;
            rep.record(v.ok && width_ok && multi == single,
                       graph_tag(static_cast<int>(gi), g) + " c=" + std::to_string(c) + ": multi " + std::to_string(multi) +
                           " single " + std::to_string(single) + (v.ok ? "" : " invalid decomposition: " + v.message) +
                           (width_ok ? "" : " width law violated"));
        }
    }
    rep.details["graphs"] = graphs.size();
    rep.details["feasible_inputs"] = yes;
    return rep;
}

SuiteReport suite_csp(std::uint64_t seed, const SuiteOptions& opt) {
    SuiteReport rep;
    Rng rng(seed + 7);
    const int c = 1, d = 3, B = 2;
    int ell = choose_ell(B, c, d);
    auto phi = phi_encoding(B, ell, c, d);
    Relation w(ell, c, phi);
    rep.record(w.size() == phi.size() && is_regular(w, 0, d), "phi image injective and (0,d)-regular");
    rep.record(is_regular(complement(w, c), 0, d), "W^C (0,d)-regular");
    rep.record(is_regular(rel_copy(w, c), 0, d), "COPY (0,d)-regular");

    GadgetVerificationCache cache(limits_of(opt));
    int max_excess = 0, relations_checked = 0;
    for (int i = 0; i < pinned::kCspInstances; ++i) {
        int n = 2 + i % 3;
        Csp2Instance csp = random_csp(n, B, 0.7, 0.5, rng);
        std::string tag = "csp " + std::to_string(i) + " (n=" + std::to_string(n) + ", m=" +
                          std::to_string(csp.constraints.size()) + ")";
        auto layout = csp_layout(csp);
        auto out = reduce_csp_to_multiclique(csp, c, d);
        auto v = validate(out.decomposition, out.graph);
        int p = layout.width;
        int biggest = 0;
        for (const auto& bag : out.decomposition.bags) biggest = std::max(biggest, static_cast<int>(bag.size()));
        int excess = biggest - ell * (p + 1);
        max_excess = std::max(max_excess, excess);
        bool regular = true;
        for (const auto& g : out.gadget_types) {
            regular = regular && is_regular(g.claimed, 0, d);
            ++relations_checked;
        }
        bool verified = true;
        for (const auto& g : out.gadget_types) verified = verified && cache.verify(g).ok();
        long long a_count = 0, expected = 0;
        for (const auto& [name, group] : out.certificates)
            if (name[0] == 'a') a_count += static_cast<long long>(group.size());
        for (int x = 0; x < n; ++x) {
            int first = -1, last = -1;
            for (int j = 0; j < static_cast<int>(layout.bags.size()); ++j)
                if (std::binary_search(layout.bags[j].begin(), layout.bags[j].end(), x)) {
                    if (first < 0) first = j;
                    last = j;
                }
            expected += static_cast<long long>(ell) * (last - first + 2);
        }
        rep.record(v.ok, tag + ": decomposition " + (v.ok ? "valid" : v.message));
        rep.record(excess <= pinned::kCspGadgetConstant,
                   tag + ": bag law, largest bag " + std::to_string(biggest) + " with p=" + std::to_string(p));
        rep.record(regular, tag + ": relation regularity");
        rep.record(verified, tag + ": gadget relations verified by oracle");
        rep.record(a_count == expected, tag + ": a-vertex count " + std::to_string(a_count) + " vs " + std::to_string(expected));
    }

    // Degenerate alphabet: the reduced instance is solved on its own decomposition.
    std::vector<std::pair<std::string, Csp2Instance>> tiny;
    {
        Csp2Instance sat;
        sat.n = 2;
        sat.B = 1;
        sat.constraints.push_back({0, 1, {{1, 1}}});
        tiny.emplace_back("B=1 satisfiable", sat);
        Csp2Instance unsat = sat;
        unsat.constraints[0].allowed.clear();
        tiny.emplace_back("B=1 empty constraint", unsat);
        Csp2Instance lone;
        lone.n = 1;
        lone.B = 1;
        tiny.emplace_back("B=1 no constraints", lone);
    }
    int round_trips = 0;
    for (const auto& [name, csp] : tiny) {
        bool truth = csp_bruteforce(csp);
        auto out = reduce_csp_to_multiclique(csp, c, d);
        bool feasible = false;
        if (!out.unsatisfiable) {
            auto v = validate(out.decomposition, out.graph);
            if (!v.ok) {
                rep.record(false, name + ": decomposition invalid");
                continue;
            }
            CliqueDPOptions o;
            o.stop = opt.stop;
            feasible = solve_clique_partition(out.graph, nicify(out.decomposition), c, d, Variant::Arb, o);
        }
        ++round_trips;
        rep.record(feasible == truth, name + ": reduction " + std::to_string(feasible) + " vs satisfiable " + std::to_string(truth));
    }
    rep.details["ell"] = ell;
    rep.details["max_bag_excess"] = max_excess;
    rep.details["gadget_constant"] = pinned::kCspGadgetConstant;
    rep.details["relations_checked"] = relations_checked;
    rep.details["gadgets_verified"] = cache.size();
    rep.details["round_trips"] = round_trips;
    return rep;
}

SuiteReport suite_permiset(std::uint64_t seed, const SuiteOptions& opt) {
    SuiteReport rep;
    Rng rng(seed + 8);
    Graph c4 = cycle_graph(4);
    for (const char* name : {"K3", "P3", "paw", "K4", "P5"}) {
        bool rejected = false;
        try {
            PermIsetInstance inst;
            inst.k = 2;
            inst.graph = make_graph(4, {{0, 3}});
            reduce_permiset_to_hpartition(inst, named_pattern(name));
        } catch (const InputError&) {
            rejected = true;
        }
        rep.record(rejected, std::string("block graph ") + name + " rejected");
    }

    NeqSource src = [&] {
        for (int v = 0; v < 4; ++v) {
            try {
                return verified_neq_source(doubling_neq_candidate(c4, v), limits_of(opt));
            } catch (const InputError&) {
            }
        }
        throw std::logic_error("no CNEQ_1 source for C4");
    }();
    auto split = separator_split(c4);
    GadgetVerificationCache cache(limits_of(opt));
    json widths = json::object();
    for (int k = 2; k <= 3; ++k) {
        std::vector<std::pair<std::string, PermIsetInstance>> insts;
        PermIsetInstance single;
        single.k = k;
        single.graph = make_graph(k * k, {{PermIsetInstance::cell(k, 0, 0), PermIsetInstance::cell(k, 1, 1)}});
        insts.emplace_back("single edge", single);
        PermIsetInstance same_row = single;
        same_row.graph = make_graph(k * k, {{PermIsetInstance::cell(k, 0, 0), PermIsetInstance::cell(k, 0, 1)},
                                            {PermIsetInstance::cell(k, 0, 1), PermIsetInstance::cell(k, 1, 0)}});
        insts.emplace_back("same-row edge", same_row);
        PermIsetInstance none = single;
        none.graph = make_graph(k * k, {});
        insts.emplace_back("edgeless", none);
        for (int r = 0; r < 3; ++r) insts.emplace_back("random " + std::to_string(r), random_permiset(k, 0.3, rng));
        int worst = 0;
        for (const auto& [name, inst] : insts) {
            std::string tag = "k=" + std::to_string(k) + " " + name;
            auto out = reduce_permiset_to_hpartition(inst, c4, src);
            auto v = validate(out.decomposition, out.graph);
            int w = out.decomposition.width();
            worst = std::max(worst, w);
            rep.record(v.ok, tag + ": decomposition " + (v.ok ? "valid" : v.message));
            rep.record(w <= pinned::kPermAlpha * k, tag + ": width " + std::to_string(w));
            bool verified = true;
            for (const auto& g : out.gadget_types) verified = verified && cache.verify(g).ok();
            rep.record(verified, tag + ": gadget relations verified by oracle");
            if (k == 2 && name == std::string("single edge")) {
                bool no_q = true;
                for (const auto& use : out.gadgets) no_q = no_q && use.tag[0] != 'Q';
                rep.record(no_q && split.components.size() == 2 && split.up.size() + split.down.size() == 2,
                           tag + ": structure (t=2, |S|=2, no Q gadgets)");
            }
        }
        widths[std::to_string(k)] = worst;
    }
    rep.details["widths"] = widths;
    rep.details["alpha"] = pinned::kPermAlpha;
    rep.details["gadgets_verified"] = cache.size();
    return rep;
}

SuiteReport suite_partition(std::uint64_t seed, const SuiteOptions& opt) {
    SuiteReport rep;
    for (const auto& [name, fn] : {std::pair<std::string, SuiteFn>{"oracle-vs-clique-dp", suite_clique},
                                   std::pair<std::string, SuiteFn>{"oracle-vs-hpack", suite_hpack}}) {
        auto sub = fn(seed, opt);
        int checks = sub.details["partition_checks"].get<int>();
        int bad = sub.details["partition_mismatches"].get<int>();
        for (int i = 0; i < checks; ++i) rep.record(i >= bad, name + ": partition mismatch");
        rep.details[name] = {{"checks", checks}, {"mismatches", bad}};
    }
    return rep;
}

}  // namespace

const std::vector<SuiteInfo>& registered_suites() {
    static const std::vector<SuiteInfo> suites = {
        {"oracle-vs-clique-dp", "clique DP against the brute-force packing oracle", suite_clique},
        {"oracle-vs-hpack", "H-packing DP against the oracle for K3, P3, paw, C4, K4", suite_hpack},
        {"state-space", "dense table sizes and type-count bounds", suite_state_space},
        {"join-fidelity", "naive and convolution joins agree on random tables", suite_join},
        {"gadget-relations", "oracle-realized relations of the listed gadgets", suite_gadgets},
        {"multi-to-single", "multi-partition feasibility preserved by the single reduction", suite_multi_single},
        {"csp-reduction", "structural checks on the 2-CSP reduction", suite_csp},
        {"permiset-reduction", "structural checks on the permutation independent set reduction", suite_permiset},
        {"partition-consistency", "partition as maximum packing agrees with exact cover", suite_partition},
    };
    return suites;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, const SuiteOptions& options) {
    for (const auto& s : registered_suites())
        if (s.name == name) {
            auto t0 = Clock::now();
            SuiteReport rep = s.run(seed, options);
            rep.suite = name;
            rep.seed = seed;
            rep.seconds = since(t0);
            return rep;
        }
    throw InputError("unknown suite '" + name + "'");
}

}  // namespace treepack::tools
