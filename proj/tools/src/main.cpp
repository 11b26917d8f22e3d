#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "generators.hpp"
#include "suites.hpp"
#include "treepack/clique_dp.hpp"
#include "treepack/errors.hpp"
#include "treepack/gadgets.hpp"
#include "treepack/graph_io.hpp"
#include "treepack/hpack_dp.hpp"
#include "treepack/instances.hpp"
#include "treepack/oracle.hpp"
#include "treepack/reductions.hpp"
#include "treepack/treedec.hpp"

using nlohmann::json;
using namespace treepack;

namespace {

enum Exit { kOk = 0, kInternal = 1, kNo = 2, kInput = 3, kBudget = 4 };

struct Global {
    std::string format = "json";
    std::uint64_t budget = 200'000'000;
};

std::uint64_t default_budget() {
    if (const char* env = std::getenv("TREEPACK_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw InputError("TREEPACK_BUDGET must be a positive integer");
        }
    }
    return 200'000'000;
}

void print(const Global& g, const json& j) {
    if (g.format == "human" && j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            std::cout << it.key() << ": " << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump()) << "\n";
    } else {
        std::cout << j.dump() << "\n";
    }
}

Graph load_graph(const std::string& path) {
    std::string text = read_text_file(path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return graph_from_json(text);
    return parse_gr(text);
}

// Reads the decomposition when given, otherwise builds one; validates either way.
TreeDecomposition load_td(const Graph& g, const std::string& path) {
    TreeDecomposition td = path.empty() ? heuristic_treedec(g) : parse_td(read_text_file(path));
    auto v = validate(td, g);
    if (!v.ok) throw InputError("decomposition invalid (" + v.kind + "): " + v.message);
    return td;
}

json copies_json(const std::vector<PackedCopy>& packing) {
    json out = json::array();
    for (const auto& pc : packing) out.push_back({{"vertices", pc.copy.vertices}, {"multiplicity", pc.multiplicity}});
    return out;
}

void check_range(int value, int lo, int hi, const std::string& name) {
    if (value < lo || value > hi)
        throw InputError(name + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

struct SolveArgs {
    std::string problem, graph, td, variant = "dist", join = "naive", pattern = "K3";
    int c = 1, d = 3;
    bool witness = false;
};

int run_solve(const Global& gl, const SolveArgs& a) {
    Graph g = load_graph(a.graph);
    TreeDecomposition td = load_td(g, a.td);
    auto ntd = nicify(td);
    json out;
    if (a.problem == "clique-pack" || a.problem == "clique-part") {
        check_range(a.c, 1, 16, "--c");
        check_range(a.d, 3, 64, "--d");
        CliqueDPOptions o;
        o.join = parse_join_mode(a.join);
        o.want_witness = a.witness;
        Variant var = parse_variant(a.variant);
        if (a.problem == "clique-pack") {
            auto r = solve_clique_packing(g, ntd, a.c, a.d, var, o);
            out["value"] = r.value;
            if (a.witness) out["witness"] = copies_json(r.witness);
            print(gl, out);
            return kOk;
        }
        bool feasible = solve_clique_partition(g, ntd, a.c, a.d, var, o);
        out["feasible"] = feasible;
        print(gl, out);
        return feasible ? kOk : kNo;
    }
    if (a.problem == "h-pack" || a.problem == "h-part") {
        Graph h = tools::named_pattern(a.pattern);
        HPackOptions o;
        o.want_witness = a.witness;
        if (a.problem == "h-pack") {
            auto r = solve_h_packing(g, ntd, h, o);
            out["value"] = r.value;
            if (a.witness) out["witness"] = copies_json(r.witness);
            print(gl, out);
            return kOk;
        }
        bool feasible = solve_h_partition(g, ntd, h, o);
        out["feasible"] = feasible;
        print(gl, out);
        return feasible ? kOk : kNo;
    }
    throw InputError("unknown problem '" + a.problem + "' (clique-pack, clique-part, h-pack, h-part)");
}

struct OracleArgs {
    std::string problem, graph, pattern = "K3", variant = "dist";
    int c = 1;
    bool witness = false;
};

int run_oracle(const Global& gl, const OracleArgs& a) {
    Graph g = load_graph(a.graph);
    Graph h = tools::named_pattern(a.pattern);
    check_range(a.c, 1, 16, "--c");
    SearchLimits lim;
    lim.node_budget = gl.budget;
    Variant var = parse_variant(a.variant);
    json out;
    if (a.problem == "pack") {
        auto r = max_packing_bruteforce(g, h, a.c, var, lim);
        out["value"] = r.value;
        out["nodes"] = r.nodes;
        if (a.witness) out["witness"] = copies_json(r.witness);
        print(gl, out);
        return kOk;
    }
    if (a.problem == "cover") {
        auto r = exact_cover_feasible(g, h, std::vector<int>(g.num_vertices(), a.c), var, lim);
        out["feasible"] = r.feasible;
        out["nodes"] = r.nodes;
        if (a.witness) out["witness"] = copies_json(r.witness);
        print(gl, out);
        return r.feasible ? kOk : kNo;
    }
    throw InputError("unknown oracle problem '" + a.problem + "' (pack, cover)");
}

struct GadgetArgs {
    std::string kind, pattern = "K3", relation, output;
    int c = 1, d = 3, k = 1, vertex = 0;
};

Gadget build_gadget(const GadgetArgs& a) {
    auto source = [&] {
        Graph h = tools::named_pattern(a.pattern);
        if (is_complete(h)) return NeqSource::builtin(h);
        return verified_neq_source(doubling_neq_candidate(h, a.vertex));
    };
    auto relation = [&] {
        if (a.relation.empty()) throw InputError("--relation is required for this gadget kind");
        return Relation::from_json(read_text_file(a.relation));
    };
    if (a.kind == "neq") return neq_gadget(a.c, a.d);
    if (a.kind == "doubling-neq") return doubling_neq_candidate(tools::named_pattern(a.pattern), a.vertex);
    if (a.kind == "eq-single") return eq_gadget_single(a.c, source());
    if (a.kind == "eq-ring") return eq_gadget_ring(a.c, source(), a.k);
    if (a.kind == "cover") return cover_gadget(a.c, a.d, a.k);
    if (a.kind == "toggle") return toggle_gadget(source());
    if (a.kind == "arb-relation") return arb_relation_gadget(source(), relation());
    if (a.kind == "clique-reg-relation") return clique_reg_relation_gadget(a.c, a.d, relation());
    throw InputError("unknown gadget kind '" + a.kind +
                     "' (neq, doubling-neq, eq-single, eq-ring, cover, toggle, arb-relation, clique-reg-relation)");
}

int run_gadget_build(const Global& gl, const GadgetArgs& a) {
    Gadget g = build_gadget(a);
    std::string text = g.to_json();
    if (a.output.empty()) {
        std::cout << text << "\n";
        return kOk;
    }
    write_text_file(a.output, text);
    print(gl, json{{"kind", g.kind},
                   {"vertices", g.graph.num_vertices()},
                   {"portals", g.portals.size()},
                   {"pathwidth", g.path_decomposition().width()},
                   {"file", a.output}});
    return kOk;
}

int run_gadget_verify(const Global& gl, const std::string& path) {
    Gadget g = Gadget::from_json(read_text_file(path));
    SearchLimits lim;
    lim.node_budget = gl.budget;
    auto report = verify_gadget(g, lim);
    print(gl, json::parse(report.to_json()));
    return report.ok() ? kOk : kNo;
}

struct ReduceArgs {
    std::string kind, input, td, pattern = "C4", output;
    int c = 1, d = 3, ell = 0;
};

int run_reduce(const Global& gl, const ReduceArgs& a) {
    ReductionOutput out;
    if (a.kind == "csp") {
        out = reduce_csp_to_multiclique(Csp2Instance::from_json(read_text_file(a.input)), a.c, a.d, a.ell);
    } else if (a.kind == "single") {
        Graph g = load_graph(a.input);
        std::optional<TreeDecomposition> td;
        if (!a.td.empty()) td = parse_td(read_text_file(a.td));
        out = reduce_multi_to_single(g, a.c, a.d, td);
    } else if (a.kind == "permiset") {
        out = reduce_permiset_to_hpartition(PermIsetInstance::from_json(read_text_file(a.input)),
                                            tools::named_pattern(a.pattern));
    } else {
        throw InputError("unknown reduction '" + a.kind + "' (csp, single, permiset)");
    }
    json summary;
    summary["unsatisfiable"] = out.unsatisfiable;
    if (!out.note.empty()) summary["note"] = out.note;
    summary["vertices"] = out.graph.num_vertices();
    summary["edges"] = out.graph.num_edges();
    summary["width"] = out.decomposition.width();
    summary["gadgets"] = out.gadgets.size();
    if (!a.output.empty() && !out.unsatisfiable) {
        write_text_file(a.output + ".gr", emit_gr(out.graph));
        write_text_file(a.output + ".td", emit_td(out.decomposition));
        write_text_file(a.output + ".json", out.summary_json());
        summary["files"] = {a.output + ".gr", a.output + ".td", a.output + ".json"};
    }
    print(gl, summary);
    return kOk;
}

std::map<std::string, int> kind_counts(const NiceTreeDecomposition& ntd) {
    std::map<std::string, int> counts;
    for (const auto& node : ntd.nodes) ++counts[to_string(node.kind)];
    return counts;
}

int run_td(const Global& gl, const std::string& action, const std::string& graph, const std::string& tdfile,
           const std::string& strategy, const std::string& output) {
    Graph g = load_graph(graph);
    if (action == "validate") {
        if (tdfile.empty()) throw InputError("td validate needs a .td file");
        TreeDecomposition td = parse_td(read_text_file(tdfile));
        auto v = validate(td, g);
        json out{{"ok", v.ok}, {"width", td.width()}};
        if (!v.ok) {
            out["kind"] = v.kind;
            out["message"] = v.message;
            out["witness"] = v.witness;
        }
        print(gl, out);
        return v.ok ? kOk : kNo;
    }
    if (action == "heuristic") {
        Heuristic h;
        if (strategy == "min-fill") {
            h = Heuristic::MinFill;
        } else if (strategy == "min-degree") {
            h = Heuristic::MinDegree;
        } else {
            throw InputError("unknown strategy '" + strategy + "' (min-fill, min-degree)");
        }
        TreeDecomposition td = heuristic_treedec(g, h);
        if (output.empty()) {
            std::cout << emit_td(td);
        } else {
            write_text_file(output, emit_td(td));
            print(gl, json{{"width", td.width()}, {"bags", td.bags.size()}, {"file", output}});
        }
        return kOk;
    }
    if (action == "nice") {
        TreeDecomposition td = load_td(g, tdfile);
        auto ntd = nicify(td);
        print(gl, json{{"width", ntd.width()}, {"nodes", ntd.nodes.size()}, {"kinds", kind_counts(ntd)}});
        return kOk;
    }
    throw InputError("unknown td action '" + action + "' (validate, heuristic, nice)");
}

int run_batch(const Global& gl, const std::string& suite, std::uint64_t seed, bool timings, bool list) {
    if (list) {
        json out = json::array();
        for (const auto& s : tools::registered_suites()) out.push_back({{"name", s.name}, {"description", s.description}});
        if (gl.format == "human") {
            for (const auto& s : tools::registered_suites()) std::cout << s.name << "  " << s.description << "\n";
        } else {
            std::cout << out.dump() << "\n";
        }
        return kOk;
    }
    if (suite.empty()) throw InputError("batch needs a suite name (see --list)");
    tools::SuiteOptions opt;
    opt.oracle_budget = gl.budget;
    auto report = tools::run_suite(suite, seed, opt);
    if (gl.format == "human") {
        std::cout << report.to_human();
    } else {
        std::cout << report.to_json(timings) << "\n";
    }
    return kOk;
}

int fail(const Global& gl, const std::string& kind, const std::string& message, int code) {
    json err{{"error", kind}, {"message", message}};
    if (gl.format == "human") {
        std::cerr << kind << " error: " << message << "\n";
    } else {
        std::cout << err.dump() << "\n";
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tree-decomposition packing solvers, oracles, gadgets and reductions"};
    app.require_subcommand(1);
    Global gl;
    app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"json", "human"}));
    std::uint64_t budget = 0;
    app.add_option("--budget", budget, "Oracle node budget (default: TREEPACK_BUDGET or 200000000)");

    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "Run a tree-decomposition DP");
    solve->add_option("problem", sa.problem, "clique-pack | clique-part | h-pack | h-part")->required();
    solve->add_option("graph", sa.graph, "Graph (.gr or .json)")->required()->check(CLI::ExistingFile);
    solve->add_option("--td", sa.td, "Tree decomposition (.td); heuristic when omitted")->check(CLI::ExistingFile);
    solve->add_option("--c", sa.c, "Coverage bound c");
    solve->add_option("--d", sa.d, "Clique size d");
    solve->add_option("--variant", sa.variant, "dist | arb");
    solve->add_option("--join", sa.join, "naive | convolution");
    solve->add_option("--pattern", sa.pattern, "Pattern for h-pack / h-part (K3, P3, paw, C4, K4, ...)");
    solve->add_flag("--witness", sa.witness, "Include a maximum packing");

    OracleArgs oa;
    auto* oracle = app.add_subcommand("oracle", "Exhaustive reference solvers");
    oracle->add_option("problem", oa.problem, "pack | cover")->required();
    oracle->add_option("graph", oa.graph, "Graph (.gr or .json)")->required()->check(CLI::ExistingFile);
    oracle->add_option("--pattern", oa.pattern, "Pattern graph name");
    oracle->add_option("--c", oa.c, "Coverage bound or demand c");
    oracle->add_option("--variant", oa.variant, "dist | arb");
    oracle->add_flag("--witness", oa.witness, "Include a packing");

    GadgetArgs ga;
    std::string verify_path;
    auto* gadget = app.add_subcommand("gadget", "Build or verify gadgets");
    gadget->require_subcommand(1);
    auto* gbuild = gadget->add_subcommand("build", "Build a gadget and write its JSON");
    gbuild->add_option("kind", ga.kind, "neq | doubling-neq | eq-single | eq-ring | cover | toggle | arb-relation | clique-reg-relation")
        ->required();
    gbuild->add_option("--c", ga.c, "c");
    gbuild->add_option("--d", ga.d, "d");
    gbuild->add_option("--k", ga.k, "Ring or cover size parameter");
    gbuild->add_option("--pattern", ga.pattern, "Pattern graph name");
    gbuild->add_option("--vertex", ga.vertex, "Doubled pattern vertex for non-clique patterns");
    gbuild->add_option("--relation", ga.relation, "Relation JSON file")->check(CLI::ExistingFile);
    gbuild->add_option("-o,--output", ga.output, "Output file (stdout when omitted)");
    auto* gverify = gadget->add_subcommand("verify", "Compare the oracle-realized relation with the claimed one");
    gverify->add_option("file", verify_path, "Gadget JSON")->required()->check(CLI::ExistingFile);

    ReduceArgs ra;
    auto* reduce = app.add_subcommand("reduce", "Run a reduction and emit .gr, .td and certificate JSON");
    reduce->add_option("kind", ra.kind, "csp | single | permiset")->required();
    reduce->add_option("input", ra.input, "Instance file")->required()->check(CLI::ExistingFile);
    reduce->add_option("--td", ra.td, "Input decomposition for 'single'")->check(CLI::ExistingFile);
    reduce->add_option("--c", ra.c, "c");
    reduce->add_option("--d", ra.d, "d");
    reduce->add_option("--ell", ra.ell, "Block length for 'csp' (0 picks the smallest)");
    reduce->add_option("--pattern", ra.pattern, "Pattern for 'permiset'");
    reduce->add_option("-o,--output", ra.output, "Output prefix");

    std::string td_action, td_graph, td_file, td_strategy = "min-fill", td_out;
    auto* td = app.add_subcommand("td", "Tree decomposition utilities");
    td->add_option("action", td_action, "validate | heuristic | nice")->required();
    td->add_option("graph", td_graph, "Graph (.gr or .json)")->required()->check(CLI::ExistingFile);
    td->add_option("td", td_file, "Decomposition (.td)")->check(CLI::ExistingFile);
    td->add_option("--strategy", td_strategy, "min-fill | min-degree");
    td->add_option("-o,--output", td_out, "Output file for 'heuristic'");

    std::string suite;
    std::uint64_t seed = tools::pinned::kDefaultSeed;
    bool timings = false, list = false;
    auto* batch = app.add_subcommand("batch", "Run a registered seeded suite");
    batch->add_option("suite", suite, "Suite name");
    batch->add_option("--seed", seed, "Seed");
    batch->add_flag("--timings", timings, "Include wall time in the JSON report");
    batch->add_flag("--list", list, "List registered suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail(gl, "usage", e.what(), kInput);
    }

    try {
        gl.budget = budget ? budget : default_budget();
        if (*solve) return run_solve(gl, sa);
        if (*oracle) return run_oracle(gl, oa);
        if (*gbuild) return run_gadget_build(gl, ga);
        if (*gverify) return run_gadget_verify(gl, verify_path);
        if (*reduce) return run_reduce(gl, ra);
        if (*td) return run_td(gl, td_action, td_graph, td_file, td_strategy, td_out);
        if (*batch) return run_batch(gl, suite, seed, timings, list);
    } catch (const InputError& e) {
        return fail(gl, "input", e.what(), kInput);
    } catch (const BudgetExceeded& e) {
        return fail(gl, "budget", e.what(), kBudget);
    } catch (const std::exception& e) {
        return fail(gl, "internal", e.what(), kInternal);
    }
    return kInternal;
}
