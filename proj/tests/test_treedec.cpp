#include <catch_amalgamated.hpp>

#include <random>

#include "treepack/errors.hpp"
#include "treepack/graph.hpp"
#include "treepack/treedec.hpp"

using namespace treepack;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return make_graph(n, edges);
}

int count_kind(const NiceTreeDecomposition& ntd, NodeKind k) {
    int n = 0;
    for (const auto& node : ntd.nodes) n += node.kind == k;
    return n;
}

}  // namespace

TEST_CASE("td text round trip", "[treedec][io]") {
    TreeDecomposition td = parse_td("s td 1 3 3\nb 1 1 2 3\n");
    REQUIRE(td.width() == 2);
    REQUIRE(td.bags == std::vector<std::vector<int>>{{0, 1, 2}});
    REQUIRE(parse_td(emit_td(td)).bags == td.bags);
    REQUIRE_THROWS_AS(parse_td("s tx 1 3 3\nb 1 1 2 3\n"), InputError);
    REQUIRE_THROWS_AS(parse_td("b 1 1 2 3\n"), InputError);
}

TEST_CASE("validate reports the first violation", "[treedec]") {
    TreeDecomposition td = path_decomposition(4, {{0, 1}, {1, 2}, {2, 3}});
    REQUIRE(validate(td, path_graph(4)).ok);

    auto uncovered = validate(td, cycle_graph(4));
    REQUIRE_FALSE(uncovered.ok);
    REQUIRE(uncovered.kind == "edge-uncovered");

    TreeDecomposition split = path_decomposition(3, {{0, 1}, {2}, {0, 1}});
    auto broken = validate(split, make_graph(3, {{0, 1}}));
    REQUIRE_FALSE(broken.ok);
    REQUIRE(broken.kind == "vertex-disconnected");
    REQUIRE(broken.witness.front() == 0);
}

TEST_CASE("nicify a single bag", "[treedec]") {
    TreeDecomposition td = path_decomposition(3, {{0, 1, 2}});
    auto ntd = nicify(td);
    REQUIRE(ntd.nodes.size() == 7);
    REQUIRE(count_kind(ntd, NodeKind::Leaf) == 1);
    REQUIRE(count_kind(ntd, NodeKind::Introduce) == 3);
    REQUIRE(count_kind(ntd, NodeKind::Forget) == 3);
    REQUIRE(ntd.nodes[ntd.root()].bag.empty());
    REQUIRE(validate_nice(ntd).ok);
}

TEST_CASE("nicify collapses equal bags and binarizes joins", "[treedec]") {
    auto twice = nicify(path_decomposition(3, {{0, 1, 2}, {0, 1, 2}}));
    REQUIRE(twice.nodes.size() == 7);

    TreeDecomposition star;
    star.num_vertices = 4;
    star.bags = {{0}, {0, 1}, {0, 2}, {0, 3}};
    star.tree = {{0, 1}, {0, 2}, {0, 3}};
    auto ntd = nicify(star);
    REQUIRE(validate_nice(ntd).ok);
    REQUIRE(count_kind(ntd, NodeKind::Join) == 2);
    for (const auto& node : ntd.nodes) REQUIRE(node.children.size() <= 2);
}

TEST_CASE("nice decompositions stay valid and keep the width", "[treedec][property]") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 60; ++it) {
        Graph g = random_graph(1 + it % 12, 0.35, rng);
        for (Heuristic h : {Heuristic::MinDegree, Heuristic::MinFill}) {
            TreeDecomposition td = heuristic_treedec(g, h);
            REQUIRE(validate(td, g).ok);
            auto ntd = nicify(td);
            REQUIRE(validate_nice(ntd).ok);
            REQUIRE(ntd.width() == td.width());
            REQUIRE(validate(ntd.as_tree_decomposition(), g).ok);
            // Every vertex is introduced once per leaf-to-root path and forgotten once.
            REQUIRE(count_kind(ntd, NodeKind::Forget) == g.num_vertices());
        }
    }
}

TEST_CASE("heuristic widths on known graphs", "[treedec]") {
    REQUIRE(heuristic_treedec(path_graph(6)).width() == 1);
    REQUIRE(heuristic_treedec(make_graph(4, {{0, 1}, {0, 2}, {0, 3}})).width() == 1);
    REQUIRE(heuristic_treedec(complete_graph(5)).width() == 4);
    REQUIRE(heuristic_treedec(cycle_graph(6)).width() == 2);
    REQUIRE(heuristic_treedec(cycle_graph(6), Heuristic::MinDegree).width() == 2);
}

TEST_CASE("nicify rejects decompositions that are not trees", "[treedec]") {
    TreeDecomposition cyc;
    cyc.num_vertices = 3;
    cyc.bags = {{0}, {1}, {2}};
    cyc.tree = {{0, 1}, {1, 2}, {2, 0}};
    REQUIRE_THROWS_AS(nicify(cyc), InputError);
}
