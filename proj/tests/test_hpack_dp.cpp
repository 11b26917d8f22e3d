#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "treepack/errors.hpp"
#include "treepack/graph.hpp"
#include "treepack/hpack_dp.hpp"
#include "treepack/oracle.hpp"
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

NiceTreeDecomposition nice(const Graph& g) { return nicify(heuristic_treedec(g)); }

}  // namespace

TEST_CASE("imprint cases", "[hpack-dp]") {
    REQUIRE(imprint({4, 5, 6}, {0, 1}, {4, 5, 6}) == std::vector<int>{kDown, kDown, kDown});
    REQUIRE(imprint({0, 5, -1}, {0, 1}, {5}) == std::vector<int>{0, kDown, kUp});
    REQUIRE_THROWS_AS(imprint({-1, -1, -1}, {0, 1}, {5}), InputError);
    REQUIRE_THROWS_AS(imprint({0, 0, -1}, {0, 1}, {}), InputError);
    REQUIRE_THROWS_AS(imprint({7, -1, -1}, {0, 1}, {5}), InputError);
}

TEST_CASE("type enumeration on tiny bags", "[hpack-dp]") {
    REQUIRE(enumerate_types(make_graph(0, {}), {}, complete_graph(3)).size() == 1);
    // The empty type, plus x hosting one triangle vertex with the other two
    // both up or both down; the three choices of u coincide modulo Aut(K3).
    auto types = enumerate_types(make_graph(1, {}), {0}, complete_graph(3));
    REQUIRE(types.size() == 3);
    for (const auto& k : types) REQUIRE(is_valid_type(make_graph(1, {}), {0}, complete_graph(3), k));
}

TEST_CASE("canonical types are fixed points", "[hpack-dp][property]") {
    std::mt19937_64 rng(51);
    for (int it = 0; it < 10; ++it) {
        Graph g = random_graph(3, 0.7, rng);
        for (const Graph& h : {complete_graph(3), path_graph(3), paw_graph()}) {
            auto types = enumerate_types(g, {0, 1, 2}, h);
            REQUIRE(static_cast<long double>(types.size()) <= type_count_bound(3, h.num_vertices()));
            for (const auto& k : types) REQUIRE(canonical_type(h, k) == k);
        }
    }
}

TEST_CASE("H packing on small graphs", "[hpack-dp]") {
    Graph k3 = complete_graph(3), c6 = cycle_graph(6), k4 = complete_graph(4);
    REQUIRE(solve_h_packing(k3, nice(k3), k3).value == 1);
    REQUIRE(solve_h_packing(c6, nice(c6), k3).value == 0);
    Graph two = disjoint_union(k3, k3).graph;
    REQUIRE(solve_h_packing(two, nice(two), k3).value == 2);
    REQUIRE(solve_h_partition(two, nice(two), k3));
    REQUIRE_FALSE(solve_h_partition(k4, nice(k4), k3));
    Graph c8 = cycle_graph(8);
    REQUIRE(solve_h_partition(c8, nice(c8), path_graph(4)));
    REQUIRE(exact_cover_feasible(c8, path_graph(4), std::vector<int>(8, 1), Variant::Dist).feasible);
}

TEST_CASE("join on an empty bag adds both sides", "[hpack-dp]") {
    Graph two = disjoint_union(complete_graph(3), complete_graph(3)).graph;
    TreeDecomposition td;
    td.num_vertices = 6;
    td.bags = {{}, {0, 1, 2}, {3, 4, 5}};
    td.tree = {{0, 1}, {0, 2}};
    REQUIRE(solve_h_packing(two, nicify(td), complete_graph(3)).value == 2);
}

TEST_CASE("disconnected patterns are rejected", "[hpack-dp]") {
    Graph g = complete_graph(4);
    Graph h = make_graph(4, {{0, 1}, {2, 3}});
    REQUIRE_THROWS_AS(solve_h_packing(g, nice(g), h), InputError);
}

TEST_CASE("H-DP matches the oracle with witnesses", "[hpack-dp][property]") {
    std::mt19937_64 rng(52);
    const std::vector<Graph> patterns = {complete_graph(3), path_graph(3), paw_graph(), cycle_graph(4)};
    for (int it = 0; it < 25; ++it) {
        Graph g = random_graph(4 + it % 4, 0.5, rng);
        auto ntd = nice(g);
        for (const auto& h : patterns) {
            HPackOptions o;
            o.want_witness = true;
            auto r = solve_h_packing(g, ntd, h, o);
            REQUIRE(r.value == max_packing_bruteforce(g, h, 1, Variant::Dist).value);
            REQUIRE(static_cast<long long>(r.witness.size()) == r.value);
            REQUIRE(check_packing(g, h, r.witness, Variant::Dist, std::vector<int>(g.num_vertices(), 1), {}));
            HPackOptions raw;
            raw.canonical = false;
            REQUIRE(solve_h_packing(g, ntd, h, raw).value == r.value);
        }
    }
}

TEST_CASE("relabelling the host leaves the optimum unchanged", "[hpack-dp][property]") {
    std::mt19937_64 rng(53);
    for (int it = 0; it < 15; ++it) {
        Graph g = random_graph(7, 0.45, rng);
        std::vector<int> perm(7);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph p = relabel(g, perm);
        REQUIRE(solve_h_packing(g, nice(g), paw_graph()).value == solve_h_packing(p, nice(p), paw_graph()).value);
    }
}
