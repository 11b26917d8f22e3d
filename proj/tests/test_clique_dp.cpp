#include <catch_amalgamated.hpp>

#include <random>

#include "treepack/clique_dp.hpp"
#include "treepack/errors.hpp"
#include "treepack/graph.hpp"
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

DenseTable random_table(int width, int c, std::mt19937_64& rng) {
    DenseTable t(width, c);
    for (auto& v : t.values) v = rng() % 3 == 0 ? DenseTable::kAbsent : static_cast<long long>(rng() % 20);
    return t;
}

}  // namespace

TEST_CASE("clique packing on small graphs", "[clique-dp]") {
    Graph k4 = complete_graph(4);
    REQUIRE(solve_clique_packing(k4, nice(k4), 1, 3, Variant::Dist).value == 1);
    REQUIRE(solve_clique_packing(k4, nice(k4), 3, 3, Variant::Arb).value == 4);
    Graph two = disjoint_union(complete_graph(3), complete_graph(3)).graph;
    REQUIRE(solve_clique_packing(two, nice(two), 2, 3, Variant::Dist).value == 2);
    REQUIRE(solve_clique_packing(two, nice(two), 2, 3, Variant::Arb).value == 4);
    Graph k3 = complete_graph(3);
    REQUIRE(solve_clique_packing(k3, nice(k3), 2, 3, Variant::Arb).value == 2);
}

TEST_CASE("clique partition", "[clique-dp]") {
    Graph k3 = complete_graph(3), k4 = complete_graph(4);
    REQUIRE(solve_clique_partition(k3, nice(k3), 1, 3, Variant::Dist));
    REQUIRE_FALSE(solve_clique_partition(k4, nice(k4), 1, 3, Variant::Dist));
    REQUIRE(solve_clique_partition(k4, nice(k4), 3, 3, Variant::Arb));
    REQUIRE_FALSE(solve_clique_partition(k4, nice(k4), 3, 3, Variant::Dist) !=
                  exact_cover_feasible(k4, k3, {3, 3, 3, 3}, Variant::Dist).feasible);
}

TEST_CASE("solver validates the decomposition first", "[clique-dp]") {
    Graph c4 = cycle_graph(4);
    auto bad = nicify(path_decomposition(4, {{0, 1}, {1, 2}, {2, 3}}));
    REQUIRE_THROWS_AS(solve_clique_packing(c4, bad, 1, 3, Variant::Dist), InputError);
    REQUIRE_THROWS_AS(solve_clique_packing(c4, nice(c4), 1, 2, Variant::Dist), InputError);
}

TEST_CASE("clique DP matches the oracle", "[clique-dp][property]") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 25; ++it) {
        Graph g = random_graph(4 + it % 5, 0.6, rng);
        auto ntd = nice(g);
        for (int c = 1; c <= 2; ++c)
            for (Variant var : {Variant::Dist, Variant::Arb}) {
                CliqueDPOptions o;
                o.want_witness = true;
                o.join = it % 2 ? JoinMode::Convolution : JoinMode::Naive;
                auto r = solve_clique_packing(g, ntd, c, 3, var, o);
                REQUIRE(r.value == max_packing_bruteforce(g, complete_graph(3), c, var).value);
                REQUIRE(check_packing(g, complete_graph(3), r.witness, var, std::vector<int>(g.num_vertices(), c), {}));
            }
    }
}

TEST_CASE("dense tables hold every type", "[clique-dp]") {
    std::mt19937_64 rng(42);
    Graph g = random_graph(7, 0.5, rng);
    auto ntd = nice(g);
    CliqueDPOptions dense;
    dense.dense = true;
    for (int c = 1; c <= 2; ++c) {
        auto r = solve_clique_packing(g, ntd, c, 3, Variant::Arb, dense);
        for (const auto& s : r.nodes) {
            std::size_t expect = 1;
            for (int i = 0; i < s.bag_size; ++i) expect *= c + 1;
            REQUIRE(s.entries == expect);
        }
        REQUIRE(r.value == solve_clique_packing(g, ntd, c, 3, Variant::Arb).value);
        CliqueDPOptions literal = dense;
        literal.literal_introduce = true;
        REQUIRE(solve_clique_packing(g, ntd, c, 3, Variant::Arb, literal).value >= r.value);
    }
}

TEST_CASE("naive and convolution joins agree", "[clique-dp][property]") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 200; ++it) {
        int width = static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 3);
        auto a = random_table(width, c, rng), b = random_table(width, c, rng);
        REQUIRE(join_naive(a, b).values == join_convolution(a, b).values);
    }
}

TEST_CASE("join with the identity table", "[clique-dp]") {
    std::mt19937_64 rng(44);
    auto t = random_table(3, 2, rng);
    DenseTable unit(3, 2);
    std::fill(unit.values.begin(), unit.values.end(), DenseTable::kAbsent);
    unit.values[0] = 0;
    REQUIRE(join_naive(t, unit).values == t.values);
    REQUIRE(join_convolution(unit, t).values == t.values);
}

TEST_CASE("dense table indexing", "[clique-dp]") {
    DenseTable t(3, 2);
    REQUIRE(t.size() == 27);
    for (std::size_t i = 0; i < t.size(); ++i) REQUIRE(t.index_of(t.type_of(i)) == i);
    REQUIRE(t.type_of(5) == std::vector<int>{2, 1, 0});
}
