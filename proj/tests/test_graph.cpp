#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "treepack/errors.hpp"
#include "treepack/graph.hpp"
#include "treepack/graph_io.hpp"

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

// Injective maps h -> g that preserve edges, counted without any pruning.
std::uint64_t count_maps_reference(const Graph& g, const Graph& h) {
    int n = g.num_vertices(), k = h.num_vertices();
    if (k > n) return 0;
    std::uint64_t count = 0;
    std::vector<int> image(k);
    std::vector<bool> chosen(n);
    // Every tuple in [n]^k, filtered to injective ones.
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) total *= n;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t x = code;
        std::fill(chosen.begin(), chosen.end(), false);
        bool injective = true;
        for (int i = 0; i < k; ++i) {
            image[i] = static_cast<int>(x % n);
            x /= n;
            if (chosen[image[i]]) injective = false;
            chosen[image[i]] = true;
        }
        if (!injective) continue;
        bool hom = true;
        for (auto [a, b] : h.edges()) hom = hom && g.has_edge(image[a], image[b]);
        if (hom) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("make_graph builds K3 and rejects loops", "[graph]") {
    Graph k3 = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    REQUIRE(k3 == complete_graph(3));
    REQUIRE(k3.num_edges() == 3);
    Graph empty = make_graph(4, {});
    REQUIRE(empty.num_vertices() == 4);
    REQUIRE(empty.num_edges() == 0);
    REQUIRE_THROWS_AS(make_graph(2, {{0, 0}}), InputError);
    REQUIRE_THROWS_AS(make_graph(2, {{0, 2}}), InputError);
}

TEST_CASE("disjoint_union offsets the second graph", "[graph]") {
    auto two = disjoint_union(complete_graph(3), complete_graph(3));
    REQUIRE(two.graph.num_vertices() == 6);
    REQUIRE(two.graph.num_edges() == 6);
    REQUIRE(two.offset == 3);
    REQUIRE(two.graph.has_edge(3, 5));
    REQUIRE_FALSE(two.graph.has_edge(2, 3));

    auto shifted = disjoint_union(make_graph(0, {}), complete_graph(4));
    REQUIRE(shifted.graph == complete_graph(4));
    REQUIRE(disjoint_union(complete_graph(3), make_graph(0, {})).graph == complete_graph(3));
}

TEST_CASE("identify_vertices merges classes and drops loops", "[graph]") {
    Graph two_edges = make_graph(4, {{0, 1}, {2, 3}});
    auto merged = identify_vertices(two_edges, {{1, 2}});
    REQUIRE(merged.graph.num_vertices() == 3);
    REQUIRE(merged.graph.num_edges() == 2);
    REQUIRE(merged.old_to_new[1] == merged.old_to_new[2]);

    auto looped = identify_vertices(path_graph(2), {{0, 1}});
    REQUIRE(looped.graph.num_vertices() == 1);
    REQUIRE(looped.graph.num_edges() == 0);

    REQUIRE(identify_vertices(complete_graph(4), {}).graph == complete_graph(4));
}

TEST_CASE("blow_up replaces a vertex by independent twins", "[graph]") {
    REQUIRE(blow_up(complete_graph(3), 0, 1) == complete_graph(3));
    Graph two = blow_up(complete_graph(3), 0, 2);
    REQUIRE(two.num_vertices() == 4);
    REQUIRE(two.num_edges() == 5);
    REQUIRE_FALSE(two.has_edge(0, 3));
    Graph star = blow_up(path_graph(2), 1, 3);
    REQUIRE(star.num_edges() == 3);
    REQUIRE(star.degree(0) == 3);
}

TEST_CASE("enumerate_copies on small hosts", "[graph]") {
    REQUIRE(enumerate_copies(complete_graph(4), complete_graph(3)).size() == 4);
    REQUIRE(enumerate_copies(cycle_graph(6), complete_graph(3)).empty());
    // Each copy accounts for |Aut(h)| injective homomorphisms.
    auto copies = enumerate_copies(paw_graph(), path_graph(3));
    REQUIRE(copies.size() * automorphisms(path_graph(3)).size() == count_maps_reference(paw_graph(), path_graph(3)));
    for (const auto& c : copies)
        for (auto [a, b] : path_graph(3).edges()) REQUIRE(paw_graph().has_edge(c.map[a], c.map[b]));
}

TEST_CASE("copy counts agree with an unpruned enumeration", "[graph][property]") {
    std::mt19937_64 rng(11);
    const std::vector<Graph> patterns = {complete_graph(3), path_graph(3), paw_graph(), cycle_graph(4)};
    for (int it = 0; it < 30; ++it) {
        Graph g = random_graph(4 + it % 4, 0.5, rng);
        for (const auto& h : patterns) {
            auto copies = enumerate_copies(g, h);
            REQUIRE(copies.size() * automorphisms(h).size() == count_maps_reference(g, h));
            REQUIRE(count_injective_homomorphisms(g, h) == count_maps_reference(g, h));
        }
    }
}

TEST_CASE("blocks and block graphs", "[graph]") {
    auto paw = blocks(paw_graph());
    REQUIRE(paw.blocks.size() == 2);
    REQUIRE(paw.cutvertices == std::vector<int>{2});
    REQUIRE(blocks(cycle_graph(4)).blocks.size() == 1);
    REQUIRE(blocks(path_graph(4)).blocks.size() == 3);
    REQUIRE(is_block_graph(complete_graph(4)));
    REQUIRE(is_block_graph(paw_graph()));
    REQUIRE_FALSE(is_block_graph(cycle_graph(4)));
}

TEST_CASE("min_block_separator picks the smallest lexicographic separator", "[graph]") {
    REQUIRE(min_block_separator(cycle_graph(4), {0, 1, 2, 3}) == std::vector<int>{0, 2});
    REQUIRE(min_block_separator(cycle_graph(5), {0, 1, 2, 3, 4}) == std::vector<int>{0, 2});
    REQUIRE_THROWS_AS(min_block_separator(complete_graph(4), {0, 1, 2, 3}), InputError);
}

TEST_CASE("gr and json round trips", "[graph][io]") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 20; ++it) {
        Graph g = random_graph(1 + it % 9, 0.4, rng);
        REQUIRE(parse_gr(emit_gr(g)) == g);
        REQUIRE(graph_from_json(graph_to_json(g)) == g);
    }
    REQUIRE(parse_gr("c comment\np tw 3 2\n1 2\n2 3\n") == path_graph(3));
    REQUIRE_THROWS_AS(parse_gr("p tw 2 1\n1 3\n"), InputError);
    REQUIRE_THROWS_AS(parse_gr("1 2\n"), InputError);
}

TEST_CASE("automorphism group sizes", "[graph]") {
    REQUIRE(automorphisms(complete_graph(4)).size() == 24);
    REQUIRE(automorphisms(cycle_graph(4)).size() == 8);
    REQUIRE(automorphisms(paw_graph()).size() == 2);
    REQUIRE(automorphisms(path_graph(3)).size() == 2);
}
