#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <set>

#include "treepack/clique_dp.hpp"
#include "treepack/errors.hpp"
#include "treepack/graph.hpp"
#include "treepack/oracle.hpp"
#include "treepack/reductions.hpp"
#include "treepack/treedec.hpp"

using namespace treepack;

namespace {

Csp2Instance two_var_csp(std::vector<std::pair<int, int>> allowed) {
    Csp2Instance csp;
    csp.n = 2;
    csp.B = 2;
    csp.constraints = {{0, 1, std::move(allowed)}};
    return csp;
}

bool single_partition(const ReductionOutput& out, int c, int d) {
    return solve_clique_partition(out.graph, nicify(out.decomposition), c, d, Variant::Dist);
}

}  // namespace

TEST_CASE("choose_ell", "[reductions]") {
    REQUIRE(choose_ell(2, 1, 3) == 6);
    REQUIRE(choose_ell(1, 1, 3) == 3);
    REQUIRE(choose_ell(9, 2, 3) == 6);
    for (int B = 1; B <= 40; ++B)
        for (int c = 1; c <= 3; ++c)
            for (int d = 3; d <= 4; ++d) {
                int ell = choose_ell(B, c, d);
                REQUIRE(ell % d == 0);
                REQUIRE(std::pow(c + 1.0, ell - d) >= B);
                REQUIRE((ell == d || std::pow(c + 1.0, ell - 2 * d) < B));
            }
}

TEST_CASE("phi encoding is injective and regular", "[reductions]") {
    auto phi = phi_encoding(2, 6, 1, 3);
    REQUIRE(phi.size() == 2);
    REQUIRE(phi[0] == Tuple{0, 0, 0, 0, 0, 0});
    REQUIRE(phi[1] == Tuple{0, 0, 1, 1, 1, 0});
    for (int B : {3, 7, 9})
        for (int c : {1, 2}) {
            int ell = choose_ell(B, c, 3);
            auto enc = phi_encoding(B, ell, c, 3);
            Relation image(ell, c, enc);
            REQUIRE(image.size() == static_cast<std::size_t>(B));
            REQUIRE(is_regular(image, 0, 3));
        }
}

TEST_CASE("csp layout assigns constraints to distinct bags", "[reductions]") {
    Csp2Instance csp;
    csp.n = 3;
    csp.B = 2;
    csp.constraints = {{0, 1, {{1, 1}}}, {1, 0, {{2, 2}}}, {1, 2, {{1, 2}}}};
    auto layout = csp_layout(csp);
    std::set<int> used(layout.bag_of.begin(), layout.bag_of.end());
    REQUIRE(used.size() == csp.constraints.size());
    for (std::size_t j = 0; j < csp.constraints.size(); ++j) {
        const auto& bag = layout.bags[layout.bag_of[j]];
        REQUIRE(std::count(bag.begin(), bag.end(), csp.constraints[j].i) == 1);
        REQUIRE(std::count(bag.begin(), bag.end(), csp.constraints[j].j) == 1);
    }
}

TEST_CASE("csp reduction output is well formed", "[reductions]") {
    auto out = reduce_csp_to_multiclique(two_var_csp({{1, 2}, {2, 1}}), 1, 3);
    REQUIRE_FALSE(out.unsatisfiable);
    REQUIRE(validate(out.decomposition, out.graph).ok);
    REQUIRE(out.certificates.count("a(1,1)") == 1);
    REQUIRE(out.certificates.at("a(1,1)").size() == 6);
    for (const auto& use : out.gadgets) REQUIRE(use.type < static_cast<int>(out.gadget_types.size()));
}

TEST_CASE("empty constraints are unsatisfiable by construction", "[reductions]") {
    auto out = reduce_csp_to_multiclique(two_var_csp({}), 1, 3);
    REQUIRE(out.unsatisfiable);
    REQUIRE(out.graph.num_vertices() == 0);
}

TEST_CASE("multi to single on K3 and K4", "[reductions]") {
    for (int c : {1, 2}) {
        auto k3 = reduce_multi_to_single(complete_graph(3), c, 3);
        REQUIRE(validate(k3.decomposition, k3.graph).ok);
        REQUIRE(k3.gadgets.size() == 1);
        REQUIRE(single_partition(k3, c, 3));
    }
    auto k4 = reduce_multi_to_single(complete_graph(4), 1, 3);
    REQUIRE(k4.gadgets.size() == 4);
    REQUIRE(validate(k4.decomposition, k4.graph).ok);
    REQUIRE_FALSE(single_partition(k4, 1, 3));
    // K4 is 3-partitionable into triangles with each one used once.
    auto k4c3 = reduce_multi_to_single(complete_graph(4), 3, 3);
    REQUIRE(single_partition(k4c3, 3, 3) == exact_cover_feasible(complete_graph(4), complete_graph(3), {3, 3, 3, 3}, Variant::Arb).feasible);
}

TEST_CASE("multi to single width stays near the input width", "[reductions]") {
    Graph g = disjoint_union(complete_graph(4), cycle_graph(5)).graph;
    TreeDecomposition td = heuristic_treedec(g);
    auto out = reduce_multi_to_single(g, 2, 3, td);
    REQUIRE(validate(out.decomposition, out.graph).ok);
    REQUIRE(out.decomposition.width() <= td.width() + out.max_gadget_bag);
}

TEST_CASE("path_order follows a path decomposition", "[reductions]") {
    auto td = path_decomposition(4, {{0, 1}, {1, 2}, {2, 3}});
    std::swap(td.tree[0], td.tree[1]);
    REQUIRE(path_order(td) == td.bags);
    TreeDecomposition star;
    star.num_vertices = 1;
    star.bags = {{0}, {0}, {0}, {0}};
    star.tree = {{0, 1}, {0, 2}, {0, 3}};
    REQUIRE_THROWS_AS(path_order(star), InputError);
    Graph g = cycle_graph(6);
    REQUIRE(validate(vertex_order_pathdec(g), g).ok);
}

TEST_CASE("permiset reduction rejects block graphs", "[reductions]") {
    PermIsetInstance inst{2, make_graph(4, {})};
    for (const Graph& h : {paw_graph(), complete_graph(3), path_graph(3), complete_graph(4)})
        REQUIRE_THROWS_AS(reduce_permiset_to_hpartition(inst, h), InputError);
}

TEST_CASE("separator split of C4", "[reductions]") {
    auto split = separator_split(cycle_graph(4));
    REQUIRE(split.block == std::vector<int>{0, 1, 2, 3});
    REQUIRE(split.up == std::vector<int>{0});
    REQUIRE(split.down == std::vector<int>{2});
    REQUIRE(split.components == std::vector<std::vector<int>>{{1}, {3}});
}

TEST_CASE("permiset reduction output is well formed", "[reductions]") {
    PermIsetInstance inst{2, make_graph(4, {{PermIsetInstance::cell(2, 0, 0), PermIsetInstance::cell(2, 1, 1)}})};
    auto out = reduce_permiset_to_hpartition(inst, cycle_graph(4));
    REQUIRE(validate(out.decomposition, out.graph).ok);
    REQUIRE(out.certificates.count("U(1,1)") == 1);
    REQUIRE(out.graph.num_vertices() > 0);
}

TEST_CASE("gadget verification cache memoizes by relation", "[reductions]") {
    GadgetVerificationCache cache;
    Gadget a = neq_gadget(1, 3);
    REQUIRE(cache.verify(a).ok());
    REQUIRE(cache.contains(a));
    REQUIRE(cache.size() == 1);
    cache.verify(neq_gadget(1, 3));
    REQUIRE(cache.size() == 1);
    cache.verify(neq_gadget(2, 3));
    REQUIRE(cache.size() == 2);
}
