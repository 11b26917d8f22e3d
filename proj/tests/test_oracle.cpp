#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "treepack/errors.hpp"
#include "treepack/gadgets.hpp"
#include "treepack/graph.hpp"
#include "treepack/instances.hpp"
#include "treepack/oracle.hpp"

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

long long total(const std::vector<PackedCopy>& packing) {
    long long t = 0;
    for (const auto& pc : packing) t += pc.multiplicity;
    return t;
}

// Maximum vertex-disjoint packing by trying every subset of copies.
long long disjoint_packing_reference(const Graph& g, const Graph& h) {
    auto copies = enumerate_copies(g, h);
    long long best = 0;
    for (std::uint64_t mask = 0; mask < (1ULL << copies.size()); ++mask) {
        std::vector<int> used(g.num_vertices());
        bool ok = true;
        long long count = 0;
        for (std::size_t i = 0; i < copies.size() && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            ++count;
            for (int v : copies[i].vertices) ok = ok && used[v]++ == 0;
        }
        if (ok) best = std::max(best, count);
    }
    return best;
}

Gadget single_portal_triangle() {
    Gadget g;
    g.kind = "test";
    g.c = 1;
    g.pattern = complete_graph(3);
    g.graph = complete_graph(3);
    g.portals = {0};
    g.claimed = Relation(1, 1, {{1}});
    g.pieces = {{0, 1, 2}};
    return g;
}

}  // namespace

TEST_CASE("packing oracle on small hosts", "[oracle]") {
    auto k4 = max_packing_bruteforce(complete_graph(4), complete_graph(3), 1, Variant::Dist);
    REQUIRE(k4.value == 1);
    auto k4arb = max_packing_bruteforce(complete_graph(4), complete_graph(3), 3, Variant::Arb);
    REQUIRE(k4arb.value == 4);
    REQUIRE(check_packing(complete_graph(4), complete_graph(3), k4arb.witness, Variant::Arb, {3, 3, 3, 3}, {}));
    REQUIRE(max_packing_bruteforce(cycle_graph(6), complete_graph(3), 5, Variant::Arb).value == 0);
    // A distinct packing uses each triangle of K3 once; arb may repeat it.
    REQUIRE(max_packing_bruteforce(complete_graph(3), complete_graph(3), 2, Variant::Dist).value == 1);
    REQUIRE(max_packing_bruteforce(complete_graph(3), complete_graph(3), 2, Variant::Arb).value == 2);
}

TEST_CASE("exact cover oracle", "[oracle]") {
    REQUIRE(exact_cover_feasible(complete_graph(3), complete_graph(3), {1, 1, 1}, Variant::Dist).feasible);
    REQUIRE_FALSE(exact_cover_feasible(complete_graph(4), complete_graph(3), {1, 1, 1, 1}, Variant::Dist).feasible);
    auto arb = exact_cover_feasible(complete_graph(4), complete_graph(3), {3, 3, 3, 3}, Variant::Arb);
    REQUIRE(arb.feasible);
    REQUIRE(check_packing(complete_graph(4), complete_graph(3), arb.witness, Variant::Arb, {}, {3, 3, 3, 3}));
}

TEST_CASE("check_packing rejects bad witnesses", "[oracle]") {
    Graph k4 = complete_graph(4);
    PackedCopy t{{{0, 1, 2}, {0, 1, 2}}, 2};
    std::string why;
    REQUIRE_FALSE(check_packing(k4, complete_graph(3), {t}, Variant::Dist, {2, 2, 2, 2}, {}, &why));
    REQUIRE_FALSE(why.empty());
    REQUIRE_FALSE(check_packing(k4, complete_graph(3), {t}, Variant::Arb, {1, 1, 1, 1}, {}));
    PackedCopy nonedge{{{0, 1, 2}, {0, 1, 2}}, 1};
    REQUIRE_FALSE(check_packing(path_graph(3), complete_graph(3), {nonedge}, Variant::Dist, {1, 1, 1}, {}));
}

TEST_CASE("packing oracle matches subset enumeration", "[oracle][property]") {
    std::mt19937_64 rng(21);
    const std::vector<Graph> patterns = {complete_graph(3), path_graph(3), paw_graph(), cycle_graph(4)};
    for (int it = 0; it < 40; ++it) {
        Graph g = random_graph(4 + it % 4, 0.45, rng);
        for (const auto& h : patterns) {
            if (enumerate_copies(g, h).size() > 18) continue;
            auto r = max_packing_bruteforce(g, h, 1, Variant::Dist);
            REQUIRE(r.value == disjoint_packing_reference(g, h));
            REQUIRE(total(r.witness) == r.value);
            REQUIRE(check_packing(g, h, r.witness, Variant::Dist, std::vector<int>(g.num_vertices(), 1), {}));
        }
    }
}

TEST_CASE("cover feasibility agrees with packing maxima", "[oracle][property]") {
    std::mt19937_64 rng(22);
    for (int it = 0; it < 40; ++it) {
        Graph g = random_graph(3 + it % 5, 0.6, rng);
        int n = g.num_vertices();
        for (int c = 1; c <= 2; ++c)
            for (Variant var : {Variant::Dist, Variant::Arb}) {
                auto best = max_packing_bruteforce(g, complete_graph(3), c, var);
                bool via_max = (c * n) % 3 == 0 && best.value == c * n / 3;
                auto cover = exact_cover_feasible(g, complete_graph(3), std::vector<int>(n, c), var);
                REQUIRE(cover.feasible == via_max);
            }
    }
}

TEST_CASE("budget exhaustion raises", "[oracle]") {
    SearchLimits tiny;
    tiny.node_budget = 3;
    REQUIRE_THROWS_AS(max_packing_bruteforce(complete_graph(7), complete_graph(3), 2, Variant::Arb, tiny), BudgetExceeded);
}

TEST_CASE("realized relations of small gadgets", "[oracle]") {
    REQUIRE(realized_relation(single_portal_triangle(), Variant::Dist).tuples() == std::vector<Tuple>{{1}});
    REQUIRE(realized_relation(neq_gadget(1, 3), Variant::Dist).tuples() == std::vector<Tuple>{{0, 1}, {1, 0}});
    REQUIRE(realized_relation(neq_gadget(2, 3), Variant::Arb).tuples() == std::vector<Tuple>{{0, 2}, {1, 1}, {2, 0}});
    for (auto method : {RealizeMethod::Enumerate, RealizeMethod::PerVector})
        REQUIRE(realized_relation(neq_gadget(2, 3), Variant::Dist, {}, method) == rel_cneq(2));
}

TEST_CASE("verify_gadget lists differences", "[oracle]") {
    REQUIRE(verify_gadget(neq_gadget(1, 3)).ok());
    Gadget wrong = neq_gadget(1, 3);
    wrong.claimed = Relation(2, 1, {{0, 1}, {1, 1}});
    auto report = verify_gadget(wrong);
    REQUIRE_FALSE(report.ok());
    // Missing: claimed but not realized. Extra: realized but not claimed.
    REQUIRE(report.dist_missing == std::vector<Tuple>{{1, 1}});
    REQUIRE(report.dist_extra == std::vector<Tuple>{{1, 0}});
}

TEST_CASE("csp oracle", "[oracle]") {
    Csp2Instance one;
    one.n = 2;
    one.B = 2;
    one.constraints = {{0, 1, {{1, 1}}}};
    REQUIRE(csp_bruteforce(one));
    Csp2Instance none = one;
    none.constraints[0].allowed.clear();
    REQUIRE_FALSE(csp_bruteforce(none));
}

TEST_CASE("csp oracle matches a second enumeration order", "[oracle][property]") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 60; ++it) {
        Csp2Instance csp;
        csp.n = 3;
        csp.B = 2 + static_cast<int>(rng() % 2);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                Csp2Instance::Constraint con{i, j, {}};
                for (int a = 1; a <= csp.B; ++a)
                    for (int b = 1; b <= csp.B; ++b)
                        if (rng() % 3 == 0) con.allowed.emplace_back(a, b);
                csp.constraints.push_back(con);
            }
        bool expect = false;
        // Last variable varies slowest here.
        for (int z = csp.B; z >= 1 && !expect; --z)
            for (int y = csp.B; y >= 1 && !expect; --y)
                for (int x = csp.B; x >= 1 && !expect; --x) {
                    int val[3] = {x, y, z};
                    bool ok = true;
                    for (const auto& con : csp.constraints)
                        ok = ok && std::find(con.allowed.begin(), con.allowed.end(), std::make_pair(val[con.i], val[con.j])) !=
                                       con.allowed.end();
                    expect = ok;
                }
        REQUIRE(csp_bruteforce(csp) == expect);
    }
}

TEST_CASE("permutation independent set oracle", "[oracle]") {
    PermIsetInstance edgeless{2, make_graph(4, {})};
    REQUIRE(permiset_bruteforce(edgeless));
    std::vector<Edge> all;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) all.emplace_back(u, v);
    REQUIRE_FALSE(permiset_bruteforce({2, make_graph(4, all)}));
    std::vector<Edge> row;
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) row.emplace_back(PermIsetInstance::cell(3, 0, a), PermIsetInstance::cell(3, 0, b));
    REQUIRE(permiset_bruteforce({3, make_graph(9, row)}));
}
