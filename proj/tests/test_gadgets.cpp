#include <catch_amalgamated.hpp>

#include <set>

#include "treepack/errors.hpp"
#include "treepack/gadgets.hpp"
#include "treepack/graph.hpp"
#include "treepack/oracle.hpp"
#include "treepack/treedec.hpp"

using namespace treepack;

namespace {

void require_sound_decomposition(const Gadget& g) {
    TreeDecomposition pd = g.path_decomposition();
    REQUIRE(validate(pd, g.graph).ok);
}

}  // namespace

TEST_CASE("neq gadget topology", "[gadgets]") {
    Gadget g = neq_gadget(1, 3);
    REQUIRE(g.graph.num_vertices() == 4);
    REQUIRE(g.graph.num_edges() == 5);
    REQUIRE(g.portals.size() == 2);
    REQUIRE_FALSE(g.graph.has_edge(g.portals[0], g.portals[1]));
    REQUIRE(g.claimed == rel_cneq(1));
    require_sound_decomposition(g);
}

TEST_CASE("attach grows the host by the internal vertices", "[gadgets]") {
    Graph host = path_graph(4);
    Gadget g = neq_gadget(1, 3);
    Graph once = attach(host, g, {0, 1});
    REQUIRE(once.num_vertices() == host.num_vertices() + g.num_internal());
    REQUIRE_THROWS_AS(attach(host, g, {0}), InputError);

    Graph twice = attach(once, g, {2, 3});
    REQUIRE(twice.num_vertices() == host.num_vertices() + 2 * g.num_internal());
    // The second copy's internals must not touch the first copy's.
    for (int u = host.num_vertices(); u < host.num_vertices() + g.num_internal(); ++u)
        for (int v = host.num_vertices() + g.num_internal(); v < twice.num_vertices(); ++v) REQUIRE_FALSE(twice.has_edge(u, v));
}

TEST_CASE("coherence wrap guards every portal", "[gadgets]") {
    Gadget base = neq_gadget(1, 3);
    Gadget inner = eq_gadget_single(1, NeqSource::builtin(complete_graph(3)));
    Gadget wrapped = coherence_wrap(inner, base);
    REQUIRE(wrapped.portals.size() == inner.portals.size());
    REQUIRE(wrapped.graph.num_vertices() ==
            inner.graph.num_vertices() + static_cast<int>(inner.portals.size()) * (1 + base.num_internal()));
    REQUIRE_THROWS_AS(coherence_wrap(eq_gadget_single(2, NeqSource::builtin(complete_graph(3))), base), InputError);
}

TEST_CASE("relation gadgets reject irregular relations", "[gadgets]") {
    auto src = NeqSource::builtin(complete_graph(3));
    Relation mixed(2, 1, {{0, 0}, {1, 0}});
    REQUIRE_THROWS_AS(arb_relation_gadget(src, mixed), InputError);
    REQUIRE_THROWS_AS(clique_reg_relation_gadget(1, 3, mixed), InputError);
    REQUIRE_THROWS_AS(clique_reg_relation_gadget(1, 3, Relation(2, 1)), InputError);
}

TEST_CASE("built-in gadgets realize their claims", "[gadgets][oracle]") {
    auto k3 = NeqSource::builtin(complete_graph(3));
    std::vector<Gadget> gadgets = {
        neq_gadget(1, 3),
        neq_gadget(2, 3),
        neq_gadget(1, 4),
        eq_gadget_single(1, k3),
        toggle_gadget(k3),
        arb_relation_gadget(k3, Relation(3, 1, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})),
        clique_reg_relation_gadget(1, 3, Relation(3, 1, {{0, 0, 0}, {1, 1, 1}})),
    };
    for (const auto& g : gadgets) {
        INFO(g.kind);
        require_sound_decomposition(g);
        auto report = verify_gadget(g);
        REQUIRE(report.dist_ok);
        REQUIRE(report.arb_ok);
    }
}

TEST_CASE("doubling a C4 vertex gives a verified neq base", "[gadgets][oracle]") {
    Gadget base = doubling_neq_candidate(cycle_graph(4), 0);
    REQUIRE(base.portals.size() == 2);
    NeqSource src = verified_neq_source(base);
    REQUIRE_FALSE(src.is_clique());
    REQUIRE(src.supports(1));
    REQUIRE_FALSE(src.supports(2));
}

TEST_CASE("gadget json round trip", "[gadgets][io]") {
    Gadget g = toggle_gadget(NeqSource::builtin(complete_graph(3)));
    Gadget back = Gadget::from_json(g.to_json());
    REQUIRE(back.graph == g.graph);
    REQUIRE(back.portals == g.portals);
    REQUIRE(back.claimed == g.claimed);
    REQUIRE(back.kind == g.kind);
}

TEST_CASE("clique padding makes tuple counts divisible", "[gadgets]") {
    for (int t = 1; t <= 12; ++t)
        for (int d = 3; d <= 5; ++d) {
            int pad = clique_reg_padding(t, d);
            REQUIRE(pad >= 0);
            REQUIRE(pad < d);
            REQUIRE((t + pad) % d == 0);
        }
}
