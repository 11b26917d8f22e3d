#include <catch_amalgamated.hpp>

#include <random>

#include "treepack/errors.hpp"
#include "treepack/relation.hpp"

using namespace treepack;

namespace {

Relation rel(int arity, int bound, std::vector<Tuple> tuples) { return Relation(arity, bound, std::move(tuples)); }

}  // namespace

TEST_CASE("basic relation constructors", "[relations]") {
    REQUIRE(rel_cneq(2).tuples() == std::vector<Tuple>{{0, 2}, {1, 1}, {2, 0}});
    REQUIRE(rel_cneq(2) == rel_sum(2, 2));
    REQUIRE(rel_cover(3, 0).tuples() == std::vector<Tuple>{{0, 0, 0}});
    REQUIRE(rel_eq(2, {0, 1}).tuples() == std::vector<Tuple>{{0, 0}, {1, 1}});
    REQUIRE(rel_sum(3, 1).size() == 3);
}

TEST_CASE("weights and regularity", "[relations]") {
    REQUIRE(weight({1, 2, 0}) == 3);
    REQUIRE(is_regular(rel_cneq(3), 0, 3));
    REQUIRE(is_regular(rel_eq(3, {0, 1}), 0, 3));
    REQUIRE_FALSE(is_regular(rel(2, 1, {{1, 0}}), 0, 2));
    REQUIRE(regular_residue(rel(2, 1, {{1, 0}}), 2) == 1);
    REQUIRE(regular_residue(rel(2, 1, {{1, 0}, {1, 1}}), 2) == -1);
}

TEST_CASE("complement, concat and stack", "[relations]") {
    REQUIRE(complement(rel(2, 2, {{0, 1}}), 2).tuples() == std::vector<Tuple>{{2, 1}});
    REQUIRE(concat({1, 0}, {2}) == Tuple{1, 0, 2});
    REQUIRE(stack({{1, 0}, {0, 1}}) == Tuple{1, 0, 0, 1});
}

TEST_CASE("selection relations", "[relations]") {
    REQUIRE(rel_sel_full(2, 1).tuples() == std::vector<Tuple>{{0, 1}, {1, 0}});
    REQUIRE(rel_sel({{1}, {2}}, 2, 1).tuples() == std::vector<Tuple>{{0, 0}});
    REQUIRE(rel_sel_full(1, 2).tuples() == std::vector<Tuple>{{0, 0}});
    REQUIRE(set_difference(rel_sel_full(2, 1), rel(2, 1, {{0, 1}})).tuples() == std::vector<Tuple>{{1, 0}});
}

TEST_CASE("copy relation", "[relations]") {
    REQUIRE(rel_copy(rel(2, 1, {{0, 1}}), 1).tuples() == std::vector<Tuple>{{0, 1, 1, 0}});
}

TEST_CASE("complement is an involution that shifts weights", "[relations][property]") {
    std::mt19937_64 rng(9);
    for (int it = 0; it < 200; ++it) {
        int c = 1 + static_cast<int>(rng() % 3), arity = 1 + static_cast<int>(rng() % 4);
        Relation r(arity, c);
        for (int k = 0; k < 5; ++k) {
            Tuple t(arity);
            for (int& x : t) x = static_cast<int>(rng() % (c + 1));
            r.insert(t);
        }
        REQUIRE(complement(complement(r, c), c) == r);
        for (const auto& t : r.tuples()) REQUIRE(weight(t) + weight(complement(t, c)) == c * arity);
        Relation copy = rel_copy(r, c);
        REQUIRE(copy.size() == r.size());
        for (const auto& t : copy.tuples()) REQUIRE(weight(t) == c * arity);
    }
}

TEST_CASE("relation json round trip", "[relations][io]") {
    Relation r = rel_sel_full(3, 2);
    REQUIRE(Relation::from_json(r.to_json()) == r);
    REQUIRE_THROWS_AS(Relation::from_json("{\"arity\":2}"), InputError);
}
