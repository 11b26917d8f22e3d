#pragma once

#include <cstdint>
#include <stop_token>
#include <string>
#include <utility>
#include <vector>

#include "treepack/gadgets.hpp"
#include "treepack/graph.hpp"
#include "treepack/instances.hpp"
#include "treepack/relation.hpp"

namespace treepack {

// dist: a set of distinct copies. arb: a multiset of copies.
enum class Variant { Dist, Arb };
const char* to_string(Variant v);
Variant parse_variant(const std::string& s);

struct SearchLimits {
    std::uint64_t node_budget = 200'000'000;
    std::stop_token stop;
};

struct PackedCopy {
    Copy copy;
    int multiplicity = 1;
};

struct PackingResult {
    long long value = 0;
    std::vector<PackedCopy> witness;
    std::uint64_t nodes = 0;
};

// Exact maximum number of copies of h (counted with multiplicity) such that
// every vertex is covered at most c times.
PackingResult max_packing_bruteforce(const Graph& g, const Graph& h, int c, Variant variant,
                                     const SearchLimits& limits = {});

struct CoverResult {
    bool feasible = false;
    std::vector<PackedCopy> witness;
    std::uint64_t nodes = 0;
};

// Is there a packing covering every vertex v exactly demand[v] times?
CoverResult exact_cover_feasible(const Graph& g, const Graph& h, const std::vector<int>& demand, Variant variant,
                                 const SearchLimits& limits = {});

// Checks a packing independently of the searches: copies are subgraphs of g
// isomorphic to h, multiplicities respect the variant, and coverage matches
// `coverage_cap` (at most) or `demand` (exactly) when given.
bool check_packing(const Graph& g, const Graph& h, const std::vector<PackedCopy>& packing, Variant variant,
                   const std::vector<int>& coverage_cap, const std::vector<int>& demand, std::string* why = nullptr);

enum class RealizeMethod {
    Auto,       // enumerate with free portals, fall back to per-vector checks
    Enumerate,  // enumerate every packing with free portals
    PerVector,  // one exact-cover query per candidate portal vector
};

Relation realized_relation(const Gadget& g, Variant variant, const SearchLimits& limits = {},
                           RealizeMethod method = RealizeMethod::Auto);

struct GadgetReport {
    bool dist_ok = false;
    bool arb_ok = false;
    Relation dist;
    Relation arb;
    std::vector<Tuple> dist_missing, dist_extra, arb_missing, arb_extra;

    bool ok() const { return dist_ok && arb_ok; }
    std::string to_json() const;
};

GadgetReport verify_gadget(const Gadget& g, const SearchLimits& limits = {});

// NeqSource::plugin() plus an oracle check that the base realizes CNEQ_1.
NeqSource verified_neq_source(const Gadget& base, const SearchLimits& limits = {});

// Satisfiability by enumerating all B^n assignments.
bool csp_bruteforce(const Csp2Instance& inst, std::uint64_t budget = 50'000'000);

// Tries all k! permutations; k <= 7.
bool permiset_bruteforce(const PermIsetInstance& inst);

}  // namespace treepack
