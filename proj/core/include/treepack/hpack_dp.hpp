#pragma once

#include <stop_token>
#include <string>
#include <vector>

#include "treepack/graph.hpp"
#include "treepack/oracle.hpp"
#include "treepack/treedec.hpp"

namespace treepack {

// Imprint values besides bag vertices: pattern vertex not yet placed (up) or
// placed on an already forgotten vertex (down).
inline constexpr int kUp = -1;
inline constexpr int kDown = -2;

// Imprint of a partial copy on a bag. hbar[u] is the host vertex of pattern
// vertex u, or -1 when u is outside the domain S. Throws InputError when S is
// empty, hbar is not injective, or an image lies outside bag and below.
std::vector<int> imprint(const std::vector<int>& hbar, const std::vector<int>& bag, const std::vector<int>& below);

// Type of a partial packing on a bag. Each block is an imprint phi over the
// pattern vertices; Z of a block is the set of pattern vertices mapped into
// the bag, and part(x) is the block whose imprint hits x.
struct PackingType {
    std::vector<std::vector<int>> blocks;

    // 0 for unused bag vertices, otherwise the 1-based block index.
    std::vector<int> part(const std::vector<int>& bag) const;
    bool operator==(const PackingType&) const = default;
};

// Checks the type conditions on a bag of g: blocks use disjoint nonempty
// sets of bag vertices (at most |bag| blocks), each imprint is an injective
// homomorphism on Z, and no pattern edge joins an up vertex to a down vertex.
bool is_valid_type(const Graph& g, const std::vector<int>& bag, const Graph& h, const PackingType& k,
                   std::string* why = nullptr);

// Blocks reduced to their lexicographically smallest image under Aut(h),
// then sorted. Two types with the same canonical form describe the same
// partial copies up to relabelling the pattern.
PackingType canonical_type(const Graph& h, const PackingType& k);

// Every valid type on the bag, canonicalized and sorted. Throws InputError
// when |bag| exceeds max_bag.
std::vector<PackingType> enumerate_types(const Graph& g, const std::vector<int>& bag, const Graph& h, int max_bag = 6);

// (2(b+2))^(|H| b), the bound on the number of types of a bag of size b.
long double type_count_bound(int bag_size, int pattern_size);

struct HPackOptions {
    // Reduce types modulo Aut(H); raw mode keeps imprints as they are.
    bool canonical = true;
    // Store every enumerated type at every node, absent ones included.
    bool dense = false;
    int dense_max_bag = 6;
    bool want_witness = false;
    std::stop_token stop;
};

struct HPackResult {
    long long value = 0;
    std::vector<NodeStats> nodes;
    std::vector<PackedCopy> witness;  // vertex-disjoint copies when requested
    long long closures_in_trace = 0;  // copies completed along the witness trace
};

// Maximum number of vertex-disjoint copies of a connected pattern h
// (3 <= |h| <= 10) in g.
HPackResult solve_h_packing(const Graph& g, const NiceTreeDecomposition& ntd, const Graph& h,
                            const HPackOptions& options = {});

// True iff V(g) splits into copies of h.
bool solve_h_partition(const Graph& g, const NiceTreeDecomposition& ntd, const Graph& h,
                       const HPackOptions& options = {});

}  // namespace treepack
