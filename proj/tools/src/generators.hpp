#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "treepack/graph.hpp"
#include "treepack/instances.hpp"
#include "treepack/treedec.hpp"

namespace treepack::tools {

using Rng = std::mt19937_64;

// "K3", "P3", "paw", "C4", "K4" and generally Kn, Pn, Cn (case-insensitive).
Graph named_pattern(const std::string& name);

// G(n, p).
Graph erdos_renyi(int n, double p, Rng& rng);

struct PartialKTree {
    Graph graph;
    TreeDecomposition td;  // width k, one bag per (k+1)-clique of the k-tree
};

// Random k-tree on n >= k+1 vertices (each new vertex joins a random k-subset
// of an existing (k+1)-clique), then every edge kept with probability `keep`.
PartialKTree partial_ktree(int n, int k, double keep, Rng& rng);

// Union of c random K_d-partitions of [n] (n divisible by d) plus G(n, p)
// noise, so a c-fold K_d partition with repetitions exists.
Graph planted_clique_partition(int n, int d, int c, double p, Rng& rng);

// Constraints on each variable pair with probability `density`; each allowed
// pair kept with probability `allow`. A pair with no allowed values keeps one
// random pair so that constraints are never empty.
Csp2Instance random_csp(int n, int B, double density, double allow, Rng& rng);

// Edges between cells with probability p.
PermIsetInstance random_permiset(int k, double p, Rng& rng);

}  // namespace treepack::tools
