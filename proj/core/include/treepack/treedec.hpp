#pragma once

#include <string>
#include <vector>

#include "treepack/graph.hpp"

namespace treepack {

struct TreeDecomposition {
    int num_vertices = 0;                   // vertex count of the decomposed graph
    std::vector<std::vector<int>> bags;     // sorted, 0-indexed
    std::vector<std::pair<int, int>> tree;  // edges between bag indices

    int width() const;  // max bag size - 1, or -1 without bags
};

// PACE 2017 `.td`: "s td <bags> <width+1> <n>", "b <id> <v...>", "<id> <id>".
// Ids on disk are 1-indexed.
TreeDecomposition parse_td(const std::string& text);
std::string emit_td(const TreeDecomposition& td);

struct Validation {
    bool ok = true;
    std::string kind;          // e.g. "edge-uncovered"; empty when ok
    std::string message;
    std::vector<int> witness;  // vertices or bag indices involved
};

// Reports the first violated condition: shape (a tree over the bags), ranges,
// vertex coverage, edge coverage, then connectivity of each vertex's bags.
Validation validate(const TreeDecomposition& td, const Graph& g);

// Path decomposition with consecutive bags linked.
TreeDecomposition path_decomposition(int num_vertices, std::vector<std::vector<int>> bags);

enum class NodeKind { Leaf, Introduce, Forget, Join };
const char* to_string(NodeKind k);

struct NiceNode {
    NodeKind kind = NodeKind::Leaf;
    int vertex = -1;             // introduced or forgotten vertex
    std::vector<int> bag;        // sorted
    std::vector<int> children;   // 0, 1 or 2 entries
};

// Nodes are stored children-first, so iterating in index order is a valid
// bottom-up schedule. The root is the last node and has an empty bag.
struct NiceTreeDecomposition {
    int num_vertices = 0;
    std::vector<NiceNode> nodes;

    int root() const { return static_cast<int>(nodes.size()) - 1; }
    int width() const;
    TreeDecomposition as_tree_decomposition() const;
};

// Table statistics the DP solvers report per node.
struct NodeStats {
    int bag_size = 0;
    std::size_t entries = 0;  // stored types, absent ones included in dense mode
};

// Throws InputError when td is not a tree satisfying the running-intersection
// property. Width is preserved; joins are binary.
NiceTreeDecomposition nicify(const TreeDecomposition& td);

// Structural checks on a nice decomposition: node kinds agree with bags,
// leaves and root empty, joins binary with equal bags.
Validation validate_nice(const NiceTreeDecomposition& ntd);

enum class Heuristic { MinDegree, MinFill };
TreeDecomposition heuristic_treedec(const Graph& g, Heuristic strategy = Heuristic::MinFill);

}  // namespace treepack
