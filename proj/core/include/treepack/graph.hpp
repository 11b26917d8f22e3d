#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace treepack {

using Edge = std::pair<int, int>;

// Undirected simple graph on vertices 0..n-1. Adjacency lists are sorted and
// the object is immutable once built.
class Graph {
public:
    Graph() = default;

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    std::size_t num_edges() const { return num_edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    // Edges as (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    bool has_labels() const { return !labels_.empty(); }
    std::string label(int v) const;
    const std::vector<std::string>& labels() const { return labels_; }

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    friend class GraphBuilder;
    friend Graph make_graph(int, const std::vector<Edge>&, std::vector<std::string>);

    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
    std::size_t num_edges_ = 0;
};

// Incremental construction with vertex identification done by the caller.
// Duplicate edges are ignored; self-loops are rejected.
class GraphBuilder {
public:
    GraphBuilder() = default;
    explicit GraphBuilder(const Graph& g);

    int add_vertex(std::string label = {});
    void add_edge(int u, int v);
    int num_vertices() const { return static_cast<int>(adj_.size()); }
    void set_label(int v, std::string label);
    const std::string& label(int v) const { return labels_[v]; }

    Graph build() const;

private:
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
};

Graph make_graph(int n, const std::vector<Edge>& edges, std::vector<std::string> labels = {});

Graph complete_graph(int d);
Graph path_graph(int n);
Graph cycle_graph(int n);
// Triangle 0-1-2 with a pendant vertex 3 attached to 2.
Graph paw_graph();

struct UnionResult {
    Graph graph;
    int offset = 0;  // vertex v of the second graph became v + offset
};
UnionResult disjoint_union(const Graph& g1, const Graph& g2);

struct IdentifyResult {
    Graph graph;
    std::vector<int> old_to_new;
};
// Merges every class into a single vertex. Edges that would become loops are
// dropped and parallel edges collapse.
IdentifyResult identify_vertices(const Graph& g, const std::vector<std::vector<int>>& classes);

// Replaces v by t pairwise non-adjacent copies, each adjacent to N(v). The
// copies are v itself followed by new vertices n, n+1, ..., n+t-2.
Graph blow_up(const Graph& g, int v, int t);

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);
Graph relabel(const Graph& g, const std::vector<int>& perm);

bool is_connected(const Graph& g);
bool is_complete(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);

// All automorphisms of a pattern with at most 10 vertices, as permutations.
std::vector<std::vector<int>> automorphisms(const Graph& h);

struct Copy {
    std::vector<int> vertices;  // sorted host vertices
    std::vector<int> map;       // pattern vertex -> host vertex (one witness)
};

// Every subgraph of g isomorphic to h, listed once. Copies are subgraphs, not
// induced subgraphs, so two copies on the same vertex set are distinct when
// their edge sets differ.
std::vector<Copy> enumerate_copies(const Graph& g, const Graph& h);

// Number of injective homomorphisms h -> g, by plain backtracking.
std::uint64_t count_injective_homomorphisms(const Graph& g, const Graph& h);

struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;  // sorted vertex sets
    std::vector<int> cutvertices;          // sorted
    // Block-cut tree: edge (block index, cutvertex) for every cutvertex in a block.
    std::vector<std::pair<int, int>> tree_edges;
};
BlockDecomposition blocks(const Graph& h);
bool is_block_graph(const Graph& h);

// Minimum-cardinality S inside the block whose removal disconnects the block,
// smallest in lexicographic order among minimum ones.
std::vector<int> min_block_separator(const Graph& h, const std::vector<int>& block);

}  // namespace treepack
