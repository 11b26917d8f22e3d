#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treepack/graph.hpp"
#include "treepack/relation.hpp"
#include "treepack/treedec.hpp"

namespace treepack {

enum class Coherence { Claimed, Wrapped, Unknown };
const char* to_string(Coherence c);

// A graph with ordered portal vertices and the relation it is meant to
// realize for (c, pattern). `pieces` is an ordered cover of the vertices and
// edges; gluing consecutive pieces with every vertex kept alive between its
// first and last piece gives a path decomposition (see path_decomposition()).
struct Gadget {
    std::string kind;
    int c = 1;
    Graph pattern;
    Graph graph;
    std::vector<int> portals;
    Relation claimed;
    Coherence coherent = Coherence::Unknown;
    std::vector<std::vector<int>> pieces;

    std::vector<int> internal_vertices() const;
    int num_internal() const { return graph.num_vertices() - static_cast<int>(portals.size()); }
    TreeDecomposition path_decomposition() const;

    std::string to_json() const;
    static Gadget from_json(const std::string& text);
};

// Path decomposition whose bag p is pieces[p] plus every vertex whose first
// and last pieces lie on both sides of p.
TreeDecomposition glue_pieces(int num_vertices, const std::vector<std::vector<int>>& pieces);

// Builds a graph by adding vertices and embedding gadgets. Portals of an
// embedded gadget are identified with existing vertices; its internal
// vertices are always fresh.
class Assembler {
public:
    Assembler() = default;
    explicit Assembler(const Graph& host);

    int add_vertex(std::string label);
    std::vector<int> add_vertices(int count, const std::string& stem);
    void add_edge(int u, int v) { builder_.add_edge(u, v); }
    int num_vertices() const { return builder_.num_vertices(); }

    // Returns the new id of every gadget vertex. Embedded pieces are appended
    // to the piece list with ids translated.
    std::vector<int> embed(const Gadget& g, const std::vector<int>& targets, const std::string& tag);
    void add_piece(std::vector<int> piece) { pieces_.push_back(std::move(piece)); }

    const std::vector<std::vector<int>>& pieces() const { return pieces_; }
    std::vector<std::vector<int>> take_pieces() { return std::move(pieces_); }
    Graph build() const { return builder_.build(); }

private:
    GraphBuilder builder_;
    std::vector<std::vector<int>> pieces_;
};

// Identifies the gadget's portals with `targets` in a copy of `host`.
Graph attach(const Graph& host, const Gadget& g, const std::vector<int>& targets, const std::string& tag = "gadget");

// Supplies the two-portal gadgets realizing CNEQ_c for a pattern. Cliques on
// at least three vertices use neq_gadget(); any other pattern needs a c = 1
// base gadget supplied by the caller and only supports c = 1.
class NeqSource {
public:
    static NeqSource builtin(const Graph& pattern);
    // Structural checks only (two portals, c = 1, claimed CNEQ_1). Use
    // verified_neq_source() from oracle.hpp to also check the realization.
    static NeqSource plugin(Gadget base);

    const Graph& pattern() const { return pattern_; }
    bool is_clique() const { return !base_.has_value(); }
    bool supports(int c) const { return is_clique() || c == 1; }
    Gadget neq(int c) const;

private:
    Graph pattern_;
    std::optional<Gadget> base_;
};

// c copies of K_{d-1}, vertices v_1..v_{c+1} joined to all of them, portals
// (v_c, v_{c+1}).
Gadget neq_gadget(int c, int d);

// Candidate CNEQ_1 base for a non-clique pattern: the pattern with vertex v
// replaced by two copies, which become the portals. Must be verified before
// use.
Gadget doubling_neq_candidate(const Graph& pattern, int v = 0);

Gadget coherence_wrap(const Gadget& g, const Gadget& base_neq);

Gadget eq_gadget_single(int c, const NeqSource& src);
Gadget eq_gadget_ring(int c, const NeqSource& src, int k);
Gadget cover_gadget(int c, int d, int k);
Gadget toggle_gadget(const NeqSource& src);
Gadget arb_relation_gadget(const NeqSource& src, const Relation& r);
Gadget clique_reg_relation_gadget(int c, int d, const Relation& r);

// Number of duplicated tuples added so that the tuple count becomes a
// multiple of d.
int clique_reg_padding(int num_tuples, int d);

}  // namespace treepack
