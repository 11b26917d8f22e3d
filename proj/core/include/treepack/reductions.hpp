#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "treepack/gadgets.hpp"
#include "treepack/graph.hpp"
#include "treepack/instances.hpp"
#include "treepack/oracle.hpp"
#include "treepack/relation.hpp"
#include "treepack/treedec.hpp"

namespace treepack {

// One gadget placed by a reduction. `type` indexes ReductionOutput::gadget_types.
struct GadgetUse {
    std::string tag;
    int type = 0;
    std::vector<int> vertices;  // host ids of every gadget vertex, portals first
};

struct ReductionOutput {
    Graph graph;
    TreeDecomposition decomposition;
    // Named vertex groups, e.g. "a(2,3)" or "U(1,2)"; indices are 1-based.
    std::map<std::string, std::vector<int>> certificates;
    std::vector<Gadget> gadget_types;  // distinct gadgets, one per relation
    std::vector<GadgetUse> gadgets;
    // Set when the instance was decided during construction; graph and
    // decomposition are then empty.
    bool unsatisfiable = false;
    std::string note;

    // Largest number of gadget vertices placed in a single bag.
    int max_gadget_bag = 0;

    std::string summary_json() const;
};

// Smallest multiple l of d with (c+1)^(l-d) >= B.
int choose_ell(int B, int c, int d);

// Entry v-1 is the image of value v: base-(c+1) digits of v-1 over l-d
// coordinates (most significant first), then d padding coordinates holding
// (d - weight mod d) mod d ones followed by zeros.
std::vector<Tuple> phi_encoding(int B, int ell, int c, int d);

// Bags of a path-shaped decomposition in path order. Throws InputError if the
// tree is not a path.
std::vector<std::vector<int>> path_order(const TreeDecomposition& td);

// Path decomposition of g from the vertex order 0..n-1: bag k holds k and
// every earlier vertex with a neighbour at position >= k.
TreeDecomposition vertex_order_pathdec(const Graph& g);

struct CspLayout {
    std::vector<std::vector<int>> bags;  // path bags after duplication
    std::vector<int> bag_of;             // constraint -> bag index, injective
    int width = 0;                       // width of the input path decomposition
};

// Orders the CSP's path decomposition (or builds one) and assigns every
// constraint to the first bag holding both its variables, duplicating bags
// so that no two constraints share one.
CspLayout csp_layout(const Csp2Instance& csp);

// 2-CSP -> Multi-(c, K_d)-Partition. ell = 0 picks choose_ell(B, c, d).
// Certificates: "a(i,j)" for the ell vertices of variable i at step j.
ReductionOutput reduce_csp_to_multiclique(const Csp2Instance& csp, int c, int d, int ell = 0);

// Multi-(c, K_d)-Partition -> Single-(c, K_d)-Partition. One equality gadget
// per d-clique; each hangs off a bag containing its clique as a path of
// duplicated bags. Without `td` a heuristic decomposition of g is used.
ReductionOutput reduce_multi_to_single(const Graph& g, int c, int d,
                                       const std::optional<TreeDecomposition>& td = std::nullopt);

// The separator choice used by the permutation reduction.
struct SeparatorSplit {
    std::vector<int> block;                    // non-clique block of h
    std::vector<int> up, down;                 // S split by sorted id
    std::vector<std::vector<int>> components;  // components of h - S, by least vertex
};
SeparatorSplit separator_split(const Graph& h);

// k x k Permutation Independent Set -> H-Partition for a connected pattern
// that is not a block graph. Without `src` a doubling CNEQ_1 candidate is
// verified by the oracle and used.
ReductionOutput reduce_permiset_to_hpartition(const PermIsetInstance& inst, const Graph& h,
                                              const std::optional<NeqSource>& src = std::nullopt);

// Memoized verify_gadget keyed by (kind, c, pattern, relation).
class GadgetVerificationCache {
public:
    explicit GadgetVerificationCache(SearchLimits limits = {}) : limits_(std::move(limits)) {}

    const GadgetReport& verify(const Gadget& g);
    bool contains(const Gadget& g) const { return reports_.count(key(g)) != 0; }
    std::size_t size() const { return reports_.size(); }

    static std::string key(const Gadget& g);

private:
    SearchLimits limits_;
    std::map<std::string, GadgetReport> reports_;
};

}  // namespace treepack
