#pragma once

#include <cstdint>
#include <stop_token>
#include <string>
#include <vector>

#include "treepack/graph.hpp"
#include "treepack/oracle.hpp"
#include "treepack/treedec.hpp"

namespace treepack {

enum class JoinMode { Naive, Convolution };
const char* to_string(JoinMode m);
JoinMode parse_join_mode(const std::string& s);

// Table over a bag of `width` positions with coverage values in [0, c].
// Entry index is sum_i f_i * (c+1)^i; kAbsent marks types without a witness.
struct DenseTable {
    static constexpr long long kAbsent = -1;
    int width = 0;
    int c = 1;
    std::vector<long long> values;

    DenseTable() = default;
    DenseTable(int width, int c);
    std::size_t size() const { return values.size(); }
    // Digits of index i, position 0 first.
    std::vector<int> type_of(std::size_t i) const;
    std::size_t index_of(const std::vector<int>& f) const;
};

// result[f] = max over f1 + f2 = f (pointwise, each coordinate <= c) of
// left[f1] + right[f2]; absent when no pair of present entries exists.
DenseTable join_naive(const DenseTable& left, const DenseTable& right);
// Same result via one number-theoretic transform over Z_p, p = 2^64 - 2^32 + 1.
// Coverage coordinates and the value become exponents of a single variable,
// so the max-plus product turns into an ordinary polynomial product.
DenseTable join_convolution(const DenseTable& left, const DenseTable& right);

struct CliqueDPOptions {
    JoinMode join = JoinMode::Naive;
    // Materialize all (c+1)^|bag| types at every node, absent ones included.
    bool dense = false;
    // Introduce nodes give value 0 to every type with f(v) != 0 instead of
    // leaving it absent. Implies dense.
    bool literal_introduce = false;
    bool want_witness = false;
    std::stop_token stop;
};

struct CliqueDPResult {
    long long value = 0;
    std::vector<PackedCopy> witness;  // copies of K_d with identity maps
    std::vector<NodeStats> nodes;     // indexed like ntd.nodes
};

// Maximum c-packing of K_d (d >= 3) in g. The decomposition is validated
// against g first; InputError on failure.
CliqueDPResult solve_clique_packing(const Graph& g, const NiceTreeDecomposition& ntd, int c, int d, Variant variant,
                                    const CliqueDPOptions& options = {});

// True iff g has a c-partition into K_d, i.e. the maximum packing reaches c*n/d.
bool solve_clique_partition(const Graph& g, const NiceTreeDecomposition& ntd, int c, int d, Variant variant,
                            const CliqueDPOptions& options = {});

}  // namespace treepack
