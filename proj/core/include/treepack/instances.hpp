#pragma once

#include <string>
#include <utility>
#include <vector>

#include "treepack/graph.hpp"
#include "treepack/treedec.hpp"

namespace treepack {

// Binary CSP over the alphabet 1..B. Variables are 0-indexed.
struct Csp2Instance {
    struct Constraint {
        int i = 0;
        int j = 0;
        std::vector<std::pair<int, int>> allowed;  // values in 1..B
    };
    int n = 0;
    int B = 1;
    std::vector<Constraint> constraints;
    // Path decomposition of the primal graph. Empty means "build one".
    TreeDecomposition pathdec;

    Graph primal_graph() const;
    void check() const;
    std::string to_json() const;
    static Csp2Instance from_json(const std::string& text);
};

// Graph on the k x k grid; cell (r, c) with 0 <= r, c < k is vertex r * k + c.
struct PermIsetInstance {
    int k = 0;
    Graph graph;

    static int cell(int k, int r, int c) { return r * k + c; }
    std::string to_json() const;
    static PermIsetInstance from_json(const std::string& text);
};

}  // namespace treepack
