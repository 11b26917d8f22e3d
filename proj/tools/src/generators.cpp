#include "generators.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "treepack/errors.hpp"

namespace treepack::tools {

namespace {

bool coin(double p, Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }

int below(int n, Rng& rng) { return static_cast<int>(std::uniform_int_distribution<int>(0, n - 1)(rng)); }

}  // namespace

Graph named_pattern(const std::string& name) {
    std::string s;
    for (char ch : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    if (s == "paw") return paw_graph();
    if (s.size() >= 2 && std::all_of(s.begin() + 1, s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
        int n = std::stoi(s.substr(1));
        if (n >= 1 && n <= 10) {
            if (s[0] == 'k') return complete_graph(n);
            if (s[0] == 'p') return path_graph(n);
            if (s[0] == 'c' && n >= 3) return cycle_graph(n);
        }
    }
    throw InputError("unknown pattern '" + name + "' (use paw, Kn, Pn or Cn with n <= 10)");
}

Graph erdos_renyi(int n, double p, Rng& rng) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(p, rng)) edges.emplace_back(u, v);
    return make_graph(n, edges);
}

PartialKTree partial_ktree(int n, int k, double keep, Rng& rng) {
    if (k < 1 || n < k + 1) throw InputError("partial_ktree needs k >= 1 and n >= k + 1");
    std::vector<Edge> edges;
    std::vector<std::vector<int>> cliques;
    std::vector<int> first(k + 1);
    std::iota(first.begin(), first.end(), 0);
    for (int u = 0; u <= k; ++u)
        for (int v = u + 1; v <= k; ++v) edges.emplace_back(u, v);
    cliques.push_back(first);
    PartialKTree out;
    for (int v = k + 1; v < n; ++v) {
        int parent = below(static_cast<int>(cliques.size()), rng);
        std::vector<int> base = cliques[parent];
        base.erase(base.begin() + below(k + 1, rng));
        for (int u : base) edges.emplace_back(u, v);
        base.push_back(v);
        std::sort(base.begin(), base.end());
        out.td.tree.emplace_back(parent, static_cast<int>(cliques.size()));
        cliques.push_back(base);
    }
    std::vector<Edge> kept;
    for (auto e : edges)
        if (coin(keep, rng)) kept.push_back(e);
    out.graph = make_graph(n, kept);
    out.td.num_vertices = n;
    out.td.bags = std::move(cliques);
    return out;
}

Graph planted_clique_partition(int n, int d, int c, double p, Rng& rng) {
    if (n % d != 0) throw InputError("planted_clique_partition needs d | n");
    std::vector<Edge> edges;
    for (int round = 0; round < c; ++round) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int b = 0; b < n; b += d)
            for (int x = b; x < b + d; ++x)
                for (int y = x + 1; y < b + d; ++y) edges.emplace_back(perm[x], perm[y]);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(p, rng)) edges.emplace_back(u, v);
    return make_graph(n, edges);
}

Csp2Instance random_csp(int n, int B, double density, double allow, Rng& rng) {
    Csp2Instance csp;
    csp.n = n;
    csp.B = B;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!coin(density, rng)) continue;
            Csp2Instance::Constraint con;
            con.i = i;
            con.j = j;
            for (int a = 1; a <= B; ++a)
                for (int b = 1; b <= B; ++b)
                    if (coin(allow, rng)) con.allowed.emplace_back(a, b);
            if (con.allowed.empty()) con.allowed.emplace_back(1 + below(B, rng), 1 + below(B, rng));
            csp.constraints.push_back(std::move(con));
        }
    return csp;
}

PermIsetInstance random_permiset(int k, double p, Rng& rng) {
    PermIsetInstance inst;
    inst.k = k;
    inst.graph = erdos_renyi(k * k, p, rng);
    return inst;
}

}  // namespace treepack::tools
