#include "treepack/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "treepack/errors.hpp"

namespace treepack {

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int target = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), target);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (int u = 0; u < num_vertices(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::string Graph::label(int v) const {
    if (labels_.empty()) return std::to_string(v);
    return labels_[v];
}

GraphBuilder::GraphBuilder(const Graph& g) : adj_(g.adj_), labels_(g.labels_) {
    if (labels_.empty())
        for (int v = 0; v < g.num_vertices(); ++v) labels_.push_back(std::to_string(v));
}

int GraphBuilder::add_vertex(std::string label) {
    adj_.emplace_back();
    labels_.push_back(std::move(label));
    return static_cast<int>(adj_.size()) - 1;
}

void GraphBuilder::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
        throw InputError("edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
}

void GraphBuilder::set_label(int v, std::string label) { labels_[v] = std::move(label); }

Graph GraphBuilder::build() const {
    Graph g;
    g.adj_ = adj_;
    std::size_t m = 0;
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        m += nb.size();
    }
    g.num_edges_ = m / 2;
    g.labels_ = labels_;
    return g;
}

Graph make_graph(int n, const std::vector<Edge>& edges, std::vector<std::string> labels) {
    if (n < 0) throw InputError("negative vertex count");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw InputError("label count does not match vertex count");
    GraphBuilder b;
    for (int v = 0; v < n; ++v) b.add_vertex(labels.empty() ? std::string{} : labels[v]);
    for (auto [u, v] : edges) b.add_edge(u, v);
    Graph g = b.build();
    if (labels.empty()) g.labels_.clear();
    return g;
}

Graph complete_graph(int d) {
    std::vector<Edge> e;
    for (int u = 0; u < d; ++u)
        for (int v = u + 1; v < d; ++v) e.emplace_back(u, v);
    return make_graph(d, e);
}

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return make_graph(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return make_graph(n, e);
}

Graph paw_graph() { return make_graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}); }

static std::vector<std::string> labels_or_ids(const Graph& g) {
    if (g.has_labels()) return g.labels();
    std::vector<std::string> out;
    for (int v = 0; v < g.num_vertices(); ++v) out.push_back(std::to_string(v));
    return out;
}

UnionResult disjoint_union(const Graph& g1, const Graph& g2) {
    int off = g1.num_vertices();
    std::vector<Edge> e = g1.edges();
    for (auto [u, v] : g2.edges()) e.emplace_back(u + off, v + off);
    std::vector<std::string> labels;
    if (g1.has_labels() || g2.has_labels()) {
        labels = labels_or_ids(g1);
        for (auto& l : labels_or_ids(g2)) labels.push_back(l);
    }
    return {make_graph(off + g2.num_vertices(), e, std::move(labels)), off};
}

IdentifyResult identify_vertices(const Graph& g, const std::vector<std::vector<int>>& classes) {
    int n = g.num_vertices();
    std::vector<int> cls(n, -1);
    for (int c = 0; c < static_cast<int>(classes.size()); ++c)
        for (int v : classes[c]) {
            if (v < 0 || v >= n) throw InputError("identify_vertices: vertex out of range");
            if (cls[v] != -1) throw InputError("identify_vertices: classes overlap at vertex " + std::to_string(v));
            cls[v] = c;
        }
    // New ids follow the smallest member of each class so that the order of
    // untouched vertices is preserved.
    std::vector<int> rep(n);
    for (int v = 0; v < n; ++v) rep[v] = v;
    std::vector<int> class_min(classes.size(), n);
    for (int v = 0; v < n; ++v)
        if (cls[v] >= 0) class_min[cls[v]] = std::min(class_min[cls[v]], v);
    for (int v = 0; v < n; ++v)
        if (cls[v] >= 0) rep[v] = class_min[cls[v]];
    std::vector<int> old_to_new(n, -1);
    int next = 0;
    std::vector<std::string> labels;
    for (int v = 0; v < n; ++v)
        if (rep[v] == v) {
            old_to_new[v] = next++;
            if (g.has_labels()) labels.push_back(g.label(v));
        }
    for (int v = 0; v < n; ++v) old_to_new[v] = old_to_new[rep[v]];
    std::vector<Edge> e;
    for (auto [u, v] : g.edges()) {
        int a = old_to_new[u], b = old_to_new[v];
        if (a != b) e.emplace_back(a, b);
    }
    return {make_graph(next, e, std::move(labels)), std::move(old_to_new)};
}

Graph blow_up(const Graph& g, int v, int t) {
    if (t < 1) throw InputError("blow_up needs t >= 1");
    if (v < 0 || v >= g.num_vertices()) throw InputError("blow_up: vertex out of range");
    int n = g.num_vertices();
    std::vector<Edge> e = g.edges();
    std::vector<std::string> labels;
    if (g.has_labels()) labels = g.labels();
    for (int i = 1; i < t; ++i) {
        int copy = n + i - 1;
        for (int u : g.neighbors(v)) e.emplace_back(copy, u);
        if (g.has_labels()) labels.push_back(g.label(v) + "#" + std::to_string(i));
    }
    return make_graph(n + t - 1, e, std::move(labels));
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> pos(g.num_vertices(), -1);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) pos[vertices[i]] = i;
    std::vector<Edge> e;
    std::vector<std::string> labels;
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
        if (g.has_labels()) labels.push_back(g.label(vertices[i]));
        for (int u : g.neighbors(vertices[i]))
            if (pos[u] > i) e.emplace_back(i, pos[u]);
    }
    return make_graph(static_cast<int>(vertices.size()), e, std::move(labels));
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<Edge> e;
    for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.resize(g.num_vertices());
        for (int v = 0; v < g.num_vertices(); ++v) labels[perm[v]] = g.label(v);
    }
    return make_graph(g.num_vertices(), e, std::move(labels));
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> seen(n, 0);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s}, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    comp.push_back(u);
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_complete(const Graph& g) {
    int n = g.num_vertices();
    return g.num_edges() == static_cast<std::size_t>(n) * (n - 1) / 2;
}

namespace {

constexpr int kMaxPattern = 10;

void check_pattern_size(const Graph& h) {
    if (h.num_vertices() > kMaxPattern)
        throw InputError("pattern graphs are limited to " + std::to_string(kMaxPattern) + " vertices");
}

// Pattern vertices in an order where each vertex after the first in its
// component has an earlier neighbour, which keeps candidate sets small.
std::vector<int> search_order(const Graph& h) {
    int k = h.num_vertices();
    std::vector<int> order;
    std::vector<char> used(k, 0);
    while (static_cast<int>(order.size()) < k) {
        int best = -1;
        for (int v = 0; v < k; ++v) {
            if (used[v]) continue;
            int linked = 0;
            for (int u : h.neighbors(v)) linked += used[u];
            if (best == -1) {
                best = v;
                continue;
            }
            int best_linked = 0;
            for (int u : h.neighbors(best)) best_linked += used[u];
            if (linked > best_linked || (linked == best_linked && h.degree(v) > h.degree(best))) best = v;
        }
        used[best] = 1;
        order.push_back(best);
    }
    return order;
}

// Calls visit(map) for every injective homomorphism h -> g.
void for_each_embedding(const Graph& g, const Graph& h, const std::function<void(const std::vector<int>&)>& visit) {
    int k = h.num_vertices();
    int n = g.num_vertices();
    if (k == 0) {
        visit({});
        return;
    }
    if (k > n) return;
    std::vector<int> order = search_order(h);
    std::vector<int> map(k, -1);
    std::vector<char> used(n, 0);
    std::function<void(int)> rec = [&](int depth) {
        if (depth == k) {
            visit(map);
            return;
        }
        int p = order[depth];
        int anchor = -1;
        for (int q : h.neighbors(p))
            if (map[q] >= 0) {
                anchor = q;
                break;
            }
        auto try_vertex = [&](int x) {
            if (used[x]) return;
            if (g.degree(x) < h.degree(p)) return;
            for (int q : h.neighbors(p))
                if (map[q] >= 0 && !g.has_edge(x, map[q])) return;
            map[p] = x;
            used[x] = 1;
            rec(depth + 1);
            used[x] = 0;
            map[p] = -1;
        };
        if (anchor >= 0) {
            for (int x : g.neighbors(map[anchor])) try_vertex(x);
        } else {
            for (int x = 0; x < n; ++x) try_vertex(x);
        }
    };
    rec(0);
}

}  // namespace

std::vector<std::vector<int>> automorphisms(const Graph& h) {
    check_pattern_size(h);
    std::vector<std::vector<int>> out;
    for_each_embedding(h, h, [&](const std::vector<int>& m) { out.push_back(m); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Copy> enumerate_copies(const Graph& g, const Graph& h) {
    check_pattern_size(h);
    auto aut = automorphisms(h);
    int k = h.num_vertices();
    std::vector<Copy> out;
    std::vector<int> composed(k);
    for_each_embedding(g, h, [&](const std::vector<int>& m) {
        // Keep only the lexicographically smallest map of each Aut(h) orbit:
        // two maps describe the same subgraph exactly when they differ by an
        // automorphism of h.
        for (const auto& s : aut) {
            for (int i = 0; i < k; ++i) composed[i] = m[s[i]];
            if (composed < m) return;
        }
        Copy c;
        c.map = m;
        c.vertices = m;
        std::sort(c.vertices.begin(), c.vertices.end());
        out.push_back(std::move(c));
    });
    std::sort(out.begin(), out.end(), [](const Copy& a, const Copy& b) {
        return a.vertices != b.vertices ? a.vertices < b.vertices : a.map < b.map;
    });
    return out;
}

std::uint64_t count_injective_homomorphisms(const Graph& g, const Graph& h) {
    // Deliberately naive: try every injective assignment in index order.
    int k = h.num_vertices();
    int n = g.num_vertices();
    std::vector<int> map(k, -1);
    std::vector<char> used(n, 0);
    std::uint64_t count = 0;
    std::function<void(int)> rec = [&](int p) {
        if (p == k) {
            ++count;
            return;
        }
        for (int x = 0; x < n; ++x) {
            if (used[x]) continue;
            bool ok = true;
            for (int q = 0; q < p && ok; ++q)
                if (h.has_edge(p, q) && !g.has_edge(x, map[q])) ok = false;
            if (!ok) continue;
            used[x] = 1;
            map[p] = x;
            rec(p + 1);
            used[x] = 0;
        }
    };
    rec(0);
    return count;
}

BlockDecomposition blocks(const Graph& h) {
    int n = h.num_vertices();
    BlockDecomposition out;
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> estack;
    std::vector<char> is_cut(n, 0);
    int timer = 0;

    // Iterative Hopcroft-Tarjan over edges.
    struct Frame {
        int v, parent;
        std::size_t next;
        int children;
    };
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        if (h.degree(root) == 0) {
            out.blocks.push_back({root});
            disc[root] = timer++;
            continue;
        }
        std::vector<Frame> st{{root, -1, 0, 0}};
        disc[root] = low[root] = timer++;
        while (!st.empty()) {
            Frame& f = st.back();
            if (f.next < h.neighbors(f.v).size()) {
                int u = h.neighbors(f.v)[f.next++];
                if (disc[u] == -1) {
                    estack.emplace_back(f.v, u);
                    f.children++;
                    disc[u] = low[u] = timer++;
                    st.push_back({u, f.v, 0, 0});
                } else if (u != f.parent && disc[u] < disc[f.v]) {
                    estack.emplace_back(f.v, u);
                    low[f.v] = std::min(low[f.v], disc[u]);
                }
            } else {
                Frame done = f;
                st.pop_back();
                if (st.empty()) break;
                Frame& p = st.back();
                low[p.v] = std::min(low[p.v], low[done.v]);
                if (low[done.v] >= disc[p.v]) {
                    if (p.parent != -1 || p.children > 1) is_cut[p.v] = 1;
                    std::vector<int> blk;
                    while (true) {
                        Edge e = estack.back();
                        estack.pop_back();
                        blk.push_back(e.first);
                        blk.push_back(e.second);
                        if (e.first == p.v && e.second == done.v) break;
                    }
                    std::sort(blk.begin(), blk.end());
                    blk.erase(std::unique(blk.begin(), blk.end()), blk.end());
                    out.blocks.push_back(std::move(blk));
                }
            }
        }
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    for (int v = 0; v < n; ++v)
        if (is_cut[v]) out.cutvertices.push_back(v);
    for (int b = 0; b < static_cast<int>(out.blocks.size()); ++b)
        for (int v : out.blocks[b])
            if (is_cut[v]) out.tree_edges.emplace_back(b, v);
    return out;
}

bool is_block_graph(const Graph& h) {
    for (const auto& b : blocks(h).blocks)
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j)
                if (!h.has_edge(b[i], b[j])) return false;
    return true;
}

std::vector<int> min_block_separator(const Graph& h, const std::vector<int>& block) {
    std::vector<int> blk = block;
    std::sort(blk.begin(), blk.end());
    Graph sub = induced_subgraph(h, blk);
    int b = sub.num_vertices();
    if (is_complete(sub)) throw InputError("min_block_separator: block is a clique and has no separator");
    for (int size = 1; size <= b - 2; ++size) {
        // Combinations of positions in lexicographic order.
        std::vector<int> pick(size);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            std::vector<char> removed(b, 0);
            for (int p : pick) removed[p] = 1;
            std::vector<int> rest;
            for (int v = 0; v < b; ++v)
                if (!removed[v]) rest.push_back(v);
            if (!is_connected(induced_subgraph(sub, rest))) {
                std::vector<int> out;
                for (int p : pick) out.push_back(blk[p]);
                return out;
            }
            int i = size - 1;
            while (i >= 0 && pick[i] == b - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    throw InputError("min_block_separator: no separator found");
}

}  // namespace treepack
