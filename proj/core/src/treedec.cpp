#include "treepack/treedec.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "treepack/errors.hpp"

namespace treepack {

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
}

namespace {

std::string at_line(int line) { return "line " + std::to_string(line) + ": "; }

long long parse_int(const std::string& tok, int lineno) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw InputError(at_line(lineno) + "expected integer, got '" + tok + "'");
    }
}

Validation fail(std::string kind, std::string message, std::vector<int> witness) {
    return {false, std::move(kind), std::move(message), std::move(witness)};
}

std::vector<std::vector<int>> tree_adjacency(int nbags, const std::vector<std::pair<int, int>>& tree) {
    std::vector<std::vector<int>> adj(nbags);
    for (auto [a, b] : tree) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

// Shape and running-intersection checks shared by validate() and nicify().
Validation validate_shape(const TreeDecomposition& td) {
    int nb = static_cast<int>(td.bags.size());
    for (int i = 0; i < nb; ++i)
        for (int v : td.bags[i])
            if (v < 0 || v >= td.num_vertices)
                return fail("vertex-out-of-range", "bag " + std::to_string(i) + " holds unknown vertex " + std::to_string(v),
                            {i, v});
    for (auto [a, b] : td.tree)
        if (a < 0 || b < 0 || a >= nb || b >= nb || a == b)
            return fail("bad-tree-edge", "tree edge (" + std::to_string(a) + "," + std::to_string(b) + ") is invalid", {a, b});
    if (nb == 0) {
        if (td.num_vertices > 0) return fail("vertex-uncovered", "decomposition has no bags", {0});
        return {};
    }
    if (static_cast<int>(td.tree.size()) != nb - 1)
        return fail("not-a-tree", "expected " + std::to_string(nb - 1) + " tree edges, found " + std::to_string(td.tree.size()),
                    {});
    auto adj = tree_adjacency(nb, td.tree);
    std::vector<char> seen(nb, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
    }
    if (reached != nb) {
        for (int i = 0; i < nb; ++i)
            if (!seen[i]) return fail("not-a-tree", "bag " + std::to_string(i) + " is not connected to bag 0", {0, i});
    }
    return {};
}

Validation validate_running_intersection(const TreeDecomposition& td) {
    int nb = static_cast<int>(td.bags.size());
    auto adj = tree_adjacency(nb, td.tree);
    std::vector<std::vector<int>> where(td.num_vertices);
    for (int i = 0; i < nb; ++i)
        for (int v : td.bags[i]) where[v].push_back(i);
    std::vector<int> mark(nb, -1);
    for (int v = 0; v < td.num_vertices; ++v) {
        if (where[v].empty()) continue;
        for (int i : where[v]) mark[i] = v;
        std::vector<int> stack{where[v][0]};
        std::vector<int> reached{where[v][0]};
        mark[where[v][0]] = -2 - v;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[x])
                if (mark[y] == v) {
                    mark[y] = -2 - v;
                    reached.push_back(y);
                    stack.push_back(y);
                }
        }
        if (reached.size() != where[v].size()) {
            std::vector<int> w{v};
            for (int i : where[v])
                if (mark[i] == v) {
                    w.push_back(where[v][0]);
                    w.push_back(i);
                    break;
                }
            return fail("vertex-disconnected",
                        "bags containing vertex " + std::to_string(v) + " do not form a connected subtree", w);
        }
    }
    return {};
}

}  // namespace

TreeDecomposition parse_td(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    TreeDecomposition td;
    long long nbags = -1, declared = -1;
    std::vector<char> have;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty() || tok[0] == "c") continue;
        if (tok[0] == "s") {
            if (nbags >= 0) throw InputError(at_line(lineno) + "duplicate solution line");
            if (tok.size() != 5 || tok[1] != "td")
                throw InputError(at_line(lineno) + "malformed header, expected 's td <bags> <width+1> <n>'");
            nbags = parse_int(tok[2], lineno);
            declared = parse_int(tok[3], lineno);
            long long n = parse_int(tok[4], lineno);
            if (nbags < 0 || declared < 0 || n < 0) throw InputError(at_line(lineno) + "negative count in header");
            td.num_vertices = static_cast<int>(n);
            td.bags.assign(nbags, {});
            have.assign(nbags, 0);
            continue;
        }
        if (nbags < 0) throw InputError(at_line(lineno) + "content before 's td' header");
        if (tok[0] == "b") {
            if (tok.size() < 2) throw InputError(at_line(lineno) + "bag line without id");
            long long id = parse_int(tok[1], lineno);
            if (id < 1 || id > nbags) throw InputError(at_line(lineno) + "bag id " + tok[1] + " out of range");
            if (have[id - 1]) throw InputError(at_line(lineno) + "bag " + tok[1] + " listed twice");
            have[id - 1] = 1;
            auto& bag = td.bags[id - 1];
            for (std::size_t i = 2; i < tok.size(); ++i) {
                long long v = parse_int(tok[i], lineno);
                if (v < 1 || v > td.num_vertices)
                    throw InputError(at_line(lineno) + "bag references unknown vertex " + tok[i]);
                bag.push_back(static_cast<int>(v - 1));
            }
            std::sort(bag.begin(), bag.end());
            if (std::adjacent_find(bag.begin(), bag.end()) != bag.end())
                throw InputError(at_line(lineno) + "bag repeats a vertex");
            continue;
        }
        if (tok.size() != 2) throw InputError(at_line(lineno) + "malformed tree edge line");
        long long a = parse_int(tok[0], lineno), b = parse_int(tok[1], lineno);
        if (a < 1 || b < 1 || a > nbags || b > nbags) throw InputError(at_line(lineno) + "tree edge references unknown bag");
        td.tree.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
    }
    if (nbags < 0) throw InputError("missing 's td' header");
    for (long long i = 0; i < nbags; ++i)
        if (!have[i]) throw InputError("bag " + std::to_string(i + 1) + " is never listed");
    if (td.width() + 1 != declared && !(nbags == 0 && declared == 0))
        throw InputError("header declares max bag size " + std::to_string(declared) + " but largest bag has " +
                         std::to_string(td.width() + 1));
    return td;
}

std::string emit_td(const TreeDecomposition& td) {
    std::ostringstream out;
    out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << td.num_vertices << '\n';
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        for (int v : td.bags[i]) out << ' ' << v + 1;
        out << '\n';
    }
    for (auto [a, b] : td.tree) out << a + 1 << ' ' << b + 1 << '\n';
    return out.str();
}

Validation validate(const TreeDecomposition& td, const Graph& g) {
    if (td.num_vertices != g.num_vertices())
        return fail("vertex-count-mismatch",
                    "decomposition is for " + std::to_string(td.num_vertices) + " vertices, graph has " +
                        std::to_string(g.num_vertices()),
                    {});
    if (auto r = validate_shape(td); !r.ok) return r;
    std::vector<char> covered(g.num_vertices(), 0);
    for (const auto& b : td.bags)
        for (int v : b) covered[v] = 1;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!covered[v]) return fail("vertex-uncovered", "vertex " + std::to_string(v) + " is in no bag", {v});
    std::vector<std::vector<int>> where(g.num_vertices());
    for (int i = 0; i < static_cast<int>(td.bags.size()); ++i)
        for (int v : td.bags[i]) where[v].push_back(i);
    for (auto [u, v] : g.edges()) {
        const auto& a = where[u];
        bool found = false;
        for (int i : a)
            if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), v)) {
                found = true;
                break;
            }
        if (!found)
            return fail("edge-uncovered", "edge (" + std::to_string(u) + "," + std::to_string(v) + ") is in no bag", {u, v});
    }
    return validate_running_intersection(td);
}

TreeDecomposition path_decomposition(int num_vertices, std::vector<std::vector<int>> bags) {
    TreeDecomposition td;
    td.num_vertices = num_vertices;
    for (auto& b : bags) {
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
    }
    td.bags = std::move(bags);
    for (int i = 0; i + 1 < static_cast<int>(td.bags.size()); ++i) td.tree.emplace_back(i, i + 1);
    return td;
}

const char* to_string(NodeKind k) {
    switch (k) {
        case NodeKind::Leaf: return "leaf";
        case NodeKind::Introduce: return "introduce";
        case NodeKind::Forget: return "forget";
        case NodeKind::Join: return "join";
    }
    return "?";
}

int NiceTreeDecomposition::width() const {
    int w = -1;
    for (const auto& n : nodes) w = std::max(w, static_cast<int>(n.bag.size()) - 1);
    return w;
}

TreeDecomposition NiceTreeDecomposition::as_tree_decomposition() const {
    TreeDecomposition td;
    td.num_vertices = num_vertices;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        td.bags.push_back(nodes[i].bag);
        for (int c : nodes[i].children) td.tree.emplace_back(c, static_cast<int>(i));
    }
    return td;
}

NiceTreeDecomposition nicify(const TreeDecomposition& td) {
    if (auto r = validate_shape(td); !r.ok) throw InputError("nicify: " + r.message);
    if (auto r = validate_running_intersection(td); !r.ok) throw InputError("nicify: " + r.message);

    NiceTreeDecomposition out;
    out.num_vertices = td.num_vertices;
    auto& nodes = out.nodes;
    auto add = [&](NodeKind kind, int vertex, std::vector<int> bag, std::vector<int> children) {
        nodes.push_back({kind, vertex, std::move(bag), std::move(children)});
        return static_cast<int>(nodes.size()) - 1;
    };
    // Walks from node `from` (bag `cur`) to `target`, forgetting first so the
    // intermediate bags never exceed max(|cur|, |target|).
    auto transition = [&](int from, std::vector<int> cur, const std::vector<int>& target) {
        std::vector<int> drop, gain;
        std::set_difference(cur.begin(), cur.end(), target.begin(), target.end(), std::back_inserter(drop));
        std::set_difference(target.begin(), target.end(), cur.begin(), cur.end(), std::back_inserter(gain));
        for (int v : drop) {
            cur.erase(std::lower_bound(cur.begin(), cur.end(), v));
            from = add(NodeKind::Forget, v, cur, {from});
        }
        for (int v : gain) {
            cur.insert(std::lower_bound(cur.begin(), cur.end(), v), v);
            from = add(NodeKind::Introduce, v, cur, {from});
        }
        return from;
    };

    int nb = static_cast<int>(td.bags.size());
    if (nb == 0) {
        add(NodeKind::Leaf, -1, {}, {});
        return out;
    }
    auto adj = tree_adjacency(nb, td.tree);
    std::vector<int> order{0}, parent(nb, -1);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int y : adj[order[i]])
            if (y != parent[order[i]] && y != 0) {
                parent[y] = order[i];
                order.push_back(y);
            }
    std::vector<std::vector<int>> kids(nb);
    for (int i = 1; i < nb; ++i) kids[parent[order[i]]].push_back(order[i]);

    std::vector<int> top(nb, -1);  // nice node whose bag equals td.bags[t]
    for (int idx = nb - 1; idx >= 0; --idx) {
        int t = order[idx];
        const auto& bag = td.bags[t];
        if (kids[t].empty()) {
            int leaf = add(NodeKind::Leaf, -1, {}, {});
            top[t] = transition(leaf, {}, bag);
            continue;
        }
        int acc = -1;
        for (int c : kids[t]) {
            int branch = transition(top[c], td.bags[c], bag);
            acc = acc < 0 ? branch : add(NodeKind::Join, -1, bag, {acc, branch});
        }
        top[t] = acc;
    }
    transition(top[0], td.bags[0], {});
    return out;
}

Validation validate_nice(const NiceTreeDecomposition& ntd) {
    const auto& nodes = ntd.nodes;
    if (nodes.empty()) return fail("empty", "no nodes", {});
    if (!nodes.back().bag.empty()) return fail("root-not-empty", "root bag is not empty", {ntd.root()});
    std::vector<int> parents(nodes.size(), 0);
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
        const auto& n = nodes[i];
        for (int c : n.children) {
            if (c < 0 || c >= i) return fail("order", "child index must precede its parent", {i, c});
            parents[c]++;
        }
        auto bad = [&](const std::string& why) { return fail("bad-node", "node " + std::to_string(i) + ": " + why, {i}); };
        switch (n.kind) {
            case NodeKind::Leaf:
                if (!n.children.empty() || !n.bag.empty()) return bad("leaf must be childless with empty bag");
                break;
            case NodeKind::Introduce: {
                if (n.children.size() != 1) return bad("introduce needs one child");
                auto expect = nodes[n.children[0]].bag;
                if (std::binary_search(expect.begin(), expect.end(), n.vertex)) return bad("introduced vertex already present");
                expect.insert(std::lower_bound(expect.begin(), expect.end(), n.vertex), n.vertex);
                if (expect != n.bag) return bad("bag is not child bag plus introduced vertex");
                break;
            }
            case NodeKind::Forget: {
                if (n.children.size() != 1) return bad("forget needs one child");
                auto expect = nodes[n.children[0]].bag;
                auto it = std::lower_bound(expect.begin(), expect.end(), n.vertex);
                if (it == expect.end() || *it != n.vertex) return bad("forgotten vertex not in child");
                expect.erase(it);
                if (expect != n.bag) return bad("bag is not child bag minus forgotten vertex");
                break;
            }
            case NodeKind::Join:
                if (n.children.size() != 2) return bad("join needs two children");
                if (nodes[n.children[0]].bag != n.bag || nodes[n.children[1]].bag != n.bag)
                    return bad("join children bags differ");
                break;
        }
    }
    for (int i = 0; i + 1 < static_cast<int>(nodes.size()); ++i)
        if (parents[i] != 1) return fail("not-a-tree", "node " + std::to_string(i) + " does not have exactly one parent", {i});
    return {};
}

TreeDecomposition heuristic_treedec(const Graph& g, Heuristic strategy) {
    int n = g.num_vertices();
    TreeDecomposition td;
    td.num_vertices = n;
    if (n == 0) {
        td.bags.push_back({});
        return td;
    }
    std::vector<std::set<int>> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = std::set<int>(g.neighbors(v).begin(), g.neighbors(v).end());
    std::vector<char> gone(n, 0);
    std::vector<int> position(n, -1);
    std::vector<std::vector<int>> bag_of(n);
    std::vector<int> order;
    auto fill_in = [&](int v) {
        long long missing = 0;
        for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
            for (auto b = std::next(a); b != adj[v].end(); ++b)
                if (!adj[*a].count(*b)) ++missing;
        return missing;
    };
    for (int step = 0; step < n; ++step) {
        int best = -1;
        long long best_score = std::numeric_limits<long long>::max();
        for (int v = 0; v < n; ++v) {
            if (gone[v]) continue;
            long long score = strategy == Heuristic::MinDegree ? static_cast<long long>(adj[v].size()) : fill_in(v);
            if (score < best_score || (score == best_score && adj[v].size() < adj[best].size())) {
                best = v;
                best_score = score;
            }
        }
        int v = best;
        std::vector<int> bag(adj[v].begin(), adj[v].end());
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        bag_of[v] = bag;
        for (int a : adj[v])
            for (int b : adj[v])
                if (a != b) adj[a].insert(b);
        for (int a : adj[v]) adj[a].erase(v);
        adj[v].clear();
        gone[v] = 1;
        position[v] = step;
        order.push_back(v);
    }
    // Bag i belongs to order[i]; its parent is the earliest-eliminated
    // neighbour among those eliminated later.
    std::vector<int> roots;
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        td.bags.push_back(bag_of[v]);
        int parent = -1;
        for (int u : bag_of[v])
            if (u != v && (parent == -1 || position[u] < parent)) parent = position[u];
        if (parent >= 0)
            td.tree.emplace_back(i, parent);
        else
            roots.push_back(i);
    }
    for (std::size_t r = 1; r < roots.size(); ++r) td.tree.emplace_back(roots[r - 1], roots[r]);
    return td;
}

}  // namespace treepack
