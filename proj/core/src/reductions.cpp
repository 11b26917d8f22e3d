#include "treepack/reductions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "treepack/errors.hpp"
#include "treepack/graph_io.hpp"

namespace treepack {

namespace {

std::string idx(std::initializer_list<int> parts) {
    std::string s = "(";
    bool first = true;
    for (int p : parts) {
        if (!first) s += ",";
        s += std::to_string(p);
        first = false;
    }
    return s + ")";
}

std::vector<int> merged(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> sorted_copy(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Builds a reduction output incrementally: gadgets are embedded through an
// Assembler and every bag of a gadget's own path decomposition is emitted
// together with the current set of long-lived vertices.
class Builder {
public:
    int add_vertex(const std::string& label) { return a_.add_vertex(label); }
    std::vector<int> add_group(const std::string& name, int count) {
        auto v = a_.add_vertices(count, name + ".");
        out_.certificates[name] = v;
        return v;
    }
    void add_edge(int u, int v) { a_.add_edge(u, v); }

    void enter(const std::vector<int>& vs) { state_ = merged(state_, sorted_copy(vs)); }
    void leave(const std::vector<int>& vs) {
        std::set<int> drop(vs.begin(), vs.end());
        std::vector<int> keep;
        for (int v : state_)
            if (!drop.count(v)) keep.push_back(v);
        state_ = std::move(keep);
    }
    void emit_state() { bags_.push_back(state_); }

    int gadget_type(const Gadget& g) {
        std::string key = g.kind + "|" + g.claimed.to_json();
        auto it = type_index_.find(key);
        if (it != type_index_.end()) return it->second;
        int id = static_cast<int>(out_.gadget_types.size());
        out_.gadget_types.push_back(g);
        decomps_.push_back(path_order(g.path_decomposition()));
        type_index_.emplace(key, id);
        return id;
    }

    void place(const Gadget& g, const std::vector<int>& targets, const std::string& tag) {
        int type = gadget_type(g);
        auto map = a_.embed(g, targets, tag);
        for (const auto& bag : decomps_[type]) {
            std::vector<int> mapped;
            mapped.reserve(bag.size());
            for (int v : bag) mapped.push_back(map[v]);
            mapped = sorted_copy(std::move(mapped));
            out_.max_gadget_bag = std::max(out_.max_gadget_bag, static_cast<int>(mapped.size()));
            bags_.push_back(merged(state_, mapped));
        }
        GadgetUse use;
        use.tag = tag;
        use.type = type;
        use.vertices = targets;
        for (int v = 0; v < g.graph.num_vertices(); ++v)
            if (std::find(g.portals.begin(), g.portals.end(), v) == g.portals.end()) use.vertices.push_back(map[v]);
        out_.gadgets.push_back(std::move(use));
    }

    ReductionOutput finish() {
        out_.graph = a_.build();
        out_.decomposition = path_decomposition(out_.graph.num_vertices(), std::move(bags_));
        return std::move(out_);
    }

private:
    Assembler a_;
    ReductionOutput out_;
    std::vector<int> state_;
    std::vector<std::vector<int>> bags_;
    std::vector<std::vector<std::vector<int>>> decomps_;
    std::map<std::string, int> type_index_;
};

void require_regular(const Relation& r, int x, int d, const std::string& what) {
    if (!is_regular(r, x, d))
        throw std::logic_error(what + " is not (" + std::to_string(x) + "," + std::to_string(d) + ")-regular");
}

}  // namespace

std::string ReductionOutput::summary_json() const {
    nlohmann::json j;
    j["unsatisfiable"] = unsatisfiable;
    if (!note.empty()) j["note"] = note;
    j["vertices"] = graph.num_vertices();
    j["edges"] = graph.num_edges();
    j["bags"] = decomposition.bags.size();
    j["width"] = decomposition.width();
    j["max_gadget_bag"] = max_gadget_bag;
    j["certificates"] = certificates;
    nlohmann::json types = nlohmann::json::array();
    for (const auto& g : gadget_types) {
        nlohmann::json t;
        t["kind"] = g.kind;
        t["c"] = g.c;
        t["vertices"] = g.graph.num_vertices();
        t["portals"] = g.portals.size();
        t["relation"] = nlohmann::json::parse(g.claimed.to_json());
        types.push_back(t);
    }
    j["gadget_types"] = types;
    nlohmann::json uses = nlohmann::json::array();
    for (const auto& u : gadgets) uses.push_back({{"tag", u.tag}, {"type", u.type}});
    j["gadgets"] = uses;
    return j.dump();
}

int choose_ell(int B, int c, int d) {
    if (B < 1 || c < 1 || d < 1) throw InputError("choose_ell needs B >= 1, c >= 1, d >= 1");
    for (int ell = d;; ell += d) {
        long double cap = 1;
        for (int i = 0; i < ell - d && cap < B; ++i) cap *= c + 1;
        if (cap >= B) return ell;
    }
}

std::vector<Tuple> phi_encoding(int B, int ell, int c, int d) {
    if (ell < d || ell % d != 0) throw InputError("phi_encoding: ell must be a positive multiple of d");
    int free = ell - d;
    long double cap = 1;
    for (int i = 0; i < free && cap < B; ++i) cap *= c + 1;
    if (cap < B) throw InputError("phi_encoding: (c+1)^(ell-d) is smaller than B");
    std::vector<Tuple> out;
    for (int v = 1; v <= B; ++v) {
        Tuple t(ell, 0);
        int rest = v - 1;
        for (int pos = free - 1; pos >= 0; --pos) {
            t[pos] = rest % (c + 1);
            rest /= c + 1;
        }
        int p = (d - weight(t) % d) % d;
        for (int q = 0; q < p; ++q) t[free + q] = 1;
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<std::vector<int>> path_order(const TreeDecomposition& td) {
    int nb = static_cast<int>(td.bags.size());
    if (nb == 0) return {};
    if (static_cast<int>(td.tree.size()) != nb - 1) throw InputError("path_order: decomposition is not a tree");
    std::vector<std::vector<int>> adj(nb);
    for (auto [x, y] : td.tree) {
        if (x < 0 || y < 0 || x >= nb || y >= nb) throw InputError("path_order: bag index out of range");
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    int start = -1;
    for (int b = 0; b < nb; ++b) {
        if (adj[b].size() > 2) throw InputError("path_order: decomposition is not a path");
        if (adj[b].size() < 2 && start < 0) start = b;
    }
    if (start < 0) throw InputError("path_order: decomposition is not a path");
    std::vector<std::vector<int>> out;
    std::vector<char> seen(nb, 0);
    for (int cur = start, prev = -1; cur >= 0;) {
        seen[cur] = 1;
        out.push_back(td.bags[cur]);
        int next = -1;
        for (int y : adj[cur])
            if (y != prev && !seen[y]) next = y;
        prev = cur;
        cur = next;
    }
    if (static_cast<int>(out.size()) != nb) throw InputError("path_order: decomposition is not connected");
    return out;
}

TreeDecomposition vertex_order_pathdec(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> last(n);
    for (int v = 0; v < n; ++v) {
        last[v] = v;
        for (int u : g.neighbors(v)) last[v] = std::max(last[v], u);
    }
    std::vector<std::vector<int>> bags;
    for (int k = 0; k < n; ++k) {
        std::vector<int> bag;
        for (int u = 0; u < k; ++u)
            if (last[u] >= k) bag.push_back(u);
        bag.push_back(k);
        bags.push_back(std::move(bag));
    }
    return path_decomposition(n, std::move(bags));
}

CspLayout csp_layout(const Csp2Instance& csp) {
    csp.check();
    TreeDecomposition td = csp.pathdec.bags.empty() ? vertex_order_pathdec(csp.primal_graph()) : csp.pathdec;
    auto bags = path_order(td);
    for (auto& b : bags) b = sorted_copy(b);
    int m = static_cast<int>(csp.constraints.size());
    std::vector<std::vector<int>> assigned(bags.size());
    for (int s = 0; s < m; ++s) {
        const auto& con = csp.constraints[s];
        int found = -1;
        for (std::size_t j = 0; j < bags.size() && found < 0; ++j)
            if (std::binary_search(bags[j].begin(), bags[j].end(), con.i) &&
                std::binary_search(bags[j].begin(), bags[j].end(), con.j))
                found = static_cast<int>(j);
        if (found < 0) throw InputError("csp_layout: no bag holds both variables of a constraint");
        assigned[found].push_back(s);
    }
    CspLayout layout;
    layout.width = td.width();
    layout.bag_of.assign(m, -1);
    for (std::size_t j = 0; j < bags.size(); ++j) {
        std::size_t copies = std::max<std::size_t>(1, assigned[j].size());
        for (std::size_t q = 0; q < copies; ++q) {
            if (q < assigned[j].size()) layout.bag_of[assigned[j][q]] = static_cast<int>(layout.bags.size());
            layout.bags.push_back(bags[j]);
        }
    }
    return layout;
}

ReductionOutput reduce_csp_to_multiclique(const Csp2Instance& csp, int c, int d, int ell) {
    if (c < 1 || d < 3) throw InputError("reduce_csp_to_multiclique needs c >= 1 and d >= 3");
    CspLayout layout = csp_layout(csp);
    if (ell == 0) ell = choose_ell(csp.B, c, d);
    auto phi = phi_encoding(csp.B, ell, c, d);

    for (const auto& con : csp.constraints)
        if (con.allowed.empty()) {
            ReductionOutput out;
            out.unsatisfiable = true;
            out.note = "constraint on variables " + std::to_string(con.i + 1) + "," + std::to_string(con.j + 1) +
                       " allows no pair";
            return out;
        }

    Relation w(ell, c, phi);
    Relation wc = complement(w, c);
    Relation copy = rel_copy(w, c);
    require_regular(w, 0, d, "W");
    require_regular(wc, 0, d, "W^C");
    require_regular(copy, 0, d, "COPY");
    Gadget gl = clique_reg_relation_gadget(c, d, wc);
    Gadget gr = clique_reg_relation_gadget(c, d, w);
    Gadget gf = clique_reg_relation_gadget(c, d, copy);

    int t = static_cast<int>(layout.bags.size());
    int n = csp.n;
    std::vector<int> first(n, -1), last(n, -1);
    for (int j = 0; j < t; ++j)
        for (int v : layout.bags[j]) {
            if (first[v] < 0) first[v] = j;
            last[v] = j;
        }
    std::vector<int> represents(t, -1);
    for (std::size_t s = 0; s < csp.constraints.size(); ++s) represents[layout.bag_of[s]] = static_cast<int>(s);

    Builder b;
    // a[i][j - first[i]] holds the ell vertices of variable i at step j.
    std::vector<std::vector<std::vector<int>>> a(n);
    for (int i = 0; i < n; ++i) {
        if (first[i] < 0) throw InputError("reduce_csp_to_multiclique: variable missing from the decomposition");
        for (int j = first[i]; j <= last[i] + 1; ++j) a[i].push_back(b.add_group("a" + idx({i + 1, j + 1}), ell));
    }
    auto at = [&](int i, int j) -> const std::vector<int>& { return a[i][j - first[i]]; };

    std::map<std::string, Gadget> constraint_gadgets;
    for (int j = 0; j < t; ++j) {
        for (int i : layout.bags[j])
            if (first[i] == j) {
                b.enter(at(i, j));
                b.place(gl, at(i, j), "L" + idx({i + 1}));
            }
        b.emit_state();
        std::set<int> gamma;
        if (represents[j] >= 0) {
            const auto& con = csp.constraints[represents[j]];
            int i1 = con.i, i2 = con.j;
            Relation rj(4 * ell, c);
            for (auto [u1, u2] : con.allowed)
                rj.insert(stack({phi[u1 - 1], phi[u2 - 1], complement(phi[u1 - 1], c), complement(phi[u2 - 1], c)}));
            require_regular(rj, 0, d, "R_" + std::to_string(j + 1));
            std::string key = rj.to_json();
            auto it = constraint_gadgets.find(key);
            if (it == constraint_gadgets.end()) it = constraint_gadgets.emplace(key, clique_reg_relation_gadget(c, d, rj)).first;
            std::vector<int> targets = at(i1, j);
            for (const auto* part : {&at(i2, j), &at(i1, j + 1), &at(i2, j + 1)})
                targets.insert(targets.end(), part->begin(), part->end());
            b.enter(at(i1, j + 1));
            b.enter(at(i2, j + 1));
            b.place(it->second, targets, "N" + idx({j + 1}));
            b.leave(at(i1, j));
            b.leave(at(i2, j));
            b.emit_state();
            gamma = {i1, i2};
        }
        for (int i : layout.bags[j]) {
            if (gamma.count(i)) continue;
            std::vector<int> targets = at(i, j);
            targets.insert(targets.end(), at(i, j + 1).begin(), at(i, j + 1).end());
            b.enter(at(i, j + 1));
            b.place(gf, targets, "F" + idx({j + 1, i + 1}));
            b.leave(at(i, j));
            b.emit_state();
        }
        for (int i : layout.bags[j])
            if (last[i] == j) {
                b.place(gr, at(i, j + 1), "R" + idx({i + 1}));
                b.leave(at(i, j + 1));
            }
    }
    b.emit_state();

    long long expected = 0;
    for (int i = 0; i < n; ++i) expected += static_cast<long long>(ell) * (last[i] - first[i] + 2);
    long long counted = 0;
    for (int i = 0; i < n; ++i)
        for (const auto& g : a[i]) counted += static_cast<long long>(g.size());
    if (counted != expected) throw std::logic_error("reduce_csp_to_multiclique: a-vertex count audit failed");
    return b.finish();
}

ReductionOutput reduce_multi_to_single(const Graph& g, int c, int d, const std::optional<TreeDecomposition>& td) {
    if (c < 1 || d < 3) throw InputError("reduce_multi_to_single needs c >= 1 and d >= 3");
    TreeDecomposition base = td ? *td : heuristic_treedec(g);
    auto check = validate(base, g);
    if (!check.ok) throw InputError("reduce_multi_to_single: input decomposition invalid: " + check.message);

    Gadget eq = eq_gadget_single(c, NeqSource::builtin(complete_graph(d)));
    auto eq_bags = path_order(eq.path_decomposition());

    ReductionOutput out;
    out.gadget_types.push_back(eq);
    Assembler a(g);
    std::vector<std::vector<int>> bags = base.bags;
    for (auto& bag : bags) bag = sorted_copy(bag);
    auto tree = base.tree;
    int index = 0;
    for (const auto& copy : enumerate_copies(g, complete_graph(d))) {
        ++index;
        const auto& clique = copy.vertices;
        int host = -1;
        for (std::size_t x = 0; x < bags.size() && host < 0; ++x)
            if (std::includes(bags[x].begin(), bags[x].end(), clique.begin(), clique.end())) host = static_cast<int>(x);
        if (host < 0) throw std::logic_error("reduce_multi_to_single: clique not inside any bag");
        std::string tag = "E" + idx({index});
        auto map = a.embed(eq, clique, tag);
        out.certificates["X" + idx({index})] = clique;
        GadgetUse use{tag, 0, clique};
        for (int v : eq.internal_vertices()) use.vertices.push_back(map[v]);
        out.gadgets.push_back(std::move(use));
        std::vector<int> host_bag = bags[host];
        int prev = host;
        for (const auto& eb : eq_bags) {
            std::vector<int> mapped;
            for (int v : eb) mapped.push_back(map[v]);
            mapped = sorted_copy(std::move(mapped));
            out.max_gadget_bag = std::max(out.max_gadget_bag, static_cast<int>(mapped.size()));
            bags.push_back(merged(host_bag, mapped));
            int id = static_cast<int>(bags.size()) - 1;
            tree.emplace_back(prev, id);
            prev = id;
        }
    }
    out.graph = a.build();
    out.decomposition.num_vertices = out.graph.num_vertices();
    out.decomposition.bags = std::move(bags);
    out.decomposition.tree = std::move(tree);
    return out;
}

SeparatorSplit separator_split(const Graph& h) {
    if (!is_connected(h)) throw InputError("separator_split: pattern must be connected");
    if (is_block_graph(h)) throw InputError("separator_split: pattern is a block graph");
    auto bd = blocks(h);
    SeparatorSplit best;
    std::vector<int> sep;
    for (const auto& blk : bd.blocks) {
        if (is_complete(induced_subgraph(h, blk))) continue;
        auto s = min_block_separator(h, blk);
        if (sep.empty() || s.size() < sep.size()) {
            sep = s;
            best.block = blk;
        }
    }
    std::sort(sep.begin(), sep.end());
    std::size_t half = (sep.size() + 1) / 2;
    best.up.assign(sep.begin(), sep.begin() + half);
    best.down.assign(sep.begin() + half, sep.end());
    std::vector<int> rest;
    for (int v = 0; v < h.num_vertices(); ++v)
        if (!std::binary_search(sep.begin(), sep.end(), v)) rest.push_back(v);
    Graph sub = induced_subgraph(h, rest);
    for (auto comp : connected_components(sub)) {
        for (int& v : comp) v = rest[v];
        std::sort(comp.begin(), comp.end());
        best.components.push_back(comp);
    }
    std::sort(best.components.begin(), best.components.end());
    return best;
}

ReductionOutput reduce_permiset_to_hpartition(const PermIsetInstance& inst, const Graph& h,
                                              const std::optional<NeqSource>& src_in) {
    int k = inst.k;
    if (k < 2) throw InputError("reduce_permiset_to_hpartition needs k >= 2");
    if (inst.graph.num_vertices() != k * k) throw InputError("reduce_permiset_to_hpartition: graph must have k*k vertices");
    if (h.num_vertices() > 10) throw InputError("reduce_permiset_to_hpartition: pattern has more than 10 vertices");
    SeparatorSplit split = separator_split(h);

    NeqSource src = src_in ? *src_in : [&] {
        for (int v = 0; v < h.num_vertices(); ++v) {
            try {
                return verified_neq_source(doubling_neq_candidate(h, v));
            } catch (const InputError&) {
            }
        }
        throw InputError("reduce_permiset_to_hpartition: no doubling candidate realizes CNEQ_1");
    }();
    if (!(src.pattern() == h)) throw InputError("reduce_permiset_to_hpartition: CNEQ source is for another pattern");

    int hs = h.num_vertices();
    int t = static_cast<int>(split.components.size());
    auto csize = [&](int l) { return static_cast<int>(split.components[l].size()); };

    struct Edge2 {
        int i, j, i2, j2;
        bool active;  // false for same-row edges, which no permutation contains
    };
    std::vector<Edge2> es;
    for (auto [u, v] : inst.graph.edges()) {
        Edge2 e{u / k, u % k, v / k, v % k, true};
        if (e.i > e.i2) {
            std::swap(e.i, e.i2);
            std::swap(e.j, e.j2);
        }
        e.active = e.i != e.i2;
        es.push_back(e);
    }
    // An edgeless instance still needs one layer to encode the permutation.
    if (es.empty()) es.push_back({0, 0, 0, 0, false});
    int m = static_cast<int>(es.size());

    std::map<std::string, Gadget> made;
    auto gadget_for = [&](const Relation& r, const std::string& what) -> const Gadget& {
        int x = regular_residue(r, hs);
        if (x < 0) throw std::logic_error(what + " relation is not regular modulo |H|");
        std::string key = r.to_json();
        auto it = made.find(key);
        if (it == made.end()) it = made.emplace(key, arb_relation_gadget(src, r)).first;
        return it->second;
    };
    auto sel_minus = [&](int y, const Edge2& e) {
        std::vector<std::vector<int>> parts(2);
        for (int q = 1; q <= k; ++q) {
            parts[0].push_back(q);
            parts[1].push_back(k + q);
        }
        Relation all = rel_sel(parts, 2 * k, y);
        Relation drop(all.arity(), all.bound(), {sel_tau({e.j + 1, k + e.j2 + 1}, 2 * k, y)});
        return set_difference(all, drop);
    };

    Builder b;
    std::vector<std::vector<std::vector<int>>> U(m), D(m);
    // X[l][s][i][j]
    std::vector<std::vector<std::vector<std::vector<std::vector<int>>>>> X(
        t, std::vector<std::vector<std::vector<std::vector<int>>>>(
               m, std::vector<std::vector<std::vector<int>>>(k, std::vector<std::vector<int>>(k))));
    for (int s = 0; s < m; ++s) {
        for (int i = 0; i < k; ++i) U[s].push_back(b.add_group("U" + idx({s + 1, i + 1}), static_cast<int>(split.up.size())));
        for (int j = 0; j < k; ++j)
            D[s].push_back(b.add_group("D" + idx({s + 1, j + 1}), static_cast<int>(split.down.size())));
        for (int l = 0; l < t; ++l)
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) X[l][s][i][j] = b.add_group("X" + idx({l + 1, s + 1, i + 1, j + 1}), csize(l));
        // Host ids of the pattern vertices in the copy (s, i, j).
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                std::vector<int> where(hs, -1);
                for (std::size_t q = 0; q < split.up.size(); ++q) where[split.up[q]] = U[s][i][q];
                for (std::size_t q = 0; q < split.down.size(); ++q) where[split.down[q]] = D[s][j][q];
                for (int l = 0; l < t; ++l)
                    for (int q = 0; q < csize(l); ++q) where[split.components[l][q]] = X[l][s][i][j][q];
                for (auto [x, y] : h.edges()) b.add_edge(where[x], where[y]);
            }
    }
    auto row = [&](int l, int s, int i) {
        std::vector<int> v;
        for (int j = 0; j < k; ++j) v.insert(v.end(), X[l][s][i][j].begin(), X[l][s][i][j].end());
        return v;
    };
    auto joined_row = [&](int s, int i) {
        std::vector<int> v;
        for (int j = 0; j < k; ++j) {
            v.insert(v.end(), X[t - 1][s][i][j].begin(), X[t - 1][s][i][j].end());
            v.insert(v.end(), X[0][s + 1][i][j].begin(), X[0][s + 1][i][j].end());
        }
        return v;
    };
    auto layer = [&](int s) {
        std::vector<int> v;
        for (int i = 0; i < k; ++i) v.insert(v.end(), U[s][i].begin(), U[s][i].end());
        for (int j = 0; j < k; ++j) v.insert(v.end(), D[s][j].begin(), D[s][j].end());
        return v;
    };

    b.enter(layer(0));
    b.emit_state();
    for (int i = 0; i < k; ++i) b.place(gadget_for(rel_sel_full(k, csize(0)), "A"), row(0, 0, i), "A" + idx({i + 1}));
    for (int s = 0; s < m; ++s) {
        for (int l = 1; l + 1 < t; ++l)
            for (int i = 0; i < k; ++i)
                b.place(gadget_for(rel_sel_full(k, csize(l)), "Q"), row(l, s, i), "Q" + idx({l + 1, s + 1, i + 1}));
        const Edge2& e = es[s];
        if (s + 1 < m) {
            b.enter(layer(s + 1));
            b.emit_state();
            int y = csize(t - 1) + csize(0);
            for (int i = 0; i < k; ++i) {
                if (e.active && (i == e.i || i == e.i2)) continue;
                b.place(gadget_for(rel_sel_full(k, y), "K"), joined_row(s, i), "K" + idx({s + 1, i + 1}));
            }
            if (e.active) {
                auto targets = joined_row(s, e.i);
                auto second = joined_row(s, e.i2);
                targets.insert(targets.end(), second.begin(), second.end());
                b.place(gadget_for(sel_minus(y, e), "Z"), targets, "Z" + idx({s + 1}));
            }
            b.leave(layer(s));
            b.emit_state();
        } else {
            int y = csize(t - 1);
            for (int i = 0; i < k; ++i) {
                if (e.active && (i == e.i || i == e.i2)) continue;
                b.place(gadget_for(rel_sel_full(k, y), "E"), row(t - 1, s, i), "E" + idx({i + 1}));
            }
            if (e.active) {
                auto targets = row(t - 1, s, e.i);
                auto second = row(t - 1, s, e.i2);
                targets.insert(targets.end(), second.begin(), second.end());
                b.place(gadget_for(sel_minus(y, e), "F"), targets, "F");
            }
        }
    }
    b.emit_state();
    return b.finish();
}

std::string GadgetVerificationCache::key(const Gadget& g) {
    return g.kind + "|" + std::to_string(g.c) + "|" + graph_to_json(g.pattern) + "|" + g.claimed.to_json();
}

const GadgetReport& GadgetVerificationCache::verify(const Gadget& g) {
    std::string k = key(g);
    auto it = reports_.find(k);
    if (it == reports_.end()) it = reports_.emplace(k, verify_gadget(g, limits_)).first;
    return it->second;
}

}  // namespace treepack
