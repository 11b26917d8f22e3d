#include "treepack/gadgets.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "treepack/errors.hpp"
#include "treepack/graph_io.hpp"

namespace treepack {

const char* to_string(Coherence c) {
    switch (c) {
        case Coherence::Claimed: return "claimed";
        case Coherence::Wrapped: return "wrapped";
        case Coherence::Unknown: return "unknown";
    }
    return "?";
}

std::vector<int> Gadget::internal_vertices() const {
    std::vector<char> is_portal(graph.num_vertices(), 0);
    for (int p : portals) is_portal[p] = 1;
    std::vector<int> out;
    for (int v = 0; v < graph.num_vertices(); ++v)
        if (!is_portal[v]) out.push_back(v);
    return out;
}

TreeDecomposition glue_pieces(int num_vertices, const std::vector<std::vector<int>>& pieces) {
    int np = static_cast<int>(pieces.size());
    std::vector<int> first(num_vertices, -1), last(num_vertices, -1);
    for (int p = 0; p < np; ++p)
        for (int v : pieces[p]) {
            if (first[v] < 0) first[v] = p;
            last[v] = p;
        }
    std::vector<std::vector<int>> bags(pieces.begin(), pieces.end());
    std::vector<std::vector<int>> opens(np + 1), closes(np + 1);
    for (int v = 0; v < num_vertices; ++v) {
        if (first[v] < 0) {
            bags.push_back({v});
            continue;
        }
        if (last[v] > first[v] + 1) {
            opens[first[v] + 1].push_back(v);
            closes[last[v]].push_back(v);
        }
    }
    std::set<int> open;
    for (int p = 0; p < np; ++p) {
        for (int v : closes[p]) open.erase(v);
        for (int v : opens[p]) open.insert(v);
        bags[p].insert(bags[p].end(), open.begin(), open.end());
    }
    return path_decomposition(num_vertices, std::move(bags));
}

TreeDecomposition Gadget::path_decomposition() const {
    if (pieces.empty()) {
        std::vector<int> all(graph.num_vertices());
        for (int v = 0; v < graph.num_vertices(); ++v) all[v] = v;
        return treepack::path_decomposition(graph.num_vertices(), {all});
    }
    return glue_pieces(graph.num_vertices(), pieces);
}

std::string Gadget::to_json() const {
    nlohmann::json j;
    j["kind"] = kind;
    j["c"] = c;
    j["pattern"] = nlohmann::json::parse(graph_to_json(pattern));
    j["graph"] = nlohmann::json::parse(graph_to_json(graph));
    j["portals"] = portals;
    j["claimed"] = nlohmann::json::parse(claimed.to_json());
    j["coherent"] = to_string(coherent);
    j["pieces"] = pieces;
    return j.dump();
}

Gadget Gadget::from_json(const std::string& text) {
    try {
        auto j = nlohmann::json::parse(text);
        Gadget g;
        g.kind = j.value("kind", std::string("custom"));
        g.c = j.at("c").get<int>();
        g.pattern = graph_from_json(j.at("pattern").dump());
        g.graph = graph_from_json(j.at("graph").dump());
        g.portals = j.at("portals").get<std::vector<int>>();
        g.claimed = Relation::from_json(j.at("claimed").dump());
        std::string coh = j.value("coherent", std::string("unknown"));
        g.coherent = coh == "claimed" ? Coherence::Claimed : coh == "wrapped" ? Coherence::Wrapped : Coherence::Unknown;
        if (j.contains("pieces")) g.pieces = j["pieces"].get<std::vector<std::vector<int>>>();
        std::set<int> seen;
        for (int p : g.portals)
            if (p < 0 || p >= g.graph.num_vertices() || !seen.insert(p).second)
                throw InputError("gadget portals must be distinct vertices of the graph");
        if (g.claimed.arity() != static_cast<int>(g.portals.size()))
            throw InputError("claimed relation arity does not match the portal count");
        if (g.c < 1) throw InputError("gadget c must be >= 1");
        for (const auto& piece : g.pieces)
            for (int v : piece)
                if (v < 0 || v >= g.graph.num_vertices()) throw InputError("gadget piece references unknown vertex");
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("gadget JSON: ") + e.what());
    }
}

Assembler::Assembler(const Graph& host) : builder_(host) {}

int Assembler::add_vertex(std::string label) { return builder_.add_vertex(std::move(label)); }

std::vector<int> Assembler::add_vertices(int count, const std::string& stem) {
    std::vector<int> out;
    for (int i = 1; i <= count; ++i) out.push_back(add_vertex(stem + std::to_string(i)));
    return out;
}

std::vector<int> Assembler::embed(const Gadget& g, const std::vector<int>& targets, const std::string& tag) {
    if (targets.size() != g.portals.size())
        throw InputError("attach: gadget has " + std::to_string(g.portals.size()) + " portals but " +
                         std::to_string(targets.size()) + " targets were given");
    std::set<int> distinct(targets.begin(), targets.end());
    if (distinct.size() != targets.size()) throw InputError("attach: targets must be distinct");
    for (int t : targets)
        if (t < 0 || t >= num_vertices()) throw InputError("attach: target vertex out of range");
    std::vector<int> map(g.graph.num_vertices(), -1);
    for (std::size_t i = 0; i < targets.size(); ++i) map[g.portals[i]] = targets[i];
    for (int v = 0; v < g.graph.num_vertices(); ++v)
        if (map[v] < 0) map[v] = add_vertex(tag + "/" + g.graph.label(v));
    for (auto [u, v] : g.graph.edges()) builder_.add_edge(map[u], map[v]);
    if (g.pieces.empty()) {
        pieces_.push_back(map);
    } else {
        for (const auto& piece : g.pieces) {
            std::vector<int> mapped;
            mapped.reserve(piece.size());
            for (int v : piece) mapped.push_back(map[v]);
            pieces_.push_back(std::move(mapped));
        }
    }
    return map;
}

Graph attach(const Graph& host, const Gadget& g, const std::vector<int>& targets, const std::string& tag) {
    Assembler a(host);
    a.embed(g, targets, tag);
    return a.build();
}

namespace {

int pattern_size(const Graph& h) { return h.num_vertices(); }

Gadget finish(std::string kind, int c, const Graph& pattern, Assembler& a, std::vector<int> portals, Relation claimed,
              Coherence coherent) {
    Gadget g;
    g.kind = std::move(kind);
    g.c = c;
    g.pattern = pattern;
    g.graph = a.build();
    g.portals = std::move(portals);
    g.claimed = std::move(claimed);
    g.coherent = coherent;
    g.pieces = a.take_pieces();
    return g;
}

std::vector<int> range_values(int lo, int hi) {
    std::vector<int> out;
    for (int x = lo; x <= hi; ++x) out.push_back(x);
    return out;
}

}  // namespace

NeqSource NeqSource::builtin(const Graph& pattern) {
    if (pattern.num_vertices() < 3 || !is_complete(pattern))
        throw InputError("no built-in CNEQ gadget for this pattern; supply a verified base gadget");
    NeqSource s;
    s.pattern_ = pattern;
    return s;
}

NeqSource NeqSource::plugin(Gadget base) {
    if (base.portals.size() != 2) throw InputError("base CNEQ gadget must have exactly two portals");
    if (base.c != 1) throw InputError("base CNEQ gadget must be built for c = 1");
    if (base.claimed != rel_cneq(1)) throw InputError("base gadget must claim the relation CNEQ_1");
    NeqSource s;
    s.pattern_ = base.pattern;
    if (is_complete(s.pattern_) && s.pattern_.num_vertices() >= 3) return s;
    s.base_ = std::move(base);
    return s;
}

Gadget NeqSource::neq(int c) const {
    if (is_clique()) return neq_gadget(c, pattern_.num_vertices());
    if (c != 1) throw InputError("non-clique patterns only support c = 1");
    return *base_;
}

Gadget neq_gadget(int c, int d) {
    if (d < 3) throw InputError("neq_gadget needs d >= 3");
    if (c < 1) throw InputError("neq_gadget needs c >= 1");
    Assembler a;
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= c; ++i) {
        auto blk = a.add_vertices(d - 1, "A" + std::to_string(i) + ".");
        for (std::size_t x = 0; x < blk.size(); ++x)
            for (std::size_t y = x + 1; y < blk.size(); ++y) a.add_edge(blk[x], blk[y]);
        blocks.push_back(blk);
    }
    auto v = a.add_vertices(c + 1, "v");
    for (int vj : v)
        for (const auto& blk : blocks)
            for (int x : blk) a.add_edge(vj, x);
    std::vector<int> all(a.num_vertices());
    for (int i = 0; i < a.num_vertices(); ++i) all[i] = i;
    a.add_piece(all);
    return finish("neq", c, complete_graph(d), a, {v[c - 1], v[c]}, rel_cneq(c, c), Coherence::Claimed);
}

Gadget doubling_neq_candidate(const Graph& pattern, int v) {
    if (v < 0 || v >= pattern.num_vertices()) throw InputError("doubling_neq_candidate: vertex out of range");
    Graph g = blow_up(pattern, v, 2);
    Assembler a(g);
    std::vector<int> all(g.num_vertices());
    for (int i = 0; i < g.num_vertices(); ++i) all[i] = i;
    a.add_piece(all);
    return finish("neq-base", 1, pattern, a, {v, pattern.num_vertices()}, rel_cneq(1, 1), Coherence::Unknown);
}

Gadget coherence_wrap(const Gadget& g, const Gadget& base_neq) {
    if (base_neq.c != g.c || base_neq.claimed != rel_cneq(g.c, g.c) || !(base_neq.pattern == g.pattern))
        throw InputError("coherence_wrap: guard gadget must claim CNEQ_c for the same (c, pattern)");
    if (base_neq.coherent == Coherence::Unknown)
        throw InputError("coherence_wrap: guard gadget is not known to be coherent");
    Assembler a(g.graph);
    for (const auto& piece : g.pieces) a.add_piece(piece);
    std::vector<int> fresh;
    for (std::size_t i = 0; i < g.portals.size(); ++i) {
        int b = a.add_vertex("wrap" + std::to_string(i + 1));
        a.embed(base_neq, {g.portals[i], b}, "guard" + std::to_string(i + 1));
        fresh.push_back(b);
    }
    return finish(g.kind + "+wrap", g.c, g.pattern, a, fresh, g.claimed, Coherence::Wrapped);
}

Gadget eq_gadget_single(int c, const NeqSource& src) {
    if (!src.supports(c)) throw InputError("eq_gadget_single: pattern needs c = 1 without a built-in CNEQ gadget");
    const Graph& h = src.pattern();
    int hs = pattern_size(h);
    Gadget t = src.neq(c);
    Assembler a;
    auto v = a.add_vertices(hs, "v");
    for (int i = 1; i <= c; ++i) {
        auto u = a.add_vertices(hs, "A" + std::to_string(i) + ".u");
        for (auto [x, y] : h.edges()) a.add_edge(u[x], u[y]);
        a.add_piece(u);
        for (int j = 0; j < hs; ++j) a.embed(t, {u[j], v[j]}, "T" + std::to_string(i) + "." + std::to_string(j + 1));
    }
    return finish("eq-single", c, h, a, v, rel_eq(hs, range_values(0, c), c), Coherence::Claimed);
}

Gadget eq_gadget_ring(int c, const NeqSource& src, int k) {
    if (k < 1) throw InputError("eq_gadget_ring needs k >= 1");
    if (!src.supports(c)) throw InputError("eq_gadget_ring: pattern needs c = 1 without a built-in CNEQ gadget");
    const Graph& h = src.pattern();
    int hs = pattern_size(h);
    if (hs < 3) throw InputError("eq_gadget_ring needs a pattern with at least 3 vertices");
    int n = k * hs;
    Gadget eq = eq_gadget_single(c, src);
    Gadget neq = src.neq(c);
    Assembler a;
    auto up = a.add_vertices(n, "a_up");
    auto left = a.add_vertices(n, "a_left");
    std::vector<std::vector<int>> xs(n), ys(n);
    for (int i = 0; i < n; ++i) {
        std::string id = std::to_string(i + 1);
        int right = a.add_vertex("a_right" + id);
        int bl = a.add_vertex("b_left" + id);
        int br = a.add_vertex("b_right" + id);
        xs[i] = a.add_vertices(hs - 3, "x" + id + ".");
        ys[i] = a.add_vertices(hs - 2, "y" + id + ".");
        std::vector<int> at{left[i], right, up[i]};
        at.insert(at.end(), xs[i].begin(), xs[i].end());
        a.embed(eq, at, "A" + id);
        a.embed(neq, {right, bl}, "L" + id);
        std::vector<int> bt{bl, br};
        bt.insert(bt.end(), ys[i].begin(), ys[i].end());
        a.embed(eq, bt, "B" + id);
        a.embed(neq, {br, left[(i + 1) % n]}, "R" + id);
        if ((i + 1) % hs == 0) {
            int g = (i + 1) / hs;
            for (int j = 0; j < hs - 3; ++j) {
                std::vector<int> group;
                for (int q = i + 1 - hs; q <= i; ++q) group.push_back(xs[q][j]);
                a.embed(eq, group, "FX" + std::to_string(j + 1) + "." + std::to_string(g));
            }
            for (int j = 0; j < hs - 2; ++j) {
                std::vector<int> group;
                for (int q = i + 1 - hs; q <= i; ++q) group.push_back(ys[q][j]);
                a.embed(eq, group, "FY" + std::to_string(j + 1) + "." + std::to_string(g));
            }
        }
    }
    return finish("eq-ring", c, h, a, up, rel_eq(n, range_values(0, c), c), Coherence::Claimed);
}

Gadget cover_gadget(int c, int d, int k) {
    if (d < 3 || c < 1 || k < 1) throw InputError("cover_gadget needs d >= 3, c >= 1, k >= 1");
    Graph kd = complete_graph(d);
    Gadget w = eq_gadget_ring(c, NeqSource::builtin(kd), k + c);
    Assembler a;
    auto p = a.add_vertices(k * d, "p");
    auto u = a.add_vertices(c * d, "u");
    std::vector<int> targets = p;
    targets.insert(targets.end(), u.begin(), u.end());
    a.embed(w, targets, "W");
    for (int i = 1; i <= d; ++i) {
        auto rest = a.add_vertices(d - 1, "T" + std::to_string(i) + ".");
        for (std::size_t x = 0; x < rest.size(); ++x) {
            for (std::size_t y = x + 1; y < rest.size(); ++y) a.add_edge(rest[x], rest[y]);
            for (int uj : u) a.add_edge(rest[x], uj);
        }
        std::vector<int> piece = rest;
        piece.insert(piece.end(), u.begin(), u.end());
        a.add_piece(piece);
    }
    return finish("cover", c, kd, a, p, rel_cover(k * d, c - 1, c), Coherence::Unknown);
}

Gadget toggle_gadget(const NeqSource& src) {
    if (!src.supports(1)) throw InputError("toggle_gadget: no CNEQ_1 gadget");
    const Graph& h = src.pattern();
    int hs = pattern_size(h);
    Gadget ring = eq_gadget_ring(1, src, 2);
    Gadget neq = src.neq(1);
    Assembler a;
    auto x_lo = a.add_vertices(hs, "x");
    auto y_lo = a.add_vertices(hs, "y");
    std::vector<int> x_hi, y_hi;
    for (int i = hs + 1; i <= 2 * hs; ++i) x_hi.push_back(a.add_vertex("x" + std::to_string(i)));
    for (int i = hs + 1; i <= 2 * hs; ++i) y_hi.push_back(a.add_vertex("y" + std::to_string(i)));
    std::vector<int> xt = x_lo, yt = y_lo;
    xt.insert(xt.end(), x_hi.begin(), x_hi.end());
    yt.insert(yt.end(), y_hi.begin(), y_hi.end());
    a.embed(ring, xt, "X");
    a.embed(ring, yt, "Y");
    for (int i = 0; i < hs; ++i) a.embed(neq, {x_hi[i], y_hi[i]}, "N" + std::to_string(i + 1));
    std::vector<int> portals = x_lo;
    portals.insert(portals.end(), y_lo.begin(), y_lo.end());
    Tuple first(2 * hs, 0), second(2 * hs, 0);
    for (int i = 0; i < hs; ++i) {
        first[i] = 1;
        second[hs + i] = 1;
    }
    return finish("toggle", 1, h, a, portals, Relation(2 * hs, 1, {first, second}), Coherence::Unknown);
}

namespace {

// Shared skeleton of the relation gadgets: central vertices, one toggle, one
// equality ring and a fan of CNEQ_1 gadgets per tuple.
struct SkeletonParts {
    std::vector<int> portals;
    std::vector<int> central;
};

SkeletonParts build_skeleton(Assembler& a, const NeqSource& src, const std::vector<Tuple>& tuples, int arity, int psi) {
    int hs = pattern_size(src.pattern());
    SkeletonParts parts;
    parts.portals = a.add_vertices(arity, "p");
    parts.central = a.add_vertices(hs, "v");
    auto slack = a.add_vertices(psi, "z");
    Gadget toggle = toggle_gadget(src);
    Gadget neq = src.neq(1);
    std::map<int, Gadget> rings;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        const Tuple& r = tuples[i];
        std::string id = std::to_string(i + 1);
        int s = weight(r);
        auto b = a.add_vertices(hs, "b" + id + ".");
        std::vector<int> st = parts.central;
        st.insert(st.end(), b.begin(), b.end());
        a.embed(toggle, st, "S" + id);
        int k = (s + psi) / hs + 1;
        if (!rings.count(k)) rings.emplace(k, eq_gadget_ring(1, src, k));
        auto e = a.add_vertices(s + psi, "e" + id + ".");
        std::vector<int> et = b;
        et.insert(et.end(), e.begin(), e.end());
        a.embed(rings.at(k), et, "E" + id);
        int t = 0;
        for (int j = 0; j < arity; ++j)
            for (int rep = 0; rep < r[j]; ++rep, ++t)
                a.embed(neq, {e[t], parts.portals[j]}, "N" + id + "." + std::to_string(t + 1));
        for (int u = 0; u < psi; ++u) a.embed(neq, {e[s + u], slack[u]}, "M" + id + "." + std::to_string(u + 1));
    }
    return parts;
}

}  // namespace

Gadget arb_relation_gadget(const NeqSource& src, const Relation& r) {
    if (!src.supports(1)) throw InputError("arb_relation_gadget: no CNEQ_1 gadget");
    if (r.empty()) throw InputError("arb_relation_gadget: relation is empty");
    for (const auto& t : r.tuples())
        for (int x : t)
            if (x > 1) throw InputError("arb_relation_gadget: relation entries must be 0 or 1");
    int hs = pattern_size(src.pattern());
    int x = regular_residue(r, hs);
    if (x < 0) throw InputError("arb_relation_gadget: tuple weights are not congruent modulo |H|");
    int psi = (hs - x) % hs;
    Assembler a;
    auto parts = build_skeleton(a, src, r.tuples(), r.arity(), psi);
    return finish("arb-relation", 1, src.pattern(), a, parts.portals, r.with_bound(1), Coherence::Claimed);
}

int clique_reg_padding(int num_tuples, int d) { return (d - num_tuples % d) % d; }

Gadget clique_reg_relation_gadget(int c, int d, const Relation& r) {
    if (d < 3 || c < 1) throw InputError("clique_reg_relation_gadget needs d >= 3 and c >= 1");
    if (r.empty()) throw InputError("clique_reg_relation_gadget: relation is empty");
    if (!is_regular(r, 0, d)) throw InputError("clique_reg_relation_gadget: relation is not (0,d)-regular");
    for (const auto& t : r.tuples())
        for (int v : t)
            if (v > c) throw InputError("clique_reg_relation_gadget: entry exceeds c");
    NeqSource src = NeqSource::builtin(complete_graph(d));
    if (c == 1) return arb_relation_gadget(src, r);
    std::vector<Tuple> tuples = r.tuples();
    int gamma = clique_reg_padding(static_cast<int>(tuples.size()), d);
    for (int i = 0; i < gamma; ++i) tuples.push_back(r.tuples().front());
    Assembler a;
    auto parts = build_skeleton(a, src, tuples, r.arity(), 0);
    std::vector<char> is_portal(a.num_vertices(), 0);
    for (int p : parts.portals) is_portal[p] = 1;
    std::vector<int> z;
    for (int v = 0; v < a.num_vertices(); ++v)
        if (!is_portal[v]) z.push_back(v);
    // A 1-partition of the skeleton covers Z once and the portals by a tuple
    // of weight 0 mod d, so |Z| is a multiple of d.
    if (z.size() % d != 0) throw std::logic_error("clique_reg_relation_gadget: internal vertex count not divisible by d");
    Gadget f = cover_gadget(c, d, static_cast<int>(z.size()) / d);
    a.embed(f, z, "F");
    return finish("clique-reg-relation", c, complete_graph(d), a, parts.portals, r.with_bound(c), Coherence::Claimed);
}

}  // namespace treepack
