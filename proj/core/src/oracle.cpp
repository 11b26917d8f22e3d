#include "treepack/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "treepack/errors.hpp"

namespace treepack {

const char* to_string(Variant v) { return v == Variant::Dist ? "dist" : "arb"; }

Variant parse_variant(const std::string& s) {
    if (s == "dist") return Variant::Dist;
    if (s == "arb") return Variant::Arb;
    throw InputError("unknown variant '" + s + "' (expected dist or arb)");
}

namespace {

void tick(std::uint64_t& nodes, const SearchLimits& lim) {
    ++nodes;
    if (nodes > lim.node_budget)
        throw BudgetExceeded("oracle search exceeded its budget of " + std::to_string(lim.node_budget) + " nodes");
    if ((nodes & 1023) == 0 && lim.stop.stop_requested()) throw Cancelled();
}

// Vertex order for the packing search. Only vertices that share a copy with
// an already processed vertex need to appear in the memo key, so we pick the
// order (identity or a BFS order) that keeps that frontier smallest.
std::vector<int> frontier_order(int n, const std::vector<Copy>& copies) {
    std::vector<std::vector<int>> adj(n);
    for (const auto& cp : copies)
        for (int a : cp.vertices)
            for (int b : cp.vertices)
                if (a != b) adj[a].push_back(b);
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    auto score = [&](const std::vector<int>& order) {
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[order[i]] = i;
        std::vector<int> delta(n + 1, 0);
        for (int u = 0; u < n; ++u) {
            int earliest = pos[u];
            for (int w : adj[u]) earliest = std::min(earliest, pos[w]);
            if (earliest < pos[u]) {
                delta[earliest]++;
                delta[pos[u]]--;
            }
        }
        int run = 0, worst = 0;
        for (int i = 0; i < n; ++i) {
            run += delta[i];
            worst = std::max(worst, run);
        }
        return worst;
    };
    std::vector<int> best(n);
    for (int i = 0; i < n; ++i) best[i] = i;
    int best_score = score(best);
    for (int s = 0; s < n; ++s) {
        std::vector<int> order;
        std::vector<char> seen(n, 0);
        for (int start : {s}) {
            order.push_back(start);
            seen[start] = 1;
        }
        for (std::size_t i = 0; i < order.size(); ++i)
            for (int w : adj[order[i]])
                if (!seen[w]) {
                    seen[w] = 1;
                    order.push_back(w);
                }
        for (int v = 0; v < n; ++v)
            if (!seen[v]) {
                seen[v] = 1;
                order.push_back(v);
                for (std::size_t i = order.size() - 1; i < order.size(); ++i)
                    for (int w : adj[order[i]])
                        if (!seen[w]) {
                            seen[w] = 1;
                            order.push_back(w);
                        }
            }
        int sc = score(order);
        if (sc < best_score) {
            best_score = sc;
            best = order;
        }
    }
    return best;
}

using Key = unsigned __int128;

struct StateKey {
    int index;
    Key used;
    bool operator==(const StateKey&) const = default;
};

struct StateHash {
    std::size_t operator()(const StateKey& k) const {
        auto lo = static_cast<std::uint64_t>(k.used);
        auto hi = static_cast<std::uint64_t>(k.used >> 64);
        std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL ^ (hi + 0x632BE59BD9B4E019ULL + (lo << 6) + (lo >> 2));
        h ^= static_cast<std::uint64_t>(k.index) * 0xC2B2AE3D27D4EB4FULL;
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

// Copies are processed in order of their first vertex (under a good vertex
// order); for each copy we choose its multiplicity. The memo key is the copy
// index plus the coverage of vertices that can still be touched.
class PackingSearch {
public:
    PackingSearch(const Graph& g, std::vector<Copy> copies, int c, Variant variant, const SearchLimits& limits)
        : c_(c), variant_(variant), limits_(limits), copies_(std::move(copies)) {
        int n = g.num_vertices();
        bits_ = 1;
        while ((1 << bits_) <= c) ++bits_;
        if (n * bits_ > 128) throw InputError("max_packing_bruteforce: graph too large for the exhaustive oracle");
        auto order = frontier_order(n, copies_);
        pos_.assign(n, 0);
        for (int i = 0; i < n; ++i) pos_[order[i]] = i;
        auto first = [&](const Copy& cp) {
            int m = n;
            for (int v : cp.vertices) m = std::min(m, pos_[v]);
            return m;
        };
        std::stable_sort(copies_.begin(), copies_.end(), [&](const Copy& a, const Copy& b) { return first(a) < first(b); });
        int m = static_cast<int>(copies_.size());
        unit_.resize(m);
        keep_.resize(m + 1);
        for (int i = 0; i < m; ++i) {
            unit_[i] = 0;
            for (int v : copies_[i].vertices) unit_[i] |= Key(1) << (bits_ * pos_[v]);
            int f = first(copies_[i]);
            keep_[i] = f * bits_ >= 128 ? Key(0) : ~Key(0) << (f * bits_);
        }
        keep_[m] = 0;
        slot_mask_ = (Key(1) << bits_) - 1;
    }

    long long solve() { return best(0, 0); }

    std::vector<PackedCopy> witness() {
        std::vector<PackedCopy> out;
        Key used = 0;
        for (int i = 0; i < static_cast<int>(copies_.size()); ++i) {
            long long target = best(i, used);
            int top = max_mult(i, used & keep_[i]);
            for (int t = top; t >= 0; --t) {
                Key next = (used & keep_[i]) + unit_[i] * static_cast<unsigned>(t);
                if (t + best(i + 1, next) == target) {
                    if (t > 0) out.push_back({copies_[i], t});
                    used = next;
                    break;
                }
            }
        }
        return out;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    int max_mult(int i, Key used) const {
        int m = c_;
        for (int v : copies_[i].vertices) {
            int u = static_cast<int>((used >> (bits_ * pos_[v])) & slot_mask_);
            m = std::min(m, c_ - u);
        }
        if (variant_ == Variant::Dist) m = std::min(m, 1);
        return m;
    }

    long long best(int i, Key used) {
        if (i == static_cast<int>(copies_.size())) return 0;
        used &= keep_[i];
        StateKey key{i, used};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        tick(nodes_, limits_);
        long long res = 0;
        int top = max_mult(i, used);
        for (int t = top; t >= 0; --t) res = std::max(res, t + best(i + 1, used + unit_[i] * static_cast<unsigned>(t)));
        memo_.emplace(key, res);
        return res;
    }

    int c_;
    Variant variant_;
    const SearchLimits& limits_;
    std::vector<Copy> copies_;
    std::vector<int> pos_;
    std::vector<Key> unit_, keep_;
    Key slot_mask_ = 0;
    int bits_ = 1;
    std::uint64_t nodes_ = 0;
    std::unordered_map<StateKey, long long, StateHash> memo_;
};

// Vertex-disjoint packing (c = 1) on at most 64 vertices. f(S) is the best
// packing inside the live set S: vertices in no copy within S are dropped,
// S splits into connected components, and on one component the branch is on
// the vertex of largest live degree (left unused, or covered by one of its
// copies). f is memoized on S.
class DisjointSearch {
public:
    DisjointSearch(const Graph& g, std::vector<Copy> copies, const SearchLimits& limits)
        : limits_(limits), copies_(std::move(copies)), n_(g.num_vertices()) {
        adj_.assign(n_, 0);
        for (auto [u, v] : g.edges()) {
            adj_[u] |= bit(v);
            adj_[v] |= bit(u);
        }
        masks_.resize(copies_.size());
        through_.resize(n_);
        for (std::size_t i = 0; i < copies_.size(); ++i) {
            for (int v : copies_[i].vertices) {
                masks_[i] |= bit(v);
                through_[v].push_back(static_cast<int>(i));
            }
        }
        full_ = n_ == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n_) - 1;
    }

    long long solve() { return best(full_); }

    std::vector<PackedCopy> witness() {
        std::vector<PackedCopy> out;
        collect(full_, out);
        return out;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    static std::uint64_t bit(int v) { return std::uint64_t(1) << v; }

    // Drops vertices that lie in no copy inside s, until stable.
    std::uint64_t prune(std::uint64_t s) const {
        for (;;) {
            std::uint64_t keep = 0;
            for (std::uint64_t r = s; r; r &= r - 1) {
                int v = std::countr_zero(r);
                for (int i : through_[v])
                    if ((masks_[i] & ~s) == 0) {
                        keep |= masks_[i];
                        break;
                    }
            }
            if (keep == s) return s;
            s = keep;
        }
    }

    std::uint64_t component(std::uint64_t s) const {
        std::uint64_t seen = s & (~s + 1), frontier = seen;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t r = frontier; r; r &= r - 1) next |= adj_[std::countr_zero(r)];
            frontier = next & s & ~seen;
            seen |= frontier;
        }
        return seen;
    }

    int pivot(std::uint64_t s) const {
        int v = -1, top = -1;
        for (std::uint64_t r = s; r; r &= r - 1) {
            int u = std::countr_zero(r);
            int d = std::popcount(adj_[u] & s);
            if (d > top) top = d, v = u;
        }
        return v;
    }

    long long best(std::uint64_t s) {
        s = prune(s);
        if (s == 0) return 0;
        if (auto it = memo_.find(s); it != memo_.end()) return it->second;
        tick(nodes_, limits_);
        long long res = 0;
        std::uint64_t comp = component(s);
        if (comp != s) {
            res = best(comp) + best(s & ~comp);
        } else {
            int v = pivot(s);
            res = best(s & ~bit(v));
            for (int i : through_[v])
                if ((masks_[i] & ~s) == 0) res = std::max(res, 1 + best(s & ~masks_[i]));
        }
        memo_.emplace(s, res);
        return res;
    }

    void collect(std::uint64_t s, std::vector<PackedCopy>& out) {
        s = prune(s);
        if (s == 0) return;
        std::uint64_t comp = component(s);
        if (comp != s) {
            collect(comp, out);
            collect(s & ~comp, out);
            return;
        }
        long long target = best(s);
        int v = pivot(s);
        for (int i : through_[v])
            if ((masks_[i] & ~s) == 0 && 1 + best(s & ~masks_[i]) == target) {
                out.push_back({copies_[i], 1});
                collect(s & ~masks_[i], out);
                return;
            }
        collect(s & ~bit(v), out);
    }

    const SearchLimits& limits_;
    std::vector<Copy> copies_;
    int n_;
    std::vector<std::uint64_t> adj_, masks_;
    std::vector<std::vector<int>> through_;
    std::uint64_t full_ = 0;
    std::uint64_t nodes_ = 0;
    std::unordered_map<std::uint64_t, long long> memo_;
};

// Exact-cover style search. Every vertex has a capacity `hi` and a requirement
// `lo`; the search repeatedly takes the requiring vertex with the fewest live
// copies and branches on "one more use of its first live copy" versus "no
// more uses of it".
class CoverSearch {
public:
    CoverSearch(int n, const std::vector<Copy>& copies, std::vector<int> hi, std::vector<int> lo, Variant variant,
                const SearchLimits& limits)
        : copies_(copies), rem_(std::move(hi)), need_(std::move(lo)), variant_(variant), limits_(limits) {
        inc_.resize(n);
        for (int i = 0; i < static_cast<int>(copies_.size()); ++i)
            for (int v : copies_[i].vertices) inc_[v].push_back(i);
        alive_.assign(copies_.size(), 1);
        used_.assign(copies_.size(), 0);
        cnt_.assign(n, 0);
        for (int i = 0; i < static_cast<int>(copies_.size()); ++i)
            for (int v : copies_[i].vertices) cnt_[v]++;
        for (int v = 0; v < n; ++v)
            if (rem_[v] == 0)
                for (int i : inc_[v])
                    if (alive_[i]) kill(i);
        killed_.clear();
    }

    // Stops at the first complete packing when on_leaf returns false.
    void run(const std::function<bool(const CoverSearch&)>& on_leaf) {
        on_leaf_ = on_leaf;
        stopped_ = false;
        search();
    }

    const std::vector<int>& remaining() const { return rem_; }
    std::vector<PackedCopy> packing() const {
        std::vector<PackedCopy> out;
        for (std::size_t i = 0; i < copies_.size(); ++i)
            if (used_[i] > 0) out.push_back({copies_[i], used_[i]});
        return out;
    }
    std::uint64_t nodes() const { return nodes_; }

private:
    void kill(int i) {
        alive_[i] = 0;
        for (int v : copies_[i].vertices) cnt_[v]--;
        killed_.push_back(i);
    }

    void revive_to(std::size_t mark) {
        while (killed_.size() > mark) {
            int i = killed_.back();
            killed_.pop_back();
            alive_[i] = 1;
            for (int v : copies_[i].vertices) cnt_[v]++;
        }
    }

    // Returns the number of vertices whose requirement was decremented,
    // recorded in need_trail_ for undo.
    void include(int i) {
        used_[i]++;
        for (int v : copies_[i].vertices) {
            rem_[v]--;
            bool dec = need_[v] > 0;
            if (dec) need_[v]--;
            need_trail_.push_back(dec);
        }
        for (int v : copies_[i].vertices)
            if (rem_[v] == 0)
                for (int j : inc_[v])
                    if (alive_[j]) kill(j);
        if (variant_ == Variant::Dist && alive_[i]) kill(i);
    }

    void uninclude(int i) {
        auto& vs = copies_[i].vertices;
        for (int k = static_cast<int>(vs.size()) - 1; k >= 0; --k) {
            int v = vs[k];
            rem_[v]++;
            if (need_trail_.back()) need_[v]++;
            need_trail_.pop_back();
        }
        used_[i]--;
    }

    void search() {
        if (stopped_) return;
        tick(nodes_, limits_);
        int pick = -1, best = std::numeric_limits<int>::max();
        for (int v = 0; v < static_cast<int>(need_.size()); ++v) {
            if (need_[v] == 0) continue;
            if (cnt_[v] == 0 || (variant_ == Variant::Dist && cnt_[v] < need_[v])) return;
            if (cnt_[v] < best) {
                best = cnt_[v];
                pick = v;
            }
        }
        if (pick < 0) {
            leaf();
            return;
        }
        int chosen = -1;
        for (int i : inc_[pick])
            if (alive_[i]) {
                chosen = i;
                break;
            }
        std::size_t mark = killed_.size();
        include(chosen);
        search();
        revive_to(mark);
        uninclude(chosen);
        if (stopped_) return;
        kill(chosen);
        search();
        revive_to(mark);
    }

    // All requirements are met. Remaining live copies only touch vertices
    // without requirements; they are optional extras.
    void leaf() {
        std::vector<int> extras;
        for (int i = 0; i < static_cast<int>(copies_.size()); ++i)
            if (alive_[i]) extras.push_back(i);
        extend(extras, 0);
    }

    void extend(const std::vector<int>& extras, std::size_t from) {
        if (stopped_) return;
        if (!on_leaf_(*this)) {
            stopped_ = true;
            return;
        }
        for (std::size_t k = from; k < extras.size(); ++k) {
            int i = extras[k];
            if (!alive_[i]) continue;
            tick(nodes_, limits_);
            std::size_t mark = killed_.size();
            include(i);
            // A copy may be used again in arb mode, so stay at k.
            extend(extras, variant_ == Variant::Arb ? k : k + 1);
            revive_to(mark);
            uninclude(i);
            if (stopped_) return;
        }
    }

    const std::vector<Copy>& copies_;
    std::vector<std::vector<int>> inc_;
    std::vector<int> rem_, need_, cnt_, used_;
    std::vector<char> alive_;
    std::vector<int> killed_;
    std::vector<char> need_trail_;
    Variant variant_;
    const SearchLimits& limits_;
    std::uint64_t nodes_ = 0;
    std::function<bool(const CoverSearch&)> on_leaf_;
    bool stopped_ = false;
};

}  // namespace

PackingResult max_packing_bruteforce(const Graph& g, const Graph& h, int c, Variant variant, const SearchLimits& limits) {
    if (c < 1) throw InputError("max_packing_bruteforce needs c >= 1");
    if (h.num_vertices() == 0) throw InputError("pattern must have at least one vertex");
    PackingResult r;
    if (c == 1 && g.num_vertices() <= 64) {
        // With c = 1 both variants ask for vertex-disjoint copies.
        DisjointSearch search(g, enumerate_copies(g, h), limits);
        r.value = search.solve();
        r.witness = search.witness();
        r.nodes = search.nodes();
        return r;
    }
    PackingSearch search(g, enumerate_copies(g, h), c, variant, limits);
    r.value = search.solve();
    r.witness = search.witness();
    r.nodes = search.nodes();
    return r;
}

CoverResult exact_cover_feasible(const Graph& g, const Graph& h, const std::vector<int>& demand, Variant variant,
                                 const SearchLimits& limits) {
    if (static_cast<int>(demand.size()) != g.num_vertices()) throw InputError("demand map size does not match graph");
    for (int d : demand)
        if (d < 0) throw InputError("demands must be non-negative");
    if (h.num_vertices() == 0) throw InputError("pattern must have at least one vertex");
    auto copies = enumerate_copies(g, h);
    long long total = 0;
    for (int d : demand) total += d;
    CoverResult r;
    if (total % h.num_vertices() != 0) return r;
    CoverSearch search(g.num_vertices(), copies, demand, demand, variant, limits);
    search.run([&](const CoverSearch& s) {
        r.feasible = true;
        r.witness = s.packing();
        return false;
    });
    r.nodes = search.nodes();
    return r;
}

bool check_packing(const Graph& g, const Graph& h, const std::vector<PackedCopy>& packing, Variant variant,
                   const std::vector<int>& coverage_cap, const std::vector<int>& demand, std::string* why) {
    auto bad = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    std::vector<int> cover(g.num_vertices(), 0);
    std::set<std::pair<std::vector<int>, std::vector<Edge>>> seen;
    for (const auto& pc : packing) {
        const auto& m = pc.copy.map;
        if (static_cast<int>(m.size()) != h.num_vertices()) return bad("copy map has wrong size");
        std::vector<int> img = m;
        std::sort(img.begin(), img.end());
        if (std::adjacent_find(img.begin(), img.end()) != img.end()) return bad("copy map is not injective");
        for (int v : img)
            if (v < 0 || v >= g.num_vertices()) return bad("copy vertex out of range");
        if (img != pc.copy.vertices) return bad("copy vertex set does not match its map");
        std::vector<Edge> es;
        for (auto [a, b] : h.edges()) {
            if (!g.has_edge(m[a], m[b])) return bad("copy uses a non-edge");
            es.emplace_back(std::min(m[a], m[b]), std::max(m[a], m[b]));
        }
        std::sort(es.begin(), es.end());
        if (pc.multiplicity < 1) return bad("multiplicity must be positive");
        if (variant == Variant::Dist && pc.multiplicity != 1) return bad("dist packing repeats a copy");
        if (!seen.insert({img, es}).second) return bad("copy listed twice");
        for (int v : img) cover[v] += pc.multiplicity;
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (!coverage_cap.empty() && cover[v] > coverage_cap[v])
            return bad("vertex " + std::to_string(v) + " covered above its capacity");
        if (!demand.empty() && cover[v] != demand[v])
            return bad("vertex " + std::to_string(v) + " covered " + std::to_string(cover[v]) + " times, expected " +
                       std::to_string(demand[v]));
    }
    return true;
}

namespace {

constexpr std::uint64_t kEnumerateLeafLimit = 200'000;
constexpr std::uint64_t kMaxVectors = 1u << 22;

bool next_vector(Tuple& t, int c) {
    for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
        if (t[i] < c) {
            ++t[i];
            return true;
        }
        t[i] = 0;
    }
    return false;
}

}  // namespace

Relation realized_relation(const Gadget& g, Variant variant, const SearchLimits& limits, RealizeMethod method) {
    int n = g.graph.num_vertices();
    int c = g.c;
    int ell = static_cast<int>(g.portals.size());
    int hs = g.pattern.num_vertices();
    auto copies = enumerate_copies(g.graph, g.pattern);
    std::vector<int> hi(n, c), lo(n, c);
    for (int p : g.portals) lo[p] = 0;
    std::set<Tuple> found;
    bool complete = false;

    if (method != RealizeMethod::PerVector) {
        std::uint64_t leaves = 0;
        bool overflow = false;
        CoverSearch search(n, copies, hi, lo, variant, limits);
        search.run([&](const CoverSearch& s) {
            Tuple t(ell);
            for (int i = 0; i < ell; ++i) t[i] = c - s.remaining()[g.portals[i]];
            found.insert(std::move(t));
            if (method == RealizeMethod::Auto && ++leaves > kEnumerateLeafLimit) {
                overflow = true;
                return false;
            }
            return true;
        });
        complete = !overflow;
    }

    if (!complete) {
        std::uint64_t total = 1;
        for (int i = 0; i < ell; ++i) {
            total *= static_cast<std::uint64_t>(c + 1);
            if (total > kMaxVectors) throw BudgetExceeded("realized_relation: too many portal vectors to check one by one");
        }
        long long base = static_cast<long long>(c) * (n - ell);
        Tuple t(ell, 0);
        do {
            if (found.count(t)) continue;
            if ((base + weight(t)) % hs != 0) continue;
            std::vector<int> demand = lo;
            for (int i = 0; i < ell; ++i) {
                demand[g.portals[i]] = t[i];
            }
            CoverSearch search(n, copies, demand, demand, variant, limits);
            bool ok = false;
            search.run([&](const CoverSearch&) {
                ok = true;
                return false;
            });
            if (ok) found.insert(t);
        } while (next_vector(t, c));
    }
    return Relation(ell, c, std::vector<Tuple>(found.begin(), found.end()));
}

std::string GadgetReport::to_json() const {
    nlohmann::json j;
    j["dist_ok"] = dist_ok;
    j["arb_ok"] = arb_ok;
    j["dist"] = nlohmann::json::parse(dist.to_json());
    j["arb"] = nlohmann::json::parse(arb.to_json());
    j["dist_missing"] = dist_missing;
    j["dist_extra"] = dist_extra;
    j["arb_missing"] = arb_missing;
    j["arb_extra"] = arb_extra;
    return j.dump();
}

GadgetReport verify_gadget(const Gadget& g, const SearchLimits& limits) {
    GadgetReport rep;
    auto diff = [&](const Relation& got, std::vector<Tuple>& missing, std::vector<Tuple>& extra) {
        for (const auto& t : g.claimed.tuples())
            if (!got.contains(t)) missing.push_back(t);
        for (const auto& t : got.tuples())
            if (!g.claimed.contains(t)) extra.push_back(t);
        return missing.empty() && extra.empty();
    };
    rep.dist = realized_relation(g, Variant::Dist, limits);
    rep.arb = realized_relation(g, Variant::Arb, limits);
    rep.dist_ok = diff(rep.dist, rep.dist_missing, rep.dist_extra);
    rep.arb_ok = diff(rep.arb, rep.arb_missing, rep.arb_extra);
    return rep;
}

NeqSource verified_neq_source(const Gadget& base, const SearchLimits& limits) {
    NeqSource src = NeqSource::plugin(base);
    if (src.is_clique()) return src;
    auto rep = verify_gadget(base, limits);
    if (!rep.ok()) throw InputError("base gadget does not realize CNEQ_1: " + rep.to_json());
    return src;
}

bool csp_bruteforce(const Csp2Instance& inst, std::uint64_t budget) {
    inst.check();
    std::uint64_t total = 1;
    for (int i = 0; i < inst.n; ++i) {
        total *= static_cast<std::uint64_t>(inst.B);
        if (total > budget) throw BudgetExceeded("csp_bruteforce: B^n exceeds the budget");
    }
    std::vector<std::set<std::pair<int, int>>> allowed;
    for (const auto& con : inst.constraints) allowed.emplace_back(con.allowed.begin(), con.allowed.end());
    std::vector<int> a(inst.n, 1);
    while (true) {
        bool ok = true;
        for (std::size_t k = 0; k < inst.constraints.size() && ok; ++k) {
            const auto& con = inst.constraints[k];
            ok = allowed[k].count({a[con.i], a[con.j]}) > 0;
        }
        if (ok) return true;
        int i = inst.n - 1;
        while (i >= 0 && a[i] == inst.B) a[i--] = 1;
        if (i < 0) return false;
        ++a[i];
    }
}

bool permiset_bruteforce(const PermIsetInstance& inst) {
    int k = inst.k;
    if (k > 7) throw InputError("permiset_bruteforce supports k <= 7");
    if (inst.graph.num_vertices() != k * k) throw InputError("permutation instance graph must have k*k vertices");
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    do {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
            for (int j = i + 1; j < k && ok; ++j)
                if (inst.graph.has_edge(PermIsetInstance::cell(k, i, perm[i]), PermIsetInstance::cell(k, j, perm[j]))) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace treepack
