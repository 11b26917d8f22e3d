#include "treepack/hpack_dp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "treepack/errors.hpp"

namespace treepack {

std::vector<int> imprint(const std::vector<int>& hbar, const std::vector<int>& bag, const std::vector<int>& below) {
    std::vector<int> phi(hbar.size(), kUp);
    std::set<int> seen;
    bool any = false;
    for (std::size_t u = 0; u < hbar.size(); ++u) {
        int x = hbar[u];
        if (x < 0) continue;
        any = true;
        if (!seen.insert(x).second) throw InputError("imprint: partial copy is not injective");
        if (std::find(bag.begin(), bag.end(), x) != bag.end())
            phi[u] = x;
        else if (std::find(below.begin(), below.end(), x) != below.end())
            phi[u] = kDown;
        else
            throw InputError("imprint: vertex " + std::to_string(x) + " is neither in the bag nor below it");
    }
    if (!any) throw InputError("imprint: the partial copy has an empty domain");
    return phi;
}

std::vector<int> PackingType::part(const std::vector<int>& bag) const {
    std::vector<int> out(bag.size(), 0);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int x : blocks[b])
            if (x >= 0) {
                auto it = std::find(bag.begin(), bag.end(), x);
                if (it != bag.end()) out[it - bag.begin()] = static_cast<int>(b) + 1;
            }
    return out;
}

bool is_valid_type(const Graph& g, const std::vector<int>& bag, const Graph& h, const PackingType& k, std::string* why) {
    auto bad = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const int hs = h.num_vertices();
    if (k.blocks.size() > bag.size()) return bad("more blocks than bag vertices");
    std::set<int> used;
    for (std::size_t b = 0; b < k.blocks.size(); ++b) {
        const auto& phi = k.blocks[b];
        if (static_cast<int>(phi.size()) != hs) return bad("imprint has the wrong length");
        int z = 0;
        for (int u = 0; u < hs; ++u) {
            int x = phi[u];
            if (x == kUp || x == kDown) continue;
            if (std::find(bag.begin(), bag.end(), x) == bag.end()) return bad("imprint leaves the bag");
            if (!used.insert(x).second) return bad("bag vertex used twice");
            ++z;
        }
        if (z == 0) return bad("block with empty Z");
        for (auto [u, w] : h.edges()) {
            int a = phi[u], c = phi[w];
            if (a >= 0 && c >= 0 && !g.has_edge(a, c)) return bad("imprint is not a homomorphism on Z");
            if ((a == kUp && c == kDown) || (a == kDown && c == kUp)) return bad("pattern edge joins up and down");
        }
    }
    return true;
}

namespace {

constexpr std::uint8_t UP = 0xFE;
constexpr std::uint8_t DOWN = 0xFF;
using Key = std::string;
using Perm = std::vector<std::uint8_t>;

bool in_bag(std::uint8_t b) { return b < UP; }

struct Pattern {
    int h = 0;
    std::vector<std::vector<int>> adj;
    std::vector<Perm> auts;  // identity first
    bool canonical = true;

    Pattern(const Graph& g, bool canon) : h(g.num_vertices()), canonical(canon) {
        adj.resize(h);
        for (int u = 0; u < h; ++u) adj[u] = g.neighbors(u);
        Perm id(h);
        std::iota(id.begin(), id.end(), 0);
        auts.push_back(id);
        if (canonical)
            for (const auto& p : automorphisms(g)) {
                Perm q(p.begin(), p.end());
                if (q != id) auts.push_back(q);
            }
    }
};

struct Prov {
    int raw = -1;  // block of the raw string this result block came from
    Perm perm;     // result label u corresponds to raw label perm[u]
};

// Reduces each block under Aut(H) (phi'(u) = phi(perm[u])) and sorts blocks.
Key canonicalize(const Pattern& pat, const std::string& raw, std::vector<Prov>* prov) {
    const int h = pat.h;
    const int q = static_cast<int>(raw.size()) / h;
    std::vector<std::string> best(q);
    std::vector<int> which(q, 0);
    for (int b = 0; b < q; ++b) {
        best[b] = raw.substr(b * h, h);
        for (std::size_t a = 1; a < pat.auts.size(); ++a) {
            std::string cand(h, '\0');
            for (int u = 0; u < h; ++u) cand[u] = raw[b * h + pat.auts[a][u]];
            if (cand < best[b]) {
                best[b] = std::move(cand);
                which[b] = static_cast<int>(a);
            }
        }
    }
    std::vector<int> order(q);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return best[a] < best[b]; });
    Key out;
    out.reserve(raw.size());
    if (prov) prov->clear();
    for (int b : order) {
        out += best[b];
        if (prov) prov->push_back({b, pat.auts[which[b]]});
    }
    return out;
}

std::uint8_t at(const std::string& s, int i) { return static_cast<std::uint8_t>(s[i]); }

// Bag part of a type: every imprint with up and down merged into one
// symbol, reduced under the automorphisms in use, blocks sorted. Joinable
// types have equal projections.
std::string projection(const Pattern& pat, const Key& k) {
    const int h = pat.h;
    const int q = static_cast<int>(k.size()) / h;
    std::vector<std::string> blocks(q);
    std::string cand(h, '\0');
    for (int b = 0; b < q; ++b) {
        for (std::size_t a = 0; a < pat.auts.size(); ++a) {
            for (int u = 0; u < h; ++u) {
                auto x = static_cast<std::uint8_t>(k[b * h + pat.auts[a][u]]);
                cand[u] = static_cast<char>(x < UP ? x : 0xFD);
            }
            if (a == 0 || cand < blocks[b]) blocks[b] = cand;
        }
    }
    std::sort(blocks.begin(), blocks.end());
    std::string out;
    for (auto& b : blocks) out += b;
    return out;
}

struct JoinSide {
    std::vector<int> block;   // raw block -> right block
    std::vector<Perm> perm;   // raw label x corresponds to right label perm[x]
};

using EmitFn = std::function<void(const std::string& raw, int delta, const std::vector<int>& src, const JoinSide* right)>;

class Transitions {
public:
    Transitions(const Graph& g, const Pattern& pat) : g_(g), pat_(pat) {}

    // Child key over child_bag; v is inserted at position p of the parent bag.
    void introduce(const Key& ck, const std::vector<int>& parent_bag, int p, const EmitFn& emit) const {
        const int h = pat_.h;
        const int q = static_cast<int>(ck.size()) / h;
        const int v = parent_bag[p];
        std::string base = ck;
        for (auto& ch : base) {
            auto b = static_cast<std::uint8_t>(ch);
            if (in_bag(b) && b >= p) ch = static_cast<char>(b + 1);
        }
        std::vector<int> src(q);
        std::iota(src.begin(), src.end(), 0);
        emit(base, 0, src, nullptr);
        for (int j = 0; j < q; ++j)
            for (int u = 0; u < h; ++u) {
                if (at(base, j * h + u) != UP) continue;
                bool ok = true;
                for (int w : pat_.adj[u]) {
                    std::uint8_t x = at(base, j * h + w);
                    if (x == DOWN || (in_bag(x) && !g_.has_edge(v, parent_bag[x]))) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                std::string next = base;
                next[j * h + u] = static_cast<char>(p);
                emit(next, 0, src, nullptr);
            }
        // A fresh block on v: nothing of it can lie below, since v has no
        // forgotten neighbours and the pattern is connected.
        std::vector<int> src_new = src;
        src_new.push_back(-1);
        for (int u = 0; u < h; ++u) {
            std::string next = base + std::string(h, static_cast<char>(UP));
            next[q * h + u] = static_cast<char>(p);
            emit(next, 0, src_new, nullptr);
        }
    }

    // Child key over a bag in which v sits at position p.
    void forget(const Key& ck, int p, const EmitFn& emit) const {
        const int h = pat_.h;
        const int q = static_cast<int>(ck.size()) / h;
        std::string base = ck;
        int j = -1;
        for (int i = 0; i < static_cast<int>(base.size()); ++i)
            if (at(base, i) == p) j = i / h;
        if (j >= 0) {
            int u = -1;
            for (int w = 0; w < h; ++w)
                if (at(base, j * h + w) == p) u = w;
            for (int w : pat_.adj[u])
                if (at(base, j * h + w) == UP) return;  // w would need a neighbour of v above the bag
            base[j * h + u] = static_cast<char>(DOWN);
        }
        for (auto& ch : base) {
            auto b = static_cast<std::uint8_t>(ch);
            if (in_bag(b) && b > p) ch = static_cast<char>(b - 1);
        }
        std::vector<int> src(q);
        std::iota(src.begin(), src.end(), 0);
        if (j >= 0) {
            bool any_bag = false, all_down = true;
            for (int w = 0; w < h; ++w) {
                std::uint8_t x = at(base, j * h + w);
                any_bag |= in_bag(x);
                all_down &= x == DOWN;
            }
            if (!any_bag) {
                if (!all_down) return;
                base.erase(j * h, h);
                src.erase(src.begin() + j);
                emit(base, 1, src, nullptr);
                return;
            }
        }
        emit(base, 0, src, nullptr);
    }

    // Joins two keys with equal projections.
    void join(const Key& k1, const Key& k2, const EmitFn& emit) const {
        const int h = pat_.h;
        const int q = static_cast<int>(k1.size()) / h;
        if (static_cast<int>(k2.size()) != q * h) return;
        // Bag positions used by each block; disjoint across blocks.
        std::vector<int> block_at(256, -1);
        for (int b = 0; b < q; ++b)
            for (int u = 0; u < h; ++u)
                if (in_bag(at(k2, b * h + u))) block_at[at(k2, b * h + u)] = b;
        JoinSide side;
        side.block.assign(q, -1);
        side.perm.assign(q, {});
        std::vector<std::vector<std::pair<std::string, Perm>>> options(q);
        for (int i = 0; i < q; ++i) {
            int m = -1;
            for (int u = 0; u < h && m < 0; ++u)
                if (in_bag(at(k1, i * h + u))) m = block_at[at(k1, i * h + u)];
            if (m < 0) return;
            side.block[i] = m;
            std::set<std::string> seen;
            for (const auto& perm : pat_.auts) {
                std::string comb(h, '\0');
                bool ok = true;
                for (int u = 0; u < h && ok; ++u) {
                    std::uint8_t a = at(k1, i * h + u), b = at(k2, m * h + perm[u]);
                    if (in_bag(a) || in_bag(b)) {
                        ok = a == b;
                        comb[u] = static_cast<char>(a);
                    } else if (a == DOWN && b == DOWN) {
                        ok = false;
                    } else {
                        comb[u] = static_cast<char>(a == DOWN || b == DOWN ? DOWN : UP);
                    }
                }
                if (ok && seen.insert(comb).second) options[i].push_back({comb, perm});
            }
            if (options[i].empty()) return;
        }
        std::vector<int> src(q);
        std::iota(src.begin(), src.end(), 0);
        std::string raw(q * h, '\0');
        std::function<void(int)> rec = [&](int i) {
            if (i == q) {
                emit(raw, 0, src, &side);
                return;
            }
            for (const auto& [comb, perm] : options[i]) {
                std::copy(comb.begin(), comb.end(), raw.begin() + i * h);
                side.perm[i] = perm;
                rec(i + 1);
            }
        };
        rec(0);
    }

    // All valid keys on a bag.
    std::set<Key> enumerate(const std::vector<int>& bag) const {
        const int h = pat_.h;
        const int w = static_cast<int>(bag.size());
        std::set<Key> out;
        std::vector<int> block_of(w, -1);
        std::function<void(int, int)> assign = [&](int i, int nb) {
            if (i == w) {
                std::vector<std::vector<int>> pos(nb);
                for (int x = 0; x < w; ++x)
                    if (block_of[x] >= 0) pos[block_of[x]].push_back(x);
                for (const auto& ps : pos)
                    if (static_cast<int>(ps.size()) > h) return;
                std::vector<std::vector<std::string>> choices(nb);
                for (int b = 0; b < nb; ++b) {
                    choices[b] = block_choices(bag, pos[b]);
                    if (choices[b].empty()) return;
                }
                std::string raw(nb * h, '\0');
                std::function<void(int)> rec = [&](int b) {
                    if (b == nb) {
                        out.insert(canonicalize(pat_, raw, nullptr));
                        return;
                    }
                    for (const auto& c : choices[b]) {
                        std::copy(c.begin(), c.end(), raw.begin() + b * h);
                        rec(b + 1);
                    }
                };
                rec(0);
                return;
            }
            block_of[i] = -1;
            assign(i + 1, nb);
            for (int b = 0; b <= nb; ++b) {
                block_of[i] = b;
                assign(i + 1, std::max(nb, b + 1));
            }
            block_of[i] = -1;
        };
        assign(0, 0);
        return out;
    }

private:
    // Imprints whose bag part is exactly the positions ps.
    std::vector<std::string> block_choices(const std::vector<int>& bag, const std::vector<int>& ps) const {
        const int h = pat_.h;
        std::vector<std::string> out;
        std::vector<int> label(ps.size(), -1);
        std::vector<char> taken(h, 0);
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == ps.size()) {
                std::string phi(h, static_cast<char>(UP));
                for (std::size_t k = 0; k < ps.size(); ++k) phi[label[k]] = static_cast<char>(ps[k]);
                std::vector<int> free;
                for (int u = 0; u < h; ++u)
                    if (!taken[u]) free.push_back(u);
                for (std::uint32_t mask = 0; mask < (1u << free.size()); ++mask) {
                    for (std::size_t k = 0; k < free.size(); ++k)
                        phi[free[k]] = static_cast<char>((mask >> k) & 1 ? DOWN : UP);
                    bool ok = true;
                    for (int u = 0; u < h && ok; ++u)
                        for (int w : pat_.adj[u]) {
                            std::uint8_t a = at(phi, u), b = at(phi, w);
                            if ((a == UP && b == DOWN) || (a == DOWN && b == UP)) {
                                ok = false;
                                break;
                            }
                        }
                    if (ok) out.push_back(phi);
                }
                return;
            }
            for (int u = 0; u < h; ++u) {
                if (taken[u]) continue;
                bool ok = true;
                for (int w : pat_.adj[u])
                    for (std::size_t k = 0; k < i && ok; ++k)
                        if (label[k] == w && !g_.has_edge(bag[ps[i]], bag[ps[k]])) ok = false;
                if (!ok) continue;
                taken[u] = 1;
                label[i] = u;
                rec(i + 1);
                taken[u] = 0;
            }
            label[i] = -1;
        };
        rec(0);
        return out;
    }

    const Graph& g_;
    const Pattern& pat_;
};

using Table = std::unordered_map<Key, long long>;
constexpr long long kAbsent = -1;

void relax(Table& t, const Key& k, long long v) {
    auto [it, fresh] = t.try_emplace(k, v);
    if (!fresh && it->second < v) it->second = v;
}

int position(const std::vector<int>& bag, int v) {
    return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

class HPackDP {
public:
    HPackDP(const Graph& g, const NiceTreeDecomposition& ntd, const Graph& h, const HPackOptions& opt)
        : g_(g), ntd_(ntd), opt_(opt), pat_(h, opt.canonical), tr_(g, pat_) {}

    HPackResult run() {
        HPackResult res;
        const int m = static_cast<int>(ntd_.nodes.size());
        tables_.assign(m, {});
        res.nodes.resize(m);
        for (int t = 0; t < m; ++t) {
            if (opt_.stop.stop_requested()) throw Cancelled();
            const auto& node = ntd_.nodes[t];
            if (node.bag.size() >= 64 || node.bag.size() >= UP)
                throw InputError("H-packing DP: bag too large");
            Table out;
            switch (node.kind) {
                case NodeKind::Leaf: out[Key()] = 0; break;
                case NodeKind::Introduce: {
                    int p = position(node.bag, node.vertex);
                    for (const auto& [k, v] : tables_[node.children[0]]) {
                        if (v < 0) continue;
                        tr_.introduce(k, node.bag, p, [&](const std::string& raw, int, const std::vector<int>&, const JoinSide*) {
                            relax(out, canonicalize(pat_, raw, nullptr), v);
                        });
                    }
                    break;
                }
                case NodeKind::Forget: {
                    int p = position(ntd_.nodes[node.children[0]].bag, node.vertex);
                    for (const auto& [k, v] : tables_[node.children[0]]) {
                        if (v < 0) continue;
                        tr_.forget(k, p, [&](const std::string& raw, int delta, const std::vector<int>&, const JoinSide*) {
                            relax(out, canonicalize(pat_, raw, nullptr), v + delta);
                        });
                    }
                    break;
                }
                case NodeKind::Join: join(t, out); break;
            }
            if (opt_.dense) {
                if (static_cast<int>(node.bag.size()) > opt_.dense_max_bag)
                    throw InputError("H-packing DP: dense mode limited to bags of size " + std::to_string(opt_.dense_max_bag));
                for (const auto& k : tr_.enumerate(node.bag)) out.try_emplace(k, kAbsent);
            }
            tables_[t] = std::move(out);
            res.nodes[t] = {static_cast<int>(node.bag.size()), tables_[t].size()};
            if (!opt_.want_witness)
                for (int ch : node.children) Table().swap(tables_[ch]);
        }
        auto it = tables_[ntd_.root()].find(Key());
        res.value = it == tables_[ntd_.root()].end() || it->second < 0 ? 0 : it->second;
        if (opt_.want_witness) reconstruct(res);
        return res;
    }

private:
    void join(int t, Table& out) {
        const auto& node = ntd_.nodes[t];
        const Table& l = tables_[node.children[0]];
        const Table& r = tables_[node.children[1]];
        std::unordered_map<std::string, std::vector<std::pair<const Key*, long long>>> groups;
        for (const auto& [k, v] : r)
            if (v >= 0) groups[projection(pat_, k)].push_back({&k, v});
        std::uint64_t steps = 0;
        for (const auto& [k1, v1] : l) {
            if (v1 < 0) continue;
            auto it = groups.find(projection(pat_, k1));
            if (it == groups.end()) continue;
            for (const auto& [k2, v2] : it->second) {
                if ((++steps & 0x3FF) == 0 && opt_.stop.stop_requested()) throw Cancelled();
                tr_.join(k1, *k2, [&](const std::string& raw, int, const std::vector<int>&, const JoinSide*) {
                    relax(out, canonicalize(pat_, raw, nullptr), v1 + v2);
                });
            }
        }
    }

    struct State {
        int node;
        Key key;
        long long value;
        std::vector<int> copy;     // per block: copy id
        std::vector<Perm> sigma;   // per block: label -> copy label
    };

    // Inherits copy ids along a transition. prov maps result blocks to raw
    // blocks; src maps raw blocks to child blocks.
    static void inherit(const State& parent, const std::vector<Prov>& prov, const std::vector<int>& src,
                        const JoinSide* right, bool right_side, State& child) {
        for (std::size_t r = 0; r < prov.size(); ++r) {
            int raw = prov[r].raw;
            int cb = right_side ? right->block[raw] : src[raw];
            if (cb < 0) continue;
            const auto& pi = prov[r].perm;
            Perm& s = child.sigma[cb];
            for (std::size_t u = 0; u < pi.size(); ++u) {
                int child_label = right_side ? right->perm[raw][pi[u]] : pi[u];
                s[child_label] = parent.sigma[r][u];
            }
            child.copy[cb] = parent.copy[r];
        }
    }

    State fresh_state(int node, const Key& key, long long value) const {
        int q = static_cast<int>(key.size()) / pat_.h;
        return State{node, key, value, std::vector<int>(q, -1), std::vector<Perm>(q, Perm(pat_.h, 0))};
    }

    void reconstruct(HPackResult& res) {
        std::vector<std::vector<int>> copies;
        std::vector<State> stack;
        stack.push_back(fresh_state(ntd_.root(), Key(), res.value));
        auto open_new = [&](State& s) {
            for (std::size_t b = 0; b < s.copy.size(); ++b)
                if (s.copy[b] < 0) {
                    s.copy[b] = static_cast<int>(copies.size());
                    copies.emplace_back(pat_.h, -1);
                    std::iota(s.sigma[b].begin(), s.sigma[b].end(), 0);
                    ++res.closures_in_trace;
                }
        };
        while (!stack.empty()) {
            State s = std::move(stack.back());
            stack.pop_back();
            const auto& node = ntd_.nodes[s.node];
            const int h = pat_.h;
            for (std::size_t b = 0; b < s.copy.size(); ++b)
                for (int u = 0; u < h; ++u) {
                    std::uint8_t x = at(s.key, static_cast<int>(b) * h + u);
                    if (!in_bag(x)) continue;
                    int& slot = copies[s.copy[b]][s.sigma[b][u]];
                    if (slot >= 0 && slot != node.bag[x]) throw std::logic_error("H-packing witness: inconsistent copy");
                    slot = node.bag[x];
                }
            if (node.kind == NodeKind::Leaf) continue;
            bool found = false;
            std::vector<Prov> prov;
            if (node.kind == NodeKind::Join) {
                int lc = node.children[0], rc = node.children[1];
                std::unordered_map<std::string, std::vector<std::pair<const Key*, long long>>> groups;
                for (const auto& [k, v] : tables_[rc])
                    if (v >= 0) groups[projection(pat_, k)].push_back({&k, v});
                for (const auto& [k1, v1] : tables_[lc]) {
                    if (v1 < 0 || found) continue;
                    auto git = groups.find(projection(pat_, k1));
                    if (git == groups.end()) continue;
                    for (const auto& [k2p, v2] : git->second) {
                        const Key& k2 = *k2p;
                        if (v1 + v2 != s.value || found) continue;
                        tr_.join(k1, k2, [&](const std::string& raw, int, const std::vector<int>& src, const JoinSide* side) {
                            if (found || canonicalize(pat_, raw, &prov) != s.key) return;
                            found = true;
                            State a = fresh_state(lc, k1, v1), b = fresh_state(rc, k2, v2);
                            inherit(s, prov, src, side, false, a);
                            inherit(s, prov, src, side, true, b);
                            stack.push_back(std::move(a));
                            stack.push_back(std::move(b));
                        });
                    }
                }
            } else {
                int ch = node.children[0];
                bool intro = node.kind == NodeKind::Introduce;
                int p = intro ? position(node.bag, node.vertex) : position(ntd_.nodes[ch].bag, node.vertex);
                for (const auto& [k, v] : tables_[ch]) {
                    if (v < 0 || found) continue;
                    EmitFn check = [&](const std::string& raw, int delta, const std::vector<int>& src, const JoinSide*) {
                        if (found || v + delta != s.value || canonicalize(pat_, raw, &prov) != s.key) return;
                        found = true;
                        State c = fresh_state(ch, k, v);
                        inherit(s, prov, src, nullptr, false, c);
                        open_new(c);
                        stack.push_back(std::move(c));
                    };
                    if (intro)
                        tr_.introduce(k, node.bag, p, check);
                    else
                        tr_.forget(k, p, check);
                }
            }
            if (!found) throw std::logic_error("H-packing witness: transition not reproducible");
        }
        for (auto& m : copies) {
            std::vector<int> vs = m;
            if (std::find(vs.begin(), vs.end(), -1) != vs.end())
                throw std::logic_error("H-packing witness: copy left incomplete");
            std::sort(vs.begin(), vs.end());
            res.witness.push_back({Copy{vs, m}, 1});
        }
    }

    const Graph& g_;
    const NiceTreeDecomposition& ntd_;
    HPackOptions opt_;
    Pattern pat_;
    Transitions tr_;
    std::vector<Table> tables_;
};

void check_pattern(const Graph& h) {
    if (h.num_vertices() < 3 || h.num_vertices() > 10)
        throw InputError("H-packing DP supports patterns with 3 to 10 vertices");
    if (!is_connected(h)) throw InputError("H-packing DP requires a connected pattern");
}

Key to_key(const Pattern& pat, const std::vector<int>& bag, const PackingType& k) {
    std::string raw;
    for (const auto& phi : k.blocks) {
        if (static_cast<int>(phi.size()) != pat.h) throw InputError("imprint has the wrong length");
        for (int x : phi) {
            if (x == kUp)
                raw += static_cast<char>(UP);
            else if (x == kDown)
                raw += static_cast<char>(DOWN);
            else {
                auto it = std::lower_bound(bag.begin(), bag.end(), x);
                if (it == bag.end() || *it != x) throw InputError("imprint leaves the bag");
                raw += static_cast<char>(it - bag.begin());
            }
        }
    }
    return raw;
}

PackingType from_key(const Pattern& pat, const std::vector<int>& bag, const Key& key) {
    PackingType k;
    for (std::size_t b = 0; b * pat.h < key.size(); ++b) {
        std::vector<int> phi(pat.h);
        for (int u = 0; u < pat.h; ++u) {
            std::uint8_t x = at(key, static_cast<int>(b) * pat.h + u);
            phi[u] = x == UP ? kUp : x == DOWN ? kDown : bag[x];
        }
        k.blocks.push_back(std::move(phi));
    }
    return k;
}

}  // namespace

PackingType canonical_type(const Graph& h, const PackingType& k) {
    Pattern pat(h, true);
    std::vector<int> bag;
    for (const auto& phi : k.blocks)
        for (int x : phi)
            if (x >= 0) bag.push_back(x);
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    return from_key(pat, bag, canonicalize(pat, to_key(pat, bag, k), nullptr));
}

std::vector<PackingType> enumerate_types(const Graph& g, const std::vector<int>& bag, const Graph& h, int max_bag) {
    if (static_cast<int>(bag.size()) > max_bag)
        throw InputError("enumerate_types: bag of size " + std::to_string(bag.size()) + " exceeds the limit " +
                         std::to_string(max_bag));
    std::vector<int> sorted = bag;
    std::sort(sorted.begin(), sorted.end());
    Pattern pat(h, true);
    Transitions tr(g, pat);
    std::vector<PackingType> out;
    for (const auto& k : tr.enumerate(sorted)) out.push_back(from_key(pat, sorted, k));
    return out;
}

long double type_count_bound(int bag_size, int pattern_size) {
    return std::pow(2.0L * (bag_size + 2), static_cast<long double>(pattern_size) * bag_size);
}

HPackResult solve_h_packing(const Graph& g, const NiceTreeDecomposition& ntd, const Graph& h, const HPackOptions& options) {
    check_pattern(h);
    if (ntd.num_vertices != g.num_vertices()) throw InputError("decomposition and graph disagree on the vertex count");
    auto nice = validate_nice(ntd);
    if (!nice.ok) throw InputError("invalid nice decomposition: " + nice.message);
    auto v = validate(ntd.as_tree_decomposition(), g);
    if (!v.ok) throw InputError("invalid decomposition: " + v.message);
    return HPackDP(g, ntd, h, options).run();
}

bool solve_h_partition(const Graph& g, const NiceTreeDecomposition& ntd, const Graph& h, const HPackOptions& options) {
    auto opt = options;
    opt.want_witness = false;
    auto res = solve_h_packing(g, ntd, h, opt);
    int n = g.num_vertices();
    return n % h.num_vertices() == 0 && res.value == n / h.num_vertices();
}

}  // namespace treepack
