#include "treepack/clique_dp.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "treepack/errors.hpp"

namespace treepack {

const char* to_string(JoinMode m) { return m == JoinMode::Naive ? "naive" : "convolution"; }

JoinMode parse_join_mode(const std::string& s) {
    if (s == "naive") return JoinMode::Naive;
    if (s == "convolution" || s == "conv") return JoinMode::Convolution;
    throw InputError("unknown join mode '" + s + "' (expected naive or convolution)");
}

DenseTable::DenseTable(int w, int cc) : width(w), c(cc) {
    std::size_t n = 1;
    for (int i = 0; i < w; ++i) n *= static_cast<std::size_t>(cc + 1);
    values.assign(n, kAbsent);
}

std::vector<int> DenseTable::type_of(std::size_t i) const {
    std::vector<int> f(width);
    for (int p = 0; p < width; ++p) {
        f[p] = static_cast<int>(i % static_cast<std::size_t>(c + 1));
        i /= static_cast<std::size_t>(c + 1);
    }
    return f;
}

std::size_t DenseTable::index_of(const std::vector<int>& f) const {
    std::size_t i = 0;
    for (int p = width - 1; p >= 0; --p) i = i * static_cast<std::size_t>(c + 1) + static_cast<std::size_t>(f[p]);
    return i;
}

namespace {

void check_compatible(const DenseTable& a, const DenseTable& b) {
    if (a.width != b.width || a.c != b.c || a.values.size() != b.values.size())
        throw InputError("join: tables are over different bags");
}

// ---- arithmetic modulo the Goldilocks prime ----

using u64 = std::uint64_t;
using u128 = unsigned __int128;
constexpr u64 kP = 0xFFFFFFFF00000001ULL;
constexpr u64 kEps = 0xFFFFFFFFULL;  // 2^64 mod p

u64 reduce128(u128 x) {
    u64 lo = static_cast<u64>(x);
    u64 hi = static_cast<u64>(x >> 64);
    u64 hi_hi = hi >> 32;
    u64 hi_lo = hi & kEps;
    u64 t0;
    if (__builtin_sub_overflow(lo, hi_hi, &t0)) t0 -= kEps;
    u64 t1 = hi_lo * kEps;
    u64 t2;
    if (__builtin_add_overflow(t0, t1, &t2)) t2 += kEps;
    if (t2 >= kP) t2 -= kP;
    return t2;
}

u64 mul(u64 a, u64 b) { return reduce128(static_cast<u128>(a) * b); }
u64 add(u64 a, u64 b) {
    u64 r = a + b;
    if (r < a || r >= kP) r -= kP;
    return r;
}
u64 sub(u64 a, u64 b) { return a >= b ? a - b : a + (kP - b); }
u64 power(u64 a, u64 e) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

void ntt(std::vector<u64>& a, bool inverse) {
    std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    // Powers of a primitive n-th root; level `len` uses every (n/len)-th one.
    u64 root = power(7, (kP - 1) / n);
    if (inverse) root = power(root, kP - 2);
    std::vector<u64> tw(std::max<std::size_t>(n / 2, 1));
    tw[0] = 1;
    for (std::size_t k = 1; k < tw.size(); ++k) tw[k] = mul(tw[k - 1], root);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        std::size_t half = len / 2, stride = n / len;
        for (std::size_t i = 0; i < n; i += len)
            for (std::size_t k = 0; k < half; ++k) {
                u64 x = a[i + k];
                u64 y = mul(a[i + k + half], tw[k * stride]);
                a[i + k] = add(x, y);
                a[i + k + half] = sub(x, y);
            }
    }
    if (inverse) {
        u64 inv = power(n % kP, kP - 2);
        for (auto& x : a) x = mul(x, inv);
    }
}

constexpr std::size_t kMaxTransform = std::size_t(1) << 24;

// Transform length needed by join_convolution, or 0 when it would exceed kMaxTransform.
std::size_t transform_size(int width, int c, long long value_span) {
    std::size_t cells = 1;
    for (int i = 0; i < width; ++i) {
        cells *= static_cast<std::size_t>(2 * c + 1);
        if (cells > kMaxTransform) return 0;
    }
    if (value_span > static_cast<long long>(kMaxTransform)) return 0;
    std::size_t need = cells * static_cast<std::size_t>(value_span);
    if (need > kMaxTransform) return 0;
    return std::bit_ceil(need);
}

}  // namespace

DenseTable join_naive(const DenseTable& left, const DenseTable& right) {
    check_compatible(left, right);
    DenseTable out(left.width, left.c);
    std::vector<std::vector<int>> digits(left.size());
    for (std::size_t i = 0; i < left.size(); ++i) digits[i] = left.type_of(i);
    for (std::size_t i = 0; i < left.size(); ++i) {
        if (left.values[i] == DenseTable::kAbsent) continue;
        for (std::size_t j = 0; j < right.size(); ++j) {
            if (right.values[j] == DenseTable::kAbsent) continue;
            bool fits = true;
            for (int p = 0; p < left.width && fits; ++p) fits = digits[i][p] + digits[j][p] <= left.c;
            if (!fits) continue;
            // Digits do not carry, so indices simply add.
            auto& slot = out.values[i + j];
            slot = std::max(slot, left.values[i] + right.values[j]);
        }
    }
    return out;
}

DenseTable join_convolution(const DenseTable& left, const DenseTable& right) {
    check_compatible(left, right);
    DenseTable out(left.width, left.c);
    long long lmin = -1, lmax = -1, rmin = -1, rmax = -1;
    for (long long v : left.values)
        if (v != DenseTable::kAbsent) {
            lmin = lmin < 0 ? v : std::min(lmin, v);
            lmax = std::max(lmax, v);
        }
    for (long long v : right.values)
        if (v != DenseTable::kAbsent) {
            rmin = rmin < 0 ? v : std::min(rmin, v);
            rmax = std::max(rmax, v);
        }
    if (lmin < 0 || rmin < 0) return out;
    long long span = (lmax - lmin) + (rmax - rmin) + 1;
    std::size_t n = transform_size(left.width, left.c, span);
    if (n == 0) throw InputError("join_convolution: table too large for the transform");

    const int base = 2 * left.c + 1;
    auto encode = [&](std::size_t idx) {
        std::size_t e = 0, mult = 1;
        for (int p = 0; p < left.width; ++p) {
            e += (idx % static_cast<std::size_t>(left.c + 1)) * mult;
            idx /= static_cast<std::size_t>(left.c + 1);
            mult *= static_cast<std::size_t>(base);
        }
        return e;
    };
    std::vector<u64> a(n, 0), b(n, 0);
    const auto y = static_cast<std::size_t>(span);
    for (std::size_t i = 0; i < left.size(); ++i) {
        if (left.values[i] != DenseTable::kAbsent)
            a[encode(i) * y + static_cast<std::size_t>(left.values[i] - lmin)] += 1;
        if (right.values[i] != DenseTable::kAbsent)
            b[encode(i) * y + static_cast<std::size_t>(right.values[i] - rmin)] += 1;
    }
    ntt(a, false);
    ntt(b, false);
    for (std::size_t i = 0; i < n; ++i) a[i] = mul(a[i], b[i]);
    ntt(a, true);
    // Coefficients count witness pairs, far below p, so nonzero means present.
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::size_t e = encode(i) * y;
        for (std::size_t v = y; v-- > 0;)
            if (a[e + v] != 0) {
                out.values[i] = static_cast<long long>(v) + lmin + rmin;
                break;
            }
    }
    return out;
}

namespace {

using Key = unsigned __int128;

struct KeyHash {
    std::size_t operator()(Key k) const {
        auto lo = static_cast<u64>(k);
        auto hi = static_cast<u64>(k >> 64);
        u64 h = (lo ^ (hi * 0x9E3779B97F4A7C15ULL)) * 0xBF58476D1CE4E5B9ULL;
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

using Table = std::unordered_map<Key, long long, KeyHash>;
constexpr long long kAbsent = DenseTable::kAbsent;

// Coverage vectors packed s bits per bag position, s = bit_width(c) + 1. The
// spare top bit of each slot lets sums of two valid types be range-checked
// with one addition.
class Packing {
public:
    explicit Packing(int c) : c_(c), s_(std::bit_width(static_cast<unsigned>(c)) + 1) {
        mask_ = (Key(1) << s_) - 1;
    }
    int slot_bits() const { return s_; }
    int max_width() const { return 128 / s_; }
    int get(Key k, int p) const { return static_cast<int>((k >> (p * s_)) & mask_); }
    Key unit(int p) const { return Key(1) << (p * s_); }
    Key insert_slot(Key k, int p) const {
        Key low = p == 0 ? Key(0) : k & ((Key(1) << (p * s_)) - 1);
        Key high = shr(k, p * s_);
        return low | shl(high, (p + 1) * s_);
    }
    Key remove_slot(Key k, int p) const {
        Key low = p == 0 ? Key(0) : k & ((Key(1) << (p * s_)) - 1);
        Key high = shr(k, (p + 1) * s_);
        return low | shl(high, p * s_);
    }
    // True when some slot of k exceeds c; slots must be at most 2c.
    bool over(Key k, int width) const {
        Key add = 0, guard = 0;
        Key a = (Key(1) << (s_ - 1)) - 1 - static_cast<unsigned>(c_);
        Key g = Key(1) << (s_ - 1);
        for (int p = 0; p < width; ++p) {
            add |= a << (p * s_);
            guard |= g << (p * s_);
        }
        return ((k + add) & guard) != 0;
    }
    Key from_digits(const std::vector<int>& f) const {
        Key k = 0;
        for (std::size_t p = 0; p < f.size(); ++p) k |= Key(static_cast<unsigned>(f[p])) << (p * s_);
        return k;
    }

private:
    static Key shl(Key k, int b) { return b >= 128 ? Key(0) : k << b; }
    static Key shr(Key k, int b) { return b >= 128 ? Key(0) : k >> b; }
    int c_;
    int s_;
    Key mask_;
};

struct CliqueOnBag {
    Key unit = 0;                // parent-bag coverage increment
    std::vector<int> vertices;   // sorted, including the forgotten vertex
};

class CliqueDP {
public:
    CliqueDP(const Graph& g, const NiceTreeDecomposition& ntd, int c, int d, Variant variant, const CliqueDPOptions& opt)
        : g_(g), ntd_(ntd), c_(c), d_(d), variant_(variant), opt_(opt), pk_(c) {
        if (opt_.literal_introduce) opt_.dense = true;
    }

    CliqueDPResult run() {
        CliqueDPResult res;
        const int m = static_cast<int>(ntd_.nodes.size());
        tables_.assign(m, {});
        res.nodes.resize(m);
        for (int t = 0; t < m; ++t) {
            if (opt_.stop.stop_requested()) throw Cancelled();
            const auto& node = ntd_.nodes[t];
            int w = static_cast<int>(node.bag.size());
            if (w > pk_.max_width())
                throw InputError("clique DP: bag of size " + std::to_string(w) + " is too large for c = " + std::to_string(c_));
            switch (node.kind) {
                case NodeKind::Leaf: tables_[t][0] = 0; break;
                case NodeKind::Introduce: introduce(t); break;
                case NodeKind::Forget: forget(t); break;
                case NodeKind::Join: join(t); break;
            }
            if (opt_.dense) fill_dense(t);
            res.nodes[t] = {w, tables_[t].size()};
            if (!opt_.want_witness)
                for (int ch : node.children) Table().swap(tables_[ch]);
        }
        auto it = tables_[ntd_.root()].find(0);
        res.value = it == tables_[ntd_.root()].end() || it->second < 0 ? 0 : it->second;
        if (opt_.want_witness) res.witness = witness(res.value);
        return res;
    }

private:
    static int position(const std::vector<int>& bag, int v) {
        return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
    }

    static void relax(Table& t, Key k, long long v) {
        auto [it, fresh] = t.try_emplace(k, v);
        if (!fresh && it->second < v) it->second = v;
    }

    void enumerate_types(int w, const std::function<void(Key)>& fn) const {
        std::vector<int> f(w, 0);
        while (true) {
            fn(pk_.from_digits(f));
            int p = 0;
            while (p < w && f[p] == c_) f[p++] = 0;
            if (p == w) return;
            ++f[p];
        }
    }

    void fill_dense(int t) {
        int w = static_cast<int>(ntd_.nodes[t].bag.size());
        double total = 1;
        for (int i = 0; i < w; ++i) total *= c_ + 1;
        if (total > double(1 << 22)) throw InputError("clique DP: dense mode needs (c+1)^|bag| <= 2^22");
        enumerate_types(w, [&](Key k) { tables_[t].try_emplace(k, kAbsent); });
    }

    void introduce(int t) {
        const auto& node = ntd_.nodes[t];
        const Table& child = tables_[node.children[0]];
        int p = position(node.bag, node.vertex);
        Table out;
        out.reserve(child.size());
        for (auto [k, v] : child)
            if (v >= 0) out[pk_.insert_slot(k, p)] = v;
        if (opt_.literal_introduce)
            enumerate_types(static_cast<int>(node.bag.size()), [&](Key k) {
                if (pk_.get(k, p) != 0) relax(out, k, 0);
            });
        tables_[t] = std::move(out);
    }

    // Cliques of size d through v inside the child bag.
    std::vector<CliqueOnBag> cliques_through(const std::vector<int>& child_bag, int v) const {
        int p = position(child_bag, v);
        std::vector<int> cand;
        for (int i = 0; i < static_cast<int>(child_bag.size()); ++i)
            if (i != p && g_.has_edge(v, child_bag[i])) cand.push_back(i);
        std::vector<CliqueOnBag> out;
        std::vector<int> pick;
        std::function<void(std::size_t)> rec = [&](std::size_t from) {
            if (static_cast<int>(pick.size()) == d_ - 1) {
                CliqueOnBag q;
                for (int i : pick) {
                    q.unit += pk_.unit(i < p ? i : i - 1);
                    q.vertices.push_back(child_bag[i]);
                }
                q.vertices.push_back(v);
                std::sort(q.vertices.begin(), q.vertices.end());
                out.push_back(std::move(q));
                return;
            }
            for (std::size_t k = from; k < cand.size(); ++k) {
                bool ok = true;
                for (int i : pick)
                    if (!g_.has_edge(child_bag[i], child_bag[cand[k]])) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                pick.push_back(cand[k]);
                rec(k + 1);
                pick.pop_back();
            }
        };
        rec(0);
        return out;
    }

    void forget(int t) {
        const auto& node = ntd_.nodes[t];
        int ch = node.children[0];
        const auto& cbag = ntd_.nodes[ch].bag;
        int p = position(cbag, node.vertex);
        int w = static_cast<int>(node.bag.size());
        auto qs = cliques_through(cbag, node.vertex);
        Table out;
        std::uint64_t steps = 0;
        for (auto [k, v] : tables_[ch]) {
            if (v < 0) continue;
            int budget = c_ - pk_.get(k, p);
            Key base = pk_.remove_slot(k, p);
            std::function<void(std::size_t, Key, int)> rec = [&](std::size_t from, Key key, int ell) {
                if ((++steps & 0xFFFF) == 0 && opt_.stop.stop_requested()) throw Cancelled();
                relax(out, key, v + ell);
                if (ell == budget) return;
                for (std::size_t i = from; i < qs.size(); ++i) {
                    Key next = key + qs[i].unit;
                    if (pk_.over(next, w)) continue;
                    rec(variant_ == Variant::Arb ? i : i + 1, next, ell + 1);
                }
            };
            rec(0, base, 0);
        }
        tables_[t] = std::move(out);
    }

    static DenseTable to_dense(const Table& t, int w, int c, const Packing& pk) {
        DenseTable d(w, c);
        for (auto [k, v] : t) {
            if (v < 0) continue;
            std::vector<int> f(w);
            for (int p = 0; p < w; ++p) f[p] = pk.get(k, p);
            d.values[d.index_of(f)] = v;
        }
        return d;
    }

    void join(int t) {
        const auto& node = ntd_.nodes[t];
        const Table& l = tables_[node.children[0]];
        const Table& r = tables_[node.children[1]];
        int w = static_cast<int>(node.bag.size());
        Table out;
        if (opt_.join == JoinMode::Convolution && convolution_fits(l, r, w)) {
            DenseTable res = join_convolution(to_dense(l, w, c_, pk_), to_dense(r, w, c_, pk_));
            for (std::size_t i = 0; i < res.size(); ++i)
                if (res.values[i] != kAbsent) out[pk_.from_digits(res.type_of(i))] = res.values[i];
        } else {
            std::uint64_t steps = 0;
            for (auto [k1, v1] : l) {
                if (v1 < 0) continue;
                if ((++steps & 0x3FF) == 0 && opt_.stop.stop_requested()) throw Cancelled();
                for (auto [k2, v2] : r) {
                    if (v2 < 0) continue;
                    Key k = k1 + k2;
                    if (!pk_.over(k, w)) relax(out, k, v1 + v2);
                }
            }
        }
        tables_[t] = std::move(out);
    }

    bool convolution_fits(const Table& l, const Table& r, int w) const {
        double cells = 1;
        for (int i = 0; i < w; ++i) cells *= c_ + 1;
        if (cells > double(1 << 20)) return false;
        long long span = 1;
        auto range = [](const Table& t) {
            long long lo = -1, hi = -1;
            for (auto [k, v] : t)
                if (v >= 0) {
                    lo = lo < 0 ? v : std::min(lo, v);
                    hi = std::max(hi, v);
                }
            return lo < 0 ? 0LL : hi - lo;
        };
        span += range(l) + range(r);
        return transform_size(w, c_, span) != 0;
    }

    long long lookup(int t, Key k) const {
        auto it = tables_[t].find(k);
        return it == tables_[t].end() ? kAbsent : it->second;
    }

    std::vector<PackedCopy> witness(long long root_value) {
        std::map<std::vector<int>, int> used;
        struct Item {
            int node;
            Key key;
            long long value;
        };
        std::vector<Item> stack{{ntd_.root(), 0, root_value}};
        while (!stack.empty()) {
            Item it = stack.back();
            stack.pop_back();
            const auto& node = ntd_.nodes[it.node];
            // A zero entry needs no cliques below; literal-introduce entries end here too.
            if (it.value == 0) continue;
            switch (node.kind) {
                case NodeKind::Leaf: break;
                case NodeKind::Introduce: {
                    int p = position(node.bag, node.vertex);
                    stack.push_back({node.children[0], pk_.remove_slot(it.key, p), it.value});
                    break;
                }
                case NodeKind::Forget: {
                    int ch = node.children[0];
                    const auto& cbag = ntd_.nodes[ch].bag;
                    int p = position(cbag, node.vertex);
                    int w = static_cast<int>(node.bag.size());
                    auto qs = cliques_through(cbag, node.vertex);
                    std::vector<int> chosen;
                    bool found = false;
                    // Families whose coverage fits under it.key, then any zeta.
                    std::function<void(std::size_t, Key)> rec = [&](std::size_t from, Key cov) {
                        if (found) return;
                        int ell = static_cast<int>(chosen.size());
                        Key rest = it.key - cov;
                        for (int zeta = 0; zeta + ell <= c_ && !found; ++zeta) {
                            Key ck = pk_.insert_slot(rest, p) + pk_.unit(p) * static_cast<unsigned>(zeta);
                            if (lookup(ch, ck) == it.value - ell) {
                                found = true;
                                for (int i : chosen) used[qs[i].vertices]++;
                                stack.push_back({ch, ck, it.value - ell});
                            }
                        }
                        if (ell == c_) return;
                        for (std::size_t i = from; i < qs.size() && !found; ++i) {
                            Key next = cov + qs[i].unit;
                            bool fits = true;
                            for (int q = 0; q < w && fits; ++q) fits = pk_.get(next, q) <= pk_.get(it.key, q);
                            if (!fits) continue;
                            chosen.push_back(static_cast<int>(i));
                            rec(variant_ == Variant::Arb ? i : i + 1, next);
                            chosen.pop_back();
                        }
                    };
                    rec(0, 0);
                    if (!found) throw std::logic_error("clique DP witness: forget step not reproducible");
                    break;
                }
                case NodeKind::Join: {
                    int w = static_cast<int>(node.bag.size());
                    int l = node.children[0], r = node.children[1];
                    bool found = false;
                    for (auto [k1, v1] : tables_[l]) {
                        if (v1 < 0) continue;
                        bool fits = true;
                        for (int q = 0; q < w && fits; ++q) fits = pk_.get(k1, q) <= pk_.get(it.key, q);
                        if (!fits) continue;
                        Key k2 = it.key - k1;
                        long long v2 = lookup(r, k2);
                        if (v2 >= 0 && v1 + v2 == it.value) {
                            stack.push_back({l, k1, v1});
                            stack.push_back({r, k2, v2});
                            found = true;
                            break;
                        }
                    }
                    if (!found) throw std::logic_error("clique DP witness: join step not reproducible");
                    break;
                }
            }
        }
        std::vector<PackedCopy> out;
        for (auto& [vs, mult] : used) out.push_back({Copy{vs, vs}, mult});
        return out;
    }

    const Graph& g_;
    const NiceTreeDecomposition& ntd_;
    int c_;
    int d_;
    Variant variant_;
    CliqueDPOptions opt_;
    Packing pk_;
    std::vector<Table> tables_;
};

void check_inputs(const Graph& g, const NiceTreeDecomposition& ntd, int c, int d) {
    if (c < 1) throw InputError("c must be at least 1");
    if (d < 3) throw InputError("d must be at least 3");
    if (ntd.num_vertices != g.num_vertices()) throw InputError("decomposition and graph disagree on the vertex count");
    auto nice = validate_nice(ntd);
    if (!nice.ok) throw InputError("invalid nice decomposition: " + nice.message);
    auto v = validate(ntd.as_tree_decomposition(), g);
    if (!v.ok) throw InputError("invalid decomposition: " + v.message);
}

}  // namespace

CliqueDPResult solve_clique_packing(const Graph& g, const NiceTreeDecomposition& ntd, int c, int d, Variant variant,
                                    const CliqueDPOptions& options) {
    check_inputs(g, ntd, c, d);
    return CliqueDP(g, ntd, c, d, variant, options).run();
}

bool solve_clique_partition(const Graph& g, const NiceTreeDecomposition& ntd, int c, int d, Variant variant,
                            const CliqueDPOptions& options) {
    long long need = static_cast<long long>(c) * g.num_vertices();
    if (need % d != 0) {
        check_inputs(g, ntd, c, d);
        return false;
    }
    auto opt = options;
    opt.want_witness = false;
    return solve_clique_packing(g, ntd, c, d, variant, opt).value == need / d;
}

}  // namespace treepack
