#include "treepack/relation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "treepack/errors.hpp"

namespace treepack {

namespace {

void check_tuple(const Tuple& t, int arity, int bound) {
    if (static_cast<int>(t.size()) != arity)
        throw InputError("tuple of length " + std::to_string(t.size()) + " in relation of arity " + std::to_string(arity));
    for (int x : t)
        if (x < 0 || x > bound)
            throw InputError("tuple entry " + std::to_string(x) + " outside [0," + std::to_string(bound) + "]");
}

}  // namespace

Relation::Relation(int arity, int bound, std::vector<Tuple> tuples) : arity_(arity), bound_(bound) {
    if (arity < 0 || bound < 0) throw InputError("relation arity and bound must be non-negative");
    for (const auto& t : tuples) check_tuple(t, arity, bound);
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    tuples_ = std::move(tuples);
}

bool Relation::contains(const Tuple& t) const { return std::binary_search(tuples_.begin(), tuples_.end(), t); }

void Relation::insert(Tuple t) {
    check_tuple(t, arity_, bound_);
    auto it = std::lower_bound(tuples_.begin(), tuples_.end(), t);
    if (it == tuples_.end() || *it != t) tuples_.insert(it, std::move(t));
}

Relation Relation::with_bound(int bound) const { return Relation(arity_, bound, tuples_); }

std::string Relation::to_json() const {
    nlohmann::json j;
    j["arity"] = arity_;
    j["bound"] = bound_;
    j["tuples"] = tuples_;
    return j.dump();
}

Relation Relation::from_json(const std::string& text) {
    try {
        auto j = nlohmann::json::parse(text);
        return Relation(j.at("arity").get<int>(), j.at("bound").get<int>(), j.at("tuples").get<std::vector<Tuple>>());
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("relation JSON: ") + e.what());
    }
}

std::string Relation::pretty() const {
    std::ostringstream out;
    out << "arity " << arity_ << ", bound " << bound_ << ", " << tuples_.size() << " tuple(s)\n";
    for (const auto& t : tuples_) {
        out << "  (";
        for (std::size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t[i];
        out << ")\n";
    }
    return out.str();
}

int weight(const Tuple& t) { return std::accumulate(t.begin(), t.end(), 0); }

Relation rel_cover(int ell, int y, int bound) {
    if (ell < 1) throw InputError("rel_cover: arity must be >= 1");
    if (y < 0) throw InputError("rel_cover: value must be >= 0");
    return Relation(ell, bound < 0 ? y : bound, {Tuple(ell, y)});
}

Relation rel_eq(int ell, const std::vector<int>& values, int bound) {
    if (ell < 1) throw InputError("rel_eq: arity must be >= 1");
    if (values.empty()) throw InputError("rel_eq: value set is empty");
    int top = *std::max_element(values.begin(), values.end());
    std::vector<Tuple> ts;
    for (int x : values) {
        if (x < 0) throw InputError("rel_eq: negative value");
        ts.emplace_back(ell, x);
    }
    return Relation(ell, bound < 0 ? top : bound, std::move(ts));
}

Relation rel_sum(int ell, int z, int bound) {
    if (ell < 1) throw InputError("rel_sum: arity must be >= 1");
    if (z < 1) throw InputError("rel_sum: total must be >= 1");
    std::vector<Tuple> ts;
    Tuple cur(ell, 0);
    // Odometer over [0,z]^ell keeping those that sum to z.
    while (true) {
        if (weight(cur) == z) ts.push_back(cur);
        int i = ell - 1;
        while (i >= 0 && cur[i] == z) cur[i--] = 0;
        if (i < 0) break;
        ++cur[i];
    }
    return Relation(ell, bound < 0 ? z : bound, std::move(ts));
}

Relation rel_cneq(int z, int bound) {
    if (z < 1) throw InputError("rel_cneq: value must be >= 1");
    return rel_sum(2, z, bound);
}

bool is_regular(const Relation& r, int x, int d) {
    if (d < 1) throw InputError("is_regular: modulus must be >= 1");
    for (const auto& t : r.tuples())
        if (((weight(t) - x) % d + d) % d != 0) return false;
    return true;
}

int regular_residue(const Relation& r, int d) {
    if (r.empty()) return 0;
    int x = weight(r.tuples().front()) % d;
    return is_regular(r, x, d) ? x : -1;
}

Tuple complement(const Tuple& t, int c) {
    Tuple out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] > c || t[i] < 0) throw InputError("complement: entry outside [0,c]");
        out[i] = c - t[i];
    }
    return out;
}

Relation complement(const Relation& r, int c) {
    if (r.bound() > c) {
        for (const auto& t : r.tuples())
            for (int x : t)
                if (x > c) throw InputError("complement: entry " + std::to_string(x) + " exceeds c");
    }
    std::vector<Tuple> ts;
    for (const auto& t : r.tuples()) ts.push_back(complement(t, c));
    return Relation(r.arity(), c, std::move(ts));
}

Tuple concat(const Tuple& a, const Tuple& b) {
    Tuple out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Tuple stack(const std::vector<Tuple>& vectors) {
    Tuple out;
    for (const auto& v : vectors) {
        if (v.size() != vectors.front().size()) throw InputError("stack: vectors have different lengths");
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

Tuple sel_tau(const std::vector<int>& w, int x, int y) {
    std::vector<Tuple> rows;
    for (int i = 1; i <= x; ++i) {
        bool zero = std::find(w.begin(), w.end(), i) != w.end();
        rows.emplace_back(y, zero ? 0 : 1);
    }
    return stack(rows);
}

Relation rel_sel(const std::vector<std::vector<int>>& partition, int x, int y) {
    if (x < 1 || y < 1) throw InputError("rel_sel: x and y must be >= 1");
    std::vector<int> seen(x + 1, 0);
    for (const auto& part : partition) {
        if (part.empty()) throw InputError("rel_sel: empty part");
        for (int i : part) {
            if (i < 1 || i > x || seen[i]) throw InputError("rel_sel: parts do not partition [x]");
            seen[i] = 1;
        }
    }
    for (int i = 1; i <= x; ++i)
        if (!seen[i]) throw InputError("rel_sel: parts do not partition [x]");
    std::vector<Tuple> ts;
    std::vector<std::size_t> idx(partition.size(), 0);
    while (true) {
        std::vector<int> w;
        for (std::size_t p = 0; p < partition.size(); ++p) w.push_back(partition[p][idx[p]]);
        ts.push_back(sel_tau(w, x, y));
        std::size_t p = 0;
        while (p < partition.size() && ++idx[p] == partition[p].size()) idx[p++] = 0;
        if (p == partition.size()) break;
    }
    return Relation(x * y, 1, std::move(ts));
}

Relation rel_sel_full(int x, int y) {
    std::vector<int> all(x);
    std::iota(all.begin(), all.end(), 1);
    return rel_sel({all}, x, y);
}

Relation rel_copy(const Relation& w, int c) {
    std::vector<Tuple> ts;
    for (const auto& u : w.tuples()) ts.push_back(concat(u, complement(u, c)));
    return Relation(2 * w.arity(), c, std::move(ts));
}

Relation set_difference(const Relation& a, const Relation& b) {
    std::vector<Tuple> ts;
    for (const auto& t : a.tuples())
        if (!b.contains(t)) ts.push_back(t);
    return Relation(a.arity(), a.bound(), std::move(ts));
}

}  // namespace treepack
