#pragma once

#include <string>
#include <vector>

namespace treepack {

using Tuple = std::vector<int>;

// A finite set of tuples over {0..bound}^arity, kept sorted and duplicate-free.
class Relation {
public:
    Relation() = default;
    Relation(int arity, int bound, std::vector<Tuple> tuples = {});

    int arity() const { return arity_; }
    int bound() const { return bound_; }
    const std::vector<Tuple>& tuples() const { return tuples_; }
    std::size_t size() const { return tuples_.size(); }
    bool empty() const { return tuples_.empty(); }
    bool contains(const Tuple& t) const;

    void insert(Tuple t);
    Relation with_bound(int bound) const;

    bool operator==(const Relation& o) const = default;

    std::string to_json() const;
    static Relation from_json(const std::string& text);
    std::string pretty() const;

private:
    int arity_ = 0;
    int bound_ = 0;
    std::vector<Tuple> tuples_;
};

int weight(const Tuple& t);

// The bound defaults to the largest value the relation can contain.
Relation rel_cover(int ell, int y, int bound = -1);
Relation rel_eq(int ell, const std::vector<int>& values, int bound = -1);
Relation rel_sum(int ell, int z, int bound = -1);
Relation rel_cneq(int z, int bound = -1);

// True iff every tuple weight is congruent to x modulo d.
bool is_regular(const Relation& r, int x, int d);
// Residue x with is_regular(r, x, d), or -1 when none exists. Empty relations
// are reported as 0-regular.
int regular_residue(const Relation& r, int d);

Tuple complement(const Tuple& t, int c);
Relation complement(const Relation& r, int c);

Tuple concat(const Tuple& a, const Tuple& b);
Tuple stack(const std::vector<Tuple>& vectors);

// Selection relation: for w in X_1 x ... x X_u, the stacked tuple whose
// length-y blocks are all-zero at the positions in w and all-one elsewhere.
// Parts are given 1-indexed over [x].
Relation rel_sel(const std::vector<std::vector<int>>& partition, int x, int y);
Relation rel_sel_full(int x, int y);
Tuple sel_tau(const std::vector<int>& w, int x, int y);

// {u concatenated with its c-complement | u in W}.
Relation rel_copy(const Relation& w, int c);

Relation set_difference(const Relation& a, const Relation& b);

}  // namespace treepack
