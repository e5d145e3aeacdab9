#pragma once

// Trimmed posets: ranked posets whose all-seeing vertices have been collapsed
// to at most one unlabeled placeholder per rank, all other vertices labeled
// 1..m. Carries the trimming map itself plus ordinal-sum composition and
// decomposition.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "poset31/poset.hpp"

namespace poset31 {

struct TrimmedPoset {
    RankedPoset ranked;
    std::vector<int> label;  // 1..m for labeled vertices, 0 for unlabeled

    int size() const { return ranked.poset.n; }
    bool unlabeled(int v) const { return label[v] == 0; }
    int labeled_count() const {
        int m = 0;
        for (int l : label) m += l != 0;
        return m;
    }
    int all_seeing_count() const { return size() - labeled_count(); }
};

// Structural validity: a well-formed ranked poset that is vigilant, with
// unlabeled vertices exactly the all-seeing ones, at most one per rank, and
// labels forming 1..m.
inline bool is_valid_trimmed(const TrimmedPoset& t) {
    const auto& p = t.ranked.poset;
    if ((int)t.label.size() != p.n) return false;
    if (!validate(p)) return false;
    auto rf = rank_function(p);
    if (!rf || rf->rank != t.ranked.rank) return false;
    auto cls = seeing_classes(t.ranked);
    std::vector<int> all_seeing_per_rank(height(t.ranked), 0);
    std::vector<bool> seen_label(p.n + 1, false);
    int m = 0;
    for (int v = 0; v < p.n; ++v) {
        if (cls[v] == SeeingClass::NoneSeeing) return false;
        bool all = is_all_seeing(cls[v]);
        if (all != t.unlabeled(v)) return false;
        if (all && ++all_seeing_per_rank[t.ranked.rank[v]] > 1) return false;
        if (!all) {
            int l = t.label[v];
            if (l < 1 || l > p.n || seen_label[l]) return false;
            seen_label[l] = true;
            ++m;
        }
    }
    for (int l = 1; l <= m; ++l)
        if (!seen_label[l]) return false;
    return true;
}

// Equality of trimmed posets as combinatorial objects. The matching is
// forced: labels pair labeled vertices, and each rank holds at most one
// unlabeled vertex.
inline bool trimmed_equal(const TrimmedPoset& a, const TrimmedPoset& b) {
    int n = a.size();
    if (n != b.size()) return false;
    std::vector<int> map(n, -1);
    std::vector<int> by_label(n + 1, -1);
    std::vector<int> placeholder_at_rank;
    int hb = b.size() == 0 ? 0 : height(b.ranked);
    placeholder_at_rank.assign(hb, -1);
    for (int v = 0; v < n; ++v) {
        if (b.unlabeled(v)) {
            if (placeholder_at_rank[b.ranked.rank[v]] != -1) return false;
            placeholder_at_rank[b.ranked.rank[v]] = v;
        } else {
            if (b.label[v] > n || by_label[b.label[v]] != -1) return false;
            by_label[b.label[v]] = v;
        }
    }
    for (int v = 0; v < n; ++v) {
        int w;
        if (a.unlabeled(v)) {
            int r = a.ranked.rank[v];
            w = r < hb ? placeholder_at_rank[r] : -1;
        } else {
            w = a.label[v] <= n ? by_label[a.label[v]] : -1;
        }
        if (w == -1 || b.ranked.rank[w] != a.ranked.rank[v]) return false;
        map[v] = w;
    }
    std::vector<bool> hit(n, false);
    for (int v = 0; v < n; ++v) {
        if (hit[map[v]]) return false;
        hit[map[v]] = true;
    }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (a.ranked.poset.less(u, v) != b.ranked.poset.less(map[u], map[v]))
                return false;
    return true;
}

// Reassigns labels 1..m following the given element order; unlabeled
// elements in the order are skipped.
inline TrimmedPoset relabel_in_order(const TrimmedPoset& t, const std::vector<int>& order) {
    TrimmedPoset r = t;
    int next = 1;
    for (int v : order)
        if (!t.unlabeled(v)) r.label[v] = next++;
    if (next - 1 != t.labeled_count())
        throw std::invalid_argument("relabel_in_order: order misses labeled elements");
    return r;
}

// Collapse the all-seeing vertices of a vigilant weakly graded poset: remove
// them all, then reinstate one unlabeled all-seeing vertex at every rank that
// lost at least one. Remaining vertices are labeled 1..m in their original
// label order (vertex index order here).
inline TrimmedPoset trim(const RankedPoset& r) {
    auto cls = seeing_classes(r);
    for (auto c : cls)
        if (c == SeeingClass::NoneSeeing)
            throw std::invalid_argument("trim: poset is not vigilant");
    int h = height(r);
    std::vector<bool> rank_trimmed(h, false);
    std::vector<int> kept;
    for (int v = 0; v < r.poset.n; ++v) {
        if (is_all_seeing(cls[v]))
            rank_trimmed[r.rank[v]] = true;
        else
            kept.push_back(v);
    }

    std::vector<int> new_rank;
    std::vector<int> new_label;
    std::vector<int> old_of;  // kept vertex behind each new id, -1 for placeholders
    for (int v : kept) {
        new_rank.push_back(r.rank[v]);
        new_label.push_back((int)new_label.size() + 1);
        old_of.push_back(v);
    }
    std::vector<int> placeholder(h, -1);
    for (int rk = 0; rk < h; ++rk)
        if (rank_trimmed[rk]) {
            placeholder[rk] = (int)new_rank.size();
            new_rank.push_back(rk);
            new_label.push_back(0);
            old_of.push_back(-1);
        }

    int n = (int)new_rank.size();
    auto cov = covers(r.poset);
    std::vector<std::pair<int, int>> rels;
    for (int a = 0; a < (int)kept.size(); ++a)
        for (int b = 0; b < (int)kept.size(); ++b)
            if ((cov[kept[a]] >> kept[b]) & 1u) rels.push_back({a, b});
    // a placeholder covers everything one rank below and is covered by
    // everything one rank above
    for (int rk = 0; rk < h; ++rk) {
        if (placeholder[rk] == -1) continue;
        for (int v = 0; v < n; ++v) {
            if (v == placeholder[rk]) continue;
            if (new_rank[v] == rk - 1) rels.push_back({v, placeholder[rk]});
            if (new_rank[v] == rk + 1) rels.push_back({placeholder[rk], v});
        }
    }
    TrimmedPoset t;
    t.ranked.poset = poset_from_relations(n, rels);
    t.ranked.rank = std::move(new_rank);
    t.label = std::move(new_label);
    return t;
}

// Named check of the trimming equivalence: the avoidance of the input and of
// its trimmed image, which always agree.
inline std::pair<bool, bool> is_3plus1_avoiding_trimmed_equiv(const RankedPoset& r) {
    bool before = !contains_3plus1(r.poset);
    bool after = !contains_3plus1(trim(r).ranked.poset);
    return {before, after};
}

// Stacks t2 on top of t1: ranks of t2 shift up by height(t1), every top-rank
// element of t1 lies below every bottom-rank element of t2, and t2's labels
// follow t1's. Empty operands act as identities.
inline TrimmedPoset ordinal_sum(const TrimmedPoset& t1, const TrimmedPoset& t2) {
    if (t1.size() == 0) return t2;
    if (t2.size() == 0) return t1;
    int n1 = t1.size(), n2 = t2.size();
    int h1 = height(t1.ranked);
    TrimmedPoset r;
    r.ranked.poset = Poset(n1 + n2);
    r.ranked.rank.resize(n1 + n2);
    r.label.resize(n1 + n2);
    int m1 = t1.labeled_count();
    for (int v = 0; v < n1; ++v) {
        r.ranked.rank[v] = t1.ranked.rank[v];
        r.label[v] = t1.label[v];
    }
    for (int v = 0; v < n2; ++v) {
        r.ranked.rank[n1 + v] = t2.ranked.rank[v] + h1;
        r.label[n1 + v] = t2.label[v] == 0 ? 0 : t2.label[v] + m1;
    }
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n1; ++b)
            if (t1.ranked.poset.less(a, b)) r.ranked.poset.set_less(a, b);
    for (int a = 0; a < n2; ++a)
        for (int b = 0; b < n2; ++b)
            if (t2.ranked.poset.less(a, b)) r.ranked.poset.set_less(n1 + a, n1 + b);
    for (int a = 0; a < n1; ++a)
        if (t1.ranked.rank[a] == h1 - 1)
            for (int b = 0; b < n2; ++b)
                if (t2.ranked.rank[b] == 0) r.ranked.poset.set_less(a, n1 + b);
    transitive_close(r.ranked.poset);
    return r;
}

// No rank below the top consists entirely of up-seeing vertices.
inline bool is_sum_indecomposable(const TrimmedPoset& t) {
    if (t.size() == 0) throw std::invalid_argument("is_sum_indecomposable: empty poset");
    auto cls = seeing_classes(t.ranked);
    auto rm = rank_masks(t.ranked);
    int h = (int)rm.size();
    for (int i = 0; i < h - 1; ++i) {
        bool all_up = true;
        for_bits(rm[i], [&](int v) { all_up = all_up && is_up_seeing(cls[v]); });
        if (all_up) return false;
    }
    return true;
}

struct OrdinalDecomposition {
    std::vector<TrimmedPoset> summands;
    // Original elements of each summand, sorted by label with any
    // placeholder vertices following the labeled ones.
    std::vector<std::vector<int>> elements;

    // Concatenated element order; relabeling the source in this order yields
    // the poset that recomposition returns.
    std::vector<int> canonical_order() const {
        std::vector<int> out;
        for (const auto& part : elements) out.insert(out.end(), part.begin(), part.end());
        return out;
    }
};

// Maximal ordinal-sum factorization: cut below every rank whose vertices are
// all up-seeing. Valid for trimmed strongly graded posets and for trimmed
// weakly graded 3+1-avoiding posets.
inline OrdinalDecomposition decompose_ordinal(const TrimmedPoset& t) {
    OrdinalDecomposition out;
    if (t.size() == 0) return out;
    auto cls = seeing_classes(t.ranked);
    auto rm = rank_masks(t.ranked);
    int h = (int)rm.size();
    std::vector<int> cut_after;  // ranks ending a summand
    for (int i = 0; i < h; ++i) {
        bool all_up = true;
        for_bits(rm[i], [&](int v) { all_up = all_up && is_up_seeing(cls[v]); });
        if (all_up) cut_after.push_back(i);
    }
    // the top rank is vacuously all up-seeing, so cut_after ends with h-1

    int lo = 0;
    for (int hi : cut_after) {
        std::vector<int> elems;
        for (int v = 0; v < t.size(); ++v)
            if (t.ranked.rank[v] >= lo && t.ranked.rank[v] <= hi) elems.push_back(v);
        std::sort(elems.begin(), elems.end(), [&](int a, int b) {
            bool ua = t.unlabeled(a), ub = t.unlabeled(b);
            if (ua != ub) return ub;  // labeled first
            if (!ua) return t.label[a] < t.label[b];
            return t.ranked.rank[a] < t.ranked.rank[b];
        });
        TrimmedPoset part;
        int n = (int)elems.size();
        part.ranked.poset = Poset(n);
        part.ranked.rank.resize(n);
        part.label.resize(n);
        int next_label = 1;
        for (int i = 0; i < n; ++i) {
            part.ranked.rank[i] = t.ranked.rank[elems[i]] - lo;
            part.label[i] = t.unlabeled(elems[i]) ? 0 : next_label++;
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (t.ranked.poset.less(elems[a], elems[b]))
                    part.ranked.poset.set_less(a, b);
        out.summands.push_back(std::move(part));
        out.elements.push_back(std::move(elems));
        lo = hi + 1;
    }
    return out;
}

inline TrimmedPoset recompose_ordinal(const OrdinalDecomposition& d) {
    TrimmedPoset acc;
    for (const auto& s : d.summands) acc = ordinal_sum(acc, s);
    return acc;
}

}  // namespace poset31
