#pragma once

// Building sum-indecomposable posets by sticking and gluing quarks, and the
// inverse decomposition. Rank i of the result holds the bottom side of quark
// i, the top side of quark i-1, and an unlabeled all-seeing vertex when the
// i-th join is a gluing.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "poset31/quark.hpp"
#include "poset31/trimmed.hpp"
#include "poset31/word.hpp"

namespace poset31 {

namespace detail {

// Raw construction from the stacking rules; no role validation. Element
// order within a rank: quark bottom side, then the previous quark's top
// side, then the glue vertex.
inline TrimmedPoset build_quark_composition(const std::vector<Quark>& quarks,
                                            const std::vector<Join>& joins) {
    int k = (int)quarks.size() - 1;
    if (k < 1 || (int)joins.size() != k)
        throw std::invalid_argument("quark composition needs k+1 quarks and k joins");
    for (const auto& q : quarks)
        if (q.m < 1 || q.n < 1 || q.n > 32 || (int)q.adj.size() != q.m)
            throw std::invalid_argument("malformed quark");

    std::vector<std::vector<int>> bottom_ids(k + 1), top_ids(k + 1);
    std::vector<int> glue_id(k + 2, -1);
    std::vector<int> rank_of;
    std::vector<bool> unlabeled_flag;
    auto new_vertex = [&](int rank, bool unlabeled) {
        rank_of.push_back(rank);
        unlabeled_flag.push_back(unlabeled);
        return (int)rank_of.size() - 1;
    };
    for (int r = 0; r <= k + 1; ++r) {
        if (r <= k) {
            const Quark& q = quarks[r];
            for (int i = 0; i < q.m; ++i)
                bottom_ids[r].push_back(new_vertex(r, r == 0 && bottom_all_seeing(q, i)));
        }
        if (r >= 1) {
            const Quark& q = quarks[r - 1];
            for (int j = 0; j < q.n; ++j)
                top_ids[r - 1].push_back(new_vertex(r, r == k + 1 && top_all_seeing(q, j)));
        }
        if (r >= 1 && r <= k && joins[r - 1] == Join::Glue)
            glue_id[r] = new_vertex(r, true);
    }

    int n = (int)rank_of.size();
    std::vector<std::pair<int, int>> rels;
    // quark edges are covers of the result
    for (int i = 0; i <= k; ++i)
        for (int a = 0; a < quarks[i].m; ++a)
            for (int b = 0; b < quarks[i].n; ++b)
                if (quarks[i].edge(a, b)) rels.push_back({bottom_ids[i][a], top_ids[i][b]});
    // same-side covers between consecutive quarks
    for (int i = 0; i + 1 <= k; ++i) {
        for (int a : bottom_ids[i])
            for (int b : bottom_ids[i + 1]) rels.push_back({a, b});
        for (int a : top_ids[i])
            for (int b : top_ids[i + 1]) rels.push_back({a, b});
    }
    // the top side of quark i lies under the bottom side of quark i+2
    for (int i = 0; i + 2 <= k; ++i)
        for (int a : top_ids[i])
            for (int b : bottom_ids[i + 2]) rels.push_back({a, b});
    // glue vertices are all-seeing at their rank
    for (int r = 1; r <= k; ++r) {
        int g = glue_id[r];
        if (g == -1) continue;
        for (int v = 0; v < n; ++v) {
            if (rank_of[v] == r - 1) rels.push_back({v, g});
            if (rank_of[v] == r + 1) rels.push_back({g, v});
        }
    }

    TrimmedPoset t;
    t.ranked.poset = poset_from_relations(n, rels);
    t.ranked.rank = rank_of;
    t.label.assign(n, 0);
    int next = 1;
    for (int v = 0; v < n; ++v)
        if (!unlabeled_flag[v]) t.label[v] = next++;
    return t;
}

}  // namespace detail

// Sticks and glues a bottom quark, middle quarks, and a top quark into a
// sum-indecomposable strongly graded poset of height k+2. With weak_ends the
// boundary quarks may be middle quarks carrying isolated vertices on their
// outward sides, and the result is then only weakly graded there.
inline TrimmedPoset compose_quarks(const std::vector<Quark>& quarks,
                                   const std::vector<Join>& joins,
                                   bool weak_ends = false) {
    int k = (int)quarks.size() - 1;
    if (k < 1 || (int)joins.size() != k)
        throw std::invalid_argument("compose_quarks: need k+1 quarks and k joins, k >= 1");
    const Quark& q0 = quarks.front();
    const Quark& qk = quarks.back();
    bool first_ok = weak_ends ? (has_role(q0, QuarkRole::Bottom) || has_role(q0, QuarkRole::Middle))
                              : has_role(q0, QuarkRole::Bottom);
    bool last_ok = weak_ends ? (has_role(qk, QuarkRole::Top) || has_role(qk, QuarkRole::Middle))
                             : has_role(qk, QuarkRole::Top);
    if (!first_ok) throw std::invalid_argument("compose_quarks: first quark lacks its role");
    if (!last_ok) throw std::invalid_argument("compose_quarks: last quark lacks its role");
    if (count_bottom_all_seeing(q0) > 1 || count_top_all_seeing(qk) > 1)
        throw std::invalid_argument("compose_quarks: boundary quark is not trimmed");
    for (int i = 1; i < k; ++i)
        if (!has_role(quarks[i], QuarkRole::Middle))
            throw std::invalid_argument("compose_quarks: interior quark is not a middle quark");
    for (const auto& q : quarks)
        if (!quark_valid(q)) throw std::invalid_argument("compose_quarks: invalid quark");
    return detail::build_quark_composition(quarks, joins);
}

// The height-2 sum-indecomposables are a middle quark plus optional
// all-seeing vertices at rank 0 and/or rank 1.
inline TrimmedPoset height2_trimmed(const Quark& middle, bool glue_bottom, bool glue_top) {
    if (!quark_valid(middle) || !has_role(middle, QuarkRole::Middle))
        throw std::invalid_argument("height2_trimmed: needs a middle quark");
    int n = middle.m + middle.n + glue_bottom + glue_top;
    TrimmedPoset t;
    t.ranked.poset = Poset(n);
    t.ranked.rank.resize(n);
    t.label.resize(n);
    std::vector<int> bottom(middle.m), top(middle.n);
    int id = 0, next = 1;
    for (int i = 0; i < middle.m; ++i) {
        bottom[i] = id;
        t.ranked.rank[id] = 0;
        t.label[id++] = next++;
    }
    int gb = -1;
    if (glue_bottom) {
        gb = id;
        t.ranked.rank[id] = 0;
        t.label[id++] = 0;
    }
    for (int j = 0; j < middle.n; ++j) {
        top[j] = id;
        t.ranked.rank[id] = 1;
        t.label[id++] = next++;
    }
    int gt = -1;
    if (glue_top) {
        gt = id;
        t.ranked.rank[id] = 1;
        t.label[id++] = 0;
    }
    std::vector<std::pair<int, int>> rels;
    for (int i = 0; i < middle.m; ++i)
        for (int j = 0; j < middle.n; ++j)
            if (middle.edge(i, j)) rels.push_back({bottom[i], top[j]});
    for (int v = 0; v < n; ++v) {
        if (gb != -1 && t.ranked.rank[v] == 1) rels.push_back({gb, v});
        if (gt != -1 && t.ranked.rank[v] == 0 && v != gt) rels.push_back({v, gt});
    }
    t.ranked.poset = poset_from_relations(n, rels);
    return t;
}

struct QuarkDecomposition {
    std::vector<Quark> quarks;
    std::vector<Join> joins;  // interior joins alpha_1 .. alpha_k
    // Element order matching the labels compose_quarks assigns.
    std::vector<int> sweep_order;
};

// Inverse of compose_quarks for sum-indecomposable posets of height >= 3:
// quark i's bottom side holds the non-up-seeing vertices of rank i, its top
// side the non-down-seeing vertices of rank i+1, except that the boundary
// quarks take their whole boundary rank.
inline QuarkDecomposition quark_decompose(const TrimmedPoset& t) {
    int h = t.size() == 0 ? 0 : height(t.ranked);
    if (h < 3) throw std::invalid_argument("quark_decompose: height must be at least 3");
    int k = h - 2;
    auto cls = seeing_classes(t.ranked);
    auto rm = rank_masks(t.ranked);
    auto by_label = [&](std::vector<int>& v) {
        std::sort(v.begin(), v.end(), [&](int a, int b) {
            bool ua = t.unlabeled(a), ub = t.unlabeled(b);
            if (ua != ub) return ub;  // labeled first
            return t.label[a] < t.label[b];
        });
    };
    QuarkDecomposition out;
    std::vector<std::vector<int>> bottoms(k + 1), tops(k + 1);
    for (int i = 0; i <= k; ++i) {
        for_bits(rm[i], [&](int v) {
            if (i == 0 || !is_up_seeing(cls[v])) bottoms[i].push_back(v);
        });
        for_bits(rm[i + 1], [&](int v) {
            if (i == k || !is_down_seeing(cls[v])) tops[i].push_back(v);
        });
        by_label(bottoms[i]);
        by_label(tops[i]);
        if (bottoms[i].empty() || tops[i].empty())
            throw std::invalid_argument("quark_decompose: poset is not sum-indecomposable");
    }
    for (int i = 0; i <= k; ++i) {
        Quark q((int)bottoms[i].size(), (int)tops[i].size());
        for (int a = 0; a < q.m; ++a)
            for (int b = 0; b < q.n; ++b)
                if (t.ranked.poset.less(bottoms[i][a], tops[i][b])) q.adj[a] |= 1u << b;
        out.quarks.push_back(std::move(q));
    }
    for (int r = 1; r <= k; ++r) {
        bool has_glue = false;
        for_bits(rm[r], [&](int v) { has_glue = has_glue || is_all_seeing(cls[v]); });
        out.joins.push_back(has_glue ? Join::Glue : Join::Stick);
    }
    for (int r = 0; r <= k + 1; ++r) {
        if (r <= k)
            out.sweep_order.insert(out.sweep_order.end(), bottoms[r].begin(), bottoms[r].end());
        if (r >= 1)
            out.sweep_order.insert(out.sweep_order.end(), tops[r - 1].begin(), tops[r - 1].end());
    }
    return out;
}

// True when some rank-1 vertex is minimal: the poset then cannot sit at the
// bottom of an ordinal sum.
inline bool has_bottom_defect(const TrimmedPoset& t) {
    for (int v = 0; v < t.size(); ++v)
        if (t.ranked.rank[v] == 1 && t.ranked.poset.down[v] == 0) return true;
    return false;
}

inline bool has_top_defect(const TrimmedPoset& t) {
    int h = t.size() == 0 ? 0 : height(t.ranked);
    for (int v = 0; v < t.size(); ++v)
        if (t.ranked.rank[v] == h - 2 && t.ranked.poset.up[v] == 0) return true;
    return false;
}

// The word of a sum-indecomposable poset of height >= 2: joins record
// all-seeing presence per rank, letters are the stripped quark types.
inline Word word_of(const TrimmedPoset& t) {
    int h = t.size() == 0 ? 0 : height(t.ranked);
    if (h < 2) throw std::invalid_argument("word_of: height must be at least 2");
    auto cls = seeing_classes(t.ranked);
    auto rm = rank_masks(t.ranked);
    std::vector<Join> joins(h);
    for (int r = 0; r < h; ++r) {
        bool g = false;
        for_bits(rm[r], [&](int v) { g = g || is_all_seeing(cls[v]); });
        joins[r] = g ? Join::Glue : Join::Stick;
    }
    Word w;
    w.joins = std::move(joins);
    if (h == 2) {
        // strip the two optional all-seeing vertices, keep the middle part
        std::vector<int> bottom, top;
        for (int v = 0; v < t.size(); ++v) {
            if (is_all_seeing(cls[v])) continue;
            (t.ranked.rank[v] == 0 ? bottom : top).push_back(v);
        }
        if (bottom.empty() || top.empty())
            throw std::invalid_argument("word_of: height-2 poset has no middle part");
        Quark q((int)bottom.size(), (int)top.size());
        for (int a = 0; a < q.m; ++a)
            for (int b = 0; b < q.n; ++b)
                if (t.ranked.poset.less(bottom[a], top[b])) q.adj[a] |= 1u << b;
        w.types = {make_btype(has_top_isolated(q), has_bottom_isolated(q))};
        return w;
    }
    auto deco = quark_decompose(t);
    for (const auto& q : deco.quarks) w.types.push_back(quark_type(q));
    return w;
}

// Word legality in the mode matching the poset's boundary defects; agrees
// with the direct 3+1 pattern search.
inline bool avoids_via_word(const TrimmedPoset& t) {
    bool bot = has_bottom_defect(t), top = has_top_defect(t);
    LegalMode mode = bot ? (top ? LegalMode::WeakBoth : LegalMode::WeakBottom)
                         : (top ? LegalMode::WeakTop : LegalMode::Strong);
    return is_legal(word_of(t), mode);
}

}  // namespace poset31
