#pragma once

// Quarks: two-level bipartite pieces with nonempty sides, at most one side of
// which contains an all-seeing vertex. Sum-indecomposable posets of height
// at least 3 decompose uniquely into a stack of quarks.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "poset31/poset.hpp"

namespace poset31 {

struct Quark {
    int m = 0, n = 0;                // bottom / top side sizes
    std::vector<std::uint32_t> adj;  // adj[i] bit j: bottom i below top j

    Quark() = default;
    Quark(int bottom, int top) : m(bottom), n(top), adj(bottom, 0) {}
    Quark(int bottom, int top, std::vector<std::uint32_t> rows)
        : m(bottom), n(top), adj(std::move(rows)) {}

    std::uint32_t top_mask() const { return n == 32 ? ~0u : (1u << n) - 1; }
    bool edge(int i, int j) const { return (adj[i] >> j) & 1u; }

    bool operator==(const Quark&) const = default;
};

inline bool bottom_all_seeing(const Quark& q, int i) { return q.adj[i] == q.top_mask(); }
inline bool bottom_isolated_vertex(const Quark& q, int i) { return q.adj[i] == 0; }
inline bool top_all_seeing(const Quark& q, int j) {
    for (int i = 0; i < q.m; ++i)
        if (!q.edge(i, j)) return false;
    return true;
}
inline bool top_isolated_vertex(const Quark& q, int j) {
    for (int i = 0; i < q.m; ++i)
        if (q.edge(i, j)) return false;
    return true;
}

inline int count_bottom_all_seeing(const Quark& q) {
    int c = 0;
    for (int i = 0; i < q.m; ++i) c += bottom_all_seeing(q, i);
    return c;
}
inline int count_top_all_seeing(const Quark& q) {
    int c = 0;
    for (int j = 0; j < q.n; ++j) c += top_all_seeing(q, j);
    return c;
}
inline bool has_bottom_isolated(const Quark& q) {
    for (int i = 0; i < q.m; ++i)
        if (bottom_isolated_vertex(q, i)) return true;
    return false;
}
inline bool has_top_isolated(const Quark& q) {
    for (int j = 0; j < q.n; ++j)
        if (top_isolated_vertex(q, j)) return true;
    return false;
}

// Both sides nonempty and never an all-seeing vertex on both sides at once.
inline bool quark_valid(const Quark& q) {
    if (q.m < 1 || q.n < 1 || q.n > 32 || (int)q.adj.size() != q.m) return false;
    for (int i = 0; i < q.m; ++i)
        if (q.adj[i] & ~q.top_mask()) return false;
    return !(count_bottom_all_seeing(q) > 0 && count_top_all_seeing(q) > 0);
}

enum class QuarkRole { Bottom, Middle, Top };

// Bottom: no all-seeing and no isolated vertex on the top side (so isolated
// vertices sit at rank 0 only). Middle: no all-seeing vertex anywhere.
// Top: the dual of Bottom.
inline bool has_role(const Quark& q, QuarkRole role) {
    switch (role) {
        case QuarkRole::Bottom:
            return count_top_all_seeing(q) == 0 && !has_top_isolated(q);
        case QuarkRole::Middle:
            return count_bottom_all_seeing(q) == 0 && count_top_all_seeing(q) == 0;
        case QuarkRole::Top:
            return count_bottom_all_seeing(q) == 0 && !has_bottom_isolated(q);
    }
    return false;
}

// Middle-quark types, written <top><bottom> with o = side has an isolated
// vertex and x = it does not. This is also the row/column order of the
// transfer matrix.
enum class BType { OO, OX, XO, XX };

constexpr std::array<BType, 4> kAllBTypes{BType::OO, BType::OX, BType::XO, BType::XX};

inline int btype_index(BType b) { return static_cast<int>(b); }
inline bool type_top_isolated(BType b) { return b == BType::OO || b == BType::OX; }
inline bool type_bottom_isolated(BType b) { return b == BType::OO || b == BType::XO; }
inline BType make_btype(bool top_iso, bool bottom_iso) {
    return static_cast<BType>((top_iso ? 0 : 2) + (bottom_iso ? 0 : 1));
}
inline const char* btype_name(BType b) {
    switch (b) {
        case BType::OO: return "Boo";
        case BType::OX: return "Box";
        case BType::XO: return "Bxo";
        case BType::XX: return "Bxx";
    }
    return "?";
}

// Removes the all-seeing vertices (only one side can have any); absent when
// a side empties out.
inline std::optional<Quark> strip_all_seeing(const Quark& q) {
    std::vector<int> keep_bottom, keep_top;
    for (int i = 0; i < q.m; ++i)
        if (!bottom_all_seeing(q, i)) keep_bottom.push_back(i);
    for (int j = 0; j < q.n; ++j)
        if (!top_all_seeing(q, j)) keep_top.push_back(j);
    if (keep_bottom.empty() || keep_top.empty()) return std::nullopt;
    Quark r((int)keep_bottom.size(), (int)keep_top.size());
    for (int i = 0; i < r.m; ++i)
        for (int j = 0; j < r.n; ++j)
            if (q.edge(keep_bottom[i], keep_top[j])) r.adj[i] |= 1u << j;
    return r;
}

// Stable form with all-seeing vertices moved behind the others on their
// side; decompositions list quark sides this way.
inline Quark canonical_quark(const Quark& q) {
    std::vector<int> rows, cols;
    for (int pass = 0; pass < 2; ++pass) {
        for (int i = 0; i < q.m; ++i)
            if (bottom_all_seeing(q, i) == (pass == 1)) rows.push_back(i);
        for (int j = 0; j < q.n; ++j)
            if (top_all_seeing(q, j) == (pass == 1)) cols.push_back(j);
    }
    Quark r(q.m, q.n);
    for (int i = 0; i < q.m; ++i)
        for (int j = 0; j < q.n; ++j)
            if (q.edge(rows[i], cols[j])) r.adj[i] |= 1u << j;
    return r;
}

// Type of a quark: strip the all-seeing vertices, then read each side's
// isolated-vertex status. For a valid quark the stripped remainder is a
// middle quark whenever it is nonempty.
inline BType quark_type(const Quark& q) {
    auto stripped = strip_all_seeing(q);
    if (!stripped)
        throw std::invalid_argument("quark_type: all-seeing removal empties a side");
    return make_btype(has_top_isolated(*stripped), has_bottom_isolated(*stripped));
}

}  // namespace poset31
