#pragma once

// Finite labeled posets as strict-order bit matrices, plus the rank structure
// used everywhere else: rank functions, seeing classes, vigilance, and the
// pattern checks for 3+1 and 2+2.

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace poset31 {

template <class F>
inline void for_bits(std::uint64_t mask, F&& f) {
    while (mask) {
        f(std::countr_zero(mask));
        mask &= mask - 1;
    }
}

// Elements are 0..n-1; up[a] bit b means a < b, down is the mirror.
struct Poset {
    static constexpr int kMaxElements = 64;

    int n = 0;
    std::vector<std::uint64_t> up, down;

    Poset() = default;
    explicit Poset(int size) : n(size), up(size, 0), down(size, 0) {
        if (size < 0 || size > kMaxElements)
            throw std::invalid_argument("poset size out of range");
    }

    bool less(int a, int b) const { return (up[a] >> b) & 1u; }
    bool comparable(int a, int b) const { return less(a, b) || less(b, a); }
    bool incomparable(int a, int b) const { return a != b && !comparable(a, b); }
    void set_less(int a, int b) {
        up[a] |= std::uint64_t(1) << b;
        down[b] |= std::uint64_t(1) << a;
    }
    std::uint64_t all_mask() const {
        return n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    }
    bool operator==(const Poset& o) const { return n == o.n && up == o.up; }
};

inline void transitive_close(Poset& p) {
    for (int k = 0; k < p.n; ++k)
        for (int a = 0; a < p.n; ++a)
            if (p.less(a, k)) p.up[a] |= p.up[k];
    for (int b = 0; b < p.n; ++b) p.down[b] = 0;
    for (int a = 0; a < p.n; ++a)
        for_bits(p.up[a], [&](int b) { p.down[b] |= std::uint64_t(1) << a; });
}

// Builds the transitive closure of the given strict relations. The result may
// fail validate() (e.g. a cycle shows up as an antisymmetry violation).
inline Poset poset_from_relations(int n, const std::vector<std::pair<int, int>>& rels) {
    Poset p(n);
    for (auto [a, b] : rels) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("relation element out of range");
        p.set_less(a, b);
    }
    transitive_close(p);
    return p;
}

inline bool validate(const Poset& p) {
    if ((int)p.up.size() != p.n || (int)p.down.size() != p.n) return false;
    std::uint64_t mask = p.all_mask();
    for (int a = 0; a < p.n; ++a) {
        if ((p.up[a] | p.down[a]) & ~mask) return false;
        if (p.less(a, a)) return false;
        if (p.up[a] & p.down[a]) return false;  // a<b and b<a
        std::uint64_t reach = 0;
        for_bits(p.up[a], [&](int b) { reach |= p.up[b]; });
        if (reach & ~p.up[a]) return false;  // missing transitive edge
    }
    for (int a = 0; a < p.n; ++a) {
        std::uint64_t d = 0;
        for (int b = 0; b < p.n; ++b)
            if (p.less(b, a)) d |= std::uint64_t(1) << b;
        if (d != p.down[a]) return false;
    }
    return true;
}

// covers[a] bit b: a < b with nothing strictly between.
inline std::vector<std::uint64_t> covers(const Poset& p) {
    std::vector<std::uint64_t> cov(p.n, 0);
    for (int a = 0; a < p.n; ++a)
        for_bits(p.up[a], [&](int b) {
            if ((p.up[a] & p.down[b]) == 0) cov[a] |= std::uint64_t(1) << b;
        });
    return cov;
}

inline std::vector<std::uint64_t> incomparability_masks(const Poset& p) {
    std::vector<std::uint64_t> inc(p.n, 0);
    for (int v = 0; v < p.n; ++v)
        inc[v] = p.all_mask() & ~(p.up[v] | p.down[v] | (std::uint64_t(1) << v));
    return inc;
}

inline bool contains_3plus1(const Poset& p) {
    auto inc = incomparability_masks(p);
    for (int x = 0; x < p.n; ++x) {
        bool found = false;
        for_bits(p.up[x], [&](int y) {
            for_bits(p.up[y], [&](int z) {
                if (inc[x] & inc[y] & inc[z]) found = true;
            });
        });
        if (found) return true;
    }
    return false;
}

inline bool contains_2plus2(const Poset& p) {
    auto inc = incomparability_masks(p);
    for (int a = 0; a < p.n; ++a) {
        bool found = false;
        for_bits(p.up[a], [&](int b) {
            std::uint64_t other = inc[a] & inc[b];
            for_bits(other, [&](int c) {
                if (p.up[c] & other) found = true;
            });
        });
        if (found) return true;
    }
    return false;
}

struct RankedPoset {
    Poset poset;
    std::vector<int> rank;
};

// Unique rank function (cover steps +1, component minimum 0) via constraint
// propagation over cover edges; absent when constraints conflict.
inline std::optional<RankedPoset> rank_function(const Poset& p) {
    auto cov = covers(p);
    std::vector<std::uint64_t> covin(p.n, 0);
    for (int a = 0; a < p.n; ++a)
        for_bits(cov[a], [&](int b) { covin[b] |= std::uint64_t(1) << a; });

    std::vector<int> rank(p.n, 0);
    std::vector<bool> seen(p.n, false);
    std::vector<int> stack, component;
    bool ok = true;
    for (int root = 0; root < p.n && ok; ++root) {
        if (seen[root]) continue;
        component.clear();
        stack.push_back(root);
        seen[root] = true;
        rank[root] = 0;
        while (!stack.empty() && ok) {
            int v = stack.back();
            stack.pop_back();
            component.push_back(v);
            auto walk = [&](std::uint64_t mask, int step) {
                for_bits(mask, [&](int w) {
                    if (!seen[w]) {
                        seen[w] = true;
                        rank[w] = rank[v] + step;
                        stack.push_back(w);
                    } else if (rank[w] != rank[v] + step) {
                        ok = false;
                    }
                });
            };
            walk(cov[v], +1);
            walk(covin[v], -1);
        }
        if (!ok) break;
        int lo = rank[component.front()];
        for (int v : component) lo = std::min(lo, rank[v]);
        for (int v : component) rank[v] -= lo;
    }
    if (!ok) return std::nullopt;
    return RankedPoset{p, std::move(rank)};
}

inline bool is_weakly_graded(const Poset& p) { return rank_function(p).has_value(); }

inline bool is_strongly_graded(const RankedPoset& r) {
    int min_rank = -1, max_rank = -1;
    for (int v = 0; v < r.poset.n; ++v) {
        if (r.poset.down[v] == 0) {
            if (min_rank == -1) min_rank = r.rank[v];
            else if (min_rank != r.rank[v]) return false;
        }
        if (r.poset.up[v] == 0) {
            if (max_rank == -1) max_rank = r.rank[v];
            else if (max_rank != r.rank[v]) return false;
        }
    }
    return true;
}

inline int height(const RankedPoset& r) {
    if (r.poset.n == 0) return 0;
    int hi = 0;
    for (int v = 0; v < r.poset.n; ++v) hi = std::max(hi, r.rank[v]);
    return hi + 1;
}

// rank_masks[i]: bitmask of the rank set at height i.
inline std::vector<std::uint64_t> rank_masks(const RankedPoset& r) {
    std::vector<std::uint64_t> m(height(r), 0);
    for (int v = 0; v < r.poset.n; ++v) m[r.rank[v]] |= std::uint64_t(1) << v;
    return m;
}

enum class SeeingClass { UpSeeing, DownSeeing, AllSeeing, NoneSeeing };

inline SeeingClass seeing_from_flags(bool up, bool down) {
    if (up && down) return SeeingClass::AllSeeing;
    if (up) return SeeingClass::UpSeeing;
    if (down) return SeeingClass::DownSeeing;
    return SeeingClass::NoneSeeing;
}

inline std::vector<SeeingClass> seeing_classes(const RankedPoset& r) {
    auto cov = covers(r.poset);
    std::vector<std::uint64_t> covin(r.poset.n, 0);
    for (int a = 0; a < r.poset.n; ++a)
        for_bits(cov[a], [&](int b) { covin[b] |= std::uint64_t(1) << a; });
    auto rm = rank_masks(r);
    int h = (int)rm.size();
    std::vector<SeeingClass> out(r.poset.n);
    for (int v = 0; v < r.poset.n; ++v) {
        int rk = r.rank[v];
        std::uint64_t above = rk + 1 < h ? rm[rk + 1] : 0;  // empty at top rank
        std::uint64_t below = rk > 0 ? rm[rk - 1] : 0;
        bool up = (above & ~cov[v]) == 0;
        bool down = (below & ~covin[v]) == 0;
        out[v] = seeing_from_flags(up, down);
    }
    return out;
}

inline SeeingClass seeing_class(const RankedPoset& r, int v) {
    if (v < 0 || v >= r.poset.n) throw std::invalid_argument("vertex out of range");
    return seeing_classes(r)[v];
}

inline bool is_all_seeing(SeeingClass c) { return c == SeeingClass::AllSeeing; }
inline bool is_up_seeing(SeeingClass c) {
    return c == SeeingClass::UpSeeing || c == SeeingClass::AllSeeing;
}
inline bool is_down_seeing(SeeingClass c) {
    return c == SeeingClass::DownSeeing || c == SeeingClass::AllSeeing;
}

inline bool is_vigilant(const RankedPoset& r) {
    for (auto c : seeing_classes(r))
        if (c == SeeingClass::NoneSeeing) return false;
    return true;
}

// True iff every pair at rank distance >= min_diff is comparable.
inline bool distant_pairs_comparable(const RankedPoset& r, int min_diff) {
    for (int a = 0; a < r.poset.n; ++a)
        for (int b = 0; b < r.poset.n; ++b)
            if (r.rank[b] - r.rank[a] >= min_diff && !r.poset.comparable(a, b))
                return false;
    return true;
}

inline bool rank_distance_two_comparable(const RankedPoset& r) {
    for (int a = 0; a < r.poset.n; ++a)
        for (int b = 0; b < r.poset.n; ++b)
            if (r.rank[b] - r.rank[a] == 2 && !r.poset.comparable(a, b))
                return false;
    return true;
}

// Local criterion: vigilant and every pair at rank distance exactly 2
// comparable. Equivalent to 3+1-avoidance on weakly graded posets.
inline bool local_avoidance_check(const RankedPoset& r) {
    return is_vigilant(r) && rank_distance_two_comparable(r);
}

}  // namespace poset31
