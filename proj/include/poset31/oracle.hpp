#pragma once

// Ground truth by exhaustion: every labeled poset on [n] visited exactly once
// by down-set/up-set element insertion, classified by the poset-core
// predicates; every bipartite quark graph on [m] + [n] enumerated directly.
// The decomposition sweep round-trips the whole structure layer over every
// weakly graded 3+1-avoiding poset.

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "poset31/compose.hpp"
#include "poset31/poset.hpp"
#include "poset31/quark_counts.hpp"
#include "poset31/trimmed.hpp"

namespace poset31 {

namespace detail {

template <class F>
void extend_posets(Poset& p, int target, long long& count, F& visit) {
    if (p.n == target) {
        ++count;
        visit(const_cast<const Poset&>(p));
        return;
    }
    int j = p.n;
    std::uint64_t full = p.n == 0 ? 0 : p.all_mask();
    // D runs over down-closed sets, U over up-closed subsets of the elements
    // above all of D; D < new element < U.
    for (std::uint64_t d = 0;; ++d) {
        bool down_closed = true;
        for_bits(d, [&](int a) { down_closed = down_closed && (p.down[a] & ~d) == 0; });
        if (down_closed) {
            std::uint64_t candidates = full & ~d;
            for_bits(d, [&](int a) { candidates &= p.up[a]; });
            // iterate all subsets of candidates, including the empty set
            std::uint64_t u = candidates;
            while (true) {
                bool up_closed = true;
                for_bits(u, [&](int a) { up_closed = up_closed && (p.up[a] & ~u) == 0; });
                if (up_closed) {
                    Poset q(j + 1);
                    for (int a = 0; a < j; ++a) {
                        q.up[a] = p.up[a];
                        q.down[a] = p.down[a];
                    }
                    for_bits(d, [&](int a) { q.set_less(a, j); });
                    for_bits(u, [&](int a) { q.set_less(j, a); });
                    extend_posets(q, target, count, visit);
                }
                if (u == 0) break;
                u = (u - 1) & candidates;
            }
        }
        if (d == full) break;
    }
}

}  // namespace detail

// Visits every labeled poset on [n] exactly once, in a fixed deterministic
// order; returns how many there were.
template <class F>
long long enumerate_posets(int n, F&& visit) {
    if (n < 0 || n > 7) throw std::invalid_argument("enumerate_posets: n out of range");
    Poset start(0);
    long long count = 0;
    detail::extend_posets(start, n, count, visit);
    return count;
}

struct OracleReport {
    int n = 0;
    long long total_posets = 0;
    long long weakly_graded = 0;
    long long strongly_graded = 0;
    long long semiorder_strong = 0;  // strongly graded, avoids 2+2 and 3+1
    std::vector<long long> weak_avoiding_by_height;    // index = height
    std::vector<long long> strong_avoiding_by_height;

    long long weak_avoiding_total() const {
        long long s = 0;
        for (auto v : weak_avoiding_by_height) s += v;
        return s;
    }
    long long strong_avoiding_total() const {
        long long s = 0;
        for (auto v : strong_avoiding_by_height) s += v;
        return s;
    }
};

inline OracleReport brute_counts(int n) {
    OracleReport r;
    r.n = n;
    r.weak_avoiding_by_height.assign(n + 1, 0);
    r.strong_avoiding_by_height.assign(n + 1, 0);
    r.total_posets = enumerate_posets(n, [&](const Poset& p) {
        auto rf = rank_function(p);
        if (!rf) return;
        ++r.weakly_graded;
        bool strong = is_strongly_graded(*rf);
        r.strongly_graded += strong;
        if (contains_3plus1(p)) return;
        int h = height(*rf);
        ++r.weak_avoiding_by_height[h];
        if (strong) {
            ++r.strong_avoiding_by_height[h];
            r.semiorder_strong += !contains_2plus2(p);
        }
    });
    return r;
}

// Brute-force count of the bipartite families behind quark_family_count.
inline Int enumerate_bipartite(int m, int n, QuarkFamilyFlags flags) {
    if (m < 0 || n < 0 || m * n > 20)
        throw std::invalid_argument("enumerate_bipartite: sides out of range");
    if (m == 0 || n == 0) return 0;
    auto matches = [](FlagReq f, bool present) {
        return f == FlagReq::Free || (f == FlagReq::Required) == present;
    };
    long long count = 0;
    for (std::uint32_t bits = 0; bits < (1u << (m * n)); ++bits) {
        Quark q(m, n);
        for (int i = 0; i < m; ++i)
            q.adj[i] = (bits >> (i * n)) & q.top_mask();
        bool b_as = count_bottom_all_seeing(q) > 0;
        bool t_as = count_top_all_seeing(q) > 0;
        bool b_iso = has_bottom_isolated(q);
        bool t_iso = has_top_isolated(q);
        if (matches(flags.bottom_all_seeing, b_as) && matches(flags.top_all_seeing, t_as) &&
            matches(flags.bottom_isolated, b_iso) && matches(flags.top_isolated, t_iso))
            ++count;
    }
    return count;
}

inline std::string serialize_poset(const Poset& p) {
    std::ostringstream os;
    os << "{\"n\": " << p.n << ", \"relations\": [";
    bool first = true;
    for (int a = 0; a < p.n; ++a)
        for_bits(p.up[a], [&](int b) {
            os << (first ? "" : ", ") << "[" << a + 1 << ", " << b + 1 << "]";
            first = false;
        });
    os << "]}";
    return os.str();
}

struct SweepReport {
    int n = 0;
    long long instances = 0;
    long long failures = 0;
    std::string first_failure;
};

// For every weakly graded 3+1-avoiding poset on [n]: trim it, take it apart
// (ordinal sum, then quarks per summand), put it back together, and demand a
// label-canonical copy; check that word legality agrees with the direct
// pattern search throughout.
inline SweepReport decomposition_sweep(int n) {
    if (n < 0 || n > 6) throw std::invalid_argument("decomposition_sweep: n out of range");
    SweepReport rep;
    rep.n = n;
    auto fail = [&](const Poset& p, const std::string& why) {
        ++rep.failures;
        if (rep.first_failure.empty())
            rep.first_failure = why + ": " + serialize_poset(p);
    };
    enumerate_posets(n, [&](const Poset& p) {
        auto rf = rank_function(p);
        if (!rf || contains_3plus1(p)) return;
        ++rep.instances;

        auto [before, after] = is_3plus1_avoiding_trimmed_equiv(*rf);
        if (!before || !after) {
            fail(p, "trim changed avoidance");
            return;
        }
        auto t = trim(*rf);
        if (!is_valid_trimmed(t)) {
            fail(p, "trim output invalid");
            return;
        }
        auto deco = decompose_ordinal(t);
        if (!trimmed_equal(recompose_ordinal(deco),
                           relabel_in_order(t, deco.canonical_order()))) {
            fail(p, "ordinal round-trip mismatch");
            return;
        }
        for (const auto& s : deco.summands) {
            if (!is_sum_indecomposable(s)) {
                fail(p, "summand decomposes further");
                return;
            }
            int h = height(s.ranked);
            if (h == 1) {
                if (s.size() != 1 || !s.unlabeled(0)) fail(p, "bad height-1 summand");
                continue;
            }
            if (h >= 3) {
                auto qd = quark_decompose(s);
                bool weak_ends = has_bottom_defect(s) || has_top_defect(s);
                auto rebuilt = compose_quarks(qd.quarks, qd.joins, weak_ends);
                if (!trimmed_equal(rebuilt, relabel_in_order(s, qd.sweep_order))) {
                    fail(p, "quark round-trip mismatch");
                    return;
                }
            }
            bool by_word = avoids_via_word(s);
            bool by_search = !contains_3plus1(s.ranked.poset);
            if (by_word != by_search || !by_word) {
                fail(p, "word legality disagrees with pattern search");
                return;
            }
        }
    });
    return rep;
}

}  // namespace poset31
