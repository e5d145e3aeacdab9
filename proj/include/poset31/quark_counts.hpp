#pragma once

// Closed-form counts of bipartite graphs on [m] + [n] filtered by
// all-seeing / isolated vertex requirements per side. Required flags reduce
// to Free minus Forbidden; the edge-complement bijection swaps the all-seeing
// and isolated roles on both sides at once.

#include <stdexcept>

#include "poset31/rational.hpp"

namespace poset31 {

enum class FlagReq { Free, Required, Forbidden };

struct QuarkFamilyFlags {
    FlagReq bottom_all_seeing = FlagReq::Free;
    FlagReq top_all_seeing = FlagReq::Free;
    FlagReq bottom_isolated = FlagReq::Free;
    FlagReq top_isolated = FlagReq::Free;
    bool operator==(const QuarkFamilyFlags&) const = default;
};

namespace detail {

// Graphs with no all-seeing vertex on either side, by inclusion-exclusion
// over the all-seeing vertices of one side.
inline Int count_b(int m, int n) {
    Int acc = 0;
    for (int i = 0; i <= m; ++i) {
        Int term = binomial(m, i) * ipow(pow2(m - i) - 1, n);
        acc += (i % 2 == 0) ? term : -term;
    }
    return acc;
}

// No all-seeing anywhere, at least one isolated vertex on the bottom side.
inline Int count_b_bottom_iso(int m, int n) {
    return ipow(pow2(n) - 1, m) - ipow(pow2(n) - 2, m);
}

// At least one isolated vertex on both sides (which already forbids
// all-seeing vertices everywhere).
inline Int count_b_both_iso(int m, int n) {
    return pow2(m * n) - ipow(pow2(m) - 1, n) - ipow(pow2(n) - 1, m) + count_b(m, n);
}

struct Base {  // all flags Free or Forbidden
    bool bas, tas, bis, tis;  // true = Forbidden
};

inline Int count_base(int m, int n, Base f);

// One-sided restrictions: each bottom vertex independently picks a
// neighborhood, excluding the full set and/or the empty set.
inline Int count_one_sided(int m, int n, bool as_forbidden, bool iso_forbidden) {
    Int choices = pow2(n) - (as_forbidden ? 1 : 0) - (iso_forbidden ? 1 : 0);
    return ipow(choices, m);
}

inline Int count_base(int m, int n, Base f) {
    bool bottom_free = !f.bas && !f.bis;
    bool top_free = !f.tas && !f.tis;
    if (bottom_free && top_free) return pow2(m * n);
    if (top_free) return count_one_sided(m, n, f.bas, f.bis);
    if (bottom_free) return count_one_sided(n, m, f.tas, f.tis);
    if (f.bas && f.tas) {  // the B family
        Int acc = count_b(m, n);
        if (f.bis) acc -= count_b_bottom_iso(m, n);
        if (f.tis) acc -= count_b_bottom_iso(n, m);
        if (f.bis && f.tis) acc += count_b_both_iso(m, n);
        return acc;
    }
    if (f.bis && f.tis && !f.bas && !f.tas)  // complement of the B family
        return count_b(m, n);
    // complementing swaps all-seeing and isolated restrictions per side
    Base comp{f.bis, f.tis, f.bas, f.tas};
    if ((comp.bas && comp.tas) || (!comp.bas && !comp.bis) || (!comp.tas && !comp.tis))
        return count_base(m, n, comp);
    throw std::invalid_argument("quark_family_count: unsupported flag combination");
}

}  // namespace detail

// Counts of the bipartite-graph families; m = 0 or n = 0 count as 0 so sums
// over m, n >= 1 can be written uniformly.
inline Int quark_family_count(int m, int n, QuarkFamilyFlags flags) {
    if (m < 0 || n < 0) throw std::invalid_argument("quark_family_count: negative side");
    if (m == 0 || n == 0) return 0;

    // peel Required flags: Required = Free - Forbidden
    auto peel = [&](FlagReq QuarkFamilyFlags::* field) -> Int {
        QuarkFamilyFlags free_side = flags, forbid_side = flags;
        free_side.*field = FlagReq::Free;
        forbid_side.*field = FlagReq::Forbidden;
        return quark_family_count(m, n, free_side) - quark_family_count(m, n, forbid_side);
    };
    if (flags.bottom_all_seeing == FlagReq::Required) return peel(&QuarkFamilyFlags::bottom_all_seeing);
    if (flags.top_all_seeing == FlagReq::Required) return peel(&QuarkFamilyFlags::top_all_seeing);
    if (flags.bottom_isolated == FlagReq::Required) return peel(&QuarkFamilyFlags::bottom_isolated);
    if (flags.top_isolated == FlagReq::Required) return peel(&QuarkFamilyFlags::top_isolated);

    detail::Base base{flags.bottom_all_seeing == FlagReq::Forbidden,
                      flags.top_all_seeing == FlagReq::Forbidden,
                      flags.bottom_isolated == FlagReq::Forbidden,
                      flags.top_isolated == FlagReq::Forbidden};
    return detail::count_base(m, n, base);
}

}  // namespace poset31
