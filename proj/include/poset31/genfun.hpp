#pragma once

// Every counting formula: the quark generating functions, the transfer-matrix
// pipelines for strongly and weakly graded 3+1-avoiding posets (optionally
// refined by height), their closed forms, and the interval-semiorder
// cross-check. Pipelines and closed forms agree coefficientwise; tests and
// the verify command hold them against the exhaustive oracle.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "poset31/quark.hpp"
#include "poset31/series.hpp"
#include "poset31/word.hpp"

namespace poset31 {

// F_<top><bottom>(x): EGF of middle quarks by isolated-vertex pattern,
// F_oo = (1-e^{-x})^2 Psi
// F_ox = F_xo = (1-e^{-x}) ((2e^{-x}-1) Psi - 1)
// F_xx = (2e^{-x}-1) ((2e^{-x}-1) Psi - 1).
inline TruncatedSeries F_series(BType b, Bounds bounds) {
    auto one = TruncatedSeries::one(bounds);
    auto em = exp_x(bounds, -1);
    auto psi = psi_series(bounds);
    auto one_minus_em = one - em;
    auto two_em_minus_one = em + em - one;
    auto core = two_em_minus_one * psi - one;
    switch (b) {
        case BType::OO: return one_minus_em * one_minus_em * psi;
        case BType::OX:
        case BType::XO: return one_minus_em * core;
        case BType::XX: return two_em_minus_one * core;
    }
    throw std::invalid_argument("F_series: bad type");
}

inline TruncatedSeries z_series(Bounds b) { return TruncatedSeries::monomial(b, 1, 0, 1); }
inline TruncatedSeries t_series(Bounds b) { return TruncatedSeries::monomial(b, 1, 0, 0, 1); }

// An S-transition from row type u to column type v is forbidden exactly when
// u has an isolated bottom vertex and v an isolated top vertex.
inline bool stick_transition_allowed(BType u, BType v) {
    return !(type_bottom_isolated(u) && type_top_isolated(v));
}

// The transfer matrix M[u][v] = (z + [S allowed]) F_v, times t when tracking
// height.
inline SeriesMatrix transfer_matrix(Bounds b, bool with_t) {
    SeriesMatrix m(b);
    auto z = z_series(b), one = TruncatedSeries::one(b);
    for (BType v : kAllBTypes) {
        auto f = F_series(v, b);
        for (BType u : kAllBTypes) {
            auto w = stick_transition_allowed(u, v) ? z + one : z;
            auto entry = w * f;
            if (with_t) entry = entry * t_series(b);
            m.at(btype_index(u), btype_index(v)) = std::move(entry);
        }
    }
    return m;
}

// Left boundary: the first quark joins the bottom rank with S only when its
// top side has no isolated vertex. Right boundary is the dual.
inline SeriesVec strong_row(Bounds b) {
    SeriesVec r;
    auto z = z_series(b), one = TruncatedSeries::one(b);
    for (BType v : kAllBTypes) {
        auto w = type_top_isolated(v) ? z : z + one;
        r[btype_index(v)] = w * F_series(v, b);
    }
    return r;
}
inline SeriesVec strong_col(Bounds b) {
    SeriesVec c;
    auto z = z_series(b), one = TruncatedSeries::one(b);
    for (BType u : kAllBTypes)
        c[btype_index(u)] = type_bottom_isolated(u) ? z : z + one;
    return c;
}

// Boundary vectors for summands that are weakly graded at one end: the end
// join is forced to S against the otherwise forbidden isolated side.
inline SeriesVec weak_bottom_row(Bounds b) {
    SeriesVec r;
    for (BType v : kAllBTypes)
        r[btype_index(v)] = type_top_isolated(v) ? F_series(v, b) : TruncatedSeries::zero(b);
    return r;
}
inline SeriesVec weak_top_col(Bounds b) {
    SeriesVec c;
    for (BType u : kAllBTypes)
        c[btype_index(u)] = type_bottom_isolated(u) ? TruncatedSeries::one(b)
                                                    : TruncatedSeries::zero(b);
    return c;
}

// I(x, z): nonempty sum-indecomposable 3+1-avoiding posets, z marking
// all-seeing vertices. The lone z covers the single-vertex poset; the matrix
// part sums the weights of all legal words.
inline TruncatedSeries strong_indecomposable_gf(Bounds b) {
    auto m = transfer_matrix(b, false);
    auto inv = mat_neumann_inverse(m, false);
    return z_series(b) + row_mat_col(strong_row(b), inv, strong_col(b));
}

namespace detail {

inline TruncatedSeries psi_x(Bounds b) { return psi_series(b); }

// Strongly graded 3+1-avoiding posets, closed form:
// 1 + (e^{2x}(2e^x-3) + e^x(e^x-2)^2 Psi) / (e^x(2e^x+1) + (e^{2x}-2e^x-1) Psi).
inline TruncatedSeries strong_gf_closed(Bounds b) {
    auto one = TruncatedSeries::one(b);
    auto e1 = exp_x(b, 1), e2 = exp_x(b, 2);
    auto psi = psi_x(b);
    auto num = e2 * (e1 + e1 - one.scaled(3)) + e1 * (e1 - one.scaled(2)) * (e1 - one.scaled(2)) * psi;
    auto den = e1 * (e1 + e1 + one) + (e2 - e1 - e1 - one) * psi;
    return one + num * den.invert();
}

// Height-refined closed form for strongly graded posets.
inline TruncatedSeries strong_by_height_closed(Bounds b) {
    auto one = TruncatedSeries::one(b);
    auto t = t_series(b);
    auto e1 = exp_x(b, 1), e2 = exp_x(b, 2);
    auto psi = psi_x(b);
    auto em1sq = (e1 - one) * (e1 - one);
    auto poly = one - e1.scaled(3) + e2;  // 1 - 3e^x + e^{2x}
    auto num = e1 * (e1 + t * e2 + t * t * em1sq) +
               t * (poly + t * em1sq * (e1 - one.scaled(2))) * psi;
    auto den = e1 * (e1 + t * e1 + t * t) + (t * poly + t * t * (e1 - one.scaled(2))) * psi;
    return num * den.invert();
}

// Weakly graded posets by height, closed form: the short-height part plus a
// t^3 correction fraction.
inline TruncatedSeries weak_by_height_closed(Bounds b) {
    auto one = TruncatedSeries::one(b);
    auto t = t_series(b);
    auto e1 = exp_x(b, 1), e2 = exp_x(b, 2), e3 = exp_x(b, 3), em1 = exp_x(b, -1);
    auto psi = psi_x(b);
    auto poly = one - e1.scaled(3) + e2;
    auto num = e3 + t * e3 - e1 * (e1 + e1 + t * (one + e1 + e1 - e2)) * psi -
               (poly + t * (e1 - one.scaled(2))) * psi * psi;
    auto den = e1 * (e1 + t * e1 + t * t) + (t * poly + t * t * (e1 - one.scaled(2))) * psi;
    return one + t * (e1 - one) + t * t * (em1 * psi - e1) + t * t * t * num * den.invert();
}

// Weakly graded posets with height summed out, closed form.
inline TruncatedSeries weak_total_closed(Bounds b) {
    auto one = TruncatedSeries::one(b);
    auto e1 = exp_x(b, 1), e2 = exp_x(b, 2), e3 = exp_x(b, 3), em1 = exp_x(b, -1);
    auto psi = psi_x(b);
    auto num = e3 + e3 + e2 * (e1 - one.scaled(2)) * psi;
    auto den = e1 * (e1 + e1 + one) + (e2 - e1 - e1 - one) * psi;
    return (em1 - one) * psi + num * den.invert();
}

}  // namespace detail

// The pipelines move mass from z (and t) into x when substituting; retained
// coefficients stay exact only when those bounds dominate the x bound.
inline void require_pipeline_bounds(Bounds b, bool with_t) {
    if (b.nz < b.nx || (with_t && b.nt < b.nx))
        throw std::invalid_argument("pipeline bounds: need nz >= nx (and nt >= nx with t)");
}

// EGF for strongly graded 3+1-avoiding posets. The pipeline stacks
// sum-indecomposables and distributes labels over the all-seeing marker; the
// closed form is its simplification. Both agree to all retained orders.
inline TruncatedSeries strong_gf(bool via_pipeline, Bounds b = Bounds{}) {
    if (!via_pipeline) return detail::strong_gf_closed(b);
    require_pipeline_bounds(b, false);
    auto i = strong_indecomposable_gf(b);
    auto g_t = (TruncatedSeries::one(b) - i).invert();
    auto em1 = exp_x(b, 1) - TruncatedSeries::one(b);
    return g_t.subst_z(em1);
}

// H_I(x, z, t): strongly graded sum-indecomposables of height >= 2 with the
// height marked.
inline TruncatedSeries strong_indecomposable_by_height_gf(Bounds b) {
    auto m = transfer_matrix(b, true);
    auto inv = mat_neumann_inverse(m, true);
    auto t = t_series(b);
    return t * t * row_mat_col(strong_row(b), inv, strong_col(b));
}

// H(x, t): strongly graded 3+1-avoiding posets by vertex count and height.
inline TruncatedSeries strong_by_height_gf(bool via_pipeline, Bounds b = Bounds{}) {
    if (!via_pipeline) return detail::strong_by_height_closed(b);
    require_pipeline_bounds(b, true);
    auto hi = strong_indecomposable_by_height_gf(b);
    auto tz = t_series(b) * z_series(b);
    auto h_t = (TruncatedSeries::one(b) - tz - hi).invert();
    auto em1 = exp_x(b, 1) - TruncatedSeries::one(b);
    return h_t.subst_z(em1);
}

// Weakly graded posets of height at most 2:
// 1 + t(e^x - 1) + t^2 (e^{-x} Psi - e^x).
inline TruncatedSeries weak_short_gf(Bounds b = Bounds{}) {
    auto one = TruncatedSeries::one(b);
    auto t = t_series(b);
    return one + t * (exp_x(b, 1) - one) +
           t * t * (exp_x(b, -1) * psi_series(b) - exp_x(b, 1));
}

// Sum-indecomposables that fit in no nontrivial ordinal sum: minimal
// vertices at rank 1 and maximal vertices below the top rank.
inline TruncatedSeries weak_unlayerable_gf(Bounds b = Bounds{}) {
    auto m = transfer_matrix(b, true);
    auto inv = mat_neumann_inverse(m, true);
    auto t = t_series(b);
    return t * t * row_mat_col(weak_bottom_row(b), inv, weak_top_col(b));
}

// top: all minimal vertices at rank 0 but some maximal vertex below the top.
// bot: the mirror image.
inline std::pair<TruncatedSeries, TruncatedSeries> weak_top_bot_gf(Bounds b = Bounds{}) {
    auto m = transfer_matrix(b, true);
    auto inv = mat_neumann_inverse(m, true);
    auto t = t_series(b);
    auto t2 = t * t;
    auto top = t2 * row_mat_col(strong_row(b), inv, weak_top_col(b));
    auto bot = t2 * row_mat_col(weak_bottom_row(b), inv, strong_col(b));
    return {top, bot};
}

// W(x, t): weakly graded 3+1-avoiding posets by vertex count and height.
// Pipeline: unlayerable posets plus optional defective top and bottom layers
// around strong middles; the t <= 2 layers the quark machinery produces are
// spurious and get replaced by the exact short-height series.
inline TruncatedSeries weak_gf(bool via_pipeline, Bounds b = Bounds{}) {
    if (!via_pipeline) return detail::weak_by_height_closed(b);
    require_pipeline_bounds(b, true);
    auto one = TruncatedSeries::one(b);
    auto hi = strong_indecomposable_by_height_gf(b);
    auto [top, bot] = weak_top_bot_gf(b);
    // the middle factor runs over all strongly graded sum-indecomposable
    // layers, including the height-1 single all-seeing vertex (tz)
    auto middles = (one - t_series(b) * z_series(b) - hi).invert();
    auto tall = weak_unlayerable_gf(b) + (one + top) * middles * (one + bot);
    auto em1 = exp_x(b, 1) - one;
    return tall.subst_z(em1).drop_t_layers_below(3) + weak_short_gf(b);
}

// Closed form of the weak count with height summed out; equals
// weak_gf(...).subst_t_one().
inline TruncatedSeries weak_total_gf_closed(Bounds b = Bounds{}) {
    return detail::weak_total_closed(b);
}

// Strongly graded posets avoiding both 2+2 and 3+1:
// 1 + e^x (e^x - 1)(e^x - 2) / (e^{2x} - e^x - 1).
inline TruncatedSeries semiorder_gf(Bounds b = Bounds{}) {
    auto one = TruncatedSeries::one(b);
    auto e1 = exp_x(b, 1), e2 = exp_x(b, 2);
    auto num = e1 * (e1 - one) * (e1 - one.scaled(2));
    auto den = e2 - e1 - one;
    return one + num * den.invert();
}

// Count tables ----------------------------------------------------------

struct CountRow {
    int n;
    int k;  // height, or -1 when the table is not refined by height
    Int count;
};

struct CountTable {
    std::string kind;  // strong | weak | semiorder, with _by_height suffix
    bool by_height = false;
    std::vector<CountRow> rows;
};

enum class CountFamily { Strong, Weak, Semiorder };

inline const char* family_name(CountFamily f) {
    switch (f) {
        case CountFamily::Strong: return "strong";
        case CountFamily::Weak: return "weak";
        case CountFamily::Semiorder: return "semiorder";
    }
    return "?";
}

inline Bounds bounds_for_order(int max_n) {
    if (max_n < 0 || max_n > 30)
        throw std::invalid_argument("requested order exceeds configured bounds");
    int n = std::max(max_n, 1);
    return Bounds{n, n, n};
}

inline CountTable count_table(CountFamily family, int max_n, bool by_height) {
    if (by_height && family == CountFamily::Semiorder)
        throw std::invalid_argument("semiorder counts are not refined by height");
    Bounds b = bounds_for_order(max_n);
    CountTable out;
    out.kind = std::string(family_name(family)) + (by_height ? "_by_height" : "");
    out.by_height = by_height;
    if (!by_height) {
        TruncatedSeries s(b);
        switch (family) {
            case CountFamily::Strong: s = strong_gf(true, b); break;
            case CountFamily::Weak: s = weak_gf(true, b).subst_t_one(); break;
            case CountFamily::Semiorder: s = semiorder_gf(b); break;
        }
        for (int n = 0; n <= max_n; ++n) out.rows.push_back({n, -1, egf_count(s, n)});
        return out;
    }
    auto s = family == CountFamily::Strong ? strong_by_height_gf(true, b) : weak_gf(true, b);
    for (int n = 0; n <= max_n; ++n)
        for (int k = 0; k <= n; ++k) {
            Rat v = s.coeff(n, 0, k) * Rat(factorial(n));
            if (denominator(v) != 1) throw std::runtime_error("non-integer height count");
            if (numerator(v) != 0 || (n == 0 && k == 0))
                out.rows.push_back({n, k, numerator(v)});
        }
    return out;
}

}  // namespace poset31
