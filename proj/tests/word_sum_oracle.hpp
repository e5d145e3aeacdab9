#pragma once

// Test-only oracle: sums word weights by explicit enumeration instead of the
// transfer matrix. A word alpha_0 B_0 ... B_k alpha_{k+1} weighs
// z^{#G} F(B_0) ... F(B_k), times t^{k+2} when heights are tracked.

#include <vector>

#include "poset31/genfun.hpp"
#include "poset31/word.hpp"

namespace poset31::testing {

enum class EndReq { Legal, Defect };  // Defect: the end condition is forcibly violated

inline TruncatedSeries word_weight_sum(Bounds b, int max_k, EndReq bottom_end,
                                       EndReq top_end, bool with_t) {
    std::array<TruncatedSeries, 4> f{F_series(BType::OO, b), F_series(BType::OX, b),
                                     F_series(BType::XO, b), F_series(BType::XX, b)};
    auto z = z_series(b);
    auto total = TruncatedSeries::zero(b);
    for (int k = 0; k <= max_k; ++k) {
        std::vector<BType> types(k + 1, BType::OO);
        std::vector<Join> joins(k + 2, Join::Stick);
        auto weight_ok = [&]() {
            Word w{joins, types};
            bool cond1 = joins[0] == Join::Stick && type_top_isolated(types[0]);
            bool cond2 = joins[k + 1] == Join::Stick && type_bottom_isolated(types[k]);
            if (!is_legal(w, LegalMode::WeakBoth)) return false;  // condition 3
            if ((bottom_end == EndReq::Legal) == cond1) return false;
            if ((top_end == EndReq::Legal) == cond2) return false;
            return true;
        };
        auto add_word = [&]() {
            if (!weight_ok()) return;
            auto wgt = TruncatedSeries::one(b);
            for (auto j : joins)
                if (j == Join::Glue) wgt = wgt * z;
            for (auto ty : types) wgt = wgt * f[btype_index(ty)];
            if (with_t)
                for (int i = 0; i < k + 2; ++i) wgt = wgt * t_series(b);
            total += wgt;
        };
        // iterate all type tuples and join tuples
        int type_combos = 1;
        for (int i = 0; i <= k; ++i) type_combos *= 4;
        int join_combos = 1 << (k + 2);
        for (int tc = 0; tc < type_combos; ++tc) {
            int v = tc;
            for (int i = 0; i <= k; ++i) {
                types[i] = static_cast<BType>(v & 3);
                v >>= 2;
            }
            for (int jc = 0; jc < join_combos; ++jc) {
                for (int i = 0; i < k + 2; ++i)
                    joins[i] = (jc >> i) & 1 ? Join::Glue : Join::Stick;
                add_word();
            }
        }
    }
    return total;
}

}  // namespace poset31::testing
