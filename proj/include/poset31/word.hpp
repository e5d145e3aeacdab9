#pragma once

// Words encode a quark stack: joins alternate with middle-quark types,
// alpha_0 B_0 alpha_1 B_1 ... B_k alpha_{k+1}. Legality captures exactly
// which stacks give 3+1-avoiding posets, with end conditions expressing
// strong gradedness of the boundary.

#include <stdexcept>
#include <string>
#include <vector>

#include "poset31/quark.hpp"

namespace poset31 {

enum class Join { Stick, Glue };

struct Word {
    std::vector<Join> joins;   // alpha_0 .. alpha_{k+1}
    std::vector<BType> types;  // B_0 .. B_k

    bool well_formed() const {
        return !types.empty() && joins.size() == types.size() + 1;
    }
    int k() const { return (int)types.size() - 1; }
    bool operator==(const Word&) const = default;
};

enum class LegalMode { Strong, WeakInterior, WeakTop, WeakBottom, WeakBoth };

// Strong legality forbids:
//   1. alpha_0 = S with an isolated vertex on B_0's top side;
//   2. alpha_{k+1} = S with an isolated vertex on B_k's bottom side;
//   3. an interior S between a bottom-isolated type and a top-isolated type.
// Weak modes lift condition 1 (WeakBottom), 2 (WeakTop) or both (WeakBoth);
// condition 3 is the avoidance condition and always applies.
inline bool is_legal(const Word& w, LegalMode mode) {
    if (!w.well_formed()) throw std::invalid_argument("is_legal: malformed word");
    int k = w.k();
    bool drop1 = mode == LegalMode::WeakBottom || mode == LegalMode::WeakBoth;
    bool drop2 = mode == LegalMode::WeakTop || mode == LegalMode::WeakBoth;
    if (!drop1 && w.joins[0] == Join::Stick && type_top_isolated(w.types[0])) return false;
    if (!drop2 && w.joins[k + 1] == Join::Stick && type_bottom_isolated(w.types[k]))
        return false;
    for (int i = 1; i <= k; ++i)
        if (type_bottom_isolated(w.types[i - 1]) && w.joins[i] == Join::Stick &&
            type_top_isolated(w.types[i]))
            return false;
    return true;
}

inline std::string word_to_string(const Word& w) {
    std::string s;
    for (size_t i = 0; i < w.types.size(); ++i) {
        s += w.joins[i] == Join::Glue ? "G " : "S ";
        s += btype_name(w.types[i]);
        s += ' ';
    }
    s += w.joins.back() == Join::Glue ? "G" : "S";
    return s;
}

}  // namespace poset31
