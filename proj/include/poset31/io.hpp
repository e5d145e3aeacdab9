#pragma once

// Exchange formats: the JSON poset document ({"n": ..., "relations":
// [[a,b], ...]}, elements 1-based, loader closes transitively and
// validates), DOT export of Hasse diagrams, and JSON/CSV/table renderings of
// the count, oracle, and asymptotic reports.

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "poset31/asymptotics.hpp"
#include "poset31/genfun.hpp"
#include "poset31/oracle.hpp"
#include "poset31/poset.hpp"

namespace poset31 {

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Poset load_poset_exchange(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw io_error(std::string("bad poset document: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw io_error("bad poset document: missing integer field 'n'");
    int n = j["n"].get<int>();
    if (n < 0 || n > Poset::kMaxElements) throw io_error("poset size out of range");
    std::vector<std::pair<int, int>> rels;
    if (j.contains("relations")) {
        if (!j["relations"].is_array()) throw io_error("'relations' must be a list of pairs");
        for (const auto& e : j["relations"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw io_error("each relation must be a pair [a, b]");
            int a = e[0].get<int>(), b = e[1].get<int>();
            if (a < 1 || a > n || b < 1 || b > n)
                throw io_error("relation element out of range");
            rels.push_back({a - 1, b - 1});
        }
    }
    Poset p = poset_from_relations(n, rels);
    if (!validate(p)) throw io_error("relations do not define a strict partial order");
    return p;
}

inline void save_poset_exchange(std::ostream& out, const Poset& p) {
    out << serialize_poset(p) << "\n";
}

// Hasse diagram: cover edges only, vertices grouped per rank when a rank
// function is supplied.
inline std::string to_dot(const Poset& p, const std::vector<int>* rank = nullptr) {
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
    if (rank) {
        int h = 0;
        for (int v = 0; v < p.n; ++v) h = std::max(h, (*rank)[v] + 1);
        for (int r = 0; r < h; ++r) {
            os << "  { rank=same;";
            for (int v = 0; v < p.n; ++v)
                if ((*rank)[v] == r) os << " v" << v + 1 << ";";
            os << " }\n";
        }
    }
    for (int v = 0; v < p.n; ++v) os << "  v" << v + 1 << " [label=\"" << v + 1 << "\"];\n";
    auto cov = covers(p);
    for (int a = 0; a < p.n; ++a)
        for_bits(cov[a], [&](int b) { os << "  v" << a + 1 << " -> v" << b + 1 << ";\n"; });
    os << "}\n";
    return os.str();
}

// --- report serialization ----------------------------------------------

inline nlohmann::json count_table_json(const CountTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : t.rows) {
        nlohmann::json row{{"n", r.n}, {"count", r.count.str()}};
        if (t.by_height) row["k"] = r.k;
        rows.push_back(std::move(row));
    }
    return {{"kind", t.kind}, {"counts", rows}};
}

inline std::string count_table_csv(const CountTable& t) {
    std::ostringstream os;
    os << (t.by_height ? "n,k,count\n" : "n,count\n");
    for (const auto& r : t.rows) {
        os << r.n;
        if (t.by_height) os << "," << r.k;
        os << "," << r.count.str() << "\n";
    }
    return os.str();
}

inline std::string count_table_text(const CountTable& t) {
    std::ostringstream os;
    os << t.kind << "\n";
    if (!t.by_height) {
        for (const auto& r : t.rows)
            os << "  n=" << std::setw(2) << r.n << "  " << r.count.str() << "\n";
        return os.str();
    }
    int prev = -1;
    for (const auto& r : t.rows) {
        if (r.n != prev) {
            if (prev != -1) os << "\n";
            os << "  n=" << std::setw(2) << r.n << " ";
            prev = r.n;
        }
        os << " h" << r.k << ":" << r.count.str();
    }
    os << "\n";
    return os.str();
}

inline CountTable oracle_count_table(const OracleReport& r, CountFamily family,
                                     bool by_height) {
    CountTable t;
    t.kind = std::string(family_name(family)) + (by_height ? "_by_height" : "");
    t.by_height = by_height;
    const auto& heights = family == CountFamily::Strong ? r.strong_avoiding_by_height
                                                        : r.weak_avoiding_by_height;
    if (family == CountFamily::Semiorder) {
        t.rows.push_back({r.n, -1, Int(r.semiorder_strong)});
        return t;
    }
    if (!by_height) {
        Int total = 0;
        for (auto v : heights) total += v;
        t.rows.push_back({r.n, -1, total});
        return t;
    }
    for (int k = 0; k <= r.n; ++k)
        if (heights[k] != 0 || (r.n == 0 && k == 0))
            t.rows.push_back({r.n, k, Int(heights[k])});
    return t;
}

inline nlohmann::json oracle_report_json(const OracleReport& r) {
    nlohmann::json heights_w = nlohmann::json::array(), heights_s = nlohmann::json::array();
    for (int k = 0; k <= r.n; ++k) {
        heights_w.push_back({{"n", r.n}, {"k", k}, {"count", Int(r.weak_avoiding_by_height[k]).str()}});
        heights_s.push_back({{"n", r.n}, {"k", k}, {"count", Int(r.strong_avoiding_by_height[k]).str()}});
    }
    return {{"source", "oracle"},
            {"n", r.n},
            {"total_posets", Int(r.total_posets).str()},
            {"weakly_graded", Int(r.weakly_graded).str()},
            {"strongly_graded", Int(r.strongly_graded).str()},
            {"semiorder_strong", Int(r.semiorder_strong).str()},
            {"weak_avoiding", heights_w},
            {"strong_avoiding", heights_s}};
}

inline nlohmann::json asymptotic_report_json(const AsymptoticReport& rep) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : rep.rows)
        rows.push_back({{"n", r.n},
                        {"psi", numerator(r.psi).str() + "/" + denominator(r.psi).str()},
                        {"predicted", r.predicted.to_string()},
                        {"ratio_psi", r.ratio_psi.to_string()},
                        {"ratio_strong", Fixed::from_rational(r.ratio_strong).to_string()},
                        {"ratio_weak", Fixed::from_rational(r.ratio_weak).to_string()}});
    return {{"theta", {{"terms", rep.theta.terms},
                       {"c1", rep.theta.c1.to_string()},
                       {"c2", rep.theta.c2.to_string()},
                       {"tail_bound", rep.theta.tail_bound.to_string()}}},
            {"rows", rows}};
}

inline std::string asymptotic_report_csv(const AsymptoticReport& rep) {
    std::ostringstream os;
    os << "n,psi,predicted,ratio_psi,ratio_strong,ratio_weak\n";
    for (const auto& r : rep.rows)
        os << r.n << "," << numerator(r.psi).str() << "/" << denominator(r.psi).str() << ","
           << r.predicted.to_string() << "," << r.ratio_psi.to_string() << ","
           << Fixed::from_rational(r.ratio_strong).to_string() << ","
           << Fixed::from_rational(r.ratio_weak).to_string() << "\n";
    return os.str();
}

inline std::string asymptotic_report_text(const AsymptoticReport& rep) {
    std::ostringstream os;
    os << "theta constants (terms=" << rep.theta.terms << "): c1=" << rep.theta.c1.to_string(32)
       << " c2=" << rep.theta.c2.to_string(32) << "\n";
    os << " n  ratio_psi       ratio_strong    ratio_weak\n";
    for (const auto& r : rep.rows)
        os << std::setw(2) << r.n << "  " << r.ratio_psi.to_string(12) << "  "
           << Fixed::from_rational(r.ratio_strong).to_string(12) << "  "
           << Fixed::from_rational(r.ratio_weak).to_string(12) << "\n";
    return os.str();
}

}  // namespace poset31
