// Command-line front end: count tables, oracle verification, quark-count
// checks, series dumps, asymptotic reports, and classification of poset
// documents. Exit codes: 0 success, 1 verification mismatch, 2 bad input.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "poset31/asymptotics.hpp"
#include "poset31/compose.hpp"
#include "poset31/genfun.hpp"
#include "poset31/io.hpp"
#include "poset31/oracle.hpp"

using namespace poset31;

namespace {

int emit_count_table(const CountTable& t, const std::string& format) {
    if (format == "json")
        std::cout << count_table_json(t).dump(2) << "\n";
    else if (format == "csv")
        std::cout << count_table_csv(t);
    else
        std::cout << count_table_text(t);
    return 0;
}

CountFamily parse_family(const std::string& s) {
    if (s == "strong") return CountFamily::Strong;
    if (s == "weak") return CountFamily::Weak;
    if (s == "semiorder") return CountFamily::Semiorder;
    throw CLI::ValidationError("family must be strong, weak or semiorder");
}

int run_count(const std::string& family, int max_n, bool by_height,
              const std::string& format) {
    return emit_count_table(count_table(parse_family(family), max_n, by_height), format);
}

// Cell-by-cell comparison of the oracle against the generating functions.
int run_verify(int max_n, const std::string& format) {
    Bounds b{std::max(max_n, 1), std::max(max_n, 1), std::max(max_n, 1)};
    auto strong = strong_by_height_gf(true, b);
    auto weak = weak_gf(true, b);
    auto semi = semiorder_gf(Bounds{std::max(max_n, 1), 0, 0});
    long long mismatches = 0;
    for (int n = 0; n <= max_n; ++n) {
        auto rep = brute_counts(n);
        auto complain = [&](const std::string& what, int k, const Int& got,
                            const Int& want) {
            if (got == want) return;
            if (mismatches == 0)
                std::cerr << "first mismatch: " << what << " n=" << n
                          << (k >= 0 ? " height=" + std::to_string(k) : std::string())
                          << ": oracle=" << want.str() << " formula=" << got.str() << "\n";
            ++mismatches;
        };
        for (int k = 0; k <= n; ++k) {
            Rat vs = strong.coeff(n, 0, k) * Rat(factorial(n));
            Rat vw = weak.coeff(n, 0, k) * Rat(factorial(n));
            complain("strong", k, numerator(vs), Int(rep.strong_avoiding_by_height[k]));
            complain("weak", k, numerator(vw), Int(rep.weak_avoiding_by_height[k]));
        }
        complain("semiorder", -1, egf_count(semi, n), Int(rep.semiorder_strong));
        if (format == "json")
            std::cout << oracle_report_json(rep).dump(2) << "\n";
        else
            std::cout << "n=" << n << " posets=" << rep.total_posets
                      << " weakly_graded=" << rep.weakly_graded
                      << " avoiding(weak)=" << rep.weak_avoiding_total()
                      << " avoiding(strong)=" << rep.strong_avoiding_total()
                      << " semiorder=" << rep.semiorder_strong << "\n";
    }
    if (mismatches) {
        std::cerr << mismatches << " cell(s) disagree\n";
        return 1;
    }
    std::cout << "oracle and formulas agree for n <= " << max_n << "\n";
    return 0;
}

int run_quarks(int max_m, int max_n) {
    using FR = FlagReq;
    const std::map<std::string, QuarkFamilyFlags> families = {
        {"A", {FR::Free, FR::Free, FR::Free, FR::Free}},
        {"A_nb", {FR::Free, FR::Free, FR::Forbidden, FR::Free}},
        {"A_nt", {FR::Free, FR::Free, FR::Free, FR::Forbidden}},
        {"B", {FR::Forbidden, FR::Forbidden, FR::Free, FR::Free}},
        {"B_oo", {FR::Forbidden, FR::Forbidden, FR::Required, FR::Required}},
        {"B_ox", {FR::Forbidden, FR::Forbidden, FR::Required, FR::Forbidden}},
        {"B_xo", {FR::Forbidden, FR::Forbidden, FR::Forbidden, FR::Required}},
        {"B_xx", {FR::Forbidden, FR::Forbidden, FR::Forbidden, FR::Forbidden}},
    };
    long long mismatches = 0;
    for (const auto& [name, flags] : families)
        for (int m = 1; m <= max_m; ++m)
            for (int n = 1; n <= max_n; ++n) {
                Int closed = quark_family_count(m, n, flags);
                Int brute = enumerate_bipartite(m, n, flags);
                if (closed != brute) {
                    if (mismatches == 0)
                        std::cerr << "first mismatch: family " << name << " m=" << m
                                  << " n=" << n << ": closed=" << closed.str()
                                  << " brute=" << brute.str() << "\n";
                    ++mismatches;
                } else {
                    std::cout << name << "(" << m << "," << n << ") = " << closed.str()
                              << "\n";
                }
            }
    if (mismatches) {
        std::cerr << mismatches << " quark count(s) disagree\n";
        return 1;
    }
    return 0;
}

int run_series(const std::string& which, int order, const std::string& format) {
    Bounds b = bounds_for_order(order);
    TruncatedSeries s(b);
    if (which == "strong")
        s = strong_gf(true, Bounds{b.nx, b.nx, 0});
    else if (which == "weak")
        s = weak_gf(true, b).subst_t_one();
    else if (which == "strong-height")
        s = strong_by_height_gf(true, b);
    else if (which == "weak-height")
        s = weak_gf(true, b);
    else if (which == "semiorder")
        s = semiorder_gf(Bounds{b.nx, 0, 0});
    else if (which == "psi")
        s = psi_series(Bounds{b.nx, 0, 0});
    else if (which == "indecomposable")
        s = strong_indecomposable_gf(Bounds{b.nx, b.nx, 0});
    else if (which == "f-oo")
        s = F_series(BType::OO, Bounds{b.nx, 0, 0});
    else if (which == "f-ox")
        s = F_series(BType::OX, Bounds{b.nx, 0, 0});
    else if (which == "f-xo")
        s = F_series(BType::XO, Bounds{b.nx, 0, 0});
    else if (which == "f-xx")
        s = F_series(BType::XX, Bounds{b.nx, 0, 0});
    else
        throw CLI::ValidationError("unknown series " + which);
    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& t : s.terms())
            rows.push_back({{"x", t.i},
                            {"z", t.j},
                            {"t", t.k},
                            {"num", numerator(t.c).str()},
                            {"den", denominator(t.c).str()}});
        std::cout << nlohmann::json{{"series", which}, {"terms", rows}}.dump(2) << "\n";
    } else {
        std::cout << s.dump();
    }
    return 0;
}

int run_asymptotics(int max_n, int terms, const std::string& format) {
    auto rep = ratio_report(max_n, terms);
    if (format == "json")
        std::cout << asymptotic_report_json(rep).dump(2) << "\n";
    else if (format == "csv")
        std::cout << asymptotic_report_csv(rep);
    else
        std::cout << asymptotic_report_text(rep);
    return 0;
}

int run_classify(const std::string& path, const std::string& dot_path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return 2;
    }
    Poset p;
    try {
        p = load_poset_exchange(in);
    } catch (const io_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    auto rf = rank_function(p);
    std::vector<std::string> facts;
    facts.push_back(rf ? "weakly graded" : "not weakly graded");
    if (rf) {
        facts.push_back(is_strongly_graded(*rf) ? "strongly graded" : "not strongly graded");
        facts.push_back("height " + std::to_string(height(*rf)));
        facts.push_back(is_vigilant(*rf) ? "vigilant" : "not vigilant");
    }
    bool has_pattern = contains_3plus1(p);
    facts.push_back(has_pattern ? "contains 3+1" : "avoids 3+1");
    facts.push_back(contains_2plus2(p) ? "contains 2+2" : "avoids 2+2");
    for (size_t i = 0; i < facts.size(); ++i)
        std::cout << facts[i] << (i + 1 < facts.size() ? "; " : "\n");

    if (rf) {
        if (local_avoidance_check(*rf) == has_pattern)
            std::cout << "warning: local check disagrees with pattern search\n";
        auto cls = seeing_classes(*rf);
        std::cout << "ranks:";
        for (int v = 0; v < p.n; ++v) std::cout << " " << v + 1 << ":" << rf->rank[v];
        std::cout << "\nseeing:";
        const char* names[] = {"up", "down", "all", "none"};
        for (int v = 0; v < p.n; ++v)
            std::cout << " " << v + 1 << ":" << names[(int)cls[v]];
        std::cout << "\n";
        if (is_vigilant(*rf)) {
            auto t = trim(*rf);
            std::cout << "trimmed: " << t.labeled_count() << " labeled + "
                      << t.all_seeing_count() << " all-seeing placeholder(s)\n";
            if (!has_pattern) {
                auto deco = decompose_ordinal(t);
                std::cout << "ordinal summands: " << deco.summands.size() << "\n";
                for (const auto& s : deco.summands) {
                    int h = height(s.ranked);
                    std::cout << "  height " << h;
                    if (h >= 2) std::cout << ", word " << word_to_string(word_of(s));
                    std::cout << "\n";
                }
            }
        }
        if (!dot_path.empty()) {
            std::ofstream dot(dot_path);
            dot << to_dot(p, &rf->rank);
            std::cout << "wrote " << dot_path << "\n";
        }
    } else if (!dot_path.empty()) {
        std::ofstream dot(dot_path);
        dot << to_dot(p, nullptr);
        std::cout << "wrote " << dot_path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration of graded 3+1-avoiding posets"};
    app.require_subcommand(1);
    std::string format = "table";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));

    auto* count = app.add_subcommand("count", "count posets by family");
    std::string family = "strong";
    int max_n = 8;
    bool by_height = false;
    count->add_option("family", family, "strong | weak | semiorder")->required();
    count->add_option("--max-n", max_n, "largest vertex count")->check(CLI::Range(0, 30));
    count->add_flag("--by-height", by_height, "refine by height");

    auto* verify = app.add_subcommand("verify", "exhaustive oracle vs formulas");
    int verify_n = 5;
    verify->add_option("--max-n", verify_n, "largest vertex count (<= 7)")
        ->check(CLI::Range(0, 7));

    auto* quarks = app.add_subcommand("quarks", "quark counts: closed form vs brute force");
    int max_m = 4, max_nq = 4;
    quarks->add_option("--max-m", max_m, "largest bottom side")->check(CLI::Range(1, 4));
    quarks->add_option("--max-n", max_nq, "largest top side")->check(CLI::Range(1, 4));

    auto* series = app.add_subcommand("series", "dump series coefficients");
    std::string which = "strong";
    int order = 8;
    series->add_option("which", which,
                       "strong | weak | strong-height | weak-height | semiorder | psi | "
                       "indecomposable | f-oo | f-ox | f-xo | f-xx")
        ->required();
    series->add_option("--order", order, "truncation order")->check(CLI::Range(0, 30));

    auto* asym = app.add_subcommand("asymptotics", "growth-rate diagnostics");
    int asym_n = 16, terms = 16;
    asym->add_option("--max-n", asym_n, "largest vertex count")->check(CLI::Range(0, 30));
    asym->add_option("--terms", terms, "theta partial-sum terms")->check(CLI::Range(1, 64));

    auto* classify = app.add_subcommand("classify", "classify a poset document");
    std::string input, dot_path;
    classify->add_option("input", input, "poset document path")->required();
    classify->add_option("--dot", dot_path, "write the Hasse diagram as DOT");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // malformed command line
    }

    try {
        if (*count) return run_count(family, max_n, by_height, format);
        if (*verify) return run_verify(verify_n, format);
        if (*quarks) return run_quarks(max_m, max_nq);
        if (*series) return run_series(which, order, format);
        if (*asym) return run_asymptotics(asym_n, terms, format);
        if (*classify) return run_classify(input, dot_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
