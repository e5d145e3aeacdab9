#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "poset31/io.hpp"

using namespace poset31;

TEST_CASE("poset exchange round-trip") {
    std::istringstream in(R"({"n": 4, "relations": [[1, 2], [2, 3]]})");
    auto p = load_poset_exchange(in);
    CHECK(p.n == 4);
    CHECK(p.less(0, 1));
    CHECK(p.less(0, 2));  // closure applied
    CHECK(p.incomparable(0, 3));

    std::ostringstream out;
    save_poset_exchange(out, p);
    std::istringstream back(out.str());
    CHECK(load_poset_exchange(back) == p);
}

TEST_CASE("exchange loader rejects malformed documents") {
    auto reject = [](const std::string& doc) {
        std::istringstream in(doc);
        CHECK_THROWS_AS(load_poset_exchange(in), io_error);
    };
    reject("not json");
    reject(R"({"relations": []})");
    reject(R"({"n": 2, "relations": [[1]]})");
    reject(R"({"n": 2, "relations": [[1, 3]]})");
    reject(R"({"n": 2, "relations": [[1, 2], [2, 1]]})");  // a cycle
    reject(R"({"n": -1})");
}

TEST_CASE("dot export groups ranks and lists covers only") {
    auto p = poset_from_relations(3, {{0, 1}, {1, 2}, {0, 2}});
    auto rf = rank_function(p);
    auto dot = to_dot(p, &rf->rank);
    CHECK(dot.find("v1 -> v2;") != std::string::npos);
    CHECK(dot.find("v2 -> v3;") != std::string::npos);
    CHECK(dot.find("v1 -> v3") == std::string::npos);  // implied, not a cover
    CHECK(dot.find("rank=same") != std::string::npos);
}

TEST_CASE("count table serialization") {
    auto t = count_table(CountFamily::Strong, 3, false);
    auto j = count_table_json(t);
    CHECK(j["kind"] == "strong");
    REQUIRE(j["counts"].size() == 4);
    CHECK(j["counts"][3]["n"] == 3);
    CHECK(j["counts"][3]["count"] == "13");
    CHECK(!j["counts"][3].contains("k"));

    auto csv = count_table_csv(t);
    CHECK(csv == "n,count\n0,1\n1,1\n2,3\n3,13\n");

    auto th = count_table(CountFamily::Weak, 3, true);
    auto jh = count_table_json(th);
    CHECK(jh["kind"] == "weak_by_height");
    bool found = false;
    for (const auto& row : jh["counts"])
        if (row["n"] == 3 && row["k"] == 2) {
            CHECK(row["count"] == "12");
            found = true;
        }
    CHECK(found);
}

TEST_CASE("oracle report JSON carries the source tag") {
    auto j = oracle_report_json(brute_counts(3));
    CHECK(j["source"] == "oracle");
    CHECK(j["total_posets"] == "19");
    CHECK(j["weak_avoiding"].size() == 4);
}

TEST_CASE("asymptotic report serialization") {
    auto rep = ratio_report(4, 12);
    auto j = asymptotic_report_json(rep);
    CHECK(j["rows"].size() == 5);
    CHECK(j["theta"]["terms"] == 12);
    CHECK(j["rows"][2]["psi"] == "3/1");
    auto csv = asymptotic_report_csv(rep);
    CHECK(csv.find("n,psi,predicted,ratio_psi,ratio_strong,ratio_weak") == 0);
}
