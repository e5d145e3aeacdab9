#include <catch2/catch_amalgamated.hpp>

#include "poset31/poset.hpp"

using namespace poset31;

namespace {

Poset chain(int n) {
    std::vector<std::pair<int, int>> rels;
    for (int i = 0; i + 1 < n; ++i) rels.push_back({i, i + 1});
    return poset_from_relations(n, rels);
}

Poset antichain(int n) { return Poset(n); }

// A 3-chain 0<1<2 plus the isolated element 3.
Poset three_plus_one() { return poset_from_relations(4, {{0, 1}, {1, 2}}); }

Poset two_plus_two() { return poset_from_relations(4, {{0, 1}, {2, 3}}); }

}  // namespace

TEST_CASE("validate accepts antichains and chains") {
    CHECK(validate(antichain(3)));
    CHECK(validate(antichain(0)));
    CHECK(validate(chain(5)));
}

TEST_CASE("validate rejects broken relations") {
    Poset p(3);
    p.set_less(0, 1);
    p.set_less(1, 2);  // missing 0<2
    CHECK_FALSE(validate(p));

    Poset q(2);
    q.set_less(0, 1);
    q.set_less(1, 0);
    CHECK_FALSE(validate(q));

    Poset r(2);
    r.set_less(0, 0);
    CHECK_FALSE(validate(r));
}

TEST_CASE("covers of a chain are the consecutive steps") {
    auto cov = covers(chain(3));
    CHECK(cov[0] == 0b010u);
    CHECK(cov[1] == 0b100u);
    CHECK(cov[2] == 0u);
}

TEST_CASE("covers of an antichain are empty") {
    auto cov = covers(antichain(4));
    for (auto m : cov) CHECK(m == 0u);
}

TEST_CASE("covers drop implied relations") {
    auto p = poset_from_relations(3, {{0, 1}, {1, 2}, {0, 2}});
    auto cov = covers(p);
    CHECK(cov[0] == 0b010u);  // 0<2 is implied, not a cover
    CHECK(cov[1] == 0b100u);
}

TEST_CASE("covers regenerate the order under transitive closure") {
    auto p = poset_from_relations(6, {{0, 1}, {1, 2}, {3, 2}, {0, 4}, {4, 2}, {5, 1}});
    auto cov = covers(p);
    std::vector<std::pair<int, int>> rels;
    for (int a = 0; a < p.n; ++a)
        for_bits(cov[a], [&](int b) { rels.push_back({a, b}); });
    CHECK(poset_from_relations(p.n, rels) == p);
}

TEST_CASE("3+1 pattern detection") {
    CHECK(contains_3plus1(three_plus_one()));
    CHECK_FALSE(contains_3plus1(chain(3)));
    CHECK_FALSE(contains_3plus1(antichain(3)));
    CHECK_FALSE(contains_3plus1(two_plus_two()));
    CHECK_FALSE(contains_3plus1(chain(4)));
}

TEST_CASE("2+2 pattern detection") {
    CHECK(contains_2plus2(two_plus_two()));
    CHECK_FALSE(contains_2plus2(chain(4)));
    CHECK_FALSE(contains_2plus2(antichain(3)));
    CHECK_FALSE(contains_2plus2(three_plus_one()));
}

TEST_CASE("rank function of a chain") {
    auto r = rank_function(chain(3));
    REQUIRE(r.has_value());
    CHECK(r->rank == std::vector<int>{0, 1, 2});
    CHECK(height(*r) == 3);
}

TEST_CASE("rank function puts a minimal element at rank 1 when forced") {
    // a<b<c, d<c, d incomparable to a and b
    auto p = poset_from_relations(4, {{0, 1}, {1, 2}, {3, 2}});
    auto r = rank_function(p);
    REQUIRE(r.has_value());
    CHECK(r->rank == std::vector<int>{0, 1, 2, 1});
    REQUIRE(is_strongly_graded(*r) == false);  // minimal elements at ranks 0 and 1
}

TEST_CASE("rank function rejects conflicting cover constraints") {
    // x<y, x<z1, z1<z2, y<w, z2<w forces rank(w) to both 2 and 3
    auto p = poset_from_relations(5, {{0, 1}, {0, 2}, {2, 3}, {1, 4}, {3, 4}});
    CHECK_FALSE(rank_function(p).has_value());
}

TEST_CASE("strong gradedness") {
    CHECK(is_strongly_graded(*rank_function(chain(3))));
    CHECK(is_strongly_graded(*rank_function(antichain(4))));
    auto p = poset_from_relations(3, {{0, 1}});  // edge plus isolated vertex
    CHECK_FALSE(is_strongly_graded(*rank_function(p)));
}

TEST_CASE("height") {
    CHECK(height(*rank_function(antichain(0))) == 0);
    CHECK(height(*rank_function(antichain(5))) == 1);
    CHECK(height(*rank_function(chain(3))) == 3);
}

TEST_CASE("seeing classes in small posets") {
    auto top = *rank_function(chain(3));
    CHECK(seeing_class(top, 2) == SeeingClass::AllSeeing);  // both conditions hold at the ends

    // ranks {a,b} below {c}, only a<c
    auto r = *rank_function(poset_from_relations(3, {{0, 2}}));
    CHECK(seeing_class(r, 0) == SeeingClass::AllSeeing);
    CHECK(seeing_class(r, 1) == SeeingClass::DownSeeing);
    CHECK(seeing_class(r, 2) == SeeingClass::UpSeeing);

    for (int v = 0; v < 4; ++v)
        CHECK(seeing_class(*rank_function(antichain(4)), v) == SeeingClass::AllSeeing);
}

TEST_CASE("vigilance") {
    CHECK(is_vigilant(*rank_function(antichain(6))));

    auto tp1 = *rank_function(three_plus_one());
    CHECK(seeing_class(tp1, 3) == SeeingClass::DownSeeing);  // isolated: down-seeing vacuously
    CHECK(is_vigilant(tp1));

    // Eight-vertex poset whose middle rank holds two vertices that are
    // neither up- nor down-seeing.
    auto p = poset_from_relations(
        8, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {1, 5}, {3, 6}, {3, 7}, {4, 6}, {5, 7}});
    auto r = *rank_function(p);
    auto cls = seeing_classes(r);
    int none = 0;
    for (auto c : cls) none += c == SeeingClass::NoneSeeing;
    CHECK(none == 2);
    CHECK(cls[4] == SeeingClass::NoneSeeing);
    CHECK(cls[5] == SeeingClass::NoneSeeing);
    CHECK_FALSE(is_vigilant(r));
}

TEST_CASE("local avoidance check") {
    CHECK(local_avoidance_check(*rank_function(chain(4))));
    CHECK_FALSE(local_avoidance_check(*rank_function(three_plus_one())));
}

TEST_CASE("a top-rank vertex is always up-seeing, bottom-rank always down-seeing") {
    auto p = poset_from_relations(5, {{0, 2}, {1, 2}, {2, 3}, {2, 4}});
    auto r = *rank_function(p);
    auto cls = seeing_classes(r);
    int h = height(r);
    for (int v = 0; v < p.n; ++v) {
        if (r.rank[v] == h - 1) CHECK(is_up_seeing(cls[v]));
        if (r.rank[v] == 0) CHECK(is_down_seeing(cls[v]));
    }
}
