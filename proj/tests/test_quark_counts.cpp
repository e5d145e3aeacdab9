#include <catch2/catch_amalgamated.hpp>

#include "poset31/oracle.hpp"
#include "poset31/quark_counts.hpp"

using namespace poset31;

namespace {

QuarkFamilyFlags flags_of(FlagReq bas, FlagReq tas, FlagReq bi, FlagReq ti) {
    return QuarkFamilyFlags{bas, tas, bi, ti};
}

constexpr FlagReq kReqs[3] = {FlagReq::Free, FlagReq::Required, FlagReq::Forbidden};

}  // namespace

TEST_CASE("named family values") {
    auto F = FlagReq::Free, R = FlagReq::Required, X = FlagReq::Forbidden;
    CHECK(quark_family_count(2, 2, flags_of(F, F, F, F)) == 16);   // all graphs
    CHECK(quark_family_count(1, 1, flags_of(X, X, F, F)) == 1);    // B(1,1)
    CHECK(quark_family_count(2, 2, flags_of(X, X, F, F)) == 7);    // B(2,2)
    CHECK(quark_family_count(1, 1, flags_of(X, X, R, R)) == 1);    // both sides isolated
    CHECK(quark_family_count(3, 2, flags_of(F, F, X, F)) == 27);   // (2^2-1)^3
    CHECK(quark_family_count(3, 2, flags_of(X, F, X, F)) == 8);    // (2^2-2)^3
}

TEST_CASE("out-of-domain sides count zero") {
    CHECK(quark_family_count(0, 3, QuarkFamilyFlags{}) == 0);
    CHECK(quark_family_count(2, 0, QuarkFamilyFlags{}) == 0);
}

TEST_CASE("unsupported flag combinations are rejected") {
    auto F = FlagReq::Free, X = FlagReq::Forbidden;
    CHECK_THROWS_AS(quark_family_count(2, 2, flags_of(X, F, F, X)), std::invalid_argument);
    CHECK_THROWS_AS(quark_family_count(2, 2, flags_of(F, X, X, F)), std::invalid_argument);
}

TEST_CASE("closed forms match exhaustive bipartite counts, sides up to 4") {
    int supported = 0;
    for (FlagReq bas : kReqs)
        for (FlagReq tas : kReqs)
            for (FlagReq bi : kReqs)
                for (FlagReq ti : kReqs) {
                    auto fl = flags_of(bas, tas, bi, ti);
                    bool ok = true;
                    try {
                        quark_family_count(1, 1, fl);
                    } catch (const std::invalid_argument&) {
                        ok = false;
                    }
                    if (!ok) continue;
                    ++supported;
                    for (int m = 1; m <= 4; ++m)
                        for (int n = 1; n <= 4; ++n) {
                            INFO("m=" << m << " n=" << n << " flags=" << (int)bas << (int)tas
                                      << (int)bi << (int)ti);
                            REQUIRE(quark_family_count(m, n, fl) ==
                                    enumerate_bipartite(m, n, fl));
                        }
                }
    // the six named families, their mirrors and refinements are all covered
    CHECK(supported >= 30);
}
