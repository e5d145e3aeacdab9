#include <catch2/catch_amalgamated.hpp>

#include "poset31/asymptotics.hpp"

using namespace poset31;

namespace {

Fixed fx(const char* decimal) {
    // parse "d.ddd" into the fixed-point type
    std::string s(decimal);
    auto dot = s.find('.');
    std::string frac = s.substr(dot + 1);
    frac.resize(Fixed::kDigits, '0');
    return Fixed::from_mantissa(Int(s.substr(0, dot)) * Fixed::scale() + Int(frac));
}

}  // namespace

TEST_CASE("psi values") {
    CHECK(psi_exact(0) == 1);
    CHECK(psi_exact(1) == 2);
    CHECK(psi_exact(2) == 3);
    CHECK(psi_exact(3) == Rat(13, 3));
    auto s = psi_series(Bounds{10, 0, 0});
    for (int n = 0; n <= 10; ++n) CHECK(psi_exact(n) == s.coeff(n));
}

TEST_CASE("theta constants") {
    auto t12 = theta_constants(12);
    // golden values from the exact dyadic partial sums
    auto c1 = fx("2.1289368272118771586694585485449513246125");
    auto c2 = fx("2.5317401904617327368378426290870868549285");
    CHECK(t12.c1.abs_diff(c1) < fx("0.0000000000000000000000000000000000000100"));
    CHECK(t12.c2.abs_diff(c2) < fx("0.0000000000000000000000000000000000000100"));
    // stable to well past 30 digits once terms reaches 12
    auto t24 = theta_constants(24);
    auto eps30 = fx("0.0000000000000000000000000000010000000000");
    CHECK(t12.c1.abs_diff(t24.c1) < eps30);
    CHECK(t12.c2.abs_diff(t24.c2) < eps30);
    // the reported tail bound shrinks; at terms = 12 it underflows 40 digits
    CHECK(theta_constants(5).tail_bound < theta_constants(3).tail_bound);
    CHECK(!(t12.tail_bound > Fixed()));
}

TEST_CASE("psi normalization stays within the proof bounds") {
    // psi_n * floor(n/2)! ceil(n/2)! / 2^{floor*ceil} lies in (1, 2.6)
    for (int n = 1; n <= 16; ++n) {
        int lo = n / 2, hi = (n + 1) / 2;
        Rat v = psi_exact(n) * Rat(factorial(lo) * factorial(hi)) / Rat(pow2(lo * hi));
        CHECK(v > 1);
        CHECK(v < Rat(26, 10));
    }
}

TEST_CASE("ratio report trends") {
    auto rep = ratio_report(12, 16);
    REQUIRE(rep.rows.size() == 13);
    // frozen from the exact run: the even and odd psi ratios increase toward 1
    for (int n = 2; n <= 12; ++n) {
        CHECK(rep.rows[n].ratio_psi > Fixed::from_int(0));
        CHECK(rep.rows[n].ratio_psi < Fixed::from_int(1));
        if (n - 2 >= 0)
            CHECK(rep.rows[n].ratio_psi > rep.rows[n - 2].ratio_psi);
    }
    // spot values against the frozen counts
    CHECK(rep.rows[6].ratio_strong == Rat(22383) / (Rat(factorial(6)) * psi_exact(6)));
    Rat r6 = rep.rows[6].ratio_strong;
    CHECK(r6 > Rat(122, 100));
    CHECK(r6 < Rat(123, 100));
    for (int n = 1; n <= 12; ++n)
        CHECK(rep.rows[n].ratio_weak >= rep.rows[n].ratio_strong);
}

TEST_CASE("fixed point printing") {
    CHECK(Fixed::from_rational(Rat(-3, 2)).to_string(4) == "-1.5000");
    CHECK(Fixed::from_int(7).to_string(2) == "7.00");
}
