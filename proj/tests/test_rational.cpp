#include <doctest.h>

#include <cstdint>
#include <limits>
#include <stdexcept>

#include "segbuf/rational.hpp"
#include "segbuf/rng.hpp"

using segbuf::Rational;

TEST_SUITE("rational") {

TEST_CASE("construction reduces and normalizes the sign") {
    CHECK(Rational(6, 8) == Rational(3, 4));
    CHECK(Rational(6, 8).num() == 3);
    CHECK(Rational(6, 8).den() == 4);
    CHECK(Rational(3, -6).num() == -1);
    CHECK(Rational(3, -6).den() == 2);
    CHECK(Rational(0, -5) == Rational(0));
    CHECK(Rational(0, -5).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(-Rational(2, 3) == Rational(-2, 3));
    CHECK(Rational(2) - Rational(10, 7) == Rational(4, 7));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("comparisons are exact near the 64-bit limit") {
    constexpr std::int64_t big = std::numeric_limits<std::int64_t>::max();
    CHECK(Rational(big - 1, big) < Rational(1));
    CHECK(Rational(big - 2, big - 1) < Rational(big - 1, big));
    CHECK(Rational(big, big - 1) > Rational(1));
    CHECK(Rational(-1, big) < Rational(0));
}

TEST_CASE("overflow is reported, not wrapped") {
    constexpr std::int64_t big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(Rational(big) + Rational(1), std::overflow_error);
    CHECK_THROWS_AS(Rational(big) * Rational(2), std::overflow_error);
    CHECK(Rational(big) * Rational(1, 2) == Rational(big, 2));
}

TEST_CASE("rendering") {
    CHECK(Rational(4, 3).to_string() == "4/3");
    CHECK(Rational(2).to_string() == "2");
    CHECK(Rational(-1, 2).to_string() == "-1/2");
    CHECK(Rational(4, 3).to_decimal() == "1.333333");
    CHECK(Rational(2, 3).to_decimal() == "0.666667");
    CHECK(Rational(1, 8).to_decimal(2) == "0.13");
    CHECK(Rational(-1, 8).to_decimal(2) == "-0.13");
    CHECK(Rational(3).to_decimal(2) == "3.00");
}

TEST_CASE("field laws on random small fractions") {
    segbuf::Xorshift64Star rng(17);
    for (int i = 0; i < 10000; ++i) {
        const Rational a(rng.between(-50, 50), rng.between(1, 50));
        const Rational b(rng.between(-50, 50), rng.between(1, 50));
        const Rational c(rng.between(-50, 50), rng.between(1, 50));
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        if (b != Rational(0)) CHECK((a / b) * b == a);
        CHECK(((a < b) == (a - b < Rational(0))));
    }
}

}  // TEST_SUITE
