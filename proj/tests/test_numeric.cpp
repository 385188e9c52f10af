#include <doctest.h>

#include "quartwist/numeric.hpp"

using namespace quartwist;

TEST_CASE("rational parsing round-trips") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-12") == Rational(-12));
    CHECK(rational_str(Rational(-7, 3)) == "-7/3");
    CHECK(rational_str(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("x"), IoError);
}

TEST_CASE("nth_power_free canonical representatives") {
    CHECK(nth_power_free(Rational(8), 2) == Rational(2));
    CHECK(nth_power_free(Rational(16), 4) == Rational(1));
    CHECK(nth_power_free(Rational(-48), 4) == Rational(-3)); // 48 = 2^4 * 3
    CHECK(nth_power_free(Rational(-8), 3) == Rational(1));   // sign is a cube
    CHECK(nth_power_free(Rational(9, 4), 2) == Rational(1));
    CHECK_THROWS_AS(nth_power_free(Rational(0), 2), ZeroInput);
}

TEST_CASE("nth_power_free is idempotent and kills n-th powers") {
    std::vector<Rational> xs = {Rational(2), Rational(-5, 3), Rational(360), Rational(7, 16)};
    std::vector<Rational> ys = {Rational(2), Rational(3, 5), Rational(-7)};
    for (unsigned n : {2u, 3u, 4u, 9u})
        for (auto& x : xs) {
            Rational c = nth_power_free(x, n);
            CHECK(nth_power_free(c, n) == c);
            for (auto& y : ys) {
                Rational yn = 1;
                for (unsigned i = 0; i < n; ++i) yn *= y;
                CHECK(nth_power_free(x * yn, n) == c);
            }
        }
}

TEST_CASE("rational roots of integer polynomials") {
    // (t-1)(t-2)(t-3) = t^3 - 6t^2 + 11t - 6
    QPoly p{{Rational(-6), Rational(11), Rational(-6), Rational(1)}};
    auto r = rational_roots(p);
    REQUIRE(r.size() == 3);
    CHECK(r[0] == Rational(1));
    CHECK(r[2] == Rational(3));
    QPoly q{{Rational(-2), Rational(0), Rational(0), Rational(1)}}; // t^3-2
    CHECK(rational_roots(q).empty());
}

TEST_CASE("quartic rational reducibility") {
    // t^4 - 4 = (t^2-2)(t^2+2)
    CHECK(depressed_quartic_reducible(Rational(0), Rational(0), Rational(-4)));
    // t^4 + 4 = (t^2-2t+2)(t^2+2t+2)
    CHECK(depressed_quartic_reducible(Rational(0), Rational(0), Rational(4)));
    // t^4 - 2 irreducible
    CHECK_FALSE(depressed_quartic_reducible(Rational(0), Rational(0), Rational(-2)));
    // t^4 + t^2 - t - 1/12 (case X quartic at a=1)
    CHECK_FALSE(depressed_quartic_reducible(Rational(1), Rational(-1), Rational(-1, 12)));
}

TEST_CASE("pure radical irreducibility criterion") {
    CHECK(pure_radical_irreducible(Rational(2), 4));
    CHECK(pure_radical_irreducible(Rational(-7), 2));
    CHECK_FALSE(pure_radical_irreducible(Rational(4), 2));
    CHECK_FALSE(pure_radical_irreducible(Rational(-4), 4)); // -4 = -4*1^4
}

TEST_CASE("factorization handles semiprimes") {
    auto f = factorize(Int(2 * 3 * 3 * 97));
    REQUIRE(f.size() == 3);
    CHECK(f[1].first == 3);
    CHECK(f[1].second == 2);
    auto big = factorize(Int("10000000019") * Int("10000000033"));
    CHECK(big.size() == 2);
}
