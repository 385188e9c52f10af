#include <doctest.h>

#include "quartwist/verify.hpp"

using namespace quartwist;

namespace {

ParamMap scal(std::initializer_list<std::pair<const char*, Rational>> kv) {
    ParamMap p;
    for (auto& [k, v] : kv) p.scalars[k] = v;
    return p;
}

void expect_verified(const Twist& t, bool want_cocycle = true) {
    VerificationReport rep = verify_twist(t);
    CAPTURE(t.source_case);
    CHECK(rep.iso_ok);
    CHECK(rep.rational_ok);
    if (want_cocycle) {
        CHECK(rep.cocycle_checked);
        CHECK(rep.cocycle_ok);
    }
}

} // namespace

TEST_CASE("case I twists") {
    ParamMap cp = sample_params(HennCase::I);
    Twist t = henn_case_twist(HennCase::I, cp, scal({{"m", 2}}));
    expect_verified(t);
    CHECK(t.curve.coeff(4, 0, 0) == t.tower->from_rational(4)); // m^2
    CHECK(t.curve.coeff(2, 2, 0) == t.tower->from_rational(2)); // m * F1[0]
    // m = 1 gives the original curve with the identity iso class
    Twist triv = henn_case_twist(HennCase::I, cp, scal({{"m", 1}}));
    CHECK(triv.tower->degree() == 1);
    CHECK(triv.iso.is_scalar());
    CHECK_THROWS_AS(henn_case_twist(HennCase::I, cp, scal({{"m", 0}})), ZeroParameter);
}

TEST_CASE("case I: m and m n^2 give equivalent twists over one tower") {
    ParamMap cp = sample_params(HennCase::I);
    Twist t2 = henn_case_twist(HennCase::I, cp, scal({{"m", 2}}));
    Twist t8 = henn_case_twist(HennCase::I, cp, scal({{"m", 8}})); // sqrt 8 = 2 sqrt 2
    REQUIRE(t2.tower->same_as(*t8.tower));
    ProjGroup aut = twist_source_aut(t2);
    CHECK(aut.size() == 2);
    CHECK(check_equivalence(t2, t8, aut).has_value());
}

TEST_CASE("case II split twist matches the displayed equation") {
    ParamMap cp;
    cp.lists["cubic"] = {Rational(-6), Rational(11), Rational(-6)}; // roots 1, 2, 3
    Twist t = henn_case_twist(HennCase::II, cp, scal({{"m", 2}, {"n", 3}}));
    expect_verified(t);
    // alpha m^2 x^4 + beta n^2 y^4 + gamma z^4 + mn x^2y^2 + n y^2z^2 + m z^2x^2
    CHECK(t.curve.coeff(4, 0, 0) == t.tower->from_rational(4));
    CHECK(t.curve.coeff(0, 4, 0) == t.tower->from_rational(18));
    CHECK(t.curve.coeff(0, 0, 4) == t.tower->from_rational(3));
    CHECK(t.curve.coeff(2, 2, 0) == t.tower->from_rational(6));
    CHECK(t.curve.coeff(0, 2, 2) == t.tower->from_rational(3));
    CHECK(t.curve.coeff(2, 0, 2) == t.tower->from_rational(2));
}

TEST_CASE("case II C2 twist") {
    ParamMap cp;
    cp.lists["cubic"] = {Rational(2), Rational(-2), Rational(-1)}; // (t-1)(t^2-2)
    Twist t = henn_case_twist(HennCase::II, cp, scal({{"c", 1}, {"d", 1}}));
    expect_verified(t);
}

TEST_CASE("case II C3 and S3 twists") {
    ParamMap cyc;
    cyc.lists["cubic"] = {Rational(-1), Rational(-2), Rational(1)}; // t^3+t^2-2t-1, product 1
    Twist t1 = henn_case_twist(HennCase::II, cyc, {});
    expect_verified(t1);

    ParamMap s3;
    s3.lists["cubic"] = {Rational(-4), Rational(0), Rational(0)}; // t^3-4, product 4
    Twist t2 = henn_case_twist(HennCase::II, s3, {});
    expect_verified(t2);

    ParamMap bad;
    bad.lists["cubic"] = {Rational(-2), Rational(0), Rational(0)}; // product 2: not a square
    CHECK_THROWS_AS(henn_case_twist(HennCase::II, bad, {}), PolNotInClass);
}

TEST_CASE("case III twists") {
    ParamMap cp = sample_params(HennCase::III);
    Twist t = henn_case_twist(HennCase::III, cp, scal({{"m", 2}}));
    expect_verified(t);
    CHECK(t.curve.coeff(0, 1, 3) == t.tower->from_rational(2));
    // cube-free canonicalization keeps 4 as a genuine class
    Twist t4 = henn_case_twist(HennCase::III, cp, scal({{"m", 4}}));
    expect_verified(t4);
}

TEST_CASE("case IV twists (worked example shape)") {
    ParamMap cp = scal({{"a", 1}, {"b", 2}});
    // 3^2 - 1*1^2 = 8 = 2^3
    Twist t = henn_case_twist(HennCase::IV, cp,
                              scal({{"m", 1}, {"a1", 3}, {"a2", 1}, {"q", 2}}));
    expect_verified(t);
    // 4^2 - 2*2^2 = 8 = 2^3
    Twist t2 = henn_case_twist(HennCase::IV, cp,
                               scal({{"m", 2}, {"a1", 4}, {"a2", 2}, {"q", 2}}));
    expect_verified(t2);
    CHECK(t2.curve.coeff(3, 0, 1) == t2.tower->from_rational(8));  // 2 a1
    CHECK(t2.curve.coeff(2, 1, 1) == t2.tower->from_rational(24)); // 6 a2 m
    CHECK_THROWS_AS(
        henn_case_twist(HennCase::IV, cp, scal({{"m", 2}, {"a1", 3}, {"a2", 1}, {"q", 2}})),
        RelationViolated);
    // restriction a != b propagates
    CHECK_THROWS_AS(henn_case_twist(HennCase::IV, scal({{"a", 1}, {"b", 1}}),
                                    scal({{"m", 1}, {"a1", 3}, {"a2", 1}, {"q", 2}})),
                    RestrictionViolated);
}

TEST_CASE("case V twists") {
    // c^2 - d^2 m = q^4 a: (5,2,6,1) with a=1
    Twist t = henn_case_twist(HennCase::V, scal({{"a", 1}, {"b", 2}}),
                              scal({{"m", 6}, {"c", 5}, {"d", 2}, {"q", 1}}));
    expect_verified(t);
    CHECK(t.curve.coeff(4, 0, 0) == t.tower->from_rational(2 * 5 + 2 * 1)); // 2c + b q^2
    CHECK(t.curve.coeff(2, 0, 2) == t.tower->one());                        // q
    // a = 2: 7^2 - 1*17 = 32 = 2^4 * 2
    Twist t2 = henn_case_twist(HennCase::V, scal({{"a", 2}, {"b", 1}}),
                               scal({{"m", 17}, {"c", 7}, {"d", 1}, {"q", 2}}));
    expect_verified(t2);
    CHECK_THROWS_AS(henn_case_twist(HennCase::V, scal({{"a", 1}, {"b", 2}}),
                                    scal({{"m", 5}, {"c", 5}, {"d", 2}, {"q", 1}})),
                    RelationViolated);
}

TEST_CASE("case VI twists") {
    Twist t = henn_case_twist(HennCase::VI, scal({{"a", 1}}), scal({{"m", 2}, {"n", 3}}));
    expect_verified(t);
    CHECK(t.curve.coeff(0, 1, 3) == t.tower->from_rational(3));
    CHECK(t.curve.coeff(4, 0, 0) == t.tower->from_rational(4)); // a m^2
    CHECK(t.curve.coeff(2, 2, 0) == t.tower->from_rational(2)); // m
}

TEST_CASE("case VII twists") {
    // b^2 - c^2 m = q^4 a: (5,2,6,1) with a=1
    Twist t = henn_case_twist(HennCase::VII, scal({{"a", 1}}),
                              scal({{"m", 6}, {"b", 5}, {"c", 2}, {"q", 1}}));
    expect_verified(t);
    CHECK(t.curve.coeff(4, 0, 0) == t.tower->from_rational(2 * 5 + 1)); // 2b + q^2
    CHECK(t.curve.coeff(2, 0, 2).is_zero());                            // no z^2 cross term
}

TEST_CASE("case VIII twists") {
    ParamMap tp;
    tp.lists["cubic"] = {Rational(-4), Rational(0), Rational(0)};
    Twist t = henn_case_twist(HennCase::VIII, scal({{"a", 1}}), tp);
    expect_verified(t);
    ParamMap bad;
    bad.lists["cubic"] = {Rational(-3), Rational(0), Rational(0)};
    CHECK_THROWS_AS(henn_case_twist(HennCase::VIII, scal({{"a", 1}}), bad), PolNotInClass);
}

TEST_CASE("case IX twists") {
    Twist t = henn_case_twist(HennCase::IX, {}, scal({{"a", 2}}));
    expect_verified(t);
    CHECK(t.curve.coeff(4, 0, 0) == t.tower->from_rational(2));
    CHECK(t.curve.coeff(1, 3, 0) == t.tower->one());
    CHECK(t.curve.coeff(0, 1, 3) == t.tower->one());
    CHECK(t.tower->degree() == 6 * 9);
}

TEST_CASE("case X twists across the acceptance grid") {
    for (long a : {0L, 1L, 2L})
        for (long b : {1L, 2L, 16L}) {
            CAPTURE(a);
            CAPTURE(b);
            Twist t = henn_case_twist(HennCase::X, {}, scal({{"a", Rational(a)}, {"b", Rational(b)}}));
            VerificationReport rep = verify_twist(t);
            CHECK(rep.iso_ok);
            CHECK(rep.rational_ok);
            CHECK(t.curve.coeff(2, 0, 2) == t.tower->from_rational(a));
            CHECK(t.curve.coeff(0, 0, 4) == t.tower->from_rational(Rational(-a * a) / 12));
            CHECK(t.curve.coeff(0, 4, 0) == t.tower->from_rational(b));
        }
}

TEST_CASE("case X equivalences: (a,b) ~ (a,16b), (0,.) != (1,.)") {
    Twist ta = henn_case_twist(HennCase::X, {}, scal({{"a", 1}, {"b", 1}}));
    Twist tb = henn_case_twist(HennCase::X, {}, scal({{"a", 1}, {"b", 16}}));
    REQUIRE(ta.tower->same_as(*tb.tower));
    ProjGroup aut = twist_source_aut(ta);
    CHECK(aut.size() == 48);
    CHECK(check_equivalence(ta, tb, aut).has_value());
}

TEST_CASE("parameter searches find admissible instances") {
    auto iv = search_case_iv_params(8);
    REQUIRE(iv.has_value());
    auto [m, a1, a2, q] = *iv;
    CHECK(a1 * a1 - m * a2 * a2 == q * q * q);
    auto r7 = search_klein_row7_params(10);
    REQUIRE(r7.has_value());
    CHECK((*r7)[0] * (*r7)[0] - (*r7)[2] * (*r7)[1] * (*r7)[1] ==
          Rational(-7) * (*r7)[2] * (*r7)[3] * (*r7)[3]);
}
