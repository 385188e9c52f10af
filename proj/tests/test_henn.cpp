#include <doctest.h>

#include "quartwist/henn.hpp"
#include "quartwist/klein.hpp"

using namespace quartwist;

TEST_CASE("restrictions evaluate the rational constraints") {
    ParamMap p;
    p.scalars["a"] = 1;
    p.scalars["b"] = 1;
    CHECK_FALSE(check_restrictions(HennCase::IV, p).ok); // a != b
    p.scalars["b"] = 2;
    CHECK(check_restrictions(HennCase::IV, p).ok);
    p.scalars["b"] = 0;
    CHECK_FALSE(check_restrictions(HennCase::IV, p).ok); // ab != 0

    ParamMap v7;
    v7.scalars["a"] = 2;
    CHECK_FALSE(check_restrictions(HennCase::VII, v7).ok); // +-a != 2
    v7.scalars["a"] = -6;
    CHECK_FALSE(check_restrictions(HennCase::VII, v7).ok);
    v7.scalars["a"] = 1;
    auto rep = check_restrictions(HennCase::VII, v7);
    CHECK(rep.ok);
    CHECK(!rep.skipped_irrational.empty()); // 2 sqrt(-3) is vacuous over Q

    ParamMap v7m;
    v7m.scalars["a"] = Rational(-1, 12);
    CHECK_FALSE(check_restrictions(HennCase::VII, v7m, true).ok);
    v7m.scalars["a"] = Rational(1, 12);
    CHECK_FALSE(check_restrictions(HennCase::VII, v7m, true).ok); // +-a symmetric
    v7m.scalars["a"] = Rational(1, 12);
    CHECK_FALSE(check_restrictions(HennCase::VII, v7m, true, true).ok);
    v7m.scalars["a"] = 3;
    CHECK(check_restrictions(HennCase::VII, v7m, true).ok);

    // case V original: irrational bound evaluable when 1 - a is a square
    ParamMap v5;
    v5.scalars["a"] = -3; // 1-a = 4
    v5.scalars["b"] = -3; // 2a/sqrt(1-a) = -3
    CHECK_FALSE(check_restrictions(HennCase::V, v5).ok);
    v5.scalars["b"] = 1;
    CHECK(check_restrictions(HennCase::V, v5).ok);
    v5.scalars["a"] = 2; // sqrt(-1) irrational: skipped
    auto r5 = check_restrictions(HennCase::V, v5);
    CHECK(r5.ok);
    CHECK(!r5.skipped_irrational.empty());
}

TEST_CASE("representative curves match the table") {
    TowerBuilder tb;
    TernaryQuartic xi = representative_curve(HennCase::XI, {}, tb);
    CHECK(xi.coeff(4, 0, 0) == tb.rational(1));
    CHECK(xi.coeff(0, 0, 4) == tb.rational(1));
    CHECK(xi.coeff(2, 2, 0).is_zero());

    TernaryQuartic xii = representative_curve(HennCase::XII, {}, tb);
    CHECK(xii.coeff(3, 1, 0) == tb.rational(1));
    CHECK(xii.coeff(0, 3, 1) == tb.rational(1));
    CHECK(xii.coeff(1, 0, 3) == tb.rational(1));

    ParamMap p4;
    p4.scalars["a"] = 1;
    p4.scalars["b"] = 2;
    TernaryQuartic iv = representative_curve(HennCase::IV, p4, tb);
    CHECK(iv.coeff(3, 0, 1) == tb.rational(1));
    CHECK(iv.coeff(1, 1, 2) == tb.rational(1));
    CHECK(iv.coeff(0, 0, 4) == tb.rational(2));
}

TEST_CASE("every case context fixes its model and has the right order") {
    for (int ci = 1; ci <= 12; ++ci) {
        HennCase c = static_cast<HennCase>(ci);
        CaseContext ctx = make_case_context(c, sample_params(c));
        CAPTURE(ci);
        for (const auto& g : ctx.generators) {
            auto lam = proportionality(substitute(ctx.model, g), ctx.model);
            CHECK(lam.has_value());
        }
        ProjGroup G = generate_group(ctx.generators, 400);
        CHECK(static_cast<long>(G.size()) == aut_order(c));
        CHECK(identify(fingerprint(G)) == aut_label(c));
    }
}

TEST_CASE("modified cases fix their models too") {
    for (HennCase c : {HennCase::II, HennCase::V, HennCase::VI, HennCase::VII}) {
        CaseContext ctx = make_case_context(c, sample_params(c, true), true);
        for (const auto& g : ctx.generators)
            CHECK(proportionality(substitute(ctx.model, g), ctx.model).has_value());
        ProjGroup G = generate_group(ctx.generators, 400);
        CHECK(static_cast<long>(G.size()) == aut_order(c));
    }
}

TEST_CASE("pair tables have the documented shapes") {
    CHECK(pair_table(PairFamily::FermatDiagonal).size() == 14);
    CHECK(pair_table(PairFamily::FermatAlmostDiagonal).size() == 36);
    CHECK(pair_table(PairFamily::FermatNonDiagonal).size() == 9);
    CHECK(pair_table(PairFamily::Klein).size() == 11);
    CHECK(pair_table(PairFamily::KleinSqrt7).size() == 15);

    const PairRecord& k11 = pair_record(PairFamily::Klein, 11);
    CHECK(k11.g_label == "<336,208>");
    CHECK(k11.h_label == "<168,42>");
    CHECK(k11.n == 2);
    REQUIRE(k11.h_gen_words.size() == 3);

    const PairRecord& nd9 = pair_record(PairFamily::FermatNonDiagonal, 9);
    CHECK(nd9.g_label == "<192,956>");
    CHECK(nd9.h_label == "<96,64>");
    CHECK(nd9.n == 2);
    CHECK(nd9.disc_class == "!=+-1");
    CHECK(nd9.root_power == 4);

    const PairRecord& d1 = pair_record(PairFamily::FermatDiagonal, 1);
    CHECK(d1.g_label == "<2,1>");
    CHECK(d1.h_label == "<1,1>");
    CHECK(d1.h_word == "1");
    CHECK(d1.n == 1);

    CHECK_THROWS_AS(pair_record(PairFamily::Klein, 12), UnknownIndex);
    CHECK(label_order("<96,64>") == 96);
}

TEST_CASE("word evaluation") {
    TowerBuilder tb;
    TowerElem i = tb.adjoin_i();
    TowerPtr tw = tb.tower();
    ProjMatrix t(tw), u(tw);
    t.set(0, 0, tw->zero()); t.set(1, 1, tw->zero());
    t.set(0, 1, tw->from_rational(-1)); t.set(1, 0, tw->one());
    u.set(0, 0, i);
    std::map<char, ProjMatrix> gens = {{'t', t}, {'u', u}};
    ProjMatrix w = evaluate_word("t3utu", gens, tw);
    ProjMatrix expect = t * t * t * u * t * u;
    CHECK(w.proportional_to(expect));
    CHECK(evaluate_word("1", gens, tw).is_scalar());
}
