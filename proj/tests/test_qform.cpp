#include <doctest.h>

#include <random>

#include "quartwist/qform.hpp"

using namespace quartwist;

namespace {

TernaryQuartic fermat(const TowerPtr& tw) {
    TernaryQuartic F(tw);
    F.set_coeff(4, 0, 0, tw->one());
    F.set_coeff(0, 4, 0, tw->one());
    F.set_coeff(0, 0, 4, tw->one());
    return F;
}

TowerElem rand_elem(const TowerPtr& tw, std::mt19937_64& rng, int spread = 3) {
    std::uniform_int_distribution<long> d(-spread, spread);
    std::vector<Rational> c(static_cast<size_t>(tw->degree()));
    for (auto& q : c) q = Rational(d(rng));
    return tw->from_coords(std::move(c));
}

ProjMatrix rand_invertible(const TowerPtr& tw, std::mt19937_64& rng) {
    while (true) {
        ProjMatrix M(tw);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) M.set(r, c, rand_elem(tw, rng, 2));
        if (!M.det().is_zero()) return M;
    }
}

TernaryQuartic rand_form(const TowerPtr& tw, std::mt19937_64& rng) {
    TernaryQuartic F(tw);
    for (size_t i = 0; i < 15; ++i)
        F.set_coeff(kQuarticMonomials[i][0], kQuarticMonomials[i][1], kQuarticMonomials[i][2],
                    rand_elem(tw, rng, 2));
    return F;
}

} // namespace

TEST_CASE("substitution basics") {
    TowerPtr q = Tower::rationals();
    TernaryQuartic F = fermat(q);
    ProjMatrix id(q);
    CHECK(substitute(F, id) == F);

    TowerBuilder tb;
    TowerElem r2 = tb.adjoin_radical(2, 4, "a");
    TowerElem r3 = tb.adjoin_radical(3, 4, "b");
    TowerPtr tw = tb.tower();
    ProjMatrix d(tw);
    d.set(0, 0, lift_prefix(r2, tw));
    d.set(1, 1, r3);
    d.set(2, 2, tw->one());
    TernaryQuartic out = substitute(fermat(tw), d);
    CHECK(out.coeff(4, 0, 0) == tw->from_rational(2));
    CHECK(out.coeff(0, 4, 0) == tw->from_rational(3));
    CHECK(out.coeff(0, 0, 4) == tw->one());
    CHECK(out.coeff(2, 2, 0).is_zero());
}

TEST_CASE("proportionality with deterministic pivot") {
    TowerPtr q = Tower::rationals();
    TernaryQuartic F = fermat(q);
    auto lam = proportionality(F * Rational(3), F);
    REQUIRE(lam.has_value());
    CHECK(*lam == q->from_rational(3));
    CHECK(proportionality(F, F).has_value());

    TernaryQuartic K(q); // x^3y + y^3z + z^3x: different support
    K.set_coeff(3, 1, 0, q->one());
    K.set_coeff(0, 3, 1, q->one());
    K.set_coeff(1, 0, 3, q->one());
    CHECK_FALSE(proportionality(F, K).has_value());
    CHECK_THROWS_AS(proportionality(F, TernaryQuartic(q)), ZeroForm);
}

TEST_CASE("substitution functoriality and evaluation consistency") {
    TowerBuilder tb;
    tb.adjoin_i();
    TowerPtr tw = tb.tower();
    std::mt19937_64 rng(11);
    for (int k = 0; k < 12; ++k) {
        TernaryQuartic F = rand_form(tw, rng);
        ProjMatrix M = rand_invertible(tw, rng), N = rand_invertible(tw, rng);
        CHECK(substitute(substitute(F, M), N) == substitute(F, M * N));
        std::array<TowerElem, 3> p = {rand_elem(tw, rng), rand_elem(tw, rng), rand_elem(tw, rng)};
        CHECK(evaluate(substitute(F, M), p) == evaluate(F, M.apply(p)));
    }
}

TEST_CASE("projective scaling multiplies substitution by c^4") {
    TowerPtr q = Tower::rationals();
    std::mt19937_64 rng(5);
    TernaryQuartic F = rand_form(q, rng);
    ProjMatrix M = rand_invertible(q, rng);
    Rational c(3, 2);
    ProjMatrix cM = M * q->from_rational(c);
    auto lam = proportionality(substitute(F, cM), substitute(F, M));
    REQUIRE(lam.has_value());
    CHECK(*lam == q->from_rational(c * c * c * c));
}

TEST_CASE("coeffs_in_level and evaluation") {
    TowerBuilder tb;
    TowerElem i = tb.adjoin_i();
    TowerPtr tw = tb.tower();
    TernaryQuartic F = fermat(tw);
    CHECK(coeffs_in_level(F, 0));
    F.set_coeff(4, 0, 0, i);
    CHECK_FALSE(coeffs_in_level(F, 0));
    CHECK(coeffs_in_level(F, 1));

    TernaryQuartic K(tw);
    K.set_coeff(3, 1, 0, tw->one());
    K.set_coeff(0, 3, 1, tw->one());
    K.set_coeff(1, 0, 3, tw->one());
    std::array<TowerElem, 3> p = {tw->one(), -tw->one(), tw->zero()};
    CHECK(evaluate(K, p) == tw->from_rational(-1));
    std::array<TowerElem, 3> e1 = {tw->one(), tw->zero(), tw->zero()};
    CHECK(evaluate(fermat(tw), e1) == tw->one());
}

TEST_CASE("matrix adjugate and normal form") {
    TowerBuilder tb;
    tb.adjoin_i();
    TowerPtr tw = tb.tower();
    std::mt19937_64 rng(3);
    ProjMatrix M = rand_invertible(tw, rng);
    ProjMatrix P = M * M.adjugate();
    CHECK(P.is_scalar());
    CHECK(M.proportional_to(M * tw->from_rational(7)));
    ProjMatrix N = M.projective_normal_form();
    bool found_one = false;
    for (const auto& e : N.entries()) {
        if (e.is_zero()) continue;
        CHECK(e == tw->one());
        found_one = true;
        break;
    }
    CHECK(found_one);
}
