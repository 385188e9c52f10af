#include <doctest.h>

#include "quartwist/henn.hpp"
#include "quartwist/projgroup.hpp"

using namespace quartwist;

TEST_CASE("closure of small diagonal groups") {
    TowerPtr q = Tower::rationals();
    ProjMatrix m(q);
    m.set(0, 0, q->from_rational(-1));
    ProjGroup G = generate_group({m});
    CHECK(G.size() == 2);
    GroupFingerprint fp = fingerprint(G);
    CHECK(fp.order == 2);
    CHECK(fp.abelian);
    CHECK(fp.order_stats.at(1) == 1);
    CHECK(fp.order_stats.at(2) == 1);
    CHECK(identify(fp) == "C2 = <2,1>");
}

TEST_CASE("fermat group has order 96 and the right fingerprint") {
    TowerBuilder tb;
    TowerElem i = tb.adjoin_i();
    TowerPtr tw = tb.tower();
    ProjMatrix s(tw), t(tw), u(tw);
    s.set(0, 0, tw->zero()); s.set(1, 1, tw->zero()); s.set(2, 2, tw->zero());
    s.set(0, 2, tw->one()); s.set(1, 0, tw->one()); s.set(2, 1, tw->one());
    t.set(0, 0, tw->zero()); t.set(1, 1, tw->zero());
    t.set(0, 1, tw->from_rational(-1)); t.set(1, 0, tw->one());
    u.set(0, 0, i);
    ProjGroup G = generate_group({s, t, u}, 200);
    CHECK(G.size() == 96);
    CHECK(identify(fingerprint(G)) == "<96,64>");

    // diag(-i,1,1) = u^3 is in the group, zeta_3 scaling is not
    ProjMatrix probe(tw);
    probe.set(0, 0, -i);
    CHECK(contains(G, probe).has_value());

    // membership of the identity
    CHECK(contains(G, ProjMatrix(tw)) == 0);
}

TEST_CASE("cap exceeded on bad generators") {
    TowerPtr q = Tower::rationals();
    ProjMatrix m(q);
    m.set(0, 0, q->from_rational(2)); // infinite projective order together with a shear
    ProjMatrix n(q);
    n.set(0, 1, q->one());
    CHECK_THROWS_AS(generate_group({m, n}, 50), CapExceeded);
}

TEST_CASE("fingerprint invariance under conjugation") {
    TowerBuilder tb;
    tb.adjoin_zeta(3);
    TowerPtr tw = tb.tower();
    TowerElem z3 = tw->generator(0);
    ProjMatrix sw(tw), d(tw);
    sw.set(0, 0, tw->zero()); sw.set(1, 1, tw->zero());
    sw.set(0, 1, tw->one()); sw.set(1, 0, tw->one());
    d.set(0, 0, z3); d.set(1, 1, z3 * z3);
    ProjGroup G = generate_group({sw, d});
    CHECK(G.size() == 6);
    GroupFingerprint f1 = fingerprint(G);
    CHECK(identify(f1) == "S3 = <6,1>");
    // conjugate both generators by a fixed invertible matrix
    ProjMatrix C(tw);
    C.set(0, 0, tw->one()); C.set(0, 1, tw->from_rational(2));
    C.set(1, 1, tw->one()); C.set(2, 2, tw->one()); C.set(2, 0, tw->from_rational(1));
    ProjMatrix Ci = C.adjugate();
    ProjGroup G2 = generate_group({Ci * sw * C, Ci * d * C});
    CHECK(fingerprint(G2) == f1);
}

TEST_CASE("stored fingerprint table is injective") { CHECK(fingerprint_table_injective()); }

TEST_CASE("identify returns unknown for unseen groups") {
    GroupFingerprint fp;
    fp.order = 5;
    fp.abelian = true;
    fp.order_stats = {{1, 1}, {5, 4}};
    fp.center_size = 5;
    CHECK(identify(fp) == "unknown");
}
