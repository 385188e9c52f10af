#include <doctest.h>

#include "quartwist/json_io.hpp"

using namespace quartwist;

TEST_CASE("tower spec round-trips and matches the documented encoding") {
    TowerBuilder tb;
    tb.adjoin_i();
    tb.adjoin_radical(2, 4, "r");
    Json j = tower_spec_to_json(tb.tower()->spec());
    CHECK(j["levels"][0]["gen"] == "i");
    CHECK(j["levels"][0]["modulus"] == Json::parse(R"([["1"],["0"],["1"]])"));
    CHECK(j["levels"][0]["annotation"] == "cyclotomic(4)");
    CHECK(j["levels"][1]["annotation"] == "radical(2,4)");
    TowerSpec back = tower_spec_from_json(j);
    CHECK(back == tb.tower()->spec());
}

TEST_CASE("element round-trip") {
    TowerBuilder tb;
    TowerElem i = tb.adjoin_i();
    TowerElem r = tb.adjoin_radical(2, 4, "r");
    i = tb.lift(i);
    TowerElem x = i * Rational(3, 2) + r * r - tb.rational(Rational(7, 5));
    Json j = elem_to_json(x);
    TowerElem back = elem_from_json(j, tb.tower());
    CHECK(back == x);
}

TEST_CASE("twist round-trip preserves verification") {
    Twist t = fermat_diagonal(2, 3);
    Json j = twist_to_json(t);
    Twist back = twist_from_json(j);
    CHECK(back.source_case == t.source_case);
    CHECK(back.tower->same_as(*t.tower));
    CHECK(back.curve == t.curve.lifted(back.tower));
    CHECK(back.galois.size() == t.galois.size());
    VerificationReport rep = verify_twist(back);
    CHECK(rep.iso_ok);
    CHECK(rep.rational_ok);
    CHECK(rep.cocycle_ok);
    // byte stability
    CHECK(twist_to_json(back).dump() == j.dump());
}

TEST_CASE("case twist round-trip (curve/twist parameter split)") {
    ParamMap cp;
    cp.scalars["a"] = 1;
    cp.scalars["b"] = 2;
    ParamMap tp;
    tp.scalars["m"] = 1;
    tp.scalars["a1"] = 3;
    tp.scalars["a2"] = 1;
    tp.scalars["q"] = 2;
    Twist t = henn_case_twist(HennCase::IV, cp, tp);
    Twist back = twist_from_json(twist_to_json(t));
    CHECK(back.curve_params.get("a") == Rational(1));
    CHECK(back.twist_params.get("q") == Rational(2));
    CHECK(verify_twist(back).iso_ok);
}

TEST_CASE("sqrt7 twist keeps its base level through JSON") {
    ParamMap p;
    p.scalars["a"] = 2;
    p.scalars["b"] = 3;
    Twist t = klein_sqrt7_twist(5, p);
    Json j = twist_to_json(t);
    CHECK(j["base_level"] == 1);
    Twist back = twist_from_json(j);
    CHECK(back.base_level == 1);
    CHECK(verify_twist(back).rational_ok);
}

TEST_CASE("report and fingerprint serialization") {
    Twist t = fermat_diagonal(1, 2);
    VerificationReport rep = verify_twist(t);
    Json j = report_to_json(rep);
    CHECK(j["iso_ok"] == true);
    CHECK(j["rational_ok"] == true);
    GroupFingerprint fp = fingerprint(twist_source_aut(t));
    Json jf = fingerprint_to_json(fp);
    CHECK(jf["order"] == 96);
    CHECK(jf["abelian"] == false);
    CHECK(jf["stats"]["1"] == 1);
}

TEST_CASE("pair record serialization") {
    Json j = pair_record_to_json(pair_record(PairFamily::FermatNonDiagonal, 9));
    CHECK(j["G"] == "<192,956>");
    CHECK(j["H"] == "<96,64>");
    CHECK(j["n"] == 2);
    CHECK(j["disc_mod_squares"] == "!=+-1");
    CHECK(j["root_power"] == 4);
}

TEST_CASE("malformed input errors") {
    CHECK_THROWS_AS(tower_spec_from_json(Json::parse("{}")), IoError);
    TowerBuilder tb;
    tb.adjoin_i();
    CHECK_THROWS_AS(elem_from_json(Json::parse(R"([["1"]])"), tb.tower()), IoError);
    CHECK_THROWS_AS(elem_from_json(Json::parse(R"([["1"],["x"]])"), tb.tower()), IoError);
}
