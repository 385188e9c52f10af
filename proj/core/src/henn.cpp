#include "quartwist/henn.hpp"

#include <algorithm>
#include <cctype>

#include "quartwist/cubic.hpp"
#include "quartwist/klein.hpp"

namespace quartwist {

HennCase henn_case_from_string(const std::string& s) {
    std::string t = s;
    if (t.rfind("case-", 0) == 0) t = t.substr(5);
    std::transform(t.begin(), t.end(), t.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    static const std::map<std::string, HennCase> m = {
        {"I", HennCase::I},     {"II", HennCase::II},   {"III", HennCase::III},
        {"IV", HennCase::IV},   {"V", HennCase::V},     {"VI", HennCase::VI},
        {"VII", HennCase::VII}, {"VIII", HennCase::VIII}, {"IX", HennCase::IX},
        {"X", HennCase::X},     {"XI", HennCase::XI},   {"XII", HennCase::XII}};
    auto it = m.find(t);
    if (it == m.end()) throw UnknownIndex("unknown Henn case " + s);
    return it->second;
}

std::string to_string(HennCase c) {
    static const char* names[] = {"I", "II", "III", "IV", "V", "VI",
                                  "VII", "VIII", "IX", "X", "XI", "XII"};
    return names[static_cast<int>(c) - 1];
}

const Rational& ParamMap::get(const std::string& k) const {
    auto it = scalars.find(k);
    if (it == scalars.end()) throw ParamError("missing parameter " + k);
    return it->second;
}
Rational ParamMap::get_or(const std::string& k, const Rational& dflt) const {
    auto it = scalars.find(k);
    return it == scalars.end() ? dflt : it->second;
}
const std::vector<Rational>& ParamMap::get_list(const std::string& k) const {
    auto it = lists.find(k);
    if (it == lists.end()) throw ParamError("missing parameter list " + k);
    return it->second;
}

const char* aut_label(HennCase c) {
    switch (c) {
        case HennCase::I: return "C2 = <2,1>";
        case HennCase::II: return "V4 = <4,2>";
        case HennCase::III: return "C3 = <3,1>";
        case HennCase::IV: return "S3 = <6,1>";
        case HennCase::V: return "D4 = <8,3>";
        case HennCase::VI: return "C6 = <6,2>";
        case HennCase::VII: return "<16,13>";
        case HennCase::VIII: return "S4 = <24,12>";
        case HennCase::IX: return "C9 = <9,1>";
        case HennCase::X: return "<48,33>";
        case HennCase::XI: return "<96,64>";
        case HennCase::XII: return "PSL2(F7) = <168,42>";
    }
    return "?";
}

long aut_order(HennCase c) {
    static const long orders[] = {2, 4, 3, 6, 8, 6, 16, 24, 9, 48, 96, 168};
    return orders[static_cast<int>(c) - 1];
}

// ------------------------------------------------------------- restrictions

RestrictionReport check_restrictions(HennCase c, const ParamMap& p, bool modified, bool strict) {
    RestrictionReport rep;
    auto violate = [&](const std::string& s) {
        rep.ok = false;
        rep.violations.push_back(s);
    };
    switch (c) {
        case HennCase::I: {
            auto& f1 = p.get_list("F1");
            if (f1.size() != 3) violate("F1 must have 3 coefficients (y^2, yz, z^2)");
            if (std::all_of(f1.begin(), f1.end(), [](const Rational& q) { return is_zero(q); }))
                violate("F1 != 0");
            if (p.get_list("F2").size() != 5) violate("F2 must have 5 coefficients");
            rep.skipped_irrational.push_back("not C-isomorphic to any model below");
            break;
        }
        case HennCase::II: {
            if (modified) {
                auto& cu = p.get_list("cubic");
                if (cu.size() != 3) violate("cubic must have 3 coefficients (c0, c1, c2)");
                else {
                    QPoly q{{cu[0], cu[1], cu[2], Rational(1)}};
                    if (is_zero(CubicData::discriminant(q)))
                        violate("cubic must be separable (alpha != beta != gamma)");
                }
            } else {
                Rational a = p.get("a"), b = p.get("b"), cc = p.get("c");
                if (a == b || a == -b) violate("a != +-b");
                if (b == cc || b == -cc) violate("b != +-c");
                if (cc == a || cc == -a) violate("c != +-a");
            }
            break;
        }
        case HennCase::III: {
            if (p.has_list("P")) {
                if (p.get_list("P").size() != 5) violate("P must have 5 coefficients");
                else if (is_zero(p.get_list("P")[0])) violate("P must have degree 4 in x");
            } else {
                Rational a = p.get("a"), b = p.get("b");
                if (is_zero(a) || is_zero(b) || a == 1 || b == 1 || a == b)
                    violate("roots 0, 1, a, b of P(x,1)/x must be distinct");
            }
            rep.skipped_irrational.push_back("not C-isomorphic to any model below");
            break;
        }
        case HennCase::IV: {
            Rational a = p.get("a"), b = p.get("b");
            if (a == b) violate("a != b");
            if (is_zero(a * b)) violate("ab != 0");
            break;
        }
        case HennCase::V: {
            Rational a = p.get("a"), b = p.get("b");
            if (modified) {
                if (is_zero(b)) violate("b != 0");
                Rational bad = Rational(4) * b * b * (Rational(2) * b + 1) * (Rational(2) * b + 1);
                if (a == bad) violate("a != 4b^2(2b+1)^2");
            } else {
                if (is_zero(b)) violate("b != 0");
                Rational om = Rational(1) - a;
                auto s = rational_nth_root(om, 2);
                if (s && !is_zero(*s)) {
                    Rational bound = Rational(2) * a / *s;
                    if (b == bound || b == -bound) violate("b != +-2a/sqrt(1-a)");
                } else {
                    rep.skipped_irrational.push_back("b != +-2a/sqrt(1-a) (sqrt(1-a) irrational over Q)");
                }
            }
            break;
        }
        case HennCase::VI: {
            if (!modified) {
                if (is_zero(p.get("a"))) violate("a != 0");
            }
            break;
        }
        case HennCase::VII: {
            Rational a = p.get("a");
            if (modified) {
                std::vector<Rational> bad = {Rational(1, 4), Rational(1, 36), Rational(-1, 12)};
                if (strict) bad.push_back(Rational(1, 12));
                for (auto& v : bad)
                    if (a == v || a == -v) violate("+-a != " + rational_str(v));
            } else {
                for (long v : {0L, 2L, 6L})
                    if (a == v || a == -v) violate("+-a != " + std::to_string(v));
                rep.skipped_irrational.push_back("+-a != 2*sqrt(-3) (irrational over Q)");
            }
            break;
        }
        case HennCase::VIII: {
            if (is_zero(p.get("a"))) violate("a != 0");
            rep.skipped_irrational.push_back("a != (-1+-sqrt(-7))/2 (irrational over Q)");
            break;
        }
        case HennCase::IX:
        case HennCase::X:
        case HennCase::XI:
        case HennCase::XII:
            break;
    }
    return rep;
}

// ------------------------------------------------------------------- models

namespace {

TernaryQuartic zero_form(TowerBuilder& tb) { return TernaryQuartic(tb.tower()); }

TernaryQuartic lift_form(const TernaryQuartic& f, TowerBuilder& tb) {
    return f.lifted(tb.tower());
}

} // namespace

TernaryQuartic representative_curve(HennCase c, const ParamMap& p, TowerBuilder& tb,
                                    bool modified) {
    auto rep = check_restrictions(c, p, modified);
    if (!rep.ok) throw RestrictionViolated("case " + to_string(c) + ": " + rep.violations.front());
    auto r = [&](const Rational& q) { return tb.rational(q); };

    switch (c) {
        case HennCase::I: {
            auto& f1 = p.get_list("F1");
            auto& f2 = p.get_list("F2");
            TernaryQuartic F = zero_form(tb);
            F.set_coeff(4, 0, 0, r(1));
            F.set_coeff(2, 2, 0, r(f1[0]));
            F.set_coeff(2, 1, 1, r(f1[1]));
            F.set_coeff(2, 0, 2, r(f1[2]));
            F.set_coeff(0, 4, 0, r(f2[0]));
            F.set_coeff(0, 3, 1, r(f2[1]));
            F.set_coeff(0, 2, 2, r(f2[2]));
            F.set_coeff(0, 1, 3, r(f2[3]));
            F.set_coeff(0, 0, 4, r(f2[4]));
            return F;
        }
        case HennCase::II: {
            if (!modified) {
                TernaryQuartic F = zero_form(tb);
                F.set_coeff(4, 0, 0, r(1));
                F.set_coeff(0, 4, 0, r(1));
                F.set_coeff(0, 0, 4, r(1));
                F.set_coeff(2, 2, 0, r(p.get("a")));
                F.set_coeff(0, 2, 2, r(p.get("b")));
                F.set_coeff(2, 0, 2, r(p.get("c")));
                return F;
            }
            auto& cu = p.get_list("cubic");
            QPoly q{{cu[0], cu[1], cu[2], Rational(1)}};
            CubicData cd = CubicData::make_in(tb, q);
            // F(X,Y,Z) = alpha X^4 + beta Y^4 + gamma Z^4 + X^2Y^2 + Y^2Z^2 + Z^2X^2,
            // composed with the Vandermonde rows (1, root, root^2)
            TernaryQuartic F(tb.tower());
            F.set_coeff(4, 0, 0, tb.lift(cd.roots[0]));
            F.set_coeff(0, 4, 0, tb.lift(cd.roots[1]));
            F.set_coeff(0, 0, 4, tb.lift(cd.roots[2]));
            F.set_coeff(2, 2, 0, r(1));
            F.set_coeff(0, 2, 2, r(1));
            F.set_coeff(2, 0, 2, r(1));
            ProjMatrix V(tb.tower());
            for (int i = 0; i < 3; ++i) {
                TowerElem ri = tb.lift(cd.roots[static_cast<size_t>(i)]);
                V.set(i, 0, tb.rational(1));
                V.set(i, 1, ri);
                V.set(i, 2, ri * ri);
            }
            return substitute(F, V);
        }
        case HennCase::III: {
            TernaryQuartic F = zero_form(tb);
            F.set_coeff(0, 1, 3, r(1)); // z^3 y
            std::vector<Rational> P;
            if (p.has_list("P")) {
                P = p.get_list("P");
            } else {
                // x(x-y)(x-ay)(x-by) = x^4 - (1+a+b)x^3y + (a+b+ab)x^2y^2 - ab x y^3
                Rational a = p.get("a"), b = p.get("b");
                P = {Rational(1), -(Rational(1) + a + b), a + b + a * b, -(a * b), Rational(0)};
            }
            F.set_coeff(4, 0, 0, r(P[0]));
            F.set_coeff(3, 1, 0, r(P[1]));
            F.set_coeff(2, 2, 0, r(P[2]));
            F.set_coeff(1, 3, 0, r(P[3]));
            F.set_coeff(0, 4, 0, r(P[4]));
            return F;
        }
        case HennCase::IV: {
            TernaryQuartic F = zero_form(tb);
            F.set_coeff(3, 0, 1, r(1));
            F.set_coeff(0, 3, 1, r(1));
            F.set_coeff(2, 2, 0, r(1));
            F.set_coeff(1, 1, 2, r(p.get("a")));
            F.set_coeff(0, 0, 4, r(p.get("b")));
            return F;
        }
        case HennCase::V: {
            TernaryQuartic F = zero_form(tb);
            if (!modified) {
                F.set_coeff(4, 0, 0, r(1));
                F.set_coeff(0, 4, 0, r(1));
                F.set_coeff(0, 0, 4, r(1));
                F.set_coeff(2, 2, 0, r(p.get("a")));
                F.set_coeff(1, 1, 2, r(p.get("b")));
            } else {
                F.set_coeff(4, 0, 0, r(p.get("a")));
                F.set_coeff(0, 4, 0, r(1));
                F.set_coeff(0, 0, 4, r(1));
                F.set_coeff(2, 2, 0, r(p.get("b")));
                F.set_coeff(1, 1, 2, r(1));
            }
            return F;
        }
        case HennCase::VI: {
            TernaryQuartic F = zero_form(tb);
            F.set_coeff(0, 1, 3, r(1));
            if (!modified) {
                F.set_coeff(4, 0, 0, r(1));
                F.set_coeff(2, 2, 0, r(p.get("a")));
            } else {
                F.set_coeff(4, 0, 0, r(p.get("a")));
                F.set_coeff(2, 2, 0, r(1));
            }
            F.set_coeff(0, 4, 0, r(1));
            return F;
        }
        case HennCase::VII: {
            TernaryQuartic F = zero_form(tb);
            F.set_coeff(4, 0, 0, modified ? r(p.get("a")) : r(1));
            F.set_coeff(0, 4, 0, r(1));
            F.set_coeff(0, 0, 4, r(1));
            F.set_coeff(2, 2, 0, modified ? r(1) : r(p.get("a")));
            return F;
        }
        case HennCase::VIII: {
            TernaryQuartic F = zero_form(tb);
            Rational a = p.get("a");
            F.set_coeff(4, 0, 0, r(1));
            F.set_coeff(0, 4, 0, r(1));
            F.set_coeff(0, 0, 4, r(1));
            F.set_coeff(2, 2, 0, r(a));
            F.set_coeff(0, 2, 2, r(a));
            F.set_coeff(2, 0, 2, r(a));
            return F;
        }
        case HennCase::IX: {
            TernaryQuartic F = zero_form(tb);
            F.set_coeff(4, 0, 0, r(1));
            F.set_coeff(1, 3, 0, r(1));
            F.set_coeff(0, 1, 3, r(1));
            return F;
        }
        case HennCase::X: {
            TernaryQuartic F = zero_form(tb);
            F.set_coeff(4, 0, 0, r(1));
            F.set_coeff(0, 4, 0, r(1));
            F.set_coeff(1, 0, 3, r(1));
            return F;
        }
        case HennCase::XI: {
            TernaryQuartic F = zero_form(tb);
            F.set_coeff(4, 0, 0, r(1));
            F.set_coeff(0, 4, 0, r(1));
            F.set_coeff(0, 0, 4, r(1));
            return F;
        }
        case HennCase::XII: {
            TernaryQuartic F = zero_form(tb);
            F.set_coeff(3, 1, 0, r(1));
            F.set_coeff(0, 3, 1, r(1));
            F.set_coeff(1, 0, 3, r(1));
            return F;
        }
    }
    throw UnknownIndex("bad case");
}

// --------------------------------------------------------------- generators

namespace {

ProjMatrix diag3(TowerBuilder& tb, const TowerElem& a, const TowerElem& b, const TowerElem& c) {
    ProjMatrix M(tb.tower());
    M.set(0, 0, tb.lift(a));
    M.set(1, 1, tb.lift(b));
    M.set(2, 2, tb.lift(c));
    return M;
}

ProjMatrix swap_xy(TowerBuilder& tb) {
    ProjMatrix M(tb.tower());
    M.set(0, 0, tb.rational(0));
    M.set(1, 1, tb.rational(0));
    M.set(0, 1, tb.rational(1));
    M.set(1, 0, tb.rational(1));
    return M;
}

ProjMatrix cycle_xyz(TowerBuilder& tb) {
    // (x,y,z) -> (y,z,x)
    ProjMatrix M(tb.tower(), {tb.rational(0), tb.rational(1), tb.rational(0),
                              tb.rational(0), tb.rational(0), tb.rational(1),
                              tb.rational(1), tb.rational(0), tb.rational(0)});
    return M;
}

} // namespace

std::vector<ProjMatrix> automorphism_generators(HennCase c, const ParamMap& p, TowerBuilder& tb,
                                                bool modified) {
    auto r = [&](long v) { return tb.rational(Rational(v)); };
    switch (c) {
        case HennCase::I:
            return {diag3(tb, r(-1), r(1), r(1))};
        case HennCase::II: {
            if (!modified)
                return {diag3(tb, r(-1), r(1), r(1)), diag3(tb, r(1), r(-1), r(1))};
            auto& cu = p.get_list("cubic");
            QPoly q{{cu[0], cu[1], cu[2], Rational(1)}};
            CubicData cd = CubicData::make_in(tb, q);
            ProjMatrix V(tb.tower());
            for (int i = 0; i < 3; ++i) {
                TowerElem ri = tb.lift(cd.roots[static_cast<size_t>(i)]);
                V.set(i, 0, tb.rational(1));
                V.set(i, 1, ri);
                V.set(i, 2, ri * ri);
            }
            ProjMatrix Vi = V.adjugate();
            std::vector<ProjMatrix> out;
            out.push_back(Vi * diag3(tb, r(-1), r(1), r(1)) * V);
            out.push_back(Vi * diag3(tb, r(1), r(-1), r(1)) * V);
            return out;
        }
        case HennCase::III: {
            TowerElem z3 = tb.adjoin_zeta(3);
            return {diag3(tb, tb.rational(1), tb.rational(1), z3)};
        }
        case HennCase::IV: {
            TowerElem z3 = tb.adjoin_zeta(3);
            return {swap_xy(tb), diag3(tb, z3, z3 * z3, tb.rational(1))};
        }
        case HennCase::V:
        case HennCase::VII: {
            TowerElem i = tb.adjoin_i();
            std::vector<ProjMatrix> out;
            if (c == HennCase::VII) out.push_back(diag3(tb, r(-1), r(1), r(1)));
            out.push_back(diag3(tb, i, -i, tb.rational(1)));
            if (!modified) {
                out.push_back(swap_xy(tb));
            } else {
                // corrected orientation: fixes a x^4 + y^4 + ... exactly
                TowerElem q4 = tb.adjoin_radical(p.get("a"), 4, "a4");
                ProjMatrix M(tb.tower());
                M.set(0, 0, tb.rational(0));
                M.set(1, 1, tb.rational(0));
                M.set(0, 1, tb.lift(q4).inverse());
                M.set(1, 0, tb.lift(q4));
                out.push_back(std::move(M));
            }
            if (c == HennCase::V && !modified) return {out[1], out[0]}; // swap, diag(i,-i,1)
            return out;
        }
        case HennCase::VI: {
            TowerElem z3 = tb.adjoin_zeta(3);
            return {diag3(tb, tb.rational(-1), tb.rational(1), z3)};
        }
        case HennCase::VIII:
            return {cycle_xyz(tb), [&] {
                        ProjMatrix t(tb.tower());
                        t.set(0, 0, tb.rational(0));
                        t.set(1, 1, tb.rational(0));
                        t.set(0, 1, tb.rational(-1));
                        t.set(1, 0, tb.rational(1));
                        return t;
                    }()};
        case HennCase::IX: {
            TowerElem z9 = tb.adjoin_zeta(9);
            return {diag3(tb, z9.pow(3), tb.rational(1), z9)};
        }
        case HennCase::X: {
            TowerElem i = tb.adjoin_i();
            TowerElem w = tb.adjoin_radical(-3, 2, "w3"); // sqrt(-3)
            i = tb.lift(i);
            TowerElem z3 = (w - tb.rational(1)) * Rational(1, 2);
            TowerElem s3 = -i * w; // sqrt(3)
            TowerElem third = tb.rational(Rational(1, 3));
            ProjMatrix g1(tb.tower());
            // corrected: the (2,0) entry carries the factor i as well
            g1.set(0, 0, i * z3 * z3 * s3 * third);
            g1.set(0, 2, i * z3 * s3 * third);
            g1.set(1, 1, z3 * z3);
            g1.set(2, 0, i * s3 * z3 * z3 * third * Rational(2));
            g1.set(2, 2, -i * z3 * s3 * third);
            ProjMatrix g2(tb.tower());
            g2.set(0, 0, z3 * s3 * third);
            g2.set(0, 2, z3 * z3 * s3 * third);
            g2.set(1, 1, z3);
            g2.set(2, 0, s3 * z3 * third * Rational(2));
            g2.set(2, 2, -s3 * z3 * z3 * third);
            return {g1, g2};
        }
        case HennCase::XI: {
            TowerElem i = tb.adjoin_i();
            ProjMatrix b2(tb.tower());
            b2.set(0, 0, tb.rational(0));
            b2.set(1, 1, tb.rational(0));
            b2.set(0, 1, -i);
            b2.set(1, 0, tb.rational(1));
            b2.set(2, 2, i);
            return {cycle_xyz(tb), b2};
        }
        case HennCase::XII: {
            auto gens = klein_ck_generators(tb);
            return {gens[2], gens[1], gens[0]}; // alpha1, alpha2, alpha3 order
        }
    }
    throw UnknownIndex("bad case");
}

CaseContext make_case_context(HennCase c, const ParamMap& p, bool modified) {
    CaseContext ctx;
    ctx.id = c;
    ctx.modified = modified;
    TowerBuilder tb;
    TernaryQuartic model = representative_curve(c, p, tb, modified);
    auto gens = automorphism_generators(c, p, tb, modified);
    ctx.tower = tb.tower();
    ctx.model = model.lifted(ctx.tower);
    for (auto& g : gens) ctx.generators.push_back(g.lifted(ctx.tower));
    ctx.aut_label = aut_label(c);
    ctx.aut_order = aut_order(c);
    return ctx;
}

ParamMap sample_params(HennCase c, bool modified) {
    ParamMap p;
    switch (c) {
        case HennCase::I:
            p.lists["F1"] = {Rational(1), Rational(0), Rational(2)};
            p.lists["F2"] = {Rational(1), Rational(0), Rational(0), Rational(0), Rational(3)};
            break;
        case HennCase::II:
            if (modified)
                p.lists["cubic"] = {Rational(-6), Rational(11), Rational(-6)}; // (t-1)(t-2)(t-3)
            else {
                p.scalars["a"] = 1;
                p.scalars["b"] = 2;
                p.scalars["c"] = 3;
            }
            break;
        case HennCase::III:
            p.scalars["a"] = 2;
            p.scalars["b"] = 3;
            break;
        case HennCase::IV:
            p.scalars["a"] = 1;
            p.scalars["b"] = 2;
            break;
        case HennCase::V:
            p.scalars["a"] = 2;
            p.scalars["b"] = 1;
            break;
        case HennCase::VI:
            p.scalars["a"] = 1;
            break;
        case HennCase::VII:
            p.scalars["a"] = 1;
            break;
        case HennCase::VIII:
            p.scalars["a"] = 1;
            break;
        default:
            break;
    }
    return p;
}

// -------------------------------------------------------------- pair tables

PairFamily pair_family_from_string(const std::string& s) {
    if (s == "fermat-diagonal") return PairFamily::FermatDiagonal;
    if (s == "fermat-almost-diagonal") return PairFamily::FermatAlmostDiagonal;
    if (s == "fermat-nondiagonal") return PairFamily::FermatNonDiagonal;
    if (s == "klein") return PairFamily::Klein;
    if (s == "klein-sqrt7") return PairFamily::KleinSqrt7;
    throw UnknownIndex("unknown pair family " + s);
}

std::string to_string(PairFamily f) {
    switch (f) {
        case PairFamily::FermatDiagonal: return "fermat-diagonal";
        case PairFamily::FermatAlmostDiagonal: return "fermat-almost-diagonal";
        case PairFamily::FermatNonDiagonal: return "fermat-nondiagonal";
        case PairFamily::Klein: return "klein";
        case PairFamily::KleinSqrt7: return "klein-sqrt7";
    }
    return "?";
}

namespace {

PairRecord rec(PairFamily f, int idx, const char* g, const char* h, const char* gens,
               const char* hw, int n, const char* disc = "", int rp = 0) {
    PairRecord r;
    r.family = f;
    r.index = idx;
    r.g_label = g;
    r.h_label = h;
    std::string s = gens;
    size_t pos = 0;
    while (pos != std::string::npos) {
        size_t comma = s.find(',', pos);
        r.h_gen_words.push_back(s.substr(pos, comma == std::string::npos ? comma : comma - pos));
        pos = comma == std::string::npos ? comma : comma + 1;
    }
    r.h_word = hw;
    r.n = n;
    r.disc_class = disc;
    r.root_power = rp;
    return r;
}

} // namespace

const std::vector<PairRecord>& pair_table(PairFamily f) {
    using PF = PairFamily;
    static const std::vector<PairRecord> diagonal = {
        rec(PF::FermatDiagonal, 1, "<2,1>", "<1,1>", "1", "1", 1),
        rec(PF::FermatDiagonal, 2, "<2,1>", "<1,1>", "1", "t3utu", 1),
        rec(PF::FermatDiagonal, 3, "<4,2>", "<2,1>", "t2", "1", 1),
        rec(PF::FermatDiagonal, 4, "<4,2>", "<2,1>", "t2", "u", 1),
        rec(PF::FermatDiagonal, 5, "<4,2>", "<2,1>", "t2", "t3utu", 1),
        rec(PF::FermatDiagonal, 6, "<8,5>", "<4,2>", "t2,u2", "1", 1),
        rec(PF::FermatDiagonal, 7, "<8,5>", "<4,2>", "t2,u2", "u", 3),
        rec(PF::FermatDiagonal, 8, "<8,3>", "<4,1>", "t3utu", "1", 2),
        rec(PF::FermatDiagonal, 9, "<8,3>", "<4,1>", "t3utu", "u", 2),
        rec(PF::FermatDiagonal, 10, "<8,3>", "<4,1>", "t3utu3", "1", 2),
        rec(PF::FermatDiagonal, 11, "<8,3>", "<4,1>", "t3utu3", "u", 2),
        rec(PF::FermatDiagonal, 12, "<16,11>", "<8,2>", "t3utu,u2", "1", 8),
        rec(PF::FermatDiagonal, 13, "<16,11>", "<8,2>", "t3utu,u2", "u", 16),
        rec(PF::FermatDiagonal, 14, "<32,34>", "<16,2>", "u,t3ut", "1", 64),
    };
    static const std::vector<PairRecord> almost = {
        rec(PF::FermatAlmostDiagonal, 1, "<2,1>", "<1,1>", "1", "u2t", 1),
        rec(PF::FermatAlmostDiagonal, 2, "<4,2>", "<2,1>", "t2", "u2t", 1),
        rec(PF::FermatAlmostDiagonal, 3, "<4,1>", "<2,1>", "t2", "t", 1),
        rec(PF::FermatAlmostDiagonal, 4, "<4,2>", "<2,1>", "u2t", "1", 2),
        rec(PF::FermatAlmostDiagonal, 5, "<4,2>", "<2,1>", "u2t", "t3utu", 2),
        rec(PF::FermatAlmostDiagonal, 6, "<8,4>", "<4,1>", "t3utu", "t", 2),
        rec(PF::FermatAlmostDiagonal, 7, "<8,1>", "<4,1>", "t3utu3", "tu", 1),
        rec(PF::FermatAlmostDiagonal, 8, "<8,3>", "<4,2>", "t2,u2", "u2t", 1),
        rec(PF::FermatAlmostDiagonal, 9, "<8,2>", "<4,1>", "t", "1", 1),
        rec(PF::FermatAlmostDiagonal, 10, "<8,5>", "<4,2>", "u2t,t2", "1", 6),
        rec(PF::FermatAlmostDiagonal, 11, "<8,2>", "<4,1>", "t3utu3", "u2t", 1),
        rec(PF::FermatAlmostDiagonal, 12, "<8,3>", "<4,1>", "t3utu", "u2t", 4),
        rec(PF::FermatAlmostDiagonal, 13, "<8,5>", "<4,2>", "u2t,t2", "t3utu", 6),
        rec(PF::FermatAlmostDiagonal, 14, "<8,3>", "<4,1>", "t", "t3utu3", 2),
        rec(PF::FermatAlmostDiagonal, 15, "<8,2>", "<4,1>", "t", "t3utu", 1),
        rec(PF::FermatAlmostDiagonal, 16, "<8,3>", "<4,2>", "u2t,t2", "u2", 1),
        rec(PF::FermatAlmostDiagonal, 17, "<8,3>", "<4,2>", "u2t,t2", "t3utu3", 1),
        rec(PF::FermatAlmostDiagonal, 18, "<8,3>", "<4,1>", "t", "u2", 2),
        rec(PF::FermatAlmostDiagonal, 19, "<16,6>", "<8,2>", "t3utu,u2", "ut", 2),
        rec(PF::FermatAlmostDiagonal, 20, "<16,13>", "<8,2>", "t3utu,u2", "u2t", 2),
        rec(PF::FermatAlmostDiagonal, 21, "<16,8>", "<8,1>", "u2tu", "u", 2),
        rec(PF::FermatAlmostDiagonal, 22, "<16,7>", "<8,3>", "t3utu3,u2t", "u", 2),
        rec(PF::FermatAlmostDiagonal, 23, "<16,8>", "<8,4>", "t3utu3,t", "u", 2),
        rec(PF::FermatAlmostDiagonal, 24, "<16,11>", "<8,3>", "t,u2", "1", 2),
        rec(PF::FermatAlmostDiagonal, 25, "<16,13>", "<8,4>", "t3utu3,t", "1", 6),
        rec(PF::FermatAlmostDiagonal, 26, "<16,13>", "<8,2>", "t,utu", "1", 4),
        rec(PF::FermatAlmostDiagonal, 27, "<16,11>", "<8,2>", "t,utu", "u2", 8),
        rec(PF::FermatAlmostDiagonal, 28, "<16,11>", "<8,3>", "t,u2", "utu", 2),
        rec(PF::FermatAlmostDiagonal, 29, "<16,7>", "<8,1>", "tu2tut", "tutu2", 4),
        rec(PF::FermatAlmostDiagonal, 30, "<16,11>", "<8,3>", "t3utu3,u2t", "1", 2),
        rec(PF::FermatAlmostDiagonal, 31, "<32,43>", "<16,6>", "tu2tut,u2", "u", 4),
        rec(PF::FermatAlmostDiagonal, 32, "<32,11>", "<16,2>", "u,t3ut", "u2t", 4),
        rec(PF::FermatAlmostDiagonal, 33, "<32,43>", "<16,13>", "t3utu,u2,t", "u", 4),
        rec(PF::FermatAlmostDiagonal, 34, "<32,7>", "<16,6>", "tu2tut,u2", "1", 4),
        rec(PF::FermatAlmostDiagonal, 35, "<32,49>", "<16,13>", "utu,u2,t", "1", 12),
        rec(PF::FermatAlmostDiagonal, 36, "<64,134>", "<32,11>", "t,u", "1", 8),
    };
    static const std::vector<PairRecord> nondiag = {
        rec(PF::FermatNonDiagonal, 1, "<6,1>", "<3,1>", "s", "u2t", 1, "-1", 1),
        rec(PF::FermatNonDiagonal, 2, "<6,2>", "<3,1>", "s", "1", 1, "1", 1),
        rec(PF::FermatNonDiagonal, 3, "<12,4>", "<6,1>", "s,u2t", "1", 1, "!=+-1", 1),
        rec(PF::FermatNonDiagonal, 4, "<24,12>", "<12,3>", "s,u2", "u2t", 1, "-1", 2),
        rec(PF::FermatNonDiagonal, 5, "<24,13>", "<12,3>", "s,u2", "1", 1, "1", 2),
        rec(PF::FermatNonDiagonal, 6, "<48,48>", "<24,12>", "s,t", "1", 1, "!=+-1", 2),
        rec(PF::FermatNonDiagonal, 7, "<96,64>", "<48,3>", "s,u,t3ut", "u2t", 2, "-1", 4),
        rec(PF::FermatNonDiagonal, 8, "<96,72>", "<48,3>", "s,u,t3ut", "1", 4, "1", 4),
        rec(PF::FermatNonDiagonal, 9, "<192,956>", "<96,64>", "s,t,u", "1", 2, "!=+-1", 4),
    };
    static const std::vector<PairRecord> klein = {
        rec(PF::Klein, 1, "<2,1>", "<1,1>", "1", "1", 1),
        rec(PF::Klein, 2, "<4,2>", "<2,1>", "s", "1", 1),
        rec(PF::Klein, 3, "<6,1>", "<3,1>", "h", "s", 1),
        rec(PF::Klein, 4, "<6,2>", "<3,1>", "h", "1", 1),
        rec(PF::Klein, 5, "<14,1>", "<7,1>", "g", "1", 2),
        rec(PF::Klein, 6, "<8,1>", "<4,1>", "g2sg3sg2", "g2sg5", 2),
        rec(PF::Klein, 7, "<8,3>", "<4,1>", "g2sg3sg2", "1", 2),
        rec(PF::Klein, 8, "<12,4>", "<6,1>", "h,s", "1", 1),
        rec(PF::Klein, 9, "<42,1>", "<21,1>", "g,h", "1", 2),
        rec(PF::Klein, 10, "<16,7>", "<8,3>", "g2sg3sg2,g2sg5", "1", 4),
        rec(PF::Klein, 11, "<336,208>", "<168,42>", "s,g,h", "1", 2),
    };
    static const std::vector<PairRecord> sqrt7 = {
        rec(PF::KleinSqrt7, 1, "<1,1>", "<1,1>", "1", "1", 1),
        rec(PF::KleinSqrt7, 2, "<2,1>", "<2,1>", "s", "1", 1),
        rec(PF::KleinSqrt7, 3, "<3,1>", "<3,1>", "h", "1", 1),
        rec(PF::KleinSqrt7, 4, "<7,1>", "<7,1>", "g", "1", 2),
        rec(PF::KleinSqrt7, 5, "<4,2>", "<4,2>", "hsh2,g2sg5", "1", 1),
        rec(PF::KleinSqrt7, 6, "<4,2>", "<4,2>", "hsh2,g5sg2", "1", 1),
        rec(PF::KleinSqrt7, 7, "<4,1>", "<4,1>", "g2sg3sg2", "1", 1),
        rec(PF::KleinSqrt7, 8, "<6,1>", "<6,1>", "h,s", "1", 1),
        rec(PF::KleinSqrt7, 9, "<21,1>", "<21,1>", "g,h", "1", 2),
        rec(PF::KleinSqrt7, 10, "<8,3>", "<8,3>", "g2sg3sg2,g2sg5", "1", 2),
        rec(PF::KleinSqrt7, 11, "<168,42>", "<168,42>", "s,g,h", "1", 2),
        rec(PF::KleinSqrt7, 12, "<12,3>", "<12,3>", "h,sg2sg5", "1", 1),
        rec(PF::KleinSqrt7, 13, "<12,3>", "<12,3>", "h,sg5sg2", "1", 1),
        rec(PF::KleinSqrt7, 14, "<24,12>", "<24,12>", "s,h,g2sg5", "1", 1),
        rec(PF::KleinSqrt7, 15, "<24,12>", "<24,12>", "s,h,g5sg2", "1", 1),
    };
    switch (f) {
        case PF::FermatDiagonal: return diagonal;
        case PF::FermatAlmostDiagonal: return almost;
        case PF::FermatNonDiagonal: return nondiag;
        case PF::Klein: return klein;
        case PF::KleinSqrt7: return sqrt7;
    }
    throw UnknownIndex("bad family");
}

const PairRecord& pair_record(PairFamily f, int index) {
    const auto& t = pair_table(f);
    for (const auto& r : t)
        if (r.index == index) return r;
    throw UnknownIndex("no row " + std::to_string(index) + " in " + to_string(f));
}

long label_order(const std::string& gap_label) {
    auto lt = gap_label.find('<');
    auto comma = gap_label.find(',', lt);
    if (lt == std::string::npos || comma == std::string::npos)
        throw UnknownIndex("bad GAP label " + gap_label);
    return std::stol(gap_label.substr(lt + 1, comma - lt - 1));
}

ProjMatrix evaluate_word(const std::string& word, const std::map<char, ProjMatrix>& gens,
                         const TowerPtr& tower) {
    ProjMatrix acc(tower);
    size_t i = 0;
    while (i < word.size()) {
        char c = word[i++];
        if (c == '1' || c == ' ') continue;
        auto it = gens.find(c);
        if (it == gens.end()) throw UnknownIndex(std::string("unknown generator letter ") + c);
        long e = 1;
        if (i < word.size() && std::isdigit(static_cast<unsigned char>(word[i])))
            e = word[i++] - '0';
        ProjMatrix p = it->second;
        for (long k = 1; k < e; ++k) p = p * it->second;
        acc = acc * p;
    }
    return acc;
}

} // namespace quartwist
