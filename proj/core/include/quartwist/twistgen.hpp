#pragma once

#include "quartwist/cubic.hpp"
#include "quartwist/henn.hpp"
#include "quartwist/klein.hpp"

namespace quartwist {

// A twist package: rational curve, the isomorphism onto the source model over
// the tower L, and (when constructible) generators of Gal(L/k).
// substitute(source_curve, iso) is proportional to curve.
struct Twist {
    std::string source_case; // "case-i".."case-x", "fermat-*", "klein-row-N", "klein-sqrt7-N"
    ParamMap curve_params;
    ParamMap twist_params;
    TowerPtr tower;
    TernaryQuartic curve;
    ProjMatrix iso;
    std::vector<FieldAut> galois;
    int base_level = 0;          // tower level index of the base field k (0 = Q)
    TernaryQuartic source_curve; // convenience copy (not serialized)
};

// rebuild the source model of a (possibly deserialized) twist over its tower
TernaryQuartic twist_source_form(const Twist& t);

// automorphism group of the twist's source model over (a prefix of) t.tower
ProjGroup twist_source_aut(const Twist& t);

// ----------------------------------------------------------------- Fermat

// a x^4 + b y^4 + z^4 with iso diag(a^(1/4), b^(1/4), 1) over Q(i, a^(1/4), b^(1/4)).
// When `ambient` is supplied the radicals are resolved inside it.
Twist fermat_diagonal(const Rational& a, const Rational& b, TowerBuilder* ambient = nullptr);

// 2a x^4 + 8bm x^3 y + 12ma x^2 y^2 + 8bm^2 x y^3 + 2am^2 y^4 + z^4
Twist fermat_almost_diagonal(const Rational& a, const Rational& b, const Rational& m);
// variant with caller-resolved radicals alpha^4 = a+b sqrt(m), gamma^4 = a-b sqrt(m)
Twist fermat_almost_diagonal_in(TowerBuilder& tb, const Rational& a, const Rational& b,
                                const Rational& m, const TowerElem& sqrt_m,
                                const TowerElem& alpha, const TowerElem& gamma);

// Variants of the non-diagonal family (the root transforms of the theorem).
enum class NonDiagVariant { Primary, Cubes, Ratios, RatioCubes };

// Binomial-formula curve: sum C(4,j) C(4-j,k) S_{e_n+k+2l} x^j y^k z^l.
TernaryQuartic fermat_nondiagonal_curve(const CubicData& P, unsigned n, NonDiagVariant v,
                                        const TowerPtr& tower);
Twist fermat_nondiagonal(const QPoly& cubic, unsigned n,
                         NonDiagVariant v = NonDiagVariant::Primary);

// Equivalence criterion for diagonal twists: some m makes {a,b,1} and
// {m a2, m b2, m} congruent as multisets mod Q*^4.
bool fermat_diagonal_equivalent(const Rational& a, const Rational& b, const Rational& a2,
                                const Rational& b2);

// ------------------------------------------------------------ Henn cases I-X

Twist henn_case_twist(HennCase c, const ParamMap& curve_params, const ParamMap& twist_params);

// --------------------------------------------------------------- Klein rows

// rows 1..11 of the (G,H)-solution table (6 and 10 are defined over
// k = Q(i, sqrt 2) resp. Q(sqrt 2) and carry base_level > 0)
Twist klein_twist(int row, const ParamMap& params, int variant = 0);

// sqrt(-7)-in-k cases 5, 6, 12..15 (over k = Q(sqrt(-7)), base_level 1)
Twist klein_sqrt7_twist(int case_index, const ParamMap& params);

// Validated single level automorphism candidates for the standard tower
// shapes (cyclotomic conjugations, radical root-of-unity scalings); levels
// below `fixed_below` are held fixed (used for base fields k larger than Q).
std::vector<FieldAut> standard_tower_automorphisms(const TowerPtr& tw, size_t fixed_below = 0);

// cubic 3-cycle / conjugation extended across sqrt-Vandermonde levels sa, sb
// (with sc = sprod/(sa sb)); validated candidates appended to t.galois
void attach_sqrt_vandermonde_galois(Twist& t, const CubicData& cd, const TowerElem& sprod);

// ------------------------------------------------------- parameter searches

// bounded brute-force helpers for admissible twist parameters (test tooling)
std::optional<std::array<Rational, 4>> search_case_iv_params(long bound);  // a1^2-m a2^2=q^3
std::optional<std::array<Rational, 4>> search_case_v_params(const Rational& a, long bound);
std::optional<std::array<Rational, 4>> search_klein_row7_params(long bound); // a^2-mb^2=-7mq^2

} // namespace quartwist
