#pragma once

#include "quartwist/projgroup.hpp"

namespace quartwist {

// Fixed models of the Klein quartic and the isomorphisms between them, all
// over the tower Q(zeta7, i). Conventions: eps = zeta+zeta^2+zeta^4 (a root of
// t^2+t+2, i.e. (-1+sqrt(-7))/2), and phi: A -> B means
// substitute(F_B, phi) proportional to F_A.
struct KleinModels {
    TowerPtr tower;      // Q(zeta7, i)
    TowerElem zeta;      // zeta7
    TowerElem eps;       // (-1+sqrt(-7))/2
    TowerElem sqrt_m7;   // 2*eps+1
    TernaryQuartic F_K, F_S4, F_S4_conj, F_0, F_D4;
    ProjMatrix phi1;     // C_S4 -> C_K
    ProjMatrix phi2;     // C_0  -> C_S4
    ProjMatrix phi3;     // C_S4 -> C_D4  (inverse of the commonly printed matrix)
    ProjMatrix phi0;     // = phi1*phi2 : C_0 -> C_K
};

const KleinModels& klein_models();

// Aut(C_K) generator matrices over a tower containing zeta7:
// gK = diag(z^4,z^2,z) (order 7), hK = 3-cycle (order 3), sK = the symmetric
// -1/sqrt(-7) matrix (order 2).
std::array<ProjMatrix, 3> klein_ck_generators(TowerBuilder& tb);

// F_K, F_S4, F_S4_conj, F_0, F_D4 over an arbitrary tower providing zeta7
// (only the ones expressible are meaningful; F_0 works over any tower).
TernaryQuartic klein_f0(const TowerPtr& tower);
TernaryQuartic klein_fs4(const TowerPtr& tower, const TowerElem& eps);

// Aut(C_0): 168 matrices with entries in Q(w), w^2 = -7; generators g, h, s
// (orders 7, 3, 2). Built once over the tower Q(w) and cached.
struct KleinAutC0 {
    TowerPtr tower;  // Q(w), w = sqrt(-7)
    ProjMatrix g, h, s;
    ProjGroup group;
};
const KleinAutC0& klein_aut_c0();

// Aut(C_S4-model with rational-coefficient shape): the 24 rational matrices
// generated by the 3-cycle and the order-4 rotation.
const ProjGroup& klein_aut_s4_rational();

// express an element of Q(zeta7) lying in Q(sqrt(-7)) as a + b*sqrt(-7)
std::optional<std::pair<Rational, Rational>> descend_to_sqrt_m7(const TowerElem& e,
                                                                const TowerElem& sqrt_m7);

// ------------------------------------------------------------------ row 11

// E, EE = (E|Ebar), FF = (Ebar^t / E^t), Phi (Vandermonde of the alphas),
// M (14x14 block matrix), and phi = EE*M*FF, per the PSL2(F7)-solution shape.
struct Psl14 {
    TowerPtr tower;
    std::vector<std::vector<TowerElem>> E;   // 3x7
    std::vector<std::vector<TowerElem>> EE;  // 3x14
    std::vector<std::vector<TowerElem>> FF;  // 14x3
    std::vector<std::vector<TowerElem>> M;   // 14x14
    ProjMatrix phi;                          // 3x3
};

// alphas: 7 pairwise distinct tower elements; conj: an involution of the tower
// extending sqrt(-7) |-> -sqrt(-7) (used to form the conjugate blocks).
Psl14 klein_psl_fourteen(const std::vector<TowerElem>& alphas, const FieldAut& conj);

// EE*FF = c*I3; returns c (the derived constant is 14)
TowerElem psl14_gram_scalar(const Psl14& p);

// frozen scaled-permutation data: for w in {g,h,s} of Aut(C_K),
// EE*blockdiag(P1,P2)*FF = c*w. perm entries are images: block1[j] = P1(j).
struct Psl14PermIdentity {
    char generator;            // 'g', 'h', 's'
    std::array<int, 7> p1, p2; // permutations of 0..6
    long c;                     // 14, 14, -7
};
const std::array<Psl14PermIdentity, 3>& psl14_perm_identities();

// verify EE*blockdiag(P1,P2)*FF == c*w exactly over Q(zeta7)
bool psl14_check_perm_identity(const Psl14PermIdentity& id);

} // namespace quartwist
