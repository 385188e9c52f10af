#pragma once

#include "quartwist/twistgen.hpp"

namespace quartwist {

struct CocycleResult {
    size_t galois_index = 0;
    std::optional<size_t> aut_index; // matched automorphism, if any
};

struct VerificationReport {
    bool iso_ok = false;
    std::optional<TowerElem> lambda;
    bool rational_ok = false;
    std::vector<int> offending_coeffs; // monomial indices above the base level
    bool cocycle_checked = false;
    bool cocycle_ok = false;
    std::vector<CocycleResult> cocycle;
    std::vector<std::string> notes;

    bool all_ok(bool require_cocycle) const {
        return iso_ok && rational_ok && (!require_cocycle || (cocycle_checked && cocycle_ok));
    }
};

// substitute(source, t.iso) proportional to t.curve?
std::pair<bool, std::optional<TowerElem>> check_isomorphism(const Twist& t,
                                                            const TernaryQuartic& source);

// curve coefficients at tower level <= t.base_level?
bool check_rationality(const Twist& t);

// xi_sigma = iso * sigma(iso)^(-1) lies in aut, for every attached sigma
std::vector<CocycleResult> check_cocycle(const Twist& t, const ProjGroup& aut);

// xi for one automorphism sigma (projective representative)
ProjMatrix cocycle_value(const Twist& t, const FieldAut& sigma);

VerificationReport verify_twist(const Twist& t);

// exhaustive alpha-search: some alpha in aut and rational N with
// alpha . iso1 = iso2 . N (projectively); complete since aut is finite
struct EquivalenceWitness {
    size_t aut_index;
    ProjMatrix N;
};
std::optional<EquivalenceWitness> check_equivalence(const Twist& t1, const Twist& t2,
                                                    const ProjGroup& aut);

// bounded search for c, d with (a + b sqrt m) = (c + d sqrt m)^4 (a2 +- b2 sqrt m);
// optional cross-check of the radical identities, never the source of truth
bool almost_diagonal_radical_identity(const Rational& a, const Rational& b, const Rational& m,
                                      const Rational& a2, const Rational& b2, long bound);

} // namespace quartwist
