#include "quartwist/verify.hpp"

namespace quartwist {

std::pair<bool, std::optional<TowerElem>> check_isomorphism(const Twist& t,
                                                            const TernaryQuartic& source) {
    if (!source.tower()->same_as(*t.tower)) throw TowerMismatch("source form in a wrong tower");
    auto lam = proportionality(substitute(source, t.iso), t.curve);
    if (!lam) return {false, std::nullopt};
    return {true, lam};
}

bool check_rationality(const Twist& t) { return coeffs_in_level(t.curve, t.base_level); }

ProjMatrix cocycle_value(const Twist& t, const FieldAut& sigma) {
    ProjMatrix sphi(t.tower);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) sphi.set(r, c, sigma.apply(t.iso.at(r, c)));
    return (t.iso * sphi.adjugate()).projective_normal_form();
}

std::vector<CocycleResult> check_cocycle(const Twist& t, const ProjGroup& aut) {
    if (t.galois.empty()) throw MissingGaloisData("twist carries no Galois generators");
    std::vector<CocycleResult> out;
    for (size_t i = 0; i < t.galois.size(); ++i) {
        CocycleResult r;
        r.galois_index = i;
        r.aut_index = contains(aut, cocycle_value(t, t.galois[i]));
        out.push_back(std::move(r));
    }
    return out;
}

VerificationReport verify_twist(const Twist& t) {
    VerificationReport rep;
    TernaryQuartic source =
        t.source_curve.tower() ? t.source_curve : twist_source_form(t);
    auto [ok, lam] = check_isomorphism(t, source);
    rep.iso_ok = ok;
    rep.lambda = lam;
    rep.rational_ok = check_rationality(t);
    if (!rep.rational_ok)
        for (size_t i = 0; i < 15; ++i)
            if (t.curve.coeff(i).level_of() > t.base_level)
                rep.offending_coeffs.push_back(static_cast<int>(i));
    if (!t.galois.empty()) {
        rep.cocycle_checked = true;
        ProjGroup aut = twist_source_aut(t);
        rep.cocycle = check_cocycle(t, aut);
        rep.cocycle_ok = true;
        for (auto& c : rep.cocycle)
            if (!c.aut_index) rep.cocycle_ok = false;
    } else {
        rep.notes.push_back("no Galois data attached; cocycle check skipped");
    }
    return rep;
}

std::optional<EquivalenceWitness> check_equivalence(const Twist& t1, const Twist& t2,
                                                    const ProjGroup& aut) {
    if (!t1.tower->same_as(*t2.tower))
        throw CommonTowerRequired("twists live in different towers");
    // the automorphism group may live over an extension of the twists' tower
    // (extra constants adjoined for the generators); work there if so
    TowerPtr tw = t1.tower;
    ProjMatrix iso1 = t1.iso, iso2 = t2.iso;
    if (!aut.tower()->same_as(*tw)) {
        if (tw->prefix_of(*aut.tower())) {
            tw = aut.tower();
            iso1 = iso1.lifted(tw);
            iso2 = iso2.lifted(tw);
        } else if (!aut.tower()->prefix_of(*tw)) {
            throw CommonTowerRequired("automorphism group tower is incompatible");
        }
    }
    ProjMatrix adj2 = iso2.adjugate();
    for (size_t ai = 0; ai < aut.size(); ++ai) {
        ProjMatrix alpha = aut.element(ai).tower()->same_as(*tw)
                               ? aut.element(ai)
                               : aut.element(ai).lifted(tw);
        // N = iso2^{-1} alpha iso1 up to scalar; compute column by column and
        // bail out as soon as a ratio leaves the base field
        ProjMatrix A = adj2 * (alpha * iso1);
        // projective rationality: every entry a rational multiple of the pivot
        const TowerElem* pivot = nullptr;
        bool ok = true;
        for (int idx = 0; idx < 9 && ok; ++idx) {
            const TowerElem& e = A.entries()[static_cast<size_t>(idx)];
            if (!pivot) {
                if (!e.is_zero()) pivot = &e;
                continue;
            }
            if (e.is_zero()) continue;
            // e/pivot rational <=> coordinate vectors proportional over Q
            const auto& ev = e.coords();
            const auto& pv = pivot->coords();
            size_t pi = 0;
            while (pi < pv.size() && is_zero(pv[pi])) ++pi;
            Rational ratio = ev[pi] / pv[pi];
            for (size_t k = 0; k < ev.size() && ok; ++k)
                if (ev[k] != ratio * pv[k]) ok = false;
        }
        if (!pivot) ok = false;
        if (!ok) continue;
        ProjMatrix N = A * pivot->inverse();
        bool rational = true;
        for (const auto& e : N.entries())
            if (e.level_of() > 0) rational = false;
        if (!rational) continue;
        if (N.det().is_zero()) continue;
        return EquivalenceWitness{ai, N};
    }
    return std::nullopt;
}

bool almost_diagonal_radical_identity(const Rational& a, const Rational& b, const Rational& m,
                                      const Rational& a2, const Rational& b2, long bound) {
    // (a + b sqrt m) = (c + d sqrt m)^4 (a2 +- b2 sqrt m) in Q(sqrt m):
    // expand (c + d sqrt m)^4 = (c^4 + 6 c^2 d^2 m + d^4 m^2) + (4c^3 d + 4 c d^3 m) sqrt m
    for (long cn = -bound; cn <= bound; ++cn)
        for (long cd = 1; cd <= 4; ++cd)
            for (long dn = -bound; dn <= bound; ++dn)
                for (long dd = 1; dd <= 4; ++dd) {
                    Rational c(cn, cd), d(dn, dd);
                    if (is_zero(c) && is_zero(d)) continue;
                    Rational P = c * c * c * c + 6 * c * c * d * d * m + d * d * d * d * m * m;
                    Rational Q = 4 * c * c * c * d + 4 * c * d * d * d * m;
                    for (int s : {1, -1}) {
                        Rational rb2 = s * b2;
                        // (P + Q sqrt m)(a2 + rb2 sqrt m)
                        Rational ra = P * a2 + Q * rb2 * m;
                        Rational rb = P * rb2 + Q * a2;
                        if (ra == a && rb == b) return true;
                    }
                }
    return false;
}

// ------------------------------------------------- source form / aut lookup

namespace {

TowerElem locate_i(const TowerPtr& tw) {
    for (size_t j = 0; j < tw->levels(); ++j) {
        const auto& an = tw->level(j).annotation;
        if (an.kind == Annotation::Kind::Cyclotomic && an.n == 4) return tw->generator(j);
        if (an.kind == Annotation::Kind::Radical && an.n == 2 && an.radicand == -1)
            return tw->generator(j);
    }
    throw TowerMissingConstant("tower does not contain i");
}

std::optional<TowerElem> locate_sqrt_m7(const Twist& t) {
    const TowerPtr& tw = t.tower;
    for (size_t j = 0; j < tw->levels(); ++j) {
        const auto& an = tw->level(j).annotation;
        if (an.kind == Annotation::Kind::Radical && an.n == 2 && an.radicand == -7)
            return tw->generator(j);
    }
    for (size_t j = 0; j < tw->levels(); ++j) {
        const auto& an = tw->level(j).annotation;
        if (an.kind == Annotation::Kind::Cyclotomic && an.n == 7) {
            TowerElem z = tw->generator(j);
            return z + z.pow(2) + z.pow(4) - z.pow(3) - z.pow(5) - z.pow(6);
        }
    }
    // rows 6/10: r8^4 / gamma
    if (int r8 = tw->level_index("r8"); r8 >= 0 && t.twist_params.has("gamma")) {
        Rational gamma = t.twist_params.get("gamma");
        if (t.twist_params.has("variant_gamma")) gamma = t.twist_params.get("variant_gamma");
        return tw->generator(static_cast<size_t>(r8)).pow(4) * (1 / gamma);
    }
    return std::nullopt;
}

bool is_klein_s4_row(const std::string& s) { return s.rfind("klein-sqrt7-", 0) == 0; }

} // namespace

TernaryQuartic twist_source_form(const Twist& t) {
    const std::string& s = t.source_case;
    if (s.rfind("fermat-", 0) == 0) {
        TernaryQuartic F(t.tower);
        F.set_coeff(4, 0, 0, t.tower->one());
        F.set_coeff(0, 4, 0, t.tower->one());
        F.set_coeff(0, 0, 4, t.tower->one());
        return F;
    }
    if (s.rfind("case-", 0) == 0) {
        HennCase c = henn_case_from_string(s);
        bool modified = (c == HennCase::II || c == HennCase::V || c == HennCase::VI ||
                         c == HennCase::VII);
        TowerBuilder tb(t.tower);
        if (c == HennCase::II) {
            // rebuild the F-composed model from the cubic
            auto& cu = t.curve_params.get_list("cubic");
            QPoly q{{cu[0], cu[1], cu[2], Rational(1)}};
            CubicData cd = CubicData::make_in(tb, q);
            if (!tb.tower()->same_as(*t.tower))
                throw TowerMismatch("case II source rebuild extended the tower");
            TernaryQuartic F(t.tower);
            F.set_coeff(4, 0, 0, tb.lift(cd.roots[0]));
            F.set_coeff(0, 4, 0, tb.lift(cd.roots[1]));
            F.set_coeff(0, 0, 4, tb.lift(cd.roots[2]));
            F.set_coeff(2, 2, 0, tb.rational(1));
            F.set_coeff(0, 2, 2, tb.rational(1));
            F.set_coeff(2, 0, 2, tb.rational(1));
            ProjMatrix V(t.tower);
            for (int i = 0; i < 3; ++i) {
                TowerElem ri = tb.lift(cd.roots[static_cast<size_t>(i)]);
                V.set(i, 0, tb.rational(1));
                V.set(i, 1, ri);
                V.set(i, 2, ri * ri);
            }
            return substitute(F, V);
        }
        TernaryQuartic F = representative_curve(c, t.curve_params, tb, modified);
        if (!tb.tower()->same_as(*t.tower))
            throw TowerMismatch("source rebuild extended the tower");
        return F;
    }
    if (s.rfind("klein-sqrt7-", 0) == 0) {
        int idx = std::stoi(s.substr(12));
        auto w7 = locate_sqrt_m7(t);
        if (!w7) throw TowerMissingConstant("no sqrt(-7) in tower");
        bool conj = (idx == 6 || idx == 13 || idx == 15);
        TowerElem eps = ((conj ? -*w7 : *w7) - t.tower->one()) * Rational(1, 2);
        return klein_fs4(t.tower, eps);
    }
    if (s.rfind("klein-row-", 0) == 0) return klein_f0(t.tower);
    throw UnknownIndex("unknown source case " + s);
}

ProjGroup twist_source_aut(const Twist& t) {
    const std::string& s = t.source_case;
    if (s.rfind("fermat-", 0) == 0) {
        TowerElem i = locate_i(t.tower);
        const TowerPtr& tw = t.tower;
        ProjMatrix sc(tw), tc(tw), uc(tw);
        sc.set(0, 0, tw->zero()); sc.set(1, 1, tw->zero()); sc.set(2, 2, tw->zero());
        sc.set(0, 2, tw->one()); sc.set(1, 0, tw->one()); sc.set(2, 1, tw->one());
        tc.set(0, 0, tw->zero()); tc.set(1, 1, tw->zero());
        tc.set(0, 1, tw->from_rational(-1)); tc.set(1, 0, tw->one());
        uc.set(0, 0, i);
        return generate_group({sc, tc, uc}, 200);
    }
    if (s.rfind("case-", 0) == 0) {
        HennCase c = henn_case_from_string(s);
        bool modified = (c == HennCase::II || c == HennCase::V || c == HennCase::VI ||
                         c == HennCase::VII);
        TowerBuilder tb(t.tower);
        auto gens = automorphism_generators(c, t.curve_params, tb, modified);
        std::vector<ProjMatrix> lifted;
        for (auto& g : gens) lifted.push_back(g.lifted(tb.tower()));
        return generate_group(lifted, 400);
    }
    if (is_klein_s4_row(s)) {
        const ProjGroup& G = klein_aut_s4_rational();
        std::vector<ProjMatrix> gens;
        for (size_t gi : G.generator_indices()) gens.push_back(G.element(gi).lifted(t.tower));
        return generate_group(gens, 50);
    }
    if (s.rfind("klein-row-", 0) == 0) {
        auto w7 = locate_sqrt_m7(t);
        if (!w7) throw TowerMissingConstant("no sqrt(-7) in tower");
        const KleinAutC0& A = klein_aut_c0();
        auto remap = [&](const ProjMatrix& M) {
            ProjMatrix R(t.tower);
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) {
                    const auto& co = M.at(r, c).coords(); // degree-2 tower: a + b w
                    R.set(r, c, t.tower->from_rational(co[0]) + *w7 * co[1]);
                }
            return R;
        };
        return generate_group({remap(A.g), remap(A.h), remap(A.s)}, 200);
    }
    throw UnknownIndex("unknown source case " + s);
}

} // namespace quartwist
