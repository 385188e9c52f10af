#include "quartwist/twistgen.hpp"

#include <algorithm>

namespace quartwist {

namespace {

TernaryQuartic fermat_form(const TowerPtr& tw) {
    TernaryQuartic F(tw);
    F.set_coeff(4, 0, 0, tw->one());
    F.set_coeff(0, 4, 0, tw->one());
    F.set_coeff(0, 0, 4, tw->one());
    return F;
}

ProjMatrix diag(const TowerPtr& tw, const TowerElem& a, const TowerElem& b, const TowerElem& c) {
    ProjMatrix M(tw);
    M.set(0, 0, lift_prefix(a, tw));
    M.set(1, 1, lift_prefix(b, tw));
    M.set(2, 2, lift_prefix(c, tw));
    return M;
}

// [[alpha, alpha*sm, 0], [gamma, -gamma*sm, 0], [0,0,1]]
ProjMatrix conjugate_block(const TowerPtr& tw, const TowerElem& alpha, const TowerElem& gamma,
                           const TowerElem& sm) {
    ProjMatrix M(tw);
    M.set(0, 0, alpha);
    M.set(0, 1, alpha * sm);
    M.set(1, 0, gamma);
    M.set(1, 1, -(gamma * sm));
    M.set(2, 2, tw->one());
    return M;
}

} // namespace

// ------------------------------------------------- standard Galois attachment

// Single-level candidate automorphisms for the standard shapes: conjugation on
// cyclotomic levels, root-of-unity scalings on radical levels. Each candidate
// is validated; invalid ones are dropped.
std::vector<FieldAut> standard_tower_automorphisms(const TowerPtr& tw, size_t fixed_below) {
    std::vector<FieldAut> out;
    auto identity_images = [&] {
        std::vector<TowerElem> im;
        for (size_t j = 0; j < tw->levels(); ++j) im.push_back(tw->generator(j));
        return im;
    };
    // locate scalars
    std::optional<TowerElem> i_elem, z3_elem, z7_elem, z8_elem, z9_elem, s2_elem;
    for (size_t j = 0; j < tw->levels(); ++j) {
        const auto& an = tw->level(j).annotation;
        if (an.kind == Annotation::Kind::Cyclotomic) {
            if (an.n == 4) i_elem = tw->generator(j);
            if (an.n == 3) z3_elem = tw->generator(j);
            if (an.n == 7) z7_elem = tw->generator(j);
            if (an.n == 8) z8_elem = tw->generator(j);
            if (an.n == 9) z9_elem = tw->generator(j);
        }
        if (an.kind == Annotation::Kind::Radical && an.n == 2 && an.radicand == -3 && !z3_elem)
            z3_elem = (tw->generator(j) - tw->one()) * Rational(1, 2);
        if (an.kind == Annotation::Kind::Radical && an.n == 2 && an.radicand == 2)
            s2_elem = tw->generator(j);
    }
    if (z9_elem && !z3_elem) z3_elem = z9_elem->pow(3);
    if (!z8_elem && i_elem && s2_elem)
        z8_elem = (*i_elem + tw->one()) * *s2_elem * Rational(1, 2); // (1+i)/sqrt(2)
    auto try_add = [&](std::vector<TowerElem> images) {
        try {
            out.push_back(FieldAut::define(tw, std::move(images)));
            return true;
        } catch (const NotAnAutomorphism&) {
            return false;
        }
    };
    for (size_t j = fixed_below; j < tw->levels(); ++j) {
        const auto& an = tw->level(j).annotation;
        if (an.kind == Annotation::Kind::Cyclotomic) {
            auto im = identity_images();
            long g = an.n == 4 ? 3 : (an.n == 7 ? 3 : (an.n == 9 ? 2 : (an.n == 8 ? 3 : 2)));
            im[j] = tw->generator(j).pow(g);
            try_add(std::move(im));
            continue;
        }
        // root-of-unity scalings of the generator; largest order first, since
        // the largest valid scaling generates the smaller ones
        unsigned deg = tw->level(j).degree;
        std::vector<TowerElem> units;
        if (deg % 9 == 0 && z9_elem) units.push_back(*z9_elem);
        if (deg % 8 == 0 && z8_elem) units.push_back(*z8_elem);
        if (deg % 7 == 0 && z7_elem) units.push_back(*z7_elem);
        if (deg % 4 == 0 && i_elem) units.push_back(*i_elem);
        if (deg % 3 == 0 && z3_elem) units.push_back(*z3_elem);
        if (deg % 2 == 0) units.push_back(-tw->one());
        for (const auto& u : units) {
            auto im = identity_images();
            im[j] = tw->generator(j) * u;
            if (try_add(std::move(im))) break;
        }
    }
    return out;
}

// 3-cycle (and, for S3 cubics, the w-conjugation) of a cubic splitting tower,
// extended across square-root levels sa, sb with sc = sprod/(sa sb). Levels
// and roots are looked up by name; candidates are validated and the first
// valid image set per automorphism is kept.
void attach_sqrt_vandermonde_galois(Twist& t, const CubicData& cd, const TowerElem& sprod) {
    const TowerPtr& tw = t.tower;
    int rl = tw->level_index("r"), wl = tw->level_index("w");
    int sai = tw->level_index("sa"), sbi = tw->level_index("sb");
    if (sai < 0 || sbi < 0) return;
    TowerElem sa = tw->generator(static_cast<size_t>(sai));
    TowerElem sb = tw->generator(static_cast<size_t>(sbi));
    TowerElem sc = (sa * sb).inverse() * lift_prefix(sprod, tw);
    auto ident = [&] {
        std::vector<TowerElem> im;
        for (size_t j = 0; j < tw->levels(); ++j) im.push_back(tw->generator(j));
        return im;
    };
    // 3-cycle: r -> next root, sa -> +-sb, sb -> +-sc
    if (rl >= 0) {
        bool done = false;
        for (int target : {1, 2}) {
            for (int s1 : {1, -1})
                for (int s2 : {1, -1}) {
                    auto im = ident();
                    im[static_cast<size_t>(rl)] = lift_prefix(cd.roots[static_cast<size_t>(target)], tw);
                    im[static_cast<size_t>(sai)] = sb * Rational(s1);
                    im[static_cast<size_t>(sbi)] = sc * Rational(s2);
                    try {
                        t.galois.push_back(FieldAut::define(tw, std::move(im)));
                        done = true;
                        break;
                    } catch (const NotAnAutomorphism&) {
                    }
                }
            if (done) break;
        }
    }
    // transposition via w -> -w: fixes alpha (and sa), swaps beta and gamma
    if (wl >= 0 && cd.type == CubicData::GaloisType::S3) {
        bool done = false;
        for (int s2 : {1, -1}) {
            auto im = ident();
            im[static_cast<size_t>(wl)] = -tw->generator(static_cast<size_t>(wl));
            im[static_cast<size_t>(sbi)] = sc * Rational(s2);
            try {
                t.galois.push_back(FieldAut::define(tw, std::move(im)));
                done = true;
                break;
            } catch (const NotAnAutomorphism&) {
            }
        }
        (void)done;
    }
}

// ----------------------------------------------------------- Fermat diagonal

Twist fermat_diagonal(const Rational& a, const Rational& b, TowerBuilder* ambient) {
    if (is_zero(a) || is_zero(b)) throw ZeroParameter("fermat_diagonal: a, b must be nonzero");
    TowerBuilder local;
    TowerBuilder& tb = ambient ? *ambient : local;
    tb.adjoin_i();
    TowerElem ra = tb.adjoin_radical(a, 4, "a4");
    TowerElem rb = tb.adjoin_radical(b, 4, "b4");
    ra = tb.lift(ra);
    rb = tb.lift(rb);

    Twist t;
    t.source_case = "fermat-diagonal";
    t.twist_params.scalars["a"] = a;
    t.twist_params.scalars["b"] = b;
    t.tower = tb.tower();
    t.curve = TernaryQuartic(t.tower);
    t.curve.set_coeff(4, 0, 0, tb.rational(a));
    t.curve.set_coeff(0, 4, 0, tb.rational(b));
    t.curve.set_coeff(0, 0, 4, tb.rational(1));
    t.iso = diag(t.tower, ra, rb, t.tower->one());
    t.source_curve = fermat_form(t.tower);
    t.galois = standard_tower_automorphisms(t.tower);
    return t;
}

// ------------------------------------------------------ Fermat almost-diagonal

namespace {

TernaryQuartic almost_diagonal_curve(const TowerPtr& tw, const Rational& a, const Rational& b,
                                     const Rational& m) {
    TernaryQuartic F(tw);
    F.set_coeff(4, 0, 0, tw->from_rational(2 * a));
    F.set_coeff(3, 1, 0, tw->from_rational(8 * b * m));
    F.set_coeff(2, 2, 0, tw->from_rational(12 * m * a));
    F.set_coeff(1, 3, 0, tw->from_rational(8 * b * m * m));
    F.set_coeff(0, 4, 0, tw->from_rational(2 * a * m * m));
    F.set_coeff(0, 0, 4, tw->one());
    return F;
}

} // namespace

Twist fermat_almost_diagonal(const Rational& a, const Rational& b, const Rational& m) {
    if (rational_nth_root(m, 2)) throw SquareM("fermat_almost_diagonal: m must not be a square");
    if (is_zero(a) && is_zero(b)) throw DegenerateParameters("(a,b) != (0,0)");
    if (is_zero(a * a - m * b * b)) throw DegenerateParameters("a^2 - m b^2 != 0");
    TowerBuilder tb;
    tb.adjoin_i();
    TowerElem sm = tb.adjoin_radical(m, 2, "sm");
    TowerElem rad_p = tb.lift(sm) * b + tb.rational(a); // a + b sqrt(m)
    TowerElem rad_m = tb.rational(a) - tb.lift(sm) * b;
    std::vector<TowerElem> mod;
    mod = {-rad_p, tb.rational(0), tb.rational(0), tb.rational(0), tb.rational(1)};
    TowerElem alpha = tb.adjoin_root_over(mod, "al", Annotation::opaque());
    rad_m = tb.lift(rad_m);
    mod = {-rad_m, tb.rational(0), tb.rational(0), tb.rational(0), tb.rational(1)};
    TowerElem gamma = tb.adjoin_root_over(mod, "ga", Annotation::opaque());
    alpha = tb.lift(alpha);
    sm = tb.lift(sm);

    Twist t;
    t.source_case = "fermat-almost-diagonal";
    t.twist_params.scalars["a"] = a;
    t.twist_params.scalars["b"] = b;
    t.twist_params.scalars["m"] = m;
    t.tower = tb.tower();
    t.curve = almost_diagonal_curve(t.tower, a, b, m);
    t.iso = conjugate_block(t.tower, alpha, gamma, sm);
    t.source_curve = fermat_form(t.tower);
    t.galois = standard_tower_automorphisms(t.tower);
    // sqrt(m) conjugation swaps the two quartic radicals
    {
        std::vector<TowerElem> im;
        for (size_t j = 0; j < t.tower->levels(); ++j) im.push_back(t.tower->generator(j));
        int smi = t.tower->level_index("sm"), ali = t.tower->level_index("al"),
            gai = t.tower->level_index("ga");
        if (smi >= 0 && ali >= 0 && gai >= 0) {
            im[static_cast<size_t>(smi)] = -t.tower->generator(static_cast<size_t>(smi));
            im[static_cast<size_t>(ali)] = t.tower->generator(static_cast<size_t>(gai));
            im[static_cast<size_t>(gai)] = t.tower->generator(static_cast<size_t>(ali));
            t.galois.push_back(FieldAut::define(t.tower, std::move(im)));
        }
    }
    return t;
}

Twist fermat_almost_diagonal_in(TowerBuilder& tb, const Rational& a, const Rational& b,
                                const Rational& m, const TowerElem& sqrt_m,
                                const TowerElem& alpha, const TowerElem& gamma) {
    TowerElem sm = tb.lift(sqrt_m);
    TowerElem al = tb.lift(alpha), ga = tb.lift(gamma);
    if (!(sm * sm == tb.rational(m))) throw RelationViolated("sqrt_m^2 != m");
    if (!(al.pow(4) == sm * b + tb.rational(a))) throw RelationViolated("alpha^4 != a + b sqrt(m)");
    if (!(ga.pow(4) == tb.rational(a) - sm * b)) throw RelationViolated("gamma^4 != a - b sqrt(m)");
    Twist t;
    t.source_case = "fermat-almost-diagonal";
    t.twist_params.scalars["a"] = a;
    t.twist_params.scalars["b"] = b;
    t.twist_params.scalars["m"] = m;
    t.tower = tb.tower();
    t.curve = almost_diagonal_curve(t.tower, a, b, m);
    t.iso = conjugate_block(t.tower, al, ga, sm);
    t.source_curve = fermat_form(t.tower);
    t.galois = standard_tower_automorphisms(t.tower);
    return t;
}

// -------------------------------------------------------- Fermat non-diagonal

TernaryQuartic fermat_nondiagonal_curve(const CubicData& P, unsigned n, NonDiagVariant v,
                                        const TowerPtr& tower) {
    if (n != 1 && n != 2 && n != 4) throw ParamError("n must be 1, 2 or 4");
    unsigned e = n == 1 ? 0 : (n == 2 ? 2 : 1);
    // power sums of the (transformed) roots
    std::array<Rational, 11> S;
    if (v == NonDiagVariant::Primary) {
        for (unsigned j = 0; j <= 10; ++j) S[j] = P.power_sum(j);
    } else if (v == NonDiagVariant::Cubes) {
        for (unsigned j = 0; j <= 10; ++j) S[j] = P.power_sum(3 * j);
    } else {
        // cyclic ratio sums: require rational values (C3 or split cubics)
        std::array<TowerElem, 3> r;
        TowerElem q1 = P.roots[0] * P.roots[1].inverse();
        TowerElem q2 = P.roots[1] * P.roots[2].inverse();
        TowerElem q3 = P.roots[2] * P.roots[0].inverse();
        if (v == NonDiagVariant::RatioCubes) {
            q1 = q1.pow(3);
            q2 = q2.pow(3);
            q3 = q3.pow(3);
        }
        r = {q1, q2, q3};
        for (unsigned j = 0; j <= 10; ++j) {
            TowerElem s = r[0].pow(j) + r[1].pow(j) + r[2].pow(j);
            auto q = s.as_rational();
            if (!q)
                throw PolNotInClass("ratio power sums are not rational (cubic is not cyclic)");
            S[j] = *q;
        }
    }
    auto binom = [](int nn, int kk) {
        long r = 1;
        for (int i = 0; i < kk; ++i) r = r * (nn - i) / (i + 1);
        return Rational(r);
    };
    TernaryQuartic F(tower);
    for (int j = 4; j >= 0; --j)
        for (int k = 4 - j; k >= 0; --k) {
            int l = 4 - j - k;
            Rational coef = binom(4, j) * binom(4 - j, k) *
                            S[static_cast<size_t>(e + static_cast<unsigned>(k + 2 * l))];
            F.set_coeff(j, k, l, tower->from_rational(coef));
        }
    return F;
}

Twist fermat_nondiagonal(const QPoly& cubic, unsigned n, NonDiagVariant v) {
    TowerBuilder tb;
    tb.adjoin_i();
    CubicData cd = CubicData::make_in(tb, cubic);

    // transformed roots
    std::array<TowerElem, 3> roots;
    for (int i = 0; i < 3; ++i) roots[static_cast<size_t>(i)] = tb.lift(cd.roots[static_cast<size_t>(i)]);
    if (v == NonDiagVariant::Cubes)
        for (auto& r : roots) r = r.pow(3);
    if (v == NonDiagVariant::Ratios || v == NonDiagVariant::RatioCubes) {
        if (cd.type == CubicData::GaloisType::S3 || cd.type == CubicData::GaloisType::C2)
            throw PolNotInClass("ratio variants require split or cyclic cubics");
        std::array<TowerElem, 3> q = {roots[0] * roots[1].inverse(), roots[1] * roots[2].inverse(),
                                      roots[2] * roots[0].inverse()};
        if (v == NonDiagVariant::RatioCubes)
            for (auto& x : q) x = x.pow(3);
        roots = q;
    }

    // product of transformed roots must be a rational n-th power
    Rational prod_root(1);
    if (n > 1) {
        TowerElem prod = roots[0] * roots[1] * roots[2];
        auto pq = prod.as_rational();
        if (!pq) throw PolNotInClass("root product is not rational");
        auto root = rational_nth_root(*pq, n);
        if (!root)
            throw PolNotInClass("root product " + rational_str(*pq) + " is not a rational " +
                                std::to_string(n) + "-th power");
        prod_root = *root;
    }

    ProjMatrix iso;
    TowerPtr tower;
    if (n == 1) {
        tower = tb.tower();
        iso = ProjMatrix(tower);
        for (int i = 0; i < 3; ++i) {
            iso.set(i, 0, tower->one());
            iso.set(i, 1, roots[static_cast<size_t>(i)]);
            iso.set(i, 2, roots[static_cast<size_t>(i)].pow(2));
        }
    } else {
        auto adjoin_nth = [&](const TowerElem& x, const char* name) {
            std::vector<TowerElem> mod(n + 1, tb.rational(0));
            mod[0] = -tb.lift(x);
            mod[n] = tb.rational(1);
            return tb.adjoin_root_over(mod, name, Annotation::opaque());
        };
        TowerElem ra = adjoin_nth(roots[0], "ra");
        TowerElem rb = adjoin_nth(roots[1], "rb");
        ra = tb.lift(ra);
        TowerElem rc = (ra * rb).inverse() * prod_root;
        tower = tb.tower();
        iso = ProjMatrix(tower);
        std::array<TowerElem, 3> rad = {ra, rb, rc};
        for (int i = 0; i < 3; ++i) {
            TowerElem root_i = lift_prefix(roots[static_cast<size_t>(i)], tower);
            iso.set(i, 0, rad[static_cast<size_t>(i)]);
            iso.set(i, 1, rad[static_cast<size_t>(i)] * root_i);
            iso.set(i, 2, rad[static_cast<size_t>(i)] * root_i * root_i);
        }
    }

    Twist t;
    t.source_case = "fermat-nondiagonal";
    t.twist_params.lists["cubic"] = {cubic.c[0], cubic.c[1], cubic.c[2]};
    t.twist_params.scalars["n"] = Rational(static_cast<long>(n));
    t.twist_params.scalars["variant"] = Rational(static_cast<long>(v));
    t.tower = tower;
    t.curve = fermat_nondiagonal_curve(cd, n, v, tower);
    t.iso = iso;
    t.source_curve = fermat_form(tower);
    t.galois = standard_tower_automorphisms(tower);
    // extend the cubic's Galois generators across the radical levels when a
    // consistent set of images validates
    if (cd.type == CubicData::GaloisType::C3 || cd.type == CubicData::GaloisType::S3) {
        int rl = tower->level_index("r");
        int rai = tower->level_index("ra"), rbi = tower->level_index("rb");
        if (rl >= 0 && rai >= 0 && rbi >= 0 && v == NonDiagVariant::Primary) {
            TowerElem beta = lift_prefix(cd.roots[1], tower);
            TowerElem ra = tower->generator(static_cast<size_t>(rai));
            TowerElem rb = tower->generator(static_cast<size_t>(rbi));
            TowerElem rc = (ra * rb).inverse() * prod_root;
            std::vector<TowerElem> units = {tower->one(), -tower->one()};
            if (int ii = tower->level_index("i"); ii >= 0 && n == 4) {
                TowerElem iu = tower->generator(static_cast<size_t>(ii));
                units.push_back(iu);
                units.push_back(-iu);
            }
            bool attached = false;
            for (const auto& u1 : units) {
                if (attached) break;
                for (const auto& u2 : units) {
                    std::vector<TowerElem> im;
                    for (size_t j = 0; j < tower->levels(); ++j) im.push_back(tower->generator(j));
                    im[static_cast<size_t>(rl)] = beta;
                    im[static_cast<size_t>(rai)] = rb * u1;
                    im[static_cast<size_t>(rbi)] = rc * u2;
                    try {
                        t.galois.push_back(FieldAut::define(tower, std::move(im)));
                        attached = true;
                        break;
                    } catch (const NotAnAutomorphism&) {
                    }
                }
            }
        }
    }
    return t;
}

// -------------------------------------------------- diagonal equivalence test

bool fermat_diagonal_equivalent(const Rational& a, const Rational& b, const Rational& a2,
                                const Rational& b2) {
    for (const Rational& x : {a, b, a2, b2})
        if (is_zero(x)) throw ZeroParameter("fermat_diagonal_equivalent: zero parameter");
    auto nf = [](const Rational& x) { return nth_power_free(x, 4); };
    auto mseq = [&](std::array<Rational, 3> l, std::array<Rational, 3> r) {
        std::sort(l.begin(), l.end());
        std::sort(r.begin(), r.end());
        return l == r;
    };
    std::array<Rational, 3> lhs = {nf(a), nf(b), Rational(1)};
    for (const Rational& m : {nf(1 / a2), nf(1 / b2), Rational(1)}) {
        std::array<Rational, 3> rhs = {nf(m * a2), nf(m * b2), nf(m)};
        if (mseq(lhs, rhs)) return true;
    }
    return false;
}

// ------------------------------------------------------------ Henn cases I-X

namespace {

Twist case_i_twist(const ParamMap& cp, const ParamMap& tp) {
    Rational m = tp.get("m");
    if (is_zero(m)) throw ZeroParameter("case I: m != 0");
    TowerBuilder tb;
    TernaryQuartic model = representative_curve(HennCase::I, cp, tb);
    TowerElem sm = tb.adjoin_radical(m, 2, "sm");
    Twist t;
    t.source_case = "case-i";
    t.curve_params = cp;
    t.twist_params = tp;
    t.tower = tb.tower();
    t.source_curve = model.lifted(t.tower);
    t.iso = diag(t.tower, sm, t.tower->one(), t.tower->one());
    // m^2 x^4 + m x^2 F1 + F2
    t.curve = TernaryQuartic(t.tower);
    const auto& f1 = cp.get_list("F1");
    const auto& f2 = cp.get_list("F2");
    t.curve.set_coeff(4, 0, 0, tb.rational(m * m));
    t.curve.set_coeff(2, 2, 0, tb.rational(m * f1[0]));
    t.curve.set_coeff(2, 1, 1, tb.rational(m * f1[1]));
    t.curve.set_coeff(2, 0, 2, tb.rational(m * f1[2]));
    t.curve.set_coeff(0, 4, 0, tb.rational(f2[0]));
    t.curve.set_coeff(0, 3, 1, tb.rational(f2[1]));
    t.curve.set_coeff(0, 2, 2, tb.rational(f2[2]));
    t.curve.set_coeff(0, 1, 3, tb.rational(f2[3]));
    t.curve.set_coeff(0, 0, 4, tb.rational(f2[4]));
    t.galois = standard_tower_automorphisms(t.tower);
    return t;
}

TernaryQuartic rationalized(const TernaryQuartic& raw, int base_level) {
    // scale so the first nonzero coefficient is 1, then check the level
    size_t pivot = 15;
    for (size_t i = 0; i < 15; ++i)
        if (!raw.coeff(i).is_zero()) { pivot = i; break; }
    if (pivot == 15) throw ZeroForm("twisted curve vanished");
    TernaryQuartic out = raw * raw.coeff(pivot).inverse();
    if (!coeffs_in_level(out, base_level))
        throw TowerError("twisted curve is not defined over the base field");
    return out;
}

Twist case_ii_twist(const ParamMap& cp, const ParamMap& tp) {
    auto& cu = cp.get_list("cubic");
    QPoly q{{cu[0], cu[1], cu[2], Rational(1)}};
    TowerBuilder tb;
    CubicData cd = CubicData::make_in(tb, q);

    // modified model F(x + r y + r^2 z, ...) built once from the cubic data
    TernaryQuartic model = [&] {
        TernaryQuartic F(tb.tower());
        F.set_coeff(4, 0, 0, tb.lift(cd.roots[0]));
        F.set_coeff(0, 4, 0, tb.lift(cd.roots[1]));
        F.set_coeff(0, 0, 4, tb.lift(cd.roots[2]));
        F.set_coeff(2, 2, 0, tb.rational(1));
        F.set_coeff(0, 2, 2, tb.rational(1));
        F.set_coeff(2, 0, 2, tb.rational(1));
        ProjMatrix V(tb.tower());
        for (int i = 0; i < 3; ++i) {
            TowerElem ri = tb.lift(cd.roots[static_cast<size_t>(i)]);
            V.set(i, 0, tb.rational(1));
            V.set(i, 1, ri);
            V.set(i, 2, ri * ri);
        }
        return substitute(F, V);
    }();

    Twist t;
    t.source_case = "case-ii";
    t.curve_params = cp;
    t.twist_params = tp;

    // the twist tower extends the splitting tower per sub-case
    if (cd.type == CubicData::GaloisType::Split) {
        Rational m = tp.get("m"), n = tp.get("n");
        if (is_zero(m) || is_zero(n)) throw ZeroParameter("case II(i): m, n nonzero");
        TowerElem sm = tb.adjoin_radical(m, 2, "sm");
        TowerElem sn = tb.adjoin_radical(n, 2, "sn");
        sm = tb.lift(sm);
        t.tower = tb.tower();
        ProjMatrix V(t.tower);
        for (int i = 0; i < 3; ++i) {
            TowerElem ri = lift_prefix(cd.roots[static_cast<size_t>(i)], t.tower);
            V.set(i, 0, t.tower->one());
            V.set(i, 1, ri);
            V.set(i, 2, ri * ri);
        }
        t.iso = V.adjugate() * diag(t.tower, sm, sn, t.tower->one());
        // alpha m^2 x^4 + beta n^2 y^4 + gamma z^4 + mn x^2y^2 + n y^2z^2 + m z^2x^2
        auto r0 = *cd.roots[0].as_rational(), r1 = *cd.roots[1].as_rational(),
             r2 = *cd.roots[2].as_rational();
        t.curve = TernaryQuartic(t.tower);
        t.curve.set_coeff(4, 0, 0, tb.rational(r0 * m * m));
        t.curve.set_coeff(0, 4, 0, tb.rational(r1 * n * n));
        t.curve.set_coeff(0, 0, 4, tb.rational(r2));
        t.curve.set_coeff(2, 2, 0, tb.rational(m * n));
        t.curve.set_coeff(0, 2, 2, tb.rational(n));
        t.curve.set_coeff(2, 0, 2, tb.rational(m));
    } else if (cd.type == CubicData::GaloisType::C2) {
        Rational c = tp.get("c"), d = tp.get("d");
        // roots: alpha, beta conjugate in Q(w), gamma rational; sqrt(m) := w
        int wl = tb.tower()->level_index("w");
        if (wl < 0) throw TowerError("case II(ii): missing quadratic level");
        TowerElem w = tb.tower()->generator(static_cast<size_t>(wl));
        Rational m = *(w * w).as_rational();
        if (is_zero(c) && is_zero(d)) throw ZeroParameter("case II(ii): (c,d) != (0,0)");
        TowerElem radp = tb.rational(c) + tb.lift(w) * d;
        TowerElem S = tb.adjoin_root_over({-radp, tb.rational(0), tb.rational(1)}, "S",
                                          Annotation::opaque());
        TowerElem radm = tb.rational(c) - tb.lift(w) * d;
        TowerElem T = tb.adjoin_root_over({-radm, tb.rational(0), tb.rational(1)}, "T",
                                          Annotation::opaque());
        S = tb.lift(S);
        w = tb.lift(w);
        t.tower = tb.tower();
        ProjMatrix V(t.tower);
        for (int i = 0; i < 3; ++i) {
            TowerElem ri = lift_prefix(cd.roots[static_cast<size_t>(i)], t.tower);
            V.set(i, 0, t.tower->one());
            V.set(i, 1, ri);
            V.set(i, 2, ri * ri);
        }
        t.iso = V.adjugate() * conjugate_block(t.tower, S, lift_prefix(T, t.tower), w);
        t.source_curve = model.lifted(t.tower);
        t.curve = rationalized(substitute(t.source_curve, t.iso), 0);
        (void)m;
        // sigma_m: w -> -w swaps the conjugate radicands S <-> T
        {
            int wl = t.tower->level_index("w"), si = t.tower->level_index("S"),
                ti = t.tower->level_index("T");
            TowerElem Sg = t.tower->generator(static_cast<size_t>(si));
            TowerElem Tg = t.tower->generator(static_cast<size_t>(ti));
            bool done = false;
            for (int s1 : {1, -1})
                for (int s2 : {1, -1}) {
                    if (done) break;
                    std::vector<TowerElem> im;
                    for (size_t j = 0; j < t.tower->levels(); ++j)
                        im.push_back(t.tower->generator(j));
                    im[static_cast<size_t>(wl)] = -t.tower->generator(static_cast<size_t>(wl));
                    im[static_cast<size_t>(si)] = Tg * Rational(s1);
                    im[static_cast<size_t>(ti)] = Sg * Rational(s2);
                    try {
                        t.galois.push_back(FieldAut::define(t.tower, std::move(im)));
                        done = true;
                    } catch (const NotAnAutomorphism&) {
                    }
                }
        }
    } else {
        // C3 / S3: conjugate tuple g(root_i), product must be a rational square
        std::vector<Rational> g = tp.has_list("g") ? tp.get_list("g")
                                                   : std::vector<Rational>{Rational(0), Rational(1)};
        auto apply_g = [&](const TowerElem& r) {
            TowerElem acc = tb.rational(0);
            for (size_t i = g.size(); i-- > 0;) acc = acc * tb.lift(r) + tb.rational(g[i]);
            return acc;
        };
        std::array<TowerElem, 3> tup;
        for (int i = 0; i < 3; ++i) tup[static_cast<size_t>(i)] = apply_g(cd.roots[static_cast<size_t>(i)]);
        TowerElem prod = tup[0] * tup[1] * tup[2];
        auto pq = prod.as_rational();
        if (!pq) throw PolNotInClass("case II(iii): tuple product not rational");
        auto root = rational_nth_root(*pq, 2);
        if (!root) throw PolNotInClass("case II(iii): tuple product is not a square");
        TowerElem sa = tb.adjoin_root_over({-tup[0], tb.rational(0), tb.rational(1)}, "sa",
                                           Annotation::opaque());
        TowerElem sb = tb.adjoin_root_over({-tb.lift(tup[1]), tb.rational(0), tb.rational(1)}, "sb",
                                           Annotation::opaque());
        sa = tb.lift(sa);
        TowerElem sc = (sa * sb).inverse() * *root;
        t.tower = tb.tower();
        ProjMatrix V(t.tower);
        for (int i = 0; i < 3; ++i) {
            TowerElem ri = lift_prefix(cd.roots[static_cast<size_t>(i)], t.tower);
            V.set(i, 0, t.tower->one());
            V.set(i, 1, ri);
            V.set(i, 2, ri * ri);
        }
        ProjMatrix W(t.tower);
        std::array<TowerElem, 3> rad = {sa, sb, sc};
        for (int i = 0; i < 3; ++i) {
            TowerElem ti = lift_prefix(tup[static_cast<size_t>(i)], t.tower);
            W.set(i, 0, rad[static_cast<size_t>(i)]);
            W.set(i, 1, rad[static_cast<size_t>(i)] * ti);
            W.set(i, 2, rad[static_cast<size_t>(i)] * ti * ti);
        }
        t.iso = V.adjugate() * W;
        t.source_curve = model.lifted(t.tower);
        t.curve = rationalized(substitute(t.source_curve, t.iso), 0);
        attach_sqrt_vandermonde_galois(t, cd, t.tower->from_rational(*root));
    }
    if (t.source_curve.tower() == nullptr) t.source_curve = model.lifted(t.tower);
    {
        auto std_auts = standard_tower_automorphisms(t.tower);
        t.galois.insert(t.galois.end(), std_auts.begin(), std_auts.end());
    }
    return t;
}

Twist case_iii_twist(const ParamMap& cp, const ParamMap& tp) {
    Rational m = tp.get("m");
    if (is_zero(m)) throw ZeroParameter("case III: m != 0");
    TowerBuilder tb;
    TernaryQuartic model = representative_curve(HennCase::III, cp, tb);
    tb.adjoin_zeta(3);
    TowerElem cm = tb.adjoin_radical(m, 3, "cm");
    Twist t;
    t.source_case = "case-iii";
    t.curve_params = cp;
    t.twist_params = tp;
    t.tower = tb.tower();
    t.source_curve = model.lifted(t.tower);
    t.iso = diag(t.tower, t.tower->one(), t.tower->one(), cm);
    t.curve = TernaryQuartic(t.tower);
    for (size_t i = 0; i < 15; ++i) t.curve.set_coeff(kQuarticMonomials[i][0], kQuarticMonomials[i][1],
                                                      kQuarticMonomials[i][2],
                                                      lift_prefix(model.coeff(i), t.tower));
    t.curve.set_coeff(0, 1, 3, tb.rational(m)); // m z^3 y
    t.galois = standard_tower_automorphisms(t.tower);
    return t;
}

Twist case_iv_twist(const ParamMap& cp, const ParamMap& tp) {
    Rational a = cp.get("a"), b = cp.get("b");
    Rational m = tp.get("m"), a1 = tp.get("a1"), a2 = tp.get("a2"), q = tp.get("q");
    if (a1 * a1 - m * a2 * a2 != q * q * q)
        throw RelationViolated("case IV: a1^2 - m a2^2 != q^3");
    if (is_zero(q)) throw DegenerateParameters("case IV: q != 0");
    auto rep = check_restrictions(HennCase::IV, cp);
    if (!rep.ok) throw RestrictionViolated("case IV: " + rep.violations.front());

    TowerBuilder tb;
    tb.adjoin_zeta(3);
    TowerElem sm = tb.lift(tb.adjoin_radical(m, 2, "sm"));
    TowerElem rad = tb.rational(a1) + sm * a2;
    TowerElem alpha = [&] {
        if (auto r = rad.as_rational()) return tb.adjoin_radical(*r, 3, "al");
        return tb.adjoin_root_over({-rad, tb.rational(0), tb.rational(0), tb.rational(1)}, "al",
                                   Annotation::opaque());
    }();
    alpha = tb.lift(alpha);
    TowerElem gamma = alpha.inverse() * q;
    sm = tb.lift(sm);

    Twist t;
    t.source_case = "case-iv";
    t.curve_params = cp;
    t.twist_params = tp;
    t.tower = tb.tower();
    {
        TowerBuilder tmp(t.tower);
        t.source_curve = representative_curve(HennCase::IV, cp, tmp).lifted(t.tower);
    }
    t.iso = conjugate_block(t.tower, alpha, gamma, sm);
    // 2a1(x^3z + 3m xy^2z) + 2a2m(3x^2yz + m y^3z) + q^2(x^2-my^2)^2 + aq(x^2-my^2)z^2 + b z^4
    t.curve = TernaryQuartic(t.tower);
    auto r = [&](const Rational& v) { return t.tower->from_rational(v); };
    t.curve.set_coeff(3, 0, 1, r(2 * a1));
    t.curve.set_coeff(1, 2, 1, r(6 * a1 * m));
    t.curve.set_coeff(2, 1, 1, r(6 * a2 * m));
    t.curve.set_coeff(0, 3, 1, r(2 * a2 * m * m));
    t.curve.set_coeff(4, 0, 0, r(q * q));
    t.curve.set_coeff(2, 2, 0, r(-2 * m * q * q));
    t.curve.set_coeff(0, 4, 0, r(m * m * q * q));
    t.curve.set_coeff(2, 0, 2, r(a * q));
    t.curve.set_coeff(0, 2, 2, r(-(a * q * m)));
    t.curve.set_coeff(0, 0, 4, r(b));
    t.galois = standard_tower_automorphisms(t.tower);
    // sigma_m: sm -> -sm, alpha -> gamma * unit
    if (int smi = t.tower->level_index("sm"); smi >= 0) {
        int ali = t.tower->level_index("al");
        if (ali >= 0) {
            TowerElem z3 = t.tower->generator(0); // zeta3 level is first
            for (int e = 0; e < 3; ++e) {
                std::vector<TowerElem> im;
                for (size_t j = 0; j < t.tower->levels(); ++j) im.push_back(t.tower->generator(j));
                im[static_cast<size_t>(smi)] = -t.tower->generator(static_cast<size_t>(smi));
                im[static_cast<size_t>(ali)] = gamma * z3.pow(e);
                try {
                    t.galois.push_back(FieldAut::define(t.tower, std::move(im)));
                    break;
                } catch (const NotAnAutomorphism&) {
                }
            }
        }
    }
    return t;
}

Twist case_v_vii_twist(HennCase c, const ParamMap& cp, const ParamMap& tp) {
    bool is_v = (c == HennCase::V);
    Rational a = cp.get("a");
    Rational b = is_v ? cp.get("b") : Rational(0);
    Rational m = tp.get("m");
    Rational cc = is_v ? tp.get("c") : tp.get("b");
    Rational dd = is_v ? tp.get("d") : tp.get("c");
    Rational q = tp.get("q");
    if (cc * cc - dd * dd * m != q * q * q * q * a)
        throw RelationViolated(std::string("case ") + (is_v ? "V" : "VII") +
                               ": c^2 - d^2 m != q^4 a");
    if (is_zero(q)) throw DegenerateParameters("q != 0");
    auto rep = check_restrictions(c, cp, true);
    if (!rep.ok) throw RestrictionViolated(rep.violations.front());

    TowerBuilder tb;
    tb.adjoin_i();
    TowerElem sm = tb.lift(tb.adjoin_radical(m, 2, "sm"));
    TowerElem radm = tb.rational(cc) - sm * dd; // c - d sqrt(m)
    TowerElem gamma = [&] {
        if (auto r = radm.as_rational()) return tb.adjoin_radical(*r, 4, "ga");
        return tb.adjoin_root_over(
            {-radm, tb.rational(0), tb.rational(0), tb.rational(0), tb.rational(1)}, "ga",
            Annotation::opaque());
    }();
    gamma = tb.lift(gamma);
    TowerElem alpha = gamma.inverse() * q;
    sm = tb.lift(sm);

    Twist t;
    t.source_case = is_v ? "case-v" : "case-vii";
    t.curve_params = cp;
    t.twist_params = tp;
    t.tower = tb.tower();
    {
        TowerBuilder tmp(t.tower);
        t.source_curve = representative_curve(c, cp, tmp, true).lifted(t.tower);
    }
    t.iso = conjugate_block(t.tower, alpha, gamma, sm);
    t.curve = TernaryQuartic(t.tower);
    auto r = [&](const Rational& v) { return t.tower->from_rational(v); };
    // (c + d sqrt m)(x + sqrt m y)^4 + (c - d sqrt m)(x - sqrt m y)^4 expanded,
    // plus the invariant tail
    Rational tail = is_v ? Rational(b * q * q) : Rational(q * q);
    t.curve.set_coeff(4, 0, 0, r(2 * cc + tail));
    t.curve.set_coeff(3, 1, 0, r(8 * dd * m));
    t.curve.set_coeff(2, 2, 0, r(12 * cc * m - 2 * tail * m));
    t.curve.set_coeff(1, 3, 0, r(8 * dd * m * m));
    t.curve.set_coeff(0, 4, 0, r(2 * cc * m * m + tail * m * m));
    if (is_v) {
        t.curve.set_coeff(2, 0, 2, r(q));
        t.curve.set_coeff(0, 2, 2, r(-(q * m)));
    }
    t.curve.set_coeff(0, 0, 4, r(1));
    t.galois = standard_tower_automorphisms(t.tower);
    // sigma_m: sm -> -sm, gamma -> alpha * (a^(1/4)) * unit when expressible
    if (int smi = t.tower->level_index("sm"); smi >= 0) {
        int gai = t.tower->level_index("ga");
        auto a4 = rational_nth_root(a, 4);
        if (gai >= 0 && a4) {
            TowerElem iu = t.tower->generator(0); // i level is first
            for (int e = 0; e < 4; ++e) {
                std::vector<TowerElem> im;
                for (size_t j = 0; j < t.tower->levels(); ++j) im.push_back(t.tower->generator(j));
                im[static_cast<size_t>(smi)] = -t.tower->generator(static_cast<size_t>(smi));
                im[static_cast<size_t>(gai)] = alpha * *a4 * iu.pow(e);
                try {
                    t.galois.push_back(FieldAut::define(t.tower, std::move(im)));
                    break;
                } catch (const NotAnAutomorphism&) {
                }
            }
        }
    }
    return t;
}

Twist case_vi_twist(const ParamMap& cp, const ParamMap& tp) {
    Rational a = cp.get("a");
    Rational m = tp.get("m"), n = tp.get("n");
    if (is_zero(m) || is_zero(n)) throw ZeroParameter("case VI: m, n nonzero");
    TowerBuilder tb;
    tb.adjoin_zeta(3);
    TowerElem sm = tb.lift(tb.adjoin_radical(m, 2, "sm"));
    TowerElem cn = tb.lift(tb.adjoin_radical(n, 3, "cn"));
    sm = tb.lift(sm);

    Twist t;
    t.source_case = "case-vi";
    t.curve_params = cp;
    t.twist_params = tp;
    t.tower = tb.tower();
    {
        TowerBuilder tmp(t.tower);
        t.source_curve = representative_curve(HennCase::VI, cp, tmp, true).lifted(t.tower);
    }
    t.iso = diag(t.tower, sm, t.tower->one(), cn);
    t.curve = TernaryQuartic(t.tower);
    auto r = [&](const Rational& v) { return t.tower->from_rational(v); };
    t.curve.set_coeff(0, 1, 3, r(n));
    t.curve.set_coeff(4, 0, 0, r(a * m * m));
    t.curve.set_coeff(2, 2, 0, r(m));
    t.curve.set_coeff(0, 4, 0, r(1));
    t.galois = standard_tower_automorphisms(t.tower);
    return t;
}

Twist case_viii_twist(const ParamMap& cp, const ParamMap& tp) {
    auto& cu = tp.get_list("cubic");
    QPoly q{{cu[0], cu[1], cu[2], Rational(1)}};
    Rational e3 = -cu[0];
    auto root = rational_nth_root(e3, 2);
    if (!root) throw PolNotInClass("case VIII: cubic is not in Pol3^2 (root product not a square)");

    TowerBuilder tb;
    CubicData cd = CubicData::make_in(tb, q);
    TowerElem sa = tb.adjoin_root_over({-tb.lift(cd.roots[0]), tb.rational(0), tb.rational(1)},
                                       "sa", Annotation::opaque());
    TowerElem sb = tb.adjoin_root_over({-tb.lift(cd.roots[1]), tb.rational(0), tb.rational(1)},
                                       "sb", Annotation::opaque());
    sa = tb.lift(sa);
    TowerElem sc = (sa * sb).inverse() * *root;

    Twist t;
    t.source_case = "case-viii";
    t.curve_params = cp;
    t.twist_params = tp;
    t.tower = tb.tower();
    {
        TowerBuilder tmp(t.tower);
        t.source_curve = representative_curve(HennCase::VIII, cp, tmp).lifted(t.tower);
    }
    ProjMatrix W(t.tower);
    std::array<TowerElem, 3> rad = {sa, sb, sc};
    for (int i = 0; i < 3; ++i) {
        TowerElem ri = lift_prefix(cd.roots[static_cast<size_t>(i)], t.tower);
        W.set(i, 0, rad[static_cast<size_t>(i)]);
        W.set(i, 1, rad[static_cast<size_t>(i)] * ri);
        W.set(i, 2, rad[static_cast<size_t>(i)] * ri * ri);
    }
    t.iso = W;
    t.curve = rationalized(substitute(t.source_curve, t.iso), 0);
    t.galois = standard_tower_automorphisms(t.tower);
    attach_sqrt_vandermonde_galois(t, cd, t.tower->from_rational(*root));
    return t;
}

Twist case_ix_twist(const ParamMap& cp, const ParamMap& tp) {
    Rational a = tp.get("a");
    if (is_zero(a)) throw ZeroParameter("case IX: a != 0");
    TowerBuilder tb;
    tb.adjoin_zeta(9);
    TowerElem r9 = tb.lift(tb.adjoin_radical(a, 9, "r9"));
    Twist t;
    t.source_case = "case-ix";
    t.curve_params = cp;
    t.twist_params = tp;
    t.tower = tb.tower();
    {
        TowerBuilder tmp(t.tower);
        t.source_curve = representative_curve(HennCase::IX, cp, tmp).lifted(t.tower);
    }
    t.iso = diag(t.tower, r9.pow(3), t.tower->one(), r9);
    t.curve = TernaryQuartic(t.tower);
    t.curve.set_coeff(4, 0, 0, t.tower->from_rational(a));
    t.curve.set_coeff(1, 3, 0, t.tower->one());
    t.curve.set_coeff(0, 1, 3, t.tower->one());
    t.galois = standard_tower_automorphisms(t.tower);
    return t;
}

Twist case_x_twist(const ParamMap& cp, const ParamMap& tp) {
    Rational a = tp.get("a"), b = tp.get("b");
    if (is_zero(b)) throw ZeroParameter("case X: b != 0");
    Rational b_core = nth_power_free(b, 4);
    Rational b_outer = *rational_nth_root(b / b_core, 4);
    // q1 = 1, q3 = a, q4 = 1: beta^4 + a beta^2 - beta - a^2/12 = 0
    QPoly quart{{-a * a / 12, Rational(-1), a, Rational(0), Rational(1)}};
    TowerBuilder tb;
    std::optional<Rational> beta_rat;
    for (auto& r : rational_roots(quart))
        if (!is_zero(r)) { beta_rat = r; break; }

    TowerElem beta = beta_rat ? tb.rational(*beta_rat)
                              : tb.adjoin_root(quart, "be", Annotation::root_of("case X quartic"));
    TowerElem delta = -(beta * beta + tb.rational(a / 2)) * (beta * Rational(2)).inverse();
    if ((beta - delta).is_zero()) throw DegenerateParameters("case X: beta = delta");
    TowerElem A = -(beta + delta * Rational(3)) * ((beta - delta) * Rational(3)).inverse();
    TowerElem B = beta * Rational(4) * ((beta - delta) * Rational(3)).inverse();
    if (A.is_zero()) throw DegenerateParameters("case X: A = 0");
    // projectively normalized iso: [[1,0,beta],[0,nu,0],[cg,0,cg*delta]]
    // with cg^3 = B/A and nu^4 = b/A
    TowerElem BA = B * A.inverse();
    TowerElem bA = tb.rational(b_core) * A.inverse();
    TowerElem cg = [&]() {
        if (auto r = BA.as_rational()) return tb.lift(tb.adjoin_radical(*r, 3, "cg"));
        return tb.lift(tb.adjoin_root_over({-BA, tb.rational(0), tb.rational(0), tb.rational(1)},
                                           "cg", Annotation::opaque()));
    }();
    bA = tb.lift(bA);
    TowerElem nu = [&]() {
        if (auto r = bA.as_rational()) return tb.lift(tb.adjoin_radical(*r, 4, "nu"));
        return tb.lift(tb.adjoin_root_over(
            {-bA, tb.rational(0), tb.rational(0), tb.rational(0), tb.rational(1)}, "nu",
            Annotation::opaque()));
    }();
    beta = tb.lift(beta);
    delta = tb.lift(delta);
    cg = tb.lift(cg);

    Twist t;
    t.source_case = "case-x";
    t.curve_params = cp;
    t.twist_params = tp;
    t.tower = tb.tower();
    {
        TowerBuilder tmp(t.tower);
        t.source_curve = representative_curve(HennCase::X, cp, tmp).lifted(t.tower);
    }
    ProjMatrix M(t.tower);
    M.set(0, 0, t.tower->one());
    M.set(0, 2, beta);
    M.set(1, 1, nu * b_outer);
    M.set(2, 0, cg);
    M.set(2, 2, cg * delta);
    t.iso = M;
    t.curve = TernaryQuartic(t.tower);
    auto r = [&](const Rational& v) { return t.tower->from_rational(v); };
    t.curve.set_coeff(4, 0, 0, r(1));
    t.curve.set_coeff(2, 0, 2, r(a));
    t.curve.set_coeff(1, 0, 3, r(1));
    t.curve.set_coeff(0, 0, 4, r(-a * a / 12));
    t.curve.set_coeff(0, 4, 0, r(b));
    return t;
}

} // namespace

Twist henn_case_twist(HennCase c, const ParamMap& curve_params, const ParamMap& twist_params) {
    switch (c) {
        case HennCase::I: return case_i_twist(curve_params, twist_params);
        case HennCase::II: return case_ii_twist(curve_params, twist_params);
        case HennCase::III: return case_iii_twist(curve_params, twist_params);
        case HennCase::IV: return case_iv_twist(curve_params, twist_params);
        case HennCase::V:
        case HennCase::VII: return case_v_vii_twist(c, curve_params, twist_params);
        case HennCase::VI: return case_vi_twist(curve_params, twist_params);
        case HennCase::VIII: return case_viii_twist(curve_params, twist_params);
        case HennCase::IX: return case_ix_twist(curve_params, twist_params);
        case HennCase::X: return case_x_twist(curve_params, twist_params);
        default:
            throw UnknownIndex("henn_case_twist covers cases I..X only");
    }
}

// -------------------------------------------------------- parameter searches

std::optional<std::array<Rational, 4>> search_case_iv_params(long bound) {
    for (long m = -bound; m <= bound; ++m) {
        if (m == 0) continue;
        for (long a1 = -bound; a1 <= bound; ++a1)
            for (long a2 = -bound; a2 <= bound; ++a2) {
                if (a1 == 0 && a2 == 0) continue;
                long lhs = a1 * a1 - m * a2 * a2;
                for (long q = 1; q <= bound; ++q)
                    if (q * q * q == lhs)
                        return std::array<Rational, 4>{Rational(m), Rational(a1), Rational(a2),
                                                       Rational(q)};
            }
    }
    return std::nullopt;
}

std::optional<std::array<Rational, 4>> search_case_v_params(const Rational& a, long bound) {
    for (long m = 2; m <= bound; ++m) {
        if (rational_nth_root(Rational(m), 2)) continue;
        for (long c = -bound; c <= bound; ++c)
            for (long d = -bound; d <= bound; ++d) {
                if (d == 0) continue;
                Rational lhs = Rational(c * c - d * d * m);
                for (long q = 1; q <= bound; ++q)
                    if (Rational(q) * q * q * q * a == lhs)
                        return std::array<Rational, 4>{Rational(m), Rational(c), Rational(d),
                                                       Rational(q)};
            }
    }
    return std::nullopt;
}

std::optional<std::array<Rational, 4>> search_klein_row7_params(long bound) {
    for (long m = -bound; m <= bound; ++m) {
        if (m == 0 || rational_nth_root(Rational(m), 2)) continue;
        for (long aa = -bound; aa <= bound; ++aa)
            for (long bb = -bound; bb <= bound; ++bb) {
                long lhs = aa * aa - m * bb * bb;
                for (long q = 1; q <= bound; ++q)
                    if (lhs == -7 * m * q * q && !(aa == 0 && bb == 0))
                        return std::array<Rational, 4>{Rational(aa), Rational(bb), Rational(m),
                                                       Rational(q)};
            }
    }
    return std::nullopt;
}

} // namespace quartwist
