#include "quartwist/klein.hpp"

#include "quartwist/twistgen.hpp"

namespace quartwist {

namespace {

TernaryQuartic form_fk(const TowerPtr& tw) {
    TernaryQuartic F(tw);
    F.set_coeff(3, 1, 0, tw->one());
    F.set_coeff(0, 3, 1, tw->one());
    F.set_coeff(1, 0, 3, tw->one());
    return F;
}

TernaryQuartic form_fs4(const TowerPtr& tw, const TowerElem& eps) {
    TernaryQuartic F(tw);
    F.set_coeff(4, 0, 0, tw->one());
    F.set_coeff(0, 4, 0, tw->one());
    F.set_coeff(0, 0, 4, tw->one());
    TowerElem c = eps * Rational(3);
    F.set_coeff(2, 2, 0, c);
    F.set_coeff(0, 2, 2, c);
    F.set_coeff(2, 0, 2, c);
    return F;
}

TernaryQuartic form_f0(const TowerPtr& tw) {
    TernaryQuartic F(tw);
    auto r = [&](long v) { return tw->from_rational(Rational(v)); };
    F.set_coeff(4, 0, 0, r(1));
    F.set_coeff(0, 4, 0, r(1));
    F.set_coeff(0, 0, 4, r(1));
    F.set_coeff(1, 3, 0, r(6));
    F.set_coeff(0, 1, 3, r(6));
    F.set_coeff(3, 0, 1, r(6));
    F.set_coeff(2, 2, 0, r(-3));
    F.set_coeff(0, 2, 2, r(-3));
    F.set_coeff(2, 0, 2, r(-3));
    F.set_coeff(2, 1, 1, r(3));
    F.set_coeff(1, 2, 1, r(3));
    F.set_coeff(1, 1, 2, r(3));
    return F;
}

TernaryQuartic form_fd4(const TowerPtr& tw, const TowerElem& eps, const TowerElem& w7) {
    TernaryQuartic F(tw);
    TowerElem e2 = eps * eps;
    F.set_coeff(4, 0, 0, w7 * e2 * Rational(1, 16));
    F.set_coeff(0, 4, 0, w7 * e2 * Rational(1, 16));
    F.set_coeff(0, 0, 4, tw->one());
    F.set_coeff(2, 2, 0, e2 * Rational(-3, 8));
    F.set_coeff(1, 1, 2, eps * Rational(3));
    return F;
}

} // namespace

TernaryQuartic klein_f0(const TowerPtr& tower) { return form_f0(tower); }
TernaryQuartic klein_fs4(const TowerPtr& tower, const TowerElem& eps) {
    return form_fs4(tower, eps);
}

std::array<ProjMatrix, 3> klein_ck_generators(TowerBuilder& tb) {
    TowerElem z = tb.adjoin_zeta(7);
    const TowerPtr& tw = tb.tower();
    TowerElem w7 = z + z.pow(2) + z.pow(4) - z.pow(3) - z.pow(5) - z.pow(6);
    ProjMatrix gK(tw);
    gK.set(0, 0, z.pow(4));
    gK.set(1, 1, z.pow(2));
    gK.set(2, 2, z);
    ProjMatrix hK(tw); // (x,y,z) -> (y,z,x); printed singular matrix corrected
    hK.set(0, 0, tw->zero());
    hK.set(1, 1, tw->zero());
    hK.set(2, 2, tw->zero());
    hK.set(0, 1, tw->one());
    hK.set(1, 2, tw->one());
    hK.set(2, 0, tw->one());
    ProjMatrix sK(tw);
    TowerElem minv = -w7.inverse(); // -1/sqrt(-7)
    auto d = [&](int a) { return (z.pow(a) - z.pow(7 - a)) * minv; };
    sK.set(0, 0, d(1)); sK.set(0, 1, d(2)); sK.set(0, 2, d(4));
    sK.set(1, 0, d(2)); sK.set(1, 1, d(4)); sK.set(1, 2, d(1));
    sK.set(2, 0, d(4)); sK.set(2, 1, d(1)); sK.set(2, 2, d(2));
    return {gK, hK, sK};
}

const KleinModels& klein_models() {
    static const KleinModels models = [] {
        KleinModels m;
        TowerBuilder tb;
        TowerElem z = tb.adjoin_zeta(7);
        tb.adjoin_i();
        m.tower = tb.tower();
        z = tb.lift(z);
        m.zeta = z;
        m.eps = z + z.pow(2) + z.pow(4);
        m.sqrt_m7 = m.eps * Rational(2) + tb.rational(1);
        m.F_K = form_fk(m.tower);
        m.F_S4 = form_fs4(m.tower, m.eps);
        m.F_S4_conj = form_fs4(m.tower, -(m.eps) - tb.rational(1));
        m.F_0 = form_f0(m.tower);
        m.F_D4 = form_fd4(m.tower, m.eps, m.sqrt_m7);
        // circulant with first row (1, z^2+z^6, 1+z*eps); the commonly printed
        // version has the last two entries transposed and fixes nothing
        TowerElem e1 = z.pow(2) + z.pow(6);
        TowerElem e2 = tb.rational(1) + z * m.eps;
        ProjMatrix phi1(m.tower);
        phi1.set(0, 0, tb.rational(1)); phi1.set(0, 1, e1); phi1.set(0, 2, e2);
        phi1.set(1, 0, e1); phi1.set(1, 1, e2); phi1.set(1, 2, tb.rational(1));
        phi1.set(2, 0, e2); phi1.set(2, 1, tb.rational(1)); phi1.set(2, 2, e1);
        m.phi1 = phi1;
        ProjMatrix phi2(m.tower);
        TowerElem c = m.eps * Rational(2) + tb.rational(3);
        phi2.set(0, 0, -m.eps); phi2.set(0, 1, tb.rational(1)); phi2.set(0, 2, c);
        phi2.set(1, 0, c); phi2.set(1, 1, -m.eps); phi2.set(1, 2, tb.rational(1));
        phi2.set(2, 0, tb.rational(1)); phi2.set(2, 1, c); phi2.set(2, 2, -m.eps);
        m.phi2 = phi2;
        TowerElem i = tb.generator("i");
        ProjMatrix phi3(m.tower);
        phi3.set(0, 0, tb.rational(1)); phi3.set(0, 1, i);
        phi3.set(1, 0, tb.rational(1)); phi3.set(1, 1, -i);
        phi3.set(2, 2, tb.rational(1));
        m.phi3 = phi3;
        m.phi0 = m.phi1 * m.phi2;
        return m;
    }();
    return models;
}

std::optional<std::pair<Rational, Rational>> descend_to_sqrt_m7(const TowerElem& e,
                                                                const TowerElem& w) {
    // solve e = a + b*w with a, b rational
    const auto& ec = e.coords();
    const auto& wc = w.coords();
    size_t pivot = 0;
    for (size_t i = 1; i < wc.size(); ++i)
        if (!is_zero(wc[i])) { pivot = i; break; }
    if (pivot == 0) return std::nullopt;
    Rational b = ec[pivot] / wc[pivot];
    Rational a = ec[0] - b * wc[0];
    TowerElem probe = w * b + e.tower()->from_rational(a);
    if (!(probe == e)) return std::nullopt;
    return std::make_pair(a, b);
}

const KleinAutC0& klein_aut_c0() {
    static const KleinAutC0 data = [] {
        const KleinModels& m = klein_models();
        ProjMatrix inv0 = m.phi0.adjugate();
        std::array<ProjMatrix, 3> alpha;
        {
            TowerBuilder tb(m.tower);
            auto a = klein_ck_generators(tb);
            alpha = {a[0], a[1], a[2]};
        }
        // conjugate into Aut(C_0) and descend from Q(zeta7, i) to Q(w), w^2=-7
        KleinAutC0 out;
        TowerBuilder tb7;
        TowerElem w = tb7.adjoin_radical(-7, 2, "w7");
        out.tower = tb7.tower();
        auto descend = [&](const ProjMatrix& M) {
            ProjMatrix N = M.projective_normal_form();
            ProjMatrix R(out.tower);
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) {
                    auto ab = descend_to_sqrt_m7(N.at(r, c), m.sqrt_m7);
                    if (!ab)
                        throw TowerError("Aut(C_0) entry fails to descend to Q(sqrt(-7))");
                    R.set(r, c, out.tower->from_rational(ab->first) + w * ab->second);
                }
            return R;
        };
        out.g = descend(inv0 * alpha[0] * m.phi0);
        out.h = descend(inv0 * alpha[1] * m.phi0);
        out.s = descend(inv0 * alpha[2] * m.phi0);
        out.group = generate_group({out.g, out.h, out.s}, 400);
        return out;
    }();
    return data;
}

const ProjGroup& klein_aut_s4_rational() {
    static const ProjGroup G = [] {
        TowerPtr q = Tower::rationals();
        ProjMatrix s(q), t(q);
        s.set(0, 0, q->zero()); s.set(1, 1, q->zero()); s.set(2, 2, q->zero());
        s.set(0, 2, q->one()); s.set(1, 0, q->one()); s.set(2, 1, q->one());
        t.set(0, 0, q->zero()); t.set(1, 1, q->zero());
        t.set(0, 1, q->from_rational(-1)); t.set(1, 0, q->one());
        return generate_group({s, t}, 50);
    }();
    return G;
}

// ----------------------------------------------------------------- row 11

namespace {

using Mat = std::vector<std::vector<TowerElem>>;

Mat mat_mul(const Mat& A, const Mat& B, const TowerPtr& tw) {
    size_t n = A.size(), m = B[0].size(), k = B.size();
    Mat C(n, std::vector<TowerElem>(m, tw->zero()));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (A[i][l].is_zero()) continue;
            for (size_t j = 0; j < m; ++j) {
                if (B[l][j].is_zero()) continue;
                C[i][j] = C[i][j] + A[i][l] * B[l][j];
            }
        }
    return C;
}

} // namespace

Psl14 klein_psl_fourteen(const std::vector<TowerElem>& alphas, const FieldAut& conj) {
    if (alphas.size() != 7) throw RepeatedAlpha("need exactly 7 alphas");
    for (size_t i = 0; i < 7; ++i)
        for (size_t j = i + 1; j < 7; ++j)
            if (alphas[i] == alphas[j]) throw RepeatedAlpha("alphas must be pairwise distinct");

    TowerPtr tw = alphas[0].tower();
    int z7lev = -1;
    for (size_t j = 0; j < tw->levels(); ++j)
        if (tw->level(j).annotation.kind == Annotation::Kind::Cyclotomic &&
            tw->level(j).annotation.n == 7)
            z7lev = static_cast<int>(j);
    if (z7lev < 0) throw TowerMissingConstant("klein_psl_fourteen: tower must contain zeta7");
    TowerElem z = tw->generator(static_cast<size_t>(z7lev));
    TowerElem w7 = z + z.pow(2) + z.pow(4) - z.pow(3) - z.pow(5) - z.pow(6);

    // conj must be an involution sending sqrt(-7) to its negative
    if (!(conj.apply(w7) == -w7)) throw BadConjugation("conj does not negate sqrt(-7)");
    for (size_t j = 0; j < tw->levels(); ++j) {
        TowerElem g = tw->generator(j);
        if (!(conj.apply(conj.apply(g)) == g)) throw BadConjugation("conj is not an involution");
    }

    Psl14 out;
    out.tower = tw;
    const long mult[3] = {1, 4, 2};
    out.E.assign(3, std::vector<TowerElem>(7, tw->zero()));
    Mat Eb(3, std::vector<TowerElem>(7, tw->zero()));
    for (int r = 0; r < 3; ++r)
        for (int j = 0; j < 7; ++j) {
            out.E[static_cast<size_t>(r)][static_cast<size_t>(j)] = z.pow((mult[r] * j) % 7);
            Eb[static_cast<size_t>(r)][static_cast<size_t>(j)] = z.pow(((7 - mult[r] % 7) * j) % 7);
        }
    out.EE.assign(3, std::vector<TowerElem>(14, tw->zero()));
    for (int r = 0; r < 3; ++r)
        for (int j = 0; j < 7; ++j) {
            out.EE[static_cast<size_t>(r)][static_cast<size_t>(j)] = out.E[static_cast<size_t>(r)][static_cast<size_t>(j)];
            out.EE[static_cast<size_t>(r)][static_cast<size_t>(7 + j)] = Eb[static_cast<size_t>(r)][static_cast<size_t>(j)];
        }
    out.FF.assign(14, std::vector<TowerElem>(3, tw->zero()));
    for (int j = 0; j < 7; ++j)
        for (int r = 0; r < 3; ++r) {
            out.FF[static_cast<size_t>(j)][static_cast<size_t>(r)] = Eb[static_cast<size_t>(r)][static_cast<size_t>(j)];      // F = Ebar^t
            out.FF[static_cast<size_t>(7 + j)][static_cast<size_t>(r)] = out.E[static_cast<size_t>(r)][static_cast<size_t>(j)]; // Fbar = E^t
        }
    // M = [[Phi, w7*Phi], [conj(Phi), -w7*conj(Phi)]]
    out.M.assign(14, std::vector<TowerElem>(14, tw->zero()));
    for (int i = 0; i < 7; ++i) {
        TowerElem pw = tw->one();
        TowerElem cpw = tw->one();
        TowerElem ca = conj.apply(alphas[static_cast<size_t>(i)]);
        for (int j = 0; j < 7; ++j) {
            out.M[static_cast<size_t>(i)][static_cast<size_t>(j)] = pw;
            out.M[static_cast<size_t>(i)][static_cast<size_t>(7 + j)] = pw * w7;
            out.M[static_cast<size_t>(7 + i)][static_cast<size_t>(j)] = cpw;
            out.M[static_cast<size_t>(7 + i)][static_cast<size_t>(7 + j)] = -(cpw * w7);
            if (j < 6) {
                pw = pw * alphas[static_cast<size_t>(i)];
                cpw = cpw * ca;
            }
        }
    }
    Mat phi = mat_mul(mat_mul(out.EE, out.M, tw), out.FF, tw);
    ProjMatrix P(tw);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) P.set(r, c, phi[static_cast<size_t>(r)][static_cast<size_t>(c)]);
    out.phi = P;
    return out;
}

TowerElem psl14_gram_scalar(const Psl14& p) {
    Mat G = mat_mul(p.EE, p.FF, p.tower);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            if (r == c) {
                if (!(G[static_cast<size_t>(r)][static_cast<size_t>(c)] == G[0][0]))
                    throw TowerError("EE*FF is not scalar");
            } else if (!G[static_cast<size_t>(r)][static_cast<size_t>(c)].is_zero()) {
                throw TowerError("EE*FF is not diagonal");
            }
        }
    return G[0][0];
}

const std::array<Psl14PermIdentity, 3>& psl14_perm_identities() {
    // frozen from the offline search: EE * blockdiag(P1,P2) * FF = c * w
    static const std::array<Psl14PermIdentity, 3> ids = {{
        {'g', {4, 5, 6, 0, 1, 2, 3}, {3, 4, 5, 6, 0, 1, 2}, 14},
        {'h', {0, 4, 1, 5, 2, 6, 3}, {0, 4, 1, 5, 2, 6, 3}, 14},
        {'s', {0, 2, 1, 3, 4, 6, 5}, {0, 5, 6, 4, 3, 1, 2}, -7},
    }};
    return ids;
}

bool psl14_check_perm_identity(const Psl14PermIdentity& id) {
    TowerBuilder tb;
    TowerElem z = tb.adjoin_zeta(7);
    const TowerPtr& tw = tb.tower();
    const long mult[3] = {1, 4, 2};
    auto Epow = [&](int r, int j) { return z.pow((mult[r] * j) % 7); };
    auto Ebpow = [&](int r, int j) { return z.pow(((7 - mult[r] % 7) * j) % 7); };
    auto gens = klein_ck_generators(tb);
    const ProjMatrix* w = nullptr;
    if (id.generator == 'g') w = &gens[0];
    if (id.generator == 'h') w = &gens[1];
    if (id.generator == 's') w = &gens[2];
    if (!w) return false;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            TowerElem acc = tw->zero();
            for (int j = 0; j < 7; ++j) {
                acc = acc + Epow(r, id.p1[static_cast<size_t>(j)]) * Ebpow(c, j);
                acc = acc + Ebpow(r, id.p2[static_cast<size_t>(j)]) * Epow(c, j);
            }
            if (!(acc == w->at(r, c) * Rational(id.c))) return false;
        }
    return true;
}

// ------------------------------------------------------------- twist rows

namespace {

ProjMatrix klein_phi0_over(const TowerElem& z) {
    const TowerPtr& tw = z.tower();
    TowerElem eps = z + z.pow(2) + z.pow(4);
    TowerElem one = tw->one();
    TowerElem e1 = z.pow(2) + z.pow(6);
    TowerElem e2 = one + z * eps;
    ProjMatrix phi1(tw);
    phi1.set(0, 0, one); phi1.set(0, 1, e1); phi1.set(0, 2, e2);
    phi1.set(1, 0, e1); phi1.set(1, 1, e2); phi1.set(1, 2, one);
    phi1.set(2, 0, e2); phi1.set(2, 1, one); phi1.set(2, 2, e1);
    TowerElem c = eps * Rational(2) + one * Rational(3);
    ProjMatrix phi2(tw);
    phi2.set(0, 0, -eps); phi2.set(0, 1, one); phi2.set(0, 2, c);
    phi2.set(1, 0, c); phi2.set(1, 1, -eps); phi2.set(1, 2, one);
    phi2.set(2, 0, one); phi2.set(2, 1, c); phi2.set(2, 2, -eps);
    return phi1 * phi2;
}

TernaryQuartic rationalized_over(const TernaryQuartic& raw, int base_level) {
    size_t pivot = 15;
    for (size_t i = 0; i < 15; ++i)
        if (!raw.coeff(i).is_zero()) { pivot = i; break; }
    if (pivot == 15) throw ZeroForm("twisted curve vanished");
    TernaryQuartic out = raw * raw.coeff(pivot).inverse();
    if (!coeffs_in_level(out, base_level))
        throw TowerError("twisted curve is not defined over the base field");
    return out;
}

// cyclic pattern of the rows-3/4/8 matrices: row i built from the cyclic
// rotation (r1,r2,r3) -> (r_i, r_{i+1}, r_{i+2})
ProjMatrix klein_cubic_matrix(const TowerPtr& tw, const TowerElem& first,
                              const std::array<TowerElem, 3>& r) {
    ProjMatrix M(tw);
    for (int i = 0; i < 3; ++i) {
        const TowerElem& a = r[static_cast<size_t>(i)];
        const TowerElem& b = r[static_cast<size_t>((i + 1) % 3)];
        const TowerElem& c = r[static_cast<size_t>((i + 2) % 3)];
        M.set(i, 0, first);
        M.set(i, 1, a * Rational(-3) + b * Rational(2) + c);
        M.set(i, 2, a * b - b * c * Rational(3) + c * a * Rational(2));
    }
    return M;
}

std::vector<FieldAut> k_fixing_cubic_automorphisms(const TowerPtr& tw, const CubicData& cd,
                                                   size_t fixed_below) {
    // 3-cycle on the cubic root level plus any validating sign data on levels
    // above; conservative: try candidates, keep the valid ones
    std::vector<FieldAut> out;
    int rl = tw->level_index("r");
    if (rl < 0 || static_cast<size_t>(rl) < fixed_below) return out;
    for (int target : {1, 2}) {
        std::vector<TowerElem> im;
        for (size_t j = 0; j < tw->levels(); ++j) im.push_back(tw->generator(j));
        im[static_cast<size_t>(rl)] = lift_prefix(cd.roots[static_cast<size_t>(target)], tw);
        try {
            out.push_back(FieldAut::define(tw, std::move(im)));
            break;
        } catch (const NotAnAutomorphism&) {
        }
    }
    return out;
}

} // namespace

Twist klein_twist(int row, const ParamMap& params, int variant) {
    Twist t;
    t.source_case = "klein-row-" + std::to_string(row);
    t.twist_params = params;

    if (row == 1) {
        TowerBuilder tb;
        tb.adjoin_radical(-7, 2, "w7");
        t.tower = tb.tower();
        t.source_curve = klein_f0(t.tower);
        t.curve = t.source_curve;
        t.iso = ProjMatrix(t.tower);
        t.galois = standard_tower_automorphisms(t.tower, 0);
        return t;
    }
    if (row == 2) {
        Rational m = params.get("m");
        if (is_zero(m) || rational_nth_root(m, 2))
            throw RestrictionViolated("row 2: m must be a nonsquare");
        TowerBuilder tb;
        tb.adjoin_radical(-7, 2, "w7");
        TowerElem sm = tb.lift(tb.adjoin_radical(m, 2, "sm"));
        t.tower = tb.tower();
        ProjMatrix M(t.tower);
        auto r = [&](long v) { return t.tower->from_rational(Rational(v)); };
        M.set(0, 0, r(2)); M.set(0, 1, sm); M.set(0, 2, r(0));
        M.set(1, 0, r(-3)); M.set(1, 1, r(0)); M.set(1, 2, sm);
        M.set(2, 0, r(1)); M.set(2, 1, sm * Rational(-2)); M.set(2, 2, sm * Rational(3));
        t.iso = M;
        t.source_curve = klein_f0(t.tower);
        t.curve = rationalized_over(substitute(t.source_curve, t.iso), 0);
        t.galois = standard_tower_automorphisms(t.tower, 0);
        return t;
    }
    if (row == 3 || row == 4 || row == 8) {
        auto& cu = params.get_list("cubic");
        QPoly q{{cu[0], cu[1], cu[2], Rational(1)}};
        Rational disc = CubicData::discriminant(q);
        if (row == 3 && !rational_nth_root(disc / Rational(-7), 2))
            throw RestrictionViolated("row 3: disc must be -7 times a square");
        if (row == 4 && !rational_nth_root(disc, 2))
            throw RestrictionViolated("row 4: disc must be a square");
        TowerBuilder tb;
        TowerElem w7 = tb.adjoin_radical(-7, 2, "w7");
        CubicData cd = CubicData::make_in(tb, q);
        t.tower = tb.tower();
        w7 = lift_prefix(w7, t.tower);
        TowerElem first = row == 3 ? w7
                         : row == 4 ? t.tower->one()
                                    : lift_prefix(cd.sqrt_disc, t.tower);
        std::array<TowerElem, 3> roots;
        for (int i = 0; i < 3; ++i)
            roots[static_cast<size_t>(i)] = lift_prefix(cd.roots[static_cast<size_t>(i)], t.tower);
        t.source_curve = klein_f0(t.tower);
        static const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                        {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
        for (auto& p : perms) {
            ProjMatrix M = klein_cubic_matrix(t.tower, first,
                                              {roots[static_cast<size_t>(p[0])],
                                               roots[static_cast<size_t>(p[1])],
                                               roots[static_cast<size_t>(p[2])]});
            try {
                t.curve = rationalized_over(substitute(t.source_curve, M), 0);
                t.iso = M;
                break;
            } catch (const TowerError&) {
            }
        }
        if (t.curve.tower() == nullptr)
            throw TowerError("row " + std::to_string(row) + ": no root ordering gives a rational twist");
        t.galois = standard_tower_automorphisms(t.tower, 0);
        for (auto& g : k_fixing_cubic_automorphisms(t.tower, cd, 0)) t.galois.push_back(g);
        return t;
    }
    if (row == 7) {
        Rational a = params.get("a"), b = params.get("b"), m = params.get("m"), qq = params.get("q");
        if (a * a - m * b * b != Rational(-7) * m * qq * qq)
            throw RelationViolated("row 7: a^2 - m b^2 != -7 m q^2");
        if (is_zero(qq) || rational_nth_root(m, 2))
            throw RestrictionViolated("row 7: q != 0 and m a nonsquare");
        TowerBuilder tb;
        TowerElem w7 = tb.adjoin_radical(-7, 2, "w7");
        TowerElem sm = tb.adjoin_radical(m, 2, "sm");
        TowerElem radp = tb.rational(a) + tb.lift(sm) * b;
        TowerElem S = tb.adjoin_root_over({-radp, tb.rational(0), tb.rational(1)}, "S",
                                          Annotation::opaque());
        t.tower = tb.tower();
        w7 = lift_prefix(w7, t.tower);
        sm = lift_prefix(sm, t.tower);
        TowerElem T = S.inverse() * w7 * sm * qq;
        TowerElem A = T * (w7 * S).inverse();
        ProjMatrix M(t.tower);
        auto r = [&](long v) { return t.tower->from_rational(Rational(v)); };
        M.set(0, 0, r(3));
        M.set(0, 1, (A * Rational(5) - t.tower->one()) * S);
        M.set(0, 2, sm * (A * Rational(5) + t.tower->one()) * S);
        M.set(1, 0, r(-1));
        M.set(1, 1, (A * Rational(3) - r(3)) * S);
        M.set(1, 2, sm * (A * Rational(3) + r(3)) * S);
        M.set(2, 0, r(-2));
        M.set(2, 1, A * S * Rational(6));
        M.set(2, 2, sm * A * S * Rational(6));
        t.iso = M;
        t.source_curve = klein_f0(t.tower);
        t.curve = rationalized_over(substitute(t.source_curve, t.iso), 0);
        t.galois = standard_tower_automorphisms(t.tower, 0);
        // sm -> -sm must carry S to (a root of t^2 - (a - b sqrt m)); T is one
        for (int sign : {1, -1}) {
            std::vector<TowerElem> im;
            for (size_t j = 0; j < t.tower->levels(); ++j) im.push_back(t.tower->generator(j));
            int smi = t.tower->level_index("sm"), si = t.tower->level_index("S");
            if (smi < 0 || si < 0) break;
            im[static_cast<size_t>(smi)] = -t.tower->generator(static_cast<size_t>(smi));
            im[static_cast<size_t>(si)] = T * Rational(sign);
            try {
                t.galois.push_back(FieldAut::define(t.tower, std::move(im)));
                break;
            } catch (const NotAnAutomorphism&) {
            }
        }
        return t;
    }
    if (row == 5 || row == 9) {
        if (row == 9 && params.has("m")) {
            Rational m = params.get("m");
            if (is_zero(m)) throw ZeroParameter("row 9: m != 0");
            TowerBuilder tb;
            TowerElem z = tb.adjoin_zeta(7);
            TowerElem r7 = tb.lift(tb.adjoin_radical(m, 7, "r7"));
            z = tb.lift(z);
            if (variant == 1) r7 = r7.pow(6);
            t.tower = tb.tower();
            ProjMatrix d(t.tower);
            d.set(0, 0, r7);
            d.set(1, 1, r7.pow(4));
            d.set(2, 2, r7.pow(2));
            t.iso = klein_phi0_over(z).adjugate() * d;
            t.source_curve = klein_f0(t.tower);
            t.curve = rationalized_over(substitute(t.source_curve, t.iso), 0);
            t.galois = standard_tower_automorphisms(t.tower, 0);
            return t;
        }
        // row 5 (and the beta-variant of row 9): beta_1 = zeta7 + zeta7^-1 tower
        TowerBuilder tb;
        QPoly cpoly{{Rational(-1), Rational(-2), Rational(1), Rational(1)}}; // t^3+t^2-2t-1
        TowerElem cgen = tb.adjoin_root(cpoly, "c", Annotation::root_of("real cyclotomic cubic"));
        // zeta7: t^2 - c t + 1 over Q(c)
        TowerElem z = tb.adjoin_root_over({tb.rational(1), -tb.lift(cgen), tb.rational(1)}, "z",
                                          Annotation::cyclotomic(7));
        cgen = tb.lift(cgen);
        std::array<TowerElem, 3> betas = {cgen, cgen * cgen - tb.rational(2),
                                          cgen.pow(3) - cgen * Rational(3)};
        if (variant == 1)
            for (auto& bb : betas) bb = bb.pow(6);
        TowerElem r1 = tb.adjoin_root_over({-tb.lift(betas[0]), tb.rational(0), tb.rational(0),
                                            tb.rational(0), tb.rational(0), tb.rational(0),
                                            tb.rational(0), tb.rational(1)},
                                           "r1", Annotation::opaque());
        TowerElem r2 = tb.adjoin_root_over({-tb.lift(betas[1]), tb.rational(0), tb.rational(0),
                                            tb.rational(0), tb.rational(0), tb.rational(0),
                                            tb.rational(0), tb.rational(1)},
                                           "r2", Annotation::opaque());
        t.tower = tb.tower();
        r1 = lift_prefix(r1, t.tower);
        z = lift_prefix(z, t.tower);
        for (auto& bb : betas) bb = lift_prefix(bb, t.tower);
        // product beta1 beta2 beta3 = 1 (norm of the unit c), so r3 = 1/(r1 r2)
        TowerElem r3 = (r1 * r2).inverse();
        std::array<TowerElem, 3> rad = {r1, r2, r3};
        ProjMatrix V(t.tower);
        for (int i = 0; i < 3; ++i) {
            V.set(i, 0, rad[static_cast<size_t>(i)]);
            V.set(i, 1, rad[static_cast<size_t>(i)] * betas[static_cast<size_t>(i)]);
            V.set(i, 2, rad[static_cast<size_t>(i)] * betas[static_cast<size_t>(i)].pow(2));
        }
        t.iso = klein_phi0_over(z).adjugate() * V;
        t.source_curve = klein_f0(t.tower);
        t.curve = rationalized_over(substitute(t.source_curve, t.iso), 0);
        // Galois generators: r1 -> z r1; the cubic 3-cycle; conjugation z -> c - z
        auto ident = [&] {
            std::vector<TowerElem> im;
            for (size_t j = 0; j < t.tower->levels(); ++j) im.push_back(t.tower->generator(j));
            return im;
        };
        int ci = t.tower->level_index("c"), zi = t.tower->level_index("z"),
            r1i = t.tower->level_index("r1"), r2i = t.tower->level_index("r2");
        {
            auto im = ident();
            im[static_cast<size_t>(r1i)] = r1 * z;
            t.galois.push_back(FieldAut::define(t.tower, std::move(im)));
        }
        {
            auto im = ident();
            im[static_cast<size_t>(zi)] = lift_prefix(cgen, t.tower) - z; // zeta -> zeta^-1
            t.galois.push_back(FieldAut::define(t.tower, std::move(im)));
        }
        bool attached = false;
        for (int e1 = 0; e1 < 7 && !attached; ++e1)
            for (int e2 = 0; e2 < 7 && !attached; ++e2) {
                auto im = ident();
                im[static_cast<size_t>(ci)] = betas[1];
                im[static_cast<size_t>(zi)] = z * z;
                im[static_cast<size_t>(r1i)] = t.tower->generator(static_cast<size_t>(r2i)) * z.pow(e1);
                im[static_cast<size_t>(r2i)] = r3 * z.pow(e2);
                try {
                    t.galois.push_back(FieldAut::define(t.tower, std::move(im)));
                    attached = true;
                } catch (const NotAnAutomorphism&) {
                }
            }
        return t;
    }
    if (row == 6 || row == 10) {
        Rational gamma = params.get("gamma");
        if (is_zero(gamma)) throw ZeroParameter("gamma != 0");
        if (variant == 1) gamma = gamma * gamma * gamma;
        TowerBuilder tb;
        TowerElem i_el, s2_el;
        if (row == 6) { // k = Q(i, sqrt 2)
            i_el = tb.adjoin_i();
            s2_el = tb.adjoin_radical(2, 2, "s2");
            t.base_level = 2;
        } else { // k = Q(sqrt 2)
            s2_el = tb.adjoin_radical(2, 2, "s2");
            i_el = tb.adjoin_i();
            t.base_level = 1;
        }
        TowerElem r8 = tb.adjoin_radical(Rational(-7) * gamma * gamma, 8, "r8");
        t.tower = tb.tower();
        i_el = lift_prefix(i_el, t.tower);
        s2_el = lift_prefix(s2_el, t.tower);
        r8 = lift_prefix(r8, t.tower);
        if (variant != 0) t.twist_params.scalars["variant_gamma"] = gamma;
        TowerElem w7 = r8.pow(4) * Rational(1 / gamma);
        TowerElem eps = (w7 - t.tower->one()) * Rational(1, 2);
        // phi3^{-1} = [[1/2,1/2,0],[-i/2,i/2,0],[0,0,1]]
        ProjMatrix p3i(t.tower);
        p3i.set(0, 0, t.tower->from_rational(Rational(1, 2)));
        p3i.set(0, 1, t.tower->from_rational(Rational(1, 2)));
        p3i.set(1, 0, -(i_el * Rational(1, 2)));
        p3i.set(1, 1, i_el * Rational(1, 2));
        p3i.set(2, 2, t.tower->one());
        ProjMatrix d(t.tower);
        d.set(0, 0, r8);
        d.set(1, 1, -(r8.inverse() * gamma));
        d.set(2, 2, (t.tower->one() + s2_el * Rational(2) + w7).inverse());
        // compose down to the k-rational model C_0: phi = phi2^{-1} phi3^{-1} d
        ProjMatrix phi2(t.tower);
        TowerElem cc = eps * Rational(2) + t.tower->from_rational(3);
        phi2.set(0, 0, -eps); phi2.set(0, 1, t.tower->one()); phi2.set(0, 2, cc);
        phi2.set(1, 0, cc); phi2.set(1, 1, -eps); phi2.set(1, 2, t.tower->one());
        phi2.set(2, 0, t.tower->one()); phi2.set(2, 1, cc); phi2.set(2, 2, -eps);
        t.iso = phi2.adjugate() * (p3i * d);
        t.source_curve = klein_f0(t.tower);
        t.curve = rationalized_over(substitute(t.source_curve, t.iso), t.base_level);
        // Gal(L/k): r8 -> zeta8 r8 (and i -> -i for row 10)
        TowerElem z8 = (t.tower->one() + i_el) * s2_el * Rational(1, 2);
        int r8i = t.tower->level_index("r8");
        {
            std::vector<TowerElem> im;
            for (size_t j = 0; j < t.tower->levels(); ++j) im.push_back(t.tower->generator(j));
            im[static_cast<size_t>(r8i)] = r8 * z8;
            t.galois.push_back(FieldAut::define(t.tower, std::move(im)));
        }
        if (row == 10) {
            int ii = t.tower->level_index("i");
            std::vector<TowerElem> im;
            for (size_t j = 0; j < t.tower->levels(); ++j) im.push_back(t.tower->generator(j));
            im[static_cast<size_t>(ii)] = -i_el;
            t.galois.push_back(FieldAut::define(t.tower, std::move(im)));
        }
        return t;
    }
    if (row == 11)
        throw UnknownIndex(
            "row 11 is covered structurally (klein_psl_fourteen); no desk-scale instantiation");
    throw UnknownIndex("klein_twist: row out of range");
}

Twist klein_sqrt7_twist(int case_index, const ParamMap& params) {
    Twist t;
    t.source_case = "klein-sqrt7-" + std::to_string(case_index);
    t.twist_params = params;
    t.base_level = 1; // k = Q(sqrt(-7))

    TowerBuilder tb;
    TowerElem w7 = tb.adjoin_radical(-7, 2, "w7");

    if (case_index == 5 || case_index == 6) {
        Rational a = params.get("a"), b = params.get("b");
        if (is_zero(a) || is_zero(b)) throw ZeroParameter("cases 5/6: a, b nonzero");
        TowerElem sa = tb.lift(tb.adjoin_radical(a, 2, "sa"));
        TowerElem sb = tb.lift(tb.adjoin_radical(b, 2, "sb"));
        sa = tb.lift(sa);
        t.tower = tb.tower();
        w7 = lift_prefix(w7, t.tower);
        TowerElem eps = ((case_index == 5 ? w7 : -w7) - t.tower->one()) * Rational(1, 2);
        t.source_curve = klein_fs4(t.tower, eps);
        ProjMatrix d(t.tower);
        d.set(0, 0, lift_prefix(sa, t.tower));
        d.set(1, 1, lift_prefix(sb, t.tower));
        d.set(2, 2, t.tower->one());
        t.iso = d;
        t.curve = rationalized_over(substitute(t.source_curve, t.iso), 1);
        t.galois = standard_tower_automorphisms(t.tower, 1);
        return t;
    }
    if (case_index >= 12 && case_index <= 15) {
        auto& cu = params.get_list("cubic");
        QPoly q{{cu[0], cu[1], cu[2], Rational(1)}};
        Rational disc = CubicData::discriminant(q);
        bool cyclic_wanted = (case_index == 12 || case_index == 13);
        bool is_square = rational_nth_root(disc, 2).has_value();
        if (cyclic_wanted && !is_square)
            throw RestrictionViolated("cases 12/13 need a cyclic cubic (square discriminant)");
        if (!cyclic_wanted && is_square)
            throw RestrictionViolated("cases 14/15 need an S3 cubic (nonsquare discriminant)");
        // sqrt of the root product must lie in k = Q(sqrt(-7))
        Rational e3 = -cu[0];
        TowerElem sprod = tb.rational(0);
        if (auto rr = rational_nth_root(e3, 2)) {
            sprod = tb.rational(*rr);
        } else if (auto r7 = rational_nth_root(e3 / Rational(-7), 2)) {
            sprod = lift_prefix(w7, tb.tower()) * *r7;
        } else {
            throw PolNotInClass("cases 12-15: root product is not a square in Q(sqrt(-7))");
        }
        CubicData cd = CubicData::make_in(tb, q);
        TowerElem sa = tb.adjoin_root_over({-tb.lift(cd.roots[0]), tb.rational(0), tb.rational(1)},
                                           "sa", Annotation::opaque());
        TowerElem sb = tb.adjoin_root_over({-tb.lift(cd.roots[1]), tb.rational(0), tb.rational(1)},
                                           "sb", Annotation::opaque());
        sa = tb.lift(sa);
        t.tower = tb.tower();
        w7 = lift_prefix(w7, t.tower);
        TowerElem sc = (sa * sb).inverse() * lift_prefix(sprod, t.tower);
        TowerElem eps = ((case_index % 2 == 0 ? w7 : -w7) - t.tower->one()) * Rational(1, 2);
        t.source_curve = klein_fs4(t.tower, eps);
        ProjMatrix V(t.tower);
        std::array<TowerElem, 3> rad = {sa, sb, sc};
        for (int i = 0; i < 3; ++i) {
            TowerElem ri = lift_prefix(cd.roots[static_cast<size_t>(i)], t.tower);
            V.set(i, 0, rad[static_cast<size_t>(i)]);
            V.set(i, 1, rad[static_cast<size_t>(i)] * ri);
            V.set(i, 2, rad[static_cast<size_t>(i)] * ri * ri);
        }
        t.iso = V;
        t.curve = rationalized_over(substitute(t.source_curve, t.iso), 1);
        t.galois = standard_tower_automorphisms(t.tower, 1);
        attach_sqrt_vandermonde_galois(t, cd, lift_prefix(sprod, t.tower));
        return t;
    }
    throw UnknownIndex("klein_sqrt7_twist: cases 5, 6, 12..15 only");
}

} // namespace quartwist
