#include "quartwist/cubic.hpp"

#include <algorithm>

namespace quartwist {

const char* to_string(CubicData::GaloisType t) {
    switch (t) {
        case CubicData::GaloisType::Split: return "split";
        case CubicData::GaloisType::C2: return "C2";
        case CubicData::GaloisType::C3: return "C3";
        case CubicData::GaloisType::S3: return "S3";
    }
    return "?";
}

Rational CubicData::discriminant(const QPoly& p) {
    // disc(t^3 + a t^2 + b t + c) = 18abc - 4a^3c + a^2b^2 - 4b^3 - 27c^2
    Rational c = p.c[0], b = p.c[1], a = p.c[2];
    return Rational(18) * a * b * c - Rational(4) * a * a * a * c + a * a * b * b -
           Rational(4) * b * b * b - Rational(27) * c * c;
}

Rational CubicData::power_sum(unsigned j) const {
    // Newton's identities on the elementary symmetric functions
    Rational e1 = -poly.c[2], e2 = poly.c[1], e3 = -poly.c[0];
    std::vector<Rational> S{Rational(3)};
    S.push_back(e1);
    if (j >= 2) S.push_back(e1 * S[1] - Rational(2) * e2);
    for (unsigned k = 3; k <= j; ++k)
        S.push_back(e1 * S[k - 1] - e2 * S[k - 2] + e3 * S[k - 3]);
    return S[std::min<size_t>(j, S.size() - 1)];
}

CubicData CubicData::make(const QPoly& monic_cubic) {
    TowerBuilder tb;
    return make_in(tb, monic_cubic);
}

CubicData CubicData::make_in(TowerBuilder& tb, const QPoly& p) {
    if (p.degree() != 3 || !p.monic()) throw ParamError("CubicData: need a monic cubic");
    CubicData cd;
    cd.poly = p;
    cd.disc = discriminant(p);
    if (is_zero(cd.disc)) throw ParamError("CubicData: cubic is not separable");

    auto rr = rational_roots(p);
    Rational a2 = p.c[2];

    if (rr.size() == 3) {
        cd.type = GaloisType::Split;
        auto d = rational_nth_root(cd.disc, 2);
        cd.tower = tb.tower();
        for (int i = 0; i < 3; ++i) cd.roots[static_cast<size_t>(i)] = tb.rational(rr[static_cast<size_t>(i)]);
        cd.sqrt_disc = tb.rational(d ? *d : Rational(0));
        if (!d) {
            // disc of a split cubic is ((a-b)(b-c)(c-a))^2, always a square
            Rational prod = (rr[0] - rr[1]) * (rr[1] - rr[2]) * (rr[2] - rr[0]);
            cd.sqrt_disc = tb.rational(prod);
        }
        return cd;
    }

    if (rr.size() == 1) {
        cd.type = GaloisType::C2;
        Rational r = rr[0];
        // p = (t - r)(t^2 + Bt + C)
        Rational B = a2 + r;
        Rational C = p.c[1] + r * B;
        Rational D = B * B - Rational(4) * C;
        TowerElem sq = tb.adjoin_radical(D, 2, "w");
        cd.tower = tb.tower();
        TowerElem alpha = (tb.rational(-B) + tb.lift(sq)) * Rational(1, 2);
        TowerElem beta = (tb.rational(-B) - tb.lift(sq)) * Rational(1, 2);
        cd.roots = {alpha, beta, tb.rational(r)};
        // disc = (alpha-beta)^2 (alpha-gamma)^2 (beta-gamma)^2; sqrt = (a-b)(a-g)(b-g)
        cd.sqrt_disc = (cd.roots[0] - cd.roots[1]) * (cd.roots[0] - cd.roots[2]) *
                       (cd.roots[1] - cd.roots[2]);
        return cd;
    }

    auto disc_root = rational_nth_root(cd.disc, 2);
    TowerElem w = tb.rational(0);
    if (disc_root) {
        cd.type = GaloisType::C3;
        w = tb.rational(*disc_root);
    } else {
        cd.type = GaloisType::S3;
        w = tb.adjoin_radical(cd.disc, 2, "w");
    }
    TowerElem alpha = tb.adjoin_root(p, "r", Annotation::root_of("cubic"));
    cd.tower = tb.tower();
    w = tb.lift(w);
    cd.sqrt_disc = w;
    // beta, gamma = (-(a2 + alpha) ± w / p'(alpha)) / 2
    TowerElem dp = tb.rational(p.c[1]) + alpha * Rational(2) * a2 + alpha * alpha * Rational(3);
    TowerElem ratio = w * dp.inverse();
    TowerElem minus_sum = tb.rational(-a2) - alpha;
    cd.roots = {alpha, (minus_sum + ratio) * Rational(1, 2), (minus_sum - ratio) * Rational(1, 2)};
    return cd;
}

std::vector<FieldAut> CubicData::galois_generators() const {
    std::vector<FieldAut> out;
    if (type == GaloisType::Split) return out;
    const TowerPtr& tw = tower;
    size_t n = tw->levels();
    auto ident = [&] {
        std::vector<TowerElem> imgs;
        for (size_t j = 0; j < n; ++j) imgs.push_back(tw->generator(j));
        return imgs;
    };
    int wlev = -1, rlev = -1;
    for (size_t j = 0; j < n; ++j) {
        if (tw->level(j).name == "w") wlev = static_cast<int>(j);
        if (tw->level(j).name == "r") rlev = static_cast<int>(j);
    }
    if (type == GaloisType::C2) {
        if (wlev < 0) return out;
        auto imgs = ident();
        imgs[static_cast<size_t>(wlev)] = -tw->generator(static_cast<size_t>(wlev));
        out.push_back(FieldAut::define(tw, std::move(imgs)));
        return out;
    }
    // C3 / S3: a 3-cycle alpha -> beta (or gamma), plus for S3 the conjugation w -> -w
    if (rlev >= 0) {
        for (const TowerElem* target : {&roots[1], &roots[2]}) {
            auto imgs = ident();
            imgs[static_cast<size_t>(rlev)] = *target;
            try {
                out.push_back(FieldAut::define(tw, std::move(imgs)));
                break;
            } catch (const NotAnAutomorphism&) {
            }
        }
    }
    if (type == GaloisType::S3 && wlev >= 0) {
        auto imgs = ident();
        imgs[static_cast<size_t>(wlev)] = -tw->generator(static_cast<size_t>(wlev));
        out.push_back(FieldAut::define(tw, std::move(imgs)));
    }
    return out;
}

} // namespace quartwist
