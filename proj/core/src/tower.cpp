#include "quartwist/tower.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace quartwist {

// ---------------------------------------------------------------- Annotation

Annotation Annotation::radical(const Rational& x, unsigned n) {
    Annotation a;
    a.kind = Kind::Radical;
    a.radicand = x;
    a.n = n;
    return a;
}
Annotation Annotation::cyclotomic(unsigned n) {
    Annotation a;
    a.kind = Kind::Cyclotomic;
    a.n = n;
    return a;
}
Annotation Annotation::root_of(const std::string& poly_text) {
    Annotation a;
    a.kind = Kind::RootOf;
    a.text = poly_text;
    return a;
}
Annotation Annotation::opaque() { return Annotation{}; }

std::string Annotation::to_string() const {
    switch (kind) {
        case Kind::Radical:
            return "radical(" + rational_str(radicand) + "," + std::to_string(n) + ")";
        case Kind::Cyclotomic:
            return "cyclotomic(" + std::to_string(n) + ")";
        case Kind::RootOf:
            return "root-of(" + text + ")";
        case Kind::Opaque:
            return "opaque";
    }
    return "opaque";
}

Annotation Annotation::parse(const std::string& s) {
    if (s.rfind("radical(", 0) == 0) {
        auto inner = s.substr(8, s.size() - 9);
        auto comma = inner.rfind(',');
        if (comma == std::string::npos) throw IoError("bad annotation: " + s);
        return radical(parse_rational(inner.substr(0, comma)),
                       static_cast<unsigned>(std::stoul(inner.substr(comma + 1))));
    }
    if (s.rfind("cyclotomic(", 0) == 0)
        return cyclotomic(static_cast<unsigned>(std::stoul(s.substr(11, s.size() - 12))));
    if (s.rfind("root-of(", 0) == 0) return root_of(s.substr(8, s.size() - 9));
    return opaque();
}

// ------------------------------------------------------------------- TowerSpec

bool TowerSpec::operator==(const TowerSpec& o) const {
    if (levels.size() != o.levels.size()) return false;
    for (size_t i = 0; i < levels.size(); ++i) {
        if (levels[i].name != o.levels[i].name) return false;
        if (levels[i].degree != o.levels[i].degree) return false;
        if (levels[i].modulus != o.levels[i].modulus) return false;
    }
    return true;
}

// ---------------------------------------------------------------------- Tower

TowerPtr Tower::build(TowerSpec spec) {
    auto t = TowerPtr(new Tower());
    auto* m = const_cast<Tower*>(t.get());
    m->stride_.push_back(1);
    for (size_t j = 0; j < spec.levels.size(); ++j) {
        auto& lv = spec.levels[j];
        size_t sub = m->stride_.back();
        if (lv.degree < 2) throw MalformedSpec("level " + lv.name + ": degree < 2");
        if (lv.modulus.size() != lv.degree + 1)
            throw MalformedSpec("level " + lv.name + ": modulus coefficient count");
        for (auto& blk : lv.modulus)
            if (blk.size() != sub)
                throw MalformedSpec("level " + lv.name + ": coefficient from a wrong level");
        // monic: leading block == 1
        const auto& lead = lv.modulus.back();
        if (lead[0] != 1) throw MalformedSpec("level " + lv.name + ": modulus not monic");
        for (size_t i = 1; i < lead.size(); ++i)
            if (!is_zero(lead[i])) throw MalformedSpec("level " + lv.name + ": modulus not monic");
        for (size_t i = 0; i < j; ++i)
            if (spec.levels[i].name == lv.name)
                throw MalformedSpec("duplicate generator name " + lv.name);
        m->stride_.push_back(sub * lv.degree);
    }
    m->spec_ = std::move(spec);
    return t;
}

TowerPtr Tower::rationals() { return build(TowerSpec{}); }

int Tower::level_index(const std::string& gen_name) const {
    for (size_t j = 0; j < spec_.levels.size(); ++j)
        if (spec_.levels[j].name == gen_name) return static_cast<int>(j);
    return -1;
}

bool Tower::prefix_of(const Tower& bigger) const {
    if (levels() > bigger.levels()) return false;
    for (size_t j = 0; j < levels(); ++j) {
        if (spec_.levels[j].name != bigger.spec_.levels[j].name) return false;
        if (spec_.levels[j].degree != bigger.spec_.levels[j].degree) return false;
        if (spec_.levels[j].modulus != bigger.spec_.levels[j].modulus) return false;
    }
    return true;
}

TowerElem Tower::zero() const {
    return TowerElem(shared_from_this(), std::vector<Rational>(stride_.back()));
}
TowerElem Tower::one() const { return from_rational(1); }

TowerElem Tower::from_rational(const Rational& q) const {
    std::vector<Rational> c(stride_.back());
    c[0] = q;
    return TowerElem(shared_from_this(), std::move(c));
}

TowerElem Tower::generator(size_t level) const {
    if (level >= levels()) throw TowerMismatch("generator level out of range");
    std::vector<Rational> c(stride_.back());
    c[stride_[level]] = 1;
    return TowerElem(shared_from_this(), std::move(c));
}

TowerElem Tower::from_coords(std::vector<Rational> coords) const {
    if (coords.size() != stride_.back()) throw TowerMismatch("coordinate size mismatch");
    for (auto& q : coords) q.canonicalize(); // GMP rational ops assume canonical form
    return TowerElem(shared_from_this(), std::move(coords));
}

// ------------------------------------------------------- flat block arithmetic

void Tower::b_add(size_t level, Rational* a, const Rational* b) const {
    for (size_t i = 0; i < stride_[level]; ++i) a[i] += b[i];
}
void Tower::b_sub(size_t level, Rational* a, const Rational* b) const {
    for (size_t i = 0; i < stride_[level]; ++i) a[i] -= b[i];
}
void Tower::b_neg(size_t level, Rational* a) const {
    for (size_t i = 0; i < stride_[level]; ++i)
        if (!is_zero(a[i])) a[i] = -a[i];
}
void Tower::b_scal(size_t level, Rational* a, const Rational& c) const {
    for (size_t i = 0; i < stride_[level]; ++i)
        if (!is_zero(a[i])) a[i] *= c;
}
bool Tower::b_zero(size_t level, const Rational* a) const {
    for (size_t i = 0; i < stride_[level]; ++i)
        if (!is_zero(a[i])) return false;
    return true;
}

void Tower::b_mul(size_t level, Rational* out, const Rational* a, const Rational* b) const {
    if (level == 0) {
        out[0] = a[0] * b[0];
        return;
    }
    const size_t d = spec_.levels[level - 1].degree;
    const size_t s = stride_[level - 1];
    // fast path: one factor is a plain rational
    auto rational_only = [&](const Rational* v) -> const Rational* {
        for (size_t i = 1; i < d * s; ++i)
            if (!is_zero(v[i])) return nullptr;
        return &v[0];
    };
    if (const Rational* ra = rational_only(a)) {
        for (size_t i = 0; i < d * s; ++i) out[i] = is_zero(b[i]) ? Rational(0) : b[i] * *ra;
        return;
    }
    if (const Rational* rb = rational_only(b)) {
        for (size_t i = 0; i < d * s; ++i) out[i] = is_zero(a[i]) ? Rational(0) : a[i] * *rb;
        return;
    }
    std::vector<Rational> tmp((2 * d - 1) * s);
    std::vector<Rational> scratch(s);
    for (size_t p = 0; p < d; ++p) {
        if (b_zero(level - 1, a + p * s)) continue;
        for (size_t q = 0; q < d; ++q) {
            if (b_zero(level - 1, b + q * s)) continue;
            b_mul(level - 1, scratch.data(), a + p * s, b + q * s);
            b_add(level - 1, tmp.data() + (p + q) * s, scratch.data());
        }
    }
    const auto& mod = spec_.levels[level - 1].modulus;
    for (size_t t = 2 * d - 2; t >= d; --t) {
        Rational* top = tmp.data() + t * s;
        if (!b_zero(level - 1, top)) {
            for (size_t i = 0; i < d; ++i) {
                if (b_zero(level - 1, mod[i].data())) continue;
                b_mul(level - 1, scratch.data(), top, mod[i].data());
                b_sub(level - 1, tmp.data() + (t - d + i) * s, scratch.data());
            }
            std::fill(top, top + s, Rational(0));
        }
        if (t == d) break;
    }
    std::copy(tmp.begin(), tmp.begin() + static_cast<long>(d * s), out);
}

namespace {

// polynomial over the level-(level) subtower, coefficients as flat blocks
struct BlockPoly {
    std::vector<std::vector<Rational>> c; // constant term first
};

int bp_degree(const Tower& tw, size_t level, const BlockPoly& p) {
    for (int i = static_cast<int>(p.c.size()) - 1; i >= 0; --i)
        if (!tw.b_zero(level, p.c[static_cast<size_t>(i)].data())) return i;
    return -1;
}

} // namespace

void Tower::b_inv(size_t level, Rational* out, const Rational* a) const {
    if (b_zero(level, a)) throw ZeroInverse("inverse of zero");
    if (level == 0) {
        out[0] = 1 / a[0];
        return;
    }
    const size_t d = spec_.levels[level - 1].degree;
    const size_t s = stride_[level - 1];
    const size_t sub = level - 1;

    BlockPoly r0, r1, t0, t1;
    r0.c = spec_.levels[level - 1].modulus;
    r1.c.resize(d);
    for (size_t i = 0; i < d; ++i) r1.c[i].assign(a + i * s, a + (i + 1) * s);
    t0.c.assign(1, std::vector<Rational>(s));
    t1.c.assign(1, std::vector<Rational>(s));
    t1.c[0][0] = 1;

    std::vector<Rational> scratch(s), inv_lead(s);
    auto bp_trim = [&](BlockPoly& p) {
        int dg = bp_degree(*this, sub, p);
        p.c.resize(static_cast<size_t>(dg + 1));
    };
    auto bp_submul = [&](BlockPoly& p, const std::vector<Rational>& coef, size_t shift,
                         const BlockPoly& q) {
        // p -= coef * x^shift * q
        if (p.c.size() < q.c.size() + shift) p.c.resize(q.c.size() + shift, std::vector<Rational>(s));
        for (size_t i = 0; i < q.c.size(); ++i) {
            if (b_zero(sub, q.c[i].data())) continue;
            b_mul(sub, scratch.data(), coef.data(), q.c[i].data());
            b_sub(sub, p.c[i + shift].data(), scratch.data());
        }
    };

    while (true) {
        int d1 = bp_degree(*this, sub, r1);
        if (d1 < 0) throw ReducibleModulus("zero divisor met in tower inversion");
        if (d1 == 0) {
            // invert the constant and combine
            b_inv(sub, inv_lead.data(), r1.c[0].data());
            std::fill(out, out + d * s, Rational(0));
            for (size_t i = 0; i < t1.c.size() && i < d; ++i) {
                if (b_zero(sub, t1.c[i].data())) continue;
                b_mul(sub, scratch.data(), t1.c[i].data(), inv_lead.data());
                b_add(sub, out + i * s, scratch.data());
            }
            return;
        }
        // divide r0 by r1
        int d0 = bp_degree(*this, sub, r0);
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(t0, t1);
            continue;
        }
        b_inv(sub, inv_lead.data(), r1.c[static_cast<size_t>(d1)].data());
        BlockPoly q;
        q.c.assign(static_cast<size_t>(d0 - d1 + 1), std::vector<Rational>(s));
        BlockPoly rem = r0;
        for (int k = d0 - d1; k >= 0; --k) {
            int top = d1 + k;
            if (b_zero(sub, rem.c[static_cast<size_t>(top)].data())) continue;
            b_mul(sub, q.c[static_cast<size_t>(k)].data(),
                  rem.c[static_cast<size_t>(top)].data(), inv_lead.data());
            bp_submul(rem, q.c[static_cast<size_t>(k)], static_cast<size_t>(k), r1);
        }
        bp_trim(rem);
        // (r0, r1) <- (r1, rem); (t0, t1) <- (t1, t0 - q*t1)
        BlockPoly t2 = t0;
        for (size_t k = 0; k < q.c.size(); ++k) {
            if (b_zero(sub, q.c[k].data())) continue;
            bp_submul(t2, q.c[k], k, t1);
        }
        bp_trim(t2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
}

// ------------------------------------------------------------------ TowerElem

TowerElem::TowerElem(TowerPtr tower, std::vector<Rational> coords)
    : tower_(std::move(tower)), c_(std::move(coords)) {
    assert(tower_ && c_.size() == static_cast<size_t>(tower_->degree()));
}

bool TowerElem::is_zero() const {
    for (auto& q : c_)
        if (!quartwist::is_zero(q)) return false;
    return true;
}

bool TowerElem::operator==(const TowerElem& o) const {
    if (!tower_ || !o.tower_) throw TowerMismatch("comparing uninitialized elements");
    if (!tower_->same_as(*o.tower_)) throw TowerMismatch("elements of different towers");
    return c_ == o.c_;
}

void TowerElem::check_same_tower(const TowerElem& o) const {
    if (!tower_ || !o.tower_) throw TowerMismatch("uninitialized element");
    if (tower_.get() == o.tower_.get()) return;
    if (!tower_->same_as(*o.tower_)) throw TowerMismatch("elements of different towers");
}

int TowerElem::level_of() const {
    size_t n = tower_->levels();
    while (n > 0) {
        bool clean = true;
        for (size_t i = tower_->stride(n - 1); i < tower_->stride(n); ++i)
            if (!quartwist::is_zero(c_[i])) { clean = false; break; }
        if (!clean) return static_cast<int>(n);
        --n;
    }
    return 0;
}

std::optional<Rational> TowerElem::as_rational() const {
    if (level_of() != 0) return std::nullopt;
    return c_[0];
}

TowerElem TowerElem::operator+(const TowerElem& o) const {
    check_same_tower(o);
    auto out = c_;
    tower_->b_add(tower_->levels(), out.data(), o.c_.data());
    return TowerElem(tower_, std::move(out));
}
TowerElem TowerElem::operator-(const TowerElem& o) const {
    check_same_tower(o);
    auto out = c_;
    tower_->b_sub(tower_->levels(), out.data(), o.c_.data());
    return TowerElem(tower_, std::move(out));
}
TowerElem TowerElem::operator-() const {
    auto out = c_;
    tower_->b_neg(tower_->levels(), out.data());
    return TowerElem(tower_, std::move(out));
}
TowerElem TowerElem::operator*(const TowerElem& o) const {
    check_same_tower(o);
    std::vector<Rational> out(c_.size());
    tower_->b_mul(tower_->levels(), out.data(), c_.data(), o.c_.data());
    return TowerElem(tower_, std::move(out));
}
TowerElem TowerElem::operator*(const Rational& c) const {
    auto out = c_;
    tower_->b_scal(tower_->levels(), out.data(), c);
    return TowerElem(tower_, std::move(out));
}
TowerElem TowerElem::inverse() const {
    std::vector<Rational> out(c_.size());
    tower_->b_inv(tower_->levels(), out.data(), c_.data());
    return TowerElem(tower_, std::move(out));
}

TowerElem TowerElem::pow(long e) const {
    if (e == 0) return tower_->one();
    if (e < 0) return inverse().pow(-e);
    TowerElem base = *this, acc = tower_->one();
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = (e >>= 1) ? base * base : base;
    }
    return acc;
}

// ------------------------------------------------------------------- FieldAut

namespace {

// map an element of `src` (possibly a prefix of the images' tower count)
// through generator images living in `target`
TowerElem map_blocks(const Tower& src, size_t level, const Rational* blk,
                     const std::vector<TowerElem>& images, const TowerPtr& target) {
    if (level == 0) return target->from_rational(blk[0]);
    const size_t d = src.level(level - 1).degree;
    const size_t s = src.stride(level - 1);
    const TowerElem& img = images[level - 1];
    TowerElem acc = map_blocks(src, level - 1, blk + (d - 1) * s, images, target);
    for (size_t i = d - 1; i-- > 0;) {
        acc = acc * img;
        TowerElem lo = map_blocks(src, level - 1, blk + i * s, images, target);
        acc = acc + lo;
    }
    return acc;
}

} // namespace

FieldAut FieldAut::define(TowerPtr source, std::vector<TowerElem> images) {
    return define_into(source, source, std::move(images));
}

FieldAut FieldAut::define_into(TowerPtr source, TowerPtr target, std::vector<TowerElem> images) {
    if (images.size() != source->levels())
        throw NotAnAutomorphism("need one image per generator");
    for (auto& img : images)
        if (!img.tower()->same_as(*target)) throw TowerMismatch("image in a wrong tower");
    // validate: sigma(modulus_j)(images[j]) == 0
    for (size_t j = 0; j < source->levels(); ++j) {
        const auto& lv = source->level(j);
        TowerElem acc = map_blocks(*source, j, lv.modulus[lv.degree].data(), images, target);
        for (size_t i = lv.degree; i-- > 0;) {
            acc = acc * images[j];
            acc = acc + map_blocks(*source, j, lv.modulus[i].data(), images, target);
        }
        if (!acc.is_zero())
            throw NotAnAutomorphism("modulus of level " + lv.name +
                                    " does not vanish at the proposed image");
    }
    FieldAut f;
    f.source_ = std::move(source);
    f.target_ = std::move(target);
    f.images_ = std::move(images);
    f.fixed_level_ = 0;
    if (f.source_->same_as(*f.target_)) {
        for (size_t j = 0; j < f.source_->levels(); ++j) {
            if (f.images_[j] == f.target_->generator(j))
                f.fixed_level_ = j + 1;
            else
                break;
        }
    }
    return f;
}

TowerElem FieldAut::apply(const TowerElem& a) const {
    if (!a.tower()->same_as(*source_)) throw TowerMismatch("element not in the source tower");
    if (source_->same_as(*target_) &&
        static_cast<size_t>(a.level_of()) <= fixed_level_)
        return a;
    return map_blocks(*source_, source_->levels(), a.coords().data(), images_, target_);
}

// --------------------------------------------------------------- lift / build

TowerElem lift_prefix(const TowerElem& a, const TowerPtr& bigger) {
    if (a.tower()->same_as(*bigger)) return bigger->from_coords(a.coords());
    if (!a.tower()->prefix_of(*bigger))
        throw CommonTowerRequired("tower is not a prefix of the target tower");
    std::vector<Rational> c(static_cast<size_t>(bigger->degree()));
    std::copy(a.coords().begin(), a.coords().end(), c.begin());
    return bigger->from_coords(std::move(c));
}

TowerElem TowerBuilder::lift(const TowerElem& a) const { return lift_prefix(a, tower_); }

std::string TowerBuilder::unique_name(const std::string& hint) const {
    if (tower_->level_index(hint) < 0) return hint;
    for (int k = 2;; ++k) {
        std::string cand = hint + std::to_string(k);
        if (tower_->level_index(cand) < 0) return cand;
    }
}

TowerElem TowerBuilder::generator(const std::string& name) const {
    int idx = tower_->level_index(name);
    if (idx < 0) throw TowerMissingConstant("no generator named " + name);
    return tower_->generator(static_cast<size_t>(idx));
}

TowerElem TowerBuilder::adjoin_root(const QPoly& monic, const std::string& name, Annotation ann) {
    int d = monic.degree();
    if (d < 2 || !monic.monic()) throw MalformedSpec("adjoin_root: need a monic poly of degree >= 2");
    if (!rational_roots(monic).empty())
        throw ReducibleModulus("adjoin_root: polynomial has a rational root");
    std::vector<TowerElem> coeffs;
    for (int i = 0; i <= d; ++i)
        coeffs.push_back(rational(i < static_cast<int>(monic.c.size()) ? monic.c[static_cast<size_t>(i)]
                                                                        : Rational(0)));
    return adjoin_root_over(coeffs, name, std::move(ann));
}

TowerElem TowerBuilder::adjoin_root_over(const std::vector<TowerElem>& monic_coeffs,
                                         const std::string& name, Annotation ann) {
    if (monic_coeffs.size() < 3) throw MalformedSpec("adjoin_root_over: degree < 2");
    // reuse an existing level with the identical modulus
    for (size_t j = 0; j < tower_->levels(); ++j) {
        const auto& lv = tower_->level(j);
        if (lv.degree + 1 != monic_coeffs.size()) continue;
        bool same = true;
        for (size_t i = 0; i <= lv.degree && same; ++i) {
            std::vector<Rational> blk(static_cast<size_t>(tower_->degree()));
            std::copy(lv.modulus[i].begin(), lv.modulus[i].end(), blk.begin());
            if (!(tower_->from_coords(std::move(blk)) == lift(monic_coeffs[i]))) same = false;
        }
        if (same) return tower_->generator(j);
    }
    TowerSpec spec = tower_->spec();
    TowerLevel lv;
    lv.name = unique_name(name);
    lv.degree = static_cast<unsigned>(monic_coeffs.size() - 1);
    lv.annotation = std::move(ann);
    for (auto& c : monic_coeffs) {
        if (!c.tower()->same_as(*tower_)) throw TowerMismatch("modulus coefficient in a wrong tower");
        lv.modulus.push_back(c.coords());
    }
    spec.levels.push_back(std::move(lv));
    tower_ = Tower::build(std::move(spec));
    return tower_->generator(tower_->levels() - 1);
}

TowerElem TowerBuilder::adjoin_i() {
    for (size_t j = 0; j < tower_->levels(); ++j) {
        const auto& lv = tower_->level(j);
        if (lv.annotation.kind == Annotation::Kind::Cyclotomic && lv.annotation.n == 4)
            return tower_->generator(j);
        if (lv.annotation.kind == Annotation::Kind::Radical && lv.annotation.n == 2 &&
            lv.annotation.radicand == -1)
            return tower_->generator(j);
    }
    QPoly p{{Rational(1), Rational(0), Rational(1)}};
    std::vector<TowerElem> coeffs{rational(1), rational(0), rational(1)};
    TowerSpec spec = tower_->spec();
    TowerLevel lv;
    lv.name = unique_name("i");
    lv.degree = 2;
    lv.annotation = Annotation::cyclotomic(4);
    for (auto& c : coeffs) lv.modulus.push_back(c.coords());
    spec.levels.push_back(std::move(lv));
    tower_ = Tower::build(std::move(spec));
    return tower_->generator(tower_->levels() - 1);
}

QPoly cyclotomic_poly(unsigned n) {
    auto mk = [](std::initializer_list<long> cs) {
        QPoly p;
        for (long c : cs) p.c.push_back(Rational(c));
        return p;
    };
    switch (n) {
        case 3: return mk({1, 1, 1});
        case 4: return mk({1, 0, 1});
        case 7: return mk({1, 1, 1, 1, 1, 1, 1});
        case 8: return mk({1, 0, 0, 0, 1});
        case 9: return mk({1, 0, 0, 1, 0, 0, 1});
        case 12: return mk({1, 0, -1, 0, 1});
        default: throw MalformedSpec("cyclotomic_poly: unsupported conductor " + std::to_string(n));
    }
}

TowerElem TowerBuilder::adjoin_zeta(unsigned n) {
    for (size_t j = 0; j < tower_->levels(); ++j) {
        const auto& lv = tower_->level(j);
        if (lv.annotation.kind != Annotation::Kind::Cyclotomic) continue;
        if (lv.annotation.n == n) return tower_->generator(j);
        if (n == 3 && lv.annotation.n == 9) return tower_->generator(j).pow(3);
    }
    if (n == 4) return adjoin_i();
    if (n == 3) {
        // reuse sqrt(-3) if present
        for (size_t j = 0; j < tower_->levels(); ++j) {
            const auto& lv = tower_->level(j);
            if (lv.annotation.kind == Annotation::Kind::Radical && lv.annotation.n == 2 &&
                lv.annotation.radicand == -3)
                return (tower_->generator(j) - tower_->one()) * Rational(1, 2);
        }
    }
    QPoly p = cyclotomic_poly(n);
    std::string nm = "z" + std::to_string(n);
    return adjoin_root(p, nm, Annotation::cyclotomic(n));
}

TowerElem TowerBuilder::adjoin_radical(const Rational& x, unsigned n, const std::string& name_hint) {
    if (n == 0) throw ZeroParameter("adjoin_radical: n = 0");
    if (quartwist::is_zero(x)) throw ZeroParameter("adjoin_radical: zero radicand");

    // split x = outside^n * y with y as small as possible
    Rational outside = 1, y = 1;
    {
        Int num = x.get_num(), den = x.get_den();
        Rational onum = 1, oden = 1, ynum = 1, yden = 1;
        for (auto& [p, e] : factorize(num)) {
            Rational pw = 1;
            for (unsigned i = 0; i < e / n; ++i) onum *= Rational(p);
            for (unsigned i = 0; i < e % n; ++i) ynum *= Rational(p);
            (void)pw;
        }
        for (auto& [p, e] : factorize(den)) {
            for (unsigned i = 0; i < e / n; ++i) oden *= Rational(p);
            for (unsigned i = 0; i < e % n; ++i) yden *= Rational(p);
        }
        outside = onum / oden;
        y = ynum / yden;
        if (sgn(x) < 0) {
            if (n % 2 == 1)
                outside = -outside;
            else
                y = -y;
        }
    }

    // reduce the root index by the gcd of exponents
    unsigned nn = n;
    while (nn > 1) {
        unsigned g = 0;
        for (auto& [p, e] : factorize(y.get_num())) g = std::gcd(g, e);
        for (auto& [p, e] : factorize(y.get_den())) g = std::gcd(g, e);
        if (y == 1 || y == -1) g = nn;
        g = std::gcd(g, nn);
        if (sgn(y) < 0 && g % 2 == 0) {
            // sign cannot come out of an even root
            unsigned h = g;
            while (h % 2 == 0) h /= 2;
            g = h;
        }
        if (g <= 1) break;
        auto root = rational_nth_root(y, g);
        if (!root) break;
        y = *root;
        nn /= g;
    }
    if (nn == 1) return rational(outside * y);
    if (y == 1) return rational(outside);

    // special cyclotomic reuses
    if (nn == 2) {
        auto have_zeta = [&](unsigned m) -> std::optional<TowerElem> {
            for (size_t j = 0; j < tower_->levels(); ++j) {
                const auto& lv = tower_->level(j);
                if (lv.annotation.kind == Annotation::Kind::Cyclotomic && lv.annotation.n == m)
                    return tower_->generator(j);
            }
            return std::nullopt;
        };
        if (y == -1) {
            if (auto i4 = have_zeta(4)) return *i4 * outside;
        }
        if (y == -3) {
            if (auto z3 = have_zeta(3)) return (*z3 * Rational(2) + tower_->one()) * outside;
            if (auto z9 = have_zeta(9)) return (z9->pow(3) * Rational(2) + tower_->one()) * outside;
        }
        if (y == -7) {
            if (auto z7 = have_zeta(7)) {
                TowerElem z = *z7;
                TowerElem w = z + z.pow(2) + z.pow(4) - z.pow(3) - z.pow(5) - z.pow(6);
                return w * outside;
            }
        }
        if (y == 2) {
            if (auto z8 = have_zeta(8)) return (*z8 + z8->pow(7)) * outside;
        }
    }

    // try products of existing radical generators
    {
        struct Gen { size_t level; Rational base; unsigned power; };
        std::vector<Gen> gens;
        for (size_t j = 0; j < tower_->levels(); ++j) {
            const auto& lv = tower_->level(j);
            if (lv.annotation.kind == Annotation::Kind::Radical && lv.annotation.n % nn == 0)
                gens.push_back({j, lv.annotation.radicand, lv.annotation.n / nn});
        }
        if (!gens.empty() && gens.size() <= 3) {
            std::vector<unsigned> expo(gens.size(), 0);
            while (true) {
                Rational prod = 1;
                for (size_t k = 0; k < gens.size(); ++k)
                    for (unsigned i = 0; i < expo[k]; ++i) prod *= gens[k].base;
                if (!quartwist::is_zero(prod)) {
                    Rational ratio = y / prod;
                    if (auto root = rational_nth_root(ratio, nn)) {
                        TowerElem e = rational(outside * *root);
                        for (size_t k = 0; k < gens.size(); ++k)
                            if (expo[k])
                                e = e * tower_->generator(gens[k].level)
                                        .pow(static_cast<long>(expo[k] * gens[k].power));
                        return e;
                    }
                }
                size_t k = 0;
                while (k < expo.size() && expo[k] + 1 == nn) expo[k++] = 0;
                if (k == expo.size()) break;
                expo[k]++;
            }
        }
    }

    if (!pure_radical_irreducible(y, nn))
        throw ReducibleModulus("t^" + std::to_string(nn) + " - (" + rational_str(y) +
                               ") is reducible over Q");
    QPoly p;
    p.c.assign(nn + 1, Rational(0));
    p.c[0] = -y;
    p.c[nn] = 1;
    std::vector<TowerElem> coeffs;
    for (auto& q : p.c) coeffs.push_back(rational(q));
    TowerElem g = adjoin_root_over(coeffs, unique_name(name_hint), Annotation::radical(y, nn));
    return g * outside;
}

} // namespace quartwist
