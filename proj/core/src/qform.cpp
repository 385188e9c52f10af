#include "quartwist/qform.hpp"

#include <algorithm>
#include <cassert>

namespace quartwist {

int quartic_monomial_index(int j, int k, int l) {
    for (size_t i = 0; i < kQuarticMonomials.size(); ++i)
        if (kQuarticMonomials[i][0] == j && kQuarticMonomials[i][1] == k &&
            kQuarticMonomials[i][2] == l)
            return static_cast<int>(i);
    throw ParamError("not a degree-4 exponent triple");
}

TernaryQuartic::TernaryQuartic(TowerPtr tower) : tower_(std::move(tower)) {
    for (auto& c : c_) c = tower_->zero();
}

TernaryQuartic::TernaryQuartic(TowerPtr tower, std::array<TowerElem, 15> coeffs)
    : tower_(std::move(tower)), c_(std::move(coeffs)) {
    for (auto& c : c_)
        if (!c.tower()->same_as(*tower_)) throw TowerMismatch("form coefficient in a wrong tower");
}

const TowerElem& TernaryQuartic::coeff(int j, int k, int l) const {
    return c_[static_cast<size_t>(quartic_monomial_index(j, k, l))];
}

void TernaryQuartic::set_coeff(int j, int k, int l, TowerElem v) {
    if (!v.tower()->same_as(*tower_)) throw TowerMismatch("form coefficient in a wrong tower");
    c_[static_cast<size_t>(quartic_monomial_index(j, k, l))] = std::move(v);
}

bool TernaryQuartic::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const TowerElem& c) { return c.is_zero(); });
}

bool TernaryQuartic::operator==(const TernaryQuartic& o) const {
    for (size_t i = 0; i < 15; ++i)
        if (!(c_[i] == o.c_[i])) return false;
    return true;
}

TernaryQuartic TernaryQuartic::operator*(const TowerElem& s) const {
    TernaryQuartic out(tower_);
    for (size_t i = 0; i < 15; ++i) out.c_[i] = c_[i] * s;
    return out;
}

TernaryQuartic TernaryQuartic::operator*(const Rational& s) const {
    TernaryQuartic out(tower_);
    for (size_t i = 0; i < 15; ++i) out.c_[i] = c_[i] * s;
    return out;
}

TernaryQuartic TernaryQuartic::lifted(const TowerPtr& bigger) const {
    TernaryQuartic out(bigger);
    for (size_t i = 0; i < 15; ++i) out.c_[i] = lift_prefix(c_[i], bigger);
    return out;
}

TernaryQuartic TernaryQuartic::primitive_integral() const {
    Int num_gcd = 0, den_lcm = 1;
    int first_sign = 0;
    for (auto& c : c_) {
        auto q = c.as_rational();
        if (!q) throw TowerMismatch("primitive_integral: coefficients not rational");
        if (quartwist::is_zero(*q)) continue;
        if (first_sign == 0) first_sign = sgn(*q);
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q->get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q->get_den().get_mpz_t());
    }
    if (first_sign == 0) return *this;
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (first_sign < 0) scale = -scale;
    return *this * scale;
}

ProjMatrix::ProjMatrix(TowerPtr tower) : tower_(std::move(tower)) {
    for (auto& e : e_) e = tower_->zero();
    e_[0] = e_[4] = e_[8] = tower_->one();
}

ProjMatrix::ProjMatrix(TowerPtr tower, std::array<TowerElem, 9> entries)
    : tower_(std::move(tower)), e_(std::move(entries)) {
    for (auto& e : e_)
        if (!e.tower()->same_as(*tower_)) throw TowerMismatch("matrix entry in a wrong tower");
}

void ProjMatrix::set(int r, int c, TowerElem v) {
    if (!v.tower()->same_as(*tower_)) throw TowerMismatch("matrix entry in a wrong tower");
    e_[static_cast<size_t>(3 * r + c)] = std::move(v);
}

ProjMatrix ProjMatrix::operator*(const ProjMatrix& o) const {
    if (!tower_->same_as(*o.tower_)) throw TowerMismatch("matrix product across towers");
    ProjMatrix out(tower_);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            TowerElem acc = tower_->zero();
            for (int k = 0; k < 3; ++k) acc = acc + at(r, k) * o.at(k, c);
            out.set(r, c, std::move(acc));
        }
    return out;
}

ProjMatrix ProjMatrix::operator*(const TowerElem& s) const {
    ProjMatrix out(tower_);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out.set(r, c, at(r, c) * s);
    return out;
}

TowerElem ProjMatrix::det() const {
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

ProjMatrix ProjMatrix::adjugate() const {
    ProjMatrix out(tower_);
    auto co = [&](int r, int c) {
        int r1 = (r + 1) % 3, r2 = (r + 2) % 3, c1 = (c + 1) % 3, c2 = (c + 2) % 3;
        return at(r1, c1) * at(r2, c2) - at(r1, c2) * at(r2, c1);
    };
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out.set(r, c, co(c, r));
    return out;
}

ProjMatrix ProjMatrix::inverse() const {
    TowerElem d = det();
    if (d.is_zero()) throw ZeroInverse("singular matrix");
    return adjugate() * d.inverse();
}

ProjMatrix ProjMatrix::transpose() const {
    ProjMatrix out(tower_);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out.set(r, c, at(c, r));
    return out;
}

ProjMatrix ProjMatrix::projective_normal_form() const {
    for (const auto& e : e_) {
        if (e.is_zero()) continue;
        return *this * e.inverse();
    }
    throw ZeroInverse("zero matrix has no projective normal form");
}

bool ProjMatrix::proportional_to(const ProjMatrix& o) const {
    if (!tower_->same_as(*o.tower_)) throw TowerMismatch("comparing matrices across towers");
    int pivot = -1;
    for (int i = 0; i < 9; ++i)
        if (!o.e_[static_cast<size_t>(i)].is_zero()) { pivot = i; break; }
    if (pivot < 0) return is_scalar() && e_[0].is_zero();
    const TowerElem& op = o.e_[static_cast<size_t>(pivot)];
    const TowerElem& sp = e_[static_cast<size_t>(pivot)];
    if (sp.is_zero()) return false;
    for (int i = 0; i < 9; ++i) {
        if (i == pivot) continue;
        if (!(e_[static_cast<size_t>(i)] * op == o.e_[static_cast<size_t>(i)] * sp)) return false;
    }
    return true;
}

bool ProjMatrix::is_scalar() const {
    if (!(e_[0] == e_[4]) || !(e_[0] == e_[8])) return false;
    for (int i : {1, 2, 3, 5, 6, 7})
        if (!e_[static_cast<size_t>(i)].is_zero()) return false;
    return true;
}

ProjMatrix ProjMatrix::lifted(const TowerPtr& bigger) const {
    ProjMatrix out(bigger);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out.set(r, c, lift_prefix(at(r, c), bigger));
    return out;
}

std::array<TowerElem, 3> ProjMatrix::apply(const std::array<TowerElem, 3>& p) const {
    std::array<TowerElem, 3> out;
    for (int r = 0; r < 3; ++r) {
        TowerElem acc = tower_->zero();
        for (int k = 0; k < 3; ++k) acc = acc + at(r, k) * p[static_cast<size_t>(k)];
        out[static_cast<size_t>(r)] = std::move(acc);
    }
    return out;
}

namespace {

// dense homogeneous ternary polynomial of degree d: coefficients in the
// lex-descending (j,k,l) order, size (d+1)(d+2)/2
struct HPoly {
    int deg;
    std::vector<TowerElem> c;
};

size_t hp_size(int d) { return static_cast<size_t>((d + 1) * (d + 2) / 2); }

size_t hp_index(int d, int j, int k) {
    // position of x^j y^k z^(d-j-k) in lex-descending order
    // indices with first exponent > j come first: sum_{a=j+1}^{d} (d-a+1)
    size_t before = 0;
    for (int a = d; a > j; --a) before += static_cast<size_t>(d - a + 1);
    return before + static_cast<size_t>(d - j - k);
}

HPoly hp_mul(const TowerPtr& tw, const HPoly& A, const HPoly& B) {
    HPoly out{A.deg + B.deg, std::vector<TowerElem>(hp_size(A.deg + B.deg), tw->zero())};
    for (int j1 = A.deg; j1 >= 0; --j1)
        for (int k1 = A.deg - j1; k1 >= 0; --k1) {
            const TowerElem& a = A.c[hp_index(A.deg, j1, k1)];
            if (a.is_zero()) continue;
            for (int j2 = B.deg; j2 >= 0; --j2)
                for (int k2 = B.deg - j2; k2 >= 0; --k2) {
                    const TowerElem& b = B.c[hp_index(B.deg, j2, k2)];
                    if (b.is_zero()) continue;
                    size_t idx = hp_index(out.deg, j1 + j2, k1 + k2);
                    out.c[idx] = out.c[idx] + a * b;
                }
        }
    return out;
}

} // namespace

TernaryQuartic substitute(const TernaryQuartic& F, const ProjMatrix& M) {
    if (!F.tower()->same_as(*M.tower())) throw TowerMismatch("substitute: towers differ");
    const TowerPtr& tw = F.tower();
    // powers 0..4 of the three linear forms L_r = M[r][0] x + M[r][1] y + M[r][2] z
    std::array<std::array<HPoly, 5>, 3> pw;
    for (int r = 0; r < 3; ++r) {
        pw[static_cast<size_t>(r)][0] = HPoly{0, {tw->one()}};
        HPoly lin{1, {M.at(r, 0), M.at(r, 1), M.at(r, 2)}};
        pw[static_cast<size_t>(r)][1] = lin;
        for (int e = 2; e <= 4; ++e)
            pw[static_cast<size_t>(r)][static_cast<size_t>(e)] =
                hp_mul(tw, pw[static_cast<size_t>(r)][static_cast<size_t>(e - 1)], lin);
    }
    HPoly acc{4, std::vector<TowerElem>(hp_size(4), tw->zero())};
    for (size_t m = 0; m < 15; ++m) {
        const TowerElem& cf = F.coeff(m);
        if (cf.is_zero()) continue;
        int j = kQuarticMonomials[m][0], k = kQuarticMonomials[m][1], l = kQuarticMonomials[m][2];
        HPoly term = pw[0][static_cast<size_t>(j)];
        if (k > 0) term = term.deg == 0 ? pw[1][static_cast<size_t>(k)]
                                        : hp_mul(tw, term, pw[1][static_cast<size_t>(k)]);
        if (l > 0) term = term.deg == 0 ? pw[2][static_cast<size_t>(l)]
                                        : hp_mul(tw, term, pw[2][static_cast<size_t>(l)]);
        for (size_t i = 0; i < term.c.size(); ++i) {
            if (term.c[i].is_zero()) continue;
            acc.c[i] = acc.c[i] + term.c[i] * cf;
        }
    }
    TernaryQuartic out(tw);
    for (size_t m = 0; m < 15; ++m) {
        int j = kQuarticMonomials[m][0], k = kQuarticMonomials[m][1];
        out.set_coeff(j, k, kQuarticMonomials[m][2], acc.c[hp_index(4, j, k)]);
    }
    return out;
}

std::optional<TowerElem> proportionality(const TernaryQuartic& F1, const TernaryQuartic& F2) {
    if (!F1.tower()->same_as(*F2.tower())) throw TowerMismatch("proportionality: towers differ");
    if (F2.is_zero()) throw ZeroForm("proportionality: comparison form is identically zero");
    size_t pivot = 15;
    for (size_t i = 0; i < 15; ++i)
        if (!F2.coeff(i).is_zero()) { pivot = i; break; }
    const TowerElem& p2 = F2.coeff(pivot);
    const TowerElem& p1 = F1.coeff(pivot);
    if (p1.is_zero()) {
        if (F1.is_zero()) return std::nullopt; // lambda must be nonzero
        return std::nullopt;
    }
    for (size_t i = 0; i < 15; ++i) {
        if (i == pivot) continue;
        if (!(F1.coeff(i) * p2 == F2.coeff(i) * p1)) return std::nullopt;
    }
    return p1 * p2.inverse();
}

bool coeffs_in_level(const TernaryQuartic& F, int j) {
    for (size_t i = 0; i < 15; ++i)
        if (F.coeff(i).level_of() > j) return false;
    return true;
}

TowerElem evaluate(const TernaryQuartic& F, const std::array<TowerElem, 3>& p) {
    const TowerPtr& tw = F.tower();
    TowerElem acc = tw->zero();
    for (size_t m = 0; m < 15; ++m) {
        const TowerElem& cf = F.coeff(m);
        if (cf.is_zero()) continue;
        TowerElem term = cf;
        for (int e = 0; e < kQuarticMonomials[m][0]; ++e) term = term * p[0];
        for (int e = 0; e < kQuarticMonomials[m][1]; ++e) term = term * p[1];
        for (int e = 0; e < kQuarticMonomials[m][2]; ++e) term = term * p[2];
        acc = acc + term;
    }
    return acc;
}

} // namespace quartwist
