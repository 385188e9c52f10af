#pragma once

#include <array>
#include <optional>

#include "quartwist/tower.hpp"

namespace quartwist {

// The 15 degree-4 exponent triples (j,k,l), lexicographically descending.
// All form I/O uses this order.
constexpr std::array<std::array<int, 3>, 15> kQuarticMonomials = {{
    {4, 0, 0}, {3, 1, 0}, {3, 0, 1}, {2, 2, 0}, {2, 1, 1}, {2, 0, 2}, {1, 3, 0},
    {1, 2, 1}, {1, 1, 2}, {1, 0, 3}, {0, 4, 0}, {0, 3, 1}, {0, 2, 2}, {0, 1, 3}, {0, 0, 4},
}};
int quartic_monomial_index(int j, int k, int l);

// Homogeneous ternary quartic with tower coefficients (all 15 stored).
class TernaryQuartic {
public:
    TernaryQuartic() = default;
    explicit TernaryQuartic(TowerPtr tower);
    TernaryQuartic(TowerPtr tower, std::array<TowerElem, 15> coeffs);

    const TowerPtr& tower() const { return tower_; }
    const TowerElem& coeff(size_t idx) const { return c_[idx]; }
    const TowerElem& coeff(int j, int k, int l) const;
    void set_coeff(int j, int k, int l, TowerElem v);
    const std::array<TowerElem, 15>& coeffs() const { return c_; }

    bool is_zero() const;
    bool operator==(const TernaryQuartic& o) const;
    TernaryQuartic operator*(const TowerElem& s) const;
    TernaryQuartic operator*(const Rational& s) const;
    TernaryQuartic lifted(const TowerPtr& bigger) const;
    // all-coefficients-rational normalization: multiply by the positive
    // rational making the form primitive integral (first nonzero coeff > 0);
    // requires level 0 coefficients
    TernaryQuartic primitive_integral() const;

private:
    TowerPtr tower_;
    std::array<TowerElem, 15> c_;
};

// Invertible 3x3 matrix of tower elements, considered up to scalar.
class ProjMatrix {
public:
    ProjMatrix() = default;
    explicit ProjMatrix(TowerPtr tower); // identity
    ProjMatrix(TowerPtr tower, std::array<TowerElem, 9> entries);

    const TowerPtr& tower() const { return tower_; }
    const TowerElem& at(int r, int c) const { return e_[static_cast<size_t>(3 * r + c)]; }
    void set(int r, int c, TowerElem v);
    const std::array<TowerElem, 9>& entries() const { return e_; }

    ProjMatrix operator*(const ProjMatrix& o) const;
    ProjMatrix operator*(const TowerElem& s) const;
    TowerElem det() const;
    ProjMatrix adjugate() const;           // det * inverse; projectively the inverse
    ProjMatrix inverse() const;            // exact inverse (one tower inversion)
    ProjMatrix transpose() const;

    // divide by the first nonzero entry (row-major); canonical PGL representative
    ProjMatrix projective_normal_form() const;
    bool proportional_to(const ProjMatrix& o) const; // cross-multiplication, no inversion
    bool is_scalar() const;
    ProjMatrix lifted(const TowerPtr& bigger) const;
    std::array<TowerElem, 3> apply(const std::array<TowerElem, 3>& p) const;

private:
    TowerPtr tower_;
    std::array<TowerElem, 9> e_;
};

// F∘M: replace (x,y,z) by M*(x,y,z)^t and expand exactly.
TernaryQuartic substitute(const TernaryQuartic& F, const ProjMatrix& M);

// lambda with F1 = lambda*F2, pivoting on F2's first nonzero coefficient.
std::optional<TowerElem> proportionality(const TernaryQuartic& F1, const TernaryQuartic& F2);

// true iff every coefficient lives at tower level <= j
bool coeffs_in_level(const TernaryQuartic& F, int j);

TowerElem evaluate(const TernaryQuartic& F, const std::array<TowerElem, 3>& p);

} // namespace quartwist
