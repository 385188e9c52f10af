#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quartwist/numeric.hpp"

namespace quartwist {

// Annotation on a tower level, used by the Galois auto-attachment heuristics
// and kept through (de)serialization.
struct Annotation {
    enum class Kind { Radical, Cyclotomic, RootOf, Opaque };
    Kind kind = Kind::Opaque;
    Rational radicand;   // Radical: generator^n = radicand (radicand rational)
    unsigned n = 0;      // Radical: root index; Cyclotomic: conductor
    std::string text;    // free-form for RootOf / Opaque

    static Annotation radical(const Rational& x, unsigned n);
    static Annotation cyclotomic(unsigned n);
    static Annotation root_of(const std::string& poly_text);
    static Annotation opaque();
    std::string to_string() const;
    static Annotation parse(const std::string& s);
};

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

// One simple extension step. Modulus coefficients live in the subtower below
// this level and are stored as flat coefficient vectors of that subtower.
struct TowerLevel {
    std::string name;
    unsigned degree = 0;                              // = deg(modulus)
    std::vector<std::vector<Rational>> modulus;       // degree+1 blocks, constant term first, monic
    Annotation annotation;
};

struct TowerSpec {
    std::vector<TowerLevel> levels;
    bool operator==(const TowerSpec& o) const;
};

class TowerElem;

// Immutable tower of simple extensions of Q. All elements are flat, fully
// reduced coefficient vectors; equality of elements is vector equality.
class Tower : public std::enable_shared_from_this<Tower> {
public:
    static TowerPtr build(TowerSpec spec);
    static TowerPtr rationals(); // the empty tower (plain Q)

    const TowerSpec& spec() const { return spec_; }
    size_t levels() const { return spec_.levels.size(); }
    long degree() const { return static_cast<long>(stride_.back()); }
    size_t stride(size_t level) const { return stride_[level]; } // element size up to `level`
    const TowerLevel& level(size_t j) const { return spec_.levels[j]; }
    int level_index(const std::string& gen_name) const; // -1 if absent

    bool same_as(const Tower& other) const { return spec_ == other.spec_; }
    // true if this tower's levels are an initial segment of `bigger`'s
    bool prefix_of(const Tower& bigger) const;

    TowerElem zero() const;
    TowerElem one() const;
    TowerElem from_rational(const Rational& q) const;
    TowerElem generator(size_t level) const;
    TowerElem from_coords(std::vector<Rational> coords) const;

    // --- flat block arithmetic (size = stride(level)) ---
    void b_add(size_t level, Rational* a, const Rational* b) const;
    void b_sub(size_t level, Rational* a, const Rational* b) const;
    void b_neg(size_t level, Rational* a) const;
    void b_scal(size_t level, Rational* a, const Rational& c) const;
    bool b_zero(size_t level, const Rational* a) const;
    void b_mul(size_t level, Rational* out, const Rational* a, const Rational* b) const;
    void b_inv(size_t level, Rational* out, const Rational* a) const;

private:
    Tower() = default;
    TowerSpec spec_;
    std::vector<size_t> stride_; // stride_[0] = 1, stride_[j] = stride_[j-1]*deg_j
};

class TowerElem {
public:
    TowerElem() = default;
    TowerElem(TowerPtr tower, std::vector<Rational> coords);

    const TowerPtr& tower() const { return tower_; }
    const std::vector<Rational>& coords() const { return c_; }
    bool is_zero() const;
    bool operator==(const TowerElem& o) const;
    bool operator!=(const TowerElem& o) const { return !(*this == o); }

    // smallest j with all coordinates above the level-j subtower zero
    int level_of() const;
    std::optional<Rational> as_rational() const;

    TowerElem operator+(const TowerElem& o) const;
    TowerElem operator-(const TowerElem& o) const;
    TowerElem operator-() const;
    TowerElem operator*(const TowerElem& o) const;
    TowerElem operator*(const Rational& c) const;
    TowerElem inverse() const;
    TowerElem operator/(const TowerElem& o) const { return *this * o.inverse(); }
    TowerElem pow(long e) const;

    friend TowerElem operator*(const Rational& c, const TowerElem& a) { return a * c; }

private:
    void check_same_tower(const TowerElem& o) const;
    TowerPtr tower_;
    std::vector<Rational> c_;
};

// Field homomorphism out of a tower, given by one image per generator.
// For endomorphisms of a tower this is a FieldAut in the usual sense.
class FieldAut {
public:
    // validates: every modulus vanishes at its generator's proposed image
    static FieldAut define(TowerPtr source, std::vector<TowerElem> images);
    // images into another tower (an embedding); same validation
    static FieldAut define_into(TowerPtr source, TowerPtr target, std::vector<TowerElem> images);

    TowerElem apply(const TowerElem& a) const;
    const std::vector<TowerElem>& images() const { return images_; }
    const TowerPtr& source() const { return source_; }
    const TowerPtr& target() const { return target_; }
    size_t fixed_level() const { return fixed_level_; }

private:
    TowerPtr source_, target_;
    std::vector<TowerElem> images_;
    size_t fixed_level_ = 0; // identity below this level index
};

// Re-express an element of a prefix tower inside a bigger tower.
TowerElem lift_prefix(const TowerElem& a, const TowerPtr& bigger);

// Incremental tower construction. Levels only ever get appended, so existing
// elements lift by zero-padding.
class TowerBuilder {
public:
    TowerBuilder() : tower_(Tower::rationals()) {}
    explicit TowerBuilder(TowerPtr start) : tower_(std::move(start)) {}

    const TowerPtr& tower() const { return tower_; }
    TowerElem lift(const TowerElem& a) const; // into the current tower
    TowerElem rational(const Rational& q) const { return tower_->from_rational(q); }

    // x^(1/n) for rational x: strips n-th powers, reuses existing radical or
    // cyclotomic levels when the root is already expressible, else adjoins a
    // new level t^n - y (irreducibility over Q checked for the reduced y).
    TowerElem adjoin_radical(const Rational& x, unsigned n, const std::string& name_hint);

    // root of a monic rational polynomial (degree >= 2, no rational root)
    TowerElem adjoin_root(const QPoly& monic, const std::string& name, Annotation ann);

    // root of a monic polynomial with coefficients in the current tower
    TowerElem adjoin_root_over(const std::vector<TowerElem>& monic_coeffs,
                               const std::string& name, Annotation ann);

    // i, zeta_n conveniences (reuse if present)
    TowerElem adjoin_i();
    TowerElem adjoin_zeta(unsigned n); // n in {3,7,8,9}: cyclotomic polynomial level

    TowerElem generator(const std::string& name) const;
    bool has_level(const std::string& name) const { return tower_->level_index(name) >= 0; }

private:
    std::string unique_name(const std::string& hint) const;
    TowerPtr tower_;
};

// Cyclotomic polynomial for small n as a QPoly (n in {1,...,12}).
QPoly cyclotomic_poly(unsigned n);

} // namespace quartwist
