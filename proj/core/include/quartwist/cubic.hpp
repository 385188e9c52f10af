#pragma once

#include "quartwist/tower.hpp"

namespace quartwist {

// A separable monic rational cubic with its splitting data: roots living in a
// tower containing the splitting field, classified Galois type, discriminant,
// and rational power sums.
struct CubicData {
    enum class GaloisType { Split, C2, C3, S3 };

    QPoly poly;                      // monic, degree 3
    GaloisType type = GaloisType::Split;
    Rational disc;
    TowerPtr tower;                  // splitting tower (possibly extended later)
    std::array<TowerElem, 3> roots;  // alpha, beta, gamma
    TowerElem sqrt_disc;             // an element with sqrt_disc^2 = disc

    // S_j = alpha^j + beta^j + gamma^j, exact and rational for all j >= 0
    Rational power_sum(unsigned j) const;

    // Galois generators of the splitting tower (empty for Split)
    std::vector<FieldAut> galois_generators() const;

    static CubicData make(const QPoly& monic_cubic);
    // build inside an ambient tower under construction
    static CubicData make_in(TowerBuilder& tb, const QPoly& monic_cubic);

    static Rational discriminant(const QPoly& monic_cubic);
};

const char* to_string(CubicData::GaloisType t);

} // namespace quartwist
