#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quartwist/errors.hpp"

namespace quartwist {

using Int = mpz_class;
using Rational = mpq_class;

inline Rational rat(long n, long d = 1) { Rational q(n, d); q.canonicalize(); return q; }

Rational parse_rational(const std::string& s);
std::string rational_str(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

// Full factorization of |n| (trial division + Pollard rho, Miller-Rabin certified).
std::vector<std::pair<Int, unsigned>> factorize(Int n);

// Canonical representative of x modulo nonzero rational n-th powers.
Rational nth_power_free(const Rational& x, unsigned n);

// Exact rational n-th root; nullopt if x is not an n-th power in Q.
std::optional<Rational> rational_nth_root(const Rational& x, unsigned n);

// Dense univariate polynomial over Q, coefficients from the constant term up.
struct QPoly {
    std::vector<Rational> c;

    int degree() const;
    void normalize();
    Rational eval(const Rational& x) const;
    QPoly derivative() const;
    bool monic() const;
};

// All rational roots of p (each listed once).
std::vector<Rational> rational_roots(const QPoly& p);

// Monic quartic t^4 + P t^2 + Q t + R: does it factor over Q?
// (linear factor, or a pair of rational quadratics via the resolvent cubic)
bool depressed_quartic_reducible(const Rational& P, const Rational& Q, const Rational& R);

// t^n - y irreducible over Q for n-th-power-reduced y (classical criterion).
bool pure_radical_irreducible(const Rational& y, unsigned n);

} // namespace quartwist
