#include "quartwist/numeric.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace quartwist {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw IoError("empty rational literal");
    for (char ch : s)
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
            throw IoError("bad rational literal: " + s);
    Rational q;
    if (q.set_str(s, 10) != 0) throw IoError("bad rational literal: " + s);
    if (q.get_den() == 0) throw IoError("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_probable_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0; }

Int pollard_rho(const Int& n) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xC0FFEEul);
    while (true) {
        Int x = rng.get_z_range(n - 2) + 2;
        Int y = x, c = rng.get_z_range(n - 1) + 1, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Int diff = x - y;
            if (diff < 0) diff = -diff;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(Int n, std::vector<std::pair<Int, unsigned>>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        for (auto& pe : out)
            if (pe.first == n) { pe.second++; return; }
        out.emplace_back(n, 1);
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

std::vector<std::pair<Int, unsigned>> factorize(Int n) {
    if (n < 0) n = -n;
    if (n == 0) throw ZeroInput("factorize(0)");
    std::vector<std::pair<Int, unsigned>> out;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) factor_into(n, out);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

Rational nth_power_free(const Rational& x, unsigned n) {
    if (n < 2) throw ZeroInput("nth_power_free: n must be >= 2");
    if (is_zero(x)) throw ZeroInput("nth_power_free(0)");
    // joint exponent map: denominator primes carry exponent -e; the canonical
    // representative has all exponents reduced into [0, n), so it is integral
    std::map<Int, long> exps;
    for (auto& [p, e] : factorize(x.get_num())) exps[p] += static_cast<long>(e);
    for (auto& [p, e] : factorize(x.get_den())) exps[p] -= static_cast<long>(e);
    Int out = 1;
    for (auto& [p, e] : exps) {
        long r = e % static_cast<long>(n);
        if (r < 0) r += static_cast<long>(n);
        for (long i = 0; i < r; ++i) out *= p;
    }
    Rational r(out);
    // sign survives only for even n; for odd n the sign is itself an n-th power
    if (n % 2 == 0 && sgn(x) < 0) r = -r;
    return r;
}

std::optional<Rational> rational_nth_root(const Rational& x, unsigned n) {
    if (n == 0) return std::nullopt;
    if (is_zero(x)) return Rational(0);
    if (sgn(x) < 0 && n % 2 == 0) return std::nullopt;
    Int num = abs(x.get_num()), den = x.get_den();
    Int rn, rd;
    if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n)) return std::nullopt;
    Rational r(rn, rd);
    r.canonicalize();
    if (sgn(x) < 0) r = -r;
    return r;
}

int QPoly::degree() const {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        if (!is_zero(c[i])) return i;
    return -1;
}

void QPoly::normalize() {
    while (!c.empty() && is_zero(c.back())) c.pop_back();
}

Rational QPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) acc = acc * x + c[i];
    return acc;
}

QPoly QPoly::derivative() const {
    QPoly d;
    for (size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * Rational(static_cast<long>(i)));
    return d;
}

bool QPoly::monic() const {
    int d = degree();
    return d >= 0 && c[static_cast<size_t>(d)] == 1;
}

namespace {

std::vector<Int> divisors(const Int& n) {
    std::vector<Int> out{1};
    for (auto& [p, e] : factorize(n)) {
        size_t sz = out.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
        }
    }
    return out;
}

} // namespace

std::vector<Rational> rational_roots(const QPoly& p) {
    std::vector<Rational> out;
    int d = p.degree();
    if (d <= 0) return out;
    // clear denominators
    Int lcm = 1;
    for (auto& q : p.c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> a(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        Rational scaled = p.c[static_cast<size_t>(i)] * Rational(lcm);
        a[static_cast<size_t>(i)] = scaled.get_num();
    }
    if (a[0] == 0) {
        out.push_back(Rational(0));
        // deflate zero roots away for the divisor search
        QPoly q = p;
        while (!q.c.empty() && is_zero(q.c[0])) q.c.erase(q.c.begin());
        for (auto& r : rational_roots(q))
            if (!is_zero(r)) out.push_back(r);
        return out;
    }
    for (auto& pn : divisors(a[0]))
        for (auto& qn : divisors(a[static_cast<size_t>(d)]))
            for (int s : {1, -1}) {
                Rational cand(s * pn, qn);
                cand.canonicalize();
                if (is_zero(p.eval(cand)) &&
                    std::find(out.begin(), out.end(), cand) == out.end())
                    out.push_back(cand);
            }
    std::sort(out.begin(), out.end());
    return out;
}

bool depressed_quartic_reducible(const Rational& P, const Rational& Q, const Rational& R) {
    QPoly quartic{{R, Q, P, Rational(0), Rational(1)}};
    if (!rational_roots(quartic).empty()) return true;
    // (t^2+pt+r)(t^2-pt+s): p^2 is a root of z^3 + 2P z^2 + (P^2-4R) z - Q^2
    QPoly res{{-Q * Q, P * P - Rational(4) * R, Rational(2) * P, Rational(1)}};
    for (auto& z : rational_roots(res)) {
        if (sgn(z) < 0) continue;
        auto proot = rational_nth_root(z, 2);
        if (!proot) continue;
        Rational p = *proot;
        if (is_zero(p)) {
            // p = 0: r+s = P, rs = R, and Q must be 0
            if (!is_zero(Q)) continue;
            Rational disc = P * P - Rational(4) * R;
            if (rational_nth_root(disc, 2)) return true;
            continue;
        }
        // r+s = P + p^2, s-r = Q/p
        Rational sum = P + z, dif = Q / p;
        Rational r = (sum - dif) / 2, s = (sum + dif) / 2;
        if (r * s == R) return true;
    }
    return false;
}

bool pure_radical_irreducible(const Rational& y, unsigned n) {
    if (is_zero(y) || y == 1) return false;
    for (unsigned p = 2; p <= n; ++p) {
        if (n % p != 0) continue;
        bool prime = true;
        for (unsigned q = 2; q * q <= p; ++q)
            if (p % q == 0) prime = false;
        if (!prime) continue;
        if (rational_nth_root(y, p)) return false;
    }
    if (n % 4 == 0) {
        // y = -4 u^4 makes t^n - y reducible
        Rational w = -y / 4;
        if (sgn(w) > 0 && rational_nth_root(w, 4)) return false;
    }
    return true;
}

} // namespace quartwist
