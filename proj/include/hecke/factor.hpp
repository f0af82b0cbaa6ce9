#pragma once

// Factorization into primary primes, plus the multiplicative functions
// mu and phi.  Rational norms are factored by trial division up to 10^6
// with a Pollard-rho fallback; each rational prime is lifted to ring
// primes and divided out.

#include <algorithm>
#include <vector>

#include "hecke/ring.hpp"

namespace hecke {

template <class E>
struct PrimaryFactorization {
    E unit{1, 0};
    int ramified_exponent = 0;
    std::vector<std::pair<E, int>> factors;   // primary primes, sorted by (norm, a, b)

    E recombine() const {
        E z = unit;
        E ram = ramified_of<E>();
        for (int k = 0; k < ramified_exponent; ++k) z = mul(z, ram);
        for (auto& [p, e] : factors)
            for (int k = 0; k < e; ++k) z = mul(z, p);
        return z;
    }
};

namespace detail {

std::vector<std::pair<std::int64_t, int>> factor_rational(std::int64_t n);
bool is_rational_prime(std::int64_t n);

// A ring prime above the rational prime p (norm p when split/ramified,
// the inert p itself otherwise).
template <class E>
E prime_above(std::int64_t p) {
    E ram = ramified_of<E>();
    if constexpr (is_gauss_v<E>) {
        if (p == 2) return ram;
        if (p % 4 == 3) return E{p, 0};
        // split: x^2 = -1 mod p, then gcd(p, x - i)
        std::int64_t x = 0;
        for (std::int64_t g = 2; g < p; ++g) {
            std::int64_t v = 1, base = g, e = (p - 1) / 4;
            while (e) {
                if (e & 1) v = (__int128)v * base % p;
                base = (__int128)base * base % p;
                e >>= 1;
            }
            if ((__int128)v * v % p == p - 1) { x = v; break; }
        }
        return gcd(E{p, 0}, E{x, -1});
    } else {
        if (p == 3) return ram;
        if (p % 3 == 2) return E{p, 0};
        // split: x^2 + x + 1 = 0 mod p, then gcd(p, x - omega)
        std::int64_t x = 0;
        for (std::int64_t g = 2; g < p; ++g) {
            std::int64_t v = 1, base = g, e = (p - 1) / 3;
            while (e) {
                if (e & 1) v = (__int128)v * base % p;
                base = (__int128)base * base % p;
                e >>= 1;
            }
            if (v != 1) { x = v; break; }   // v is a primitive cube root of 1
        }
        return gcd(E{p, 0}, E{x, -1});
    }
}

} // namespace detail

template <class E>
PrimaryFactorization<E> factor(E n) {
    if (is_zero(n)) throw std::domain_error("hecke: factor(0)");
    PrimaryFactorization<E> out;
    E ram = ramified_of<E>();
    E cur = n;
    for (;;) {
        auto [q, r] = divmod(cur, ram);
        if (!is_zero(r)) break;
        cur = q;
        ++out.ramified_exponent;
    }
    for (auto [p, pe] : detail::factor_rational(norm(cur))) {
        E pr = to_primary(detail::prime_above<E>(p)).second;
        E prc = to_primary(conj(pr)).second;
        for (E cand : {pr, prc}) {
            int cnt = 0;
            for (;;) {
                auto [q, r] = divmod(cur, cand);
                if (!is_zero(r)) break;
                cur = q;
                ++cnt;
            }
            if (cnt) out.factors.push_back({cand, cnt});
            if (pr == prc) break;
        }
        (void)pe;
    }
    if (norm(cur) != 1)
        throw std::logic_error("hecke: factorization incomplete");
    out.unit = cur;
    std::sort(out.factors.begin(), out.factors.end(), [](auto& x, auto& y) {
        auto nx = norm(x.first), ny = norm(y.first);
        if (nx != ny) return nx < ny;
        return x.first < y.first;
    });
    return out;
}

template <class E>
bool is_prime(E z) {
    std::int64_t N = norm(z);
    if (N <= 1) return false;
    if (detail::is_rational_prime(N)) {
        if constexpr (is_gauss_v<E>) return true;     // norm 2, 3k+... any prime norm
        else return true;
    }
    std::int64_t q = (std::int64_t)std::sqrt((double)N);
    while (q * q < N) ++q;
    while (q * q > N) --q;
    if (q * q != N || !detail::is_rational_prime(q)) return false;
    if constexpr (is_gauss_v<E>) {
        if (q % 4 != 3) return false;
    } else {
        if (q % 3 != 2) return false;
    }
    for (auto u : ring_units<E>())
        if (mul(E{q, 0}, u) == z) return true;
    return false;
}

// mu(n) for primary n (0 if not square-free)
template <class E>
int mobius(E n) {
    if (is_zero(n)) throw std::domain_error("hecke: mobius(0)");
    if (!is_primary(n)) throw std::domain_error("hecke: mobius requires primary n");
    auto f = factor(n);
    int sign = 1;
    for (auto& [p, e] : f.factors) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

// phi(n) = #(Z[.]/(n))^*, multiplicative with phi(pi^l) = N^{l-1}(N-1)
template <class E>
std::int64_t euler_phi(E n) {
    if (is_zero(n)) throw std::domain_error("hecke: euler_phi(0)");
    if (!is_primary(n) && norm(n) != 1)
        throw std::domain_error("hecke: euler_phi requires primary n");
    auto f = factor(n);
    std::int64_t val = 1;
    for (auto& [p, e] : f.factors) {
        std::int64_t N = norm(p);
        for (int k = 0; k < e - 1; ++k) val = checked::mul(val, N);
        val = checked::mul(val, N - 1);
    }
    return val;
}

// phi(n)/N(n) as a double = prod over distinct primes of (1 - 1/N(pi));
// also valid for any power sharing the same radical.
template <class E>
double phi_over_norm(E n) {
    auto f = factor(n);
    double v = 1.0;
    if (f.ramified_exponent > 0) v *= 1.0 - 1.0 / (double)norm(ramified_of<E>());
    for (auto& [p, e] : f.factors) v *= 1.0 - 1.0 / (double)norm(p);
    return v;
}

} // namespace hecke
