#pragma once

// Power residue symbols: quadratic and quartic on Z[i], cubic on Z[omega].
//
// Two independent routes compute every symbol:
//   * symbol_bruteforce: the defining congruence a^{(N(pi)-1)/j} mod pi on
//     primes, extended multiplicatively over a factorization (the oracle);
//   * symbol_fast: reciprocity-driven reduction without factoring, using
//     the supplement laws at units and the ramified prime.  For primary
//     n = a+bi resp. a+bw:
//        (i/n)_4     = i^{(1-a)/2}
//        ((1+i)/n)_4 = i^{(a-b-1-b^2)/4}
//        (w/n)_3     = w^{(1-a-b)/3}
//        ((1-w)/n)_3 = w^{(a-1)/3}
//     The last law's base was fixed by brute-force calibration over all
//     primary primes of norm <= 10^4 (see tests/fixtures).

#include <complex>

#include "hecke/factor.hpp"
#include "hecke/ring.hpp"

namespace hecke {

struct SymbolValue {
    int order = 2;   // j
    int exp = 0;     // exponent of zeta_j; -1 encodes the value 0
    bool is_zero() const { return exp < 0; }
    static SymbolValue zero(int j) { return {j, -1}; }
    static SymbolValue unity(int j, long long e) {
        return {j, (int)(((e % j) + j) % j)};
    }
    std::complex<double> value() const {
        if (is_zero()) return {0.0, 0.0};
        if (exp == 0) return {1.0, 0.0};
        if (order == 2) return {-1.0, 0.0};
        if (order == 4) {
            switch (exp) {
                case 1: return {0.0, 1.0};
                case 2: return {-1.0, 0.0};
                default: return {0.0, -1.0};
            }
        }
        const double half_sqrt3 = 0.86602540378443864676;
        return exp == 1 ? std::complex<double>{-0.5, half_sqrt3}
                        : std::complex<double>{-0.5, -half_sqrt3};
    }
    friend SymbolValue operator*(SymbolValue x, SymbolValue y) {
        if (x.is_zero() || y.is_zero()) return zero(x.order);
        return unity(x.order, x.exp + y.exp);
    }
    friend bool operator==(const SymbolValue&, const SymbolValue&) = default;
};

namespace detail {

template <class E>
E pow_mod(E base, std::int64_t e, E n) {
    E r{1, 0};
    base = mod(base, n);
    while (e) {
        if (e & 1) r = mod(mul(r, base), n);
        base = mod(mul(base, base), n);
        e >>= 1;
    }
    return r;
}

// zeta_j^e as a ring element (zeta_2 = -1, zeta_3 = w, zeta_4 = i)
template <class E>
E root_of_unity(int j, int e) {
    E z;
    if constexpr (is_gauss_v<E>) z = (j == 4) ? E{0, 1} : E{-1, 0};
    else z = E{0, 1};
    return pow_elt(z, ((e % j) + j) % j);
}

inline int unit_exponent(GaussInt u) {
    if (u == GaussInt{1, 0}) return 0;
    if (u == GaussInt{0, 1}) return 1;
    if (u == GaussInt{-1, 0}) return 2;
    return 3;
}
// +-w^k -> k  ((-1/n)_3 = 1 since -1 is a cube)
inline int unit_exponent(EisInt u) {
    if (u == EisInt{1, 0} || u == EisInt{-1, 0}) return 0;
    if (u == EisInt{0, 1} || u == EisInt{0, -1}) return 1;
    return 2;
}

template <class E> constexpr int field_order() { return is_gauss_v<E> ? 4 : 3; }

template <class E>
void check_order(int j) {
    if constexpr (is_gauss_v<E>) {
        if (j != 2 && j != 4) throw std::domain_error("hecke: symbol order must be 2 or 4 in Z[i]");
    } else {
        if (j != 3) throw std::domain_error("hecke: symbol order must be 3 in Z[omega]");
    }
}

} // namespace detail

// (a/pi)_j by the defining power congruence; pi a primary prime.
template <class E>
SymbolValue symbol_bruteforce(int j, E a, E pi) {
    detail::check_order<E>(j);
    if (!is_primary(pi) || !is_prime(pi))
        throw std::domain_error("hecke: symbol_bruteforce requires a primary prime modulus");
    if (is_zero(mod(a, pi))) return SymbolValue::zero(j);
    std::int64_t N = norm(pi);
    E v = detail::pow_mod(a, (N - 1) / j, pi);
    for (int e = 0; e < j; ++e) {
        if (is_zero(mod(sub(v, detail::root_of_unity<E>(j, e)), pi)))
            return SymbolValue::unity(j, e);
    }
    throw std::logic_error("hecke: power residue not a root of unity");
}

// Reciprocity-driven evaluation, no factoring.  O(log^2 norm) ring ops.
template <class E>
SymbolValue symbol_fast(int j, E a, E n) {
    detail::check_order<E>(j);
    if (n == E{1, 0}) return SymbolValue::unity(j, 0);   // (./1)_j = 1
    if (!is_primary(n)) throw std::domain_error("hecke: symbol modulus must be primary");
    if (is_zero(a) || norm(gcd(a, n)) != 1) return SymbolValue::zero(j);

    constexpr int J = detail::field_order<E>();   // 4 resp. 3
    E ram = ramified_of<E>();
    long long acc = 0;
    while (n != E{1, 0}) {
        E r = mod(a, n);
        long long ram_count = 0;
        for (;;) {
            auto [q, rr] = divmod(r, ram);
            if (!is_zero(rr)) break;
            r = q;
            ++ram_count;
        }
        auto [u, r1] = to_primary(r);
        const std::int64_t A = n.a, B = n.b;
        if constexpr (is_gauss_v<E>) {
            acc += detail::unit_exponent(u) * ((1 - A) / 2);
            acc += ram_count * ((A - B - 1 - B * B) / 4);
            // quartic flip picks up (-1)^{((N(n)-1)/4)((N(r1)-1)/4)} = i^{2(...)}
            acc += 2 * (((norm(n) - 1) / 4) % 2) * (((norm(r1) - 1) / 4) % 2);
        } else {
            acc += detail::unit_exponent(u) * ((1 - A - B) / 3);
            acc += ram_count * ((A - 1) / 3);
            // cubic flip is exact: (m/n)_3 = (n/m)_3
        }
        a = n;
        n = r1;
    }
    acc = ((acc % J) + J) % J;
    if constexpr (is_gauss_v<E>) {
        if (j == 2) return SymbolValue::unity(2, acc % 2);   // quadratic = quartic squared
    }
    return SymbolValue::unity(j, acc);
}

// The public symbol: multiplicative over the factorization of n by
// definition, computed without factoring via the reciprocity reduction.
template <class E>
SymbolValue symbol(int j, E a, E n) {
    return symbol_fast(j, a, n);
}

// ((unit)/n)_j and ((ramified)/n)_j by the closed supplement laws.
template <class E>
std::pair<SymbolValue, SymbolValue> unit_and_ramified_supplement(int j, E n) {
    detail::check_order<E>(j);
    if (!is_primary(n)) throw std::domain_error("hecke: supplement requires primary n");
    const std::int64_t A = n.a, B = n.b;
    long long ue, re;
    if constexpr (is_gauss_v<E>) {
        ue = (1 - A) / 2;             // (i/n)_4
        re = (A - B - 1 - B * B) / 4; // ((1+i)/n)_4
        if (j == 2) return {SymbolValue::unity(2, ue), SymbolValue::unity(2, re)};
        return {SymbolValue::unity(4, ue), SymbolValue::unity(4, re)};
    } else {
        ue = (1 - A - B) / 3;   // (w/n)_3
        re = (A - 1) / 3;       // ((1-w)/n)_3, calibrated base w
        return {SymbolValue::unity(3, ue), SymbolValue::unity(3, re)};
    }
}

// Oracle composition used by tests: product of prime-power brute-force
// symbols over factor(n).
template <class E>
SymbolValue symbol_via_factorization(int j, E a, E n) {
    if (n == E{1, 0}) return SymbolValue::unity(j, 0);
    auto f = factor(n);
    if (f.ramified_exponent != 0 || f.unit != E{1, 0})
        throw std::domain_error("hecke: oracle modulus must be primary");
    SymbolValue out = SymbolValue::unity(j, 0);
    for (auto& [pi, e] : f.factors) {
        SymbolValue s = symbol_bruteforce(j, a, pi);
        if (s.is_zero()) return SymbolValue::zero(j);
        out = out * SymbolValue::unity(j, (long long)s.exp * e);
    }
    return out;
}

} // namespace hecke
