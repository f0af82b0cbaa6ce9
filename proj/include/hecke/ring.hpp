#pragma once

// Exact arithmetic in the Euclidean domains Z[i] and Z[omega].
//
// Elements are pairs of 64-bit integers with checked arithmetic: every
// addition/multiplication that could exceed int64 range throws instead of
// wrapping.  Desk-scale norms stay far below 2^63, so the checks never fire
// in normal use; they are the guarantee that symbol computations are exact.

#include <array>
#include <cstdint>
#include <complex>
#include <stdexcept>
#include <string>

namespace hecke {

struct overflow_error : std::overflow_error {
    overflow_error() : std::overflow_error("hecke: integer overflow") {}
};

namespace checked {

inline std::int64_t add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw hecke::overflow_error{};
    return r;
}
inline std::int64_t sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r)) throw hecke::overflow_error{};
    return r;
}
inline std::int64_t mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw hecke::overflow_error{};
    return r;
}
inline std::int64_t neg(std::int64_t x) { return sub(0, x); }

} // namespace checked

struct gauss_tag {};
struct eis_tag {};

// a + b*i  (gauss_tag)  or  a + b*omega  (eis_tag), omega = exp(2*pi*i/3)
template <class Tag>
struct Elt {
    using tag_type = Tag;
    std::int64_t a = 0;
    std::int64_t b = 0;
    friend bool operator==(const Elt&, const Elt&) = default;
    friend auto operator<=>(const Elt&, const Elt&) = default;
};

using GaussInt = Elt<gauss_tag>;
using EisInt = Elt<eis_tag>;

template <class E> inline constexpr bool is_gauss_v = std::is_same_v<E, GaussInt>;

// ---- norm / conj / basic ops -------------------------------------------

inline std::int64_t norm(GaussInt z) {
    using namespace checked;
    return add(mul(z.a, z.a), mul(z.b, z.b));
}
inline std::int64_t norm(EisInt z) {
    using namespace checked;
    return add(sub(mul(z.a, z.a), mul(z.a, z.b)), mul(z.b, z.b));
}

inline GaussInt conj(GaussInt z) { return {z.a, checked::neg(z.b)}; }
// conj(a + b*omega) = a + b*omegabar = (a - b) - b*omega
inline EisInt conj(EisInt z) { return {checked::sub(z.a, z.b), checked::neg(z.b)}; }

template <class T> Elt<T> add(Elt<T> x, Elt<T> y) {
    return {checked::add(x.a, y.a), checked::add(x.b, y.b)};
}
template <class T> Elt<T> sub(Elt<T> x, Elt<T> y) {
    return {checked::sub(x.a, y.a), checked::sub(x.b, y.b)};
}
template <class T> Elt<T> neg(Elt<T> x) { return {checked::neg(x.a), checked::neg(x.b)}; }

inline GaussInt mul(GaussInt x, GaussInt y) {
    using namespace checked;
    return {sub(mul(x.a, y.a), mul(x.b, y.b)), add(mul(x.a, y.b), mul(x.b, y.a))};
}
// (a+bw)(c+dw) = ac - bd + (ad + bc - bd) w,   w^2 = -1-w
inline EisInt mul(EisInt x, EisInt y) {
    using namespace checked;
    std::int64_t bd = mul(x.b, y.b);
    return {sub(mul(x.a, y.a), bd), sub(add(mul(x.a, y.b), mul(x.b, y.a)), bd)};
}

template <class E> E pow_elt(E z, int e) {
    E r{1, 0};
    for (int k = 0; k < e; ++k) r = mul(r, z);
    return r;
}

template <class E> bool is_zero(E z) { return z.a == 0 && z.b == 0; }
template <class E> E one() { return E{1, 0}; }

// ---- units, ramified prime, primary criterion ---------------------------

inline std::array<GaussInt, 4> units(gauss_tag) {
    return {GaussInt{1, 0}, GaussInt{0, 1}, GaussInt{-1, 0}, GaussInt{0, -1}};
}
inline std::array<EisInt, 6> units(eis_tag) {
    return {EisInt{1, 0}, EisInt{-1, 0}, EisInt{0, 1},
            EisInt{0, -1}, EisInt{-1, -1}, EisInt{1, 1}};
}
template <class E> auto ring_units() { return units(typename E::tag_type{}); }

inline GaussInt ramified(gauss_tag) { return {1, 1}; }   // 1+i
inline EisInt ramified(eis_tag) { return {1, -1}; }      // 1-omega
template <class E> E ramified_of() { return ramified(typename E::tag_type{}); }

inline std::int64_t mod_pos(std::int64_t x, std::int64_t m) {
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

// n = 1 mod (1+i)^3  <=>  a=1,b=0 or a=3,b=2 (mod 4)
inline bool is_primary(GaussInt z) {
    std::int64_t a = mod_pos(z.a, 4), b = mod_pos(z.b, 4);
    return (a == 1 && b == 0) || (a == 3 && b == 2);
}
// n = 1 mod 3  <=>  a=1, b=0 (mod 3)
inline bool is_primary(EisInt z) {
    return mod_pos(z.a, 3) == 1 && mod_pos(z.b, 3) == 0;
}

// unit inverse: units have norm 1, so u^{-1} = conj(u)
template <class T> Elt<T> unit_inverse(Elt<T> u) { return conj(u); }

// ---- Euclidean division --------------------------------------------------
// q is x/y with each rational coordinate rounded to the nearest integer,
// halves toward -infinity; then norm(r) <= norm(y)/2 in Z[i], <= 3/4 norm(y)
// in Z[omega].

inline std::int64_t round_nearest_half_down(std::int64_t p, std::int64_t n) {
    // nearest integer to p/n for n > 0, ties toward -infinity:
    // ceil((2p - n) / (2n))
    std::int64_t num = checked::sub(checked::mul(2, p), n);
    std::int64_t den = checked::mul(2, n);
    std::int64_t q = num / den;
    if (num % den != 0 && num > 0) ++q;   // ceil for positive remainder
    return q;
}

template <class T>
std::pair<Elt<T>, Elt<T>> divmod(Elt<T> x, Elt<T> y) {
    using E = Elt<T>;
    std::int64_t n = norm(y);
    if (n == 0) throw std::domain_error("hecke: division by zero");
    E p = mul(x, conj(y));   // x/y = p / norm(y)
    E q{round_nearest_half_down(p.a, n), round_nearest_half_down(p.b, n)};
    E r = sub(x, mul(q, y));
    return {q, r};
}

template <class T> Elt<T> mod(Elt<T> x, Elt<T> y) { return divmod(x, y).second; }

template <class T> bool divides(Elt<T> d, Elt<T> x) {
    return is_zero(mod(x, d));
}

template <class T> Elt<T> div_exact(Elt<T> x, Elt<T> y) {
    auto [q, r] = divmod(x, y);
    if (!is_zero(r)) throw std::domain_error("hecke: inexact division");
    return q;
}

// ---- primary normalization ------------------------------------------------

// z = unit * primary; requires z coprime to the ramified prime.
template <class T>
std::pair<Elt<T>, Elt<T>> to_primary(Elt<T> z) {
    if (is_zero(z)) throw std::domain_error("hecke: to_primary(0)");
    for (auto w : units(T{})) {
        Elt<T> p = mul(z, w);
        if (is_primary(p)) return {unit_inverse(w), p};
    }
    throw std::domain_error("hecke: no primary associate (not coprime to ramified prime)");
}

// canonical associate: ramified^e * primary(odd part); fixes one generator
// per ideal for every nonzero z.
template <class T>
Elt<T> canonical_assoc(Elt<T> z) {
    if (is_zero(z)) throw std::domain_error("hecke: canonical_assoc(0)");
    Elt<T> ram = ramified(T{});
    Elt<T> cur = z;
    int e = 0;
    for (;;) {
        auto [q, r] = divmod(cur, ram);
        if (!is_zero(r)) break;
        cur = q;
        ++e;
    }
    Elt<T> p = to_primary(cur).second;
    for (int k = 0; k < e; ++k) p = mul(p, ram);
    return p;
}

template <class T>
Elt<T> gcd(Elt<T> x, Elt<T> y) {
    if (is_zero(x) && is_zero(y)) throw std::domain_error("hecke: gcd(0,0)");
    while (!is_zero(y)) {
        Elt<T> r = mod(x, y);
        x = y;
        y = r;
    }
    return canonical_assoc(x);
}

template <class T> bool coprime(Elt<T> x, Elt<T> y) {
    return norm(gcd(x, y)) == 1;
}

// ---- text form ------------------------------------------------------------
// canonical form "a+bi" / "a+bw" with both coefficients always present,
// e.g. "-1+2i", "3+0i", "0-1w".  The parser also accepts the shorthand
// forms "3", "i", "-i", "2i", "1-2i".

template <class E> constexpr char imag_letter() { return is_gauss_v<E> ? 'i' : 'w'; }

template <class E>
std::string format(E z) {
    std::string s = std::to_string(z.a);
    if (z.b >= 0) s += '+';
    s += std::to_string(z.b);
    s += imag_letter<E>();
    return s;
}

template <class E>
E parse_elt(const std::string& text);

std::complex<double> embed(GaussInt z);
std::complex<double> embed(EisInt z);

} // namespace hecke
