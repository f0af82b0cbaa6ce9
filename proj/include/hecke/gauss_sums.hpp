#pragma once

// Additive characters on Z[i]/(n) and Z[omega]/(n) with exact rational
// exponents, Gauss sums g_j(r,n) over a canonical residue system, the
// explicit quadratic evaluation (five-case prime-power table plus
// multiplicativity), and the twist identity
//     g_j(rs,n) = conj((s/n)_j) g_j(r,n),   (s,n)=1, n primary.

#include <complex>
#include <numeric>
#include <vector>

#include "hecke/symbols.hpp"

namespace hecke {

// value e^{2 pi i num/den}, reduced, den > 0
struct RootOfUnityExponent {
    std::int64_t num = 0;
    std::int64_t den = 1;
    static RootOfUnityExponent make(std::int64_t num, std::int64_t den) {
        if (den == 0) throw std::domain_error("hecke: zero denominator");
        if (den < 0) { den = -den; num = -num; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        return {num, den};
    }
    double angle() const { return 2.0 * 3.14159265358979323846 * (double)num / (double)den; }
    std::complex<double> value() const {
        if (num == 0) return {1.0, 0.0};
        return {std::cos(angle()), std::sin(angle())};
    }
    friend bool operator==(const RootOfUnityExponent&, const RootOfUnityExponent&) = default;
};

// complex with a tracked absolute error bound
struct ComplexValue {
    std::complex<double> v{0.0, 0.0};
    double err = 0.0;
    void accumulate(std::complex<double> term) {
        v += term;
        err += 4.0e-16 * (std::abs(term) + std::abs(v));
    }
    friend ComplexValue operator*(const ComplexValue& x, const ComplexValue& y) {
        ComplexValue out;
        out.v = x.v * y.v;
        out.err = x.err * std::abs(y.v) + y.err * std::abs(x.v) + x.err * y.err
                + 4.0e-16 * std::abs(out.v);
        return out;
    }
};

// e~_i(w/n) = exp(2 pi i Im(w conj(n))/N(n)); Im is exact in integers.
inline RootOfUnityExponent additive_char(GaussInt w, GaussInt n) {
    if (is_zero(n)) throw std::domain_error("hecke: additive character mod 0");
    GaussInt p = mul(w, conj(n));
    return RootOfUnityExponent::make(p.b, norm(n));
}

// e~_w(w/n): with w conj(n) = u + v*omega the exponent is v/N(n).
inline RootOfUnityExponent additive_char(EisInt w, EisInt n) {
    if (is_zero(n)) throw std::domain_error("hecke: additive character mod 0");
    EisInt p = mul(w, conj(n));
    return RootOfUnityExponent::make(p.b, norm(n));
}

// ---- canonical residue systems -------------------------------------------

// Bounding box radius for canonical (divmod) remainders mod n:
// N(r) <= N(n)/2 in Z[i], <= 3N(n)/4 in Z[omega] gives |a|,|b| <= R.
template <class E>
std::int64_t residue_box_radius(std::int64_t n_norm) {
    double bound = is_gauss_v<E> ? std::sqrt(n_norm / 2.0) : std::sqrt((double)n_norm);
    return (std::int64_t)bound + 1;
}

// all canonical residues mod n in (norm, a, b) order
template <class E>
std::vector<E> residue_system(E n) {
    std::int64_t N = norm(n);
    if (N == 0) throw std::domain_error("hecke: residues mod 0");
    std::int64_t R = residue_box_radius<E>(N);
    std::vector<E> out;
    out.reserve((std::size_t)N);
    for (std::int64_t a = -R; a <= R; ++a)
        for (std::int64_t b = -R; b <= R; ++b) {
            E z{a, b};
            if (mod(z, n) == z) out.push_back(z);
        }
    if ((std::int64_t)out.size() != N)
        throw std::logic_error("hecke: residue system enumeration failed");
    std::sort(out.begin(), out.end(), [](E x, E y) {
        auto nx = norm(x), ny = norm(y);
        if (nx != ny) return nx < ny;
        return x < y;
    });
    return out;
}

// dense index over the canonical-remainder box, for O(1) residue lookup
template <class E>
struct ResidueIndex {
    E n;
    std::int64_t R = 0;
    std::int64_t dim = 0;
    explicit ResidueIndex(E n_) : n(n_) {
        R = residue_box_radius<E>(norm(n));
        dim = 2 * R + 1;
    }
    std::size_t size() const { return (std::size_t)(dim * dim); }
    std::size_t operator()(E r) const {
        return (std::size_t)((r.a + R) * dim + (r.b + R));
    }
    std::size_t reduce(E x) const { return (*this)(mod(x, n)); }
};

// n is a j-th power of a primary element
template <class E>
bool is_jth_power_primary(int j, E n) {
    if (!is_primary(n)) return false;
    if (n == E{1, 0}) return true;
    auto f = factor(n);
    for (auto& [p, e] : f.factors)
        if (e % j != 0) return false;
    return f.ramified_exponent == 0;
}

// ---- Gauss sums -----------------------------------------------------------

// g_j(r,n) = sum over x mod n of (x/n)_j e~(rx/n), brute force over the
// canonical residue system.  For r = 0 the sum collapses to phi(n) when n
// is a j-th power and 0 otherwise; the branch is cross-checked against the
// actual sum.
template <class E>
ComplexValue gauss_sum(int j, E r, E n) {
    detail::check_order<E>(j);
    if (!is_primary(n) && n != E{1, 0})
        throw std::domain_error("hecke: gauss_sum requires primary n");
    ComplexValue out;
    for (E x : residue_system(n)) {
        SymbolValue s = symbol_fast(j, x, n);
        if (s.is_zero()) continue;
        RootOfUnityExponent e = additive_char(mul(r, x), n);
        double ang = 2.0 * 3.14159265358979323846 *
                     ((double)s.exp / j + (double)e.num / (double)e.den);
        out.accumulate({std::cos(ang), std::sin(ang)});
    }
    if (is_zero(mod(r, n)) && norm(n) > 1) {
        double branch = is_jth_power_primary(j, n) ? (double)euler_phi(n) : 0.0;
        if (std::abs(out.v - branch) > 1e-9 * std::max(1.0, std::abs(branch)))
            throw std::logic_error("hecke: g(0,n) branch disagrees with the sum");
        out.v = branch;
    }
    return out;
}

// table of g_j(r,n) over all residues r mod n, indexed by ResidueIndex
template <class E>
std::vector<std::complex<double>> gauss_sum_table(int j, E n, const ResidueIndex<E>& idx) {
    std::vector<std::complex<double>> table(idx.size(), std::complex<double>{0.0, 0.0});
    auto residues = residue_system(n);
    // precompute symbol values once; each g(r,.) is then an O(N) pass
    std::vector<int> sym(residues.size());
    for (std::size_t i = 0; i < residues.size(); ++i) {
        SymbolValue s = symbol_fast(j, residues[i], n);
        sym[i] = s.is_zero() ? -1 : s.exp;
    }
    const double twopi = 2.0 * 3.14159265358979323846;
    const std::int64_t N = norm(n);
    for (E r : residues) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t i = 0; i < residues.size(); ++i) {
            if (sym[i] < 0) continue;
            RootOfUnityExponent e = additive_char(mul(r, residues[i]), n);
            double ang = twopi * ((double)sym[i] / j + (double)e.num / (double)e.den);
            acc += std::complex<double>{std::cos(ang), std::sin(ang)};
        }
        table[idx(r)] = acc;
    }
    (void)N;
    return table;
}

// Lemma-style explicit evaluation of g_2(k, pi^l) in Z[i]:
//   0                                         l <= h odd
//   phi(pi^l)                                 l <= h even
//   -N(pi)^{l-1}                              l = h+1 even
//   (i k pi^{-h} / pi)_2 N(pi)^{l-1/2}        l = h+1 odd
//   0                                         l >= h+2
// where pi^h || k (h = infinity for k = 0).
ComplexValue gauss_sum_explicit_q2_primepow(GaussInt k, GaussInt pi, int l);

// composite primary n by multiplicativity over its prime-power parts
ComplexValue gauss_sum_explicit_q2(GaussInt k, GaussInt n);

// predicted right-hand side of the twist identity (2.3):
// conj((s/n)_j) * g_j(r,n), for (s,n)=1.
template <class E>
ComplexValue twist(int j, E s, E r, E n) {
    if (norm(gcd(s, n)) != 1) throw std::domain_error("hecke: twist requires (s,n)=1");
    SymbolValue sv = symbol_fast(j, s, n);
    ComplexValue g = gauss_sum(j, r, n);
    ComplexValue out;
    out.v = std::conj(sv.value()) * g.v;
    out.err = g.err;
    return out;
}

} // namespace hecke
