#include "hecke/zeta.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "hecke/ring.hpp"
#include "hecke/threads.hpp"

namespace hecke {

namespace {

constexpr double kPi = 3.14159265358979323846;

template <class E>
std::int64_t box_bound(std::int64_t max_norm) {
    if constexpr (is_gauss_v<E>)
        return (std::int64_t)std::sqrt((double)max_norm) + 2;
    else
        return (std::int64_t)std::sqrt(4.0 * (double)max_norm / 3.0) + 2;
}

// Every nonzero ideal is ramified^e * (primary); summing over primary
// generators p with ram_norm^e N(p) <= T covers each ideal exactly once.
// The geometric part over admissible e has a closed form per p.
template <class E>
double ideal_sum(std::int64_t T, double ram_norm) {
    const std::int64_t B = box_bound<E>(T);
    Kahan acc;
    const double r = 1.0 / (ram_norm * ram_norm);
    for (std::int64_t a = -B; a <= B; ++a) {
        for (std::int64_t b = -B; b <= B; ++b) {
            E z{a, b};
            std::int64_t N = norm(z);
            if (N < 1 || N > T || !is_primary(z)) continue;
            double cap = (double)T / (double)N;
            int emax = 0;
            double q = ram_norm;
            while (q <= cap) { ++emax; q *= ram_norm; }
            double geo = (1.0 - std::pow(r, emax + 1)) / (1.0 - r);
            acc.add(geo / ((double)N * (double)N));
        }
    }
    return acc.value();
}

std::vector<std::int64_t> primes_upto(std::int64_t n) {
    std::vector<bool> sieve((std::size_t)n + 1, true);
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p <= n; ++p) {
        if (!sieve[(std::size_t)p]) continue;
        out.push_back(p);
        for (std::int64_t q = p * p; q <= n; q += p) sieve[(std::size_t)q] = false;
    }
    return out;
}

ZetaConstant compute(Field f, std::int64_t T, std::int64_t TP) {
    ZetaConstant out;
    out.field = f;

    double ideal_density;   // ideals per unit norm
    double raw;
    if (f == Field::gauss) {
        raw = ideal_sum<GaussInt>(T, 2.0);
        ideal_density = kPi / 4.0;
    } else {
        raw = ideal_sum<EisInt>(T, 3.0);
        ideal_density = kPi / (3.0 * std::sqrt(3.0));
    }
    // tail: sum over N(a) > T of N^{-2} = density/T + O(T^{-3/2})
    out.ideal_sum_value = raw + ideal_density / (double)T;
    const double err_a = 40.0 * std::pow((double)T, -1.5) + 1e-12;

    // Euler product over rational primes: ramified / split / inert factors
    double logv = 0.0;
    for (std::int64_t p : primes_upto(TP)) {
        const double pp = (double)p * (double)p;
        if (f == Field::gauss) {
            if (p == 2) logv -= std::log1p(-1.0 / pp);               // ramified, norm 2
            else if (p % 4 == 1) logv -= 2.0 * std::log1p(-1.0 / pp);   // split, two of norm p
            else logv -= std::log1p(-1.0 / (pp * pp));               // inert, norm p^2
        } else {
            if (p == 3) logv -= std::log1p(-1.0 / pp);               // ramified, norm 3
            else if (p % 3 == 1) logv -= 2.0 * std::log1p(-1.0 / pp);
            else logv -= std::log1p(-1.0 / (pp * pp));
        }
    }
    out.euler_product_value = std::exp(logv);
    const double err_b = out.euler_product_value * 3.0 / (double)TP + 1e-12;

    out.value = out.ideal_sum_value;
    out.error_bound = err_a + 1e-11;
    if (std::abs(out.ideal_sum_value - out.euler_product_value) > err_a + err_b + 1e-7)
        throw std::runtime_error("hecke: zeta2 methods disagree beyond combined bounds");
    return out;
}

} // namespace

const ZetaConstant& zeta2(Field f) {
    static std::once_flag once_g, once_e;
    static ZetaConstant zg, ze;
    if (f == Field::gauss) {
        std::call_once(once_g, [] { zg = compute(Field::gauss, 4'000'000, 10'000'000); });
        return zg;
    }
    std::call_once(once_e, [] { ze = compute(Field::eisenstein, 4'000'000, 10'000'000); });
    return ze;
}

ZetaConstant zeta2_with_truncation(Field f, std::int64_t ideal_T, std::int64_t prime_T) {
    return compute(f, ideal_T, prime_T);
}

} // namespace hecke
