#pragma once

// Enumeration of ring elements by norm with congruence filters, plus the
// Gauss circle / ellipse counting checks.  Enumeration scans the bounding
// box on (a,b) and sorts by (norm, a, b); at desk scale no sieve is needed.

#include <cstdint>
#include <functional>
#include <vector>

#include "hecke/factor.hpp"
#include "hecke/ring.hpp"

namespace hecke {

enum class LatticeFilter { all, primary, coprime_to_ramified, jth_power_primary };

template <class E>
struct LatticeQuery {
    std::int64_t max_norm = 1;
    LatticeFilter filter = LatticeFilter::all;
    int j = 2;                       // only used by jth_power_primary
    std::int64_t min_norm = 1;       // range slice [min_norm, max_norm]
};

template <class E>
std::int64_t coeff_bound(std::int64_t max_norm) {
    double b = is_gauss_v<E> ? std::sqrt((double)max_norm)
                             : std::sqrt(4.0 * (double)max_norm / 3.0);
    return (std::int64_t)b + 2;
}

// visit every element passing the filter exactly once, in (norm, a, b) order
template <class E>
void for_each_element(const LatticeQuery<E>& q, const std::function<void(E, std::int64_t)>& fn) {
    std::vector<std::pair<std::int64_t, E>> hits;
    if (q.filter == LatticeFilter::jth_power_primary) {
        std::int64_t base_max = (std::int64_t)std::floor(std::pow((double)q.max_norm, 1.0 / q.j) + 0.5);
        while (base_max > 1 && std::pow((double)base_max, q.j) > (double)q.max_norm + 0.5) --base_max;
        LatticeQuery<E> inner{base_max, LatticeFilter::primary, 2, 1};
        for_each_element<E>(inner, [&](E c, std::int64_t Nc) {
            std::int64_t Nn = 1;
            for (int t = 0; t < q.j; ++t) Nn = checked::mul(Nn, Nc);
            if (Nn >= q.min_norm && Nn <= q.max_norm) hits.push_back({Nn, pow_elt(c, q.j)});
        });
    } else {
        const std::int64_t B = coeff_bound<E>(q.max_norm);
        E ram = ramified_of<E>();
        for (std::int64_t a = -B; a <= B; ++a)
            for (std::int64_t b = -B; b <= B; ++b) {
                E z{a, b};
                std::int64_t N = norm(z);
                if (N < q.min_norm || N > q.max_norm || N == 0) continue;
                switch (q.filter) {
                    case LatticeFilter::all: break;
                    case LatticeFilter::primary:
                        if (!is_primary(z)) continue;
                        break;
                    case LatticeFilter::coprime_to_ramified:
                        if (is_zero(mod(z, ram)) ) continue;
                        break;
                    default: continue;
                }
                hits.push_back({N, z});
            }
    }
    std::sort(hits.begin(), hits.end(), [](auto& x, auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
    });
    for (auto& [N, z] : hits) fn(z, N);
}

template <class E>
std::vector<E> enumerate(const LatticeQuery<E>& q) {
    std::vector<E> out;
    for_each_element<E>(q, [&](E z, std::int64_t) { out.push_back(z); });
    return out;
}

struct PrimaryCount {
    std::int64_t count = 0;
    double main_coefficient = 0.0;   // pi/8 resp. 2*pi/(9*sqrt(3))
    double ratio = 0.0;              // count / (coefficient * x)
};

// exact primary count up to norm x against the lattice-point main term
template <class E>
PrimaryCount count_primary(std::int64_t x) {
    PrimaryCount out;
    const std::int64_t B = coeff_bound<E>(x);
    for (std::int64_t a = -B; a <= B; ++a)
        for (std::int64_t b = -B; b <= B; ++b) {
            E z{a, b};
            std::int64_t N = norm(z);
            if (N >= 1 && N <= x && is_primary(z)) ++out.count;
        }
    const double pi = 3.14159265358979323846;
    out.main_coefficient = is_gauss_v<E> ? pi / 8.0 : 2.0 * pi / (9.0 * std::sqrt(3.0));
    out.ratio = (double)out.count / (out.main_coefficient * (double)x);
    return out;
}

// sum over primary j-th powers n with N(n) <= x of phi(n)/N(n)
template <class E>
double sum_phi_over_jth_powers(int j, std::int64_t x) {
    if (x < 1) throw std::domain_error("hecke: x >= 1 required");
    double tot = 0.0;
    LatticeQuery<E> q{x, LatticeFilter::jth_power_primary, j, 1};
    for_each_element<E>(q, [&](E n, std::int64_t) { tot += phi_over_norm(n); });
    return tot;
}

} // namespace hecke
