#include "doctest.h"

#include <cmath>
#include <random>

#include "hecke/gauss_sums.hpp"
#include "hecke/lattice.hpp"

using namespace hecke;

namespace {
const double kSqrt5 = std::sqrt(5.0);

template <class E>
std::vector<E> primaries(std::int64_t max_norm) {
    return enumerate(LatticeQuery<E>{max_norm, LatticeFilter::primary, 2, 1});
}
} // namespace

TEST_CASE("additive characters are exact rationals") {
    CHECK(additive_char(GaussInt{5, 0}, GaussInt{7, 0}) == RootOfUnityExponent::make(0, 1));
    CHECK(additive_char(GaussInt{0, 1}, GaussInt{2, 0}) == RootOfUnityExponent::make(1, 2));
    CHECK(additive_char(GaussInt{1, 0}, GaussInt{-1, 2}) == RootOfUnityExponent::make(-2, 5));
    CHECK(additive_char(EisInt{0, 1}, EisInt{1, 0}) == RootOfUnityExponent::make(1, 1));
    CHECK(additive_char(EisInt{1, 0}, EisInt{1, 3}) == RootOfUnityExponent::make(-3, 7));
    // v-coordinate zero after multiplication -> value 1
    CHECK(additive_char(EisInt{4, 0}, EisInt{5, 0}).value() == std::complex<double>{1.0, 0.0});
    CHECK_THROWS_AS(additive_char(GaussInt{1, 0}, GaussInt{0, 0}), std::domain_error);
}

TEST_CASE("additive character orthogonality over residue systems") {
    for (auto n : {GaussInt{-1, 2}, GaussInt{3, 2}, GaussInt{-3, 0}, GaussInt{-4, 3}}) {
        std::complex<double> acc{0.0, 0.0};
        for (auto x : residue_system(n)) {
            auto e = additive_char(x, n);
            CHECK(norm(n) % e.den == 0);   // denominator divides N(n)
            acc += e.value();
        }
        CHECK(std::abs(acc) <= 1e-9);
    }
    for (auto n : {EisInt{1, 3}, EisInt{-2, 0}, EisInt{4, 3}}) {
        std::complex<double> acc{0.0, 0.0};
        for (auto x : residue_system(n)) acc += additive_char(x, n).value();
        CHECK(std::abs(acc) <= 1e-9);
    }
}

TEST_CASE("gauss sum spot values") {
    CHECK(gauss_sum(2, GaussInt{1, 0}, GaussInt{1, 0}).v == std::complex<double>{1.0, 0.0});
    auto g = gauss_sum(2, GaussInt{1, 0}, GaussInt{-1, 2});
    CHECK(std::abs(g.v - std::complex<double>{-kSqrt5, 0.0}) < 1e-12);
    auto g0 = gauss_sum(2, GaussInt{0, 0}, pow_elt(GaussInt{-1, 2}, 2));
    CHECK(g0.v == std::complex<double>{20.0, 0.0});
    auto g0n = gauss_sum(2, GaussInt{0, 0}, GaussInt{-1, 2});
    CHECK(g0n.v == std::complex<double>{0.0, 0.0});
    CHECK(gauss_sum(3, EisInt{1, 0}, EisInt{1, 0}).v == std::complex<double>{1.0, 0.0});
}

TEST_CASE("prime Gauss sums have modulus sqrt(N)") {
    for (auto pi : primaries<GaussInt>(3000)) {
        if (!is_prime(pi)) continue;
        for (int j : {2, 4}) {
            double m = std::abs(gauss_sum(j, GaussInt{1, 0}, pi).v);
            CHECK(std::abs(m - std::sqrt((double)norm(pi))) <= 1e-9 * std::sqrt((double)norm(pi)));
        }
    }
    for (auto pi : primaries<EisInt>(3000)) {
        if (!is_prime(pi)) continue;
        double m = std::abs(gauss_sum(3, EisInt{1, 0}, pi).v);
        CHECK(std::abs(m - std::sqrt((double)norm(pi))) <= 1e-9 * std::sqrt((double)norm(pi)));
    }
}

TEST_CASE("explicit quadratic evaluation matches brute force on prime powers") {
    int cases = 0;
    for (auto pi : primaries<GaussInt>(500)) {
        if (!is_prime(pi)) continue;
        std::int64_t Npl = norm(pi);
        for (int l = 1; (double)Npl <= 2000.0; ++l, Npl *= norm(pi)) {
            GaussInt n = pow_elt(pi, l);
            for (int h : {0, 1, 2, l, l + 1}) {
                GaussInt k = pow_elt(pi, h);
                auto bf = gauss_sum(2, k, n);
                auto ex = gauss_sum_explicit_q2(k, n);
                CHECK(std::abs(bf.v - ex.v) <= 1e-9 * std::max(1.0, std::abs(ex.v)));
                ++cases;
            }
            auto bf0 = gauss_sum(2, GaussInt{0, 0}, n);
            auto ex0 = gauss_sum_explicit_q2(GaussInt{0, 0}, n);
            CHECK(std::abs(bf0.v - ex0.v) <= 1e-9 * std::max(1.0, std::abs(ex0.v)));
        }
    }
    CHECK(cases > 100);
    // l = h+1 even: g_2(pi, pi^2) = -N(pi)
    GaussInt pi{-1, 2};
    auto v = gauss_sum_explicit_q2(pi, pow_elt(pi, 2));
    CHECK(v.v == std::complex<double>{-5.0, 0.0});
    // l = 1 <= h odd: g_2(pi*k', pi) = 0
    auto z = gauss_sum_explicit_q2(mul(pi, GaussInt{3, 0}), pi);
    CHECK(z.v == std::complex<double>{0.0, 0.0});
}

TEST_CASE("multiplicativity over coprime primary moduli") {
    GaussInt m{-1, 2}, n{-1, -2};
    for (GaussInt k : {GaussInt{1, 0}, GaussInt{2, 1}, GaussInt{0, 0}}) {
        auto lhs = gauss_sum(2, k, mul(m, n));
        auto rhs = gauss_sum(2, k, m).v * gauss_sum(2, k, n).v;
        CHECK(std::abs(lhs.v - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs)));
    }
    GaussInt m2{3, 2}, n2{3, -2};   // the two primary primes over 13
    auto lhs = gauss_sum(2, GaussInt{1, 0}, mul(m2, n2));
    auto rhs = gauss_sum(2, GaussInt{1, 0}, m2).v * gauss_sum(2, GaussInt{1, 0}, n2).v;
    CHECK(std::abs(lhs.v - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs)));
}

TEST_CASE("twist identity") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<std::int64_t> d(-12, 12);
    int done = 0;
    while (done < 60) {
        GaussInt n{d(rng), d(rng)};
        if (is_zero(n) || norm(n) > 500 || norm(n) % 2 == 0) continue;
        n = to_primary(n).second;
        GaussInt s{d(rng), d(rng)}, r{d(rng), d(rng)};
        if (is_zero(s) || norm(gcd(s, n)) != 1) continue;
        for (int j : {2, 4}) {
            auto lhs = gauss_sum(j, mul(r, s), n);
            auto rhs = twist(j, s, r, n);
            CHECK(std::abs(lhs.v - rhs.v) <= 1e-9 * std::max(1.0, std::abs(rhs.v)));
        }
        ++done;
    }
    done = 0;
    while (done < 60) {
        EisInt n{d(rng), d(rng)};
        if (is_zero(n) || norm(n) > 500 || norm(n) % 3 == 0) continue;
        n = to_primary(n).second;
        EisInt s{d(rng), d(rng)}, r{d(rng), d(rng)};
        if (is_zero(s) || norm(gcd(s, n)) != 1) continue;
        auto lhs = gauss_sum(3, mul(r, s), n);
        auto rhs = twist(3, s, r, n);
        CHECK(std::abs(lhs.v - rhs.v) <= 1e-9 * std::max(1.0, std::abs(rhs.v)));
        ++done;
    }
    CHECK_THROWS_AS(twist(2, GaussInt{-1, 2}, GaussInt{1, 0}, GaussInt{-1, 2}),
                    std::domain_error);
    // s = 1 is the identity; a square s leaves g_2 unchanged
    GaussInt n{3, 2};
    auto base = gauss_sum(2, GaussInt{1, 0}, n);
    auto t1 = twist(2, GaussInt{1, 0}, GaussInt{1, 0}, n);
    CHECK(std::abs(base.v - t1.v) < 1e-12);
    GaussInt s2 = mul(GaussInt{2, 1}, GaussInt{2, 1});
    auto ts = twist(2, s2, GaussInt{1, 0}, n);
    CHECK(std::abs(base.v - ts.v) < 1e-12);
}

TEST_CASE("residue system and index") {
    GaussInt n{-1, 2};
    auto rs = residue_system(n);
    CHECK(rs.size() == 5);
    ResidueIndex<GaussInt> idx(n);
    for (auto r : rs) CHECK(idx.reduce(r) == idx(r));
    // reduce maps arbitrary elements onto the canonical class
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<std::int64_t> d(-100, 100);
    for (int t = 0; t < 200; ++t) {
        GaussInt z{d(rng), d(rng)};
        GaussInt r = mod(z, n);
        CHECK(idx.reduce(z) == idx(r));
    }
    auto table = gauss_sum_table(2, n, idx);
    for (auto r : rs)
        CHECK(std::abs(table[idx(r)] - gauss_sum(2, r, n).v) < 1e-12);
}
