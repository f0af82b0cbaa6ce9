#include "doctest.h"

#include <cmath>
#include <set>

#include "hecke/lattice.hpp"

using namespace hecke;

TEST_CASE("enumeration examples") {
    auto g = enumerate(LatticeQuery<GaussInt>{1, LatticeFilter::primary, 2, 1});
    REQUIRE(g.size() == 1);
    CHECK(g[0] == GaussInt{1, 0});

    auto g10 = enumerate(LatticeQuery<GaussInt>{10, LatticeFilter::primary, 2, 1});
    // brute criterion scan: 1, -1+2i, -1-2i and the primary associate of (3)
    std::vector<GaussInt> expect = {{1, 0}, {-1, -2}, {-1, 2}, {-3, 0}};
    CHECK(g10 == expect);

    auto e7 = enumerate(LatticeQuery<EisInt>{7, LatticeFilter::primary, 2, 1});
    CHECK(std::find(e7.begin(), e7.end(), EisInt{1, 3}) != e7.end());
    CHECK(std::find(e7.begin(), e7.end(), EisInt{-2, -3}) != e7.end());
    CHECK(e7.size() == 4);   // 1, -2, and the two norm-7 primaries
}

TEST_CASE("enumeration complete, duplicate-free, ordered (norm <= 10^4)") {
    auto all = enumerate(LatticeQuery<GaussInt>{10000, LatticeFilter::primary, 2, 1});
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    std::int64_t brute = 0;
    for (std::int64_t a = -110; a <= 110; ++a)
        for (std::int64_t b = -110; b <= 110; ++b) {
            GaussInt z{a, b};
            if (norm(z) >= 1 && norm(z) <= 10000 && is_primary(z)) ++brute;
        }
    for (auto z : all) CHECK(seen.insert({z.a, z.b}).second);
    CHECK((std::int64_t)all.size() == brute);
    for (std::size_t i = 1; i < all.size(); ++i) {
        auto prev = std::pair{norm(all[i - 1]), all[i - 1]};
        auto cur = std::pair{norm(all[i]), all[i]};
        CHECK(prev < cur);
    }
    // norm-range slices partition the stream
    auto lo = enumerate(LatticeQuery<GaussInt>{5000, LatticeFilter::primary, 2, 1});
    auto hi = enumerate(LatticeQuery<GaussInt>{10000, LatticeFilter::primary, 2, 5001});
    CHECK(lo.size() + hi.size() == all.size());
}

TEST_CASE("primary filter picks exactly one associate per ideal") {
    auto all = enumerate(LatticeQuery<EisInt>{2000, LatticeFilter::primary, 2, 1});
    std::set<std::pair<std::int64_t, std::int64_t>> canon;
    for (auto z : all) {
        CHECK(to_primary(z).second == z);
        for (auto u : ring_units<EisInt>()) {
            EisInt w = mul(z, u);
            if (w == z) continue;
            CHECK(!is_primary(w));
        }
        canon.insert({z.a, z.b});
    }
    // every admissible element's primary associate is in the enumeration
    for (std::int64_t a = -20; a <= 20; ++a)
        for (std::int64_t b = -20; b <= 20; ++b) {
            EisInt z{a, b};
            if (is_zero(z) || norm(z) > 2000 || norm(z) % 3 == 0) continue;
            auto p = to_primary(z).second;
            CHECK(canon.count({p.a, p.b}) == 1);
        }
}

TEST_CASE("primary counts approach the closed coefficients") {
    auto g = count_primary<GaussInt>(100000);
    CHECK(std::abs(g.ratio - 1.0) < 0.01);
    CHECK(g.main_coefficient == doctest::Approx(3.14159265358979 / 8).epsilon(1e-12));
    auto e = count_primary<EisInt>(100000);
    CHECK(std::abs(e.ratio - 1.0) < 0.01);
    auto g1 = count_primary<GaussInt>(1);
    CHECK(g1.count == 1);
    // decreasing relative error over the decade grid
    double prev = 1e9;
    for (std::int64_t x : {1000, 10000, 100000}) {
        auto c = count_primary<GaussInt>(x);
        double err = std::abs(c.ratio - 1.0);
        CHECK(err < prev);
        prev = err;
    }
}

TEST_CASE("sum of phi/N over j-th powers") {
    // below the first nontrivial j-th power only n=1 contributes
    CHECK(sum_phi_over_jth_powers<GaussInt>(2, 3) == 1.0);
    CHECK(sum_phi_over_jth_powers<GaussInt>(4, 15) == 1.0);
    CHECK(sum_phi_over_jth_powers<EisInt>(3, 7) == 1.0);
    // monotone in x
    double prev = 0.0;
    for (std::int64_t x : {10, 100, 1000, 10000, 100000}) {
        double v = sum_phi_over_jth_powers<GaussInt>(2, x);
        CHECK(v >= prev);
        prev = v;
    }
    // j=2 ratio against (pi/(6 zeta)) x^{1/2}; zeta_Q(i)(2) = 1.5067030099
    double x = 1e6;
    double v = sum_phi_over_jth_powers<GaussInt>(2, (std::int64_t)x);
    double main = 3.14159265358979323846 / (6.0 * 1.5067030099229850) * std::sqrt(x);
    CHECK(std::abs(v / main - 1.0) < 0.05);
}
