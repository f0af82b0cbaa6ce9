#include "hecke/factor.hpp"

#include <cmath>
#include <numeric>

namespace hecke::detail {

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return (std::int64_t)((__int128)a * b % m);
}

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t m) {
    std::int64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// deterministic Miller-Rabin, valid for all 64-bit inputs
bool miller_rabin(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::int64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) { d /= 2; ++s; }
    for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::int64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

std::int64_t pollard_rho(std::int64_t n) {
    if (n % 2 == 0) return 2;
    for (std::int64_t c = 1;; ++c) {
        auto f = [&](std::int64_t x) { return (mulmod(x, x, n) + c) % n; };
        std::int64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(std::llabs(x - y), n);
        }
        if (d != n) return d;
    }
}

void factor_into(std::int64_t n, std::vector<std::pair<std::int64_t, int>>& out) {
    if (n == 1) return;
    if (miller_rabin(n)) {
        for (auto& [p, e] : out)
            if (p == n) { ++e; return; }
        out.push_back({n, 1});
        return;
    }
    std::int64_t d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

bool is_rational_prime(std::int64_t n) { return miller_rabin(n); }

std::vector<std::pair<std::int64_t, int>> factor_rational(std::int64_t n) {
    std::vector<std::pair<std::int64_t, int>> out;
    if (n < 0) n = -n;
    if (n <= 1) return out;
    for (std::int64_t d = 2; d * d <= n && d <= 1000000; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            out.push_back({d, e});
        }
    }
    if (n > 1) factor_into(n, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hecke::detail
