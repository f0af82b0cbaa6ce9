#include "hecke/gauss_sums.hpp"

#include <cmath>

namespace hecke {

namespace {

// valuation of k at pi; -1 encodes k = 0 (h = infinity)
int valuation(GaussInt k, GaussInt pi) {
    if (is_zero(k)) return -1;
    int h = 0;
    for (;;) {
        auto [q, r] = divmod(k, pi);
        if (!is_zero(r)) return h;
        k = q;
        ++h;
    }
}

} // namespace

ComplexValue gauss_sum_explicit_q2_primepow(GaussInt k, GaussInt pi, int l) {
    if (!is_primary(pi) || !is_prime(pi))
        throw std::domain_error("hecke: explicit Gauss sum needs a primary prime");
    if (l < 1) throw std::domain_error("hecke: prime power exponent must be >= 1");
    const double Np = (double)norm(pi);
    int h = valuation(k, pi);
    ComplexValue out;
    const bool l_le_h = (h < 0) || (l <= h);
    if (l_le_h) {
        if (l % 2 == 1) {
            out.v = 0.0;
        } else {
            out.v = (double)euler_phi(pow_elt(pi, l));
        }
    } else if (l == h + 1) {
        if (l % 2 == 0) {
            out.v = -std::pow(Np, l - 1);
        } else {
            GaussInt kk = k;
            for (int t = 0; t < h; ++t) kk = div_exact(kk, pi);
            SymbolValue s = symbol_fast(2, mul(GaussInt{0, 1}, kk), pi);
            double sv = s.is_zero() ? 0.0 : (s.exp == 0 ? 1.0 : -1.0);
            out.v = sv * std::pow(Np, l - 1) * std::sqrt(Np);
        }
    } else {
        out.v = 0.0;
    }
    out.err = 4.0e-16 * std::abs(out.v);
    return out;
}

ComplexValue gauss_sum_explicit_q2(GaussInt k, GaussInt n) {
    if (!is_primary(n) && n != GaussInt{1, 0})
        throw std::domain_error("hecke: explicit Gauss sum requires primary n");
    ComplexValue out;
    out.v = 1.0;
    if (n == GaussInt{1, 0}) return out;
    auto f = factor(n);
    for (auto& [pi, e] : f.factors)
        out = out * gauss_sum_explicit_q2_primepow(k, pi, e);
    return out;
}

} // namespace hecke
