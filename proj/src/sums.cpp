#include "hecke/sums.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstdio>

#include "hecke/threads.hpp"

namespace hecke {

namespace {

constexpr double kPi = 3.14159265358979323846;

template <class E>
std::complex<double> root_table_value(int J, int e);

// exact unit roots: avoids trig error in the hot reduction
std::complex<double> quartic_root(int e) {
    switch (e & 3) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}
std::complex<double> cubic_root(int e) {
    static const double s = std::sqrt(3.0) / 2.0;
    switch ((e % 3 + 3) % 3) {
        case 0: return {1.0, 0.0};
        case 1: return {-0.5, s};
        default: return {-0.5, -s};
    }
}

// symbol table over canonical residues mod n: exponent of zeta_J, -1 for zero
template <class E>
std::vector<std::int8_t> symbol_table(E n, const ResidueIndex<E>& idx) {
    constexpr int J = detail::field_order<E>();
    std::vector<std::int8_t> table(idx.size(), (std::int8_t)-2);
    const std::int64_t R = idx.R;
    for (std::int64_t a = -R; a <= R; ++a)
        for (std::int64_t b = -R; b <= R; ++b) {
            E z{a, b};
            if (!(mod(z, n) == z)) continue;
            SymbolValue s = symbol_fast(J, z, n);
            table[idx(z)] = s.is_zero() ? (std::int8_t)-1 : (std::int8_t)s.exp;
        }
    return table;
}

} // namespace

SumConfig SumConfig::make(int j, double X, double Y) {
    SumConfig cfg;
    cfg.j = j;
    cfg.X = X;
    cfg.Y = Y;
    return cfg;
}

double SumConfig::resolved_U() const {
    if (U > 0.0) return U;
    return std::max(2.0, std::sqrt(X / Y));
}

int SumConfig::resolved_threads() const {
    if (const char* env = std::getenv("HECKE_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return threads >= 1 ? threads : hardware_threads();
}

void SumConfig::validate() const {
    if (j != 2 && j != 3 && j != 4) throw std::domain_error("hecke: j must be 2, 3 or 4");
    if (!(X >= 1.0) || !(Y >= 1.0)) throw std::domain_error("hecke: X, Y must be >= 1");
    if (resolved_U() < 2.0) throw std::domain_error("hecke: U must be >= 2");
    if (truncation_exponent < 6) throw std::domain_error("hecke: truncation exponent must be >= 6");
}

// ---- direct sum -----------------------------------------------------------

namespace {

template <class E>
std::complex<double> direct_sum_impl(const SumConfig& cfg, DirectStats* stats) {
    constexpr int J = detail::field_order<E>();
    const int j = cfg.j;
    const double U = cfg.resolved_U();
    SmoothWeight w(U);

    // m list with weights, coprime to the ramified prime, fixed order
    std::vector<E> ms;
    std::vector<double> mw;
    {
        LatticeQuery<E> q{(std::int64_t)cfg.X, LatticeFilter::coprime_to_ramified, 2, 1};
        for_each_element<E>(q, [&](E m, std::int64_t N) {
            double v = w((double)N / cfg.X);
            if (v > 0.0) {
                ms.push_back(m);
                mw.push_back(v);
            }
        });
    }
    // n list with Phi weights
    std::vector<E> ns;
    std::vector<double> nw;
    {
        LatticeQuery<E> q{(std::int64_t)cfg.Y, LatticeFilter::primary, 2, 1};
        for_each_element<E>(q, [&](E n, std::int64_t N) {
            double v = w((double)N / cfg.Y);
            if (v > 0.0) {
                ns.push_back(n);
                nw.push_back(v);
            }
        });
    }

    std::vector<std::complex<double>> per_n(ns.size());
    std::vector<double> per_n_abs(ns.size());

    parallel_chunks((std::int64_t)ns.size(), cfg.resolved_threads(),
                    [&](std::int64_t i0, std::int64_t i1) {
        for (std::int64_t i = i0; i < i1; ++i) {
            E n = ns[(std::size_t)i];
            double bucket[J] = {0.0};
            if (n == E{1, 0}) {
                // (m/1)_j = 1
                for (double v : mw) bucket[0] += v;
            } else {
                ResidueIndex<E> idx(n);
                auto table = symbol_table<E>(n, idx);
                for (std::size_t t = 0; t < ms.size(); ++t) {
                    int e = table[idx.reduce(ms[t])];
                    if (e >= 0) bucket[e] += mw[t];
                }
            }
            std::complex<double> acc{0.0, 0.0};
            double abs_acc = 0.0;
            for (int e = 0; e < J; ++e) {
                std::complex<double> root;
                if constexpr (is_gauss_v<E>) {
                    root = (j == 2) ? std::complex<double>((e & 1) ? -1.0 : 1.0, 0.0)
                                    : quartic_root(e);
                } else {
                    root = cubic_root(e);
                }
                acc += bucket[e] * root;
                abs_acc += bucket[e];
            }
            per_n[(std::size_t)i] = nw[(std::size_t)i] * acc;
            per_n_abs[(std::size_t)i] = nw[(std::size_t)i] * abs_acc;
        }
    });

    Kahan re, im, absacc;
    for (std::size_t i = 0; i < per_n.size(); ++i) {
        re.add(per_n[i].real());
        im.add(per_n[i].imag());
        absacc.add(per_n_abs[i]);
    }
    std::complex<double> total{re.value(), im.value()};
    double budget = 1e-15 * absacc.value();
    if (stats) {
        stats->n_count = (std::int64_t)ns.size();
        stats->m_count = (std::int64_t)ms.size();
        stats->error_budget = budget;
    }
    double scale = std::abs(main_term(cfg));
    if (budget > 1e-3 * std::max(std::abs(total), scale))
        throw std::runtime_error("hecke: floating cancellation budget breached");
    return total;
}

} // namespace

std::complex<double> direct_sum(const SumConfig& cfg, DirectStats* stats) {
    cfg.validate();
    if (cfg.j == 3) return direct_sum_impl<EisInt>(cfg, stats);
    return direct_sum_impl<GaussInt>(cfg, stats);
}

// ---- main term and diagonal term ------------------------------------------

double main_term(const SumConfig& cfg) {
    cfg.validate();
    if (cfg.j == 3) {
        // (2/3) * (2 pi / sqrt 3) * (pi / (4 sqrt 3 zeta)) = pi^2 / (9 zeta)
        return kPi * kPi * cfg.X * std::cbrt(cfg.Y) / (9.0 * zeta2(Field::eisenstein).value);
    }
    // (1/2) * pi * (pi / (6 zeta)) = pi^2 / (12 zeta)
    return kPi * kPi * cfg.X * std::pow(cfg.Y, 1.0 / cfg.j) /
           (12.0 * zeta2(Field::gauss).value);
}

namespace {

template <class E>
double m0_impl(const SumConfig& cfg) {
    const double U = cfg.resolved_U();
    SmoothWeight phi(U);
    TransformEvaluator ev(cfg.field(), U, cfg.quad_tol);
    const double w0 = ev(0.0);
    double pref = is_gauss_v<E> ? cfg.X * w0 / 2.0 : 2.0 * cfg.X * w0 / 3.0;
    Kahan acc;
    LatticeQuery<E> q{(std::int64_t)cfg.Y, LatticeFilter::jth_power_primary, cfg.j, 1};
    for_each_element<E>(q, [&](E n, std::int64_t N) {
        double v = phi((double)N / cfg.Y);
        if (v > 0.0) acc.add(phi_over_norm(n) * v);
    });
    return pref * acc.value();
}

} // namespace

double m0_term(const SumConfig& cfg) {
    cfg.validate();
    if (cfg.j == 3) return m0_impl<EisInt>(cfg);
    return m0_impl<GaussInt>(cfg);
}

// ---- Poisson identity check -----------------------------------------------

template <class E>
PoissonCheckResult poisson_check(int j, E n, double X, double U, double quad_tol,
                                 int p_max, TransformEvaluator* shared) {
    detail::check_order<E>(j);
    if (!is_primary(n) && n != E{1, 0})
        throw std::domain_error("hecke: poisson_check requires primary n");
    if (p_max < 6) throw std::domain_error("hecke: envelope exponent must be >= 6");
    PoissonCheckResult out;
    SmoothWeight w(U);

    // lhs: direct lattice sum over m coprime to the ramified prime
    {
        Kahan re, im;
        LatticeQuery<E> q{(std::int64_t)X, LatticeFilter::coprime_to_ramified, 2, 1};
        for_each_element<E>(q, [&](E m, std::int64_t N) {
            double v = w((double)N / X);
            if (v <= 0.0) return;
            SymbolValue s = symbol_fast(j, m, n);
            if (s.is_zero()) return;
            auto z = s.value();
            re.add(v * z.real());
            im.add(v * z.imag());
        });
        out.lhs = {re.value(), im.value()};
    }

    // rhs: truncated dual sum with certified tail
    const double Nn = (double)norm(n);
    const double c = is_gauss_v<E> ? 2.0 : 3.0;
    const double density = is_gauss_v<E> ? kPi : 2.0 * kPi / std::sqrt(3.0);
    const double pref = X / (c * Nn);
    const double phimax = is_gauss_v<E> ? 1.0 : 2.0;
    const double alpha = std::sqrt(X / (c * Nn));

    std::optional<TransformEvaluator> own;
    TransformEvaluator* ev = shared;
    if (!ev) {
        own.emplace(is_gauss_v<E> ? Field::gauss : Field::eisenstein, U, quad_tol);
        ev = &*own;
    }

    ResidueIndex<E> idx(n);
    auto gtable = gauss_sum_table(j, n, idx);
    double ghat = 0.0;
    for (auto& g : gtable) ghat = std::max(ghat, std::abs(g));

    const double budget = quad_tol;
    std::int64_t K = 64;
    for (;;) {
        double tail = pref * phimax * ghat *
                      ev->envelope_norm_tail(alpha, density, (double)K, p_max);
        if (tail <= budget) {
            out.tail_bound = tail;
            break;
        }
        if (K > (std::int64_t)1 << 42)
            throw std::runtime_error("hecke: cannot certify Poisson tail at this tolerance");
        K *= 2;
    }
    out.truncation_norm = K;
    ev->ensure_grid(alpha * std::sqrt((double)K) * 1.0001 + 1.0);

    Kahan re, im;
    std::int64_t kept = 0;
    {
        // k = 0 term
        double f0 = is_gauss_v<E> ? 1.0 : 2.0;
        std::complex<double> g0 = gtable[idx.reduce(E{0, 0})];
        re.add(f0 * g0.real() * ev->grid_eval(0.0));
        im.add(f0 * g0.imag() * ev->grid_eval(0.0));
    }
    const std::int64_t B = coeff_bound<E>(K);
    for (std::int64_t a = -B; a <= B; ++a)
        for (std::int64_t b = -B; b <= B; ++b) {
            E k{a, b};
            std::int64_t Nk = norm(k);
            if (Nk < 1 || Nk > K) continue;
            double f;
            if constexpr (is_gauss_v<E>) {
                f = (Nk & 1) ? -1.0 : 1.0;                 // (-1)^{N(k)}
            } else {
                f = (Nk % 3 == 0) ? 2.0 : -1.0;            // w^{N(k)} + conj(w)^{N(k)}
            }
            std::complex<double> g = gtable[idx.reduce(k)];
            if (g.real() == 0.0 && g.imag() == 0.0) continue;
            double wt = ev->grid_eval(alpha * std::sqrt((double)Nk));
            re.add(f * wt * g.real());
            im.add(f * wt * g.imag());
            ++kept;
        }

    SymbolValue ram_sym = symbol_fast(j, ramified_of<E>(), n);
    std::complex<double> supp = ram_sym.value();
    out.rhs = pref * supp * std::complex<double>{re.value(), im.value()};
    out.error_budget = out.tail_bound +
                       pref * phimax * ghat * (double)(kept + 1) * ev->grid_error_bound() +
                       1e-14 * (std::abs(out.lhs) + std::abs(out.rhs) + 1.0);
    out.delta = std::abs(out.lhs - out.rhs);
    return out;
}

template PoissonCheckResult poisson_check<GaussInt>(int, GaussInt, double, double, double,
                                                    int, TransformEvaluator*);
template PoissonCheckResult poisson_check<EisInt>(int, EisInt, double, double, double,
                                                  int, TransformEvaluator*);

// ---- factorization check ----------------------------------------------------

namespace {

int valuation_at(GaussInt k, GaussInt pi) {
    int h = 0;
    for (;;) {
        auto [q, r] = divmod(k, pi);
        if (!is_zero(r)) return h;
        k = q;
        ++h;
    }
}

std::complex<double> cpow_int(double base, std::complex<double> e) {
    return std::exp(e * std::log(base));
}

} // namespace

FactorizationCheckResult factorization_check(GaussInt k, std::complex<double> s,
                                             std::int64_t T) {
    if (is_zero(k)) throw std::domain_error("hecke: factorization_check requires k != 0");
    if (s.real() < 1.5)
        throw std::domain_error("hecke: Re(s) too small for absolute convergence");
    FactorizationCheckResult out;
    out.truncation = T;

    const GaussInt I{0, 1}, RAM{1, 1};
    GaussInt kappa = mul(mul(I, RAM), k);   // i(1+i)k = k1 k2^2, k1 square-free

    auto f = factor(kappa);
    // unit part: i^a with a in {0,1} mod squares of units (i^2 = -1)
    int a = (f.unit == GaussInt{0, 1} || f.unit == GaussInt{0, -1}) ? 1 : 0;
    int b = f.ramified_exponent % 2;
    GaussInt k1{1, 0};
    if (a) k1 = mul(k1, I);
    if (b) k1 = mul(k1, RAM);
    for (auto& [pi, e] : f.factors)
        if (e % 2) k1 = mul(k1, pi);
    out.k1 = k1;

    // lhs: sum over primary n of ((1+i)/n)_2 g_2(k,n) N(n)^{-1-s}
    {
        Kahan re, im;
        LatticeQuery<GaussInt> q{T, LatticeFilter::primary, 2, 1};
        for_each_element<GaussInt>(q, [&](GaussInt n, std::int64_t N) {
            ComplexValue g = gauss_sum_explicit_q2(k, n);
            if (g.v.real() == 0.0 && g.v.imag() == 0.0) return;
            SymbolValue sv = symbol_fast(2, RAM, n);
            std::complex<double> term =
                sv.value() * g.v / cpow_int((double)N, 1.0 + s);
            re.add(term.real());
            im.add(term.imag());
        });
        out.lhs = {re.value(), im.value()};
    }

    // rhs: truncated Hecke L-series * finite Euler factors over pi | k *
    // truncated generic factors (1 - N^{-1-2s})
    std::complex<double> L{0.0, 0.0};
    {
        Kahan re, im;
        LatticeQuery<GaussInt> q{T, LatticeFilter::primary, 2, 1};
        for_each_element<GaussInt>(q, [&](GaussInt c, std::int64_t N) {
            SymbolValue chi = symbol_fast(2, k1, c);
            if (chi.is_zero()) return;
            std::complex<double> term = chi.value() / cpow_int((double)N, 0.5 + s);
            re.add(term.real());
            im.add(term.imag());
        });
        L = {re.value(), im.value()};
    }

    std::complex<double> euler{1.0, 0.0};
    {
        // finite factors at pi | k
        auto fk = factor(k);
        for (auto& [pi, e] : fk.factors) {
            const double N = (double)norm(pi);
            int h = valuation_at(kappa, pi);
            std::complex<double> series{1.0, 0.0};   // r = 0 term
            for (int r = 1; r <= h + 1; ++r) {
                ComplexValue g = gauss_sum_explicit_q2_primepow(kappa, pi, r);
                series += g.v * std::exp(-(1.0 + s) * (double)r * std::log(N));
            }
            SymbolValue chi = symbol_fast(2, k1, pi);
            std::complex<double> lfac =
                std::complex<double>{1.0, 0.0} - chi.value() / cpow_int(N, 0.5 + s);
            euler *= lfac * series;
        }
        // generic primes up to T not dividing k
        LatticeQuery<GaussInt> q{T, LatticeFilter::primary, 2, 1};
        for_each_element<GaussInt>(q, [&](GaussInt pi, std::int64_t N) {
            if (!is_prime(pi)) return;
            if (is_zero(mod(k, pi))) return;
            euler *= std::complex<double>{1.0, 0.0} - 1.0 / cpow_int((double)N, 1.0 + 2.0 * s);
        });
    }
    out.rhs = L * euler;
    out.delta = std::abs(out.lhs - out.rhs);
    return out;
}

// ---- compare / reporting -----------------------------------------------------

SumReport compare(const SumConfig& cfg) {
    cfg.validate();
    auto t0 = std::chrono::steady_clock::now();
    SumReport r;
    r.j = cfg.j;
    r.X = cfg.X;
    r.Y = cfg.Y;
    r.U = cfg.resolved_U();
    DirectStats st;
    r.direct = direct_sum(cfg, &st);
    r.main_term = main_term(cfg);
    r.m0_term = m0_term(cfg);
    r.ratio = r.direct.real() / r.main_term;
    double ad = std::abs(r.direct);
    r.imag_fraction = ad > 0.0 ? std::abs(r.direct.imag()) / ad : 0.0;
    r.error_budget = st.error_budget;
    r.n_count = st.n_count;
    r.m_count = st.m_count;
    auto t1 = std::chrono::steady_clock::now();
    r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return r;
}

std::string csv_header() {
    return "j,X,Y,U,S_re,S_im,main_term,m0_term,ratio,imag_fraction,n_count,m_count,elapsed_ms";
}

namespace {
std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}
} // namespace

std::string csv_row(const SumReport& r) {
    std::string out;
    out += std::to_string(r.j);
    out += ',';
    out += fmt_double(r.X);
    out += ',';
    out += fmt_double(r.Y);
    out += ',';
    out += fmt_double(r.U);
    out += ',';
    out += fmt_double(r.direct.real());
    out += ',';
    out += fmt_double(r.direct.imag());
    out += ',';
    out += fmt_double(r.main_term);
    out += ',';
    out += fmt_double(r.m0_term);
    out += ',';
    out += fmt_double(r.ratio);
    out += ',';
    out += fmt_double(r.imag_fraction);
    out += ',';
    out += std::to_string(r.n_count);
    out += ',';
    out += std::to_string(r.m_count);
    out += ',';
    out += fmt_double(r.elapsed_ms);
    return out;
}

std::string config_echo_csv(const SumConfig& cfg) {
    std::string out = "# config: j=" + std::to_string(cfg.j);
    out += " X=" + fmt_double(cfg.X);
    out += " Y=" + fmt_double(cfg.Y);
    out += " U=" + fmt_double(cfg.resolved_U());
    out += " quad_tol=" + fmt_double(cfg.quad_tol);
    out += " threads=" + std::to_string(cfg.resolved_threads());
    out += " truncation_exponent=" + std::to_string(cfg.truncation_exponent);
    return out;
}

std::string report_json(const SumConfig& cfg, const SumReport& r) {
    auto num = [](double v) { return fmt_double(v); };
    std::string out = "{\n";
    out += "  \"config\": {\"j\": " + std::to_string(cfg.j);
    out += ", \"X\": " + num(cfg.X);
    out += ", \"Y\": " + num(cfg.Y);
    out += ", \"U\": " + num(cfg.resolved_U());
    out += ", \"quad_tol\": " + num(cfg.quad_tol);
    out += ", \"threads\": " + std::to_string(cfg.resolved_threads());
    out += ", \"truncation_exponent\": " + std::to_string(cfg.truncation_exponent);
    out += "},\n";
    out += "  \"j\": " + std::to_string(r.j);
    out += ", \"X\": " + num(r.X);
    out += ", \"Y\": " + num(r.Y);
    out += ", \"U\": " + num(r.U);
    out += ",\n  \"S_re\": " + num(r.direct.real());
    out += ", \"S_im\": " + num(r.direct.imag());
    out += ", \"main_term\": " + num(r.main_term);
    out += ", \"m0_term\": " + num(r.m0_term);
    out += ",\n  \"ratio\": " + num(r.ratio);
    out += ", \"imag_fraction\": " + num(r.imag_fraction);
    out += ", \"n_count\": " + std::to_string(r.n_count);
    out += ", \"m_count\": " + std::to_string(r.m_count);
    out += ", \"elapsed_ms\": " + num(r.elapsed_ms);
    out += "\n}";
    return out;
}

} // namespace hecke
