#pragma once

// The headline computations: the double character sums S_j(X,Y), their
// closed-form main-term predictor, the diagonal term M_{0,j}, two-sided
// Poisson identity checks, and the truncated L-function factorization
// check for the quadratic Gauss-sum Dirichlet series.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include "hecke/gauss_sums.hpp"
#include "hecke/lattice.hpp"
#include "hecke/weights.hpp"
#include "hecke/zeta.hpp"

namespace hecke {

struct SumConfig {
    int j = 2;                    // 2, 4 (Z[i]) or 3 (Z[omega])
    double X = 100.0;
    double Y = 100.0;
    double U = 0.0;               // 0 -> default (X/Y)^{1/2}, floored at 2
    double quad_tol = 1e-8;
    int threads = 0;              // 0 -> machine parallelism
    int truncation_exponent = 12; // max envelope exponent for certified tails (>= 6)

    static SumConfig make(int j, double X, double Y);
    double resolved_U() const;
    int resolved_threads() const;   // HECKE_THREADS env overrides
    Field field() const { return j == 3 ? Field::eisenstein : Field::gauss; }
    void validate() const;
};

struct SumReport {
    int j = 2;
    double X = 0.0, Y = 0.0, U = 0.0;
    std::complex<double> direct{0.0, 0.0};
    double main_term = 0.0;
    double m0_term = 0.0;
    double ratio = 0.0;           // Re(direct)/main_term
    double imag_fraction = 0.0;   // |Im(direct)|/|direct|
    double error_budget = 0.0;
    std::int64_t n_count = 0;
    std::int64_t m_count = 0;
    double elapsed_ms = 0.0;
};

struct DirectStats {
    std::int64_t n_count = 0;
    std::int64_t m_count = 0;
    double error_budget = 0.0;
};

// S_j(X,Y): deterministic double sum; parallel over n-ranges with a fixed
// reduction order, so the result is bit-identical across thread counts.
std::complex<double> direct_sum(const SumConfig& cfg, DirectStats* stats = nullptr);

// pi^2 X Y^{1/j} / (12 zeta_{Q(i)}(2))  for j = 2, 4
// pi^2 X Y^{1/3} / ( 9 zeta_{Q(w)}(2))  for j = 3
// The coefficients come from (1/2)*pi*(pi/6) resp. (2/3)*(2pi/sqrt3)*(pi/(4 sqrt3)):
// weight prefactor times Wt(0) limit times the density of phi(n)/N(n) over
// primary j-th powers.
double main_term(const SumConfig& cfg);

// M_{0,j} = (X Wt_i(0)/2) * sum over primary j-th powers of phi(n)/N(n) Phi(N(n)/Y)
// (prefactor 2X Wt_w(0)/3 for j=3).  Exact finite sum.
double m0_term(const SumConfig& cfg);

struct PoissonCheckResult {
    std::complex<double> lhs{0.0, 0.0};
    std::complex<double> rhs{0.0, 0.0};
    double delta = 0.0;
    std::int64_t truncation_norm = 0;   // k-sum kept through N(k) <= K
    double tail_bound = 0.0;            // certified bound on the dropped tail
    double error_budget = 0.0;
};

// Two-sided Poisson identity at one modulus:
//   lhs = sum_{(m,ram)=1} (m/n)_j W(N(m)/X)
//   rhs = X/(2N(n)) ((1+i)/n)_j sum_k (-1)^{N(k)} g_j(k,n) Wt_i(sqrt(N(k)X/(2N(n))))
// (cubic: prefactor X/(3N(n)), symbol ((1-w)/n)_3, factor w^{N(k)}+conj(w)^{N(k)},
// transform Wt_w(sqrt(N(k)X/(3N(n))))).
// A shared evaluator may be passed to reuse the transform grid across moduli.
template <class E>
PoissonCheckResult poisson_check(int j, E n, double X, double U,
                                 double quad_tol = 1e-8, int p_max = 12,
                                 TransformEvaluator* shared = nullptr);

struct FactorizationCheckResult {
    std::complex<double> lhs{0.0, 0.0};
    std::complex<double> rhs{0.0, 0.0};
    double delta = 0.0;
    GaussInt k1{1, 0};              // square-free part of i(1+i)k
    std::int64_t truncation = 0;
};

// Truncated check of G_2(1+s,k) = L(1/2+s, chi_{k1}) G(s,k) in the region of
// absolute convergence:
//   lhs  = sum_{n primary, N<=T} ((1+i)/n)_2 g_2(k,n) / N(n)^{1+s}
//   rhs  = [sum_{c primary, N<=T} chi_{k1}(c)/N(c)^{1/2+s}]
//          * prod_{pi | k} G_pi(s,k)
//          * prod_{pi not| k, N(pi)<=T} (1 - N(pi)^{-1-2s})
FactorizationCheckResult factorization_check(GaussInt k, std::complex<double> s,
                                             std::int64_t T);

SumReport compare(const SumConfig& cfg);

// CSV / JSON emission (exact frozen schema)
std::string csv_header();
std::string csv_row(const SumReport& r);
std::string config_echo_csv(const SumConfig& cfg);
std::string report_json(const SumConfig& cfg, const SumReport& r);

} // namespace hecke
