#pragma once

// Smooth cutoffs and their Fourier-type transforms.
//
//   W(t) = sigma(U t) sigma(U (1-t)),  sigma(x) = f(x)/(f(x)+f(1-x)),
//   f(x) = exp(-1/x) for x > 0, else 0.
//
// W is supported in (0,1), identically 1 on [1/U, 1-1/U], with
// W^(j) = O(U^j).  The transforms
//
//   Wt_i(t)     = integral of cos(2 pi t y) W(x^2+y^2) dx dy
//   Wt_omega(t) = (2/sqrt 3) integral of cos(4 pi t y / sqrt 3) W(x^2+y^2)
//
// are evaluated by adaptive tensor Gauss-Legendre (reference path) and by
// the equivalent radial Bessel form  c0 * int_0^1 r W(r^2) J0(c t r) dr
// (fast path, must agree within 2*quad_tol).  A dense uniform grid with
// 12-point Lagrange interpolation serves bulk evaluation in Poisson sums,
// together with fitted decay envelopes C_p (U/t)^p used for certified
// truncation tails.

#include <map>
#include <mutex>
#include <vector>

#include <cstdint>

namespace hecke {

double mollifier_sigma(double x);

struct SmoothWeight {
    double U = 2.0;
    explicit SmoothWeight(double U_ = 2.0);
    double operator()(double t) const;
};

enum class Field { gauss, eisenstein };

class TransformEvaluator {
public:
    TransformEvaluator(Field field, double U, double quad_tol = 1e-8);

    Field field() const { return field_; }
    double U() const { return weight_.U; }
    double quad_tol() const { return quad_tol_; }
    const SmoothWeight& weight() const { return weight_; }

    // adaptive radial evaluation with caching; error <= quad_tol
    double operator()(double t) const;

    // reference 2-D tensor Gauss-Legendre with panel bisection
    double reference_2d(double t) const;

    // single uncached radial evaluation (no cache)
    double radial(double t) const;

    // ---- bulk path for Poisson sums ----
    void ensure_grid(double t_max);
    double grid_eval(double t) const;         // 12-point Lagrange on the grid
    double grid_error_bound() const;          // certified abs interpolation error
    double grid_max() const { return grid_tmax_; }

    // fitted decay envelopes: |Wt(t)| <= envelope(t) for t >= U
    struct EnvelopeTerm { int p; double C; };
    const std::vector<EnvelopeTerm>& envelopes() const;
    // min over fitted p <= p_max of C_p (U/t)^p
    double envelope(double t, int p_max = 12) const;
    // bound for sum over integer norms T > K of density*envelope(alpha*sqrt(T))
    double envelope_norm_tail(double alpha, double density, double K, int p_max = 12) const;

private:
    Field field_;
    SmoothWeight weight_;
    double quad_tol_;
    double kernel_c_;     // 2*pi resp. 4*pi/sqrt(3)
    double prefactor_;    // 1 resp. 2/sqrt(3)

    mutable std::mutex mu_;
    mutable std::map<double, double> cache_;

    std::vector<double> grid_;
    double grid_h_ = 1.0 / 64.0;
    double grid_tmax_ = -1.0;
    double grid_err_ = 0.0;

    mutable std::once_flag env_once_;
    mutable std::vector<EnvelopeTerm> env_;
    void fit_envelopes() const;

    double radial_fixed(double t, int panels) const;
};

} // namespace hecke
