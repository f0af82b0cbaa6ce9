#include "hecke/weights.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hecke {

namespace {

constexpr double kPi = 3.14159265358979323846;

// 16-point Gauss-Legendre nodes/weights on [-1,1] (positive half; symmetric)
constexpr int kGL = 8;
constexpr double kGLx[kGL] = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
    0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499};
constexpr double kGLw[kGL] = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

template <class F>
double gl_panels(const F& f, double a, double b, int panels) {
    const double w = (b - a) / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * w;
        const double half = 0.5 * w;
        double s = 0.0;
        for (int k = 0; k < kGL; ++k)
            s += kGLw[k] * (f(mid + half * kGLx[k]) + f(mid - half * kGLx[k]));
        sum += s * half;
    }
    return sum;
}

} // namespace

double mollifier_sigma(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double fx = std::exp(-1.0 / x);
    const double f1 = std::exp(-1.0 / (1.0 - x));
    return fx / (fx + f1);
}

SmoothWeight::SmoothWeight(double U_) : U(U_) {
    if (U < 2.0) throw std::domain_error("hecke: weight sharpness U must be >= 2");
}

double SmoothWeight::operator()(double t) const {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    return mollifier_sigma(U * t) * mollifier_sigma(U * (1.0 - t));
}

TransformEvaluator::TransformEvaluator(Field field, double U, double quad_tol)
    : field_(field), weight_(U), quad_tol_(quad_tol) {
    if (quad_tol <= 0.0) throw std::domain_error("hecke: quad_tol must be positive");
    if (field == Field::gauss) {
        kernel_c_ = 2.0 * kPi;
        prefactor_ = 1.0;
    } else {
        kernel_c_ = 4.0 * kPi / std::sqrt(3.0);
        prefactor_ = 2.0 / std::sqrt(3.0);
    }
}

// prefactor * 2 pi * int_0^1 r W(r^2) J0(c t r) dr
double TransformEvaluator::radial_fixed(double t, int panels) const {
    const double ct = kernel_c_ * t;
    auto f = [&](double r) {
        return r * weight_(r * r) * (ct == 0.0 ? 1.0 : std::cyl_bessel_j(0.0, ct * r));
    };
    return prefactor_ * 2.0 * kPi * gl_panels(f, 0.0, 1.0, panels);
}

double TransformEvaluator::radial(double t) const {
    // panels resolve both the U-scale transition bands and the oscillation
    int panels = (int)std::ceil(std::max({8.0, 2.0 * std::sqrt(weight_.U), kernel_c_ * t / 10.0}));
    double prev = radial_fixed(t, panels);
    for (int iter = 0; iter < 6; ++iter) {
        panels *= 2;
        double cur = radial_fixed(t, panels);
        if (std::abs(cur - prev) <= 0.25 * quad_tol_) return cur;
        prev = cur;
    }
    throw std::runtime_error("hecke: radial quadrature did not converge to quad_tol");
}

double TransformEvaluator::operator()(double t) const {
    if (t < 0.0) throw std::domain_error("hecke: transform argument must be >= 0");
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(t);
        if (it != cache_.end()) return it->second;
    }
    double v = radial(t);
    std::lock_guard<std::mutex> lock(mu_);
    cache_.emplace(t, v);
    return v;
}

double TransformEvaluator::reference_2d(double t) const {
    // integrand cos(c t y) W(x^2 + y^2), even in x and in y: 4x the quarter
    const double ct = kernel_c_ * t;
    int panels = (int)std::ceil(std::max({8.0, 4.0 * t, 2.0 * weight_.U}));
    double prev = 0.0;
    bool have_prev = false;
    for (int iter = 0; iter < 6; ++iter) {
        auto fy = [&](double y) {
            auto fx = [&](double x) { return weight_(x * x + y * y); };
            return std::cos(ct * y) * gl_panels(fx, 0.0, 1.0, panels);
        };
        double cur = 4.0 * prefactor_ * gl_panels(fy, 0.0, 1.0, panels);
        if (have_prev && std::abs(cur - prev) <= 0.5 * quad_tol_) return cur;
        prev = cur;
        have_prev = true;
        panels *= 2;
    }
    throw std::runtime_error("hecke: 2-D quadrature did not converge to quad_tol");
}

// The grid is built through the separable form
//   Wt(t) = 4 pref int_0^1 cos(c t y) S(y) dy,   S(y) = int_0^1 W(x^2+y^2) dx,
// so the y-profile S is integrated once and every grid point costs only
// cosine evaluations on the same fixed Gauss-Legendre nodes.
void TransformEvaluator::ensure_grid(double t_max) {
    t_max = std::max(t_max, 8.0);
    if (grid_tmax_ >= t_max) return;
    const int n = (int)std::ceil(t_max / grid_h_) + 16;

    const double U = weight_.U;
    const int panels_y = (int)std::ceil(
        std::max({32.0, 2.0 * U, kernel_c_ * (n * grid_h_) / 8.0}));
    const int panels_x = (int)std::ceil(std::max(32.0, 2.0 * U));
    std::vector<double> ynodes, yw, S;
    ynodes.reserve((std::size_t)panels_y * 2 * kGL);
    yw.reserve(ynodes.capacity());
    const double wpan = 1.0 / panels_y;
    for (int p = 0; p < panels_y; ++p) {
        const double mid = (p + 0.5) * wpan, half = 0.5 * wpan;
        for (int k = 0; k < kGL; ++k) {
            ynodes.push_back(mid + half * kGLx[k]);
            yw.push_back(half * kGLw[k]);
            ynodes.push_back(mid - half * kGLx[k]);
            yw.push_back(half * kGLw[k]);
        }
    }
    S.resize(ynodes.size());
    for (std::size_t i = 0; i < ynodes.size(); ++i) {
        const double y = ynodes[i];
        if (y * y >= 1.0) {
            S[i] = 0.0;
            continue;
        }
        auto fx = [&](double x) { return weight_(x * x + y * y); };
        S[i] = gl_panels(fx, 0.0, 1.0, panels_x);
    }
    for (std::size_t i = 0; i < S.size(); ++i) S[i] *= yw[i];

    grid_.resize(n + 1);
    for (int i = 0; i <= n; ++i) {
        const double ct = kernel_c_ * (i * grid_h_);
        double acc = 0.0;
        for (std::size_t q = 0; q < ynodes.size(); ++q)
            acc += std::cos(ct * ynodes[q]) * S[q];
        grid_[i] = 4.0 * prefactor_ * acc;
    }
    grid_tmax_ = n * grid_h_ - 8.0 * grid_h_;
    // certified 12-point Lagrange bound: |Wt^(12)| <= pref*c^12*pi, times
    // max |prod (s-k)| / 12! = 5.51e-5 over the central interval, plus
    // quadrature noise in the grid values themselves
    const double M12 = prefactor_ * kPi * std::pow(kernel_c_, 12.0);
    grid_err_ = M12 * 5.51e-5 * std::pow(grid_h_, 12.0) + 1e-12;
}

double TransformEvaluator::grid_eval(double t) const {
    if (t < 0.0 || grid_tmax_ < 0.0 || t > grid_tmax_)
        throw std::logic_error("hecke: transform grid not built for this argument");
    const int n = (int)grid_.size() - 1;
    int i0 = (int)std::floor(t / grid_h_) - 5;    // 12 nodes i0..i0+11 centered
    i0 = std::max(0, std::min(i0, n - 11));
    const double s = t / grid_h_ - i0;
    // Lagrange on equally spaced nodes 0..11
    double out = 0.0;
    for (int k = 0; k < 12; ++k) {
        double lk = 1.0;
        for (int m = 0; m < 12; ++m) {
            if (m == k) continue;
            lk *= (s - m) / (k - m);
        }
        out += lk * grid_[i0 + k];
    }
    return out;
}

double TransformEvaluator::grid_error_bound() const { return grid_err_; }

void TransformEvaluator::fit_envelopes() const {
    const double U = weight_.U;
    std::vector<double> ts, vs;
    for (double x = 1.0; x <= 128.0 * 1.0001; x *= 1.11) {
        const double t = U * x;
        int panels = (int)std::ceil(std::max({16.0, 2.0 * std::sqrt(U), kernel_c_ * t / 8.0}));
        ts.push_back(t);
        vs.push_back(std::abs(radial_fixed(t, panels)) + 1e-15);
    }
    env_.clear();
    for (int p : {6, 8, 10, 12}) {
        double C = 0.0;
        for (std::size_t i = 0; i < ts.size(); ++i)
            C = std::max(C, vs[i] * std::pow(ts[i] / U, (double)p));
        env_.push_back({p, 8.0 * C});   // safety factor 8
    }
}

const std::vector<TransformEvaluator::EnvelopeTerm>& TransformEvaluator::envelopes() const {
    std::call_once(env_once_, [this] { fit_envelopes(); });
    return env_;
}

double TransformEvaluator::envelope(double t, int p_max) const {
    const double U = weight_.U;
    double best = 2.0 * kPi * prefactor_;   // |Wt| <= support area
    for (auto& e : envelopes()) {
        if (e.p > p_max) continue;
        if (t <= U) continue;
        best = std::min(best, e.C * std::pow(U / t, (double)e.p));
    }
    return best;
}

// Upper bound for sum over integer norms T > K of r(T) * envelope(alpha*sqrt(T)),
// where Sum_{T<=x} r(T) = density*x + E(x) with |E(x)| <= 12*sqrt(x).
// Partial summation against the decreasing envelope gives
//   density * integral_K^inf f + 3*12*sqrt(K)*f(K).
double TransformEvaluator::envelope_norm_tail(double alpha, double density, double K,
                                              int p_max) const {
    const double U = weight_.U;
    double best = -1.0;
    for (auto& e : envelopes()) {
        if (e.p > p_max || e.p < 4) continue;
        const double half = e.p / 2.0;
        if (alpha * std::sqrt(K) <= U * 1.5) continue;   // envelope not yet decaying here
        // integral of C (U/(alpha sqrt(T)))^p dT from K = C (U/alpha)^p K^{1-p/2}/(p/2-1)
        double val = e.C * std::pow(U / alpha, (double)e.p) *
                     std::pow(K, 1.0 - half) / (half - 1.0);
        double edge = e.C * std::pow(U / (alpha * std::sqrt(K)), (double)e.p);
        double bound = density * val + 36.0 * std::sqrt(K) * edge;
        if (best < 0.0 || bound < best) best = bound;
    }
    if (best < 0.0) best = 1e300;   // no valid envelope at this K yet
    return best;
}

} // namespace hecke
