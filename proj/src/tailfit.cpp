#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "zescat/errors.hpp"
#include "zescat/numeric.hpp"
#include "zescat/phase.hpp"

namespace zescat::numeric {

namespace {

// Normal equations G x = g for a small number of columns, accumulated row by row.
class NormalEquations {
public:
    explicit NormalEquations(std::size_t cols) : n_(cols), gram_(cols * cols), rhs_(cols) {}

    void add_row(const std::vector<double>& row, double y) {
        for (std::size_t i = 0; i < n_; ++i) {
            rhs_[i] += row[i] * y;
            for (std::size_t j = 0; j <= i; ++j) gram_[i * n_ + j] += row[i] * row[j];
        }
    }

    struct Solution {
        std::vector<double> x;
        double condition = 0.0;  // sqrt of the Cholesky pivot ratio
    };

    // Cholesky solve. Throws FitError when a pivot collapses.
    Solution solve() const {
        std::vector<double> l(n_ * n_, 0.0);
        double pmax = 0.0;
        double pmin = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n_; ++j) {
            double d = gram_[j * n_ + j];
            for (std::size_t k = 0; k < j; ++k) d -= l[j * n_ + k] * l[j * n_ + k];
            if (!(d > 1e-13 * std::max(pmax, gram_[j * n_ + j])))
                throw FitError("tail fit: rank-deficient normal equations");
            pmax = std::max(pmax, d);
            pmin = std::min(pmin, d);
            const double ljj = std::sqrt(d);
            l[j * n_ + j] = ljj;
            for (std::size_t i = j + 1; i < n_; ++i) {
                double v = gram_[i * n_ + j];
                for (std::size_t k = 0; k < j; ++k) v -= l[i * n_ + k] * l[j * n_ + k];
                l[i * n_ + j] = v / ljj;
            }
        }
        Solution sol;
        sol.condition = std::sqrt(pmax / pmin);
        std::vector<double> z(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            double v = rhs_[i];
            for (std::size_t k = 0; k < i; ++k) v -= l[i * n_ + k] * z[k];
            z[i] = v / l[i * n_ + i];
        }
        sol.x.assign(n_, 0.0);
        for (std::size_t i = n_; i-- > 0;) {
            double v = z[i];
            for (std::size_t k = i + 1; k < n_; ++k) v -= l[k * n_ + i] * sol.x[k];
            sol.x[i] = v / l[i * n_ + i];
        }
        return sol;
    }

private:
    std::size_t n_;
    std::vector<double> gram_;  // lower triangle, row-major
    std::vector<double> rhs_;
};

}  // namespace

double radius_at_oscillation_variable(const Channel& ch, double s) {
    return std::pow(s / ch.b, 1.0 / ch.sigma);
}

TailFit extract_phase_amplitude(const Channel& ch, const RadialSolutionSample& sample,
                                FitWindow window, const FitOptions& options) {
    if (sample.r.empty()) throw DomainError("extract_phase_amplitude: empty sample");
    if (!(window.r_lo < window.r_hi) || window.r_lo < sample.r.front() ||
        window.r_hi > sample.r.back())
        throw DomainError("extract_phase_amplitude: window must lie inside the sample grid");
    const double s_lo = ch.b * std::pow(window.r_lo, ch.sigma);
    const double s_hi = ch.b * std::pow(window.r_hi, ch.sigma);
    if (s_lo < options.min_oscillation_variable * (1.0 - 1e-12))
        throw DomainError("extract_phase_amplitude: window starts before b r^sigma reaches " +
                          std::to_string(options.min_oscillation_variable));
    if (options.correction_order < 0) throw DomainError("extract_phase_amplitude: negative order");

    const auto first = std::lower_bound(sample.r.begin(), sample.r.end(), window.r_lo);
    const auto last = std::upper_bound(sample.r.begin(), sample.r.end(), window.r_hi);
    const auto i0 = static_cast<std::size_t>(first - sample.r.begin());
    const auto i1 = static_cast<std::size_t>(last - sample.r.begin());
    const std::size_t rows = i1 - i0;
    const double periods = (s_hi - s_lo) / (2.0 * std::numbers::pi);
    if (rows < 10 || periods < 2.0)
        throw FitError("extract_phase_amplitude: degenerate window (" + std::to_string(rows) +
                       " points, " + std::to_string(periods) + " periods)");

    // Basis T_j(t) sin(theta), T_j(t) cos(theta), with t the image of 1/theta on [-1, 1].
    const int order = options.correction_order;
    const std::size_t cols = 2 * static_cast<std::size_t>(order + 1);
    const double x_min = 1.0 / s_hi;
    const double x_max = 1.0 / s_lo;
    const double x_mid = 0.5 * (x_min + x_max);
    const double x_half = 0.5 * (x_max - x_min);
    auto chebyshev = [order](double t, std::vector<double>& out) {
        out[0] = 1.0;
        if (order >= 1) out[1] = t;
        for (int j = 2; j <= order; ++j) out[j] = 2.0 * t * out[j - 1] - out[j - 2];
    };

    const double quarter_mu = 0.25 * ch.params.mu;
    std::vector<double> tj(order + 1);
    std::vector<double> row(cols);
    auto design_row = [&](std::size_t i) {
        const double r = sample.r[i];
        const double theta = ch.b * std::pow(r, ch.sigma);
        chebyshev((1.0 / theta - x_mid) / x_half, tj);
        const double sn = std::sin(theta);
        const double cs = std::cos(theta);
        for (int j = 0; j <= order; ++j) {
            row[2 * j] = tj[j] * sn;
            row[2 * j + 1] = tj[j] * cs;
        }
        return std::pow(r, -quarter_mu) * sample.f[i];
    };

    NormalEquations normal(cols);
    for (std::size_t i = i0; i < i1; ++i) {
        const double y = design_row(i);
        normal.add_row(row, y);
    }
    const auto sol = normal.solve();

    // Second pass for the residual; the normal-equation identity cancels catastrophically.
    double rss = 0.0;
    for (std::size_t i = i0; i < i1; ++i) {
        double resid = design_row(i);
        for (std::size_t j = 0; j < cols; ++j) resid -= row[j] * sol.x[j];
        rss += resid * resid;
    }
    const double residual_rms = std::sqrt(rss / double(rows));

    // Extrapolate the coefficients to theta -> infinity (1/theta = 0).
    chebyshev(-x_mid / x_half, tj);
    double a = 0.0;
    double b = 0.0;
    for (int j = 0; j <= order; ++j) {
        a += tj[j] * sol.x[2 * j];
        b += tj[j] * sol.x[2 * j + 1];
    }

    TailFit out;
    out.fit.amplitude_C = std::hypot(a, b);
    out.fit.phase_D = wrap_phase(std::atan2(b, a));
    out.residual_rms = residual_rms;
    out.window = window;
    out.points = rows;
    out.periods = periods;
    out.condition = sol.condition;
    if (!(out.residual_rms <= options.tolerance_rel * out.fit.amplitude_C))
        throw FitError("extract_phase_amplitude: residual rms " + std::to_string(out.residual_rms) +
                       " exceeds tolerance");
    return out;
}

FitWindow default_window(const Channel& ch, const PipelineOptions& options) {
    const double s_lo = std::max(options.fit.min_oscillation_variable,
                                 options.window_scale * ch.nu_tilde * ch.nu_tilde);
    const double s_hi = std::max(options.min_end_variable, options.window_span * s_lo);
    return {radius_at_oscillation_variable(ch, s_lo), radius_at_oscillation_variable(ch, s_hi)};
}

PipelineResult run_pipeline(const Channel& ch, const PipelineOptions& options) {
    PipelineResult out;
    out.seed = frobenius_seed(ch, default_match_radius(ch), options.series_tol);
    const FitWindow window = default_window(ch, options);
    out.r_max = window.r_hi;
    IntegratorOptions integ = options.integrator;
    integ.sample_from = std::max(integ.sample_from, window.r_lo);
    const RadialSolutionSample sample = integrate_radial(ch, out.seed, out.r_max, integ);
    out.stats = sample.stats;
    // The first recorded radius may overshoot r_lo by a fraction of a step.
    FitWindow fit_window{std::max(window.r_lo, sample.r.front()), sample.r.back()};
    out.tail = extract_phase_amplitude(ch, sample, fit_window, options.fit);
    return out;
}

}  // namespace zescat::numeric
