#pragma once

// Independent numerical route to the regular solution and its tail (C, D):
// Frobenius seed at the singular origin, adaptive integration of
//   -f'' + ((nu^2 - 1/4)/r^2 - alpha/r^mu) f = 0
// in r, and a known-frequency least-squares fit of the oscillatory tail.
// Nothing here calls into closedform.

#include <cstddef>
#include <vector>

#include "zescat/channels.hpp"
#include "zescat/closedform.hpp"

namespace zescat::numeric {

// Truncated series f(r) = r^(nu+1/2) sum_k c_k r^(k(2-mu)), c_0 = 1.
struct FrobeniusSeed {
    std::vector<double> coefficients;
    int truncation_order = 0;
    double match_radius = 0.0;
    double value = 0.0;       // f(r0)
    double derivative = 0.0;  // f'(r0)

    // Evaluates the truncated series (and optionally its derivative) at r.
    double evaluate(const Channel& ch, double r) const;
    double evaluate_derivative(const Channel& ch, double r) const;
};

// min(1e-2, (0.1/alpha)^(1/(2-mu)))
double default_match_radius(const Channel& ch);

// Builds the series up to the first order K with |c_K r0^(K(2-mu))| <= tol.
// Throws DomainError for r0 <= 0 or alpha r0^(2-mu) >= 1/2, FitError if K > 200 is needed.
FrobeniusSeed frobenius_seed(const Channel& ch, double r0, double tol = 1e-16);

struct IntegratorOptions {
    double rtol = 1e-12;
    double atol = 1e-14;
    // Samples are recorded only for r >= sample_from (0 records the whole path).
    double sample_from = 0.0;
    // Upper bound on the step as a fraction of the local oscillation period.
    int points_per_period = 40;
    std::size_t max_steps = 50'000'000;
};

struct IntegratorStats {
    std::size_t steps = 0;
    std::size_t rejected = 0;
    double max_error_estimate = 0.0;  // largest accepted normalised local error
};

struct RadialSolutionSample {
    std::vector<double> r;
    std::vector<double> f;
    std::vector<double> fp;
    IntegratorStats stats;
};

// Dormand-Prince 5(4) with PI step control, started from the seed at its match radius.
// Throws IntegrationError on step-size underflow or a non-representable state.
RadialSolutionSample integrate_radial(const Channel& ch, const FrobeniusSeed& seed, double r_max,
                                      const IntegratorOptions& options);
RadialSolutionSample integrate_radial(const Channel& ch, const FrobeniusSeed& seed, double r_max,
                                      double tol);

struct FitWindow {
    double r_lo = 0.0;
    double r_hi = 0.0;
};

struct FitOptions {
    // Number of 1/s correction orders multiplying each of sin and cos.
    // 0 gives the bare two-column design A sin(theta) + B cos(theta).
    int correction_order = 8;
    // Reject fits whose residual rms exceeds this fraction of the amplitude.
    double tolerance_rel = 1e-5;
    // Lower bound on b r_lo^sigma.
    double min_oscillation_variable = 50.0;
};

struct TailFit {
    PhaseAmplitude fit;
    double residual_rms = 0.0;
    FitWindow window;
    std::size_t points = 0;
    double periods = 0.0;
    double condition = 0.0;  // sqrt of the Cholesky pivot ratio of the normal equations
};

// Least-squares fit of y = r^(-mu/4) f against sinusoids in theta = b r^sigma.
// Throws DomainError if the window is outside the samples or starts before
// b r_lo^sigma = min_oscillation_variable, FitError for a degenerate window,
// rank deficiency, or a residual above tolerance.
TailFit extract_phase_amplitude(const Channel& ch, const RadialSolutionSample& sample,
                                FitWindow window, const FitOptions& options = {});

// r such that b r^sigma = s.
double radius_at_oscillation_variable(const Channel& ch, double s);

struct PipelineOptions {
    IntegratorOptions integrator;
    FitOptions fit;
    double series_tol = 1e-16;
    // Window start is max(min_oscillation_variable, window_scale * nu~^2) in s.
    double window_scale = 0.5;
    // Window end is max(min_end_variable, window_span * start) in s.
    double window_span = 4.0;
    double min_end_variable = 300.0;
};

FitWindow default_window(const Channel& ch, const PipelineOptions& options = {});

struct PipelineResult {
    FrobeniusSeed seed;
    TailFit tail;
    IntegratorStats stats;
    double r_max = 0.0;
};

// Seed, integrate to the end of the default window, fit.
PipelineResult run_pipeline(const Channel& ch, const PipelineOptions& options = {});

}  // namespace zescat::numeric
