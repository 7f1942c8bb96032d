#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "zescat/errors.hpp"
#include "zescat/numeric.hpp"

namespace zescat::numeric {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192, a75 = -2187.0 / 6784,
                 a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

using State = std::array<double, 2>;  // (f, f')

struct RadialOde {
    double centrifugal;  // nu^2 - 1/4
    double alpha;
    double mu;

    double q(double r) const { return centrifugal / (r * r) - alpha * std::exp(-mu * std::log(r)); }

    State rhs(double r, const State& y) const { return {y[1], q(r) * y[0]}; }

    // Local wavenumber used to weigh f' against f in the error norm.
    double kappa(double r) const { return std::sqrt(std::abs(q(r))) + 1.0 / r; }
};

State axpy(const State& y, double h, std::initializer_list<std::pair<double, const State*>> terms) {
    State out = y;
    for (const auto& [w, k] : terms) {
        out[0] += h * w * (*k)[0];
        out[1] += h * w * (*k)[1];
    }
    return out;
}

}  // namespace

RadialSolutionSample integrate_radial(const Channel& ch, const FrobeniusSeed& seed, double r_max,
                                      double tol) {
    IntegratorOptions options;
    options.rtol = tol;
    options.atol = tol * 1e-2;
    return integrate_radial(ch, seed, r_max, options);
}

RadialSolutionSample integrate_radial(const Channel& ch, const FrobeniusSeed& seed, double r_max,
                                      const IntegratorOptions& options) {
    const double r0 = seed.match_radius;
    if (!(r_max > r0)) throw DomainError("integrate_radial: r_max must exceed the match radius");
    if (!(options.rtol > 0.0) || !(options.atol >= 0.0))
        throw DomainError("integrate_radial: tolerances must be positive");
    if (!std::isfinite(seed.value) || !std::isfinite(seed.derivative) ||
        (seed.value == 0.0 && seed.derivative == 0.0))
        throw IntegrationError("integrate_radial: seed state is zero or not finite", r0);

    const RadialOde ode{ch.nu * ch.nu - 0.25, ch.params.alpha, ch.params.mu};
    const double two_pi = 2.0 * std::numbers::pi;
    const double b_sigma = ch.b * ch.sigma;
    const double period_fraction = two_pi / (options.points_per_period * b_sigma);

    // The ODE is linear: carry y = 2^(-exponent) (f, f') with the energy of y near 1.
    // Rescaling by powers of two is exact.
    long exponent = 0;
    State y{seed.value, seed.derivative};
    auto energy = [&](double r, const State& s) { return std::hypot(s[0], s[1] / ode.kappa(r)); };
    auto renormalize = [&](double r) {
        const double e = energy(r, y);
        if (e >= 0.5 && e < 2.0) return;
        const int shift = std::ilogb(e);
        y[0] = std::ldexp(y[0], -shift);
        y[1] = std::ldexp(y[1], -shift);
        exponent += shift;
    };
    renormalize(r0);

    RadialSolutionSample out;
    auto record = [&](double r) {
        if (r < options.sample_from) return;
        if (exponent > 1100 || exponent < -1100)
            throw IntegrationError("integrate_radial: solution magnitude not representable", r);
        const double f = std::ldexp(y[0], static_cast<int>(exponent));
        const double fp = std::ldexp(y[1], static_cast<int>(exponent));
        if (!std::isfinite(f) || !std::isfinite(fp))
            throw IntegrationError("integrate_radial: non-finite state", r);
        out.r.push_back(r);
        out.f.push_back(f);
        out.fp.push_back(fp);
    };
    record(r0);

    double r = r0;
    double h = 1e-3 * r0;
    double err_prev = 1e-4;
    State k1 = ode.rhs(r, y);
    IntegratorStats& stats = out.stats;

    while (r < r_max) {
        if (stats.steps + stats.rejected >= options.max_steps)
            throw IntegrationError("integrate_radial: step budget exhausted", r);
        // Cap the step at a fraction of the local oscillation period 2 pi r^(1-sigma) / (b sigma).
        const double h_cap = period_fraction * std::pow(r, 1.0 - ch.sigma);
        h = std::min({h, h_cap, r_max - r});
        if (h < 1e-14 * r) throw IntegrationError("integrate_radial: step size underflow", r);

        const State k2 = ode.rhs(r + c2 * h, axpy(y, h, {{a21, &k1}}));
        const State k3 = ode.rhs(r + c3 * h, axpy(y, h, {{a31, &k1}, {a32, &k2}}));
        const State k4 = ode.rhs(r + c4 * h, axpy(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
        const State k5 =
            ode.rhs(r + c5 * h, axpy(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
        const State k6 = ode.rhs(
            r + h, axpy(y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
        const State y_new =
            axpy(y, h, {{a71, &k1}, {a73, &k3}, {a74, &k4}, {a75, &k5}, {a76, &k6}});
        const double r_new = (r_max - r - h <= 1e-15 * r_max) ? r_max : r + h;
        const State k7 = ode.rhs(r_new, y_new);

        State err{};
        for (int i = 0; i < 2; ++i)
            err[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                          e7 * k7[i]);
        const double kap = ode.kappa(r_new);
        const double scale =
            options.atol + options.rtol * std::max(energy(r, y), energy(r_new, y_new));
        const double err_norm = std::max(std::abs(err[0]), std::abs(err[1]) / kap) / scale;
        if (!std::isfinite(err_norm)) throw IntegrationError("integrate_radial: non-finite state", r);

        if (err_norm <= 1.0) {
            r = r_new;
            y = y_new;
            k1 = k7;
            ++stats.steps;
            stats.max_error_estimate = std::max(stats.max_error_estimate, err_norm);
            const long before = exponent;
            renormalize(r);
            if (exponent != before) k1 = ode.rhs(r, y);
            record(r);
            const double e = std::max(err_norm, 1e-10);
            const double factor = 0.9 * std::pow(e, -0.7 / 5.0) * std::pow(err_prev, 0.4 / 5.0);
            h *= std::clamp(factor, 0.2, 5.0);
            err_prev = e;
        } else {
            ++stats.rejected;
            h *= std::max(0.2, 0.9 * std::pow(err_norm, -0.2));
        }
    }
    return out;
}

}  // namespace zescat::numeric
