#include "zescat/smatrix.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "zescat/closedform.hpp"
#include "zescat/errors.hpp"
#include "zescat/phase.hpp"

namespace zescat {

namespace {

constexpr long double pi_l = std::numbers::pi_v<long double>;

// exp(i pi x). Split off the nearest multiple of pi/2 and rotate by it exactly, so
// quarter-turn phases give exact 0, +-1 components.
std::complex<double> unit_pi(long double x) {
    x = std::remainder(x, 2.0L);
    const long double quarters = std::nearbyint(2.0L * x);
    const long double rest = pi_l * (x - 0.5L * quarters);
    const double c = static_cast<double>(std::cos(rest));
    const double s = static_cast<double>(std::sin(rest));
    switch (static_cast<int>(quarters) & 3) {
        case 0: return {c, s};
        case 1: return {-s, c};
        case 2: return {-c, -s};
        default: return {s, -c};
    }
}

// Phases are accumulated in extended precision and reduced once; for l ~ 100 and
// mu near 2 the raw angle is several thousand radians.
// Angle in units of pi.
long double multiplier_turns(const PotentialParams& params, int l) {
    const long double lb = laplace_beltrami_eigenvalue(params.d, l);
    const long double shift = 0.5L * (params.d - 2);
    const long double nu = std::sqrt(lb + shift * shift);
    const long double mu = params.mu;
    return -mu / (2.0L - mu) * nu;
}

}  // namespace

std::complex<double> eigenvalue_via_phase(const Channel& ch, double phase_D) {
    const long double turns =
        2.0L * static_cast<long double>(phase_D) / pi_l + 0.5L * (ch.params.d - 3 + 2 * ch.l);
    return unit_pi(turns);
}

std::complex<double> eigenvalue_via_multiplier(const PotentialParams& params, int l) {
    return unit_pi(multiplier_turns(params, l));
}

double multiplier_phase(const PotentialParams& params, int l) {
    return static_cast<double>(wrap_phase(pi_l * multiplier_turns(params, l)));
}

SMatrixEigenvalue smatrix_eigenvalue(const PotentialParams& params, int l) {
    const Channel ch = make_channel(params, l);
    SMatrixEigenvalue ev;
    ev.l = l;
    ev.via_multiplier = eigenvalue_via_multiplier(params, l);
    ev.via_phase = eigenvalue_via_phase(ch, closed_form_phase(ch));
    ev.value = ev.via_multiplier;
    ev.arg = multiplier_phase(params, l);
    return ev;
}

IdentityReport verify_theorem_identity(const PotentialParams& params, int max_l) {
    validate(params);
    if (max_l < 0) throw DomainError("verify_theorem_identity: max order must be nonnegative");
    IdentityReport report;
    report.params = params;
    report.rows.reserve(static_cast<std::size_t>(max_l) + 1);
    for (int l = 0; l <= max_l; ++l) {
        const Channel ch = make_channel(params, l);
        IdentityRow row;
        row.l = l;
        row.via_phase = eigenvalue_via_phase(ch, closed_form_phase(ch));
        row.via_multiplier = eigenvalue_via_multiplier(params, l);
        row.difference = std::abs(row.via_phase - row.via_multiplier);
        row.modulus_error = std::max(std::abs(std::abs(row.via_phase) - 1.0),
                                     std::abs(std::abs(row.via_multiplier) - 1.0));
        report.max_difference = std::max(report.max_difference, row.difference);
        report.max_modulus_error = std::max(report.max_modulus_error, row.modulus_error);
        report.rows.push_back(row);
    }
    return report;
}

void HarmonicCoefficients::validate() const {
    if (d < 2) throw DomainError("HarmonicCoefficients: d must be >= 2");
    if (max_l < 0) throw DomainError("HarmonicCoefficients: max order must be nonnegative");
    for (const auto& e : entries) {
        if (e.l < 0 || e.l > max_l)
            throw DomainError("HarmonicCoefficients: order " + std::to_string(e.l) +
                              " outside [0, " + std::to_string(max_l) + "]");
        if (e.m >= harmonic_multiplicity(d, e.l))
            throw DomainError("HarmonicCoefficients: multiplicity index " + std::to_string(e.m) +
                              " out of range for order " + std::to_string(e.l));
    }
}

double HarmonicCoefficients::norm_squared() const {
    double sum = 0.0;
    for (const auto& e : entries) sum += std::norm(e.coefficient);
    return sum;
}

HarmonicCoefficients apply_s0(const PotentialParams& params, const HarmonicCoefficients& coeffs) {
    validate(params);
    if (coeffs.d != params.d)
        throw DomainError("apply_s0: coefficient dimension " + std::to_string(coeffs.d) +
                          " does not match d = " + std::to_string(params.d));
    coeffs.validate();

    std::vector<std::complex<double>> eigen(static_cast<std::size_t>(coeffs.max_l) + 1);
    for (int l = 0; l <= coeffs.max_l; ++l) eigen[l] = eigenvalue_via_multiplier(params, l);

    HarmonicCoefficients out = coeffs;
    const auto n = static_cast<std::ptrdiff_t>(out.entries.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        auto& e = out.entries[i];
        e.coefficient *= eigen[e.l];
    }
    return out;
}

}  // namespace zescat
