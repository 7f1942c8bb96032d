#pragma once

#include <cstdint>

namespace zescat {

// The operator -Laplacian - alpha |x|^(-mu) in dimension d.
struct PotentialParams {
    int d = 3;
    double mu = 1.0;
    double alpha = 1.0;

    friend bool operator==(const PotentialParams&, const PotentialParams&) = default;
};

// Throws ValidationError listing every violated constraint:
// d >= 2, mu in (0, 2) and at least 1e-9 away from either end, alpha > 0 and finite.
void validate(const PotentialParams& params);

// One angular-momentum sector of the radial problem.
struct Channel {
    PotentialParams params;
    int l = 0;
    double nu = 0.0;        // l + (d-2)/2
    double nu_tilde = 0.0;  // Bessel order 2 nu / (2 - mu)
    double b = 0.0;         // frequency 2 sqrt(alpha) / (2 - mu)
    double sigma = 0.0;     // exponent (2 - mu)/2 of the oscillation variable b r^sigma

    // 2 - mu, the exponent step of the Frobenius series.
    double tau() const noexcept { return 2.0 - params.mu; }
};

Channel make_channel(const PotentialParams& params, int l);

// Builds a channel without validating params. Test hook for limiting cases
// such as alpha = 0 that the public constructor rejects.
Channel make_channel_unchecked(const PotentialParams& params, int l);

// l (l + d - 2), the eigenvalue of minus the Laplace-Beltrami operator on S^(d-1).
double laplace_beltrami_eigenvalue(int d, int l);

// Dimension of the space of order-l spherical harmonics on S^(d-1).
std::uint64_t harmonic_multiplicity(int d, int l);

}  // namespace zescat
