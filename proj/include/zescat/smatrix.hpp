#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "zescat/channels.hpp"

namespace zescat {

// S(0) restricted to the order-l harmonics: a unit-modulus scalar, recorded with
// both routes that produce it.
struct SMatrixEigenvalue {
    int l = 0;
    std::complex<double> value;           // equals via_multiplier
    std::complex<double> via_phase;       // exp(2i (D + pi/4 (d - 3 + 2l)))
    std::complex<double> via_multiplier;  // exp(-i pi mu/(2-mu) nu)
    double arg = 0.0;                     // argument of value in (-pi, pi]
};

// exp(i 2 (D + (pi/4)(d - 3 + 2l))) for a channel phase D.
std::complex<double> eigenvalue_via_phase(const Channel& ch, double phase_D);

// exp(-i pi mu/(2-mu) sqrt(l(l+d-2) + ((d-2)/2)^2)).
std::complex<double> eigenvalue_via_multiplier(const PotentialParams& params, int l);

// Argument of eigenvalue_via_multiplier, reduced into (-pi, pi].
double multiplier_phase(const PotentialParams& params, int l);

SMatrixEigenvalue smatrix_eigenvalue(const PotentialParams& params, int l);

struct IdentityRow {
    int l = 0;
    std::complex<double> via_phase;
    std::complex<double> via_multiplier;
    double difference = 0.0;  // |via_phase - via_multiplier|
    double modulus_error = 0.0;  // max over both routes of ||z| - 1|
};

struct IdentityReport {
    PotentialParams params;
    std::vector<IdentityRow> rows;
    double max_difference = 0.0;
    double max_modulus_error = 0.0;

    bool passes(double tol) const { return max_difference <= tol && max_modulus_error <= tol; }
};

// Both routes for every l <= max_l, route 1 fed by closed_form_phase.
IdentityReport verify_theorem_identity(const PotentialParams& params, int max_l);

struct HarmonicEntry {
    int l = 0;
    std::uint64_t m = 0;  // multiplicity index in [0, harmonic_multiplicity(d, l))
    std::complex<double> coefficient;

    friend bool operator==(const HarmonicEntry&, const HarmonicEntry&) = default;
};

// Coefficients of a function on S^(d-1) in a spherical-harmonic basis.
// For d = 2 the two order-l >= 1 entries are the cos/sin pair.
struct HarmonicCoefficients {
    int d = 3;
    int max_l = 0;
    std::vector<HarmonicEntry> entries;

    // Throws DomainError if an entry has l outside [0, max_l] or m outside its multiplicity.
    void validate() const;
    double norm_squared() const;
};

// Multiplies every order-l coefficient by eigenvalue_via_multiplier(params, l).
// Throws DomainError when coeffs.d != params.d.
HarmonicCoefficients apply_s0(const PotentialParams& params, const HarmonicCoefficients& coeffs);

}  // namespace zescat
