#pragma once

#include "zescat/channels.hpp"

namespace zescat {

// Tail amplitude and phase of r^(-mu/4) f(r) ~ C sin(b r^sigma + D).
struct PhaseAmplitude {
    double amplitude_C = 0.0;
    double phase_D = 0.0;  // radians in (-pi, pi]
};

// The regular zero-energy solution
//   f(r) = Gamma(nu~+1) ((2-mu)/sqrt(alpha))^nu~ r^(1/2) J_nu~(b r^sigma),
// normalised so that r^(-nu-1/2) f(r) -> 1 as r -> 0.
// Throws DomainError for r <= 0, OverflowError if the Gamma prefactor is not representable.
double closed_form_f(const Channel& ch, double r);

// r^(-nu-1/2) f(r). Evaluated as Gamma(nu~+1) (2/s)^nu~ J_nu~(s), which avoids the
// under/overflow of the individual factors at small r.
double boundary_normalization(const Channel& ch, double r);

// log of Gamma(nu~+1) (2/b)^nu~, the normalisation of the Bessel factor.
double log_bessel_prefactor(const Channel& ch);

// C = pi^(-1/2) Gamma(nu~+1) ((2-mu)/sqrt(alpha))^(nu~+1/2).
double closed_form_amplitude(const Channel& ch);

// C via Gamma(nu~+1) (2/b)^nu~ sqrt(2/(pi b)): the Bessel prefactor times the
// large-s amplitude of J. Must agree with closed_form_amplitude.
double amplitude_from_prefactor(const Channel& ch);

// The same constant with (2 - nu) in place of (2 - mu). Kept only to show the
// two readings differ; NaN when 2 - nu < 0.
double literal_amplitude_reading(const Channel& ch);

// D = -pi nu/(2-mu) + pi/4, reduced into (-pi, pi].
double closed_form_phase(const Channel& ch);

// D = -pi (d-2+2l) / (2 (2-mu)) + pi/4, reduced; the dimension/order form of the same phase.
double closed_form_phase_dl(const Channel& ch);

PhaseAmplitude closed_form_phase_amplitude(const Channel& ch);

}  // namespace zescat
