#pragma once

// Real-order special functions: Gamma and Bessel J of the first kind.
//
// All functions are pure and thread-safe.

namespace zescat::specfn {

// Nonnegative, finite Bessel order.
class BesselOrder {
public:
    // Throws DomainError when nu is negative or not finite.
    explicit BesselOrder(double nu);

    double value() const noexcept { return nu_; }

private:
    double nu_;
};

// Gamma(x) for x > 0. Relative error below 1e-12 on (0, 50].
// Throws DomainError for x <= 0 or non-finite x, OverflowError past ~171.6.
double gamma(double x);

// log(Gamma(x)) for x > 0. Usable far beyond the range where gamma() overflows.
double log_gamma(double x);

// J_nu(s) for nu >= 0, s >= 0.
//
// Power series where it does not cancel ((s/2)^2 <= nu + 1), Steed's continued
// fraction method otherwise. Throws DomainError for s < 0 or non-finite s.
double bessel_j(BesselOrder order, double s);
double bessel_j(double nu, double s);

// Gamma(nu+1) (2/s)^nu J_nu(s): the Bessel function normalised to 1 at s = 0.
// Stays accurate for tiny s where J_nu itself underflows.
double bessel_j_normalized(double nu, double s);

// Leading large-s term sqrt(2/(pi s)) sin(s - pi nu/2 + pi/4). Diagnostic only.
// Throws DomainError for s <= 0.
double bessel_j_asymptotic(BesselOrder order, double s);
double bessel_j_asymptotic(double nu, double s);

}  // namespace zescat::specfn
