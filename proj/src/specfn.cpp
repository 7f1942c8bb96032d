#include "zescat/specfn.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "zescat/errors.hpp"

namespace zescat::specfn {

namespace {

constexpr double pi = std::numbers::pi;

// Lanczos approximation, g = 7, nine terms.
constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_coef = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_sum(double z) {
    // z = x - 1
    double sum = lanczos_coef[0];
    for (std::size_t i = 1; i < lanczos_coef.size(); ++i) sum += lanczos_coef[i] / (z + double(i));
    return sum;
}

void check_gamma_arg(double x) {
    if (!std::isfinite(x) || x <= 0.0)
        throw DomainError("gamma: argument must be positive and finite, got " + std::to_string(x));
}

// Power series sum_k (-1)^k (s/2)^(2k) / (k! (nu+1)_k). Returns the bracketed sum,
// i.e. Gamma(nu+1) (2/s)^nu J_nu(s).
double normalized_series(double nu, double s) {
    const double q = 0.25 * s * s;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= 200; ++k) {
        term *= -q / (double(k) * (nu + double(k)));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

bool series_regime(double nu, double s) { return 0.25 * s * s <= nu + 1.0; }

// (s/2)^nu / Gamma(nu+1), evaluated in logs.
double series_prefactor(double nu, double s) {
    if (nu == 0.0) return 1.0;
    return std::exp(nu * std::log(0.5 * s) - log_gamma(nu + 1.0));
}

// J_nu(x) for x >= 2 by Steed's method: CF1 for J'/J at nu, downward
// recurrence to an order mu with |mu| small relative to x, CF2 for
// (J' + iY')/(J + iY) at mu, then the Wronskian fixes the normalisation.
double bessel_j_steed(double nu, double x) {
    constexpr double eps = 1e-16;
    constexpr double fpmin = std::numeric_limits<double>::min() / eps;
    constexpr double rescale = 1e-200;
    const int maxit = 20000 + static_cast<int>(4.0 * x);

    const int nl = std::max(0, static_cast<int>(nu - x + 1.5));
    const double xmu = nu - nl;
    const double xi = 1.0 / x;
    const double xi2 = 2.0 * xi;
    const double w = xi2 / pi;

    // CF1
    int isign = 1;
    double h = nu * xi;
    if (h < fpmin) h = fpmin;
    double b = xi2 * nu;
    double d = 0.0;
    double c = h;
    int i = 1;
    for (; i <= maxit; ++i) {
        b += xi2;
        d = b - d;
        if (std::abs(d) < fpmin) d = fpmin;
        c = b - 1.0 / c;
        if (std::abs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = c * d;
        h *= del;
        if (d < 0.0) isign = -isign;
        if (std::abs(del - 1.0) < eps) break;
    }
    if (i > maxit) throw FitError("bessel_j: continued fraction CF1 did not converge");

    double rjl = isign;
    double rjpl = h * rjl;
    double rjl1 = rjl;
    double fact = nu * xi;
    for (int l = nl; l >= 1; --l) {
        const double rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
        if (std::abs(rjl) > 1e200) {
            rjl *= rescale;
            rjpl *= rescale;
            rjl1 *= rescale;
        }
    }
    if (rjl == 0.0) rjl = eps;
    const double f = rjpl / rjl;

    // CF2
    double a = 0.25 - xmu * xmu;
    double p = -0.5 * xi;
    double q = 1.0;
    const double br = 2.0 * x;
    double bi = 2.0;
    fact = a * xi / (p * p + q * q);
    double cr = br + q * fact;
    double ci = bi + p * fact;
    double den = br * br + bi * bi;
    double dr = br / den;
    double di = -bi / den;
    double dlr = cr * dr - ci * di;
    double dli = cr * di + ci * dr;
    double temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    for (i = 2; i <= maxit; ++i) {
        a += 2.0 * (i - 1);
        bi += 2.0;
        dr = a * dr + br;
        di = a * di + bi;
        if (std::abs(dr) + std::abs(di) < fpmin) dr = fpmin;
        fact = a / (cr * cr + ci * ci);
        cr = br + cr * fact;
        ci = bi - ci * fact;
        if (std::abs(cr) + std::abs(ci) < fpmin) cr = fpmin;
        den = dr * dr + di * di;
        dr /= den;
        di = -di / den;
        dlr = cr * dr - ci * di;
        dli = cr * di + ci * dr;
        temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        if (std::abs(dlr - 1.0) + std::abs(dli) < eps) break;
    }
    if (i > maxit) throw FitError("bessel_j: continued fraction CF2 did not converge");

    const double gam = (p - f) / q;
    double rjmu = std::sqrt(w / ((p - f) * gam + q));
    rjmu = std::copysign(rjmu, rjl);
    return rjl1 * (rjmu / rjl);
}

bool hankel_regime(double nu, double s) { return s >= std::max(25.0, 0.25 * nu * nu); }

// Hankel expansion sqrt(2/(pi s)) (P cos chi - Q sin chi), chi = s - (nu/2 + 1/4) pi.
double bessel_j_hankel(double nu, double s) {
    const double four_nu2 = 4.0 * nu * nu;
    double p = 1.0;
    double q = 0.0;
    double term = 1.0;
    for (int k = 1; k <= 400; ++k) {
        const double odd = 2.0 * k - 1.0;
        const double next = term * (four_nu2 - odd * odd) / (8.0 * k * s);
        if (std::abs(next) > std::abs(term) && odd * odd > four_nu2) break;
        term = next;
        // a_k enters with sign (-1)^(k/2) in P (k even) and (-1)^((k-1)/2) in Q (k odd).
        const bool negative = (k / 2) % 2 == 1;
        const double signed_term = negative ? -term : term;
        if (k % 2 == 0)
            p += signed_term;
        else
            q += signed_term;
        if (std::abs(term) < 1e-17) break;
    }
    const double phase = std::remainder(pi * (0.5 * nu + 0.25), 2.0 * pi);
    const double cs = std::cos(s);
    const double sn = std::sin(s);
    const double cp = std::cos(phase);
    const double sp = std::sin(phase);
    const double cos_chi = cs * cp + sn * sp;
    const double sin_chi = sn * cp - cs * sp;
    return std::sqrt(2.0 / (pi * s)) * (p * cos_chi - q * sin_chi);
}

void check_bessel_arg(double s, const char* who) {
    if (!std::isfinite(s) || s < 0.0)
        throw DomainError(std::string(who) + ": argument must be finite and nonnegative, got " +
                          std::to_string(s));
}

}  // namespace

BesselOrder::BesselOrder(double nu) : nu_(nu) {
    if (!std::isfinite(nu) || nu < 0.0)
        throw DomainError("Bessel order must be finite and nonnegative, got " + std::to_string(nu));
}

double gamma(double x) {
    check_gamma_arg(x);
    if (x < 0.5) return pi / (std::sin(pi * x) * gamma(1.0 - x));
    if (x > 171.6) throw OverflowError("gamma: result overflows for x = " + std::to_string(x));
    const double z = x - 1.0;
    const double t = z + lanczos_g + 0.5;
    // t^(z+1/2) alone overflows before Gamma does; split it around exp(-t).
    const double half_power = std::pow(t, 0.5 * (z + 0.5));
    return std::sqrt(2.0 * pi) * half_power * (half_power * std::exp(-t)) * lanczos_sum(z);
}

double log_gamma(double x) {
    check_gamma_arg(x);
    if (x < 0.5) return std::log(pi / std::sin(pi * x)) - log_gamma(1.0 - x);
    const double z = x - 1.0;
    const double t = z + lanczos_g + 0.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(lanczos_sum(z));
}

double bessel_j(BesselOrder order, double s) {
    check_bessel_arg(s, "bessel_j");
    const double nu = order.value();
    if (s == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    if (series_regime(nu, s)) return series_prefactor(nu, s) * normalized_series(nu, s);
    if (hankel_regime(nu, s)) return bessel_j_hankel(nu, s);
    return bessel_j_steed(nu, s);
}

double bessel_j(double nu, double s) { return bessel_j(BesselOrder(nu), s); }

double bessel_j_normalized(double nu, double s) {
    const BesselOrder order(nu);
    check_bessel_arg(s, "bessel_j_normalized");
    if (s == 0.0) return 1.0;
    if (series_regime(nu, s)) return normalized_series(nu, s);
    const double j = hankel_regime(nu, s) ? bessel_j_hankel(nu, s) : bessel_j_steed(nu, s);
    if (nu == 0.0) return j;
    return j * std::exp(log_gamma(nu + 1.0) + nu * std::log(2.0 / s));
}

double bessel_j_asymptotic(BesselOrder order, double s) {
    if (!std::isfinite(s) || s <= 0.0)
        throw DomainError("bessel_j_asymptotic: argument must be positive, got " + std::to_string(s));
    const double shift = pi * (0.5 * order.value() - 0.25);
    return std::sqrt(2.0 / (pi * s)) * std::sin(s - shift);
}

double bessel_j_asymptotic(double nu, double s) { return bessel_j_asymptotic(BesselOrder(nu), s); }

}  // namespace zescat::specfn
