#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "zescat/errors.hpp"
#include "zescat/specfn.hpp"

using namespace zescat;
using specfn::bessel_j;

namespace {
constexpr double pi = std::numbers::pi;
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("gamma at integers and one half") {
    CHECK(specfn::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(specfn::gamma(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    CHECK(specfn::gamma(0.5) == doctest::Approx(std::sqrt(pi)).epsilon(1e-14));
    double fact = 1.0;
    for (int n = 1; n <= 30; ++n) {
        CHECK(rel(specfn::gamma(n), fact) < 1e-13);
        fact *= n;
    }
}

TEST_CASE("gamma against boost on (0, 50]") {
    double worst = 0.0;
    for (int i = 1; i <= 5000; ++i) {
        const double x = 50.0 * i / 5000.0;
        worst = std::max(worst, rel(specfn::gamma(x), boost::math::tgamma(x)));
    }
    for (double x : {1e-8, 1e-4, 0.013, 0.37}) worst = std::max(worst, rel(specfn::gamma(x), boost::math::tgamma(x)));
    CHECK(worst < 1e-12);
}

TEST_CASE("gamma functional equation") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(1e-3, 40.0);
    for (int i = 0; i < 2000; ++i) {
        const double x = u(rng);
        CHECK(rel(specfn::gamma(x + 1.0), x * specfn::gamma(x)) < 1e-12);
    }
}

TEST_CASE("log_gamma matches log of gamma and extends past overflow") {
    for (double x : {0.1, 0.5, 1.0, 2.5, 10.0, 60.0, 170.0})
        CHECK(std::abs(specfn::log_gamma(x) - std::log(specfn::gamma(x))) < 1e-12 * std::max(1.0, std::abs(std::log(specfn::gamma(x)))));
    CHECK(rel(specfn::log_gamma(1000.0), boost::math::lgamma(1000.0)) < 1e-14);
    CHECK_THROWS_AS(specfn::gamma(200.0), OverflowError);
}

TEST_CASE("gamma domain errors") {
    CHECK_THROWS_AS(specfn::gamma(0.0), DomainError);
    CHECK_THROWS_AS(specfn::gamma(-1.5), DomainError);
    CHECK_THROWS_AS(specfn::gamma(std::nan("")), DomainError);
    CHECK_THROWS_AS(specfn::gamma(INFINITY), DomainError);
}

TEST_CASE("BesselOrder rejects negative and non-finite orders") {
    CHECK_THROWS_AS(specfn::BesselOrder{-0.1}, DomainError);
    CHECK_THROWS_AS(specfn::BesselOrder(std::nan("")), DomainError);
    CHECK_THROWS_AS(specfn::BesselOrder{INFINITY}, DomainError);
    CHECK(specfn::BesselOrder(2.5).value() == 2.5);
    CHECK_THROWS_AS(bessel_j(1.0, -1.0), DomainError);
}

TEST_CASE("bessel_j special values") {
    CHECK(bessel_j(0.0, 0.0) == 1.0);
    for (double nu : {0.1, 1.0, 3.7, 40.0}) CHECK(bessel_j(nu, 0.0) == 0.0);
    CHECK(bessel_j(0.5, pi / 2) == doctest::Approx(2.0 / pi).epsilon(1e-13));
    CHECK(std::abs(bessel_j(0.0, 2.404825557695773)) < 1e-9);
}

TEST_CASE("J_{1/2} closed form") {
    for (double s : {0.01, 0.5, 1.0, 3.0, 10.0, 33.3, 100.0, 1234.5}) {
        const double exact = std::sqrt(2.0 / (pi * s)) * std::sin(s);
        CHECK(std::abs(bessel_j(0.5, s) - exact) < 1e-12 * std::max(1.0, std::abs(exact)) + 1e-14);
    }
}

TEST_CASE("first zero of J_0 by bisection on the series oracle") {
    const double z = oracle::first_bessel_zero(0.0);
    CHECK(std::abs(z - 2.404825557695773) < 1e-9);
    CHECK(std::abs(bessel_j(0.0, z)) < 1e-12);
}

TEST_CASE("bessel_j agrees with the series oracle in the small-argument regime") {
    double worst = 0.0;
    for (double nu : {0.0, 0.25, 0.5, 1.0, 2.5, 7.0, 15.3})
        for (double s = 0.05; s <= 12.0; s += 0.173) {
            const double ref = oracle::series_bessel_j(nu, s);
            worst = std::max(worst, std::abs(bessel_j(nu, s) - ref) / std::max(std::abs(ref), 1e-3));
        }
    CHECK(worst < 1e-12);
}

TEST_CASE("bessel_j against boost over nu in [0, 60], s in [0, 1e4]") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unu(0.0, 60.0);
    std::uniform_real_distribution<double> ulogs(-3.0, 4.0);
    double worst_rel = 0.0;
    double worst_abs = 0.0;
    for (int i = 0; i < 20000; ++i) {
        const double nu = unu(rng);
        const double s = std::pow(10.0, ulogs(rng));
        const double ref = boost::math::cyl_bessel_j(nu, s);
        const double got = bessel_j(nu, s);
        // "Away from zeros": at least a tenth of the local envelope sqrt(2/(pi s)).
        // Closer to a zero only absolute accuracy is meaningful.
        const double envelope = s > nu ? std::sqrt(2.0 / (pi * s)) : std::abs(ref);
        if (std::abs(ref) >= 0.1 * envelope)
            worst_rel = std::max(worst_rel, std::abs(got - ref) / std::abs(ref));
        else
            worst_abs = std::max(worst_abs, std::abs(got - ref));
    }
    CHECK(worst_rel < 1e-10);
    CHECK(worst_abs < 1e-10);
}

TEST_CASE("Bessel three-term recurrence") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unu(1.0, 40.0);
    std::uniform_real_distribution<double> us(0.1, 100.0);
    int checked = 0;
    for (int i = 0; i < 5000; ++i) {
        const double nu = unu(rng);
        const double s = us(rng);
        const double lhs = bessel_j(nu - 1.0, s) + bessel_j(nu + 1.0, s);
        const double rhs = 2.0 * nu / s * bessel_j(nu, s);
        const double scale = std::max({std::abs(bessel_j(nu - 1.0, s)), std::abs(bessel_j(nu + 1.0, s)),
                                       std::abs(rhs)});
        if (scale < 1e-280) continue;
        CHECK(std::abs(lhs - rhs) <= 1e-8 * scale);
        ++checked;
    }
    CHECK(checked > 4000);
}

TEST_CASE("small-argument law J_nu(s) ~ (s/2)^nu / Gamma(nu+1)") {
    for (double nu : {0.0, 0.3, 1.0, 2.5, 10.0, 33.0, 60.0}) {
        const double s = 1e-4;
        const double ratio = bessel_j(nu, s) * specfn::gamma(nu + 1.0) * std::pow(2.0 / s, nu);
        if (std::isfinite(ratio) && bessel_j(nu, s) > 0.0) CHECK(std::abs(ratio - 1.0) < 1e-6);
        CHECK(std::abs(specfn::bessel_j_normalized(nu, s) - 1.0) < 1e-6);
    }
}

TEST_CASE("Bessel ODE residual by central differences") {
    const double h = 1e-3;
    for (double nu : {0.0, 0.5, 1.0, 3.3, 8.0}) {
        for (double s = 1.0; s <= 50.0; s += 0.37) {
            const double g = bessel_j(nu, s);
            const double gp = (bessel_j(nu, s + h) - bessel_j(nu, s - h)) / (2 * h);
            const double gpp = (bessel_j(nu, s + h) - 2 * g + bessel_j(nu, s - h)) / (h * h);
            const double residual = gpp + gp / s + (1.0 - nu * nu / (s * s)) * g;
            CHECK(std::abs(residual) <= 1e-5 * std::max(1.0, std::abs(g)));
        }
    }
}

TEST_CASE("leading asymptotic term") {
    using specfn::bessel_j_asymptotic;
    for (double s : {0.1, 1.0, 7.0, 250.0})
        CHECK(bessel_j_asymptotic(0.5, s) == doctest::Approx(std::sqrt(2.0 / (pi * s)) * std::sin(s)).epsilon(1e-14));
    CHECK(std::abs(bessel_j(0.0, 100.0) - bessel_j_asymptotic(0.0, 100.0)) < 2e-3);
    CHECK(bessel_j_asymptotic(0.0, pi / 4) == doctest::Approx(2.0 * std::sqrt(2.0) / pi).epsilon(1e-14));
    CHECK_THROWS_AS(bessel_j_asymptotic(1.0, 0.0), DomainError);
    // The error of the leading term is bounded by the next order, (4 nu^2 - 1)/(8 s) of the envelope.
    for (double s : {400.0, 1600.0, 6400.0}) {
        const double next = 15.0 / (8.0 * s) * std::sqrt(2.0 / (pi * s));
        CHECK(std::abs(bessel_j(2.0, s) - bessel_j_asymptotic(2.0, s)) <= 1.1 * next);
    }
}
