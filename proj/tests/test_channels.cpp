#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "zescat/channels.hpp"
#include "zescat/errors.hpp"

using namespace zescat;

TEST_CASE("channel examples") {
    const Channel a = make_channel({2, 1.0, 1.0}, 0);
    CHECK(a.nu == 0.0);
    CHECK(a.nu_tilde == 0.0);
    CHECK(a.b == 2.0);

    const Channel b = make_channel({3, 1.0, 1.0}, 0);
    CHECK(b.nu == 0.5);
    CHECK(b.nu_tilde == 1.0);
    CHECK(b.b == 2.0);

    const Channel c = make_channel({3, 0.5, 4.0}, 2);
    CHECK(c.nu == 2.5);
    CHECK(c.nu_tilde == doctest::Approx(10.0 / 3.0).epsilon(1e-15));
    CHECK(c.b == doctest::Approx(8.0 / 3.0).epsilon(1e-15));
    CHECK(c.sigma == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(c.tau() == 1.5);
}

TEST_CASE("channel field invariants") {
    for (int d = 2; d <= 6; ++d)
        for (double mu : {0.1, 0.5, 1.0, 1.9})
            for (int l = 0; l <= 20; ++l) {
                const Channel ch = make_channel({d, mu, 2.0}, l);
                CHECK(ch.nu == l + 0.5 * (d - 2));
                CHECK(ch.nu_tilde == doctest::Approx(2 * ch.nu / (2 - mu)).epsilon(1e-15));
                CHECK(ch.b > 0.0);
                CHECK(ch.sigma > 0.0);
                CHECK(ch.sigma < 1.0);
            }
}

TEST_CASE("channel construction is bit-reproducible") {
    const PotentialParams p{4, 0.37, 2.9};
    for (int l = 0; l < 10; ++l) {
        const Channel a = make_channel(p, l);
        const Channel b = make_channel(p, l);
        CHECK(std::memcmp(&a.nu_tilde, &b.nu_tilde, sizeof(double)) == 0);
        CHECK(std::memcmp(&a.b, &b.b, sizeof(double)) == 0);
        CHECK(std::memcmp(&a.sigma, &b.sigma, sizeof(double)) == 0);
    }
}

TEST_CASE("validation lists every violation") {
    try {
        validate({1, 2.5, -1.0});
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.violations().size() == 3);
        const std::string msg = e.what();
        CHECK(msg.find("d >= 2") != std::string::npos);
        CHECK(msg.find("mu") != std::string::npos);
        CHECK(msg.find("alpha") != std::string::npos);
    }
    CHECK_THROWS_AS(validate({3, 0.0, 1.0}), ValidationError);
    CHECK_THROWS_AS(validate({3, 5e-10, 1.0}), ValidationError);
    CHECK_THROWS_AS(validate({3, 2.0 - 5e-10, 1.0}), ValidationError);
    CHECK_THROWS_AS(validate({3, 1.0, 0.0}), ValidationError);
    CHECK_THROWS_AS(validate({3, std::nan(""), 1.0}), ValidationError);
    CHECK_THROWS_AS(validate({3, 1.0, INFINITY}), ValidationError);
    CHECK_NOTHROW(validate({2, 1e-8, 1e-6}));
    CHECK_NOTHROW(validate({2, 1.99, 100.0}));
    CHECK_THROWS_AS(make_channel({3, 1.0, 1.0}, -1), DomainError);
    CHECK_THROWS_AS(make_channel({0, 1.0, 1.0}, 0), ValidationError);
}

TEST_CASE("Laplace-Beltrami eigenvalues") {
    CHECK(laplace_beltrami_eigenvalue(3, 0) == 0.0);
    CHECK(laplace_beltrami_eigenvalue(3, 1) == 2.0);
    CHECK(laplace_beltrami_eigenvalue(2, 5) == 25.0);
    CHECK_THROWS_AS(laplace_beltrami_eigenvalue(1, 0), DomainError);
    CHECK_THROWS_AS(laplace_beltrami_eigenvalue(3, -1), DomainError);
}

TEST_CASE("perfect-square identity sqrt(l(l+d-2) + ((d-2)/2)^2) = nu") {
    for (int d = 2; d <= 10; ++d)
        for (int l = 0; l <= 100; ++l) {
            const double shift = 0.5 * (d - 2);
            const double root = std::sqrt(laplace_beltrami_eigenvalue(d, l) + shift * shift);
            CHECK(std::abs(root - (l + shift)) <= 1e-12);
        }
}

TEST_CASE("harmonic multiplicities") {
    CHECK(harmonic_multiplicity(2, 0) == 1);
    CHECK(harmonic_multiplicity(2, 7) == 2);
    for (int l = 0; l < 10; ++l) CHECK(harmonic_multiplicity(3, l) == std::uint64_t(2 * l + 1));
    for (int l = 0; l < 10; ++l) CHECK(harmonic_multiplicity(4, l) == std::uint64_t((l + 1) * (l + 1)));
    // Multiplicities are differences of binomials: dim P_l(R^d) - dim P_(l-2)(R^d).
    CHECK(harmonic_multiplicity(5, 3) == 30);
    CHECK(harmonic_multiplicity(6, 2) == 20);
}
