#include <algorithm>
#include <cmath>
#include <string>

#include "zescat/errors.hpp"
#include "zescat/numeric.hpp"

namespace zescat::numeric {

namespace {
constexpr int max_order = 200;
}

double default_match_radius(const Channel& ch) {
    return std::min(1e-2, std::pow(0.1 / ch.params.alpha, 1.0 / ch.tau()));
}

FrobeniusSeed frobenius_seed(const Channel& ch, double r0, double tol) {
    if (!std::isfinite(r0) || r0 <= 0.0)
        throw DomainError("frobenius_seed: match radius must be positive, got " + std::to_string(r0));
    if (!(tol > 0.0)) throw DomainError("frobenius_seed: tolerance must be positive");
    const double tau = ch.tau();
    const double alpha = ch.params.alpha;
    const double x = std::pow(r0, tau);  // r0^(2-mu)
    if (alpha * x >= 0.5)
        throw DomainError("frobenius_seed: alpha r0^(2-mu) must be below 1/2 for fast convergence");

    FrobeniusSeed seed;
    seed.match_radius = r0;
    seed.coefficients.push_back(1.0);
    double c = 1.0;
    double xk = 1.0;
    int k = 0;
    while (true) {
        if (std::abs(c * xk) <= tol) break;
        if (k == max_order)
            throw FitError("frobenius_seed: series did not reach tolerance by order 200");
        ++k;
        const double kt = k * tau;
        c = -alpha * c / (kt * (kt + 2.0 * ch.nu));
        xk *= x;
        seed.coefficients.push_back(c);
    }
    seed.truncation_order = k;
    seed.value = seed.evaluate(ch, r0);
    seed.derivative = seed.evaluate_derivative(ch, r0);
    return seed;
}

double FrobeniusSeed::evaluate(const Channel& ch, double r) const {
    const double x = std::pow(r, ch.tau());
    // Horner from the highest order.
    double sum = 0.0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) sum = sum * x + *it;
    return std::pow(r, ch.nu + 0.5) * sum;
}

double FrobeniusSeed::evaluate_derivative(const Channel& ch, double r) const {
    const double tau = ch.tau();
    const double x = std::pow(r, tau);
    double sum = 0.0;
    for (int k = static_cast<int>(coefficients.size()) - 1; k >= 0; --k)
        sum = sum * x + coefficients[k] * (ch.nu + 0.5 + k * tau);
    return std::pow(r, ch.nu - 0.5) * sum;
}

}  // namespace zescat::numeric
