#include "zescat/channels.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "zescat/errors.hpp"

namespace zescat {

namespace {

constexpr double mu_margin = 1e-9;

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

void validate(const PotentialParams& params) {
    std::vector<std::string> violations;
    if (params.d < 2) violations.push_back("dimension d must satisfy d >= 2 (got " + std::to_string(params.d) + ")");
    if (!std::isfinite(params.mu) || params.mu <= mu_margin || params.mu >= 2.0 - mu_margin)
        violations.push_back("exponent mu must satisfy 0 < mu < 2 (got " + num(params.mu) + ")");
    if (!std::isfinite(params.alpha) || params.alpha <= 0.0)
        violations.push_back("coupling alpha must satisfy alpha > 0 (got " + num(params.alpha) + ")");
    if (!violations.empty()) throw ValidationError(std::move(violations));
}

Channel make_channel_unchecked(const PotentialParams& params, int l) {
    Channel ch;
    ch.params = params;
    ch.l = l;
    ch.nu = l + 0.5 * (params.d - 2);
    ch.nu_tilde = 2.0 * ch.nu / (2.0 - params.mu);
    ch.b = 2.0 * std::sqrt(params.alpha) / (2.0 - params.mu);
    ch.sigma = 0.5 * (2.0 - params.mu);
    return ch;
}

Channel make_channel(const PotentialParams& params, int l) {
    validate(params);
    if (l < 0) throw DomainError("angular momentum l must be nonnegative (got " + std::to_string(l) + ")");
    return make_channel_unchecked(params, l);
}

double laplace_beltrami_eigenvalue(int d, int l) {
    if (d < 2) throw DomainError("laplace_beltrami_eigenvalue: d must be >= 2");
    if (l < 0) throw DomainError("laplace_beltrami_eigenvalue: l must be >= 0");
    return double(l) * double(l + d - 2);
}

std::uint64_t harmonic_multiplicity(int d, int l) {
    if (d < 2) throw DomainError("harmonic_multiplicity: d must be >= 2");
    if (l < 0) throw DomainError("harmonic_multiplicity: l must be >= 0");
    if (d == 2) return l == 0 ? 1 : 2;
    // (2l + d - 2) (l + d - 3)! / (l! (d - 2)!) = (2l + d - 2) C(l + d - 3, l) / (d - 2)
    std::uint64_t binom = 1;
    for (int k = 1; k <= l; ++k) binom = binom * std::uint64_t(d - 3 + k) / std::uint64_t(k);
    return std::uint64_t(2 * l + d - 2) * binom / std::uint64_t(d - 2);
}

}  // namespace zescat
