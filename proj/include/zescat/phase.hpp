#pragma once

#include <cmath>
#include <numbers>

namespace zescat {

// Reduces an angle into (-pi, pi].
inline double wrap_phase(double x) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::remainder(x, two_pi);
    if (r <= -std::numbers::pi) r += two_pi;
    return r;
}

inline long double wrap_phase(long double x) {
    constexpr long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    long double r = std::remainder(x, two_pi);
    if (r <= -std::numbers::pi_v<long double>) r += two_pi;
    return r;
}

// Distance between two angles on the circle, in [0, pi].
inline double phase_distance(double a, double b) { return std::abs(wrap_phase(a - b)); }

}  // namespace zescat
