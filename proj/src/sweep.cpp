#include "zescat/sweep.hpp"

#include <cmath>
#include <exception>

#include "zescat/phase.hpp"

namespace zescat {

SweepGrid SweepGrid::lemma_default() {
    return {{2, 3, 4, 5}, {0.3, 0.5, 1.0, 1.5, 1.9}, {0.5, 1.0, 4.0}, 6};
}

std::vector<PotentialParams> SweepGrid::parameter_sets() const {
    std::vector<PotentialParams> out;
    out.reserve(dims.size() * mus.size() * alphas.size());
    for (int d : dims)
        for (double mu : mus)
            for (double alpha : alphas) out.push_back({d, mu, alpha});
    return out;
}

std::vector<std::pair<PotentialParams, int>> SweepGrid::channels() const {
    std::vector<std::pair<PotentialParams, int>> out;
    for (const auto& p : parameter_sets())
        for (int l = 0; l <= max_l; ++l) out.emplace_back(p, l);
    return out;
}

bool passes(const LemmaCheck& check, const LemmaTolerances& tol) {
    return check.ok() && check.phase_error <= tol.phase && check.amplitude_rel_error <= tol.amplitude;
}

LemmaCheck check_channel(const PotentialParams& params, int l,
                         const numeric::PipelineOptions& options) {
    LemmaCheck out;
    out.params = params;
    out.l = l;
    try {
        const Channel ch = make_channel(params, l);
        out.nu = ch.nu;
        out.nu_tilde = ch.nu_tilde;
        out.closed = closed_form_phase_amplitude(ch);
        const auto result = numeric::run_pipeline(ch, options);
        out.numeric = result.tail.fit;
        out.residual_rms = result.tail.residual_rms;
        out.integrator_steps = result.stats.steps;
        out.phase_error = phase_distance(out.numeric.phase_D, out.closed.phase_D);
        out.amplitude_rel_error = std::abs(out.numeric.amplitude_C / out.closed.amplitude_C - 1.0);
        out.literal_ratio = literal_amplitude_reading(ch) / out.numeric.amplitude_C;
    } catch (const std::exception& e) {
        out.error = e.what();
    }
    return out;
}

std::vector<LemmaCheck> lemma_sweep_serial(const SweepGrid& grid,
                                           const numeric::PipelineOptions& options) {
    const auto channels = grid.channels();
    std::vector<LemmaCheck> out;
    out.reserve(channels.size());
    for (const auto& [params, l] : channels) out.push_back(check_channel(params, l, options));
    return out;
}

std::vector<LemmaCheck> lemma_sweep_parallel(const SweepGrid& grid,
                                             const numeric::PipelineOptions& options) {
    const auto channels = grid.channels();
    std::vector<LemmaCheck> out(channels.size());
    const auto n = static_cast<std::ptrdiff_t>(channels.size());
    // Channel cost grows like nu~^2; dynamic scheduling keeps the expensive ones spread out.
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        out[i] = check_channel(channels[i].first, channels[i].second, options);
    return out;
}

std::vector<IdentityReport> identity_sweep_serial(const SweepGrid& grid) {
    std::vector<IdentityReport> out;
    for (const auto& p : grid.parameter_sets()) out.push_back(verify_theorem_identity(p, grid.max_l));
    return out;
}

std::vector<IdentityReport> identity_sweep_parallel(const SweepGrid& grid) {
    const auto sets = grid.parameter_sets();
    // Throw before entering the parallel region; exceptions cannot cross it.
    for (const auto& p : sets) validate(p);
    if (grid.max_l < 0) return identity_sweep_serial(grid);
    std::vector<IdentityReport> out(sets.size());
    const auto n = static_cast<std::ptrdiff_t>(sets.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = verify_theorem_identity(sets[i], grid.max_l);
    return out;
}

}  // namespace zescat
