#pragma once

// Channel sweeps over a (d, mu, alpha, l) grid. Each channel is an independent
// pure computation, so the parallel kernels are plain OpenMP loops over a
// pre-enumerated channel list; the serial versions are the reference the
// parallel ones are tested against.

#include <string>
#include <vector>

#include "zescat/channels.hpp"
#include "zescat/closedform.hpp"
#include "zescat/numeric.hpp"
#include "zescat/smatrix.hpp"

namespace zescat {

struct SweepGrid {
    std::vector<int> dims;
    std::vector<double> mus;
    std::vector<double> alphas;
    int max_l = 0;

    // d in {2,3,4,5}, mu in {0.3,0.5,1.0,1.5,1.9}, alpha in {0.5,1,4}, l in [0,6].
    static SweepGrid lemma_default();

    // Every (params, l) in d-major, then mu, alpha, l order.
    std::vector<std::pair<PotentialParams, int>> channels() const;
    // Every params triple, same ordering.
    std::vector<PotentialParams> parameter_sets() const;
};

struct LemmaCheck {
    PotentialParams params;
    int l = 0;
    double nu = 0.0;
    double nu_tilde = 0.0;
    PhaseAmplitude closed;
    PhaseAmplitude numeric;
    double phase_error = 0.0;           // circular distance |D_num - D_closed|
    double amplitude_rel_error = 0.0;   // |C_num / C_closed - 1|
    double residual_rms = 0.0;
    double literal_ratio = 0.0;         // (2 - nu) reading of C over the fitted C
    std::size_t integrator_steps = 0;
    std::string error;                  // non-empty if the pipeline threw

    bool ok() const { return error.empty(); }
};

struct LemmaTolerances {
    double phase = 1e-4;
    double amplitude = 1e-4;
};

bool passes(const LemmaCheck& check, const LemmaTolerances& tol);

LemmaCheck check_channel(const PotentialParams& params, int l,
                         const numeric::PipelineOptions& options);

std::vector<LemmaCheck> lemma_sweep_serial(const SweepGrid& grid,
                                           const numeric::PipelineOptions& options = {});
std::vector<LemmaCheck> lemma_sweep_parallel(const SweepGrid& grid,
                                             const numeric::PipelineOptions& options = {});

std::vector<IdentityReport> identity_sweep_serial(const SweepGrid& grid);
std::vector<IdentityReport> identity_sweep_parallel(const SweepGrid& grid);

}  // namespace zescat
