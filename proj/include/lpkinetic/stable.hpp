#pragma once

#include <cstdint>
#include <vector>

#include "lpkinetic/rng.hpp"

namespace lpk {

// Sampler configuration. scale = 1 means the standard law with characteristic
// function exp(-t |xi|^alpha); the matching jump intensity on R is
// intensity_scale(alpha) dw/|w|^{1+alpha} (the 1/c_alpha calibration shared
// with the kernel module, so sampled paths and spectral kernels agree).
struct StableConfig {
    double alpha = 1.5;
    std::size_t dim = 1;
    double scale = 1.0;
    double r0 = 1.0;             // jumps above r0 are recorded individually
    double small_jump_eps = 0.0; // 0 = auto: replacement variance <= 1% of total
    std::uint64_t seed = 0;

    double eps() const;          // resolved truncation radius
    void validate() const;
};

// intensity prefactor s with jump measure s dw/|w|^{1+alpha} giving cf e^{-t|xi|^alpha}
double intensity_scale(double alpha);

// i.i.d. standard symmetric alpha-stable draws (Chambers-Mallows-Stuck)
double sample_1d_stable(double alpha, Rng& rng);
std::vector<double> sample_1d_stable(double alpha, std::size_t n, Rng& rng);

// one-sided rho-stable with Laplace transform exp(-lambda^rho), rho in (0,1)
double sample_positive_stable(double rho, Rng& rng);

// isotropic d-dimensional increment over time dt (cf exp(-dt |xi|^alpha)) via
// subordination; alpha = 2 falls back to the Gaussian
std::vector<double> sample_isotropic_stable(const StableConfig& cfg, double dt, Rng& rng);

// one compensated increment of the (eps, r0] jump band over dt, small jumps
// below eps replaced by a variance-matched Gaussian; requires alpha in (1,2)
double sample_compensated_small_jumps(const StableConfig& cfg, double dt, Rng& rng);

// closed-form variance of the compensated increment over dt
double small_jump_variance(const StableConfig& cfg, double dt);

struct JumpEvent {
    double time;
    double size;
};

// Common-noise realization of the driving path on [0, horizon]: jumps above r0
// as exact events, the compensated (eps, r0] band plus Gaussian remainder as
// per-step increments on the finest grid (2^levels_log2 steps). Coarser
// resolutions aggregate the same increments, so refinements share the noise.
struct NoiseBundle {
    double horizon = 1.0;
    std::size_t fine_steps = 1024;
    std::vector<JumpEvent> big_jumps;     // sorted by time
    std::vector<double> small_increments; // size fine_steps

    // sum of small increments over fine steps [k0, k1)
    double small_sum(std::size_t k0, std::size_t k1) const;
};

NoiseBundle make_noise_bundle(const StableConfig& cfg, double horizon, std::size_t fine_steps,
                              std::uint64_t stream);

// cadlag sampled path of the driving process with jump bookkeeping
struct StablePath {
    std::vector<double> times;   // fine grid nodes, size fine_steps+1
    std::vector<double> values;  // path at nodes (jumps included at their step)
    std::vector<JumpEvent> jumps;  // recorded jumps above r0
};

StablePath path_from_bundle(const NoiseBundle& bundle);

}  // namespace lpk
