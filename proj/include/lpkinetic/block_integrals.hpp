#pragma once

#include "lpkinetic/gaussian.hpp"
#include "lpkinetic/kinetic.hpp"

namespace lpk {

// Numerical layout for the kernel block integrals. The integrands are realized
// on unit grids after the exact dyadic rescaling x -> 2^{s_x} x, v -> 2^{s_v} v
// that maps the block-j ring onto the fixed ring {1/2 <= |.|_a <= 4}, so the
// cost per (j, time) evaluation is independent of j.
struct BlockIntegralConfig {
    double radius_y = 90.0;       // spatial envelope radius, ring units
    double radius_u = 60.0;
    std::size_t base_ny = 512;    // grid sizes grow with the shear spread
    std::size_t base_nu = 256;
    double w_cut = 30.0;          // rescaled-time cutoff 2^{alpha j} (t-s)
    double w_floor = 1e-7;        // analytic stub below this rescaled time
    int panels_per_decade = 3;    // log-time Gauss-Legendre panels
};

enum class KineticBlockMode { aniso, x_only };

// inner integral of Lemma 3.1: int |x|^beta |R_j p_{t-tau, t}(x)| dx  (d = 1)
double heat_block_moment(int j, double beta, double tau, const GaussianSpec& gspec,
                         const BlockIntegralConfig& cfg = {});

// int_0^t int |x|^beta |R_j p_{s,t}(x)| dx ds
double heat_block_integral(int j, double beta, double t, const GaussianSpec& gspec,
                           const BlockIntegralConfig& cfg = {});

// int |x|^beta |v|^gamma |R_j Gamma_{s,t} p_{s,t}| dx dv at s = t - tau
double kinetic_block_moment(int j, double beta, double gamma, double tau,
                            const KineticKernelSpec& kspec, KineticBlockMode mode,
                            const BlockIntegralConfig& cfg = {});

// int_0^t (t-s)^q int |x|^beta |v|^gamma |R_j Gamma_{s,t} p_{s,t}| dx dv ds
double kinetic_block_integral(int j, double q, double beta, double gamma, double t,
                              const KineticKernelSpec& kspec, KineticBlockMode mode,
                              const BlockIntegralConfig& cfg = {});

}  // namespace lpk
