#pragma once

#include <array>
#include <functional>
#include <string>

#include "lpkinetic/stable.hpp"

namespace lpk {

// Drift catalog entry for the degenerate system dX = b1 dt, dV = b2 dt + sigma dL.
// Entries declare their Holder exponents so experiments can check admissibility
// against the theorem ranges. Kinetic entries have b1(t,x,v) = v + f(t,x).
struct DriftSpec {
    std::string name;
    std::function<double(double, double, double)> b1;  // (t,x,v)
    std::function<double(double, double, double)> b2;
    double holder_gamma = 0.0;  // x-regularity in the anisotropic scale
    double holder_beta = 0.0;   // v-regularity of b2
};

DriftSpec drift_zero();
DriftSpec drift_linear(double cx, double cv);
// b1 = v + amp * smoothed |x|^{gamma_x}, b2 = amp2 * smoothed |v|^{beta} (the
// fractional powers are mollified at scale 1e-6 near the origin)
DriftSpec drift_holder(double gamma_x, double beta, double amp1, double amp2);

double smoothed_power(double v, double exponent, double mollify = 1e-6);

struct SdeConfig {
    DriftSpec drift = drift_zero();
    std::function<double(double, double, double)> sigma =
        [](double, double, double) { return 1.0; };
    StableConfig noise;
    double horizon = 1.0;
    std::size_t fine_steps = 1024;   // noise resolution; must be a power of two
    std::size_t level_steps = 1024;  // Euler grid for this run (divides fine_steps)
};

struct FlowSample {
    double s = 0.0;
    std::vector<double> times;              // union of uniform nodes and jump times
    std::vector<std::array<double, 2>> z;   // (x,v) along `times`
    std::vector<double> grid_times;         // uniform level nodes only
    std::vector<std::array<double, 2>> grid_z;
    std::uint64_t stream = 0;
    double max_jump_dx = 0.0;  // largest |delta X| across recorded jump times
};

// jump-adapted Euler from (s, z0) to cfg.horizon over the given noise bundle
FlowSample simulate_sde(const SdeConfig& cfg, double s, std::array<double, 2> z0,
                        const NoiseBundle& noise);

// |Z_{s,t}(z) - Z_{r,t}(Z_{s,r}(z))| with shared noise
double flow_composition_check(const SdeConfig& cfg, double s, double r, double t,
                              std::array<double, 2> z, const NoiseBundle& noise);

// central-difference Jacobian of z -> Z_{s,t}(z) over common noise, row-major 2x2
std::array<double, 4> flow_jacobian(const SdeConfig& cfg, double s, std::array<double, 2> z,
                                    const NoiseBundle& noise, double h);

}  // namespace lpk
