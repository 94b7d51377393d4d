#include "lpkinetic/stable.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lpkinetic/kinetic.hpp"

namespace lpk {

void StableConfig::validate() const {
    if (!(alpha > 0.0 && alpha <= 2.0))
        throw std::invalid_argument("StableConfig: alpha must be in (0,2]");
    if (!(scale > 0.0)) throw std::invalid_argument("StableConfig: scale must be positive");
    if (!(r0 > 0.0 && r0 <= 1.0)) throw std::invalid_argument("StableConfig: r0 must be in (0,1]");
    if (dim < 1) throw std::invalid_argument("StableConfig: dim must be >= 1");
}

double StableConfig::eps() const {
    if (small_jump_eps > 0.0) return small_jump_eps;
    // replacement variance fraction (eps/r0)^{2-alpha} <= 1%
    return r0 * std::pow(0.01, 1.0 / (2.0 - alpha));
}

double intensity_scale(double alpha) {
    // 2 / c_alpha with c_alpha the delta^(2) symbol constant
    return 2.0 / symbol_constant(alpha);
}

double sample_1d_stable(double alpha, Rng& rng) {
    if (!(alpha > 0.0 && alpha <= 2.0))
        throw std::invalid_argument("sample_1d_stable: alpha must be in (0,2]");
    if (alpha == 2.0) return std::numbers::sqrt2 * rng.normal();
    const double u = rng.uniform(-0.5 * std::numbers::pi, 0.5 * std::numbers::pi);
    if (alpha == 1.0) return std::tan(u);
    const double e = rng.exponential();
    const double t1 = std::sin(alpha * u) / std::pow(std::cos(u), 1.0 / alpha);
    const double t2 = std::pow(std::cos((1.0 - alpha) * u) / e, (1.0 - alpha) / alpha);
    return t1 * t2;
}

std::vector<double> sample_1d_stable(double alpha, std::size_t n, Rng& rng) {
    std::vector<double> out(n);
    for (auto& x : out) x = sample_1d_stable(alpha, rng);
    return out;
}

double sample_positive_stable(double rho, Rng& rng) {
    if (!(rho > 0.0 && rho < 1.0))
        throw std::invalid_argument("sample_positive_stable: rho must be in (0,1)");
    // Kanter's representation: E e^{-lambda S} = exp(-lambda^rho) exactly
    const double v = rng.uniform(-0.5 * std::numbers::pi, 0.5 * std::numbers::pi);
    const double e = rng.exponential();
    const double shift = v + 0.5 * std::numbers::pi;
    const double t1 = std::sin(rho * shift) / std::pow(std::cos(v), 1.0 / rho);
    const double t2 = std::pow(std::cos(v - rho * shift) / e, (1.0 - rho) / rho);
    return t1 * t2;
}

std::vector<double> sample_isotropic_stable(const StableConfig& cfg, double dt, Rng& rng) {
    cfg.validate();
    std::vector<double> out(cfg.dim);
    const double step_scale = cfg.scale * std::pow(dt, 1.0 / cfg.alpha);
    if (cfg.alpha == 2.0) {
        for (auto& x : out) x = std::numbers::sqrt2 * step_scale * rng.normal();
        return out;
    }
    const double s = sample_positive_stable(0.5 * cfg.alpha, rng);
    const double radial = std::sqrt(2.0 * s) * step_scale;
    for (auto& x : out) x = radial * rng.normal();
    return out;
}

namespace {

struct BandRates {
    double eps;
    double rate;      // Poisson rate of (eps, r0] events per unit time
    double sigma2;    // Gaussian replacement variance per unit time
    double intensity;
};

BandRates band_rates(const StableConfig& cfg) {
    const double a = cfg.alpha;
    const double s = intensity_scale(a) * std::pow(cfg.scale, a);
    const double eps = cfg.eps();
    BandRates out;
    out.eps = eps;
    out.intensity = s;
    out.rate = s * 2.0 * (std::pow(eps, -a) - std::pow(cfg.r0, -a)) / a;
    out.sigma2 = s * 2.0 * std::pow(eps, 2.0 - a) / (2.0 - a);
    return out;
}

double band_jump_size(const StableConfig& cfg, double eps, Rng& rng) {
    const double a = cfg.alpha;
    const double lo = std::pow(eps, -a), hi = std::pow(cfg.r0, -a);
    const double u = rng.uniform();
    const double mag = std::pow(lo - u * (lo - hi), -1.0 / a);
    return (rng.uniform() < 0.5) ? mag : -mag;
}

}  // namespace

double small_jump_variance(const StableConfig& cfg, double dt) {
    const double a = cfg.alpha;
    const auto br = band_rates(cfg);
    const double band =
        br.intensity * 2.0 * (std::pow(cfg.r0, 2.0 - a) - std::pow(br.eps, 2.0 - a)) / (2.0 - a);
    return dt * (band + br.sigma2);
}

double sample_compensated_small_jumps(const StableConfig& cfg, double dt, Rng& rng) {
    cfg.validate();
    if (!(cfg.alpha > 1.0 && cfg.alpha < 2.0))
        throw std::invalid_argument(
            "sample_compensated_small_jumps: scheme requires alpha in (1,2)");
    const auto br = band_rates(cfg);
    const std::uint64_t n = rng.poisson(br.rate * dt);
    double acc = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) acc += band_jump_size(cfg, br.eps, rng);
    return acc + std::sqrt(br.sigma2 * dt) * rng.normal();
}

double NoiseBundle::small_sum(std::size_t k0, std::size_t k1) const {
    double acc = 0.0;
    for (std::size_t k = k0; k < k1 && k < small_increments.size(); ++k)
        acc += small_increments[k];
    return acc;
}

NoiseBundle make_noise_bundle(const StableConfig& cfg, double horizon, std::size_t fine_steps,
                              std::uint64_t stream) {
    cfg.validate();
    if (!(cfg.alpha > 1.0 && cfg.alpha < 2.0))
        throw std::invalid_argument("make_noise_bundle: requires alpha in (1,2)");
    NoiseBundle out;
    out.horizon = horizon;
    out.fine_steps = fine_steps;
    Rng rng(cfg.seed, stream);
    const double a = cfg.alpha;
    const double s = intensity_scale(a) * std::pow(cfg.scale, a);
    const double big_rate = s * 2.0 * std::pow(cfg.r0, -a) / a;
    const std::uint64_t nbig = rng.poisson(big_rate * horizon);
    out.big_jumps.resize(nbig);
    for (auto& ev : out.big_jumps) {
        ev.time = horizon * rng.uniform();
        const double mag = cfg.r0 * std::pow(rng.uniform(), -1.0 / a);
        ev.size = (rng.uniform() < 0.5) ? mag : -mag;
    }
    std::sort(out.big_jumps.begin(), out.big_jumps.end(),
              [](const JumpEvent& x, const JumpEvent& y) { return x.time < y.time; });
    out.small_increments.resize(fine_steps);
    const double dt = horizon / double(fine_steps);
    for (auto& inc : out.small_increments) inc = sample_compensated_small_jumps(cfg, dt, rng);
    return out;
}

StablePath path_from_bundle(const NoiseBundle& bundle) {
    StablePath p;
    const std::size_t n = bundle.fine_steps;
    const double dt = bundle.horizon / double(n);
    p.times.resize(n + 1);
    p.values.resize(n + 1);
    p.jumps = bundle.big_jumps;
    p.times[0] = 0.0;
    p.values[0] = 0.0;
    std::size_t next_jump = 0;
    for (std::size_t k = 0; k < n; ++k) {
        p.times[k + 1] = dt * double(k + 1);
        double inc = bundle.small_increments[k];
        while (next_jump < bundle.big_jumps.size() &&
               bundle.big_jumps[next_jump].time <= p.times[k + 1]) {
            inc += bundle.big_jumps[next_jump].size;
            ++next_jump;
        }
        p.values[k + 1] = p.values[k] + inc;
    }
    return p;
}

}  // namespace lpk
