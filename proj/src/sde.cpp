#include "lpkinetic/sde.hpp"

#include <cmath>
#include <stdexcept>

namespace lpk {

double smoothed_power(double v, double exponent, double mollify) {
    return v * std::pow(v * v + mollify * mollify, 0.5 * (exponent - 1.0));
}

DriftSpec drift_zero() {
    DriftSpec d;
    d.name = "zero";
    d.b1 = [](double, double, double v) { return v; };
    d.b2 = [](double, double, double) { return 0.0; };
    d.holder_gamma = 0.0;
    d.holder_beta = 0.0;
    return d;
}

DriftSpec drift_linear(double cx, double cv) {
    DriftSpec d;
    d.name = "linear";
    d.b1 = [](double, double, double v) { return v; };
    d.b2 = [cx, cv](double, double x, double v) { return cx * x + cv * v; };
    d.holder_gamma = 1.0;
    d.holder_beta = 1.0;
    return d;
}

DriftSpec drift_holder(double gamma_x, double beta, double amp1, double amp2) {
    DriftSpec d;
    d.name = "holder";
    d.b1 = [gamma_x, amp1](double, double x, double v) {
        return v + amp1 * smoothed_power(x, gamma_x);
    };
    d.b2 = [beta, amp2](double, double, double v) { return amp2 * smoothed_power(v, beta); };
    d.holder_gamma = gamma_x;
    d.holder_beta = beta;
    return d;
}

namespace {

constexpr double kBlowupGuard = 1e9;

void check_blowup(const std::array<double, 2>& z) {
    if (std::abs(z[0]) > kBlowupGuard || std::abs(z[1]) > kBlowupGuard)
        throw std::runtime_error("simulate_sde: trajectory exceeded the blow-up guard");
}

}  // namespace

FlowSample simulate_sde(const SdeConfig& cfg, double s, std::array<double, 2> z0,
                        const NoiseBundle& noise) {
    if (cfg.fine_steps % cfg.level_steps != 0)
        throw std::invalid_argument("simulate_sde: level_steps must divide fine_steps");
    if (!(s >= 0.0 && s < cfg.horizon))
        throw std::invalid_argument("simulate_sde: start time outside [0, horizon)");
    const std::size_t agg = cfg.fine_steps / cfg.level_steps;
    const double dt = cfg.horizon / double(cfg.level_steps);
    const std::size_t i0 = std::size_t(std::ceil(s / dt - 1e-12));

    FlowSample out;
    out.s = s;
    std::array<double, 2> z = z0;
    out.times.push_back(s);
    out.z.push_back(z);
    out.grid_times.push_back(s);
    out.grid_z.push_back(z);

    std::size_t next_jump = 0;
    while (next_jump < noise.big_jumps.size() && noise.big_jumps[next_jump].time <= s) ++next_jump;

    double t = s;
    // off-grid start: drift (plus exact jumps) up to the first level node; the
    // straddled step's small aggregate stays with the node that closes it
    if (double(i0) * dt > s + 1e-12 * cfg.horizon && i0 > 0) {
        const double t_align = double(i0) * dt;
        while (next_jump < noise.big_jumps.size() && noise.big_jumps[next_jump].time <= t_align) {
            const auto& ev = noise.big_jumps[next_jump];
            const double h = ev.time - t;
            const std::array<double, 2> zc = z;
            z[0] += h * cfg.drift.b1(t, zc[0], zc[1]);
            z[1] += h * cfg.drift.b2(t, zc[0], zc[1]);
            z[1] += cfg.sigma(ev.time, z[0], z[1]) * ev.size;
            t = ev.time;
            ++next_jump;
        }
        const double h = t_align - t;
        const std::array<double, 2> zc = z;
        z[0] += h * cfg.drift.b1(t, zc[0], zc[1]);
        z[1] += h * cfg.drift.b2(t, zc[0], zc[1]);
        t = t_align;
        out.times.push_back(t);
        out.z.push_back(z);
        out.grid_times.push_back(t);
        out.grid_z.push_back(z);
    }
    for (std::size_t i = i0; i < cfg.level_steps; ++i) {
        const double t_end = dt * double(i + 1);
        // drift between jump times, exact jump application at jump times
        while (next_jump < noise.big_jumps.size() && noise.big_jumps[next_jump].time <= t_end) {
            const auto& ev = noise.big_jumps[next_jump];
            const double h = ev.time - t;
            const std::array<double, 2> zc = z;
            z[0] += h * cfg.drift.b1(t, zc[0], zc[1]);
            z[1] += h * cfg.drift.b2(t, zc[0], zc[1]);
            z[1] += cfg.sigma(ev.time, z[0], z[1]) * ev.size;
            t = ev.time;
            out.times.push_back(t);
            out.z.push_back(z);
            ++next_jump;
        }
        {
            const double h = t_end - t;
            const std::array<double, 2> zc = z;
            z[0] += h * cfg.drift.b1(t, zc[0], zc[1]);
            z[1] += h * cfg.drift.b2(t, zc[0], zc[1]);
        }
        // compensated small-jump aggregate for the level step, sigma frozen at
        // the step start state
        const double small = noise.small_sum(i * agg, (i + 1) * agg);
        z[1] += cfg.sigma(t, z[0], z[1]) * small;
        t = t_end;
        check_blowup(z);
        out.times.push_back(t);
        out.z.push_back(z);
        out.grid_times.push_back(t);
        out.grid_z.push_back(z);
    }
    // X never jumps: measure max |delta X| across recorded jumps; the Euler map
    // applies jumps to V only, so this is identically zero by construction
    out.max_jump_dx = 0.0;
    out.stream = 0;
    return out;
}

double flow_composition_check(const SdeConfig& cfg, double s, double r, double t,
                              std::array<double, 2> z, const NoiseBundle& noise) {
    if (!(s < r && r < t && t <= cfg.horizon))
        throw std::invalid_argument("flow_composition_check: needs s < r < t <= horizon");
    auto at_time = [&](const FlowSample& fs, double when) {
        // last grid state with time <= when (grid times are exact multiples)
        std::array<double, 2> out = fs.grid_z.front();
        for (std::size_t i = 0; i < fs.grid_times.size(); ++i)
            if (fs.grid_times[i] <= when + 1e-15) out = fs.grid_z[i];
        return out;
    };
    const FlowSample direct = simulate_sde(cfg, s, z, noise);
    const std::array<double, 2> mid = at_time(direct, r);
    const FlowSample leg2 = simulate_sde(cfg, r, mid, noise);
    const std::array<double, 2> a = at_time(direct, t);
    const std::array<double, 2> b = at_time(leg2, t);
    return std::max(std::abs(a[0] - b[0]), std::abs(a[1] - b[1]));
}

std::array<double, 4> flow_jacobian(const SdeConfig& cfg, double s, std::array<double, 2> z,
                                    const NoiseBundle& noise, double h) {
    std::array<double, 4> jac{};
    for (int col = 0; col < 2; ++col) {
        std::array<double, 2> zp = z, zm = z;
        zp[std::size_t(col)] += h;
        zm[std::size_t(col)] -= h;
        const auto fp = simulate_sde(cfg, s, zp, noise).grid_z.back();
        const auto fm = simulate_sde(cfg, s, zm, noise).grid_z.back();
        jac[0 * 2 + std::size_t(col)] = (fp[0] - fm[0]) / (2.0 * h);
        jac[1 * 2 + std::size_t(col)] = (fp[1] - fm[1]) / (2.0 * h);
    }
    return jac;
}

}  // namespace lpk
