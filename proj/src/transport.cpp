#include "lpkinetic/transport.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lpk {

double path_value(const StablePath& p, double t) {
    if (p.times.empty()) throw std::invalid_argument("path_value: empty path");
    if (t <= p.times.front()) return p.values.front();
    if (t >= p.times.back()) return p.values.back();
    const double dt = p.times[1] - p.times[0];
    const std::size_t k = std::min(p.times.size() - 2, std::size_t(t / dt));
    const double w = (t - p.times[k]) / dt;
    return (1.0 - w) * p.values[k] + w * p.values[k + 1];
}

double path_integral(const StablePath& p, double t) {
    double acc = 0.0;
    const double dt = p.times[1] - p.times[0];
    for (std::size_t k = 0; k + 1 < p.times.size() && p.times[k] < t; ++k) {
        const double hi = std::min(t, p.times[k + 1]);
        const double w0 = p.values[k];
        const double w1 = path_value(p, hi);
        acc += 0.5 * (w0 + w1) * (hi - p.times[k]);
    }
    (void)dt;
    return acc;
}

namespace {

double heun_step(const TransportProblem& pr, double t, double y, double dt, int direction,
                 double t_origin) {
    // direction +1: forward in t; -1: reversed clock tau with t = t_origin - tau
    auto rhs = [&](double tau, double yy) {
        const double tt = (direction > 0) ? tau : t_origin - tau;
        const double f = pr.drift(tt, yy) + path_value(pr.path, tt);
        return (direction > 0) ? f : -f;
    };
    const double k1 = rhs(t, y);
    const double k2 = rhs(t + dt, y + dt * k1);
    return y + 0.5 * dt * (k1 + k2);
}

}  // namespace

std::vector<double> solve_random_ode(const TransportProblem& pr, double s, double x, double t,
                                     double dt) {
    if (!(t > s)) throw std::invalid_argument("solve_random_ode: needs t > s");
    if (t > pr.path.times.back() + 1e-12)
        throw std::invalid_argument("solve_random_ode: horizon exceeds the driving path");
    std::vector<double> out{x};
    double y = x;
    double tau = s;
    while (tau < t - 1e-12) {
        const double step = std::min(dt, t - tau);
        y = heun_step(pr, tau, y, step, +1, 0.0);
        tau += step;
        out.push_back(y);
    }
    return out;
}

double solve_transport(const TransportProblem& pr, double t, double x, double dt) {
    if (t == 0.0) return pr.phi(x);
    if (!(t > 0.0)) throw std::invalid_argument("solve_transport: needs t >= 0");
    // integrate theta' = -(b(t - tau, theta) + L_{t - tau}) from tau = 0 to t
    double y = x;
    double tau = 0.0;
    while (tau < t - 1e-12) {
        const double step = std::min(dt, t - tau);
        y = heun_step(pr, tau, y, step, -1, t);
        tau += step;
    }
    return pr.phi(y);
}

double transport_residual(const TransportProblem& pr, double t, double x, double dt,
                          double dt_eval, double h_eval) {
    const double fine_dt = pr.path.times[1] - pr.path.times[0];
    for (const auto& ev : pr.path.jumps) {
        if (std::abs(ev.time - t) <= fine_dt) {
            const double safe = (ev.time - t >= 0.0) ? ev.time - 2.0 * fine_dt
                                                     : ev.time + 2.0 * fine_dt;
            throw std::invalid_argument(
                "transport_residual: t is within one step of a jump; nearest safe t ~= " +
                std::to_string(safe));
        }
    }
    const double u0 = solve_transport(pr, t, x, dt);
    const double ut = solve_transport(pr, t + dt_eval, x, dt);
    const double uxp = solve_transport(pr, t, x + h_eval, dt);
    const double uxm = solve_transport(pr, t, x - h_eval, dt);
    const double dudt = (ut - u0) / dt_eval;
    const double dudx = (uxp - uxm) / (2.0 * h_eval);
    const double speed = pr.drift(t, x) + path_value(pr.path, t);
    return std::abs(dudt + speed * dudx);
}

}  // namespace lpk
