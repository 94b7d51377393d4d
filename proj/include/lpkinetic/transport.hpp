#pragma once

#include <functional>

#include "lpkinetic/stable.hpp"

namespace lpk {

// Random transport problem d_t u + (b(t,x) + L_t) . d_x u = 0, u(0) = phi,
// solved by characteristics: u(t,x) = phi(Y^{-1}(x)) with the inverse flow
// integrated backward in time along the frozen driving path.
struct TransportProblem {
    std::function<double(double, double)> drift = [](double, double) { return 0.0; };
    double drift_holder_gamma = 1.0;
    std::function<double(double)> phi = [](double x) { return x; };
    std::function<double(double)> phi_prime = [](double) { return 1.0; };
    StablePath path;                 // precomputed driving path
};

// path value by linear interpolation of the fine table
double path_value(const StablePath& p, double t);
// trapezoid integral of the interpolated path over [0, t]
double path_integral(const StablePath& p, double t);

// forward random ODE dY/dt = b(t,Y) + L_t from (s,x), Heun steps of size dt;
// returns Y at s + k dt up to `t`
std::vector<double> solve_random_ode(const TransportProblem& pr, double s, double x, double t,
                                     double dt);

// u(t,x) via the time-reversed characteristic from (t,x) back to 0
double solve_transport(const TransportProblem& pr, double t, double x, double dt);

// |d_t^+ u + (b + L_t) d_x u| with one-sided time and centered space
// differences; rejects t within one fine step of a recorded jump and suggests
// the nearest safe time in the exception message
double transport_residual(const TransportProblem& pr, double t, double x, double dt, double dt_eval,
                          double h_eval);

}  // namespace lpk
