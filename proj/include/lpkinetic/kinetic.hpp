#pragma once

#include <complex>

#include "lpkinetic/field.hpp"
#include "lpkinetic/gaussian.hpp"

namespace lpk {

// Symbol constant of the jump kernel dw/|w|^{1+alpha} under the symmetric
// second difference: int 2(1-cos w) dw/|w|^{1+alpha} over R. By convention
// symbol_constant(2) = 1 so that alpha = 2 means kappa0 * Laplacian.
double symbol_constant(double alpha);

// scalar piecewise-constant path
struct ScalarPath {
    std::vector<double> knots{0.0};
    std::vector<double> values{1.0};

    static ScalarPath constant(double v) { return {{0.0}, {v}}; }
    double at(double t) const;
    double integral(double s, double t) const;
    double min_value() const;
    double max_value() const;
};

// Frozen-coefficient kinetic kernel: generator kappa0(t) L^(alpha)_v + U(t) v d_x
// (d = 1 per group). The kernel p_{s,t}(x,v) is the density of
// (int_s^t Pi_{r,t} dL_r, L_t - L_s) with L the jump process whose delta^(2)
// symbol is -kappa0 c_alpha |eta|^alpha.
struct KineticKernelSpec {
    double alpha = 1.5;
    ScalarPath kappa0 = ScalarPath::constant(1.0);
    ScalarPath U = ScalarPath::constant(1.0);
    double lambda = 0.0;

    double Pi(double s, double t) const { return U.integral(s, t); }
    // c1 of the shear bound: |U| + (t-s)|Pi^{-1}| over the horizon
    double shear_constant(double horizon) const;
    void validate() const;
};

// - log cf: c_alpha int_s^t kappa0(r) |eta + Pi_{r,t} xi|^alpha dr, evaluated
// in closed form segment by segment (piecewise-constant coefficients)
double cf_exponent(const KineticKernelSpec& k, double xi, double eta, double s, double t);
// same integral by adaptive Simpson (tolerance 1e-10), kept as a cross-check path
double cf_exponent_quadrature(const KineticKernelSpec& k, double xi, double eta, double s, double t,
                              double tol = 1e-10);

// characteristic function of the probability kernel (no lambda damping)
std::complex<double> kinetic_cf(const KineticKernelSpec& k, double xi, double eta, double s,
                                double t, bool use_quadrature = false);

// p^lambda_{s,t} realized on the grid by inverse FFT of the cf times
// e^{lambda (s-t)}. Throws when the grid cannot resolve the kernel, reporting
// the needed point counts.
Field kernel_from_cf(const KineticKernelSpec& k, const GridSpec& grid, double s, double t);

// shear f(x,v) -> f(x + Pi v, v), exact on band-limited periodic fields
// (x-axis modulation). Grid must be 2-d with axis 0 = x, axis 1 = v.
Field gamma_shift(const Field& f, double Pi);

// int |x|^beta |v|^gamma |d_x^n d_v^m p_{s,t}| dx dv on an adapted grid.
// Requires beta + gamma < alpha and n, m <= 2.
double moment_integral(const KineticKernelSpec& k, double beta, double gamma, int n, int m,
                       double s, double t, std::size_t grid_n = 2048, double box_radius = 60.0);

}  // namespace lpk
