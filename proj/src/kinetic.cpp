#include "lpkinetic/kinetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lpkinetic/fft.hpp"
#include "lpkinetic/parallel.hpp"

namespace lpk {

double symbol_constant(double alpha) {
    if (alpha == 2.0) return 1.0;
    if (!(alpha > 0.0 && alpha < 2.0))
        throw std::invalid_argument("symbol_constant: alpha must be in (0,2]");
    // int_R 2(1-cos w)/|w|^{1+a} dw = 2 pi / (Gamma(1+a) sin(pi a / 2))
    return 2.0 * std::numbers::pi /
           (std::tgamma(1.0 + alpha) * std::sin(0.5 * std::numbers::pi * alpha));
}

double ScalarPath::at(double t) const {
    std::size_t k = 0;
    while (k + 1 < knots.size() && t >= knots[k + 1]) ++k;
    return values[k];
}

double ScalarPath::integral(double s, double t) const {
    const double sign = (t >= s) ? 1.0 : -1.0;
    const double lo = std::min(s, t), hi = std::max(s, t);
    double acc = 0.0;
    for (std::size_t k = 0; k < knots.size(); ++k) {
        const double seg_lo = std::max(lo, knots[k]);
        const double seg_hi = (k + 1 < knots.size()) ? std::min(hi, knots[k + 1]) : hi;
        if (seg_hi > seg_lo) acc += (seg_hi - seg_lo) * values[k];
    }
    return sign * acc;
}

double ScalarPath::min_value() const { return *std::min_element(values.begin(), values.end()); }
double ScalarPath::max_value() const { return *std::max_element(values.begin(), values.end()); }

double KineticKernelSpec::shear_constant(double horizon) const {
    double c = 0.0;
    for (double u : U.values) c = std::max(c, std::abs(u));
    // (t-s) |Pi_{s,t}^{-1}| <= 1 / min |U| for sign-definite U
    double umin = std::abs(U.values.front());
    for (double u : U.values) umin = std::min(umin, std::abs(u));
    (void)horizon;
    if (umin == 0.0) throw std::invalid_argument("shear_constant: U must be bounded away from 0");
    return std::max(1.0, c + 1.0 / umin);
}

void KineticKernelSpec::validate() const {
    if (!(alpha > 0.0 && alpha <= 2.0))
        throw std::invalid_argument("KineticKernelSpec: alpha must be in (0,2]");
    if (kappa0.min_value() <= 0.0)
        throw std::invalid_argument("KineticKernelSpec: kappa0 must be positive");
    if (lambda < 0.0) throw std::invalid_argument("KineticKernelSpec: lambda must be >= 0");
}

namespace {

// int_0^h |a + b tau|^alpha d tau
double linear_power_integral(double a, double b, double h, double alpha) {
    auto G = [alpha](double z) {
        return std::copysign(std::pow(std::abs(z), 1.0 + alpha), z) / (1.0 + alpha);
    };
    if (b == 0.0) return h * std::pow(std::abs(a), alpha);
    return (G(a + b * h) - G(a)) / b;
}

// knot-aware merge of kappa0 and U segment boundaries within [s,t]
std::vector<double> merged_knots(const KineticKernelSpec& k, double s, double t) {
    std::vector<double> cuts{s, t};
    for (double c : k.kappa0.knots)
        if (c > s && c < t) cuts.push_back(c);
    for (double c : k.U.knots)
        if (c > s && c < t) cuts.push_back(c);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    return cuts;
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol) {
    if (!(b > a)) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace

double cf_exponent(const KineticKernelSpec& k, double xi, double eta, double s, double t) {
    if (!(t > s)) throw std::invalid_argument("cf_exponent: needs t > s");
    const double c_a = symbol_constant(k.alpha);
    const auto cuts = merged_knots(k, s, t);
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double r0 = cuts[i], r1 = cuts[i + 1];
        const double kap = k.kappa0.at(0.5 * (r0 + r1));
        const double u = k.U.at(0.5 * (r0 + r1));
        // A(r) = eta + Pi_{r,t} xi is linear within the segment
        const double a_end = eta + k.Pi(r1, t) * xi;
        acc += kap * linear_power_integral(a_end, u * xi, r1 - r0, k.alpha);
    }
    return c_a * acc;
}

double cf_exponent_quadrature(const KineticKernelSpec& k, double xi, double eta, double s, double t,
                              double tol) {
    if (!(t > s)) throw std::invalid_argument("cf_exponent_quadrature: needs t > s");
    const double c_a = symbol_constant(k.alpha);
    const auto cuts = merged_knots(k, s, t);
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        auto integrand = [&](double r) {
            const double arg = eta + k.Pi(r, t) * xi;
            return k.kappa0.at(r) * std::pow(std::abs(arg), k.alpha);
        };
        acc += integrate_adaptive(integrand, cuts[i], cuts[i + 1], tol / double(cuts.size()));
    }
    return c_a * acc;
}

std::complex<double> kinetic_cf(const KineticKernelSpec& k, double xi, double eta, double s,
                                double t, bool use_quadrature) {
    const double ex =
        use_quadrature ? cf_exponent_quadrature(k, xi, eta, s, t) : cf_exponent(k, xi, eta, s, t);
    return {std::exp(-ex), 0.0};
}

Field kernel_from_cf(const KineticKernelSpec& k, const GridSpec& grid, double s, double t) {
    k.validate();
    if (grid.axes() != 2) throw std::invalid_argument("kernel_from_cf: expects a 2-d (x,v) grid");
    // spectral resolution: the cf must be negligible at the Nyquist edge,
    // otherwise the inverse DFT truncates kernel spectrum mass
    const double tail_tol = 1e-12;
    const double ex_v = cf_exponent(k, 0.0, grid.nyquist(1), s, t);
    const double ex_x = cf_exponent(k, grid.nyquist(0), 0.0, s, t);
    if (std::exp(-ex_v) > tail_tol || std::exp(-ex_x) > tail_tol) {
        const double need = std::log(1.0 / tail_tol);
        const double grow_v = std::sqrt(std::max(1.0, need / std::max(ex_v, 1e-300)));
        const double grow_x = std::sqrt(std::max(1.0, need / std::max(ex_x, 1e-300)));
        throw std::invalid_argument(
            "kernel_from_cf: grid does not resolve the kernel spectrum; need roughly N_x >= " +
            std::to_string(std::size_t(double(grid.points[0]) * 2.0 * grow_x)) + ", N_v >= " +
            std::to_string(std::size_t(double(grid.points[1]) * 2.0 * grow_v)));
    }
    const double damp = std::exp(k.lambda * (s - t));
    const std::size_t nx = grid.points[0], nv = grid.points[1];
    std::vector<std::complex<double>> spec(grid.size());
    parallel_for(nx, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t ix = lo; ix < hi; ++ix) {
            const double xi = grid.freq(0, ix);
            // (-1)^{ix+iv} centers the kernel at the x_{N/2} = 0 node
            const double sx = (ix % 2 == 0) ? 1.0 : -1.0;
            for (std::size_t iv = 0; iv < nv; ++iv) {
                const double eta = grid.freq(1, iv);
                const double sv = (iv % 2 == 0) ? 1.0 : -1.0;
                spec[ix * nv + iv] = sx * sv * damp * std::exp(-cf_exponent(k, xi, eta, s, t));
            }
        }
    });
    // p(x_j) = (1/prod 2L) sum_k cf(xi_k) e^{i xi_k x_j}; from_spectrum divides
    // the backward DFT by N, so rescale by N / prod(2L) = 1 / cell_volume
    return Field::from_spectrum(grid, std::move(spec)).scaled(1.0 / grid.cell_volume());
}

Field gamma_shift(const Field& f, double Pi) {
    const GridSpec& g = f.grid();
    if (g.axes() != 2) throw std::invalid_argument("gamma_shift: expects a 2-d (x,v) grid");
    std::vector<std::complex<double>> work(f.values().begin(), f.values().end());
    fft_forward_axis(work, g.points, 0);
    const std::size_t nx = g.points[0], nv = g.points[1];
    for (std::size_t ix = 0; ix < nx; ++ix) {
        const double xi = g.freq(0, ix);
        for (std::size_t iv = 0; iv < nv; ++iv) {
            const double v = g.coord(1, iv);
            const std::complex<double> phase(std::cos(xi * Pi * v), std::sin(xi * Pi * v));
            work[ix * nv + iv] *= phase;
        }
    }
    fft_backward_axis(work, g.points, 0);
    std::vector<double> vals(work.size());
    const double inv = 1.0 / double(nx);
    for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = work[i].real() * inv;
    return Field(g, std::move(vals));
}

double moment_integral(const KineticKernelSpec& k, double beta, double gamma, int n, int m,
                       double s, double t, std::size_t grid_n, double box_radius) {
    k.validate();
    if (!(beta >= 0.0 && gamma >= 0.0))
        throw std::invalid_argument("moment_integral: beta, gamma must be >= 0");
    if (beta + gamma >= k.alpha)
        throw std::invalid_argument("moment_integral: needs beta + gamma < alpha (divergent moment)");
    if (n < 0 || m < 0 || n > 2 || m > 2)
        throw std::invalid_argument("moment_integral: n, m must lie in [0,2]");
    const double tau = t - s;
    if (!(tau > 0.0)) throw std::invalid_argument("moment_integral: needs t > s");
    // box adapted to the kernel scales tau^{1/alpha+1} (x) and tau^{1/alpha} (v)
    const double lv = box_radius * std::pow(tau, 1.0 / k.alpha);
    const double lx = box_radius * std::pow(tau, 1.0 / k.alpha + 1.0) * std::max(1.0, k.U.max_value());
    const GridSpec grid = make_grid_2d(lx, grid_n, lv, grid_n);
    const std::size_t nx = grid.points[0], nv = grid.points[1];
    std::vector<std::complex<double>> spec(grid.size());
    parallel_for(nx, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t ix = lo; ix < hi; ++ix) {
            const double xi = grid.freq(0, ix);
            const double sx = (ix % 2 == 0) ? 1.0 : -1.0;
            for (std::size_t iv = 0; iv < nv; ++iv) {
                const double eta = grid.freq(1, iv);
                const double sv = (iv % 2 == 0) ? 1.0 : -1.0;
                std::complex<double> val(sx * sv * std::exp(-cf_exponent(k, xi, eta, s, t)), 0.0);
                // spectral derivatives d_x^n d_v^m
                for (int q = 0; q < n; ++q) val *= std::complex<double>(0.0, xi);
                for (int q = 0; q < m; ++q) val *= std::complex<double>(0.0, eta);
                spec[ix * nv + iv] = val;
            }
        }
    });
    std::vector<std::complex<double>> work = std::move(spec);
    fft_backward(work, grid.points);
    // density normalization 1/(2Lx * 2Lv)
    const double norm = 1.0 / (4.0 * lx * lv);
    double acc = 0.0;
    for (std::size_t ix = 0; ix < nx; ++ix) {
        const double x = grid.coord(0, ix);
        const double wx = (beta == 0.0) ? 1.0 : std::pow(std::abs(x), beta);
        for (std::size_t iv = 0; iv < nv; ++iv) {
            const double v = grid.coord(1, iv);
            const double wv = (gamma == 0.0) ? 1.0 : std::pow(std::abs(v), gamma);
            acc += wx * wv * std::abs(work[ix * nv + iv].real()) * norm;
        }
    }
    return acc * grid.cell_volume();
}

}  // namespace lpk
