#include "lpkinetic/block_integrals.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "lpkinetic/fft.hpp"
#include "lpkinetic/parallel.hpp"
#include "lpkinetic/partition.hpp"

namespace lpk {

namespace {

constexpr double kGlNode8[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                                -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                                0.7966664774136267,  0.9602898564975363};
constexpr double kGlWeight8[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                  0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                  0.2223810344533745, 0.1012285362903763};

// ring bump in rescaled frequency: phi_j(2^{a j} omega) for j >= 1
double unit_ring(double gauge) { return smooth_transition(gauge) - smooth_transition(2.0 * gauge); }

std::size_t next_pow2(double x) {
    std::size_t n = 2;
    while (double(n) < x) n *= 2;
    return n;
}

// weighted L1 of the inverse transform of a sampled spectrum on [-L,L)^2
double weighted_abs_integral_2d(std::vector<std::complex<double>>& spec, std::size_t ny,
                                std::size_t nu, double ly, double lu, double beta, double gamma) {
    fft_backward(spec, {ny, nu});
    const double norm = 1.0 / (4.0 * ly * lu);
    const double dy = 2.0 * ly / double(ny), du = 2.0 * lu / double(nu);
    double acc = 0.0;
    for (std::size_t iy = 0; iy < ny; ++iy) {
        const double y = -ly + double(iy) * dy;
        const double wy = (beta == 0.0) ? 1.0 : std::pow(std::abs(y), beta);
        double row = 0.0;
        for (std::size_t iu = 0; iu < nu; ++iu) {
            const double u = -lu + double(iu) * du;
            const double wu = (gamma == 0.0) ? 1.0 : std::pow(std::abs(u), gamma);
            row += wu * std::abs(spec[iy * nu + iu].real());
        }
        acc += wy * row;
    }
    return acc * norm * dy * du;
}

double weighted_abs_integral_1d(std::vector<std::complex<double>>& spec, std::size_t ny, double ly,
                                double beta) {
    fft_backward(spec, {ny});
    const double norm = 1.0 / (2.0 * ly);
    const double dy = 2.0 * ly / double(ny);
    double acc = 0.0;
    for (std::size_t iy = 0; iy < ny; ++iy) {
        const double y = -ly + double(iy) * dy;
        const double wy = (beta == 0.0) ? 1.0 : std::pow(std::abs(y), beta);
        acc += wy * std::abs(spec[iy].real());
    }
    return acc * norm * dy;
}

// log-spaced GL panels over [lo, hi] applied to f(tau), plus the analytic
// near-zero stub f(lo) * lo^{1+q} / (1+q)
double log_time_quadrature(double lo, double hi, double q, int panels_per_decade,
                           const std::function<double(double)>& f) {
    if (!(hi > lo)) return 0.0;
    const double llo = std::log(lo), lhi = std::log(hi);
    const std::size_t panels = std::max<std::size_t>(
        2, std::size_t(std::ceil((lhi - llo) / std::numbers::ln10 * panels_per_decade)));
    const double step = (lhi - llo) / double(panels);
    std::vector<double> vals(panels * 8);
    std::vector<double> weights(panels * 8);
    for (std::size_t p = 0; p < panels; ++p) {
        const double mid0 = llo + step * (double(p) + 0.5), half = 0.5 * step;
        for (int i = 0; i < 8; ++i) {
            const double lt = mid0 + half * kGlNode8[i];
            const double tau = std::exp(lt);
            // substitution tau = e^l: d tau = tau dl; the tau^q weight rides along
            weights[p * 8 + std::size_t(i)] = kGlWeight8[i] * half * std::pow(tau, q + 1.0);
            vals[p * 8 + std::size_t(i)] = tau;
        }
    }
    std::vector<double> evals(vals.size());
    parallel_for(vals.size(), [&](std::size_t a, std::size_t b) {
        for (std::size_t i = a; i < b; ++i) evals[i] = f(vals[i]);
    });
    double acc = 0.0;
    for (std::size_t i = 0; i < evals.size(); ++i) acc += weights[i] * evals[i];
    // near-zero stub: integrand ~ f(lo) tau^q below lo
    acc += evals.front() * std::pow(lo, 1.0 + q) / (1.0 + q);
    return acc;
}

}  // namespace

double heat_block_moment(int j, double beta, double tau, const GaussianSpec& gspec,
                         const BlockIntegralConfig& cfg) {
    if (j < 1) throw std::invalid_argument("heat_block_moment: j must be >= 1");
    if (gspec.a.dim != 1)
        throw std::invalid_argument("heat_block_moment: desk-scale implementation is 1-d");
    const double a_int = gspec.a.integral(gspec.t - tau, gspec.t)[0];
    const double w = std::ldexp(1.0, 2 * j) * a_int;  // rescaled diffusion time
    const double ly = cfg.radius_y * (1.0 + std::sqrt(std::max(w, 0.0)));
    const std::size_t ny = std::max(cfg.base_ny, next_pow2(2.0 * ly * 2.6 / std::numbers::pi));
    std::vector<std::complex<double>> spec(ny);
    const double dzeta = std::numbers::pi / ly;
    for (std::size_t iy = 0; iy < ny; ++iy) {
        const long kk = (iy < ny / 2) ? long(iy) : long(iy) - long(ny);
        const double zeta = dzeta * double(kk);
        const double sgn = (iy % 2 == 0) ? 1.0 : -1.0;
        spec[iy] = sgn * unit_ring(std::abs(zeta)) * std::exp(-0.5 * w * zeta * zeta);
    }
    const double m_scaled = weighted_abs_integral_1d(spec, ny, ly, beta);
    return std::pow(2.0, -beta * j) * m_scaled;
}

double heat_block_integral(int j, double beta, double t, const GaussianSpec& gspec,
                           const BlockIntegralConfig& cfg) {
    const double tau_scale = std::ldexp(1.0, -2 * j);
    const double hi = std::min(t, cfg.w_cut * 16.0 * tau_scale);
    const double lo = cfg.w_floor * tau_scale;
    return log_time_quadrature(lo, hi, 0.0, cfg.panels_per_decade, [&](double tau) {
        return heat_block_moment(j, beta, tau, gspec, cfg);
    });
}

namespace {

// exponent of the rescaled twisted cf:
//   c_alpha int_s^t kappa0(r) |2^{sv} theta - Pi_{s,r} 2^{sx} zeta|^alpha dr
double twisted_exponent(const KineticKernelSpec& k, double sxzeta, double svtheta, double s,
                        double t) {
    const double c_a = symbol_constant(k.alpha);
    auto G = [&](double z) {
        return std::copysign(std::pow(std::abs(z), 1.0 + k.alpha), z) / (1.0 + k.alpha);
    };
    // merge segment boundaries
    std::vector<double> cuts{s, t};
    for (double c : k.kappa0.knots)
        if (c > s && c < t) cuts.push_back(c);
    for (double c : k.U.knots)
        if (c > s && c < t) cuts.push_back(c);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    double acc = 0.0;
    double pi_acc = 0.0;  // Pi_{s, r0}
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double r0 = cuts[i], r1 = cuts[i + 1];
        const double mid = 0.5 * (r0 + r1);
        const double kap = k.kappa0.at(mid);
        const double u = k.U.at(mid);
        const double a0 = svtheta - pi_acc * sxzeta;
        const double b = -u * sxzeta;
        if (b == 0.0) {
            acc += kap * (r1 - r0) * std::pow(std::abs(a0), k.alpha);
        } else {
            acc += kap * (G(a0 + b * (r1 - r0)) - G(a0)) / b;
        }
        pi_acc += u * (r1 - r0);
    }
    return c_a * acc;
}

}  // namespace

double kinetic_block_moment(int j, double beta, double gamma, double tau,
                            const KineticKernelSpec& kspec, KineticBlockMode mode,
                            const BlockIntegralConfig& cfg) {
    if (j < 1) throw std::invalid_argument("kinetic_block_moment: j must be >= 1");
    kspec.validate();
    const double alpha = kspec.alpha;
    const double a1 = 1.0 + alpha;
    const double sx = (mode == KineticBlockMode::aniso) ? a1 * j : double(j);
    const double sv = (mode == KineticBlockMode::aniso) ? double(j) : double(j) / a1;
    const double s = kspec.U.knots.front();  // experiments place s at 0
    const double t0 = s + tau;

    // rescaled elapsed time and shear spread
    const double umax = std::max(std::abs(kspec.U.max_value()), std::abs(kspec.U.min_value()));
    const double w_eff = (mode == KineticBlockMode::aniso)
                             ? std::pow(2.0, alpha * j) * tau
                             : std::pow(2.0, alpha * double(j) / a1) * tau;
    const double spread = umax * std::pow(w_eff, 1.0 + 1.0 / alpha);
    const double ly = cfg.radius_y + 1.5 * spread;
    double lu;
    if (mode == KineticBlockMode::aniso) {
        lu = cfg.radius_u + 10.0 * std::pow(w_eff, 1.0 / alpha);
    } else {
        // no v-band limit in x-only mode: the grid follows the kernel scale
        lu = cfg.radius_u * std::max(std::pow(w_eff, 1.0 / alpha), 1e-8);
    }

    const double ring_zeta = (mode == KineticBlockMode::aniso) ? std::pow(2.0, a1) * 2.0 : 4.0;
    const std::size_t ny =
        std::max(cfg.base_ny, next_pow2(2.0 * ly * ring_zeta * 1.25 / std::numbers::pi));
    std::size_t nu;
    if (mode == KineticBlockMode::aniso) {
        nu = std::max(cfg.base_nu, next_pow2(2.0 * lu * 4.0 * 1.25 / std::numbers::pi));
    } else {
        nu = std::max<std::size_t>(1024, cfg.base_nu);
    }

    std::vector<std::complex<double>> spec(ny * nu);
    const double dzeta = std::numbers::pi / ly;
    const double dtheta = std::numbers::pi / lu;
    parallel_for(ny, [&](std::size_t lo_i, std::size_t hi_i) {
        for (std::size_t iy = lo_i; iy < hi_i; ++iy) {
            const long ky = (iy < ny / 2) ? long(iy) : long(iy) - long(ny);
            const double zeta = dzeta * double(ky);
            const double sgy = (iy % 2 == 0) ? 1.0 : -1.0;
            for (std::size_t iu = 0; iu < nu; ++iu) {
                const long ku = (iu < nu / 2) ? long(iu) : long(iu) - long(nu);
                const double theta = dtheta * double(ku);
                const double sgu = (iu % 2 == 0) ? 1.0 : -1.0;
                double bump;
                if (mode == KineticBlockMode::aniso) {
                    const double gauge = std::pow(std::abs(zeta), 1.0 / a1) + std::abs(theta);
                    bump = unit_ring(gauge);
                } else {
                    bump = unit_ring(std::abs(zeta));
                }
                if (bump == 0.0) {
                    spec[iy * nu + iu] = 0.0;
                    continue;
                }
                const double ex = twisted_exponent(kspec, std::pow(2.0, sx) * zeta,
                                                   std::pow(2.0, sv) * theta, s, t0);
                spec[iy * nu + iu] = sgy * sgu * bump * std::exp(-ex);
            }
        }
    });
    const double m_scaled = weighted_abs_integral_2d(spec, ny, nu, ly, lu, beta, gamma);
    return std::pow(2.0, -(sx * beta + sv * gamma)) * m_scaled;
}

double kinetic_block_integral(int j, double q, double beta, double gamma, double t,
                              const KineticKernelSpec& kspec, KineticBlockMode mode,
                              const BlockIntegralConfig& cfg) {
    if (!(q > -1.0)) throw std::invalid_argument("kinetic_block_integral: q must be > -1");
    if (!(beta >= 0.0 && gamma >= 0.0))
        throw std::invalid_argument("kinetic_block_integral: beta, gamma must be >= 0");
    if (beta + gamma >= kspec.alpha)
        throw std::invalid_argument("kinetic_block_integral: needs beta + gamma < alpha");
    const double a1 = 1.0 + kspec.alpha;
    const double tau_scale = (mode == KineticBlockMode::aniso)
                                 ? std::pow(2.0, -kspec.alpha * j)
                                 : std::pow(2.0, -kspec.alpha * double(j) / a1);
    const double hi = std::min(t, cfg.w_cut * tau_scale);
    const double lo = cfg.w_floor * tau_scale;
    return log_time_quadrature(lo, hi, q, cfg.panels_per_decade, [&](double tau) {
        return kinetic_block_moment(j, beta, gamma, tau, kspec, mode, cfg);
    });
}

}  // namespace lpk
