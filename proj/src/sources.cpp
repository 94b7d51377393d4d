#include "lpkinetic/sources.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lpkinetic/rng.hpp"

namespace lpk {

double snap_to_lattice(double freq, const GridSpec& grid, std::size_t axis) {
    const double df = std::numbers::pi / grid.half_width[axis];
    double snapped = std::round(freq / df) * df;
    if (snapped == 0.0 && freq != 0.0) snapped = df;
    if (std::abs(snapped) >= grid.nyquist(axis))
        throw std::invalid_argument("snap_to_lattice: frequency beyond the grid Nyquist");
    return snapped;
}

Field weierstrass_axis(const GridSpec& grid, std::size_t axis, double beta, int k_min, int k_max,
                       std::uint64_t seed, double base_freq) {
    Rng rng(seed, 0x77a5);
    std::vector<double> vals(grid.size(), 0.0);
    for (int k = k_min; k <= k_max; ++k) {
        const double freq = snap_to_lattice(base_freq * std::pow(2.0, k), grid, axis);
        const double amp = std::pow(2.0, -beta * k);
        const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
        for (std::size_t i = 0; i < vals.size(); ++i) {
            const auto multi = grid.unflat(i);
            vals[i] += amp * std::cos(freq * grid.coord(axis, multi[axis]) + phase);
        }
    }
    return Field(grid, std::move(vals));
}

Field weierstrass_aniso(const GridSpec& grid, double alpha, double beta, int k_min, int k_max,
                        std::uint64_t seed, bool cosine_phases) {
    if (grid.axes() != 2) throw std::invalid_argument("weierstrass_aniso: expects a 2-d grid");
    Rng rng(seed, 0x77b6);
    std::vector<double> vals(grid.size(), 0.0);
    const std::size_t nx = grid.points[0], nv = grid.points[1];
    for (int k = k_min; k <= k_max; ++k) {
        const double fx = snap_to_lattice(0.9 * std::pow(2.0, (1.0 + alpha) * k), grid, 0);
        const double fv = snap_to_lattice(0.9 * std::pow(2.0, k), grid, 1);
        const double amp = std::pow(2.0, -beta * k);
        const double phx = cosine_phases ? 0.0 : rng.uniform(0.0, 2.0 * std::numbers::pi);
        const double phv = cosine_phases ? 0.0 : rng.uniform(0.0, 2.0 * std::numbers::pi);
        for (std::size_t ix = 0; ix < nx; ++ix) {
            const double cx = amp * std::cos(fx * grid.coord(0, ix) + phx);
            for (std::size_t iv = 0; iv < nv; ++iv) {
                vals[ix * nv + iv] += cx + amp * std::cos(fv * grid.coord(1, iv) + phv);
            }
        }
    }
    return Field(grid, std::move(vals));
}

Field random_band_limited(const GridSpec& grid, const std::vector<double>& freq_cap,
                          std::uint64_t seed) {
    if (freq_cap.size() != grid.axes())
        throw std::invalid_argument("random_band_limited: one frequency cap per axis");
    Rng rng(seed, 0x77c7);
    std::vector<std::complex<double>> spec(grid.size(), 0.0);
    // fill the low-frequency box with random coefficients, then symmetrize by
    // taking the real part after the inverse transform
    for (std::size_t i = 0; i < spec.size(); ++i) {
        const auto multi = grid.unflat(i);
        bool inside = true;
        for (std::size_t ax = 0; ax < grid.axes(); ++ax)
            inside = inside && std::abs(grid.freq(ax, multi[ax])) <= freq_cap[ax];
        if (inside) spec[i] = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    }
    Field raw = Field::from_spectrum(grid, std::move(spec));
    // normalize to unit sup
    const double m = raw.max_abs();
    return (m > 0.0) ? raw.scaled(1.0 / m) : raw;
}

Field profile_ladder_axis(const GridSpec& grid, std::size_t axis, double sigma, int l_min,
                          int l_max, std::uint64_t seed, double base_freq) {
    Rng rng(seed, 0x77d8);
    std::vector<double> vals(grid.size(), 0.0);
    for (int l = l_min; l <= l_max; ++l) {
        const double freq = snap_to_lattice(base_freq * std::pow(2.0, l), grid, axis);
        const double amp = std::pow(2.0, sigma * l);
        const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
        for (std::size_t i = 0; i < vals.size(); ++i) {
            const auto multi = grid.unflat(i);
            vals[i] += amp * std::cos(freq * grid.coord(axis, multi[axis]) + phase);
        }
    }
    return Field(grid, std::move(vals));
}

}  // namespace lpk
