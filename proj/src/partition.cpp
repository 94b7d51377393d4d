#include "lpkinetic/partition.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lpk {

double smooth_transition(double r) {
    if (r <= 1.0) return 1.0;
    if (r >= 2.0) return 0.0;
    const double up = std::exp(-1.0 / (2.0 - r));
    const double down = std::exp(-1.0 / (r - 1.0));
    return up / (up + down);
}

DyadicPartition::DyadicPartition(AnisotropyIndex idx, GridSpec grid, int j_max)
    : idx_(std::move(idx)), grid_(std::move(grid)), j_max_(j_max) {}

double DyadicPartition::phi0_scaled(std::span<const double> xi, int j) const {
    // |2^{-aj} xi|_a = 2^{-j} |xi|_a, so scaling the gauge is enough
    const double r = std::ldexp(anisotropic_distance(xi, idx_), -j);
    return smooth_transition(r);
}

double DyadicPartition::phi(std::span<const double> xi, int j) const {
    if (j == 0) return phi0_scaled(xi, 0);
    return phi0_scaled(xi, j) - phi0_scaled(xi, j - 1);
}

DyadicPartition build_partition(const AnisotropyIndex& idx, const GridSpec& grid, int j_max) {
    idx.validate();
    grid.validate();
    if (j_max < 0) throw std::invalid_argument("build_partition: j_max must be >= 0");
    if (grid.axes() != idx.total_dim())
        throw std::invalid_argument("build_partition: grid axes do not match anisotropy dimension");
    for (std::size_t ax = 0; ax < grid.axes(); ++ax) {
        const double a = idx.a[grid.group_of[ax]];
        const double needed = std::pow(2.0, a * double(j_max + 1));
        if (grid.nyquist(ax) <= needed) {
            throw std::invalid_argument(
                "build_partition: j_max too large for grid, limiting axis " + std::to_string(ax) +
                " resolves |xi| < " + std::to_string(grid.nyquist(ax)) + " but needs > " +
                std::to_string(needed));
        }
    }
    return DyadicPartition(idx, grid, j_max);
}

}  // namespace lpk
