#pragma once

#include <cstddef>
#include <vector>

#include "lpkinetic/anisotropy.hpp"

namespace lpk {

// Periodic grid on the box prod_axis [-L_axis, L_axis) with N_axis points per
// axis (powers of two). Axis `axis` belongs to anisotropy group group_of[axis].
struct GridSpec {
    std::vector<double> half_width;       // L per axis
    std::vector<std::size_t> points;      // N per axis (power of two)
    std::vector<std::size_t> group_of;    // axis -> anisotropy group

    std::size_t axes() const { return points.size(); }
    std::size_t size() const;             // total number of grid nodes
    double spacing(std::size_t axis) const { return 2.0 * half_width[axis] / double(points[axis]); }
    double cell_volume() const;

    // node coordinate along axis: x_i = -L + i * spacing, so x_{N/2} = 0
    double coord(std::size_t axis, std::size_t i) const {
        return -half_width[axis] + double(i) * spacing(axis);
    }
    // DFT frequency for index k along axis (standard wraparound ordering)
    double freq(std::size_t axis, std::size_t k) const;
    // largest resolved |frequency| along axis
    double nyquist(std::size_t axis) const;

    // flat row-major index helpers
    std::size_t flat(const std::vector<std::size_t>& multi) const;
    std::vector<std::size_t> unflat(std::size_t flat_index) const;

    void validate() const;
};

// uniform 1-d grid
GridSpec make_grid_1d(double half_width, std::size_t n);
// 2-d kinetic grid (x axis in group 0, v axis in group 1)
GridSpec make_grid_2d(double half_width_x, std::size_t nx, double half_width_v, std::size_t nv);

}  // namespace lpk
