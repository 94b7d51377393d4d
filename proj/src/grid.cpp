#include "lpkinetic/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lpk {

std::size_t GridSpec::size() const {
    std::size_t n = 1;
    for (auto p : points) n *= p;
    return n;
}

double GridSpec::cell_volume() const {
    double v = 1.0;
    for (std::size_t ax = 0; ax < axes(); ++ax) v *= spacing(ax);
    return v;
}

double GridSpec::freq(std::size_t axis, std::size_t k) const {
    const std::size_t n = points[axis];
    const double base = std::numbers::pi / half_width[axis];
    const long kk = (k < n / 2) ? long(k) : long(k) - long(n);
    return base * double(kk);
}

double GridSpec::nyquist(std::size_t axis) const {
    return std::numbers::pi / half_width[axis] * double(points[axis] / 2);
}

std::size_t GridSpec::flat(const std::vector<std::size_t>& multi) const {
    std::size_t idx = 0;
    for (std::size_t ax = 0; ax < axes(); ++ax) idx = idx * points[ax] + multi[ax];
    return idx;
}

std::vector<std::size_t> GridSpec::unflat(std::size_t flat_index) const {
    std::vector<std::size_t> multi(axes());
    for (std::size_t ax = axes(); ax-- > 0;) {
        multi[ax] = flat_index % points[ax];
        flat_index /= points[ax];
    }
    return multi;
}

void GridSpec::validate() const {
    if (half_width.size() != points.size() || group_of.size() != points.size() || points.empty())
        throw std::invalid_argument("GridSpec: axis arrays must be nonempty and equal length");
    for (auto l : half_width)
        if (!(l > 0.0)) throw std::invalid_argument("GridSpec: half widths must be positive");
    for (auto n : points)
        if (n < 2 || (n & (n - 1)) != 0)
            throw std::invalid_argument("GridSpec: point counts must be powers of two >= 2");
}

GridSpec make_grid_1d(double half_width, std::size_t n) {
    GridSpec g{{half_width}, {n}, {0}};
    g.validate();
    return g;
}

GridSpec make_grid_2d(double half_width_x, std::size_t nx, double half_width_v, std::size_t nv) {
    GridSpec g{{half_width_x, half_width_v}, {nx, nv}, {0, 1}};
    g.validate();
    return g;
}

}  // namespace lpk
