#include "lpkinetic/commutator.hpp"

#include <cmath>
#include <stdexcept>

namespace lpk {

namespace {

double x_ring(double xi, int j) {
    const double r = std::abs(xi);
    if (j == 0) return smooth_transition(r);
    return smooth_transition(std::ldexp(r, -j)) - smooth_transition(std::ldexp(r, -(j - 1)));
}

}  // namespace

Field x_block_apply(const Field& f, int j) {
    if (j < 0) throw std::invalid_argument("x_block_apply: j must be >= 0");
    return f.apply_multiplier([j](std::span<const double> xi) { return x_ring(xi[0], j); });
}

Field x_block_commutator(const Field& f, const Field& g, int j) {
    return x_block_apply(f * g, j) - f * x_block_apply(g, j);
}

double commutator_sup(const Field& f, const Field& g, int j) {
    return x_block_commutator(f, g, j).max_abs();
}

double commutator_holder(const Field& f, const Field& g, int j, double beta, int l_max) {
    const Field h = x_block_commutator(f, g, j);
    double norm = 0.0;
    for (int l = 0; l <= l_max; ++l)
        norm = std::max(norm, std::pow(2.0, beta * l) * x_block_apply(h, l).max_abs());
    return norm;
}

double commutator_weighted_origin(const Field& f, const Field& g, int j,
                                  const DyadicPartition& p) {
    const GridSpec& grid = f.grid();
    if (grid.axes() != 2)
        throw std::invalid_argument("commutator_weighted_origin: expects a 2-d (x,v) grid");
    std::vector<std::size_t> origin{grid.points[0] / 2, grid.points[1] / 2};
    const std::size_t o = grid.flat(origin);
    const double dvf0 = f.derivative(1, 1).value(o);
    if (std::abs(dvf0) > 1e-9 * (1.0 + f.max_abs()))
        throw std::invalid_argument(
            "commutator_weighted_origin: needs grad_v f(0,0) = 0 on the torus (use a catalog "
            "field with cosine phases)");
    const Field ftilde = f - Field::constant(grid, f.value(o));
    const Field h = block_apply(ftilde * g, j, p) - ftilde * block_apply(g, j, p);
    return std::abs(h.value(o));
}

}  // namespace lpk
