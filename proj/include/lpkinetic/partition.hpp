#pragma once

#include <span>

#include "lpkinetic/anisotropy.hpp"
#include "lpkinetic/grid.hpp"

namespace lpk {

// C-infinity transition: 1 on (-inf,1], 0 on [2,inf), glued from exp(-1/x).
double smooth_transition(double r);

// Dyadic partition built on the gauge |.|_a: the base bump is
// phi_0(xi) = psi(|xi|_a) (1 on B_1^a, 0 outside B_2^a) and the rings are
// phi_j(xi) = phi_0(2^{-aj} xi) - phi_0(2^{-a(j-1)} xi), j >= 1.
class DyadicPartition {
  public:
    DyadicPartition(AnisotropyIndex idx, GridSpec grid, int j_max);

    int j_max() const { return j_max_; }
    const AnisotropyIndex& index() const { return idx_; }
    const GridSpec& grid() const { return grid_; }

    // phi_0 composed with the dilation 2^{-a j}
    double phi0_scaled(std::span<const double> xi, int j) const;
    // ring function phi_j (phi_0 itself for j = 0)
    double phi(std::span<const double> xi, int j) const;

  private:
    AnisotropyIndex idx_;
    GridSpec grid_;
    int j_max_;
};

// Nyquist check: every axis must resolve frequencies beyond 2^{a_i (j_max+1)}.
// Throws std::invalid_argument naming the limiting axis when it fails.
DyadicPartition build_partition(const AnisotropyIndex& idx, const GridSpec& grid, int j_max);

}  // namespace lpk
