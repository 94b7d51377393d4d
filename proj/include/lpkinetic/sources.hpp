#pragma once

#include <cstdint>
#include <vector>

#include "lpkinetic/field.hpp"

namespace lpk {

// Lacunary and band-limited test functions. Mode frequencies are snapped to
// the grid lattice so the fields are exactly periodic and band-limited.

// sum_k 2^{-beta k} cos(c 2^k x + theta_k) along one axis, k = k_min..k_max
Field weierstrass_axis(const GridSpec& grid, std::size_t axis, double beta, int k_min, int k_max,
                       std::uint64_t seed, double base_freq = 0.9);

// anisotropic lacunary sum with prescribed block profile 2^{-beta k}: x-modes
// at gauge 2^k carry frequency ~ 2^{(1+alpha)k}, v-modes ~ 2^k. Cosine phases
// (zero v-gradient at the origin) when `cosine_phases` is set.
Field weierstrass_aniso(const GridSpec& grid, double alpha, double beta, int k_min, int k_max,
                        std::uint64_t seed, bool cosine_phases = false);

// random real field with spectrum inside |xi|_axis <= cap per axis
Field random_band_limited(const GridSpec& grid, const std::vector<double>& freq_cap,
                          std::uint64_t seed);

// v-axis mode ladder with block profile 2^{sigma l}, l = l_min..l_max (used for
// negative-regularity test inputs g in C^{-|sigma|})
Field profile_ladder_axis(const GridSpec& grid, std::size_t axis, double sigma, int l_min,
                          int l_max, std::uint64_t seed, double base_freq = 0.9);

double snap_to_lattice(double freq, const GridSpec& grid, std::size_t axis);

}  // namespace lpk
