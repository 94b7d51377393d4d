#pragma once

#include <vector>

#include "lpkinetic/field.hpp"
#include "lpkinetic/partition.hpp"
#include "lpkinetic/rng.hpp"

namespace lpk {

// per-block sup norms s_j = max |R_j f|, j = 0..j_max
struct BlockSpectrum {
    std::vector<double> sup;
};

struct BesovResult {
    double norm = 0.0;
    BlockSpectrum profile;
};

// R_j f = (phi_j f^)^{-1}
Field block_apply(const Field& f, int j, const DyadicPartition& p);

// S_k f = sum_{j<k} R_j f, realized as the multiplier phi_0(2^{-a(k-1)} xi)
Field low_freq_cutoff(const Field& f, int k, const DyadicPartition& p);

// sup_j 2^{sj} ||R_j f||_inf together with the block profile
BesovResult besov_norm(const Field& f, double s, const DyadicPartition& p);

// grid displacement: whole cells per axis, periodic wraparound
struct Displacement {
    std::vector<long> cells;
};

// delta_h^order f; symmetric mode computes delta_h^* delta_h f
Field difference_op(const Field& f, const Displacement& h, int order, bool symmetric = false);

// Displacement set used by zygmund_norm: axis-aligned shifts of 1,2,4,...,N/4
// cells plus `random_count` seeded lattice vectors.
std::vector<Displacement> zygmund_displacements(const GridSpec& grid, std::uint64_t seed,
                                                std::size_t random_count = 64);

// ||f||_inf + sup_h ||delta_h^{[s]+1} f||_inf / |h|_a^s over the displacement set.
// [s] is the greatest integer strictly below s.
double zygmund_norm(const Field& f, double s, const AnisotropyIndex& idx,
                    const std::vector<Displacement>& h_set);

struct BonyResult {
    Field low_high;   // T_f g
    Field high_low;   // T_g f
    Field diagonal;   // R(f,g)
    double residual;  // max |T_f g + T_g f + R(f,g) - f g|
};

BonyResult bony_decompose(const Field& f, const Field& g, const DyadicPartition& p);

}  // namespace lpk
