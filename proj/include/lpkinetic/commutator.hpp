#pragma once

#include "lpkinetic/lp_ops.hpp"

namespace lpk {

// x-direction block commutator [R^x_j, f] g = R^x_j(fg) - f R^x_j g, with R^x_j
// the isotropic dyadic block acting on axis 0 only.
Field x_block_apply(const Field& f, int j);
Field x_block_commutator(const Field& f, const Field& g, int j);

// sup norm of the commutator (rate 2^{-j(beta+gamma)} for f in C^beta_x,
// g in C^gamma_x)
double commutator_sup(const Field& f, const Field& g, int j);

// Holder-level output: sup_l 2^{beta l} ||R^x_l [R^x_j, f] g||_inf
double commutator_holder(const Field& f, const Field& g, int j, double beta, int l_max);

// anisotropic pointwise quantity at the origin: |[R^a_j, f - f(0,0)] g|(0,0).
// Requires grad_v f(0,0) = 0 so the linear correction of the lemma vanishes on
// the torus (catalog fields are built that way); throws otherwise.
double commutator_weighted_origin(const Field& f, const Field& g, int j, const DyadicPartition& p);

}  // namespace lpk
