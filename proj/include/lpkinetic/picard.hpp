#pragma once

#include <array>
#include <cstdint>

#include "lpkinetic/jump_map.hpp"

namespace lpk {

// Space-time grid for the probabilistic solver: uniform slices on [0, horizon],
// x nodes on [-x_half, x_half], v nodes on [-v_halo, v_halo] with the inner
// [-v_core, v_core] part treated as the reporting core. The halo exists so the
// large-jump quadrature can read u away from the core; u is taken as 0 beyond.
struct SpaceTimeField {
    std::vector<double> times;
    std::vector<double> xs;
    std::vector<double> vs;
    std::vector<double> data;  // [time][x][v]

    double& at(std::size_t it, std::size_t ix, std::size_t iv) {
        return data[(it * xs.size() + ix) * vs.size() + iv];
    }
    double at(std::size_t it, std::size_t ix, std::size_t iv) const {
        return data[(it * xs.size() + ix) * vs.size() + iv];
    }
    // bilinear in (x,v) at slice it; zero outside the grid box
    double interp(std::size_t it, double x, double v) const;
};

struct PicardConfig {
    JumpMapSpec jump;               // kappa and alpha (alpha in (1,2))
    double lambda = 2.0;
    double horizon = 0.5;
    std::array<double, 2> drift{0.0, 0.0};  // constant (b1, b2)

    double x_half = 1.0;
    std::size_t nx = 11;
    double v_core = 2.0;
    std::size_t nv_core = 11;
    double v_halo = 8.0;

    std::size_t paths_core = 20000;
    std::size_t paths_halo = 2000;
    std::size_t time_nodes = 33;

    double small_jump_cutoff = 0.05;  // series truncation inside B_1
    double large_jump_wmax = 16.0;    // quadrature reach of the large-jump part
    std::size_t large_jump_octave_nodes = 10;

    std::size_t max_iterations = 8;
    std::uint64_t seed = 0;

    void validate() const;
    std::vector<double> v_nodes() const;  // core + halo, uniform spacing
    std::vector<double> x_nodes() const;
    std::vector<double> time_slices() const;
    std::size_t core_v_begin() const;
    std::size_t core_v_end() const;
};

// one path of the Phi-SDE dZ = (b1, b2) dt + (0, Phi(V_{t-}, w)) dN~ started at
// (x0, v0); returns (x, v) at the time slices
struct PhiPath {
    std::vector<double> times;
    std::vector<double> x;
    std::vector<double> v;
    std::size_t jump_count = 0;
};
PhiPath simulate_phi_sde(const PicardConfig& cfg, const PhiTable& phi, double x0, double v0,
                         std::uint64_t stream);

// u(s, z) = int_s^T e^{lambda (s-t)} E src(t, Z_{s,t}(z)) dt on all slices, by
// common-random-number Monte Carlo (one path ensemble shared by every node and
// every slice through time homogeneity)
struct FkResult {
    SpaceTimeField u;
    double core_se = 0.0;  // max standard error over core nodes at slice 0
};
FkResult feynman_kac_solve(const PicardConfig& cfg, const PhiTable& phi,
                           const std::function<double(std::size_t, double, double)>& src_slice);

// large-jump operator on one slice: (Lbar u)(x_i, v_k) by log-spaced quadrature
// over 1 < |w| <= wmax with the analytic frozen-kappa tail
std::vector<double> large_jump_apply(const PicardConfig& cfg, const SpaceTimeField& u,
                                     std::size_t it);

struct PicardHistory {
    std::vector<double> sup_diff;  // ||u_n - u_{n-1}||_inf over core x slices
    std::vector<double> ratio;     // consecutive quotients
    bool contracted = false;
};

struct PicardResult {
    PicardHistory history;
    SpaceTimeField u;        // final iterate
    SpaceTimeField large;    // Lbar u of the final iterate (all slices)
    double fk_se = 0.0;
};

// Picard iteration u_n = FK(f + Lbar u_{n-1}) for the full nonlocal equation
// d_s u + L u + b . grad u - lambda u + f = 0, u(T) = 0
PicardResult picard_solve(const PicardConfig& cfg,
                          const std::function<double(double, double)>& f);

}  // namespace lpk
