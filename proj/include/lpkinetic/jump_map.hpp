#pragma once

#include <functional>
#include <vector>

namespace lpk {

// 1-d jump reparametrization of Lemma-8.1 type: an odd, strictly increasing
// map z -> Phi(x,z) on [-1,1] turning the kernel-weighted jump measure
// kappa(x,z) dz/|z|^{1+alpha} into the reference measure, i.e.
//   int_{B_1} f(Phi(x,z)) dz/|z|^{1+alpha} = int_{B_1} f(z) kappa(x,z) dz/|z|^{1+alpha}.
// On (0,1] this amounts to matching kappa-weighted and plain tails:
//   int_{Phi(x,z)}^1 kappa(x,r) r^{-1-alpha} dr = int_z^1 r^{-1-alpha} dr.
struct JumpMapSpec {
    double alpha = 1.5;
    std::function<double(double, double)> kappa = [](double, double) { return 1.0; };  // (x, z)
    std::size_t tail_panels = 12;  // GL panels for the log-substituted tail integral

    void validate() const;
};

// plain tail G(z) = int_z^1 r^{-1-alpha} dr = (z^{-alpha} - 1)/alpha
double plain_tail(double z, double alpha);

// kappa-weighted tail H(x,y) = int_y^1 kappa(x,r) r^{-1-alpha} dr via
// Gauss-Legendre after the substitution r = y e^u
double kappa_tail(const JumpMapSpec& spec, double x, double y);

// Phi(x,z) by monotone bracketing + Newton polish to `tol`
double jump_map_phi(const JumpMapSpec& spec, double x, double z, double tol = 1e-12);

// closed form for constant kappa == c: Phi(z) = (z^{-alpha}/c + 1 - 1/c)^{-1/alpha}
double jump_map_phi_constant(double c, double alpha, double z);

// slope at the origin: Phi(x,z) ~ kappa(x,0)^{1/alpha} z as z -> 0
double jump_map_origin_slope(const JumpMapSpec& spec, double x);

// tabulated map over (state, log|z|) with bilinear interpolation and the exact
// odd small-z asymptote; used by the path simulators
class PhiTable {
  public:
    PhiTable(const JumpMapSpec& spec, double state_min, double state_max, std::size_t n_state,
             double z_min = 1e-5, std::size_t n_z = 160);

    double operator()(double state, double z) const;
    double origin_slope(double state) const;
    const JumpMapSpec& spec() const { return spec_; }

  private:
    JumpMapSpec spec_;
    double s_min_, s_max_, lz_min_;
    std::size_t ns_, nz_;
    std::vector<double> values_;  // [state][log z] for z in [z_min, 1]
    std::vector<double> slopes_;  // origin slope per state node
};

}  // namespace lpk
