#pragma once

#include <complex>
#include <vector>

#include "lpkinetic/field.hpp"
#include "lpkinetic/kinetic.hpp"
#include "lpkinetic/levy_op.hpp"
#include "lpkinetic/slope_fit.hpp"

namespace lpk {

// Plane-wave source amp * cos(xi x + eta v + phase); any real frequencies are
// allowed since the Duhamel solution is assembled mode by mode.
struct TrigMode {
    double xi = 0.0;
    double eta = 0.0;
    double amp = 1.0;
    double phase = 0.0;
};

struct TrigSource {
    std::vector<TrigMode> modes;
    double eval(double x, double v) const;
};

struct DuhamelConfig {
    KineticKernelSpec kernel;   // constant frozen coefficients, lambda inside
    double horizon = 1.0;
    std::size_t time_panels = 24;  // Gauss-Legendre panels for the s-integral
    TrigSource source;             // time-independent source
};

// u(t,.) = int_0^t P^lambda_{s,t} f ds evaluated per source mode; classical
// solution of d_t u = kappa0 L^(alpha)_v u + U v d_x u - lambda u + f, u(0)=0.
class DuhamelSolution {
  public:
    DuhamelSolution(const DuhamelConfig& cfg, double t);

    double time() const { return t_; }
    double value(double x, double v) const;
    Field on_grid(const GridSpec& grid) const;

    // residual d_t u - (kappa0 L u + U v d_x u - lambda u + f) on the grid;
    // the nonlocal term is evaluated through the w-quadrature symbol and the
    // time derivative by a centered difference of independent solves
    Field residual_on_grid(const GridSpec& grid, double dt = 1e-5) const;

    // sup_(grid) |R^a_j u| for j = 0..j_max (anisotropic kinetic blocks) and
    // the x-direction profile sup |R^x_j u|
    std::vector<double> aniso_profile(const GridSpec& grid, int j_max) const;
    std::vector<double> x_profile(const GridSpec& grid, int j_max) const;

  private:
    struct ModeTable {
        TrigMode mode;
        std::vector<double> s_nodes, s_weights;
        std::vector<double> gain;   // e^{lambda(s-t)} * cf(s,t)
        std::vector<double> shear;  // Pi_{s,t}
    };

    Field assemble(const GridSpec& grid,
                   const std::function<std::complex<double>(const ModeTable&, std::size_t)>& factor)
        const;

    DuhamelConfig cfg_;
    double t_;
    std::vector<ModeTable> tables_;
};

struct SchauderReport {
    SlopeFit aniso_fit;
    SlopeFit x_fit;
    double aniso_ratio_spread = 0.0;  // max/min of 2^{(alpha+beta) j} s_j over the fit range
    double x_ratio_spread = 0.0;
};

// block-decay report of the Duhamel solution against a source of known block
// profile: s_j(u) should decay like 2^{-(alpha+beta) j} (anisotropic) and
// 2^{-(gamma+alpha) j/(1+alpha)} (x-direction)
SchauderReport schauder_report(const DuhamelConfig& cfg, const GridSpec& grid, double beta,
                               double gamma, int j_min, int j_max);

}  // namespace lpk
