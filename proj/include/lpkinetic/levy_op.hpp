#pragma once

#include <functional>

#include "lpkinetic/field.hpp"

namespace lpk {

// Quadrature layout for the nonlocal operator
//   L f(x,v) = int (f(x,v+w) + f(x,v-w) - 2 f(x,v)) kappa(x,v,w) dw/|w|^{1+alpha}
// in one velocity dimension: inner region by 4th order Taylor, middle region by
// log-spaced Gauss-Legendre panels, outer tail analytic (kappa is assumed
// constant in w beyond r_outer; catalog kernels satisfy this).
struct LevyOpSpec {
    double alpha = 1.5;
    // kappa as a function of (state, w); state may be empty for w-only kernels
    std::function<double(std::span<const double>, double)> kappa =
        [](std::span<const double>, double) { return 1.0; };
    double r_inner = 0.0;      // 0 = auto from the band limit / frequency
    double r_outer = 0.0;      // 0 = auto
    std::size_t panels_per_octave = 3;
    std::size_t gl_nodes = 8;  // per panel

    void validate() const;
};

struct LevyValue {
    double value = 0.0;
    double error_estimate = 0.0;
};

// Q(z) = int_z^inf (1-cos u) u^{-1-alpha} du with Q(0) closed form
double one_minus_cos_tail(double z, double alpha);

// delta^(2) symbol by quadrature: S(h) = int 2(cos(hw)-1) kappa(w) dw/|w|^{1+alpha},
// kappa evaluated with empty state. Exact symbol for constant kappa is
// -kappa c_alpha |h|^alpha.
LevyValue levy_symbol_quadrature(double h, const LevyOpSpec& spec);

// operator applied to a periodic band-limited field; v = last axis
struct LevyFieldResult {
    Field field;
    double error_estimate = 0.0;
};
LevyFieldResult apply_levy_op(const Field& f, const LevyOpSpec& spec);

// pointwise operator on a 1-d section v -> f(v) (non-periodic data); the
// caller supplies second and fourth v-derivatives at v for the inner region
double levy_op_pointwise(const std::function<double(double)>& section, double v,
                         std::span<const double> state, const LevyOpSpec& spec, double d2,
                         double d4);

}  // namespace lpk
