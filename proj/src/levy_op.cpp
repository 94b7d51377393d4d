#include "lpkinetic/levy_op.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lpkinetic/kinetic.hpp"

namespace lpk {

namespace {

// 8-point Gauss-Legendre on [-1,1]
constexpr double kGlNode8[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                                -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                                0.7966664774136267,  0.9602898564975363};
constexpr double kGlWeight8[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                  0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                  0.2223810344533745, 0.1012285362903763};

template <typename F>
double gl_panel(const F& f, double a, double b) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < 8; ++i) acc += kGlWeight8[i] * f(mid + half * kGlNode8[i]);
    return acc * half;
}

struct WNode {
    double w;
    double weight;  // includes the 2/w^{1+alpha} measure factor (both signs)
};

// log-spaced GL nodes on [r_in, r_out] for int_{r_in}^{r_out} g(w) 2 dw / w^{1+alpha}
std::vector<WNode> middle_nodes(double r_in, double r_out, double alpha, std::size_t per_octave) {
    std::vector<WNode> nodes;
    const double lo = std::log(r_in), hi = std::log(r_out);
    const std::size_t panels =
        std::max<std::size_t>(1, std::size_t(std::ceil((hi - lo) / std::log(2.0) * double(per_octave))));
    const double step = (hi - lo) / double(panels);
    for (std::size_t p = 0; p < panels; ++p) {
        const double a = lo + step * double(p), b = a + step;
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (int i = 0; i < 8; ++i) {
            const double u = mid + half * kGlNode8[i];
            const double w = std::exp(u);
            // substitution w = e^u: dw = w du
            nodes.push_back({w, kGlWeight8[i] * half * 2.0 * std::pow(w, -alpha)});
        }
    }
    return nodes;
}

void auto_radii(const LevyOpSpec& spec, double freq_scale, double& r_in, double& r_out) {
    const double f = std::max(freq_scale, 1e-9);
    r_in = (spec.r_inner > 0.0) ? spec.r_inner : std::min(0.5, 0.25 / f);
    r_out = (spec.r_outer > 0.0) ? spec.r_outer : std::max(4.0, 24.0 / f);
}

}  // namespace

void LevyOpSpec::validate() const {
    if (!(alpha > 0.0 && alpha < 2.0))
        throw std::invalid_argument("LevyOpSpec: alpha must be in (0,2)");
}

double one_minus_cos_tail(double z, double alpha) {
    const double q0 = 0.5 * std::numbers::pi /
                      (std::tgamma(1.0 + alpha) * std::sin(0.5 * std::numbers::pi * alpha));
    if (z <= 0.0) return q0;
    // int_0^z (1-cos u) u^{-1-alpha} du: series on [0, 0.5], phase-resolved GL beyond
    double head = 0.0;
    const double zs = std::min(z, 0.5);
    head += std::pow(zs, 2.0 - alpha) / (2.0 * (2.0 - alpha));
    head -= std::pow(zs, 4.0 - alpha) / (24.0 * (4.0 - alpha));
    head += std::pow(zs, 6.0 - alpha) / (720.0 * (6.0 - alpha));
    if (z > 0.5) {
        auto g = [alpha](double u) { return (1.0 - std::cos(u)) * std::pow(u, -1.0 - alpha); };
        const std::size_t panels = std::max<std::size_t>(4, std::size_t((z - 0.5) * 2.0) + 1);
        const double step = (z - 0.5) / double(panels);
        for (std::size_t p = 0; p < panels; ++p)
            head += gl_panel(g, 0.5 + step * double(p), 0.5 + step * double(p + 1));
    }
    return q0 - head;
}

LevyValue levy_symbol_quadrature(double h, const LevyOpSpec& spec) {
    spec.validate();
    if (h == 0.0) return {0.0, 0.0};
    const double ah = std::abs(h);
    double r_in, r_out;
    auto_radii(spec, ah, r_in, r_out);
    const std::vector<double> empty;
    auto kap = [&](double w) { return spec.kappa(empty, w); };
    const double a = spec.alpha;
    const double k0 = kap(0.0);

    auto evaluate = [&](std::size_t per_octave) {
        // inner: Taylor of 2(cos(hw)-1) = -h^2 w^2 + h^4 w^4 / 12 + O(w^6)
        double val = k0 * (-h * h * 2.0 * std::pow(r_in, 2.0 - a) / (2.0 - a) +
                           std::pow(h, 4) * std::pow(r_in, 4.0 - a) / (6.0 * (4.0 - a)));
        // kappa variation near 0 is O(w^2); integrand finite at 0
        auto inner_corr = [&](double w) {
            const double hw = h * w;
            const double taylor = -hw * hw + std::pow(hw, 4) / 12.0;
            return (kap(w) - k0) * taylor * 2.0 * std::pow(w, -1.0 - a);
        };
        val += gl_panel(inner_corr, 0.0, r_in);
        // middle
        for (const auto& node : middle_nodes(r_in, r_out, a, per_octave))
            val += node.weight * 2.0 * (std::cos(h * node.w) - 1.0) * kap(node.w);
        // outer tail, kappa frozen at r_out
        const double z0 = ah * r_out;
        val += kap(r_out) * (-4.0) * std::pow(ah, a) * one_minus_cos_tail(z0, a);
        return val;
    };

    const double fine = evaluate(spec.panels_per_octave);
    const double coarse = evaluate(std::max<std::size_t>(1, spec.panels_per_octave / 2 + 1));
    return {fine, std::abs(fine - coarse)};
}

LevyFieldResult apply_levy_op(const Field& f, const LevyOpSpec& spec) {
    spec.validate();
    const GridSpec& g = f.grid();
    const std::size_t vaxis = g.axes() - 1;
    const double band = g.nyquist(vaxis);
    double r_in, r_out;
    auto_radii(spec, band, r_in, r_out);
    const double a = spec.alpha;

    const std::size_t axes = g.axes();
    auto state_of = [&](std::size_t flat, std::vector<double>& buf) {
        auto multi = g.unflat(flat);
        for (std::size_t ax = 0; ax < axes; ++ax) buf[ax] = g.coord(ax, multi[ax]);
    };

    // inner region: kappa(state,0) (d2 int w^2 + d4/12 int w^4) over [0, r_in]
    const Field d2 = f.derivative(vaxis, 2);
    const Field d4 = f.derivative(vaxis, 4);
    const double m2 = 2.0 * std::pow(r_in, 2.0 - a) / (2.0 - a);
    const double m4 = std::pow(r_in, 4.0 - a) / (6.0 * (4.0 - a));
    std::vector<double> out(f.size(), 0.0);
    std::vector<double> st(axes);
    for (std::size_t i = 0; i < out.size(); ++i) {
        state_of(i, st);
        out[i] = spec.kappa(st, 0.0) * (d2.value(i) * m2 + d4.value(i) * m4);
    }

    // middle region by exact spectral shifts
    const auto nodes = middle_nodes(r_in, r_out, a, spec.panels_per_octave);
    for (const auto& node : nodes) {
        const Field shifted = f.apply_multiplier([&](std::span<const double> xi) {
            return 2.0 * std::cos(xi[vaxis] * node.w) - 2.0;
        });
        for (std::size_t i = 0; i < out.size(); ++i) {
            state_of(i, st);
            out[i] += node.weight * spec.kappa(st, node.w) * shifted.value(i);
        }
    }
    // outer tail as the exact symbol multiplier with kappa frozen at r_out
    const Field tail = f.apply_multiplier([&](std::span<const double> xi) {
        const double h = std::abs(xi[vaxis]);
        if (h == 0.0) return 0.0;
        return -4.0 * std::pow(h, a) * one_minus_cos_tail(h * r_out, a);
    });
    for (std::size_t i = 0; i < out.size(); ++i) {
        state_of(i, st);
        out[i] += spec.kappa(st, r_out) * tail.value(i);
    }
    const double err =
        std::pow(band * r_in, 6.0) / 360.0 * std::pow(r_in, -a) * f.max_abs();
    return {Field(g, std::move(out)), err};
}

double levy_op_pointwise(const std::function<double(double)>& section, double v,
                         std::span<const double> state, const LevyOpSpec& spec, double d2,
                         double d4) {
    spec.validate();
    const double a = spec.alpha;
    double r_in = (spec.r_inner > 0.0) ? spec.r_inner : 0.05;
    double r_out = (spec.r_outer > 0.0) ? spec.r_outer : 64.0;
    double val = spec.kappa(state, 0.0) * (d2 * 2.0 * std::pow(r_in, 2.0 - a) / (2.0 - a) +
                                           d4 * std::pow(r_in, 4.0 - a) / (6.0 * (4.0 - a)));
    const double fv = section(v);
    for (const auto& node : middle_nodes(r_in, r_out, a, spec.panels_per_octave)) {
        const double delta2 = section(v + node.w) + section(v - node.w) - 2.0 * fv;
        val += node.weight * spec.kappa(state, node.w) * delta2;
    }
    // far tail: shifted values treated as negligible (caller chooses r_out so
    // that the section has decayed), -2f part analytic
    val += -2.0 * fv * spec.kappa(state, r_out) * 2.0 * std::pow(r_out, -a) / a;
    return val;
}

}  // namespace lpk
