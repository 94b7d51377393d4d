#include "lpkinetic/jump_map.hpp"

#include <cmath>
#include <stdexcept>

namespace lpk {

namespace {

constexpr double kGlNode8[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                                -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                                0.7966664774136267,  0.9602898564975363};
constexpr double kGlWeight8[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                  0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                  0.2223810344533745, 0.1012285362903763};

}  // namespace

void JumpMapSpec::validate() const {
    if (!(alpha > 0.0 && alpha < 2.0))
        throw std::invalid_argument("JumpMapSpec: alpha must be in (0,2)");
}

double plain_tail(double z, double alpha) {
    return (std::pow(z, -alpha) - 1.0) / alpha;
}

double kappa_tail(const JumpMapSpec& spec, double x, double y) {
    if (!(y > 0.0 && y <= 1.0)) throw std::invalid_argument("kappa_tail: y must be in (0,1]");
    if (y == 1.0) return 0.0;
    // r = y e^u, u in [0, ln(1/y)]: H = y^{-alpha} int_0^L kappa(x, y e^u) e^{-alpha u} du
    const double a = spec.alpha;
    const double length = std::log(1.0 / y);
    const double span = std::min(length, 45.0 / a);
    const double step = span / double(spec.tail_panels);
    double acc = 0.0;
    for (std::size_t p = 0; p < spec.tail_panels; ++p) {
        const double mid = step * (double(p) + 0.5), half = 0.5 * step;
        for (int i = 0; i < 8; ++i) {
            const double u = mid + half * kGlNode8[i];
            acc += kGlWeight8[i] * half * spec.kappa(x, y * std::exp(u)) * std::exp(-a * u);
        }
    }
    if (span < length) {
        // frozen-kappa remainder, relative size e^{-45} of the head
        const double kap = spec.kappa(x, y * std::exp(span));
        acc += kap * (std::exp(-a * span) - std::exp(-a * length)) / a;
    }
    return std::pow(y, -a) * acc;
}

double jump_map_phi(const JumpMapSpec& spec, double x, double z, double tol) {
    spec.validate();
    if (z == 0.0) return 0.0;
    if (!(std::abs(z) <= 1.0))
        throw std::invalid_argument("jump_map_phi: z must lie in [-1,1]");
    const double za = std::abs(z);
    const double target = plain_tail(za, spec.alpha);
    if (target == 0.0) return std::copysign(1.0, z);
    // bracket on log y: H decreasing from +inf to 0 on (0,1]
    double lo = std::log(za) * 4.0 - 8.0;  // generous lower bracket in log space
    double hi = 0.0;
    while (kappa_tail(spec, x, std::exp(lo)) < target) lo -= 4.0;
    for (int it = 0; it < 90; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double h = kappa_tail(spec, x, std::exp(mid));
        if (h > target)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < tol) break;
    }
    // Newton polish in y: H'(y) = -kappa(x,y) y^{-1-alpha}
    double y = std::exp(0.5 * (lo + hi));
    for (int it = 0; it < 4; ++it) {
        const double h = kappa_tail(spec, x, y);
        const double hp = -spec.kappa(x, y) * std::pow(y, -1.0 - spec.alpha);
        const double step = (h - target) / hp;
        const double ynew = y - step;
        if (ynew > 0.0 && ynew <= 1.0) y = ynew;
    }
    return std::copysign(y, z);
}

double jump_map_phi_constant(double c, double alpha, double z) {
    if (z == 0.0) return 0.0;
    const double za = std::abs(z);
    const double y = std::pow(std::pow(za, -alpha) / c + 1.0 - 1.0 / c, -1.0 / alpha);
    return std::copysign(y, z);
}

double jump_map_origin_slope(const JumpMapSpec& spec, double x) {
    return std::pow(spec.kappa(x, 0.0), 1.0 / spec.alpha);
}

PhiTable::PhiTable(const JumpMapSpec& spec, double state_min, double state_max,
                   std::size_t n_state, double z_min, std::size_t n_z)
    : spec_(spec), s_min_(state_min), s_max_(state_max), lz_min_(std::log(z_min)), ns_(n_state),
      nz_(n_z) {
    spec_.validate();
    if (ns_ < 2 || nz_ < 2) throw std::invalid_argument("PhiTable: need at least 2x2 nodes");
    values_.resize(ns_ * nz_);
    slopes_.resize(ns_);
    const double ds = (s_max_ - s_min_) / double(ns_ - 1);
    const double dlz = -lz_min_ / double(nz_ - 1);
    for (std::size_t is = 0; is < ns_; ++is) {
        const double state = s_min_ + ds * double(is);
        slopes_[is] = jump_map_origin_slope(spec_, state);
        for (std::size_t iz = 0; iz < nz_; ++iz) {
            const double z = std::exp(lz_min_ + dlz * double(iz));
            values_[is * nz_ + iz] = jump_map_phi(spec_, state, std::min(z, 1.0));
        }
    }
}

double PhiTable::origin_slope(double state) const {
    const double ds = (s_max_ - s_min_) / double(ns_ - 1);
    double si = (state - s_min_) / ds;
    si = std::max(0.0, std::min(si, double(ns_ - 1) - 1e-12));
    const std::size_t i0 = std::size_t(si);
    const double w = si - double(i0);
    return (1.0 - w) * slopes_[i0] + w * slopes_[i0 + 1];
}

double PhiTable::operator()(double state, double z) const {
    if (z == 0.0) return 0.0;
    const double za = std::min(std::abs(z), 1.0);
    const double lz = std::log(za);
    if (lz <= lz_min_) return std::copysign(origin_slope(state) * za, z);
    const double ds = (s_max_ - s_min_) / double(ns_ - 1);
    const double dlz = -lz_min_ / double(nz_ - 1);
    double si = (state - s_min_) / ds;
    si = std::max(0.0, std::min(si, double(ns_ - 1) - 1e-12));
    double zi = (lz - lz_min_) / dlz;
    zi = std::max(0.0, std::min(zi, double(nz_ - 1) - 1e-12));
    const std::size_t i0 = std::size_t(si), k0 = std::size_t(zi);
    const double ws = si - double(i0), wz = zi - double(k0);
    const double v00 = values_[i0 * nz_ + k0], v01 = values_[i0 * nz_ + k0 + 1];
    const double v10 = values_[(i0 + 1) * nz_ + k0], v11 = values_[(i0 + 1) * nz_ + k0 + 1];
    const double y = (1.0 - ws) * ((1.0 - wz) * v00 + wz * v01) +
                     ws * ((1.0 - wz) * v10 + wz * v11);
    return std::copysign(y, z);
}

}  // namespace lpk
