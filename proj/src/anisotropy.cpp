#include "lpkinetic/anisotropy.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lpk {

std::size_t AnisotropyIndex::total_dim() const {
    return std::accumulate(m.begin(), m.end(), std::size_t(0));
}

double AnisotropyIndex::axis_exponent(std::size_t axis) const {
    std::size_t off = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        off += m[i];
        if (axis < off) return a[i];
    }
    throw std::invalid_argument("axis index out of range for AnisotropyIndex");
}

void AnisotropyIndex::validate() const {
    if (m.size() != a.size() || m.empty())
        throw std::invalid_argument("AnisotropyIndex: m and a must be nonempty and equal length");
    for (auto mi : m)
        if (mi < 1) throw std::invalid_argument("AnisotropyIndex: group dimensions must be >= 1");
    for (auto ai : a)
        if (!(ai >= 1.0)) throw std::invalid_argument("AnisotropyIndex: scaling exponents must be >= 1");
}

AnisotropyIndex isotropic_index(std::size_t d) {
    AnisotropyIndex idx{{d}, {1.0}};
    idx.validate();
    return idx;
}

AnisotropyIndex kinetic_index(double alpha, std::size_t d) {
    AnisotropyIndex idx{{d, d}, {1.0 + alpha, 1.0}};
    idx.validate();
    return idx;
}

double anisotropic_distance(std::span<const double> x, const AnisotropyIndex& idx) {
    if (x.size() != idx.total_dim())
        throw std::invalid_argument("anisotropic_distance: point dimension mismatch");
    double dist = 0.0;
    std::size_t off = 0;
    for (std::size_t i = 0; i < idx.groups(); ++i) {
        double norm2 = 0.0;
        for (std::size_t k = 0; k < idx.m[i]; ++k) norm2 += x[off + k] * x[off + k];
        off += idx.m[i];
        if (norm2 > 0.0) dist += std::pow(std::sqrt(norm2), 1.0 / idx.a[i]);
    }
    return dist;
}

std::vector<double> dilate(std::span<const double> x, double t, const AnisotropyIndex& idx) {
    if (x.size() != idx.total_dim())
        throw std::invalid_argument("dilate: point dimension mismatch");
    std::vector<double> y(x.begin(), x.end());
    std::size_t off = 0;
    for (std::size_t i = 0; i < idx.groups(); ++i) {
        const double f = std::pow(t, idx.a[i]);
        for (std::size_t k = 0; k < idx.m[i]; ++k) y[off + k] *= f;
        off += idx.m[i];
    }
    return y;
}

}  // namespace lpk
