#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace lpk {

// Scaling geometry: n groups of coordinates, group i has dimension m[i] and
// scaling exponent a[i] >= 1. The gauge is |x|_a = sum_i |x_i|^{1/a_i} with
// |x_i| the Euclidean norm of group i.
struct AnisotropyIndex {
    std::vector<std::size_t> m;
    std::vector<double> a;

    std::size_t groups() const { return m.size(); }
    std::size_t total_dim() const;
    // exponent a for the group owning flat axis index `axis`
    double axis_exponent(std::size_t axis) const;

    void validate() const;  // throws std::invalid_argument on bad shape
};

// isotropic R^d: one group, a = 1
AnisotropyIndex isotropic_index(std::size_t d);

// kinetic specialization: two groups (x, v) of dimension d each, a = (1+alpha, 1)
AnisotropyIndex kinetic_index(double alpha, std::size_t d = 1);

// |x|_a = sum_i |x_i|^{1/a_i}; x.size() must equal idx.total_dim()
double anisotropic_distance(std::span<const double> x, const AnisotropyIndex& idx);

// t^{a} x (componentwise group dilation)
std::vector<double> dilate(std::span<const double> x, double t, const AnisotropyIndex& idx);

}  // namespace lpk
