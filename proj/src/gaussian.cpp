#include "lpkinetic/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lpk {

MatrixPath MatrixPath::constant(std::size_t dim, std::vector<double> value) {
    MatrixPath p;
    p.dim = dim;
    p.knots = {0.0};
    p.values = {std::move(value)};
    p.validate();
    return p;
}

void MatrixPath::validate() const {
    if (knots.empty() || values.size() != knots.size())
        throw std::invalid_argument("MatrixPath: one value per knot required");
    for (const auto& v : values)
        if (v.size() != dim * dim) throw std::invalid_argument("MatrixPath: bad matrix size");
    for (std::size_t k = 1; k < knots.size(); ++k)
        if (!(knots[k] > knots[k - 1]))
            throw std::invalid_argument("MatrixPath: knots must be strictly increasing");
}

std::vector<double> MatrixPath::at(double t) const {
    std::size_t k = 0;
    while (k + 1 < knots.size() && t >= knots[k + 1]) ++k;
    return values[k];
}

std::vector<double> MatrixPath::integral(double s, double t) const {
    if (!(t >= s)) throw std::invalid_argument("MatrixPath::integral: needs t >= s");
    std::vector<double> acc(dim * dim, 0.0);
    for (std::size_t k = 0; k < knots.size(); ++k) {
        const double seg_lo = std::max(s, knots[k]);
        const double seg_hi = (k + 1 < knots.size()) ? std::min(t, knots[k + 1]) : t;
        if (seg_hi > seg_lo)
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += (seg_hi - seg_lo) * values[k][i];
    }
    return acc;
}

std::vector<double> GaussianSpec::covariance() const { return a.integral(s, t); }

double matrix_det(std::span<const double> m, std::size_t dim) {
    // Gaussian elimination with partial pivoting
    std::vector<double> w(m.begin(), m.end());
    double det = 1.0;
    for (std::size_t c = 0; c < dim; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < dim; ++r)
            if (std::abs(w[r * dim + c]) > std::abs(w[piv * dim + c])) piv = r;
        if (piv != c) {
            for (std::size_t k = 0; k < dim; ++k) std::swap(w[c * dim + k], w[piv * dim + k]);
            det = -det;
        }
        const double d = w[c * dim + c];
        if (d == 0.0) return 0.0;
        det *= d;
        for (std::size_t r = c + 1; r < dim; ++r) {
            const double f = w[r * dim + c] / d;
            for (std::size_t k = c; k < dim; ++k) w[r * dim + k] -= f * w[c * dim + k];
        }
    }
    return det;
}

std::vector<double> matrix_inverse(std::span<const double> m, std::size_t dim) {
    std::vector<double> w(m.begin(), m.end());
    std::vector<double> inv(dim * dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) inv[i * dim + i] = 1.0;
    for (std::size_t c = 0; c < dim; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < dim; ++r)
            if (std::abs(w[r * dim + c]) > std::abs(w[piv * dim + c])) piv = r;
        if (w[piv * dim + c] == 0.0)
            throw std::invalid_argument("matrix_inverse: singular matrix");
        if (piv != c)
            for (std::size_t k = 0; k < dim; ++k) {
                std::swap(w[c * dim + k], w[piv * dim + k]);
                std::swap(inv[c * dim + k], inv[piv * dim + k]);
            }
        const double d = w[c * dim + c];
        for (std::size_t k = 0; k < dim; ++k) {
            w[c * dim + k] /= d;
            inv[c * dim + k] /= d;
        }
        for (std::size_t r = 0; r < dim; ++r) {
            if (r == c) continue;
            const double f = w[r * dim + c];
            if (f == 0.0) continue;
            for (std::size_t k = 0; k < dim; ++k) {
                w[r * dim + k] -= f * w[c * dim + k];
                inv[r * dim + k] -= f * inv[c * dim + k];
            }
        }
    }
    return inv;
}

double gaussian_kernel(const GaussianSpec& spec, std::span<const double> x) {
    const std::size_t d = spec.a.dim;
    if (x.size() != d) throw std::invalid_argument("gaussian_kernel: point dimension mismatch");
    if (!(spec.t > spec.s)) throw std::invalid_argument("gaussian_kernel: needs t > s");
    const auto cov = spec.covariance();
    const double det = matrix_det(cov, d);
    if (!(det > 0.0)) throw std::invalid_argument("gaussian_kernel: singular covariance");
    const auto inv = matrix_inverse(cov, d);
    double q = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) q += inv[i * d + j] * x[i] * x[j];
    const double norm = std::pow(2.0 * std::numbers::pi, 0.5 * double(d)) * std::sqrt(det);
    return std::exp(-0.5 * q) / norm;
}

double gaussian_cf(const GaussianSpec& spec, std::span<const double> xi) {
    const std::size_t d = spec.a.dim;
    if (xi.size() != d) throw std::invalid_argument("gaussian_cf: dimension mismatch");
    const auto cov = spec.covariance();
    double q = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) q += cov[i * d + j] * xi[i] * xi[j];
    return std::exp(-0.5 * q);
}

}  // namespace lpk
