#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace lpk {

// Piecewise-constant matrix path a(t) on [0, t_end): value segment k applies on
// [knots[k], knots[k+1]). A single segment means a constant coefficient.
struct MatrixPath {
    std::size_t dim = 1;
    std::vector<double> knots;                 // ascending, knots.front() = 0
    std::vector<std::vector<double>> values;   // row-major dim x dim per segment

    static MatrixPath constant(std::size_t dim, std::vector<double> value);
    std::vector<double> at(double t) const;
    // integral over [s,t] entrywise
    std::vector<double> integral(double s, double t) const;
    void validate() const;
};

// Gaussian kernel of the time-dependent heat operator: density of the centered
// normal with covariance A_{s,t} = int_s^t a(r) dr (doubled drift convention is
// the caller's concern; a(t) is exactly the matrix in front of grad^2).
struct GaussianSpec {
    MatrixPath a;   // uniformly elliptic
    double s = 0.0;
    double t = 1.0;

    std::vector<double> covariance() const;  // A_{s,t}, row-major dim x dim
};

// density at point x; normalizer (2 pi)^{d/2} det(A)^{1/2}
double gaussian_kernel(const GaussianSpec& spec, std::span<const double> x);

// characteristic function exp(-<A xi, xi>/2)
double gaussian_cf(const GaussianSpec& spec, std::span<const double> xi);

// small dense helpers (row-major, dim <= 4 at desk scale)
double matrix_det(std::span<const double> m, std::size_t dim);
std::vector<double> matrix_inverse(std::span<const double> m, std::size_t dim);

}  // namespace lpk
