#pragma once

#include <cstddef>
#include <vector>

namespace lpk {

// Least-squares line through (j, log2 value) samples.
struct SlopeFit {
    int j_min = 0;
    int j_max = 0;
    std::vector<double> log2_values;
    double slope = 0.0;
    double intercept = 0.0;
    double max_residual = 0.0;  // in log2 units
};

SlopeFit fit_slope(const std::vector<int>& j, const std::vector<double>& values);

}  // namespace lpk
