#include "lpkinetic/slope_fit.hpp"

#include <cmath>
#include <stdexcept>

namespace lpk {

SlopeFit fit_slope(const std::vector<int>& j, const std::vector<double>& values) {
    if (j.size() != values.size() || j.size() < 2)
        throw std::invalid_argument("fit_slope: need at least two (j, value) samples");
    SlopeFit fit;
    fit.j_min = j.front();
    fit.j_max = j.back();
    fit.log2_values.resize(values.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!(values[i] > 0.0)) throw std::invalid_argument("fit_slope: values must be positive");
        const double y = std::log2(values[i]);
        fit.log2_values[i] = y;
        sx += j[i];
        sy += y;
        sxx += double(j[i]) * j[i];
        sxy += double(j[i]) * y;
    }
    const double n = double(j.size());
    const double denom = n * sxx - sx * sx;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const double pred = fit.slope * j[i] + fit.intercept;
        fit.max_residual = std::max(fit.max_residual, std::abs(fit.log2_values[i] - pred));
    }
    return fit;
}

}  // namespace lpk
