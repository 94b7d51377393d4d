#include "lpkinetic/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lpk {

double sample_mean(const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v;
    return s / double(x.size());
}

double sample_variance(const std::vector<double>& x) {
    const double m = sample_mean(x);
    double s = 0.0;
    for (double v : x) s += (v - m) * (v - m);
    return s / double(x.size() - 1);
}

double normal_cdf(double x, double mean, double sd) {
    return 0.5 * std::erfc(-(x - mean) / (sd * std::numbers::sqrt2));
}

double cauchy_cdf(double x, double location, double scale) {
    return 0.5 + std::atan((x - location) / scale) / std::numbers::pi;
}

double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf) {
    if (sample.empty()) throw std::invalid_argument("ks_statistic: empty sample");
    std::sort(sample.begin(), sample.end());
    const double n = double(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = cdf(sample[i]);
        d = std::max(d, std::abs(f - double(i) / n));
        d = std::max(d, std::abs(double(i + 1) / n - f));
    }
    return d;
}

double ks_statistic_two(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_statistic_two: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j])
            ++i;
        else
            ++j;
        d = std::max(d, std::abs(double(i) / double(a.size()) - double(j) / double(b.size())));
    }
    return d;
}

namespace {
double ks_c(double significance) {
    // c(alpha) = sqrt(-ln(alpha/2)/2)
    return std::sqrt(-0.5 * std::log(0.5 * significance));
}
}  // namespace

double ks_critical(std::size_t n, double significance) {
    return ks_c(significance) / std::sqrt(double(n));
}

double ks_critical_two(std::size_t n, std::size_t m, double significance) {
    return ks_c(significance) * std::sqrt(double(n + m) / (double(n) * double(m)));
}

}  // namespace lpk
