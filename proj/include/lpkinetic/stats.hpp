#pragma once

#include <functional>
#include <vector>

namespace lpk {

double sample_mean(const std::vector<double>& x);
double sample_variance(const std::vector<double>& x);

double normal_cdf(double x, double mean = 0.0, double sd = 1.0);
double cauchy_cdf(double x, double location = 0.0, double scale = 1.0);

// one-sample Kolmogorov-Smirnov statistic against a cdf
double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf);
// two-sample KS statistic
double ks_statistic_two(std::vector<double> a, std::vector<double> b);
// asymptotic critical value at significance level (0.05, 0.01), one-sample n
double ks_critical(std::size_t n, double significance);
double ks_critical_two(std::size_t n, std::size_t m, double significance);

}  // namespace lpk
