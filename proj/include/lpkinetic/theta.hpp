#pragma once

#include <cstdint>
#include <set>

#include "lpkinetic/partition.hpp"

namespace lpk {

struct ThetaParams {
    double c1 = 1.0;   // shear constant
    double t = 0.0;    // elapsed time
    int j = 0;         // block index
    double alpha = 1.5;
};

// Theta_j^t = { l >= 0 : 2^l <= 16 c1 (2^j + t 2^{(1+a)j})  and
//               2^j <= 16 c1 (2^l + t 2^{(1+a)l}) }
std::set<int> theta_set(const ThetaParams& p);

// smallest j such that min Theta_j^t >= 5 for all t <= horizon
int theta_j0(double c1, double alpha, double horizon);

// sum_{l in Theta} 2^{-beta l} and its comparison scale (2^{-j} + t 2^{(a-1)j})^beta
struct ThetaSum {
    double sum = 0.0;
    double scale = 0.0;
    double ratio = 0.0;
};
ThetaSum theta_sum(const ThetaParams& p, double beta);

// |<R_j f, Gamma_{s,t} R_l g>| / (||f||_2 ||g||_2) over `trials` random smooth
// spectra, evaluated as a frequency-side quadrature (the integrand vanishes
// pointwise when l is outside Theta). `pi` is the shear Pi_{s,t}.
double orthogonality_check(int j, int l, double pi, double alpha, int trials, std::uint64_t seed);

}  // namespace lpk
