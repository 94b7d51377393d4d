#include "lpkinetic/theta.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "lpkinetic/rng.hpp"

namespace lpk {

std::set<int> theta_set(const ThetaParams& p) {
    if (p.c1 < 1.0) throw std::invalid_argument("theta_set: c1 must be >= 1");
    std::set<int> out;
    const double a1 = 1.0 + p.alpha;
    const double cap_j = 16.0 * p.c1 * (std::pow(2.0, p.j) + p.t * std::pow(2.0, a1 * p.j));
    const int l_hi = int(std::floor(std::log2(cap_j))) + 1;
    for (int l = 0; l <= l_hi; ++l) {
        const bool first = std::pow(2.0, l) <= cap_j;
        const bool second =
            std::pow(2.0, p.j) <= 16.0 * p.c1 * (std::pow(2.0, l) + p.t * std::pow(2.0, a1 * l));
        if (first && second) out.insert(l);
    }
    return out;
}

int theta_j0(double c1, double alpha, double horizon) {
    const double bound = 16.0 * c1 * (32.0 + horizon * std::pow(2.0, 5.0 * (1.0 + alpha)));
    return int(std::floor(std::log2(bound))) + 1;
}

ThetaSum theta_sum(const ThetaParams& p, double beta) {
    ThetaSum out;
    for (int l : theta_set(p)) out.sum += std::pow(2.0, -beta * l);
    out.scale = std::pow(std::pow(2.0, -p.j) + p.t * std::pow(2.0, (p.alpha - 1.0) * p.j), beta);
    out.ratio = out.sum / out.scale;
    return out;
}

namespace {

// random smooth spectrum: symmetric mixture of Gaussian bumps, evaluable at
// arbitrary frequencies (needed under the shear)
struct BumpSpectrum {
    struct Bump {
        double cx, cv, sx, sv, amp;
    };
    std::vector<Bump> bumps;

    double operator()(double xi, double eta) const {
        double acc = 0.0;
        for (const auto& b : bumps) {
            const double dp = (xi - b.cx) / b.sx, dq = (eta - b.cv) / b.sv;
            const double dm = (xi + b.cx) / b.sx, dn = (eta + b.cv) / b.sv;
            acc += b.amp * (std::exp(-0.5 * (dp * dp + dq * dq)) +
                            std::exp(-0.5 * (dm * dm + dn * dn)));
        }
        return acc;
    }
};

BumpSpectrum random_spectrum(Rng& rng, double xi_scale, double eta_scale) {
    BumpSpectrum s;
    for (int i = 0; i < 4; ++i) {
        BumpSpectrum::Bump b;
        b.cx = rng.uniform(-xi_scale, xi_scale);
        b.cv = rng.uniform(-eta_scale, eta_scale);
        b.sx = xi_scale * rng.uniform(0.2, 0.6);
        b.sv = eta_scale * rng.uniform(0.2, 0.6);
        b.amp = rng.uniform(-1.0, 1.0);
        s.bumps.push_back(b);
    }
    return s;
}

}  // namespace

double orthogonality_check(int j, int l, double pi, double alpha, int trials, std::uint64_t seed) {
    const AnisotropyIndex idx = kinetic_index(alpha, 1);
    // quadrature box covering supp phi_j
    const double a1 = 1.0 + alpha;
    const double xi_max = std::pow(2.0, a1 * (j + 1));
    const double eta_max = std::pow(2.0, j + 1);
    const std::size_t mx = 384, mv = 384;
    const double dxi = 2.0 * xi_max / double(mx);
    const double deta = 2.0 * eta_max / double(mv);

    // phi helper on the kinetic gauge
    auto phi = [&](double xi, double eta, int jj) {
        const double r = std::pow(std::abs(xi), 1.0 / a1) + std::abs(eta);
        if (jj == 0) return smooth_transition(r);
        return smooth_transition(std::ldexp(r, -jj)) - smooth_transition(std::ldexp(r, -(jj - 1)));
    };

    double worst = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(seed, std::uint64_t(trial) + 1);
        const auto fs = random_spectrum(rng, xi_max, eta_max);
        const auto gs = random_spectrum(rng, xi_max, eta_max);
        double ip = 0.0, nf = 0.0, ng = 0.0;
        for (std::size_t ix = 0; ix < mx; ++ix) {
            const double xi = -xi_max + (double(ix) + 0.5) * dxi;
            for (std::size_t iv = 0; iv < mv; ++iv) {
                const double eta = -eta_max + (double(iv) + 0.5) * deta;
                const double pj = phi(xi, eta, j);
                const double pl = phi(xi, eta - pi * xi, l);
                const double a = pj * fs(xi, eta);
                const double b = pl * gs(xi, eta - pi * xi);
                ip += a * b;
                nf += a * a;
                const double bl = phi(xi, eta, l) * gs(xi, eta);
                ng += bl * bl;
            }
        }
        const double denom = std::sqrt(nf) * std::sqrt(ng);
        if (denom > 0.0) worst = std::max(worst, std::abs(ip) / denom);
    }
    return worst;
}

}  // namespace lpk
