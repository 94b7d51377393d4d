#include <doctest.h>

#include <cmath>

#include "lpkinetic/block_integrals.hpp"
#include "lpkinetic/commutator.hpp"
#include "lpkinetic/duhamel.hpp"
#include "lpkinetic/sources.hpp"
#include "lpkinetic/theta.hpp"

using namespace lpk;

TEST_CASE("heat block integrals") {
    GaussianSpec g;
    g.a = MatrixPath::constant(1, {1.0});
    g.t = 1.0;

    SUBCASE("slope over a reduced j range") {
        for (double beta : {0.0, 1.0}) {
            std::vector<int> js;
            std::vector<double> vals;
            for (int j = 2; j <= 5; ++j) {
                js.push_back(j);
                vals.push_back(heat_block_integral(j, beta, 1.0, g));
            }
            const SlopeFit fit = fit_slope(js, vals);
            CHECK(fit.slope == doctest::Approx(-(2.0 + beta)).epsilon(0.10));
        }
    }

    SUBCASE("GF1 single-time bound with m = 0") {
        // the m = 0 bound binds for tau up to the block time 2^{-2j}; measure
        // the per-j constant as the sup over times and check it is stable
        const double beta = 0.5;
        double cmax = 0.0, cmin = 1e300;
        for (int j = 2; j <= 6; ++j) {
            double cj = 0.0;
            for (double w : {1e-3, 0.1, 1.0, 4.0}) {
                const double tau = w * std::pow(2.0, -2 * j);
                const double val = heat_block_moment(j, beta, tau, g);
                const double scale = std::pow(std::pow(2.0, -j) + std::sqrt(tau), beta);
                cj = std::max(cj, val / scale);
            }
            cmax = std::max(cmax, cj);
            cmin = std::min(cmin, cj);
        }
        CHECK(cmax / cmin <= 4.0);
    }
}

TEST_CASE("kinetic block integrals at reduced scale") {
    const double alpha = 1.5;
    KineticKernelSpec k;
    k.alpha = alpha;
    k.kappa0 = ScalarPath::constant(1.0 / symbol_constant(alpha));
    k.U = ScalarPath::constant(1.0);

    SUBCASE("anisotropic decay, base case") {
        std::vector<int> js;
        std::vector<double> vals;
        for (int j = 2; j <= 4; ++j) {
            js.push_back(j);
            vals.push_back(kinetic_block_integral(j, 0.0, 0.0, 0.0, 1.0, k,
                                                  KineticBlockMode::aniso));
        }
        const SlopeFit fit = fit_slope(js, vals);
        CHECK(fit.slope == doctest::Approx(-alpha).epsilon(0.12));
    }

    SUBCASE("x-direction decay, base case") {
        std::vector<int> js;
        std::vector<double> vals;
        for (int j = 2; j <= 4; ++j) {
            js.push_back(j);
            vals.push_back(kinetic_block_integral(j, 0.0, 0.0, 0.0, 1.0, k,
                                                  KineticBlockMode::x_only));
        }
        const SlopeFit fit = fit_slope(js, vals);
        CHECK(fit.slope == doctest::Approx(-alpha / (1.0 + alpha)).epsilon(0.10));
    }

    SUBCASE("parameter validation") {
        CHECK_THROWS(kinetic_block_integral(2, -1.5, 0.0, 0.0, 1.0, k,
                                            KineticBlockMode::aniso));
        CHECK_THROWS(kinetic_block_integral(2, 0.0, 1.2, 0.5, 1.0, k,
                                            KineticBlockMode::aniso));
    }
}

TEST_CASE("theta sets") {
    SUBCASE("t = 0 and c1 = 1 reduces to |l - j| <= 4") {
        for (int j = 1; j <= 9; ++j) {
            const auto th = theta_set({1.0, 0.0, j, 1.5});
            for (int l = 0; l <= 16; ++l) {
                const bool inside = th.count(l) > 0;
                CHECK(inside == (std::abs(l - j) <= 4));
            }
        }
    }

    SUBCASE("DA2 ratio stability at block-matched times") {
        // the tail-sum bound is used at elapsed times of the order of the
        // block time 2^{-alpha j}; stability is measured in that regime
        const double alpha = 1.5;
        for (double w : {0.1, 1.0, 10.0}) {
            double rmin = 1e300, rmax = 0.0;
            for (int j = 3; j <= 8; ++j) {
                const double t = w * std::pow(2.0, -alpha * j);
                const auto ts = theta_sum({2.0, t, j, alpha}, 0.7);
                rmin = std::min(rmin, ts.ratio);
                rmax = std::max(rmax, ts.ratio);
            }
            CHECK(rmax / rmin <= 4.0);
        }
    }

    SUBCASE("monotonicity in t") {
        for (int j = 2; j <= 7; ++j) {
            const auto small = theta_set({2.0, 0.05, j, 1.5});
            const auto large = theta_set({2.0, 0.5, j, 1.5});
            for (int l : small) CHECK(large.count(l) == 1);
        }
    }

    SUBCASE("orthogonality: outside Theta vanishes, overlap is visible") {
        const double alpha = 1.5;
        const double c1 = 2.0, t = 0.2;
        const int j = 5;
        const auto th = theta_set({c1, t, j, alpha});
        int l_out = 0;
        while (th.count(l_out)) ++l_out;
        const double off = orthogonality_check(j, l_out, t, alpha, 2, 42);
        CHECK(off <= 1e-10);
        const double on = orthogonality_check(j, j, 0.0, alpha, 1, 42);
        CHECK(on > 1e-6);
    }
}

TEST_CASE("commutators") {
    SUBCASE("constant factor commutes") {
        const GridSpec grid = make_grid_1d(3.2, 2048);
        const Field f = Field::constant(grid, 4.2);
        const Field g = random_band_limited(grid, {6.0}, 3);
        CHECK(commutator_sup(f, g, 5) <= 1e-12);
    }

    SUBCASE("GS1 decay at reduced range") {
        const double beta = 0.6;
        const GridSpec grid = make_grid_1d(3.2, 4096);
        const Field f = weierstrass_axis(grid, 0, beta, 0, 9, 7);
        const Field g = random_band_limited(grid, {4.0}, 8);
        std::vector<int> js;
        std::vector<double> vals;
        for (int j = 5; j <= 8; ++j) {
            js.push_back(j);
            vals.push_back(commutator_sup(f, g, j));
        }
        const SlopeFit fit = fit_slope(js, vals);
        CHECK(fit.slope <= -beta + 0.15);
    }

    SUBCASE("constructed vanishing: separated spectra") {
        // f low-frequency, g in a far ring: all Bony cross terms of the
        // commutator at block j vanish when the supports cannot interact
        const GridSpec grid = make_grid_1d(3.2, 2048);
        const Field f = random_band_limited(grid, {1.5}, 9);
        const Field g = Field::from_function(grid, [&](std::span<const double> x) {
            return std::cos(snap_to_lattice(40.0, grid, 0) * x[0]);
        });
        // fg has spectrum within [38.5, 41.5]; blocks far from ring 5..6 of g
        const double val = commutator_sup(f, g, 2);
        CHECK(val <= 1e-10);
    }
}

TEST_CASE("duhamel solves") {
    const double alpha = 1.5;
    DuhamelConfig dc;
    dc.kernel.alpha = alpha;
    dc.kernel.kappa0 = ScalarPath::constant(1.0 / symbol_constant(alpha));
    dc.kernel.U = ScalarPath::constant(1.0);
    dc.kernel.lambda = 1.5;
    dc.horizon = 1.0;

    SUBCASE("constant source: scalar ODE solution") {
        DuhamelConfig cfg = dc;
        cfg.source.modes.push_back({0.0, 0.0, 1.3, 0.0});
        const DuhamelSolution u(cfg, 0.6);
        const double expected = 1.3 * (1.0 - std::exp(-1.5 * 0.6)) / 1.5;
        CHECK(u.value(0.1, -0.7) == doctest::Approx(expected).epsilon(1e-10));
    }

    SUBCASE("pure v-mode multiplier gain") {
        DuhamelConfig cfg = dc;
        const double eta = 1.7;
        cfg.source.modes.push_back({0.0, eta, 1.0, 0.3});
        const DuhamelSolution u(cfg, 1.0);
        const double sym =
            cfg.kernel.kappa0.at(0.0) * symbol_constant(alpha) * std::pow(eta, alpha);
        const double gain = (1.0 - std::exp(-(1.5 + sym))) / (1.5 + sym);
        CHECK(u.value(0.4, 0.9) ==
              doctest::Approx(gain * std::cos(eta * 0.9 + 0.3)).epsilon(1e-8));
    }

    SUBCASE("residual of a generic mode") {
        DuhamelConfig cfg = dc;
        cfg.source.modes.push_back({1.2, -0.8, 0.9, 0.5});
        cfg.source.modes.push_back({-2.3, 1.4, 0.5, 1.1});
        const DuhamelSolution u(cfg, 0.8);
        const GridSpec grid = make_grid_2d(3.0, 64, 3.0, 64);
        const double fsup = 1.4;
        CHECK(u.residual_on_grid(grid).max_abs() <= 1e-4 * fsup);
    }

    SUBCASE("maximum principle on a random source") {
        DuhamelConfig cfg = dc;
        cfg.source.modes.push_back({0.9, 2.1, 0.8, 0.2});
        cfg.source.modes.push_back({-1.7, 0.4, 0.6, 2.0});
        const DuhamelSolution u(cfg, 1.0);
        const GridSpec grid = make_grid_2d(3.0, 128, 3.0, 128);
        double fsup = 0.0;
        for (std::size_t ix = 0; ix < grid.points[0]; ++ix)
            for (std::size_t iv = 0; iv < grid.points[1]; ++iv)
                fsup = std::max(fsup, std::abs(cfg.source.eval(grid.coord(0, ix),
                                                               grid.coord(1, iv))));
        const double bound = (1.0 - std::exp(-1.5)) / 1.5 * fsup;
        CHECK(u.on_grid(grid).max_abs() <= bound * (1.0 + 1e-9));
    }

    SUBCASE("single wave packet: profile peaks at the source block") {
        DuhamelConfig cfg = dc;
        const int k = 3;
        cfg.source.modes.push_back({0.0, 0.9 * std::pow(2.0, k), 1.0, 0.0});
        const DuhamelSolution u(cfg, 1.0);
        const GridSpec grid = make_grid_2d(3.0, 16, 3.0, 256);
        const auto prof = u.aniso_profile(grid, 5);
        std::size_t argmax = 0;
        for (std::size_t j = 0; j < prof.size(); ++j)
            if (prof[j] > prof[argmax]) argmax = j;
        CHECK(argmax == std::size_t(k));
    }
}
