#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lpkinetic/kinetic.hpp"
#include "lpkinetic/levy_op.hpp"
#include "lpkinetic/rng.hpp"
#include "lpkinetic/sources.hpp"
#include "lpkinetic/stable.hpp"

using namespace lpk;

TEST_CASE("gaussian kernel basics") {
    SUBCASE("standard normal peak at the origin") {
        GaussianSpec g;
        g.a = MatrixPath::constant(1, {1.0});
        g.s = 0.0;
        g.t = 1.0;
        const std::vector<double> x{0.0};
        CHECK(gaussian_kernel(g, x) ==
              doctest::Approx(1.0 / std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-12));
    }

    SUBCASE("quadrature mass") {
        GaussianSpec g;
        g.a = MatrixPath::constant(1, {0.7});
        g.t = 0.9;
        double mass = 0.0;
        const double h = 0.01;
        for (double x = -12.0; x <= 12.0; x += h) {
            const std::vector<double> p{x};
            mass += gaussian_kernel(g, p) * h;
        }
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
    }

    SUBCASE("2-d matrix oracle at random points") {
        GaussianSpec g;
        g.a = MatrixPath::constant(2, {2.0, 0.0, 0.0, 2.0});
        g.t = 0.5;
        // independent route: adjugate inverse and explicit determinant
        const auto cov = g.covariance();
        const double det = cov[0] * cov[3] - cov[1] * cov[2];
        Rng rng(3, 0);
        for (int i = 0; i < 10; ++i) {
            const std::vector<double> x{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
            const double q = (cov[3] * x[0] * x[0] - 2.0 * cov[1] * x[0] * x[1] +
                              cov[0] * x[1] * x[1]) /
                             det;
            const double oracle =
                std::exp(-0.5 * q) / (2.0 * std::numbers::pi * std::sqrt(det));
            CHECK(gaussian_kernel(g, x) == doctest::Approx(oracle).epsilon(1e-10));
        }
    }

    SUBCASE("singular covariance is rejected") {
        GaussianSpec g;
        g.a = MatrixPath::constant(2, {1.0, 1.0, 1.0, 1.0});
        g.t = 1.0;
        const std::vector<double> x{0.0, 0.0};
        CHECK_THROWS(gaussian_kernel(g, x));
    }
}

TEST_CASE("kinetic characteristic function") {
    SUBCASE("normalization at zero frequency") {
        KineticKernelSpec k;
        k.alpha = 1.5;
        CHECK(kinetic_cf(k, 0.0, 0.0, 0.0, 1.0).real() == doctest::Approx(1.0));
        CHECK(std::abs(kinetic_cf(k, 3.0, -2.0, 0.0, 1.0)) <= 1.0);
    }

    SUBCASE("alpha = 2 matches the Kolmogorov Gaussian covariance blocks") {
        KineticKernelSpec k;
        k.alpha = 2.0;
        k.kappa0 = ScalarPath::constant(1.0);
        k.U = ScalarPath::constant(1.0);
        Rng rng(4, 0);
        for (int i = 0; i < 20; ++i) {
            const double xi = rng.uniform(-2.0, 2.0);
            const double eta = rng.uniform(-2.0, 2.0);
            const double t = rng.uniform(0.1, 1.5);
            // covariance of (X, V) = (int (t-r) dB-part, B-part): blocks
            // (2 t^3/3, t^2, 2t) in cf form exp(-(t^3/3 xi^2 + t^2 xi eta + t eta^2))
            const double expected = std::exp(
                -(t * t * t / 3.0 * xi * xi + t * t * xi * eta + t * eta * eta));
            CHECK(kinetic_cf(k, xi, eta, 0.0, t).real() ==
                  doctest::Approx(expected).epsilon(1e-8));
        }
    }

    SUBCASE("closed-form and adaptive quadrature paths agree") {
        KineticKernelSpec k;
        k.alpha = 1.3;
        k.kappa0 = ScalarPath{{0.0, 0.4}, {0.8, 1.2}};
        k.U = ScalarPath{{0.0, 0.3, 0.7}, {1.0, 0.6, 1.4}};
        Rng rng(5, 0);
        for (int i = 0; i < 25; ++i) {
            const double xi = rng.uniform(-10.0, 10.0);
            const double eta = rng.uniform(-10.0, 10.0);
            const double a = cf_exponent(k, xi, eta, 0.05, 1.0);
            const double b = cf_exponent_quadrature(k, xi, eta, 0.05, 1.0);
            CHECK(std::abs(a - b) <= 5e-9 * std::max(1.0, std::abs(a)));
        }
    }

    SUBCASE("NB3 scaling in Fourier form") {
        KineticKernelSpec k;
        k.alpha = 1.5;
        k.kappa0 = ScalarPath::constant(0.5);
        k.U = ScalarPath::constant(1.0);
        Rng rng(6, 0);
        for (int i = 0; i < 40; ++i) {
            const double xi = rng.uniform(-5.0, 5.0);
            const double eta = rng.uniform(-5.0, 5.0);
            const double t = rng.uniform(0.2, 2.5);
            const double lhs = kinetic_cf(k, xi, eta, 0.0, t).real();
            const double rhs = kinetic_cf(k, std::pow(t, 1.0 + 1.0 / k.alpha) * xi,
                                          std::pow(t, 1.0 / k.alpha) * eta, 0.0, 1.0)
                                   .real();
            CHECK(std::abs(lhs - rhs) <= 1e-10);
        }
    }

    SUBCASE("Chapman-Kolmogorov as a cf product identity") {
        KineticKernelSpec k;
        k.alpha = 1.6;
        k.kappa0 = ScalarPath::constant(0.4);
        k.U = ScalarPath::constant(0.9);
        Rng rng(7, 0);
        for (int i = 0; i < 30; ++i) {
            const double xi = rng.uniform(-4.0, 4.0);
            const double eta = rng.uniform(-4.0, 4.0);
            const double s = 0.0, r = 0.4, t = 1.1;
            const double whole = cf_exponent(k, xi, eta, s, t);
            const double late = cf_exponent(k, xi, eta, r, t);
            const double early = cf_exponent(k, xi, eta + k.Pi(r, t) * xi, s, r);
            CHECK(std::abs(whole - (late + early)) <= 1e-8 * std::max(1.0, whole));
        }
    }
}

TEST_CASE("kernel realization on the grid") {
    KineticKernelSpec k;
    k.alpha = 1.5;
    k.kappa0 = ScalarPath::constant(1.0 / symbol_constant(1.5));
    k.U = ScalarPath::constant(1.0);

    SUBCASE("mass, symmetry, and positivity up to ripple") {
        const GridSpec grid = make_grid_2d(30.0, 512, 20.0, 512);
        const Field p = kernel_from_cf(k, grid, 0.0, 1.0);
        CHECK(p.integral() == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(p.value(grid.flat({256, 256})) > 0.0);
        // p(-x,-v) = p(x,v)
        double worst = 0.0;
        const std::size_t n0 = grid.points[0], n1 = grid.points[1];
        for (std::size_t i = 1; i < n0; i += 7)
            for (std::size_t l = 1; l < n1; l += 7)
                worst = std::max(worst, std::abs(p.value(grid.flat({i, l})) -
                                                 p.value(grid.flat({n0 - i, n1 - l}))));
        CHECK(worst <= 1e-10 * p.max_abs());
        double min_val = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) min_val = std::min(min_val, p.value(i));
        CHECK(-min_val <= 1e-6 * p.max_abs());
    }

    SUBCASE("damped mass with lambda > 0") {
        KineticKernelSpec kl = k;
        kl.lambda = 2.0;
        const GridSpec grid = make_grid_2d(30.0, 1024, 20.0, 512);
        const Field p = kernel_from_cf(kl, grid, 0.0, 0.8);
        CHECK(p.integral() == doctest::Approx(std::exp(-2.0 * 0.8)).epsilon(1e-6));
    }

    SUBCASE("alpha = 2 case against the Gaussian oracle") {
        KineticKernelSpec kg;
        kg.alpha = 2.0;
        kg.kappa0 = ScalarPath::constant(1.0);
        kg.U = ScalarPath::constant(1.0);
        const double t = 0.7;
        const GridSpec grid = make_grid_2d(8.0, 256, 8.0, 256);
        const Field p = kernel_from_cf(kg, grid, 0.0, t);
        // Gaussian with covariance [[2t^3/3, t^2],[t^2, 2t]]
        const double sxx = 2.0 * t * t * t / 3.0, sxv = t * t, svv = 2.0 * t;
        const double det = sxx * svv - sxv * sxv;
        Rng rng(8, 0);
        for (int i = 0; i < 20; ++i) {
            const std::size_t ix = 64 + rng.next_u64() % 128;
            const std::size_t iv = 64 + rng.next_u64() % 128;
            const double x = grid.coord(0, ix), v = grid.coord(1, iv);
            const double q = (svv * x * x - 2.0 * sxv * x * v + sxx * v * v) / det;
            const double oracle = std::exp(-0.5 * q) / (2.0 * std::numbers::pi * std::sqrt(det));
            if (oracle < 1e-12) continue;
            CHECK(p.value(grid.flat({ix, iv})) == doctest::Approx(oracle).epsilon(1e-6));
        }
    }

    SUBCASE("under-resolved grid is rejected with a suggestion") {
        const GridSpec grid = make_grid_2d(30.0, 64, 20.0, 8);
        CHECK_THROWS_WITH_AS(kernel_from_cf(k, grid, 0.0, 1e-4), doctest::Contains("N_v"),
                             std::invalid_argument);
    }

    SUBCASE("Monte Carlo histogram cross-check") {
        // empirical density of (X, V) = (int Pi dL, L_t) against the kernel,
        // binned on blocks of grid cells so both sides integrate the same way
        const double t = 1.0;
        const GridSpec grid = make_grid_2d(30.0, 1024, 20.0, 1024);
        const Field p = kernel_from_cf(k, grid, 0.0, t);
        const std::size_t paths = 200000, steps = 256;
        const double dt = t / double(steps);
        Rng rng(9, 0);
        // bins are 8x16 cell blocks covering the core of the box
        const std::size_t cx = 8, cv = 16;
        const std::size_t ix0 = 480, ix1 = 544, iv0 = 448, iv1 = 576;
        const std::size_t bx = (ix1 - ix0) / cx, bv = (iv1 - iv0) / cv;
        std::vector<double> hist(bx * bv, 0.0);
        for (std::size_t pth = 0; pth < paths; ++pth) {
            double x = 0.0, v = 0.0;
            for (std::size_t s = 0; s < steps; ++s) {
                const double mid = t - (double(s) + 0.5) * dt;  // Pi_{r,t} at midpoint
                const double dl = std::pow(dt, 1.0 / k.alpha) * sample_1d_stable(k.alpha, rng);
                x += mid * dl;
                v += dl;
            }
            // nearest-node cell index, consistent with coord(i) = -L + i dx
            const long gx = std::lround((x + 30.0) / grid.spacing(0));
            const long gv = std::lround((v + 20.0) / grid.spacing(1));
            if (gx >= long(ix0) && gx < long(ix1) && gv >= long(iv0) && gv < long(iv1))
                hist[std::size_t(gx - long(ix0)) / cx * bv + std::size_t(gv - long(iv0)) / cv] +=
                    1.0;
        }
        int checked = 0;
        for (std::size_t bix = 0; bix < bx; ++bix) {
            for (std::size_t biv = 0; biv < bv; ++biv) {
                // kernel mass of the block: midpoint rule over its cells, with
                // cells centered on the nodes to match the rounding above
                double mass = 0.0;
                for (std::size_t ix = ix0 + bix * cx; ix < ix0 + (bix + 1) * cx; ++ix)
                    for (std::size_t iv = iv0 + biv * cv; iv < iv0 + (biv + 1) * cv; ++iv)
                        mass += p.value(grid.flat({ix, iv}));
                const double expected = mass * grid.cell_volume() * double(paths);
                const double count = hist[bix * bv + biv];
                if (expected < 500.0) continue;
                const double sigma = std::sqrt(expected);
                CHECK(std::abs(count - expected) <= 3.5 * sigma + 0.02 * expected);
                ++checked;
            }
        }
        CHECK(checked >= 10);
    }
}

TEST_CASE("gamma shift") {
    const GridSpec grid = make_grid_2d(4.0, 128, 4.0, 64);

    SUBCASE("zero shear is the identity") {
        const Field f = random_band_limited(grid, {20.0, 10.0}, 11);
        CHECK((gamma_shift(f, 0.0) - f).max_abs() <= 1e-12);
    }

    SUBCASE("plane wave phase law") {
        const double xi = snap_to_lattice(3.0, grid, 0);
        const double eta = snap_to_lattice(2.0, grid, 1);
        const double pi_s = 0.37;
        const Field f = Field::from_function(grid, [&](std::span<const double> z) {
            return std::cos(xi * z[0] + eta * z[1]);
        });
        const Field g = gamma_shift(f, pi_s);
        // f(x + Pi v, v) = cos(xi x + (eta + Pi xi) v)
        double worst = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const auto multi = grid.unflat(i);
            const double x = grid.coord(0, multi[0]), v = grid.coord(1, multi[1]);
            worst = std::max(worst,
                             std::abs(g.value(i) - std::cos(xi * x + (eta + pi_s * xi) * v)));
        }
        CHECK(worst <= 1e-10);
    }

    SUBCASE("shift composed with its inverse") {
        const Field f = random_band_limited(grid, {15.0, 8.0}, 12);
        const Field round_trip = gamma_shift(gamma_shift(f, 0.61), -0.61);
        CHECK((round_trip - f).max_abs() <= 1e-10);
    }
}

TEST_CASE("levy operator quadrature") {
    SUBCASE("constant fields are annihilated") {
        const GridSpec grid = make_grid_2d(4.0, 16, 6.0, 64);
        LevyOpSpec spec;
        spec.alpha = 1.5;
        const auto out = apply_levy_op(Field::constant(grid, 2.0), spec);
        CHECK(out.field.max_abs() <= 1e-10);
    }

    SUBCASE("plane waves against the closed-form symbol") {
        const GridSpec grid = make_grid_2d(4.0, 4, 6.0, 256);
        LevyOpSpec spec;
        spec.alpha = 1.3;
        spec.panels_per_octave = 6;
        const double c_a = symbol_constant(spec.alpha);
        for (double eta_raw : {0.8, 1.9, 4.1}) {
            const double eta = snap_to_lattice(eta_raw, grid, 1);
            const Field f = Field::from_function(
                grid, [&](std::span<const double> z) { return std::cos(eta * z[1]); });
            const auto out = apply_levy_op(f, spec);
            const double expected = c_a * std::pow(eta, spec.alpha);
            // L cos(eta v) = -c_a |eta|^alpha cos(eta v)
            double worst = 0.0;
            for (std::size_t i = 0; i < grid.size(); ++i)
                worst = std::max(worst, std::abs(out.field.value(i) + expected * f.value(i)));
            CHECK(worst <= 1e-6 * expected);
        }
    }

    SUBCASE("symbol quadrature across three dyadic scales") {
        LevyOpSpec spec;
        spec.alpha = 1.7;
        spec.panels_per_octave = 6;
        const double c_a = symbol_constant(spec.alpha);
        for (double h : {1.0, 2.0, 4.0, 8.0}) {
            const auto s = levy_symbol_quadrature(h, spec);
            CHECK(std::abs(s.value + c_a * std::pow(h, spec.alpha)) <=
                  1e-5 * c_a * std::pow(h, spec.alpha));
        }
    }

    SUBCASE("windowed v^2: inner region closed form dominates") {
        // f = v^2 near the origin: L f(0,v)|_{inner} = kappa int w^2 nu(dw)
        LevyOpSpec spec;
        spec.alpha = 1.4;
        spec.r_inner = 0.25;
        spec.r_outer = 64.0;
        const GridSpec grid = make_grid_2d(4.0, 4, 12.0, 512);
        const Field f = Field::from_function(grid, [](std::span<const double> z) {
            const double window = std::exp(-std::pow(z[1] / 8.0, 10.0));
            return z[1] * z[1] * window;
        });
        const auto out = apply_levy_op(f, spec);
        // at v = 0: delta^2_w f = 2 w^2 for |w| inside the window, so the inner
        // contribution is 2 int_0^{r} w^{2} nu = 2 r^{2-a}/(2-a) * 2
        const std::size_t center = grid.flat({2, 256});
        const double inner_expected =
            2.0 * 2.0 * std::pow(spec.r_inner, 2.0 - spec.alpha) / (2.0 - spec.alpha);
        // the middle region continues the same integrand out to the window edge
        CHECK(out.field.value(center) > inner_expected * 0.9);
    }

    SUBCASE("calibrated symbol constant matches the closed form") {
        for (double alpha : {1.2, 1.5, 1.8}) {
            LevyOpSpec spec;
            spec.alpha = alpha;
            spec.panels_per_octave = 6;
            const auto s = levy_symbol_quadrature(1.0, spec);
            CHECK(std::abs(-s.value - symbol_constant(alpha)) <= 1e-5 * symbol_constant(alpha));
        }
    }
}

TEST_CASE("moment integral scaling") {
    KineticKernelSpec k;
    k.alpha = 1.5;
    k.kappa0 = ScalarPath::constant(1.0 / symbol_constant(1.5));
    k.U = ScalarPath::constant(1.0);

    SUBCASE("mass at beta=gamma=n=m=0") {
        const double mass = moment_integral(k, 0.0, 0.0, 0, 0, 0.0, 0.25, 1024);
        CHECK(mass == doctest::Approx(1.0).epsilon(2e-3));
    }

    SUBCASE("alpha = 2 cross-check with Gaussian moments") {
        KineticKernelSpec kg;
        kg.alpha = 2.0;
        kg.kappa0 = ScalarPath::constant(1.0);
        kg.U = ScalarPath::constant(1.0);
        const double t = 0.5;
        // E|V|: centered normal with variance 2t
        const double expected = std::sqrt(2.0 * (2.0 * t) / std::numbers::pi);
        const double measured = moment_integral(kg, 0.0, 1.0, 0, 0, 0.0, t, 4096);
        CHECK(measured == doctest::Approx(expected).epsilon(1e-4));
    }

    SUBCASE("divergent moment is rejected") {
        CHECK_THROWS(moment_integral(k, 1.0, 0.6, 0, 0, 0.0, 0.5));
    }
}
