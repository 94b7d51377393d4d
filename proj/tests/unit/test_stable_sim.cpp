#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lpkinetic/stable.hpp"
#include "lpkinetic/stats.hpp"

using namespace lpk;

TEST_CASE("one-dimensional stable samplers") {
    SUBCASE("alpha = 2 is Gaussian with variance 2") {
        Rng rng(1, 0);
        const auto x = sample_1d_stable(2.0, 100000, rng);
        const double var = sample_variance(x);
        // variance of the estimator ~ 2 var^2 / n
        const double sigma = std::sqrt(2.0 * 4.0 / 100000.0);
        CHECK(std::abs(var - 2.0) <= 3.0 * sigma);
    }

    SUBCASE("alpha = 1 is Cauchy: median and quartiles") {
        Rng rng(2, 0);
        auto x = sample_1d_stable(1.0, 100000, rng);
        std::sort(x.begin(), x.end());
        const double med = x[x.size() / 2];
        const double q3 = x[(3 * x.size()) / 4];
        // quartile of the standard Cauchy is tan(pi/4) = 1
        CHECK(std::abs(med) <= 0.02);
        CHECK(std::abs(q3 - 1.0) <= 0.03);
    }

    SUBCASE("empirical log-cf is linear in |xi|^alpha with unit scale") {
        const double alpha = 1.5;
        Rng rng(3, 0);
        const auto x = sample_1d_stable(alpha, 100000, rng);
        for (double xi : {0.25, 0.5, 1.0, 2.0}) {
            double re = 0.0, im = 0.0;
            for (double s : x) {
                re += std::cos(xi * s);
                im += std::sin(xi * s);
            }
            re /= double(x.size());
            im /= double(x.size());
            const double logcf = -std::log(std::hypot(re, im));
            CHECK(std::abs(logcf - std::pow(xi, alpha)) <= 0.05 * std::pow(xi, alpha) + 0.01);
        }
    }

    SUBCASE("positive stable Laplace transform") {
        const double rho = 0.7;
        Rng rng(4, 0);
        for (double lam : {0.5, 1.0, 2.0}) {
            double acc = 0.0;
            const std::size_t n = 200000;
            for (std::size_t i = 0; i < n; ++i)
                acc += std::exp(-lam * sample_positive_stable(rho, rng));
            acc /= double(n);
            const double expected = std::exp(-std::pow(lam, rho));
            CHECK(std::abs(acc - expected) <= 3.0 / std::sqrt(double(n)) + 1e-3);
        }
    }
}

TEST_CASE("isotropic sampler") {
    SUBCASE("self-similarity via two-sample KS") {
        StableConfig cfg;
        cfg.alpha = 1.6;
        cfg.seed = 5;
        Rng rng(5, 1);
        const std::size_t n = 30000;
        std::vector<double> a(n), b(n);
        const double dt = 0.2;
        for (auto& v : a)
            v = std::abs(sample_isotropic_stable(cfg, dt, rng)[0]) / std::pow(dt, 1.0 / cfg.alpha);
        for (auto& v : b) v = std::abs(sample_isotropic_stable(cfg, 1.0, rng)[0]);
        CHECK(ks_statistic_two(a, b) <= ks_critical_two(n, n, 0.01));
    }

    SUBCASE("rank-based isotropy in two dimensions") {
        StableConfig cfg;
        cfg.alpha = 1.4;
        cfg.dim = 2;
        Rng rng(6, 2);
        const std::size_t n = 40000;
        // direction cosines of isotropic vectors are uniform on the circle:
        // test E[cos 2 theta] = E[sin 2 theta] = 0
        double c2 = 0.0, s2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const auto v = sample_isotropic_stable(cfg, 1.0, rng);
            const double th = std::atan2(v[1], v[0]);
            c2 += std::cos(2.0 * th);
            s2 += std::sin(2.0 * th);
        }
        const double sigma = std::sqrt(0.5 / double(n));
        CHECK(std::abs(c2 / double(n)) <= 3.0 * sigma);
        CHECK(std::abs(s2 / double(n)) <= 3.0 * sigma);
    }

    SUBCASE("d = 1 reduction agrees with the direct sampler") {
        StableConfig cfg;
        cfg.alpha = 1.5;
        Rng rng(7, 3);
        const std::size_t n = 30000;
        std::vector<double> sub(n), direct(n);
        for (auto& v : sub) v = sample_isotropic_stable(cfg, 1.0, rng)[0];
        for (auto& v : direct) v = sample_1d_stable(1.5, rng);
        CHECK(ks_statistic_two(sub, direct) <= ks_critical_two(n, n, 0.01));
    }
}

TEST_CASE("compensated small jumps") {
    StableConfig cfg;
    cfg.alpha = 1.5;
    cfg.r0 = 1.0;
    cfg.seed = 8;

    SUBCASE("variance matches the closed form") {
        Rng rng(8, 1);
        const double dt = 1e-3;
        const std::size_t n = 100000;
        std::vector<double> x(n);
        for (auto& v : x) v = sample_compensated_small_jumps(cfg, dt, rng);
        const double expected = small_jump_variance(cfg, dt);
        const double var = sample_variance(x);
        // fourth-moment-driven estimator noise for a heavy-ish sum; allow 5 sigma
        // of a conservative Gaussian proxy plus 2 percent systematic
        const double sigma = expected * std::sqrt(2.0 / double(n)) * 5.0;
        CHECK(std::abs(var - expected) <= sigma + 0.02 * expected);
    }

    SUBCASE("zero mean") {
        Rng rng(8, 2);
        const double dt = 1e-3;
        const std::size_t n = 100000;
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += sample_compensated_small_jumps(cfg, dt, rng);
        const double se = std::sqrt(small_jump_variance(cfg, dt) / double(n));
        CHECK(std::abs(acc / double(n)) <= 3.0 * se);
    }

    SUBCASE("recomposition with large jumps reproduces the stable law") {
        Rng rng(8, 13);
        const double t = 0.004;
        const std::size_t n = 40000;
        const double a = cfg.alpha;
        const double s_int = intensity_scale(a);
        const double big_rate = s_int * 2.0 * std::pow(cfg.r0, -a) / a;
        std::vector<double> recomposed(n), direct(n);
        for (auto& v : recomposed) {
            double acc = sample_compensated_small_jumps(cfg, t, rng);
            const std::uint64_t nbig = rng.poisson(big_rate * t);
            for (std::uint64_t b = 0; b < nbig; ++b) {
                const double mag = cfg.r0 * std::pow(rng.uniform(), -1.0 / a);
                acc += (rng.uniform() < 0.5) ? mag : -mag;
            }
            v = acc;
        }
        for (auto& v : direct) v = std::pow(t, 1.0 / a) * sample_1d_stable(a, rng);
        CHECK(ks_statistic_two(recomposed, direct) <= ks_critical_two(n, n, 0.01));
    }

    SUBCASE("alpha <= 1 is rejected") {
        StableConfig bad = cfg;
        bad.alpha = 0.9;
        Rng rng(8, 4);
        CHECK_THROWS(sample_compensated_small_jumps(bad, 0.1, rng));
    }
}

TEST_CASE("noise bundles and paths") {
    StableConfig cfg;
    cfg.alpha = 1.4;
    cfg.seed = 9;

    SUBCASE("identical seeds and streams give bit-identical bundles") {
        const NoiseBundle a = make_noise_bundle(cfg, 0.5, 512, 3);
        const NoiseBundle b = make_noise_bundle(cfg, 0.5, 512, 3);
        REQUIRE(a.big_jumps.size() == b.big_jumps.size());
        for (std::size_t i = 0; i < a.big_jumps.size(); ++i) {
            CHECK(a.big_jumps[i].time == b.big_jumps[i].time);
            CHECK(a.big_jumps[i].size == b.big_jumps[i].size);
        }
        for (std::size_t i = 0; i < a.small_increments.size(); ++i)
            CHECK(a.small_increments[i] == b.small_increments[i]);
    }

    SUBCASE("different streams differ") {
        const NoiseBundle a = make_noise_bundle(cfg, 0.5, 512, 3);
        const NoiseBundle b = make_noise_bundle(cfg, 0.5, 512, 4);
        double gap = 0.0;
        for (std::size_t i = 0; i < a.small_increments.size(); ++i)
            gap = std::max(gap, std::abs(a.small_increments[i] - b.small_increments[i]));
        CHECK(gap > 0.0);
    }

    SUBCASE("path accumulates increments and records jumps above r0") {
        const NoiseBundle bundle = make_noise_bundle(cfg, 0.5, 512, 5);
        const StablePath path = path_from_bundle(bundle);
        CHECK(path.values.front() == 0.0);
        CHECK(path.jumps.size() == bundle.big_jumps.size());
        double acc = 0.0;
        for (double inc : bundle.small_increments) acc += inc;
        for (const auto& ev : bundle.big_jumps) acc += ev.size;
        CHECK(path.values.back() == doctest::Approx(acc).epsilon(1e-12));
    }
}
