#pragma once

#include <cstdint>
#include <cmath>

namespace lpk {

// xoshiro256++ with splitmix64 seeding. All randomness in the library flows
// through this generator so that results are reproducible across platforms
// (std::<random> distributions are not bit-stable between stdlib versions).
class Rng {
  public:
    Rng() : Rng(0, 0) {}
    Rng(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
        for (auto& si : s_) si = splitmix64(x);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform in (0,1); never returns 0 so log() is safe
    double uniform() {
        const std::uint64_t u = next_u64() >> 11;
        return (static_cast<double>(u) + 0.5) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    double exponential() { return -std::log(uniform()); }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, r2;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            r2 = u * u + v * v;
        } while (r2 >= 1.0 || r2 == 0.0);
        const double f = std::sqrt(-2.0 * std::log(r2) / r2);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

    // Poisson by inversion for small means, PTRS-style normal cutover not
    // needed at desk scale; counts here have mean << 1e7.
    std::uint64_t poisson(double mean) {
        if (mean <= 0.0) return 0;
        if (mean < 30.0) {
            const double l = std::exp(-mean);
            std::uint64_t k = 0;
            double p = uniform();
            while (p > l) {
                ++k;
                p *= uniform();
            }
            return k;
        }
        // split recursively; keeps inversion exact-ish without table methods
        const std::uint64_t half = poisson(mean / 2);
        return half + poisson(mean - mean / 2);
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t s_[4];
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace lpk
