#include "lpkinetic/lp_ops.hpp"

#include <cmath>
#include <stdexcept>

namespace lpk {

namespace {

void check_block_index(int j, const DyadicPartition& p) {
    if (j < 0 || j > p.j_max())
        throw std::invalid_argument("block index out of range [0, j_max]");
}

// greatest integer strictly less than s
int strict_floor(double s) {
    const double fl = std::floor(s);
    return (fl == s) ? int(fl) - 1 : int(fl);
}

}  // namespace

Field block_apply(const Field& f, int j, const DyadicPartition& p) {
    check_block_index(j, p);
    return f.apply_multiplier([&p, j](std::span<const double> xi) { return p.phi(xi, j); });
}

Field low_freq_cutoff(const Field& f, int k, const DyadicPartition& p) {
    if (k < 0 || k > p.j_max() + 1)
        throw std::invalid_argument("low_freq_cutoff: k out of range [0, j_max+1]");
    if (k == 0) return Field::zero(f.grid());
    return f.apply_multiplier(
        [&p, k](std::span<const double> xi) { return p.phi0_scaled(xi, k - 1); });
}

BesovResult besov_norm(const Field& f, double s, const DyadicPartition& p) {
    BesovResult out;
    out.profile.sup.resize(std::size_t(p.j_max()) + 1);
    for (int j = 0; j <= p.j_max(); ++j) {
        const double sj = block_apply(f, j, p).max_abs();
        out.profile.sup[std::size_t(j)] = sj;
        out.norm = std::max(out.norm, sj * std::pow(2.0, s * j));
    }
    return out;
}

Field difference_op(const Field& f, const Displacement& h, int order, bool symmetric) {
    const GridSpec& g = f.grid();
    if (h.cells.size() != g.axes())
        throw std::invalid_argument("difference_op: displacement dimension mismatch");
    if (order < 1) throw std::invalid_argument("difference_op: order must be >= 1");

    auto shift = [&g](const std::vector<double>& in, const std::vector<long>& cells, int sign) {
        std::vector<double> out(in.size());
        for (std::size_t i = 0; i < in.size(); ++i) {
            auto multi = g.unflat(i);
            for (std::size_t ax = 0; ax < g.axes(); ++ax) {
                const long n = long(g.points[ax]);
                long k = (long(multi[ax]) + sign * cells[ax]) % n;
                if (k < 0) k += n;
                multi[ax] = std::size_t(k);
            }
            out[i] = in[g.flat(multi)];
        }
        return out;
    };

    std::vector<double> cur = f.values();
    if (symmetric) {
        // delta_h^* delta_h f = f(.+h) + f(.-h) - 2 f
        auto plus = shift(cur, h.cells, +1);
        auto minus = shift(cur, h.cells, -1);
        for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = plus[i] + minus[i] - 2.0 * cur[i];
        return Field(g, std::move(cur));
    }
    for (int m = 0; m < order; ++m) {
        auto plus = shift(cur, h.cells, +1);
        for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = plus[i] - cur[i];
    }
    return Field(g, std::move(cur));
}

std::vector<Displacement> zygmund_displacements(const GridSpec& grid, std::uint64_t seed,
                                                std::size_t random_count) {
    std::vector<Displacement> out;
    for (std::size_t ax = 0; ax < grid.axes(); ++ax) {
        for (std::size_t c = 1; c <= grid.points[ax] / 4; c *= 2) {
            Displacement d{std::vector<long>(grid.axes(), 0)};
            d.cells[ax] = long(c);
            out.push_back(std::move(d));
        }
    }
    Rng rng(seed, 0x2d5f);
    for (std::size_t k = 0; k < random_count; ++k) {
        Displacement d{std::vector<long>(grid.axes(), 0)};
        bool nonzero = false;
        for (std::size_t ax = 0; ax < grid.axes(); ++ax) {
            const long cap = long(grid.points[ax] / 4);
            d.cells[ax] = long(rng.next_u64() % (2 * std::uint64_t(cap) + 1)) - cap;
            nonzero = nonzero || d.cells[ax] != 0;
        }
        if (nonzero) out.push_back(std::move(d));
    }
    return out;
}

double zygmund_norm(const Field& f, double s, const AnisotropyIndex& idx,
                    const std::vector<Displacement>& h_set) {
    if (!(s > 0.0))
        throw std::invalid_argument("zygmund_norm: s must be > 0 (use besov_norm for s < 0)");
    const GridSpec& g = f.grid();
    if (g.axes() != idx.total_dim())
        throw std::invalid_argument("zygmund_norm: grid does not match anisotropy index");
    const int order = strict_floor(s) + 1;
    double semi = 0.0;
    for (const auto& h : h_set) {
        std::vector<double> hx(g.axes());
        for (std::size_t ax = 0; ax < g.axes(); ++ax) hx[ax] = double(h.cells[ax]) * g.spacing(ax);
        const double ha = anisotropic_distance(hx, idx);
        if (ha == 0.0) continue;
        const double diff = difference_op(f, h, order).max_abs();
        semi = std::max(semi, diff / std::pow(ha, s));
    }
    return f.max_abs() + semi;
}

BonyResult bony_decompose(const Field& f, const Field& g, const DyadicPartition& p) {
    const int jmax = p.j_max();
    std::vector<Field> rf, rg;
    rf.reserve(std::size_t(jmax) + 1);
    rg.reserve(std::size_t(jmax) + 1);
    for (int j = 0; j <= jmax; ++j) {
        rf.push_back(block_apply(f, j, p));
        rg.push_back(block_apply(g, j, p));
    }
    // prefix sums S_k = sum_{j<k} R_j
    std::vector<Field> sf, sg;
    sf.push_back(Field::zero(f.grid()));
    sg.push_back(Field::zero(f.grid()));
    for (int j = 0; j <= jmax; ++j) {
        sf.push_back(sf.back() + rf[std::size_t(j)]);
        sg.push_back(sg.back() + rg[std::size_t(j)]);
    }

    Field low_high = Field::zero(f.grid());
    Field high_low = Field::zero(f.grid());
    for (int k = 2; k <= jmax; ++k) {
        low_high = low_high + sf[std::size_t(k) - 1] * rg[std::size_t(k)];
        high_low = high_low + sg[std::size_t(k) - 1] * rf[std::size_t(k)];
    }
    // diagonal sums k >= 0 with R_{-1} = 0 so that the three parts tile the
    // (j,k) interaction square exactly
    Field diag = Field::zero(f.grid());
    for (int k = 0; k <= jmax; ++k) {
        for (int i = -1; i <= 1; ++i) {
            const int l = k - i;
            if (l < 0 || l > jmax) continue;
            diag = diag + rf[std::size_t(k)] * rg[std::size_t(l)];
        }
    }

    BonyResult out{low_high, high_low, diag, 0.0};
    const Field resid = (low_high + high_low + diag) - f * g;
    out.residual = resid.max_abs();
    return out;
}

}  // namespace lpk
