#include "lpkinetic/picard.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lpkinetic/parallel.hpp"
#include "lpkinetic/rng.hpp"

namespace lpk {

void PicardConfig::validate() const {
    jump.validate();
    if (!(jump.alpha > 1.0 && jump.alpha < 2.0))
        throw std::invalid_argument("PicardConfig: alpha must be in (1,2)");
    if (!(lambda > 0.0)) throw std::invalid_argument("PicardConfig: lambda must be > 0");
    if (!(horizon > 0.0)) throw std::invalid_argument("PicardConfig: horizon must be > 0");
    if (time_nodes < 3) throw std::invalid_argument("PicardConfig: need at least 3 time nodes");
    if (nv_core < 2 || nx < 2) throw std::invalid_argument("PicardConfig: grid too small");
    if (paths_halo > paths_core)
        throw std::invalid_argument("PicardConfig: paths_halo must not exceed paths_core");
}

std::vector<double> PicardConfig::v_nodes() const {
    const double dv = 2.0 * v_core / double(nv_core - 1);
    const std::size_t halo_each = std::size_t(std::ceil((v_halo - v_core) / dv));
    const std::size_t n = nv_core + 2 * halo_each;
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = -v_core - double(halo_each) * dv + dv * double(i);
    return out;
}

std::vector<double> PicardConfig::x_nodes() const {
    std::vector<double> out(nx);
    const double dx = 2.0 * x_half / double(nx - 1);
    for (std::size_t i = 0; i < nx; ++i) out[i] = -x_half + dx * double(i);
    return out;
}

std::vector<double> PicardConfig::time_slices() const {
    std::vector<double> out(time_nodes);
    const double dt = horizon / double(time_nodes - 1);
    for (std::size_t i = 0; i < time_nodes; ++i) out[i] = dt * double(i);
    return out;
}

std::size_t PicardConfig::core_v_begin() const {
    const double dv = 2.0 * v_core / double(nv_core - 1);
    return std::size_t(std::ceil((v_halo - v_core) / dv));
}

std::size_t PicardConfig::core_v_end() const { return core_v_begin() + nv_core; }

double SpaceTimeField::interp(std::size_t it, double x, double v) const {
    if (xs.size() < 2 || vs.size() < 2) return 0.0;
    const double dx = xs[1] - xs[0], dv = vs[1] - vs[0];
    const double xi = (x - xs.front()) / dx;
    const double vi = (v - vs.front()) / dv;
    if (xi < 0.0 || vi < 0.0 || xi > double(xs.size() - 1) || vi > double(vs.size() - 1))
        return 0.0;
    const std::size_t ix = std::min(std::size_t(xi), xs.size() - 2);
    const std::size_t iv = std::min(std::size_t(vi), vs.size() - 2);
    const double wx = xi - double(ix), wv = vi - double(iv);
    return (1.0 - wx) * ((1.0 - wv) * at(it, ix, iv) + wv * at(it, ix, iv + 1)) +
           wx * ((1.0 - wv) * at(it, ix + 1, iv) + wv * at(it, ix + 1, iv + 1));
}

namespace {

// state-independent event skeleton shared by every grid node (common random
// numbers): event times and raw jump sizes on eps < |w| <= 1 under the measure
// 2 dw/|w|^{1+alpha}, plus one standard normal per inter-event gap
struct PathSkeleton {
    std::vector<double> t;
    std::vector<double> w;
    std::vector<double> gap_normal;  // size t.size() + 1
};

PathSkeleton make_skeleton(const PicardConfig& cfg, Rng& rng) {
    const double a = cfg.jump.alpha;
    const double eps = cfg.small_jump_cutoff;
    const double rate = 4.0 * (std::pow(eps, -a) - 1.0) / a;
    PathSkeleton sk;
    const std::uint64_t n = rng.poisson(rate * cfg.horizon);
    sk.t.resize(n);
    sk.w.resize(n);
    for (std::uint64_t i = 0; i < n; ++i) sk.t[i] = cfg.horizon * rng.uniform();
    std::sort(sk.t.begin(), sk.t.end());
    const double lo = std::pow(eps, -a), hi = 1.0;
    for (auto& w : sk.w) {
        const double mag = std::pow(lo - rng.uniform() * (lo - hi), -1.0 / a);
        w = (rng.uniform() < 0.5) ? mag : -mag;
    }
    sk.gap_normal.resize(n + 1);
    for (auto& g : sk.gap_normal) g = rng.normal();
    return sk;
}

// gaussian replacement scale^2 per unit time for the sub-eps jumps
double replacement_var(const PicardConfig& cfg, const PhiTable& phi, double v_state) {
    const double a = cfg.jump.alpha;
    const double c1 = phi.origin_slope(v_state);
    return 4.0 * c1 * c1 * std::pow(cfg.small_jump_cutoff, 2.0 - a) / (2.0 - a);
}

// replay the skeleton from v0, writing the v position at each time slice
void replay(const PicardConfig& cfg, const PhiTable& phi, const PathSkeleton& sk, double v0,
            const std::vector<double>& slices, std::vector<double>& vpos) {
    const double b2 = cfg.drift[1];
    double v = v0;
    double t = 0.0;
    std::size_t q = 0;
    auto fill_until = [&](double t_end) {
        while (q < slices.size() && slices[q] <= t_end + 1e-15) {
            vpos[q] = v + b2 * (slices[q] - t);
            ++q;
        }
    };
    for (std::size_t i = 0; i < sk.t.size(); ++i) {
        fill_until(sk.t[i]);
        const double gap = sk.t[i] - t;
        const double sig = std::sqrt(replacement_var(cfg, phi, v) * std::max(gap, 0.0));
        v += b2 * gap + sig * sk.gap_normal[i];
        v += phi(v, sk.w[i]);
        t = sk.t[i];
    }
    fill_until(cfg.horizon);
    // final gap Gaussian affects nothing recorded after the last slice
}

}  // namespace

PhiPath simulate_phi_sde(const PicardConfig& cfg, const PhiTable& phi, double x0, double v0,
                         std::uint64_t stream) {
    cfg.validate();
    Rng rng(cfg.seed, stream);
    const PathSkeleton sk = make_skeleton(cfg, rng);
    const auto slices = cfg.time_slices();
    PhiPath out;
    out.times = slices;
    out.v.resize(slices.size());
    out.x.resize(slices.size());
    replay(cfg, phi, sk, v0, slices, out.v);
    for (std::size_t q = 0; q < slices.size(); ++q) out.x[q] = x0 + cfg.drift[0] * slices[q];
    out.jump_count = sk.t.size();
    if (std::abs(out.v.back()) > 1e9 || std::abs(out.x.back()) > 1e9)
        throw std::runtime_error("simulate_phi_sde: blow-up guard tripped");
    return out;
}

FkResult feynman_kac_solve(const PicardConfig& cfg, const PhiTable& phi,
                           const std::function<double(std::size_t, double, double)>& src_slice) {
    cfg.validate();
    const auto slices = cfg.time_slices();
    const auto xs = cfg.x_nodes();
    const auto vs = cfg.v_nodes();
    const std::size_t q_count = slices.size();
    const double dt = slices[1] - slices[0];
    const std::size_t vb = cfg.core_v_begin(), ve = cfg.core_v_end();

    FkResult out;
    out.u.times = slices;
    out.u.xs = xs;
    out.u.vs = vs;
    out.u.data.assign(q_count * xs.size() * vs.size(), 0.0);

    const std::size_t node_count = xs.size() * vs.size();
    const std::size_t field_size = q_count * node_count;

    // path-major accumulation: each path builds its skeleton once and is
    // replayed from every v node (common random numbers across nodes); chunked
    // per-worker buffers are reduced in chunk order for determinism
    const std::size_t workers = std::max<std::size_t>(1, worker_count());
    const std::size_t chunk = (cfg.paths_core + workers - 1) / workers;
    const std::size_t chunks = (cfg.paths_core + chunk - 1) / chunk;
    std::vector<std::vector<double>> acc(chunks), sum0(chunks), sumsq0(chunks);

    parallel_for(cfg.paths_core, [&](std::size_t lo, std::size_t hi) {
        const std::size_t c = lo / chunk;
        acc[c].assign(field_size, 0.0);
        sum0[c].assign(node_count, 0.0);
        sumsq0[c].assign(node_count, 0.0);
        std::vector<double> vpos(q_count), decay(q_count), u_of_m(q_count);
        for (std::size_t q = 0; q < q_count; ++q)
            decay[q] = std::exp(-cfg.lambda * slices[q]);
        std::vector<double> weighted(q_count);
        for (std::size_t p = lo; p < hi; ++p) {
            Rng rng(cfg.seed, 0x5151 + p);
            const PathSkeleton sk = make_skeleton(cfg, rng);
            const bool core_only = (p >= cfg.paths_halo);
            for (std::size_t iv = 0; iv < vs.size(); ++iv) {
                const bool core = (iv >= vb && iv < ve);
                if (core_only && !core) continue;
                replay(cfg, phi, sk, vs[iv], slices, vpos);
                for (std::size_t ix = 0; ix < xs.size(); ++ix) {
                    // weighted source values along the path, then trapezoid
                    // sums u(tau_m) = sum_q src(tau_{m+q}, z(tau_q))
                    for (std::size_t m = 0; m < q_count; ++m) {
                        double integral = 0.0;
                        const std::size_t span = q_count - m;
                        for (std::size_t q = 0; q < span; ++q) {
                            const double weight = (q == 0 || q == span - 1) ? 0.5 : 1.0;
                            const double x_here = xs[ix] + cfg.drift[0] * slices[q];
                            integral +=
                                weight * decay[q] * src_slice(m + q, x_here, vpos[q]);
                        }
                        u_of_m[m] = (span > 1) ? integral * dt : 0.0;
                    }
                    const std::size_t nid = ix * vs.size() + iv;
                    for (std::size_t m = 0; m < q_count; ++m)
                        acc[c][m * node_count + nid] += u_of_m[m];
                    sum0[c][nid] += u_of_m[0];
                    sumsq0[c][nid] += u_of_m[0] * u_of_m[0];
                }
            }
        }
    });
    std::vector<double> total(field_size, 0.0), t_sum0(node_count, 0.0), t_sumsq0(node_count, 0.0);
    for (std::size_t c = 0; c < chunks; ++c) {
        if (acc[c].empty()) continue;
        for (std::size_t i = 0; i < field_size; ++i) total[i] += acc[c][i];
        for (std::size_t i = 0; i < node_count; ++i) {
            t_sum0[i] += sum0[c][i];
            t_sumsq0[i] += sumsq0[c][i];
        }
    }
    for (std::size_t m = 0; m < q_count; ++m)
        for (std::size_t nid = 0; nid < node_count; ++nid) {
            const std::size_t iv = nid % vs.size();
            const bool core = (iv >= vb && iv < ve);
            const double paths = double(core ? cfg.paths_core : cfg.paths_halo);
            out.u.data[m * node_count + nid] = total[m * node_count + nid] / paths;
        }
    for (std::size_t ix = 0; ix < xs.size(); ++ix)
        for (std::size_t iv = vb; iv < ve; ++iv) {
            const std::size_t nid = ix * vs.size() + iv;
            const double n = double(cfg.paths_core);
            const double mean = t_sum0[nid] / n;
            const double var = std::max(0.0, t_sumsq0[nid] / n - mean * mean) / (n - 1.0);
            out.core_se = std::max(out.core_se, std::sqrt(var));
        }
    return out;
}

std::vector<double> large_jump_apply(const PicardConfig& cfg, const SpaceTimeField& u,
                                     std::size_t it) {
    const double a = cfg.jump.alpha;
    const auto& xs = u.xs;
    const auto& vs = u.vs;
    std::vector<double> out(xs.size() * vs.size(), 0.0);
    // log-spaced Gauss points over [1, wmax]
    const std::size_t octaves =
        std::max<std::size_t>(1, std::size_t(std::ceil(std::log2(cfg.large_jump_wmax))));
    std::vector<std::pair<double, double>> nodes;  // (w, weight incl. 2 w^{-1-a} dw)
    const double step = std::log(cfg.large_jump_wmax) / double(octaves * cfg.large_jump_octave_nodes);
    for (std::size_t i = 0; i < octaves * cfg.large_jump_octave_nodes; ++i) {
        const double lw = step * (double(i) + 0.5);
        const double w = std::exp(lw);
        nodes.emplace_back(w, step * 2.0 * std::pow(w, -a));  // midpoint rule in log w
    }
    const double tail_rate = 2.0 * std::pow(cfg.large_jump_wmax, -a) / a;
    for (std::size_t ix = 0; ix < xs.size(); ++ix) {
        for (std::size_t iv = 0; iv < vs.size(); ++iv) {
            const double x = xs[ix], v = vs[iv];
            const double uc = u.at(it, ix, iv);
            double acc = 0.0;
            for (const auto& [w, wt] : nodes) {
                const double d2 = u.interp(it, x, v + w) + u.interp(it, x, v - w) - 2.0 * uc;
                acc += wt * cfg.jump.kappa(v, w) * d2;
            }
            acc += -2.0 * uc * cfg.jump.kappa(v, cfg.large_jump_wmax) * tail_rate;
            out[ix * vs.size() + iv] = acc;
        }
    }
    return out;
}

PicardResult picard_solve(const PicardConfig& cfg,
                          const std::function<double(double, double)>& f) {
    cfg.validate();
    const auto vs = cfg.v_nodes();
    const PhiTable phi(cfg.jump, vs.front(), vs.back(), 96);
    const auto xs = cfg.x_nodes();
    const auto slices = cfg.time_slices();
    const std::size_t vb = cfg.core_v_begin(), ve = cfg.core_v_end();

    PicardResult result;
    SpaceTimeField prev;  // u_0 = 0
    prev.times = slices;
    prev.xs = xs;
    prev.vs = vs;
    prev.data.assign(slices.size() * xs.size() * vs.size(), 0.0);
    SpaceTimeField large = prev;  // Lbar u_0 = 0

    double prev_diff = -1.0;
    for (std::size_t n = 1; n <= cfg.max_iterations; ++n) {
        auto src = [&](std::size_t it, double x, double v) {
            return f(x, v) + large.interp(it, x, v);
        };
        FkResult fk = feynman_kac_solve(cfg, phi, src);
        result.fk_se = std::max(result.fk_se, fk.core_se);
        double diff = 0.0;
        for (std::size_t it = 0; it < slices.size(); ++it)
            for (std::size_t ix = 0; ix < xs.size(); ++ix)
                for (std::size_t iv = vb; iv < ve; ++iv)
                    diff = std::max(diff, std::abs(fk.u.at(it, ix, iv) - prev.at(it, ix, iv)));
        result.history.sup_diff.push_back(diff);
        if (prev_diff > 0.0) result.history.ratio.push_back(diff / prev_diff);
        prev_diff = diff;
        prev = std::move(fk.u);
        // refresh the large-jump correction for the next source
        for (std::size_t it = 0; it < slices.size(); ++it) {
            const auto slice = large_jump_apply(cfg, prev, it);
            for (std::size_t ix = 0; ix < xs.size(); ++ix)
                for (std::size_t iv = 0; iv < vs.size(); ++iv)
                    large.at(it, ix, iv) = slice[ix * vs.size() + iv];
        }
        if (result.history.ratio.size() >= 2 && result.history.ratio.back() < 1.0 &&
            diff < 1e-4 * (1.0 + result.history.sup_diff.front()))
            break;
    }
    result.history.contracted = !result.history.ratio.empty();
    for (std::size_t i = 1; i < result.history.ratio.size(); ++i)
        result.history.contracted = result.history.contracted && result.history.ratio[i] < 1.0;
    result.u = std::move(prev);
    result.large = std::move(large);
    return result;
}

}  // namespace lpk
