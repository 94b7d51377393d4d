#include "lpkinetic/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace lpk {

namespace {

std::mutex g_plan_mutex;

using PlanKey = std::tuple<std::vector<std::size_t>, int /*sign*/, long /*axis, -1 = full*/>;

std::map<PlanKey, fftw_plan>& plan_cache() {
    static std::map<PlanKey, fftw_plan> cache;
    return cache;
}

fftw_plan get_full_plan(const std::vector<std::size_t>& shape, int sign, fftw_complex* buf) {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    const PlanKey key{shape, sign, -1};
    auto it = plan_cache().find(key);
    if (it != plan_cache().end()) return it->second;
    std::vector<int> dims(shape.begin(), shape.end());
    fftw_plan plan = fftw_plan_dft(int(dims.size()), dims.data(), buf, buf, sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!plan) throw std::runtime_error("fftw_plan_dft failed");
    plan_cache().emplace(key, plan);
    return plan;
}

fftw_plan get_axis_plan(const std::vector<std::size_t>& shape, int sign, std::size_t axis,
                        fftw_complex* buf) {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    const PlanKey key{shape, sign, long(axis)};
    auto it = plan_cache().find(key);
    if (it != plan_cache().end()) return it->second;
    std::size_t inner = 1;
    for (std::size_t ax = axis + 1; ax < shape.size(); ++ax) inner *= shape[ax];
    int n = int(shape[axis]);
    // one block of shape[axis] x inner, transformed along the first dimension
    fftw_plan plan = fftw_plan_many_dft(1, &n, int(inner), buf, nullptr, int(inner), 1, buf,
                                        nullptr, int(inner), 1, sign,
                                        FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!plan) throw std::runtime_error("fftw_plan_many_dft failed");
    plan_cache().emplace(key, plan);
    return plan;
}

void run_axis(std::vector<std::complex<double>>& data, const std::vector<std::size_t>& shape,
              std::size_t axis, int sign) {
    if (axis >= shape.size()) throw std::invalid_argument("fft axis out of range");
    std::size_t inner = 1;
    for (std::size_t ax = axis + 1; ax < shape.size(); ++ax) inner *= shape[ax];
    std::size_t total = 1;
    for (auto s : shape) total *= s;
    if (data.size() != total) throw std::invalid_argument("fft data/shape mismatch");
    const std::size_t block = shape[axis] * inner;
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan = get_axis_plan(shape, sign, axis, buf);
    for (std::size_t b = 0; b < total / block; ++b)
        fftw_execute_dft(plan, buf + b * block, buf + b * block);
}

}  // namespace

void fft_forward(std::vector<std::complex<double>>& data, const std::vector<std::size_t>& shape) {
    std::size_t total = 1;
    for (auto s : shape) total *= s;
    if (data.size() != total) throw std::invalid_argument("fft data/shape mismatch");
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(get_full_plan(shape, FFTW_FORWARD, buf), buf, buf);
}

void fft_backward(std::vector<std::complex<double>>& data, const std::vector<std::size_t>& shape) {
    std::size_t total = 1;
    for (auto s : shape) total *= s;
    if (data.size() != total) throw std::invalid_argument("fft data/shape mismatch");
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(get_full_plan(shape, FFTW_BACKWARD, buf), buf, buf);
}

void fft_forward_axis(std::vector<std::complex<double>>& data, const std::vector<std::size_t>& shape,
                      std::size_t axis) {
    run_axis(data, shape, axis, FFTW_FORWARD);
}

void fft_backward_axis(std::vector<std::complex<double>>& data, const std::vector<std::size_t>& shape,
                       std::size_t axis) {
    run_axis(data, shape, axis, FFTW_BACKWARD);
}

}  // namespace lpk
