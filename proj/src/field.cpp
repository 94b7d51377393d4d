#include "lpkinetic/field.hpp"

#include <cmath>
#include <stdexcept>

#include "lpkinetic/fft.hpp"
#include "lpkinetic/parallel.hpp"

namespace lpk {

Field::Field(GridSpec grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    grid_.validate();
    if (values_.size() != grid_.size())
        throw std::invalid_argument("Field: value count does not match grid size");
    for (double v : values_)
        if (!std::isfinite(v)) throw std::invalid_argument("Field: values must be finite");
}

Field Field::from_function(const GridSpec& grid,
                           const std::function<double(std::span<const double>)>& f) {
    std::vector<double> vals(grid.size());
    const std::size_t axes = grid.axes();
    parallel_for(vals.size(), [&](std::size_t lo, std::size_t hi) {
        std::vector<double> x(axes);
        for (std::size_t i = lo; i < hi; ++i) {
            auto multi = grid.unflat(i);
            for (std::size_t ax = 0; ax < axes; ++ax) x[ax] = grid.coord(ax, multi[ax]);
            vals[i] = f(x);
        }
    });
    return Field(grid, std::move(vals));
}

Field Field::zero(const GridSpec& grid) { return constant(grid, 0.0); }

Field Field::constant(const GridSpec& grid, double c) {
    return Field(grid, std::vector<double>(grid.size(), c));
}

const std::vector<std::complex<double>>& Field::spectrum() const {
    if (spectrum_.empty()) {
        spectrum_.assign(values_.begin(), values_.end());
        fft_forward(spectrum_, grid_.points);
    }
    return spectrum_;
}

Field Field::from_spectrum(const GridSpec& grid, std::vector<std::complex<double>> spec) {
    if (spec.size() != grid.size())
        throw std::invalid_argument("from_spectrum: size mismatch");
    std::vector<std::complex<double>> work = spec;
    fft_backward(work, grid.points);
    const double inv_n = 1.0 / double(grid.size());
    std::vector<double> vals(work.size());
    for (std::size_t i = 0; i < work.size(); ++i) vals[i] = work[i].real() * inv_n;
    Field f(grid, std::move(vals));
    f.spectrum_ = std::move(spec);
    return f;
}

Field Field::apply_multiplier(const std::function<double(std::span<const double>)>& mult) const {
    return apply_multiplier_complex(
        [&mult](std::span<const double> xi) { return std::complex<double>(mult(xi), 0.0); });
}

Field Field::apply_multiplier_complex(
    const std::function<std::complex<double>(std::span<const double>)>& mult) const {
    const auto& spec = spectrum();
    std::vector<std::complex<double>> out(spec.size());
    const std::size_t axes = grid_.axes();
    parallel_for(spec.size(), [&](std::size_t lo, std::size_t hi) {
        std::vector<double> xi(axes);
        for (std::size_t i = lo; i < hi; ++i) {
            auto multi = grid_.unflat(i);
            for (std::size_t ax = 0; ax < axes; ++ax) xi[ax] = grid_.freq(ax, multi[ax]);
            out[i] = mult(xi) * spec[i];
        }
    });
    return from_spectrum(grid_, std::move(out));
}

Field Field::derivative(std::size_t axis, unsigned order) const {
    return apply_multiplier_complex([axis, order](std::span<const double> xi) {
        std::complex<double> m(0.0, xi[axis]);
        std::complex<double> out(1.0, 0.0);
        for (unsigned k = 0; k < order; ++k) out *= m;
        return out;
    });
}

double Field::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

double Field::integral() const {
    double s = 0.0;
    for (double v : values_) s += v;
    return s * grid_.cell_volume();
}

double Field::integral_abs() const {
    double s = 0.0;
    for (double v : values_) s += std::abs(v);
    return s * grid_.cell_volume();
}

double Field::inner(const Field& o) const {
    check_same_grid(o);
    double s = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) s += values_[i] * o.values_[i];
    return s * grid_.cell_volume();
}

double Field::l2_norm() const { return std::sqrt(inner(*this)); }

Field Field::operator+(const Field& o) const {
    check_same_grid(o);
    std::vector<double> v(values_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] + o.values_[i];
    return Field(grid_, std::move(v));
}

Field Field::operator-(const Field& o) const {
    check_same_grid(o);
    std::vector<double> v(values_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] - o.values_[i];
    return Field(grid_, std::move(v));
}

Field Field::operator*(const Field& o) const {
    check_same_grid(o);
    std::vector<double> v(values_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] * o.values_[i];
    return Field(grid_, std::move(v));
}

Field Field::scaled(double c) const {
    std::vector<double> v(values_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * values_[i];
    return Field(grid_, std::move(v));
}

void Field::check_same_grid(const Field& o) const {
    if (grid_.points != o.grid_.points || grid_.half_width != o.grid_.half_width)
        throw std::invalid_argument("Field: grids do not match");
}

}  // namespace lpk
