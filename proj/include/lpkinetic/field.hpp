#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "lpkinetic/grid.hpp"

namespace lpk {

// Real sampled function on a periodic grid with a lazily cached spectrum.
// Values are immutable through the public surface except via with_values();
// all operations return new Fields, so concurrent use is safe.
class Field {
  public:
    Field() = default;
    Field(GridSpec grid, std::vector<double> values);
    static Field from_function(const GridSpec& grid,
                               const std::function<double(std::span<const double>)>& f);
    static Field zero(const GridSpec& grid);
    static Field constant(const GridSpec& grid, double c);

    const GridSpec& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    double value(std::size_t flat_index) const { return values_[flat_index]; }
    std::size_t size() const { return values_.size(); }

    // DFT of values (unnormalized, cached)
    const std::vector<std::complex<double>>& spectrum() const;
    static Field from_spectrum(const GridSpec& grid, std::vector<std::complex<double>> spec);

    // pointwise multiplier in frequency space: g^ = mult(freqs) * f^
    Field apply_multiplier(const std::function<double(std::span<const double>)>& mult) const;
    Field apply_multiplier_complex(
        const std::function<std::complex<double>(std::span<const double>)>& mult) const;

    // spectral partial derivative along an axis
    Field derivative(std::size_t axis, unsigned order = 1) const;

    double max_abs() const;
    double integral() const;            // cell_volume * sum
    double integral_abs() const;        // cell_volume * sum of |values|
    double inner(const Field& other) const;  // cell_volume * sum f*g
    double l2_norm() const;

    Field operator+(const Field& o) const;
    Field operator-(const Field& o) const;
    Field operator*(const Field& o) const;  // pointwise
    Field scaled(double c) const;

  private:
    void check_same_grid(const Field& o) const;

    GridSpec grid_;
    std::vector<double> values_;
    mutable std::vector<std::complex<double>> spectrum_;  // empty = not cached
};

}  // namespace lpk
