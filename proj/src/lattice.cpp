#include "hsig/lattice.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hsig::lattice {

std::size_t Grid::size() const {
    std::size_t n = 1;
    for (int nj : samples_per_axis) n *= static_cast<std::size_t>(nj);
    return n;
}

double Grid::spacing(int axis) const {
    return 2.0 * half_extent[axis] / samples_per_axis[axis];
}

double Grid::freq_spacing(int axis) const {
    return std::numbers::pi / half_extent[axis];
}

double Grid::nyquist(int axis) const {
    return freq_spacing(axis) * samples_per_axis[axis] / 2.0;
}

int Grid::signed_index(int axis, int k) const {
    const int n = samples_per_axis[axis];
    return k < n / 2 ? k : k - n;
}

std::vector<double> Grid::point(const std::vector<int>& bin) const {
    std::vector<double> x(dim);
    for (int j = 0; j < dim; ++j)
        x[j] = -half_extent[j] + bin[j] * spacing(j);
    return x;
}

void Grid::unflatten(std::size_t flat, std::vector<int>& bin) const {
    bin.resize(dim);
    for (int j = dim - 1; j >= 0; --j) {
        const int n = samples_per_axis[j];
        bin[j] = static_cast<int>(flat % n);
        flat /= n;
    }
}

std::size_t Grid::flatten(const std::vector<int>& bin) const {
    std::size_t flat = 0;
    for (int j = 0; j < dim; ++j) {
        const int n = samples_per_axis[j];
        if (bin[j] < 0 || bin[j] >= n)
            throw std::out_of_range("bin index out of range on axis " +
                                    std::to_string(j + 1));
        flat = flat * n + bin[j];
    }
    return flat;
}

Grid make_grid(int dim, std::vector<int> samples_per_axis,
               std::vector<double> half_extent) {
    if (dim < 1) throw std::invalid_argument("grid dimension must be >= 1");
    if (static_cast<int>(samples_per_axis.size()) != dim ||
        static_cast<int>(half_extent.size()) != dim)
        throw std::invalid_argument("grid axis lists must match dimension");
    for (int j = 0; j < dim; ++j) {
        const int n = samples_per_axis[j];
        if (n < 4 || n % 2 != 0)
            throw std::invalid_argument("samples per axis must be even and >= 4");
        if (!(half_extent[j] > 0.0))
            throw std::invalid_argument("half extent must be positive");
    }
    Grid g;
    g.dim = dim;
    g.samples_per_axis = std::move(samples_per_axis);
    g.half_extent = std::move(half_extent);
    return g;
}

Signal sample(const Grid& grid,
              const std::function<cplx(const std::vector<double>&)>& f) {
    Signal s;
    s.grid = grid;
    s.domain = Domain::space;
    s.values.resize(grid.size());
    std::vector<int> bin(grid.dim, 0);
    std::vector<double> x(grid.dim);
    for (std::size_t flat = 0; flat < s.values.size(); ++flat) {
        for (int j = 0; j < grid.dim; ++j)
            x[j] = -grid.half_extent[j] + bin[j] * grid.spacing(j);
        s.values[flat] = f(x);
        // row-major increment, last axis fastest
        for (int j = grid.dim - 1; j >= 0; --j) {
            if (++bin[j] < grid.samples_per_axis[j]) break;
            bin[j] = 0;
        }
    }
    return s;
}

std::vector<double> frequency_of_bin(const Grid& grid,
                                     const std::vector<int>& bin) {
    if (static_cast<int>(bin.size()) != grid.dim)
        throw std::invalid_argument("bin rank mismatch");
    std::vector<double> xi(grid.dim);
    for (int j = 0; j < grid.dim; ++j) {
        if (bin[j] < 0 || bin[j] >= grid.samples_per_axis[j])
            throw std::out_of_range("bin index out of range on axis " +
                                    std::to_string(j + 1));
        xi[j] = grid.freq_spacing(j) * grid.signed_index(j, bin[j]);
    }
    return xi;
}

Signal zero_signal(const Grid& grid, Domain domain) {
    Signal s;
    s.grid = grid;
    s.domain = domain;
    s.values.assign(grid.size(), cplx{0.0, 0.0});
    return s;
}

double norm_l2(const Signal& s) {
    double acc = 0.0;
    for (const cplx& v : s.values) acc += std::norm(v);
    return std::sqrt(acc);
}

double max_abs(const Signal& s) {
    double m = 0.0;
    for (const cplx& v : s.values) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace hsig::lattice
