#pragma once

// Uniform sampling lattices on [-L_j, L_j)^d and the complex signal
// containers shared by every other component.

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace hsig::lattice {

using cplx = std::complex<double>;

/// Uniform axis-aligned grid. Axis j covers [-L_j, L_j) with N_j samples,
/// N_j even, so the DC and Nyquist bins both exist. Storage is row-major
/// with axis 1 slowest.
struct Grid {
    int dim = 0;
    std::vector<int> samples_per_axis;   // N_j, even, >= 4
    std::vector<double> half_extent;     // L_j > 0

    std::size_t size() const;
    double spacing(int axis) const;           // 2 L_j / N_j
    double freq_spacing(int axis) const;      // pi / L_j
    double nyquist(int axis) const;           // pi N_j / (2 L_j)

    /// Signed DFT index in [-N/2, N/2) for an unsigned bin index.
    int signed_index(int axis, int k) const;

    std::vector<double> point(const std::vector<int>& bin) const;

    void unflatten(std::size_t flat, std::vector<int>& bin) const;
    std::size_t flatten(const std::vector<int>& bin) const;

    bool operator==(const Grid&) const = default;
};

enum class Domain { space, frequency };

/// Complex samples on a Grid. The domain tag is fixed at construction;
/// transforms produce new Signals.
struct Signal {
    Grid grid;
    std::vector<cplx> values;
    Domain domain = Domain::space;
};

Grid make_grid(int dim, std::vector<int> samples_per_axis,
               std::vector<double> half_extent);

/// Pointwise evaluation of f on every grid point, space domain.
Signal sample(const Grid& grid,
              const std::function<cplx(const std::vector<double>&)>& f);

/// Frequency of a bin: xi_j = pi * k'_j / L_j with k' the signed index.
std::vector<double> frequency_of_bin(const Grid& grid,
                                     const std::vector<int>& bin);

Signal zero_signal(const Grid& grid, Domain domain = Domain::space);

double norm_l2(const Signal& s);                 // plain vector 2-norm
double max_abs(const Signal& s);

}  // namespace hsig::lattice
