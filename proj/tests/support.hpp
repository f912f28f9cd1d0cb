#pragma once

// Test-only helpers: independent brute-force oracles and random generators.
// Nothing here may call into the FFT path it is used to check.

#include <complex>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include "hsig/lattice.hpp"
#include "hsig/operators.hpp"

namespace testsupport {

using hsig::lattice::cplx;
using hsig::lattice::Grid;
using hsig::lattice::Signal;

/// O(N^2) direct evaluation of the forward transform convention:
/// F(xi_k) = prod dx * sum_n f(x_n) exp(-i x_n . xi_k). Small grids only.
inline Signal brute_force_dft(const Signal& s) {
    const Grid& g = s.grid;
    Signal out = s;
    out.domain = hsig::lattice::Domain::frequency;
    double w = 1.0;
    for (int j = 0; j < g.dim; ++j) w *= g.spacing(j);

    const std::size_t total = g.size();
    std::vector<std::vector<double>> points(total), freqs(total);
    std::vector<int> bin(g.dim, 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
        points[flat] = g.point(bin);
        freqs[flat] = hsig::lattice::frequency_of_bin(g, bin);
        for (int j = g.dim - 1; j >= 0; --j) {
            if (++bin[j] < g.samples_per_axis[j]) break;
            bin[j] = 0;
        }
    }
    for (std::size_t k = 0; k < total; ++k) {
        cplx acc{0.0};
        for (std::size_t n = 0; n < total; ++n) {
            double dot = 0.0;
            for (int j = 0; j < g.dim; ++j) dot += points[n][j] * freqs[k][j];
            acc += s.values[n] * std::polar(1.0, -dot);
        }
        out.values[k] = acc * w;
    }
    return out;
}

inline Signal random_signal(const Grid& g, std::mt19937_64& rng,
                            bool real_valued = false) {
    std::normal_distribution<double> dist;
    Signal s = hsig::lattice::zero_signal(g);
    for (auto& v : s.values)
        v = real_valued ? cplx{dist(rng), 0.0} : cplx{dist(rng), dist(rng)};
    return s;
}

/// Monte-Carlo check of quadrant-union closure under addition: sample pairs
/// of points from the union and look for a sum landing outside.
inline bool mc_closed_under_addition(
    const std::set<hsig::operators::SignPattern>& patterns, int trials,
    std::mt19937_64& rng) {
    const int d = patterns.begin()->dim();
    std::vector<hsig::operators::SignPattern> list(patterns.begin(),
                                                   patterns.end());
    std::uniform_int_distribution<std::size_t> pick(0, list.size() - 1);
    std::uniform_real_distribution<double> mag(0.0, 1.0);
    auto member = [&](const std::vector<double>& x) {
        for (const auto& p : patterns) {
            bool ok = true;
            for (int j = 0; j < d && ok; ++j) ok = p.signs[j] * x[j] >= 0.0;
            if (ok) return true;
        }
        return false;
    };
    std::vector<double> x(d), y(d), sum(d);
    for (int t = 0; t < trials; ++t) {
        const auto& ps = list[pick(rng)];
        const auto& pt = list[pick(rng)];
        for (int j = 0; j < d; ++j) {
            x[j] = ps.signs[j] * mag(rng);
            y[j] = pt.signs[j] * mag(rng);
            sum[j] = x[j] + y[j];
        }
        if (!member(sum)) return false;
    }
    return true;
}

}  // namespace testsupport
