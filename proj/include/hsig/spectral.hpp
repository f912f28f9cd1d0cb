#pragma once

// Forward/inverse transforms between space and frequency domain, and
// pointwise application of Fourier multipliers.
//
// Conventions (fixed project-wide):
//   forward:  F(xi_k) = prod_j dx_j * sum_n f(x_n) e^{-i (x_n, xi_k)}
//   inverse:  f(x_n)  = (2 pi)^-d * prod_j dxi_j * sum_k F(xi_k) e^{+i (x_n, xi_k)}
// so the discrete pair approximates the continuous transforms directly and
// the round trip is the identity to machine precision.

#include <functional>
#include <span>

#include "hsig/lattice.hpp"

namespace hsig::spectral {

using lattice::cplx;
using lattice::Domain;
using lattice::Grid;
using lattice::Signal;

Signal dft(const Signal& s);
Signal idft(const Signal& s);

/// idft(m(xi) . dft(s)); m is evaluated at the exact bin frequencies,
/// including the DC and Nyquist bins.
Signal apply_multiplier(
    const Signal& s,
    const std::function<cplx(const std::vector<double>&)>& m);

/// Same as apply_multiplier with m precomputed per bin (flat row-major order).
Signal apply_multiplier_table(const Signal& s, std::span<const cplx> m);

/// Parseval-consistent squared-norm weights: space weight prod dx_j,
/// frequency weight prod dxi_j / (2 pi)^d.
double domain_weight(const Grid& grid, Domain domain);

/// Unnormalized in-place multidimensional FFT over a raw row-major array
/// (e^{-i} kernel when forward). Plumbing for convolution work; the
/// lattice-aware transforms above are the public pair.
void raw_fft(const std::vector<int>& dims, std::vector<cplx>& data,
             bool forward);

}  // namespace hsig::spectral
