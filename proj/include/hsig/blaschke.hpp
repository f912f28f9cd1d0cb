#pragma once

// Finite Blaschke products, their circle phase functions, closed-form
// synthesis of basic signals f with H(f cos theta) = f sin theta, numerical
// certification of that identity, and the backshift difference-operator
// characterization of membership.
//
// Synthesis is grid-native: envelope spectra are read on the grid's own
// frequency lattice, which requires the lattice to contain the unit shift
// (L must be an integer multiple of pi). That makes synthesized signals
// certify to machine precision instead of inheriting slow-tail truncation
// bias from the continuum closed forms.

#include <functional>
#include <string>

#include "hsig/lattice.hpp"

namespace hsig::blaschke {

using lattice::cplx;
using lattice::Grid;
using lattice::Signal;

struct BlaschkeProduct {
    std::vector<cplx> zeros;  // each strictly inside the unit disk
    // grouped view of the same zeros
    std::vector<cplx> distinct;
    std::vector<int> multiplicity;

    int degree() const { return static_cast<int>(zeros.size()); }
    static BlaschkeProduct from_zeros(std::vector<cplx> zeros);
};

/// prod_j (z - a_j) / (1 - conj(a_j) z); |z| <= 1 required.
cplx blaschke_eval(const BlaschkeProduct& bp, cplx z);

/// Continuous branch of arg B(e^{it}), pinned to the principal argument at
/// t = 0. Increases by 2 pi n per period.
double phase(const BlaschkeProduct& bp, double t);

/// theta' = sum_j (1 - |a_j|^2) / |e^{it} - a_j|^2 >= 0.
double phase_derivative(const BlaschkeProduct& bp, double t);

/// A coefficient-function spectrum on [-1, 0].
struct EnvelopeSpectrum {
    std::string name;
    std::function<cplx(double)> weight;  // evaluated at xi in [-1, 0]
};

EnvelopeSpectrum envelope_flat();
EnvelopeSpectrum envelope_raised_cosine();
EnvelopeSpectrum envelope_half_gaussian(double sigma = 0.1);
EnvelopeSpectrum envelope_zero();
/// Uniformly spaced samples over [-1, 0] inclusive, linearly interpolated.
EnvelopeSpectrum envelope_from_samples(std::vector<cplx> samples);
/// Lookup by name: flat | raised_cosine | half_gaussian | zero.
EnvelopeSpectrum envelope_by_name(const std::string& name);

/// One spectrum per (distinct zero j, power l <= multiplicity_j) slot.
struct EnvelopeSpec {
    std::vector<std::vector<EnvelopeSpectrum>> slots;
    static EnvelopeSpec uniform(const BlaschkeProduct& bp,
                                EnvelopeSpectrum spectrum);
};

/// Samples Re( sum_{j,l} c_jl(x) / (1 - lambda_j e^{-ix})^l ) on the grid,
/// with each c_jl realized as the Fourier series of its spectrum on the
/// grid's frequency bins in [-1, 0] (trapezoid end weights).
/// Requires a 1-D grid with L/pi integral and enough bandwidth for the
/// geometric tails of the zero moduli.
Signal synthesize(const BlaschkeProduct& bp, const EnvelopeSpec& env,
                  const Grid& grid);

struct CertifyReport {
    double residual_real = 0.0;     // ||H(f cos th) - f sin th|| / ||f||
    double residual_complex = 0.0;  // ||H(Z) + iZ|| / ||Z||, Z = f e^{i th},
                                    // zero-sign bins excluded (kernel of the
                                    // discrete H)
    double tolerance = 0.0;
    bool passes_real = false;
    bool passes_complex = false;
    bool agree = false;
};

/// Checks H(f cos theta_a) = f sin theta_a in both the real and the complex
/// form. f must be real on a 1-D grid.
CertifyReport certify_membership(const Signal& f, const BlaschkeProduct& bp,
                                 double tolerance);

/// Max over bins of |(tau_a f-hat)(xi)| on xi <= 0 and |(iota_abar f-hat)(xi)|
/// on xi >= 0, relative to max |f-hat|. The unit backshift must be a whole
/// number of bins; bins shifted past the window count as zero.
double difference_operator_max(const Signal& f_spectrum,
                               const BlaschkeProduct& bp);

bool difference_operator_check(const Signal& f_spectrum,
                               const BlaschkeProduct& bp, double tolerance);

/// Convenience tensorization: outer product of 1-D signals on the product
/// grid (axis order = argument order).
Signal tensor_product(const std::vector<Signal>& factors);

}  // namespace hsig::blaschke
