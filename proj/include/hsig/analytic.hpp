#pragma once

// Multidimensional analytic signals A f = f + Tf concentrated on a chosen
// hyperoctant, plus amplitude/phase extraction.

#include "hsig/operators.hpp"

namespace hsig::analytic {

using lattice::cplx;
using lattice::Signal;
using operators::MultiplierOp;
using operators::SignPattern;

/// T = prod_j (H_0 + i nu_j H_j) - H_0. Its multiplier is 2^d - 1 on the
/// chosen open hyperoctant and -1 on every other open hyperoctant.
MultiplierOp concentration_operator(const SignPattern& pattern);

/// A s = s + T s for real s. The spectrum of the result is 2^d * s-hat on
/// the open hyperoctant named by pattern and 0 on all other open
/// hyperoctants; bins with a zero or Nyquist component follow the zero-sign
/// rule and are excluded from that dichotomy.
Signal analytic_signal(const Signal& s, const SignPattern& pattern);

/// Pointwise polar decomposition. Phase is the principal argument in
/// (-pi, pi], set to 0 where the amplitude vanishes.
std::pair<Signal, Signal> amplitude_phase(const Signal& s);

/// Cumulative 2 pi unwrapping along a 1-D phase signal. Unwrapping in
/// d >= 2 is path dependent and deliberately not offered.
Signal unwrap_phase_1d(const Signal& phase);

/// Centered finite differences of an unwrapped 1-D phase; one-sided at the
/// window ends. No distributional claims.
Signal instantaneous_frequency_1d(const Signal& unwrapped_phase);

}  // namespace hsig::analytic
