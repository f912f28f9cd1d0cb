#pragma once

// Slow, independent ground truth for the 1-D Hilbert transform: symmetric
// principal-value quadrature plus a catalog of closed-form pairs. Shares no
// FFT code with the spectral module.

#include <functional>
#include <string>
#include <vector>

namespace hsig::oracle {

struct PvOptions {
    double cutoff = 1e4;      // integrate u in (0, cutoff]
    double tolerance = 1e-9;  // absolute quadrature tolerance
    std::size_t max_evals = 1'000'000;
    /// When > 0, the integrand tail is summed over whole periods of this
    /// length with iterated pairwise averaging; use for cos/sin-type inputs
    /// whose tails only converge conditionally.
    double oscillatory_period = 0.0;
};

/// (H f)(x) computed as (1/pi) int_0^cutoff (f(x-u) - f(x+u))/u du.
/// The symmetrization removes the singularity at u = 0.
/// Throws std::runtime_error if the evaluation budget is exhausted.
double pv_hilbert(const std::function<double(double)>& f, double x,
                  const PvOptions& opts = {});

/// A named (f, Hf) pair with a self-test hook.
struct ClosedFormPair {
    std::string name;
    std::function<double(double)> f;
    std::function<double(double)> hf;
    PvOptions pv;  // options that make pv_hilbert converge for this f
    /// Max |pv_hilbert(f, x) - hf(x)| over the given sample points.
    double self_test(const std::vector<double>& xs) const;
};

/// Catalog of closed forms: Poisson pairs 1/(a^2+t^2), sinusoid pairs,
/// sinc, and the rational pair whose transform mixes the two Poisson
/// scales. Every entry passes pv_hilbert cross-checking at 1e-6.
std::vector<ClosedFormPair> closed_forms();

}  // namespace hsig::oracle
