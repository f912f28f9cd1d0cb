#pragma once

// The algebra of hyperoctant-constant Fourier multipliers: partial Hilbert
// transforms, their compositions, and the two equivalent representations
// (composition coefficients c_S vs quadrant constants m_k).
//
// Quadrant storage order is the wire order: patterns are enumerated by a bit
// index in which axis 1 is the least significant bit and a clear bit means
// sign +1, so index 0 is the all-plus pattern. paper_order() gives the
// presentation order used in the literature (all-plus first, all-minus
// second).

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "hsig/lattice.hpp"

namespace hsig::operators {

using lattice::cplx;
using lattice::Grid;
using lattice::Signal;

/// An extreme point of [-1,1]^d; names one closed hyperoctant
/// Q = { xi : signs_j * xi_j >= 0 }.
struct SignPattern {
    std::vector<int> signs;  // each +1 or -1

    int dim() const { return static_cast<int>(signs.size()); }
    int bit_index() const;
    SignPattern negated() const;

    static SignPattern from_bit_index(int dim, int index);
    static SignPattern all_plus(int dim);
    /// Parse strings like "++-" or "++m" (m/p accepted for shell friendliness).
    static SignPattern parse(const std::string& text);
    std::string to_string() const;

    bool operator==(const SignPattern&) const = default;
    bool operator<(const SignPattern& o) const { return signs < o.signs; }
};

/// All 2^d patterns in wire order.
std::vector<SignPattern> all_patterns(int dim);

/// Presentation order: all-plus, all-minus, then the remaining patterns
/// lexicographically with axis 1 most significant and + before -.
std::vector<SignPattern> paper_order(int dim);

/// Hyperoctant-constant multiplier operator
///   T = sum_S c_S prod_{j in S} H_j,   m_k = sum_S c_S prod_{j in S} (-i nu^k_j).
/// Both representations are kept and stay consistent. d is capped at 10.
class MultiplierOp {
  public:
    static constexpr int max_dim = 10;

    static MultiplierOp identity(int dim);
    static MultiplierOp partial_hilbert(int axis, int dim);  // axis is 1-based
    static MultiplierOp from_quadrant_values(std::vector<cplx> values);
    /// coeffs indexed by subset bitmask (bit j-1 <=> axis j), size 2^d.
    static MultiplierOp from_coeffs(std::vector<cplx> coeffs);
    /// Reduces a linear combination of arbitrary compositions
    /// prod_j H_{alpha_j}, alpha_j in {0..d} with H_0 the identity, to the
    /// subset form (H_j H_j = -1 on nonzero signs is applied implicitly).
    static MultiplierOp from_compositions(
        int dim,
        const std::vector<std::pair<std::vector<int>, cplx>>& terms);

    int dim() const { return dim_; }
    const std::vector<cplx>& coeffs() const { return coeffs_; }
    const std::vector<cplx>& quadrant_values() const { return values_; }

    cplx quadrant_value(const SignPattern& p) const;
    /// Multiplier value for a sign vector that may contain zeros
    /// (sgn(0) = 0: subsets touching a zero axis drop out).
    cplx value_at_signs(const std::vector<int>& signs) const;

    MultiplierOp compose(const MultiplierOp& other) const;
    MultiplierOp scaled(cplx factor) const;

    bool is_scalar(double tol = 1e-12) const;

    /// Per-bin multiplier table for a grid, using the zero-sign rule on the
    /// DC and Nyquist bins of every axis.
    std::vector<cplx> bin_table(const Grid& grid) const;

    Signal apply(const Signal& s) const;

    std::string to_json() const;
    static MultiplierOp parse_json(const std::string& text);

  private:
    MultiplierOp() = default;
    int dim_ = 0;
    std::vector<cplx> coeffs_;  // by subset mask
    std::vector<cplx> values_;  // by pattern bit index
};

}  // namespace hsig::operators
