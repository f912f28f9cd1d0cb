#pragma once

// Numerical verification and exploration of the multidimensional Bedrosian
// identity T(fg) = f Tg for hyperoctant-constant multiplier operators:
// residuals, the characterization integrals, support-condition checkers,
// necessity regions, the explicit rational counterexample family, and the
// ball-separation (type two) failure demo.

#include <limits>
#include <set>
#include <string>
#include <variant>

#include "hsig/operators.hpp"

namespace hsig::bedrosian {

using lattice::cplx;
using lattice::Grid;
using lattice::Signal;
using operators::MultiplierOp;
using operators::SignPattern;

// ---------------------------------------------------------------------------
// Symbolic frequency-support descriptors. Membership is closed-set; the
// optional slack inflates a region by an L-infinity margin, which is how
// thresholded numerical supports are compared against exact regions.

struct AxisBox {  // prod_j [-a_j, b_j], a_j, b_j >= 0
    std::vector<double> a, b;
};
struct BoxComplementProduct {  // prod_j R \ (-b_j, a_j)
    std::vector<double> a, b;
};
struct QuadrantUnion {
    std::set<SignPattern> patterns;
};
struct NecessitySimplex {
    // { xi in Q :  sum_j nu_j xi_j / b_j >= 1 } union
    // { xi in -Q : sum_j (-nu_j xi_j) / a_j >= 1 }
    SignPattern pattern;
    std::vector<double> a, b;  // all > 0
};

struct SupportRegion {
    std::variant<AxisBox, BoxComplementProduct, QuadrantUnion,
                 NecessitySimplex> shape;

    int dim() const;
    bool member(const std::vector<double>& xi, double slack = 0.0) const;
};

SupportRegion necessity_region(const SignPattern& pattern,
                               std::vector<double> a, std::vector<double> b);

enum class Sufficiency { prop_box_complement, prop_quadrant_union, unknown };

/// Symbolic sufficiency test: the box/complement-product condition, or
/// matching quadrant unions closed under addition. `unknown` is not a
/// disproof.
Sufficiency check_support_condition(const SupportRegion& region_f,
                                    const SupportRegion& region_g);

/// True iff the union of the closed quadrants named by the patterns is
/// closed under vector addition. Combinatorial rule: for every pair (s, t)
/// in the set, every pattern that agrees with them where they agree must be
/// in the set.
bool closed_under_addition(const std::set<SignPattern>& patterns);

// ---------------------------------------------------------------------------

struct BedrosianReport {
    double residual_l2_rel = 0.0;
    double residual_max = 0.0;
    /// NaN unless characterization_residual was folded in by the caller.
    double characterization_max = std::numeric_limits<double>::quiet_NaN();
    bool holds = false;
    double tolerance = 0.0;
    bool absolute_residual = false;  // set when ||T(fg)|| is degenerate
    Grid grid;
    std::string operator_json;

    std::string to_json() const;
};

/// ||T(fg) - f Tg|| relative to ||T(fg)||; falls back to the absolute
/// residual when ||T(fg)|| < 1e-12 ||fg||.
BedrosianReport residual(const MultiplierOp& op, const Signal& f,
                         const Signal& g, double tolerance);

/// Max over sampled xi of | sum_{j != k} (m_k - m_j) int_{Q_j}
/// f-hat(xi - eta) g-hat(eta) d eta |, normalized by ||f-hat||_1 ||g-hat||_1.
/// Implemented as 2^d masked convolutions zero-padded to 2N per axis.
double characterization_residual(const MultiplierOp& op, const Signal& f,
                                 const Signal& g);

// ---------------------------------------------------------------------------

struct NecessityOptions {
    double support_threshold = 1e-8;  // relative to max |spectrum|
    double region_slack = 0.0;        // L-inf inflation for containment tests
    double residual_tolerance = 1e-3;
};

struct NecessityReport {
    bool applicable = false;
    std::string reason;  // set when inapplicable
    bool predicted_holds = false;
    bool agrees = false;
    BedrosianReport residual;
    /// Smallest slack at which f's support containment passes; reported so
    /// callers can see how threshold-sensitive the verdict is.
    double f_containment_slack = 0.0;
};

/// Tests the simplex necessity statement: with f's numerical support inside
/// the two corner boxes (corners present), the identity should hold exactly
/// when g's numerical support lies inside necessity_region(pattern, a, b).
NecessityReport check_necessity(const MultiplierOp& op, const Signal& f,
                                const Signal& g, const SignPattern& pattern,
                                const std::vector<double>& a,
                                const std::vector<double>& b,
                                const NecessityOptions& opts = {});

// ---------------------------------------------------------------------------

/// The rational pair whose product identity holds with full-line spectra:
/// F(x) = prod_j 1/(1+x_j^2), G(x) = prod_j g(x_j) with
/// g(t) = (1-2t^2)/(4+5t^2+t^4).
std::pair<Signal, Signal> counterexample_pair(int dim, const Grid& grid);

/// Pointwise 1-D closed forms of the counterexample factors.
double counterexample_f(double t);
double counterexample_g(double t);
double counterexample_hg(double t);  // t/(1+t^2) - 3t/(2(4+t^2))

struct TypeTwoDemo {
    Signal f, g;
    BedrosianReport residual;
    SignPattern quadrant_inside;   // l1: quadrant of the difference support
    SignPattern quadrant_outside;  // l2: quadrant of g's support
};

/// Ball-separated spectra that still break the identity: constructs bump
/// spectra with supp f-hat inside the unit ball and supp g-hat outside its
/// interior, following the contradiction geometry, and reports the residual
/// (which comes out large for every nontrivial non-scalar op). d = 2 only.
TypeTwoDemo type_two_demo(const MultiplierOp& op);

/// Truncated-Gaussian bump in the frequency domain: exp(-|xi-c|^2/(2s^2))
/// for |xi-c| <= 8s, else 0. Returned in frequency domain.
Signal bump_spectrum(const Grid& grid, const std::vector<double>& center,
                     double sigma);

/// Bins with |spectrum| > threshold * max, as frequency points.
std::vector<std::vector<double>> numerical_support(
    const Signal& spectrum, double threshold);

}  // namespace hsig::bedrosian
