#include "hsig/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hsig/operators.hpp"
#include "hsig/spectral.hpp"

namespace hsig::blaschke {

namespace {
using std::numbers::pi;

constexpr double kZeroGroupTol = 1e-9;

/// The grid's frequency spacing must divide the unit shift exactly.
int unit_shift_bins(const Grid& grid) {
    if (grid.dim != 1)
        throw std::invalid_argument("blaschke grids are 1-D");
    const double m = grid.half_extent[0] / pi;
    const double rounded = std::round(m);
    if (rounded < 1.0 || std::abs(m - rounded) > 1e-9 * std::max(1.0, m))
        throw std::invalid_argument(
            "incommensurate grid: half extent must be an integer multiple "
            "of pi so the unit frequency shift lands on bins");
    return static_cast<int>(rounded);
}

}  // namespace

BlaschkeProduct BlaschkeProduct::from_zeros(std::vector<cplx> zeros) {
    if (zeros.empty())
        throw std::invalid_argument("a Blaschke product needs at least one zero");
    for (const cplx& a : zeros)
        if (std::abs(a) > 1.0 - 1e-6)
            throw std::invalid_argument(
                "Blaschke zeros must satisfy |a| <= 1 - 1e-6");
    BlaschkeProduct bp;
    bp.zeros = std::move(zeros);
    for (const cplx& a : bp.zeros) {
        bool merged = false;
        for (std::size_t j = 0; j < bp.distinct.size() && !merged; ++j)
            if (std::abs(bp.distinct[j] - a) <= kZeroGroupTol) {
                ++bp.multiplicity[j];
                merged = true;
            }
        if (!merged) {
            bp.distinct.push_back(a);
            bp.multiplicity.push_back(1);
        }
    }
    return bp;
}

cplx blaschke_eval(const BlaschkeProduct& bp, cplx z) {
    if (std::abs(z) > 1.0 + 1e-12)
        throw std::invalid_argument("blaschke_eval requires |z| <= 1");
    cplx v{1.0, 0.0};
    for (const cplx& a : bp.zeros) v *= (z - a) / (1.0 - std::conj(a) * z);
    return v;
}

double phase(const BlaschkeProduct& bp, double t) {
    // Per factor, arg[(e^{it}-a)/(1-conj(a)e^{it})] = t - 2 Arg(1-conj(a)e^{it})
    // and the Arg argument stays in the right half plane, so each term is a
    // globally continuous branch.
    auto raw = [&](double s) {
        double th = 0.0;
        for (const cplx& a : bp.zeros)
            th += s - 2.0 * std::arg(1.0 - std::conj(a) *
                                               std::polar(1.0, s));
        return th;
    };
    const double at0 = raw(0.0);
    // shift so theta(0) is the principal argument of B(1)
    const double k = std::ceil((at0 - pi) / (2.0 * pi));
    return raw(t) - 2.0 * pi * k;
}

double phase_derivative(const BlaschkeProduct& bp, double t) {
    const cplx z = std::polar(1.0, t);
    double v = 0.0;
    for (const cplx& a : bp.zeros)
        v += (1.0 - std::norm(a)) / std::norm(z - a);
    return v;
}

EnvelopeSpectrum envelope_flat() {
    return {"flat", [](double) { return cplx{1.0, 0.0}; }};
}

EnvelopeSpectrum envelope_raised_cosine() {
    return {"raised_cosine", [](double xi) {
                return cplx{0.5 * (1.0 - std::cos(2.0 * pi * xi)), 0.0};
            }};
}

EnvelopeSpectrum envelope_half_gaussian(double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
    const double peak = 1.0;  // renormalized to unit peak at xi = -1/2
    return {"half_gaussian", [sigma, peak](double xi) {
                const double u = xi + 0.5;
                return cplx{peak * std::exp(-u * u / (2.0 * sigma * sigma)),
                            0.0};
            }};
}

EnvelopeSpectrum envelope_zero() {
    return {"zero", [](double) { return cplx{0.0, 0.0}; }};
}

EnvelopeSpectrum envelope_from_samples(std::vector<cplx> samples) {
    if (samples.size() < 2)
        throw std::invalid_argument("need at least two envelope samples");
    return {"samples", [s = std::move(samples)](double xi) {
                const double u = std::clamp(xi + 1.0, 0.0, 1.0) *
                                 static_cast<double>(s.size() - 1);
                const std::size_t i0 = std::min<std::size_t>(
                    static_cast<std::size_t>(u), s.size() - 2);
                const double w = u - static_cast<double>(i0);
                return (1.0 - w) * s[i0] + w * s[i0 + 1];
            }};
}

EnvelopeSpectrum envelope_by_name(const std::string& name) {
    if (name == "flat") return envelope_flat();
    if (name == "raised_cosine") return envelope_raised_cosine();
    if (name == "half_gaussian") return envelope_half_gaussian();
    if (name == "zero") return envelope_zero();
    throw std::invalid_argument("unknown envelope name: " + name);
}

EnvelopeSpec EnvelopeSpec::uniform(const BlaschkeProduct& bp,
                                   EnvelopeSpectrum spectrum) {
    EnvelopeSpec spec;
    spec.slots.resize(bp.distinct.size());
    for (std::size_t j = 0; j < bp.distinct.size(); ++j)
        spec.slots[j].assign(bp.multiplicity[j], spectrum);
    return spec;
}

namespace {

/// Smallest m with binom(m+l-1, l-1) |lambda|^m below the tail target.
int geometric_reach(double mod, int l, double target) {
    if (mod <= 0.0) return 0;
    double binom = 1.0;
    double pow = 1.0;
    for (int m = 0; m < 100000; ++m) {
        if (binom * pow < target) return m;
        pow *= mod;
        binom = binom * (m + l) / (m + 1.0);  // binom(m+l, l-1) update
    }
    throw std::invalid_argument("zero modulus too close to 1");
}

}  // namespace

Signal synthesize(const BlaschkeProduct& bp, const EnvelopeSpec& env,
                  const Grid& grid) {
    const int m_bins = unit_shift_bins(grid);
    if (env.slots.size() != bp.distinct.size())
        throw std::invalid_argument("envelope/zeros structure mismatch");
    for (std::size_t j = 0; j < env.slots.size(); ++j)
        if (static_cast<int>(env.slots[j].size()) != bp.multiplicity[j])
            throw std::invalid_argument("envelope/zeros structure mismatch");

    double max_mod = 0.0;
    int max_mult = 1;
    for (std::size_t j = 0; j < bp.distinct.size(); ++j) {
        max_mod = std::max(max_mod, std::abs(bp.distinct[j]));
        max_mult = std::max(max_mult, bp.multiplicity[j]);
    }
    const double reach =
        1.0 + geometric_reach(max_mod, max_mult, 1e-14) + bp.degree();
    if (grid.nyquist(0) < reach)
        throw std::invalid_argument(
            "grid bandwidth too small for the requested zeros");

    const int n = grid.samples_per_axis[0];
    const double dxi = grid.freq_spacing(0);

    // envelope coefficients on the m_bins+1 lattice points in [-1, 0]
    std::vector<std::vector<cplx>> coeff(env.slots.size() * max_mult);
    auto slot_at = [&](std::size_t j, int l) -> std::vector<cplx>& {
        return coeff[j * max_mult + (l - 1)];
    };
    for (std::size_t j = 0; j < env.slots.size(); ++j)
        for (int l = 1; l <= bp.multiplicity[j]; ++l) {
            auto& c = slot_at(j, l);
            c.resize(m_bins + 1);
            for (int k = 0; k <= m_bins; ++k) {
                const double xi = -1.0 + k * dxi;
                double w = (k == 0 || k == m_bins) ? 0.5 : 1.0;  // trapezoid
                c[k] = env.slots[j][l - 1].weight(xi) * w * dxi;
            }
        }

    Signal out = lattice::zero_signal(grid, lattice::Domain::space);
    for (int i = 0; i < n; ++i) {
        const double x = -grid.half_extent[0] + i * grid.spacing(0);
        const cplx emix = std::polar(1.0, -x);
        cplx total{0.0};
        for (std::size_t j = 0; j < bp.distinct.size(); ++j) {
            const cplx denom = 1.0 - bp.distinct[j] * emix;
            cplx denom_pow{1.0};
            for (int l = 1; l <= bp.multiplicity[j]; ++l) {
                denom_pow *= denom;
                const auto& c = slot_at(j, l);
                cplx cx{0.0};
                for (int k = 0; k <= m_bins; ++k) {
                    const double xi = -1.0 + k * dxi;
                    cx += c[k] * std::polar(1.0, x * xi);
                }
                total += cx / denom_pow;
            }
        }
        out.values[i] = cplx{total.real(), 0.0};
    }
    return out;
}

CertifyReport certify_membership(const Signal& f, const BlaschkeProduct& bp,
                                 double tolerance) {
    if (f.grid.dim != 1)
        throw std::invalid_argument("certification needs a 1-D signal");
    if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be > 0");
    double max_im = 0.0, max_mag = 0.0;
    for (const cplx& v : f.values) {
        max_im = std::max(max_im, std::abs(v.imag()));
        max_mag = std::max(max_mag, std::abs(v));
    }
    if (max_im > 1e-12 * std::max(1.0, max_mag))
        throw std::invalid_argument("certification expects a real signal");

    const int n = f.grid.samples_per_axis[0];
    Signal g = f, h = f, z = f;
    for (int i = 0; i < n; ++i) {
        const double x = -f.grid.half_extent[0] + i * f.grid.spacing(0);
        cplx u = blaschke_eval(bp, std::polar(1.0, x));
        const double mag = std::abs(u);
        if (mag > 0.0) u /= mag;  // |B| = 1 on the circle; scrub roundoff
        const double fx = f.values[i].real();
        g.values[i] = fx * u.real();
        h.values[i] = fx * u.imag();
        z.values[i] = fx * u;
    }

    const auto hilbert = operators::MultiplierOp::partial_hilbert(1, 1);
    const Signal hg = hilbert.apply(g);

    CertifyReport rep;
    rep.tolerance = tolerance;
    double num2 = 0.0, den2 = 0.0;
    for (int i = 0; i < n; ++i) {
        num2 += std::norm(hg.values[i] - h.values[i]);
        den2 += std::norm(f.values[i]);
    }
    rep.residual_real = den2 == 0.0 ? 0.0 : std::sqrt(num2 / den2);

    // Complex form on the spectrum, skipping the two zero-sign bins (the
    // kernel of the discrete Hilbert transform).
    const Signal zhat = spectral::dft(z);
    double cnum2 = 0.0, cden2 = 0.0;
    for (int k = 0; k < n; ++k) {
        const int s = f.grid.signed_index(0, k);
        cden2 += std::norm(zhat.values[k]);
        if (s == 0 || s == -n / 2) continue;
        const cplx mult{0.0, s > 0 ? -1.0 : 1.0};
        cnum2 += std::norm(mult * zhat.values[k] -
                           cplx{0.0, -1.0} * zhat.values[k]);
    }
    rep.residual_complex = cden2 == 0.0 ? 0.0 : std::sqrt(cnum2 / cden2);

    rep.passes_real = rep.residual_real < tolerance;
    rep.passes_complex = rep.residual_complex < tolerance;
    rep.agree = rep.passes_real == rep.passes_complex;
    return rep;
}

double difference_operator_max(const Signal& f_spectrum,
                               const BlaschkeProduct& bp) {
    if (f_spectrum.domain != lattice::Domain::frequency)
        throw std::invalid_argument("difference operator works on a spectrum");
    const Grid& grid = f_spectrum.grid;
    const int m_bins = unit_shift_bins(grid);
    const int n = grid.samples_per_axis[0];

    // coefficients of prod_j (tau - a_j) in powers of tau
    std::vector<cplx> tau_poly{1.0};
    for (const cplx& a : bp.zeros) {
        tau_poly.push_back(0.0);
        for (std::size_t k = tau_poly.size() - 1; k > 0; --k)
            tau_poly[k] = tau_poly[k - 1] - a * tau_poly[k];
        tau_poly[0] *= -a;
    }
    std::vector<cplx> iota_poly = tau_poly;
    for (cplx& c : iota_poly) c = std::conj(c);

    const auto& v = f_spectrum.values;
    auto at_signed = [&](long s) -> cplx {
        if (s < -n / 2 || s >= n / 2) return cplx{0.0};
        return v[s >= 0 ? s : s + n];
    };

    double peak = lattice::max_abs(f_spectrum);
    if (peak == 0.0) return 0.0;
    double worst = 0.0;
    const int deg = bp.degree();
    for (int s = -n / 2; s < n / 2; ++s) {
        if (s <= 0) {
            cplx acc{0.0};
            for (int k = 0; k <= deg; ++k)
                acc += tau_poly[k] * at_signed(s - static_cast<long>(k) * m_bins);
            worst = std::max(worst, std::abs(acc));
        }
        if (s >= 0) {
            cplx acc{0.0};
            for (int k = 0; k <= deg; ++k)
                acc += iota_poly[k] * at_signed(s + static_cast<long>(k) * m_bins);
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst / peak;
}

bool difference_operator_check(const Signal& f_spectrum,
                               const BlaschkeProduct& bp, double tolerance) {
    if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be > 0");
    return difference_operator_max(f_spectrum, bp) < tolerance;
}

Signal tensor_product(const std::vector<Signal>& factors) {
    if (factors.empty())
        throw std::invalid_argument("tensor product needs at least one factor");
    std::vector<int> dims;
    std::vector<double> extents;
    for (const auto& s : factors) {
        if (s.grid.dim != 1 || s.domain != lattice::Domain::space)
            throw std::invalid_argument(
                "tensor product factors must be 1-D space-domain signals");
        dims.push_back(s.grid.samples_per_axis[0]);
        extents.push_back(s.grid.half_extent[0]);
    }
    const Grid grid = lattice::make_grid(static_cast<int>(factors.size()),
                                         dims, extents);
    Signal out = lattice::zero_signal(grid, lattice::Domain::space);
    std::vector<int> bin(grid.dim, 0);
    for (std::size_t flat = 0; flat < out.values.size(); ++flat) {
        cplx v{1.0};
        for (int j = 0; j < grid.dim; ++j) v *= factors[j].values[bin[j]];
        out.values[flat] = v;
        for (int j = grid.dim - 1; j >= 0; --j) {
            if (++bin[j] < grid.samples_per_axis[j]) break;
            bin[j] = 0;
        }
    }
    return out;
}

}  // namespace hsig::blaschke
