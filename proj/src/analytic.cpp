#include "hsig/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hsig::analytic {

MultiplierOp concentration_operator(const SignPattern& pattern) {
    const int d = pattern.dim();
    std::vector<std::pair<std::vector<int>, cplx>> terms;
    // Expand prod_j (H_0 + i nu_j H_j) into 2^d compositions, then drop H_0.
    for (int subset = 0; subset < (1 << d); ++subset) {
        std::vector<int> alpha;
        cplx c{1.0};
        for (int j = 0; j < d; ++j) {
            if ((subset >> j) & 1) {
                alpha.push_back(j + 1);
                c *= cplx{0.0, 1.0} * static_cast<double>(pattern.signs[j]);
            }
        }
        terms.emplace_back(std::move(alpha), c);
    }
    terms.emplace_back(std::vector<int>{}, cplx{-1.0});
    return MultiplierOp::from_compositions(d, terms);
}

Signal analytic_signal(const Signal& s, const SignPattern& pattern) {
    if (pattern.dim() != s.grid.dim)
        throw std::invalid_argument("pattern/signal dimension mismatch");
    double max_im = 0.0, max_mag = 0.0;
    for (const cplx& v : s.values) {
        max_im = std::max(max_im, std::abs(v.imag()));
        max_mag = std::max(max_mag, std::abs(v));
    }
    if (max_im > 1e-12 * std::max(1.0, max_mag))
        throw std::invalid_argument("analytic_signal expects a real signal");

    Signal t = concentration_operator(pattern).apply(s);
    for (std::size_t i = 0; i < t.values.size(); ++i)
        t.values[i] += s.values[i];
    return t;
}

std::pair<Signal, Signal> amplitude_phase(const Signal& s) {
    Signal amp = s, phase = s;
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        const double r = std::abs(s.values[i]);
        amp.values[i] = r;
        phase.values[i] = r == 0.0 ? 0.0 : std::arg(s.values[i]);
    }
    return {std::move(amp), std::move(phase)};
}

Signal unwrap_phase_1d(const Signal& phase) {
    if (phase.grid.dim != 1)
        throw std::invalid_argument("unwrap requires a 1-D signal");
    Signal out = phase;
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double offset = 0.0;
    for (std::size_t i = 1; i < out.values.size(); ++i) {
        const double prev = phase.values[i - 1].real();
        const double cur = phase.values[i].real();
        double delta = cur - prev;
        while (delta > std::numbers::pi) delta -= two_pi, offset -= two_pi;
        while (delta <= -std::numbers::pi) delta += two_pi, offset += two_pi;
        out.values[i] = cur + offset;
    }
    return out;
}

Signal instantaneous_frequency_1d(const Signal& unwrapped_phase) {
    if (unwrapped_phase.grid.dim != 1)
        throw std::invalid_argument("instantaneous frequency requires 1-D");
    const auto& v = unwrapped_phase.values;
    const double h = unwrapped_phase.grid.spacing(0);
    Signal out = unwrapped_phase;
    const std::size_t n = v.size();
    if (n < 2) throw std::invalid_argument("signal too short");
    out.values[0] = (v[1].real() - v[0].real()) / h;
    out.values[n - 1] = (v[n - 1].real() - v[n - 2].real()) / h;
    for (std::size_t i = 1; i + 1 < n; ++i)
        out.values[i] = (v[i + 1].real() - v[i - 1].real()) / (2.0 * h);
    return out;
}

}  // namespace hsig::analytic
