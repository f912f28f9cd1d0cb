#include <numbers>
#include <random>

#include "doctest.h"
#include "hsig/analytic.hpp"
#include "hsig/spectral.hpp"
#include "support.hpp"

using namespace hsig::lattice;
using namespace hsig::analytic;
using hsig::operators::SignPattern;
using std::numbers::pi;

namespace {

// random real signal with spectrum away from DC, Nyquist and the axes
Signal random_band_limited(const Grid& g, std::mt19937_64& rng) {
    std::normal_distribution<double> dist;
    Signal spec = zero_signal(g, Domain::frequency);
    std::vector<int> bin(g.dim, 0);
    for (std::size_t flat = 0; flat < spec.values.size(); ++flat) {
        bool inside = true;
        for (int j = 0; j < g.dim; ++j) {
            const int s = g.signed_index(j, bin[j]);
            const int n = g.samples_per_axis[j];
            if (std::abs(s) < 2 || std::abs(s) > n / 4) inside = false;
        }
        if (inside) spec.values[flat] = {dist(rng), dist(rng)};
        for (int j = g.dim - 1; j >= 0; --j) {
            if (++bin[j] < g.samples_per_axis[j]) break;
            bin[j] = 0;
        }
    }
    Signal s = hsig::spectral::idft(spec);
    for (auto& v : s.values) v = {v.real(), 0.0};  // hermitian-ize the cheap way
    return s;
}

}  // namespace

TEST_CASE("concentration operator quadrant values") {
    const auto t1 = concentration_operator(SignPattern::parse("+"));
    CHECK(std::abs(t1.quadrant_value(SignPattern::parse("+")) - cplx{1.0}) <
          1e-12);
    CHECK(std::abs(t1.quadrant_value(SignPattern::parse("-")) - cplx{-1.0}) <
          1e-12);
    // matches i H in the coefficient picture
    CHECK(std::abs(t1.coeffs()[0]) < 1e-12);
    CHECK(std::abs(t1.coeffs()[1] - cplx{0.0, 1.0}) < 1e-12);

    const auto tpp = concentration_operator(SignPattern::parse("++"));
    CHECK(std::abs(tpp.quadrant_value(SignPattern::parse("++")) - cplx{3.0}) <
          1e-12);
    for (const char* q : {"--", "+-", "-+"})
        CHECK(std::abs(tpp.quadrant_value(SignPattern::parse(q)) -
                       cplx{-1.0}) < 1e-12);

    const auto tmm = concentration_operator(SignPattern::parse("--"));
    CHECK(std::abs(tmm.quadrant_value(SignPattern::parse("--")) - cplx{3.0}) <
          1e-12);
    CHECK(std::abs(tmm.quadrant_value(SignPattern::parse("++")) - cplx{-1.0}) <
          1e-12);
}

TEST_CASE("analytic signal of cos is the complex exponential") {
    const Grid g = make_grid(1, {64}, {8 * pi});
    const Signal c = sample(g, [](const std::vector<double>& x) {
        return cplx{std::cos(x[0]), 0.0};
    });
    const Signal a = analytic_signal(c, SignPattern::parse("+"));
    for (int n = 0; n < 64; ++n) {
        const double x = -8 * pi + n * g.spacing(0);
        CHECK(std::abs(a.values[n] - std::polar(1.0, x)) < 1e-10);
    }
}

TEST_CASE("2-D analytic signal of cos cos is e^{i(x1+x2)}") {
    const Grid g = make_grid(2, {16, 16}, {pi, pi});
    const Signal c = sample(g, [](const std::vector<double>& x) {
        return cplx{std::cos(x[0]) * std::cos(x[1]), 0.0};
    });
    const Signal a = analytic_signal(c, SignPattern::parse("++"));
    std::vector<int> bin(2, 0);
    for (std::size_t flat = 0; flat < a.values.size(); ++flat) {
        const auto x = g.point(bin);
        CHECK(std::abs(a.values[flat] - std::polar(1.0, x[0] + x[1])) < 1e-9);
        for (int j = 1; j >= 0; --j) {
            if (++bin[j] < 16) break;
            bin[j] = 0;
        }
    }
}

TEST_CASE("analytic signal of zero is zero, complex input rejected") {
    const Grid g = make_grid(1, {16}, {1.0});
    const Signal z = zero_signal(g);
    const Signal a = analytic_signal(z, SignPattern::parse("+"));
    for (const auto& v : a.values) CHECK(std::abs(v) == 0.0);

    Signal c = z;
    c.values[3] = {0.0, 1.0};
    CHECK_THROWS_AS(analytic_signal(c, SignPattern::parse("+")),
                    std::invalid_argument);
}

TEST_CASE("spectrum concentrates on the chosen quadrant") {
    std::mt19937_64 rng(53);
    const Grid g = make_grid(2, {32, 32}, {pi, pi});
    for (const char* q : {"++", "-+", "--"}) {
        const SignPattern pattern = SignPattern::parse(q);
        const Signal s = random_band_limited(g, rng);
        const Signal a = analytic_signal(s, pattern);
        const Signal spec = hsig::spectral::dft(a);
        const Signal base = hsig::spectral::dft(s);

        double inside = 0.0, outside = 0.0;
        std::vector<int> bin(2, 0);
        for (std::size_t flat = 0; flat < spec.values.size(); ++flat) {
            bool in_closed = true, open = true;
            for (int j = 0; j < 2; ++j) {
                const int sgn = g.signed_index(j, bin[j]);
                if (sgn * pattern.signs[j] < 0) in_closed = false;
                if (sgn == 0 || sgn == -16) open = false;
            }
            if (in_closed)
                inside += std::norm(spec.values[flat]);
            else
                outside += std::norm(spec.values[flat]);
            if (in_closed && open)  // interior bins carry 2^d * s-hat
                CHECK(std::abs(spec.values[flat] - 4.0 * base.values[flat]) <
                      1e-10 * (1.0 + std::abs(base.values[flat])));
            for (int j = 1; j >= 0; --j) {
                if (++bin[j] < 32) break;
                bin[j] = 0;
            }
        }
        CHECK(outside < 1e-10 * (inside + outside));
    }
}

TEST_CASE("real-part recovery in one dimension") {
    std::mt19937_64 rng(59);
    const Grid g = make_grid(1, {64}, {4.0});
    const Signal s = random_band_limited(g, rng);
    const Signal a = analytic_signal(s, SignPattern::parse("+"));
    for (std::size_t i = 0; i < s.values.size(); ++i)
        CHECK(std::abs(a.values[i].real() - s.values[i].real()) < 1e-10);
}

TEST_CASE("doubled-quadrant real-part identity in two dimensions") {
    // With spectrum confined to Q u -Q, the real part returns 2^(d-1) s.
    std::mt19937_64 rng(61);
    const Grid g = make_grid(2, {32, 32}, {pi, pi});
    const SignPattern pattern = SignPattern::parse("++");
    Signal spec = zero_signal(g, Domain::frequency);
    std::normal_distribution<double> dist;
    for (int rep = 0; rep < 40; ++rep) {
        const int k0 = 2 + static_cast<int>(rng() % 6);
        const int k1 = 2 + static_cast<int>(rng() % 6);
        const cplx v{dist(rng), dist(rng)};
        spec.values[g.flatten({k0, k1})] += v;
        spec.values[g.flatten({32 - k0, 32 - k1})] += std::conj(v);
    }
    Signal s = hsig::spectral::idft(spec);
    for (auto& v : s.values) v = {v.real(), 0.0};
    const Signal a = analytic_signal(s, pattern);
    for (std::size_t i = 0; i < s.values.size(); ++i)
        CHECK(a.values[i].real() ==
              doctest::Approx(2.0 * s.values[i].real()).epsilon(1e-9));
}

TEST_CASE("negated pattern conjugates the analytic signal") {
    std::mt19937_64 rng(67);
    const Grid g = make_grid(2, {16, 16}, {2.0, 2.0});
    const Signal s = random_band_limited(g, rng);
    const Signal a = analytic_signal(s, SignPattern::parse("+-"));
    const Signal b = analytic_signal(s, SignPattern::parse("-+"));
    for (std::size_t i = 0; i < s.values.size(); ++i)
        CHECK(std::abs(b.values[i] - std::conj(a.values[i])) < 1e-10);
}

TEST_CASE("amplitude and phase extraction") {
    const Grid g = make_grid(1, {32}, {pi});
    const Signal e = sample(g, [](const std::vector<double>& x) {
        return std::polar(1.0, x[0]);
    });
    auto [amp, phase] = amplitude_phase(e);
    for (const auto& v : amp.values) CHECK(v.real() == doctest::Approx(1.0));
    const Signal unwrapped = unwrap_phase_1d(phase);
    const Signal freq = instantaneous_frequency_1d(unwrapped);
    for (int n = 1; n + 1 < 32; ++n)
        CHECK(freq.values[n].real() == doctest::Approx(1.0));

    const Signal c = sample(g, [](const std::vector<double>&) {
        return cplx{2.5, 0.0};
    });
    auto [camp, cphase] = amplitude_phase(c);
    for (const auto& v : camp.values) CHECK(v.real() == doctest::Approx(2.5));
    for (const auto& v : cphase.values) CHECK(v.real() == 0.0);

    const Signal rot = sample(g, [](const std::vector<double>&) {
        return cplx{0.0, 2.0};  // 2 e^{i pi/2}
    });
    auto [ramp, rphase] = amplitude_phase(rot);
    for (const auto& v : ramp.values) CHECK(v.real() == doctest::Approx(2.0));
    for (const auto& v : rphase.values)
        CHECK(v.real() == doctest::Approx(pi / 2));

    // phase at amplitude zeros is 0 by convention
    auto [zamp, zphase] = amplitude_phase(zero_signal(g));
    for (const auto& v : zphase.values) CHECK(v.real() == 0.0);
}
