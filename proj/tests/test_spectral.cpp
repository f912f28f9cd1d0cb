#include <numbers>
#include <random>

#include "doctest.h"
#include "hsig/spectral.hpp"
#include "support.hpp"

using namespace hsig::lattice;
using namespace hsig::spectral;
using std::numbers::pi;

namespace {
double rel_err(const Signal& got, const Signal& want) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < got.values.size(); ++i) {
        num += std::norm(got.values[i] - want.values[i]);
        den += std::norm(want.values[i]);
    }
    return den == 0.0 ? std::sqrt(num) : std::sqrt(num / den);
}
}  // namespace

TEST_CASE("dft of a constant concentrates 2L mass at DC") {
    const Grid g = make_grid(1, {8}, {pi});
    const Signal one =
        sample(g, [](const std::vector<double>&) { return cplx{1.0, 0.0}; });
    const Signal f = dft(one);
    CHECK(f.values[0].real() == doctest::Approx(2 * pi));  // mass 2L = 2 pi
    for (int k = 1; k < 8; ++k) CHECK(std::abs(f.values[k]) < 1e-12);
}

TEST_CASE("dft of cos has two symmetric peaks") {
    const Grid g = make_grid(1, {64}, {8 * pi});
    const Signal c = sample(g, [](const std::vector<double>& x) {
        return cplx{std::cos(x[0]), 0.0};
    });
    const Signal f = dft(c);
    // omega = 1 sits at signed index 8 on this grid
    CHECK(std::abs(f.values[8]) == doctest::Approx(8 * pi));
    CHECK(std::abs(f.values[64 - 8]) == doctest::Approx(8 * pi));
    double rest = 0.0;
    for (int k = 0; k < 64; ++k)
        if (k != 8 && k != 56) rest = std::max(rest, std::abs(f.values[k]));
    CHECK(rest < 1e-10);
}

TEST_CASE("dft matches the Gaussian closed form") {
    const Grid g = make_grid(1, {256}, {20.0});
    const Signal s = sample(g, [](const std::vector<double>& x) {
        return cplx{std::exp(-x[0] * x[0] / 2), 0.0};
    });
    const Signal f = dft(s);
    std::vector<int> bin(1);
    for (int k = 0; k < 256; ++k) {
        bin[0] = k;
        const double xi = frequency_of_bin(g, bin)[0];
        const double want = std::sqrt(2 * pi) * std::exp(-xi * xi / 2);
        CHECK(std::abs(f.values[k] - want) < 1e-8);
    }
}

TEST_CASE("dft agrees with the direct-sum oracle") {
    std::mt19937_64 rng(7);
    for (const Grid& g : {make_grid(1, {12}, {3.0}), make_grid(1, {10}, {2.0}),
                          make_grid(2, {6, 8}, {1.5, 2.5})}) {
        const Signal s = testsupport::random_signal(g, rng);
        CHECK(rel_err(dft(s), testsupport::brute_force_dft(s)) < 1e-12);
    }
}

TEST_CASE("idft inverts dft to 1e-12") {
    std::mt19937_64 rng(21);
    for (const Grid& g :
         {make_grid(1, {64}, {5.0}), make_grid(1, {50}, {7.0}),
          make_grid(2, {16, 12}, {2.0, 3.0}),
          make_grid(3, {8, 6, 4}, {1.0, 2.0, 0.5})}) {
        const Signal s = testsupport::random_signal(g, rng);
        CHECK(rel_err(idft(dft(s)), s) < 1e-12);
    }
}

TEST_CASE("idft of the zero spectrum is zero") {
    const Signal z = zero_signal(make_grid(1, {16}, {1.0}), Domain::frequency);
    for (const auto& v : idft(z).values) CHECK(std::abs(v) == 0.0);
}

TEST_CASE("idft of a single unit bin is a scaled complex exponential") {
    const Grid g = make_grid(1, {32}, {pi});
    Signal spec = zero_signal(g, Domain::frequency);
    spec.values[1] = 1.0;  // xi = 1
    const Signal s = idft(spec);
    const double scale = g.freq_spacing(0) / (2 * pi);  // 1 / (2L)
    for (int n = 0; n < 32; ++n) {
        const double x = -pi + n * g.spacing(0);
        CHECK(std::abs(s.values[n] - scale * std::polar(1.0, x)) < 1e-14);
    }
}

TEST_CASE("Parseval holds with the domain weights") {
    std::mt19937_64 rng(3);
    const Grid g = make_grid(2, {16, 16}, {2.0, 4.0});
    const Signal s = testsupport::random_signal(g, rng);
    const Signal f = dft(s);
    double space = 0.0, freq = 0.0;
    for (const auto& v : s.values) space += std::norm(v);
    for (const auto& v : f.values) freq += std::norm(v);
    space *= domain_weight(g, Domain::space);
    freq *= domain_weight(g, Domain::frequency);
    CHECK(freq == doctest::Approx(space).epsilon(1e-10));
}

TEST_CASE("multiplier identity and annihilation") {
    std::mt19937_64 rng(5);
    const Grid g = make_grid(1, {48}, {3.0});
    const Signal s = testsupport::random_signal(g, rng);
    const Signal same = apply_multiplier(
        s, [](const std::vector<double>&) { return cplx{1.0, 0.0}; });
    CHECK(rel_err(same, s) < 1e-12);
    const Signal zero = apply_multiplier(
        s, [](const std::vector<double>&) { return cplx{0.0, 0.0}; });
    for (const auto& v : zero.values) CHECK(std::abs(v) < 1e-14);
}

TEST_CASE("-i sgn multiplier maps cos to sin on a commensurate grid") {
    const Grid g = make_grid(1, {64}, {8 * pi});
    const Signal c = sample(g, [](const std::vector<double>& x) {
        return cplx{std::cos(x[0]), 0.0};
    });
    const Signal h = apply_multiplier(c, [](const std::vector<double>& xi) {
        const double s = xi[0] > 0 ? 1.0 : (xi[0] < 0 ? -1.0 : 0.0);
        return cplx{0.0, -s};
    });
    for (int n = 0; n < 64; ++n) {
        const double x = -8 * pi + n * g.spacing(0);
        CHECK(std::abs(h.values[n] - std::sin(x)) < 1e-10);
    }
}

TEST_CASE("multiplier application composes pointwise") {
    std::mt19937_64 rng(11);
    const Grid g = make_grid(2, {12, 12}, {2.0, 2.0});
    const Signal s = testsupport::random_signal(g, rng);
    auto m1 = [](const std::vector<double>& xi) {
        return cplx{std::cos(xi[0]), 0.3};
    };
    auto m2 = [](const std::vector<double>& xi) {
        return cplx{1.0 / (1.0 + xi[1] * xi[1]), -0.2};
    };
    auto prod = [&](const std::vector<double>& xi) { return m1(xi) * m2(xi); };
    const Signal lhs = apply_multiplier(s, prod);
    const Signal rhs = apply_multiplier(apply_multiplier(s, m2), m1);
    CHECK(rel_err(lhs, rhs) < 1e-10);
}

TEST_CASE("sampled complex exponentials are exact eigenvectors") {
    const Grid g = make_grid(2, {16, 16}, {pi, 2.0});
    std::vector<int> bin{3, 13};
    const auto omega = frequency_of_bin(g, bin);
    const Signal e = sample(g, [&](const std::vector<double>& x) {
        return std::polar(1.0, omega[0] * x[0] + omega[1] * x[1]);
    });
    // hyperoctant-constant multiplier, value depends only on the signs
    auto m = [](const std::vector<double>& xi) {
        return cplx{xi[0] > 0 ? 2.0 : -1.0, xi[1] > 0 ? 0.5 : 1.5};
    };
    const Signal out = apply_multiplier(e, m);
    const cplx want = m(omega);
    for (std::size_t i = 0; i < e.values.size(); ++i)
        CHECK(std::abs(out.values[i] - want * e.values[i]) < 1e-12);
}
