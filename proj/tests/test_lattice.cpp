#include <numbers>

#include "doctest.h"
#include "hsig/lattice.hpp"

using namespace hsig::lattice;
using std::numbers::pi;

TEST_CASE("make_grid basic fields") {
    const Grid g = make_grid(1, {8}, {pi});
    CHECK(g.dim == 1);
    CHECK(g.spacing(0) == doctest::Approx(pi / 4));
    CHECK(g.point({0})[0] == doctest::Approx(-pi));
    CHECK(g.point({7})[0] == doctest::Approx(3 * pi / 4));

    const Grid g2 = make_grid(2, {4, 4}, {1.0, 1.0});
    CHECK(g2.size() == 16);
    CHECK(g2.point({0, 0}) == std::vector<double>{-1.0, -1.0});
    CHECK(g2.point({1, 3})[0] == doctest::Approx(-0.5));
    CHECK(g2.point({1, 3})[1] == doctest::Approx(0.5));
}

TEST_CASE("make_grid rejects bad shapes") {
    CHECK_THROWS_AS(make_grid(1, {7}, {1.0}), std::invalid_argument);  // odd N
    CHECK_THROWS_AS(make_grid(1, {2}, {1.0}), std::invalid_argument);  // tiny N
    CHECK_THROWS_AS(make_grid(1, {8}, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(2, {8}, {1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(0, {}, {}), std::invalid_argument);
}

TEST_CASE("sample evaluates pointwise") {
    const Grid g = make_grid(1, {8}, {pi});
    const Signal s = sample(g, [](const std::vector<double>& x) {
        return cplx{std::cos(x[0]), 0.0};
    });
    for (int k = 0; k < 8; ++k)
        CHECK(s.values[k].real() == doctest::Approx(std::cos(-pi + k * pi / 4)));

    const Signal z = sample(g, [](const std::vector<double>&) { return cplx{}; });
    for (const auto& v : z.values) CHECK(v == cplx{0.0});
}

TEST_CASE("sample is row-major with axis 1 slowest") {
    const Grid g = make_grid(2, {4, 4}, {1.0, 1.0});
    const Signal s = sample(g, [](const std::vector<double>& x) {
        return cplx{x[0], 0.0};
    });
    // first coordinate changes once per row of 4
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(s.values[4 * i + j].real() ==
                  doctest::Approx(-1.0 + 0.5 * i));
}

TEST_CASE("frequency map: DC, unit bin, Nyquist") {
    const Grid g = make_grid(1, {8}, {pi});
    CHECK(frequency_of_bin(g, {0})[0] == 0.0);  // DC
    CHECK(frequency_of_bin(g, {1})[0] == doctest::Approx(1.0));
    CHECK(g.signed_index(0, 4) == -4);  // Nyquist
    CHECK(frequency_of_bin(g, {4})[0] == doctest::Approx(-4.0));
    CHECK_THROWS_AS(frequency_of_bin(g, {8}), std::out_of_range);
}

TEST_CASE("frequency map is odd in the signed index away from Nyquist") {
    const Grid g = make_grid(1, {16}, {2.5});
    for (int k = 1; k < 8; ++k) {
        const double plus = frequency_of_bin(g, {k})[0];
        const double minus = frequency_of_bin(g, {16 - k})[0];
        CHECK(plus == doctest::Approx(-minus));
    }
}
