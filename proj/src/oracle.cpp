#include "hsig/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hsig::oracle {

namespace {

using std::numbers::pi;

struct Budget {
    std::size_t left;
    double eval(const std::function<double(double)>& g, double u) {
        if (left == 0)
            throw std::runtime_error("pv_hilbert: evaluation budget exhausted");
        --left;
        return g(u);
    }
};

double simpson(double fa, double fm, double fb, double a, double b) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& g, Budget& budget,
                     double a, double b, double fa, double fm, double fb,
                     double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = budget.eval(g, lm);
    const double frm = budget.eval(g, rm);
    const double left = simpson(fa, flm, fm, a, m);
    const double right = simpson(fm, frm, fb, m, b);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_step(g, budget, a, m, fa, flm, fm, left, 0.5 * tol,
                         depth - 1) +
           adaptive_step(g, budget, m, b, fm, frm, fb, right, 0.5 * tol,
                         depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& g, Budget& budget,
                        double a, double b, double tol) {
    const double m = 0.5 * (a + b);
    const double fa = budget.eval(g, a);
    const double fm = budget.eval(g, m);
    const double fb = budget.eval(g, b);
    const double whole = simpson(fa, fm, fb, a, b);
    return adaptive_step(g, budget, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace

double pv_hilbert(const std::function<double(double)>& f, double x,
                  const PvOptions& opts) {
    if (!(opts.cutoff > 0.0)) throw std::invalid_argument("cutoff must be > 0");
    Budget budget{opts.max_evals};

    const double u_floor = 1e-7 * (1.0 + std::abs(x));
    auto integrand = [&](double u) {
        if (u < u_floor) u = u_floor;
        return (f(x - u) - f(x + u)) / (pi * u);
    };

    if (opts.oscillatory_period > 0.0) {
        // Head cell, then whole half-period cells with iterated pairwise
        // averaging of the partial sums (the cell integrals alternate in
        // sign for sinusoid-type tails).
        const double half = 0.5 * opts.oscillatory_period;
        double acc = adaptive_simpson(integrand, budget, 0.0, half,
                                      opts.tolerance);
        const std::size_t cells = 64;
        std::vector<double> partial(cells);
        double run = acc;
        for (std::size_t k = 1; k <= cells; ++k) {
            run += adaptive_simpson(integrand, budget, k * half,
                                    (k + 1) * half, opts.tolerance);
            partial[k - 1] = run;
        }
        for (std::size_t len = cells; len > 1; --len)
            for (std::size_t i = 0; i + 1 < len; ++i)
                partial[i] = 0.5 * (partial[i] + partial[i + 1]);
        return partial[0];
    }
    return adaptive_simpson(integrand, budget, 0.0, opts.cutoff,
                            opts.tolerance);
}

double ClosedFormPair::self_test(const std::vector<double>& xs) const {
    double worst = 0.0;
    for (double x : xs)
        worst = std::max(worst, std::abs(pv_hilbert(f, x, pv) - hf(x)));
    return worst;
}

std::vector<ClosedFormPair> closed_forms() {
    std::vector<ClosedFormPair> out;

    auto poisson = [](double alpha) {
        ClosedFormPair p;
        p.name = "poisson_alpha_" + std::to_string(alpha);
        p.f = [alpha](double t) { return 1.0 / (alpha * alpha + t * t); };
        p.hf = [alpha](double t) {
            return t / (alpha * (alpha * alpha + t * t));
        };
        p.pv = {.cutoff = 1e4, .tolerance = 1e-10};
        return p;
    };
    out.push_back(poisson(1.0));
    out.push_back(poisson(2.0));

    auto cosine = [](double omega) {
        ClosedFormPair p;
        p.name = "cos_omega_" + std::to_string(omega);
        p.f = [omega](double t) { return std::cos(omega * t); };
        p.hf = [omega](double t) { return std::sin(omega * t); };
        p.pv = {.tolerance = 1e-10,
                .oscillatory_period = 2.0 * std::numbers::pi / omega};
        return p;
    };
    out.push_back(cosine(1.0));
    out.push_back(cosine(2.0));

    {
        ClosedFormPair p;
        p.name = "sin_omega_1";
        p.f = [](double t) { return std::sin(t); };
        p.hf = [](double t) { return -std::cos(t); };
        p.pv = {.tolerance = 1e-10,
                .oscillatory_period = 2.0 * std::numbers::pi};
        out.push_back(std::move(p));
    }
    {
        ClosedFormPair p;
        p.name = "sinc";
        p.f = [](double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; };
        p.hf = [](double t) {
            return t == 0.0 ? 0.0 : (1.0 - std::cos(t)) / t;
        };
        p.pv = {.tolerance = 1e-10,
                .oscillatory_period = 2.0 * std::numbers::pi};
        out.push_back(std::move(p));
    }
    {
        // g = 1/(1+t^2) - 3/(4+t^2); its transform mixes the two Poisson
        // scales: Hg = t/(1+t^2) - 3t/(2(4+t^2)).
        ClosedFormPair p;
        p.name = "rational_mixed_scales";
        p.f = [](double t) {
            const double t2 = t * t;
            return (1.0 - 2.0 * t2) / (4.0 + 5.0 * t2 + t2 * t2);
        };
        p.hf = [](double t) {
            const double t2 = t * t;
            return t / (1.0 + t2) - 1.5 * t / (4.0 + t2);
        };
        p.pv = {.cutoff = 1e4, .tolerance = 1e-10};
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace hsig::oracle
