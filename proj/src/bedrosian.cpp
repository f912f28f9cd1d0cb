#include "hsig/bedrosian.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "hsig/spectral.hpp"
#include "json.hpp"

namespace hsig::bedrosian {

namespace {

int env_thread_budget() {
    if (const char* s = std::getenv("HSIG_THREADS")) {
        const int v = std::atoi(s);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void check_same_grid(const Signal& f, const Signal& g) {
    if (!(f.grid == g.grid))
        throw std::invalid_argument("signals live on different grids");
}

void check_lengths(int dim, const std::vector<double>& a,
                   const std::vector<double>& b) {
    if (static_cast<int>(a.size()) != dim || static_cast<int>(b.size()) != dim)
        throw std::invalid_argument("bound lists must match dimension");
}

}  // namespace

// ---------------------------------------------------------------------------
// Support regions

int SupportRegion::dim() const {
    return std::visit(
        [](const auto& r) -> int {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, QuadrantUnion>)
                return r.patterns.empty() ? 0 : r.patterns.begin()->dim();
            else if constexpr (std::is_same_v<T, NecessitySimplex>)
                return r.pattern.dim();
            else
                return static_cast<int>(r.a.size());
        },
        shape);
}

bool SupportRegion::member(const std::vector<double>& xi, double slack) const {
    if (static_cast<int>(xi.size()) != dim())
        throw std::invalid_argument("point dimension mismatch");
    return std::visit(
        [&](const auto& r) -> bool {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, AxisBox>) {
                for (std::size_t j = 0; j < xi.size(); ++j)
                    if (xi[j] < -r.a[j] - slack || xi[j] > r.b[j] + slack)
                        return false;
                return true;
            } else if constexpr (std::is_same_v<T, BoxComplementProduct>) {
                for (std::size_t j = 0; j < xi.size(); ++j)
                    if (xi[j] > -r.b[j] + slack && xi[j] < r.a[j] - slack)
                        return false;
                return true;
            } else if constexpr (std::is_same_v<T, QuadrantUnion>) {
                for (const auto& p : r.patterns) {
                    bool ok = true;
                    for (std::size_t j = 0; j < xi.size() && ok; ++j)
                        ok = p.signs[j] * xi[j] >= -slack;
                    if (ok) return true;
                }
                return false;
            } else {
                const auto& nu = r.pattern.signs;
                auto side = [&](int orient, const std::vector<double>& denom) {
                    double sum = 0.0, relax = 0.0;
                    for (std::size_t j = 0; j < xi.size(); ++j) {
                        const double c = orient * nu[j] * xi[j];
                        if (c < -slack) return false;
                        sum += c / denom[j];
                        relax += slack / denom[j];
                    }
                    return sum >= 1.0 - relax;
                };
                return side(+1, r.b) || side(-1, r.a);
            }
        },
        shape);
}

SupportRegion necessity_region(const SignPattern& pattern,
                               std::vector<double> a, std::vector<double> b) {
    const int d = pattern.dim();
    check_lengths(d, a, b);
    for (int j = 0; j < d; ++j)
        if (!(a[j] > 0.0) || !(b[j] > 0.0))
            throw std::invalid_argument("necessity bounds must be positive");
    return SupportRegion{
        NecessitySimplex{pattern, std::move(a), std::move(b)}};
}

namespace {

// Symbolic containment of a region in prod_j R \ (-b_j, a_j).
bool contained_in_bcp(const SupportRegion& region, const std::vector<double>& a,
                      const std::vector<double>& b) {
    const int d = region.dim();
    auto interval_empty = [&](int j) { return a[j] + b[j] <= 0.0; };
    return std::visit(
        [&](const auto& r) -> bool {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, AxisBox>) {
                for (int j = 0; j < d; ++j)
                    if (-r.a[j] < a[j] && -b[j] < r.b[j]) return false;
                return true;
            } else if constexpr (std::is_same_v<T, BoxComplementProduct>) {
                for (int j = 0; j < d; ++j)
                    if (!interval_empty(j) && !(a[j] <= r.a[j] && b[j] <= r.b[j]))
                        return false;
                return true;
            } else if constexpr (std::is_same_v<T, QuadrantUnion>) {
                for (const auto& p : r.patterns)
                    for (int j = 0; j < d; ++j) {
                        if (p.signs[j] > 0 && a[j] > 0.0) return false;
                        if (p.signs[j] < 0 && b[j] > 0.0) return false;
                    }
                return true;
            } else {
                if (d == 1) {
                    // {nu xi >= b-hat} u {-nu xi >= a-hat}
                    if (r.pattern.signs[0] > 0)
                        return r.b[0] >= a[0] && r.a[0] >= b[0];
                    return r.a[0] >= a[0] && r.b[0] >= b[0];
                }
                // For d >= 2 the simplex region touches every coordinate
                // hyperplane, so only the trivial complement contains it.
                for (int j = 0; j < d; ++j)
                    if (!interval_empty(j)) return false;
                return true;
            }
        },
        region.shape);
}

}  // namespace

Sufficiency check_support_condition(const SupportRegion& region_f,
                                    const SupportRegion& region_g) {
    if (region_f.dim() != region_g.dim())
        throw std::invalid_argument("region dimension mismatch");
    if (const auto* box = std::get_if<AxisBox>(&region_f.shape))
        if (contained_in_bcp(region_g, box->a, box->b))
            return Sufficiency::prop_box_complement;
    const auto* uf = std::get_if<QuadrantUnion>(&region_f.shape);
    const auto* ug = std::get_if<QuadrantUnion>(&region_g.shape);
    if (uf && ug && uf->patterns == ug->patterns &&
        closed_under_addition(uf->patterns))
        return Sufficiency::prop_quadrant_union;
    return Sufficiency::unknown;
}

bool closed_under_addition(const std::set<SignPattern>& patterns) {
    if (patterns.empty())
        throw std::invalid_argument("pattern set must be nonempty");
    const int d = patterns.begin()->dim();
    std::set<int> bits;
    for (const auto& p : patterns) {
        if (p.dim() != d)
            throw std::invalid_argument("mixed pattern dimensions");
        bits.insert(p.bit_index());
    }
    // Q_s + Q_t covers exactly the quadrants that agree with s and t on the
    // axes where s and t agree.
    for (int s : bits)
        for (int t : bits) {
            const int agree = ~(s ^ t) & ((1 << d) - 1);
            const int fixed = s & agree;
            int free_mask = ~agree & ((1 << d) - 1);
            // enumerate subsets of free_mask
            int sub = free_mask;
            while (true) {
                if (!bits.contains(fixed | sub)) return false;
                if (sub == 0) break;
                sub = (sub - 1) & free_mask;
            }
        }
    return true;
}

// ---------------------------------------------------------------------------
// Residuals

std::string BedrosianReport::to_json() const {
    nlohmann::json j;
    j["residual_l2_rel"] = residual_l2_rel;
    j["residual_max"] = residual_max;
    if (std::isnan(characterization_max))
        j["characterization_max"] = nullptr;
    else
        j["characterization_max"] = characterization_max;
    j["verdict"] = holds ? "holds" : "fails";
    j["tolerance"] = tolerance;
    j["absolute_residual"] = absolute_residual;
    j["grid"] = {{"dim", grid.dim},
                 {"samples_per_axis", grid.samples_per_axis},
                 {"half_extent", grid.half_extent}};
    j["operator"] =
        operator_json.empty() ? nlohmann::json{} : nlohmann::json::parse(operator_json);
    return j.dump();
}

BedrosianReport residual(const MultiplierOp& op, const Signal& f,
                         const Signal& g, double tolerance) {
    check_same_grid(f, g);
    if (op.dim() != f.grid.dim)
        throw std::invalid_argument("operator/signal dimension mismatch");
    if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be > 0");

    Signal fg = f;
    for (std::size_t i = 0; i < fg.values.size(); ++i)
        fg.values[i] *= g.values[i];

    const Signal t_fg = op.apply(fg);
    const Signal t_g = op.apply(g);

    double num2 = 0.0, den2 = 0.0, fg2 = 0.0;
    double num_max = 0.0, den_max = 0.0;
    for (std::size_t i = 0; i < fg.values.size(); ++i) {
        const cplx d = t_fg.values[i] - f.values[i] * t_g.values[i];
        num2 += std::norm(d);
        den2 += std::norm(t_fg.values[i]);
        fg2 += std::norm(fg.values[i]);
        num_max = std::max(num_max, std::abs(d));
        den_max = std::max(den_max, std::abs(t_fg.values[i]));
    }
    BedrosianReport rep;
    rep.tolerance = tolerance;
    rep.grid = f.grid;
    rep.operator_json = op.to_json();
    const double num = std::sqrt(num2), den = std::sqrt(den2);
    if (den < 1e-12 * std::sqrt(fg2)) {
        rep.absolute_residual = true;
        rep.residual_l2_rel = num;
        rep.residual_max = num_max;
    } else {
        rep.residual_l2_rel = num / den;
        rep.residual_max = num_max / den_max;
    }
    rep.holds = rep.residual_l2_rel < tolerance;
    return rep;
}

namespace {

// Partition quadrant of a bin: zero-sign axes count as +1, the Nyquist bin
// keeps its (negative) physical frequency sign. Gives a disjoint cover.
int partition_bits(const Grid& grid, const std::vector<int>& bin) {
    int bits = 0;
    for (int j = 0; j < grid.dim; ++j) {
        const int s = grid.signed_index(j, bin[j]);
        if (s < 0) bits |= 1 << j;
    }
    return bits;
}

}  // namespace

double characterization_residual(const MultiplierOp& op, const Signal& f,
                                 const Signal& g) {
    check_same_grid(f, g);
    const Grid& grid = f.grid;
    if (op.dim() != grid.dim)
        throw std::invalid_argument("operator/signal dimension mismatch");

    const Signal F = f.domain == lattice::Domain::frequency ? f : spectral::dft(f);
    const Signal G = g.domain == lattice::Domain::frequency ? g : spectral::dft(g);

    const int d = grid.dim;
    const std::size_t nq = std::size_t{1} << d;
    std::vector<int> padded_dims(d);
    std::size_t padded_size = 1;
    for (int j = 0; j < d; ++j) {
        padded_dims[j] = 2 * grid.samples_per_axis[j];
        padded_size *= static_cast<std::size_t>(padded_dims[j]);
    }

    // Signed-index layout: axis position p = s + N/2 in [0, N) inside the
    // padded axis of length 2N, so the linear convolution never wraps.
    const std::size_t total = grid.size();
    std::vector<std::size_t> bin_to_padded(total);
    std::vector<std::size_t> bin_to_conv(total);
    std::vector<int> quadrant_of_bin(total);
    {
        std::vector<int> bin(d, 0);
        for (std::size_t flat = 0; flat < total; ++flat) {
            std::size_t p = 0, v = 0;
            for (int j = 0; j < d; ++j) {
                const int n = grid.samples_per_axis[j];
                const int s = grid.signed_index(j, bin[j]);
                p = p * padded_dims[j] + static_cast<std::size_t>(s + n / 2);
                v = v * padded_dims[j] + static_cast<std::size_t>(s + n);
            }
            bin_to_padded[flat] = p;
            bin_to_conv[flat] = v;
            quadrant_of_bin[flat] = partition_bits(grid, bin);
            for (int j = d - 1; j >= 0; --j) {
                if (++bin[j] < grid.samples_per_axis[j]) break;
                bin[j] = 0;
            }
        }
    }

    std::vector<cplx> f_hat(padded_size, cplx{0.0});
    for (std::size_t flat = 0; flat < total; ++flat)
        f_hat[bin_to_padded[flat]] = F.values[flat];
    spectral::raw_fft(padded_dims, f_hat, true);

    // One masked convolution per quadrant, a wave of them per thread budget.
    std::vector<std::vector<cplx>> conv(nq);
    const int budget = std::max(1, std::min<int>(env_thread_budget(),
                                                 static_cast<int>(nq)));
    auto run_quadrant = [&](std::size_t q) {
        std::vector<cplx> b(padded_size, cplx{0.0});
        for (std::size_t flat = 0; flat < total; ++flat)
            if (quadrant_of_bin[flat] == static_cast<int>(q))
                b[bin_to_padded[flat]] = G.values[flat];
        spectral::raw_fft(padded_dims, b, true);
        for (std::size_t i = 0; i < padded_size; ++i) b[i] *= f_hat[i];
        spectral::raw_fft(padded_dims, b, false);
        const double scale = 1.0 / static_cast<double>(padded_size);
        for (cplx& v : b) v *= scale;
        conv[q] = std::move(b);
    };
    for (std::size_t q0 = 0; q0 < nq; q0 += budget) {
        const std::size_t q1 = std::min(nq, q0 + budget);
        if (q1 - q0 == 1) {
            run_quadrant(q0);
        } else {
            std::vector<std::thread> threads;
            for (std::size_t q = q0; q < q1; ++q)
                threads.emplace_back(run_quadrant, q);
            for (auto& t : threads) t.join();
        }
    }

    const double w = spectral::domain_weight(grid, lattice::Domain::frequency) *
                     std::pow(2.0 * std::numbers::pi, d);
    // w = prod dxi_j, the quadrature weight of the frequency lattice.
    double norm1_f = 0.0, norm1_g = 0.0;
    for (const cplx& v : F.values) norm1_f += std::abs(v);
    for (const cplx& v : G.values) norm1_g += std::abs(v);
    norm1_f *= w;
    norm1_g *= w;
    if (norm1_f == 0.0 || norm1_g == 0.0) return 0.0;

    const auto& m = op.quadrant_values();
    double worst = 0.0;
    for (std::size_t flat = 0; flat < total; ++flat) {
        const cplx mk = m[quadrant_of_bin[flat]];
        cplx lhs{0.0};
        for (std::size_t q = 0; q < nq; ++q) {
            if (static_cast<int>(q) == quadrant_of_bin[flat]) continue;
            lhs += (mk - m[q]) * conv[q][bin_to_conv[flat]];
        }
        worst = std::max(worst, std::abs(lhs) * w);
    }
    return worst / (norm1_f * norm1_g);
}

// ---------------------------------------------------------------------------
// Necessity

namespace {

bool f_region_member(const std::vector<double>& xi,
                     const std::vector<int>& nu, const std::vector<double>& a,
                     const std::vector<double>& b, double slack) {
    bool in_q = true, in_nq = true;
    for (std::size_t j = 0; j < xi.size(); ++j) {
        const double c = nu[j] * xi[j];
        if (c < -slack || c > a[j] + slack) in_q = false;
        if (-c < -slack || -c > b[j] + slack) in_nq = false;
        if (!in_q && !in_nq) return false;
    }
    return in_q || in_nq;
}

double linf_dist(const std::vector<double>& x, const std::vector<double>& y) {
    double m = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j)
        m = std::max(m, std::abs(x[j] - y[j]));
    return m;
}

}  // namespace

NecessityReport check_necessity(const MultiplierOp& op, const Signal& f,
                                const Signal& g, const SignPattern& pattern,
                                const std::vector<double>& a,
                                const std::vector<double>& b,
                                const NecessityOptions& opts) {
    check_same_grid(f, g);
    const int d = f.grid.dim;
    if (pattern.dim() != d || op.dim() != d)
        throw std::invalid_argument("dimension mismatch");
    check_lengths(d, a, b);
    for (int j = 0; j < d; ++j)
        if (!(a[j] > 0.0) || !(b[j] > 0.0))
            throw std::invalid_argument("necessity bounds must be positive");

    NecessityReport rep;
    if (std::abs(op.quadrant_value(pattern) -
                 op.quadrant_value(pattern.negated())) <= 1e-12) {
        rep.reason = "operator does not separate Q from -Q";
        return rep;
    }

    const Signal F = spectral::dft(f);
    const Signal G = spectral::dft(g);
    const auto supp_f = numerical_support(F, opts.support_threshold);
    const auto supp_g = numerical_support(G, opts.support_threshold);
    if (supp_f.empty() || supp_g.empty()) {
        rep.reason = "empty numerical support";
        return rep;
    }

    // f precondition: support inside the two corner boxes, corners present.
    double needed_slack = 0.0;
    for (const auto& xi : supp_f) {
        double lo = 0.0, hi = 1.0 + linf_dist(xi, std::vector<double>(d, 0.0));
        if (f_region_member(xi, pattern.signs, a, b, 0.0)) continue;
        while (hi - lo > 1e-9) {
            const double mid = 0.5 * (lo + hi);
            (f_region_member(xi, pattern.signs, a, b, mid) ? hi : lo) = mid;
        }
        needed_slack = std::max(needed_slack, hi);
    }
    rep.f_containment_slack = needed_slack;
    if (needed_slack > opts.region_slack) {
        rep.reason = "f support not inside the corner boxes (needs slack " +
                     std::to_string(needed_slack) + ")";
        return rep;
    }

    double corner_tol = opts.region_slack;
    for (int j = 0; j < d; ++j)
        corner_tol = std::max(corner_tol, 1.5 * f.grid.freq_spacing(j));
    std::vector<double> corner_a(d), corner_b(d);
    for (int j = 0; j < d; ++j) {
        corner_a[j] = a[j] * pattern.signs[j];
        corner_b[j] = -b[j] * pattern.signs[j];
    }
    bool has_a = false, has_b = false;
    for (const auto& xi : supp_f) {
        has_a = has_a || linf_dist(xi, corner_a) <= corner_tol;
        has_b = has_b || linf_dist(xi, corner_b) <= corner_tol;
    }
    if (!has_a || !has_b) {
        rep.reason = "corner frequencies absent from f support";
        return rep;
    }

    // g hypothesis: support in Q union -Q.
    SupportRegion two_quadrants{
        QuadrantUnion{{pattern, pattern.negated()}}};
    for (const auto& xi : supp_g)
        if (!two_quadrants.member(xi, opts.region_slack)) {
            rep.reason = "g support not inside Q union -Q";
            return rep;
        }

    rep.applicable = true;
    const SupportRegion region = necessity_region(pattern, a, b);
    rep.predicted_holds = true;
    for (const auto& xi : supp_g)
        if (!region.member(xi, opts.region_slack)) {
            rep.predicted_holds = false;
            break;
        }
    rep.residual = residual(op, f, g, opts.residual_tolerance);
    rep.agrees = rep.predicted_holds == rep.residual.holds;
    return rep;
}

// ---------------------------------------------------------------------------
// Counterexample family and the type-two failure demo

double counterexample_f(double t) { return 1.0 / (1.0 + t * t); }

double counterexample_g(double t) {
    const double t2 = t * t;
    return (1.0 - 2.0 * t2) / (4.0 + 5.0 * t2 + t2 * t2);
}

double counterexample_hg(double t) {
    const double t2 = t * t;
    return t / (1.0 + t2) - 1.5 * t / (4.0 + t2);
}

std::pair<Signal, Signal> counterexample_pair(int dim, const Grid& grid) {
    if (grid.dim != dim)
        throw std::invalid_argument("grid dimension mismatch");
    auto product_of = [](double (*h)(double)) {
        return [h](const std::vector<double>& x) {
            double v = 1.0;
            for (double xj : x) v *= h(xj);
            return cplx{v, 0.0};
        };
    };
    return {lattice::sample(grid, product_of(&counterexample_f)),
            lattice::sample(grid, product_of(&counterexample_g))};
}

Signal bump_spectrum(const Grid& grid, const std::vector<double>& center,
                     double sigma) {
    if (static_cast<int>(center.size()) != grid.dim)
        throw std::invalid_argument("bump center dimension mismatch");
    if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
    Signal spec = lattice::zero_signal(grid, lattice::Domain::frequency);
    const double cut2 = 64.0 * sigma * sigma;  // truncate at 8 sigma
    std::vector<int> bin(grid.dim, 0);
    for (std::size_t flat = 0; flat < spec.values.size(); ++flat) {
        double r2 = 0.0;
        for (int j = 0; j < grid.dim; ++j) {
            const double xi =
                grid.freq_spacing(j) * grid.signed_index(j, bin[j]);
            r2 += (xi - center[j]) * (xi - center[j]);
        }
        if (r2 <= cut2)
            spec.values[flat] = std::exp(-r2 / (2.0 * sigma * sigma));
        for (int j = grid.dim - 1; j >= 0; --j) {
            if (++bin[j] < grid.samples_per_axis[j]) break;
            bin[j] = 0;
        }
    }
    return spec;
}

std::vector<std::vector<double>> numerical_support(const Signal& spectrum,
                                                   double threshold) {
    if (spectrum.domain != lattice::Domain::frequency)
        throw std::invalid_argument("numerical_support expects a spectrum");
    const double peak = lattice::max_abs(spectrum);
    std::vector<std::vector<double>> out;
    if (peak == 0.0) return out;
    const double cut = threshold * peak;
    std::vector<int> bin(spectrum.grid.dim, 0);
    for (std::size_t flat = 0; flat < spectrum.values.size(); ++flat) {
        if (std::abs(spectrum.values[flat]) > cut) {
            std::vector<double> xi(spectrum.grid.dim);
            for (int j = 0; j < spectrum.grid.dim; ++j)
                xi[j] = spectrum.grid.freq_spacing(j) *
                        spectrum.grid.signed_index(j, bin[j]);
            out.push_back(std::move(xi));
        }
        for (int j = spectrum.grid.dim - 1; j >= 0; --j) {
            if (++bin[j] < spectrum.grid.samples_per_axis[j]) break;
            bin[j] = 0;
        }
    }
    return out;
}

TypeTwoDemo type_two_demo(const MultiplierOp& op) {
    if (op.dim() != 2)
        throw std::invalid_argument("type_two_demo is a d = 2 construction");
    if (op.is_scalar())
        throw std::invalid_argument(
            "type_two_demo needs a non-scalar operator");

    // Find quadrants l1, l2 with different multiplier values sharing an axis
    // sign (they exist for every non-scalar op in d >= 2).
    const auto& m = op.quadrant_values();
    int l1 = -1, l2 = -1;
    double best = 0.0;
    for (int k1 = 0; k1 < 4; ++k1)
        for (int k2 = 0; k2 < 4; ++k2) {
            if ((k1 ^ k2) == 3) continue;  // antipodal
            if (k1 == k2) continue;
            const double gap = std::abs(m[k1] - m[k2]);
            if (gap > best) {
                best = gap;
                l1 = k1;
                l2 = k2;
            }
        }
    if (l1 < 0 || best <= 1e-12)
        throw std::invalid_argument(
            "operator has no separated quadrants sharing an axis sign");

    const SignPattern p1 = SignPattern::from_bit_index(2, l1);
    const SignPattern p2 = SignPattern::from_bit_index(2, l2);
    const int diff_axis = p1.signs[0] != p2.signs[0] ? 0 : 1;
    const int shared_axis = 1 - diff_axis;

    // Geometry of the contradiction: the difference bump sits inside
    // Q_{l1} and the unit ball, g's bump inside Q_{l2} outside the ball,
    // and their sum lands in Q_{l1} where the multipliers disagree.
    const double r = 0.25, sigma = r / 8.0;
    std::vector<double> delta(2), xi2(2);
    delta[diff_axis] = 0.55 * p1.signs[diff_axis];
    delta[shared_axis] = 0.30 * p1.signs[shared_axis];
    xi2[diff_axis] = 0.30 * p2.signs[diff_axis];
    xi2[shared_axis] = 1.30 * p1.signs[shared_axis];

    const Grid grid = lattice::make_grid(2, {512, 512}, {240.0, 240.0});
    TypeTwoDemo demo;
    demo.quadrant_inside = p1;
    demo.quadrant_outside = p2;
    demo.f = spectral::idft(bump_spectrum(grid, delta, sigma));
    demo.g = spectral::idft(bump_spectrum(grid, xi2, sigma));
    demo.residual = residual(op, demo.f, demo.g, 1e-3);
    return demo;
}

}  // namespace hsig::bedrosian
