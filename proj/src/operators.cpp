#include "hsig/operators.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "hsig/spectral.hpp"
#include "json.hpp"

namespace hsig::operators {

namespace {
constexpr cplx kMinusI{0.0, -1.0};

void check_dim(int dim) {
    if (dim < 1 || dim > MultiplierOp::max_dim)
        throw std::invalid_argument("operator dimension must be in [1, 10]");
}
}  // namespace

int SignPattern::bit_index() const {
    int idx = 0;
    for (int j = 0; j < dim(); ++j)
        if (signs[j] < 0) idx |= 1 << j;
    return idx;
}

SignPattern SignPattern::negated() const {
    SignPattern p = *this;
    for (int& s : p.signs) s = -s;
    return p;
}

SignPattern SignPattern::from_bit_index(int dim, int index) {
    SignPattern p;
    p.signs.resize(dim);
    for (int j = 0; j < dim; ++j) p.signs[j] = (index >> j) & 1 ? -1 : +1;
    return p;
}

SignPattern SignPattern::all_plus(int dim) {
    SignPattern p;
    p.signs.assign(dim, +1);
    return p;
}

SignPattern SignPattern::parse(const std::string& text) {
    SignPattern p;
    for (char c : text) {
        if (c == '+' || c == 'p' || c == 'P')
            p.signs.push_back(+1);
        else if (c == '-' || c == 'm' || c == 'M')
            p.signs.push_back(-1);
        else
            throw std::invalid_argument("sign pattern must consist of +/-");
    }
    if (p.signs.empty()) throw std::invalid_argument("empty sign pattern");
    return p;
}

std::string SignPattern::to_string() const {
    std::string s;
    for (int v : signs) s += v > 0 ? '+' : '-';
    return s;
}

std::vector<SignPattern> all_patterns(int dim) {
    check_dim(dim);
    std::vector<SignPattern> out;
    out.reserve(std::size_t{1} << dim);
    for (int k = 0; k < (1 << dim); ++k)
        out.push_back(SignPattern::from_bit_index(dim, k));
    return out;
}

std::vector<SignPattern> paper_order(int dim) {
    check_dim(dim);
    std::vector<SignPattern> rest;
    for (int code = 0; code < (1 << dim); ++code) {
        // lexicographic over axes, axis 1 most significant, 0 bit = +1
        SignPattern p;
        p.signs.resize(dim);
        for (int j = 0; j < dim; ++j)
            p.signs[j] = (code >> (dim - 1 - j)) & 1 ? -1 : +1;
        rest.push_back(p);
    }
    std::vector<SignPattern> out;
    out.push_back(SignPattern::all_plus(dim));
    out.push_back(out.front().negated());
    for (const auto& p : rest)
        if (p != out[0] && p != out[1]) out.push_back(p);
    return out;
}

MultiplierOp MultiplierOp::identity(int dim) {
    check_dim(dim);
    std::vector<cplx> coeffs(std::size_t{1} << dim, cplx{0.0});
    coeffs[0] = 1.0;
    return from_coeffs(std::move(coeffs));
}

MultiplierOp MultiplierOp::partial_hilbert(int axis, int dim) {
    check_dim(dim);
    if (axis < 1 || axis > dim)
        throw std::invalid_argument("hilbert axis out of range");
    std::vector<cplx> coeffs(std::size_t{1} << dim, cplx{0.0});
    coeffs[std::size_t{1} << (axis - 1)] = 1.0;
    return from_coeffs(std::move(coeffs));
}

namespace {

// m_k = sum_S c_S (-i)^|S| chi_S(k) and its inverse
// c_S = i^|S| 2^-d sum_k m_k chi_S(k), with chi_S(k) = (-1)^popcount(S & k)
// the Walsh character (a set bit in k means sign -1 on that axis).
std::vector<cplx> values_from_coeffs(int dim, const std::vector<cplx>& c) {
    const std::size_t n = std::size_t{1} << dim;
    std::vector<cplx> m(n, cplx{0.0});
    std::vector<cplx> mi_pow(dim + 1);
    mi_pow[0] = 1.0;
    for (int p = 1; p <= dim; ++p) mi_pow[p] = mi_pow[p - 1] * kMinusI;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t S = 0; S < n; ++S) {
            if (c[S] == cplx{0.0}) continue;
            const int bits = std::popcount(S);
            const int par = std::popcount(S & k);
            cplx term = c[S] * mi_pow[bits];
            m[k] += (par & 1) ? -term : term;
        }
    return m;
}

std::vector<cplx> coeffs_from_values(int dim, const std::vector<cplx>& m) {
    const std::size_t n = std::size_t{1} << dim;
    std::vector<cplx> c(n, cplx{0.0});
    std::vector<cplx> i_pow(dim + 1);
    i_pow[0] = 1.0;
    for (int p = 1; p <= dim; ++p) i_pow[p] = i_pow[p - 1] * cplx{0.0, 1.0};
    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t S = 0; S < n; ++S) {
        cplx acc{0.0};
        for (std::size_t k = 0; k < n; ++k) {
            const int par = std::popcount(S & k);
            acc += (par & 1) ? -m[k] : m[k];
        }
        c[S] = acc * scale * i_pow[std::popcount(S)];
    }
    return c;
}

}  // namespace

MultiplierOp MultiplierOp::from_quadrant_values(std::vector<cplx> values) {
    int dim = 0;
    while ((std::size_t{1} << dim) < values.size()) ++dim;
    if ((std::size_t{1} << dim) != values.size())
        throw std::invalid_argument("quadrant value count must be a power of two");
    check_dim(dim);
    MultiplierOp op;
    op.dim_ = dim;
    op.values_ = std::move(values);
    op.coeffs_ = coeffs_from_values(dim, op.values_);
    return op;
}

MultiplierOp MultiplierOp::from_coeffs(std::vector<cplx> coeffs) {
    int dim = 0;
    while ((std::size_t{1} << dim) < coeffs.size()) ++dim;
    if ((std::size_t{1} << dim) != coeffs.size())
        throw std::invalid_argument("coefficient count must be a power of two");
    check_dim(dim);
    MultiplierOp op;
    op.dim_ = dim;
    op.coeffs_ = std::move(coeffs);
    op.values_ = values_from_coeffs(dim, op.coeffs_);
    return op;
}

MultiplierOp MultiplierOp::from_compositions(
    int dim, const std::vector<std::pair<std::vector<int>, cplx>>& terms) {
    check_dim(dim);
    const std::size_t n = std::size_t{1} << dim;
    std::vector<cplx> values(n, cplx{0.0});
    for (const auto& [alpha, c] : terms) {
        for (int a : alpha)
            if (a < 0 || a > dim)
                throw std::invalid_argument("composition index out of range");
        for (std::size_t k = 0; k < n; ++k) {
            cplx factor{1.0};
            for (int a : alpha) {
                if (a == 0) continue;  // identity factor
                const double nu = (k >> (a - 1)) & 1 ? -1.0 : 1.0;
                factor *= kMinusI * nu;
            }
            values[k] += c * factor;
        }
    }
    return from_quadrant_values(std::move(values));
}

cplx MultiplierOp::quadrant_value(const SignPattern& p) const {
    if (p.dim() != dim_) throw std::invalid_argument("pattern dimension mismatch");
    return values_[p.bit_index()];
}

cplx MultiplierOp::value_at_signs(const std::vector<int>& signs) const {
    if (static_cast<int>(signs.size()) != dim_)
        throw std::invalid_argument("sign vector dimension mismatch");
    const std::size_t n = std::size_t{1} << dim_;
    cplx acc{0.0};
    for (std::size_t S = 0; S < n; ++S) {
        if (coeffs_[S] == cplx{0.0}) continue;
        cplx term = coeffs_[S];
        for (int j = 0; j < dim_; ++j)
            if ((S >> j) & 1) term *= kMinusI * static_cast<double>(signs[j]);
        acc += term;
    }
    return acc;
}

MultiplierOp MultiplierOp::compose(const MultiplierOp& other) const {
    if (other.dim_ != dim_)
        throw std::invalid_argument("operator dimension mismatch");
    std::vector<cplx> values(values_.size());
    for (std::size_t k = 0; k < values.size(); ++k)
        values[k] = values_[k] * other.values_[k];
    return from_quadrant_values(std::move(values));
}

MultiplierOp MultiplierOp::scaled(cplx factor) const {
    std::vector<cplx> values(values_.size());
    for (std::size_t k = 0; k < values.size(); ++k)
        values[k] = values_[k] * factor;
    return from_quadrant_values(std::move(values));
}

bool MultiplierOp::is_scalar(double tol) const {
    for (const cplx& v : values_)
        if (std::abs(v - values_[0]) > tol) return false;
    return true;
}

std::vector<cplx> MultiplierOp::bin_table(const Grid& grid) const {
    if (grid.dim != dim_)
        throw std::invalid_argument("operator/grid dimension mismatch");

    // Value table over trit vectors in {-1,0,+1}^d, trit digits
    // 0 -> -1, 1 -> 0, 2 -> +1. Zero-sign entries are the mean of the two
    // adjacent sign choices, which is exactly the subset-sum rule with
    // sgn = 0 terms dropped.
    std::size_t table_size = 1;
    for (int j = 0; j < dim_; ++j) table_size *= 3;
    std::vector<cplx> table(table_size);
    std::vector<std::size_t> pow3(dim_ + 1);
    pow3[0] = 1;
    for (int j = 0; j < dim_; ++j) pow3[j + 1] = pow3[j] * 3;

    // Flipping the first zero axis to +/-1 lowers the zero count by one, so
    // filling in order of increasing zero count needs a single pass.
    std::vector<std::vector<std::size_t>> by_zero_count(dim_ + 1);
    for (std::size_t t = 0; t < table_size; ++t) {
        std::size_t rem = t;
        int zeros = 0;
        for (int j = 0; j < dim_; ++j) {
            if (rem % 3 == 1) ++zeros;
            rem /= 3;
        }
        by_zero_count[zeros].push_back(t);
    }
    for (std::size_t t : by_zero_count[0]) {
        std::size_t rem = t;
        int bits = 0;
        for (int j = 0; j < dim_; ++j) {
            if (rem % 3 == 0) bits |= 1 << j;
            rem /= 3;
        }
        table[t] = values_[bits];
    }
    for (int z = 1; z <= dim_; ++z) {
        for (std::size_t t : by_zero_count[z]) {
            std::size_t rem = t;
            int first_zero = -1;
            for (int j = 0; j < dim_ && first_zero < 0; ++j) {
                if (rem % 3 == 1) first_zero = j;
                rem /= 3;
            }
            table[t] = 0.5 * (table[t - pow3[first_zero]] +
                              table[t + pow3[first_zero]]);
        }
    }

    // Per-axis trit of each bin: DC and Nyquist count as zero-sign.
    std::vector<std::vector<int>> axis_trit(dim_);
    for (int j = 0; j < dim_; ++j) {
        const int n = grid.samples_per_axis[j];
        axis_trit[j].resize(n);
        for (int k = 0; k < n; ++k) {
            const int s = grid.signed_index(j, k);
            axis_trit[j][k] = (s == 0 || s == -n / 2) ? 1 : (s > 0 ? 2 : 0);
        }
    }

    std::vector<cplx> out(grid.size());
    std::vector<int> bin(dim_, 0);
    for (std::size_t flat = 0; flat < out.size(); ++flat) {
        std::size_t t = 0;
        for (int j = 0; j < dim_; ++j) t += pow3[j] * axis_trit[j][bin[j]];
        out[flat] = table[t];
        for (int j = dim_ - 1; j >= 0; --j) {
            if (++bin[j] < grid.samples_per_axis[j]) break;
            bin[j] = 0;
        }
    }
    return out;
}

Signal MultiplierOp::apply(const Signal& s) const {
    if (s.grid.dim != dim_)
        throw std::invalid_argument("operator/signal dimension mismatch");
    return spectral::apply_multiplier_table(s, bin_table(s.grid));
}

std::string MultiplierOp::to_json() const {
    nlohmann::json j;
    j["dim"] = dim_;
    auto& arr = j["quadrant_values"] = nlohmann::json::array();
    for (const cplx& v : values_) arr.push_back({v.real(), v.imag()});
    return j.dump();
}

MultiplierOp MultiplierOp::parse_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    const int dim = j.at("dim").get<int>();
    check_dim(dim);
    const auto& arr = j.at("quadrant_values");
    if (arr.size() != (std::size_t{1} << dim))
        throw std::invalid_argument("quadrant_values must have 2^dim entries");
    std::vector<cplx> values;
    values.reserve(arr.size());
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("quadrant value must be [re, im]");
        values.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return from_quadrant_values(std::move(values));
}

}  // namespace hsig::operators
