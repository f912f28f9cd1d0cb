#include "hsig/spectral.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace hsig::spectral {

namespace {

// FFTW planning is not thread safe; execution via the new-array interface is.
// Plans are created with FFTW_ESTIMATE so results are deterministic across
// runs, and FFTW_UNALIGNED so cached plans accept any buffer.
class PlanCache {
  public:
    static fftw_plan get(const std::vector<int>& n, int sign) {
        static PlanCache cache;
        std::scoped_lock lock(cache.mutex_);
        auto key = std::make_pair(n, sign);
        auto it = cache.plans_.find(key);
        if (it != cache.plans_.end()) return it->second;

        std::size_t total = 1;
        for (int nj : n) total *= static_cast<std::size_t>(nj);
        std::vector<std::complex<double>> buf(total);
        auto* raw = reinterpret_cast<fftw_complex*>(buf.data());
        fftw_plan p = fftw_plan_dft(static_cast<int>(n.size()),
                                    const_cast<int*>(n.data()), raw, raw, sign,
                                    FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!p) throw std::runtime_error("fftw planning failed");
        cache.plans_.emplace(key, p);
        return p;
    }

  private:
    std::mutex mutex_;
    std::map<std::pair<std::vector<int>, int>, fftw_plan> plans_;
};

void run_fft(const Grid& grid, std::vector<cplx>& data, int sign) {
    fftw_plan p = PlanCache::get(grid.samples_per_axis, sign);
    auto* raw = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(p, raw, raw);
}

// (-1)^(k_1 + ... + k_d) carries the phase of the -L_j grid offsets.
// Valid because every N_j is even, so parity in k equals parity in the
// signed index.
void apply_parity(const Grid& grid, std::vector<cplx>& data) {
    std::vector<int> bin(grid.dim, 0);
    for (std::size_t flat = 0; flat < data.size(); ++flat) {
        int par = 0;
        for (int j = 0; j < grid.dim; ++j) par += bin[j];
        if (par & 1) data[flat] = -data[flat];
        for (int j = grid.dim - 1; j >= 0; --j) {
            if (++bin[j] < grid.samples_per_axis[j]) break;
            bin[j] = 0;
        }
    }
}

}  // namespace

double domain_weight(const Grid& grid, Domain domain) {
    double w = 1.0;
    for (int j = 0; j < grid.dim; ++j)
        w *= domain == Domain::space
                 ? grid.spacing(j)
                 : grid.freq_spacing(j) / (2.0 * std::numbers::pi);
    return w;
}

Signal dft(const Signal& s) {
    if (s.domain != Domain::space)
        throw std::invalid_argument("dft expects a space-domain signal");
    Signal out;
    out.grid = s.grid;
    out.domain = Domain::frequency;
    out.values = s.values;
    run_fft(s.grid, out.values, FFTW_FORWARD);
    apply_parity(s.grid, out.values);
    const double w = domain_weight(s.grid, Domain::space);
    for (cplx& v : out.values) v *= w;
    return out;
}

Signal idft(const Signal& s) {
    if (s.domain != Domain::frequency)
        throw std::invalid_argument("idft expects a frequency-domain signal");
    Signal out;
    out.grid = s.grid;
    out.domain = Domain::space;
    out.values = s.values;
    apply_parity(s.grid, out.values);
    run_fft(s.grid, out.values, FFTW_BACKWARD);
    const double w = domain_weight(s.grid, Domain::frequency);
    for (cplx& v : out.values) v *= w;
    return out;
}

Signal apply_multiplier(
    const Signal& s,
    const std::function<cplx(const std::vector<double>&)>& m) {
    Signal spec = dft(s);
    std::vector<int> bin(s.grid.dim, 0);
    std::vector<double> xi(s.grid.dim);
    for (std::size_t flat = 0; flat < spec.values.size(); ++flat) {
        for (int j = 0; j < s.grid.dim; ++j)
            xi[j] = s.grid.freq_spacing(j) * s.grid.signed_index(j, bin[j]);
        spec.values[flat] *= m(xi);
        for (int j = s.grid.dim - 1; j >= 0; --j) {
            if (++bin[j] < s.grid.samples_per_axis[j]) break;
            bin[j] = 0;
        }
    }
    return idft(spec);
}

void raw_fft(const std::vector<int>& dims, std::vector<cplx>& data,
             bool forward) {
    std::size_t total = 1;
    for (int n : dims) total *= static_cast<std::size_t>(n);
    if (data.size() != total)
        throw std::invalid_argument("raw_fft size mismatch");
    fftw_plan p = PlanCache::get(dims, forward ? FFTW_FORWARD : FFTW_BACKWARD);
    auto* raw = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(p, raw, raw);
}

Signal apply_multiplier_table(const Signal& s, std::span<const cplx> m) {
    if (m.size() != s.grid.size())
        throw std::invalid_argument("multiplier table size mismatch");
    Signal spec = dft(s);
    for (std::size_t flat = 0; flat < spec.values.size(); ++flat)
        spec.values[flat] *= m[flat];
    return idft(spec);
}

}  // namespace hsig::spectral
