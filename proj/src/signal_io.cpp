#include "hsig/signal_io.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace hsig::io {

namespace {

// Payload doubles are little-endian on disk; byte-swap on the (unlikely)
// big-endian host so files stay portable.
void to_little_endian(std::vector<double>& buf) {
    if constexpr (std::endian::native == std::endian::big) {
        for (double& d : buf) {
            auto* p = reinterpret_cast<unsigned char*>(&d);
            for (int i = 0; i < 4; ++i) std::swap(p[i], p[7 - i]);
        }
    }
}

}  // namespace

void write_signal(const std::string& path, const Signal& s) {
    nlohmann::json header;
    header["magic"] = "HSIG";
    header["version"] = 1;
    header["dim"] = s.grid.dim;
    header["samples_per_axis"] = s.grid.samples_per_axis;
    header["half_extent"] = s.grid.half_extent;
    header["domain"] =
        s.domain == lattice::Domain::space ? "space" : "frequency";

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << header.dump() << '\n';

    std::vector<double> buf(2 * s.values.size());
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        buf[2 * i] = s.values[i].real();
        buf[2 * i + 1] = s.values[i].imag();
    }
    to_little_endian(buf);
    out.write(reinterpret_cast<const char*>(buf.data()),
              static_cast<std::streamsize>(buf.size() * sizeof(double)));
    if (!out) throw std::runtime_error("write failed: " + path);
}

Signal read_signal(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("missing signal header: " + path);

    nlohmann::json header;
    try {
        header = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception&) {
        throw std::runtime_error("malformed signal header: " + path);
    }
    if (header.value("magic", "") != "HSIG")
        throw std::runtime_error("not an HSIG file: " + path);
    if (header.value("version", 0) != 1)
        throw std::runtime_error("unsupported HSIG version in " + path);

    const int dim = header.at("dim").get<int>();
    auto n = header.at("samples_per_axis").get<std::vector<int>>();
    auto extent = header.at("half_extent").get<std::vector<double>>();
    const std::string domain = header.at("domain").get<std::string>();
    if (domain != "space" && domain != "frequency")
        throw std::runtime_error("bad domain tag in " + path);

    Signal s;
    s.grid = lattice::make_grid(dim, std::move(n), std::move(extent));
    s.domain = domain == "space" ? lattice::Domain::space
                                 : lattice::Domain::frequency;

    const std::size_t count = 2 * s.grid.size();
    std::vector<double> buf(count);
    in.read(reinterpret_cast<char*>(buf.data()),
            static_cast<std::streamsize>(count * sizeof(double)));
    if (static_cast<std::size_t>(in.gcount()) != count * sizeof(double))
        throw std::runtime_error("payload shorter than header promises: " + path);
    char extra;
    if (in.read(&extra, 1))
        throw std::runtime_error("payload longer than header promises: " + path);

    to_little_endian(buf);
    s.values.resize(s.grid.size());
    for (std::size_t i = 0; i < s.values.size(); ++i)
        s.values[i] = {buf[2 * i], buf[2 * i + 1]};
    return s;
}

Signal slice_signal(const Signal& s, int axis, int index) {
    if (axis < 1 || axis > s.grid.dim)
        throw std::invalid_argument("slice axis out of range");
    if (s.grid.dim == 1)
        throw std::invalid_argument("cannot slice a 1-D signal");
    if (index < 0 || index >= s.grid.samples_per_axis[axis - 1])
        throw std::invalid_argument("slice index out of range");

    std::vector<int> n;
    std::vector<double> extent;
    for (int j = 0; j < s.grid.dim; ++j)
        if (j != axis - 1) {
            n.push_back(s.grid.samples_per_axis[j]);
            extent.push_back(s.grid.half_extent[j]);
        }
    Signal out;
    out.grid = lattice::make_grid(s.grid.dim - 1, std::move(n),
                                  std::move(extent));
    out.domain = s.domain;
    out.values.resize(out.grid.size());

    std::vector<int> bin(out.grid.dim, 0);
    std::vector<int> full(s.grid.dim, 0);
    for (std::size_t flat = 0; flat < out.values.size(); ++flat) {
        for (int j = 0, k = 0; j < s.grid.dim; ++j)
            full[j] = j == axis - 1 ? index : bin[k++];
        out.values[flat] = s.values[s.grid.flatten(full)];
        for (int j = out.grid.dim - 1; j >= 0; --j) {
            if (++bin[j] < out.grid.samples_per_axis[j]) break;
            bin[j] = 0;
        }
    }
    return out;
}

void export_csv(std::ostream& out, const Signal& s) {
    for (int j = 1; j <= s.grid.dim; ++j) out << 'x' << j << ',';
    out << "re,im,abs,arg\n";
    out.precision(17);
    std::vector<int> bin(s.grid.dim, 0);
    for (std::size_t flat = 0; flat < s.values.size(); ++flat) {
        for (int j = 0; j < s.grid.dim; ++j) {
            const double coord =
                s.domain == lattice::Domain::space
                    ? -s.grid.half_extent[j] + bin[j] * s.grid.spacing(j)
                    : s.grid.freq_spacing(j) * s.grid.signed_index(j, bin[j]);
            out << coord << ',';
        }
        const auto& v = s.values[flat];
        out << v.real() << ',' << v.imag() << ',' << std::abs(v) << ','
            << std::arg(v) << '\n';
        for (int j = s.grid.dim - 1; j >= 0; --j) {
            if (++bin[j] < s.grid.samples_per_axis[j]) break;
            bin[j] = 0;
        }
    }
}

}  // namespace hsig::io
