// hsig command-line front end: transform signals, run Bedrosian-identity
// verifications, synthesize and certify Blaschke basic signals, export CSV,
// and generate sampled test signals.
//
// Exit codes: 0 success / verdict holds, 1 verdict fails, 2 malformed input
// or I/O error, 3 dimension or grid mismatch.

#include <complex>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hsig/analytic.hpp"
#include "hsig/bedrosian.hpp"
#include "hsig/blaschke.hpp"
#include "hsig/oracle.hpp"
#include "hsig/signal_io.hpp"

namespace {

using hsig::lattice::cplx;
using hsig::lattice::Grid;
using hsig::lattice::Signal;

constexpr int exit_ok = 0;
constexpr int exit_fails = 1;
constexpr int exit_bad_input = 2;
constexpr int exit_dim_mismatch = 3;

Grid parse_grid_spec(const std::string& spec) {
    std::vector<double> nums;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) nums.push_back(std::stod(item));
    if (nums.empty() || nums.size() % 2 != 0)
        throw std::invalid_argument("--grid expects N,L pairs");
    const int dim = static_cast<int>(nums.size() / 2);
    std::vector<int> n(dim);
    std::vector<double> extent(dim);
    for (int j = 0; j < dim; ++j) {
        n[j] = static_cast<int>(nums[2 * j]);
        extent[j] = nums[2 * j + 1];
    }
    return hsig::lattice::make_grid(dim, n, extent);
}

std::vector<cplx> parse_zeros(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    std::vector<cplx> zeros;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("--zeros expects [[re,im],...]");
        zeros.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return zeros;
}

hsig::blaschke::EnvelopeSpectrum load_envelope(const std::string& arg) {
    std::ifstream in(arg);
    if (!in) return hsig::blaschke::envelope_by_name(arg);
    nlohmann::json j;
    in >> j;
    std::vector<cplx> samples;
    for (const auto& e : j.at("samples"))
        samples.emplace_back(e[0].get<double>(), e[1].get<double>());
    return hsig::blaschke::envelope_from_samples(std::move(samples));
}

int cmd_transform(const std::string& in_path, const std::string& out_path,
                  const std::string& op_json, int hilbert_axis,
                  const std::string& analytic_pattern) {
    const Signal s = hsig::io::read_signal(in_path);
    if (s.domain != hsig::lattice::Domain::space) {
        std::cerr << "transform expects a space-domain input\n";
        return exit_bad_input;
    }
    Signal out;
    if (!analytic_pattern.empty()) {
        const auto pattern =
            hsig::operators::SignPattern::parse(analytic_pattern);
        if (pattern.dim() != s.grid.dim) {
            std::cerr << "pattern dimension " << pattern.dim()
                      << " does not match signal dimension " << s.grid.dim
                      << "\n";
            return exit_dim_mismatch;
        }
        out = hsig::analytic::analytic_signal(s, pattern);
    } else {
        hsig::operators::MultiplierOp op =
            hilbert_axis > 0
                ? hsig::operators::MultiplierOp::partial_hilbert(hilbert_axis,
                                                                 s.grid.dim)
                : hsig::operators::MultiplierOp::parse_json(op_json);
        if (op.dim() != s.grid.dim) {
            std::cerr << "operator dimension " << op.dim()
                      << " does not match signal dimension " << s.grid.dim
                      << "\n";
            return exit_dim_mismatch;
        }
        out = op.apply(s);
    }
    hsig::io::write_signal(out_path, out);
    return exit_ok;
}

int cmd_bedrosian(const std::string& f_path, const std::string& g_path,
                  const std::string& op_json, double tolerance,
                  bool with_characterization, const std::string& report_path) {
    const Signal f = hsig::io::read_signal(f_path);
    const Signal g = hsig::io::read_signal(g_path);
    if (!(f.grid == g.grid)) {
        std::cerr << "signals live on different grids\n";
        return exit_dim_mismatch;
    }
    const auto op = hsig::operators::MultiplierOp::parse_json(op_json);
    if (op.dim() != f.grid.dim) {
        std::cerr << "operator/signal dimension mismatch\n";
        return exit_dim_mismatch;
    }
    auto report = hsig::bedrosian::residual(op, f, g, tolerance);
    if (with_characterization)
        report.characterization_max =
            hsig::bedrosian::characterization_residual(op, f, g);
    const std::string json = report.to_json();
    std::cout << json << "\n";
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) {
            std::cerr << "cannot write " << report_path << "\n";
            return exit_bad_input;
        }
        out << json << "\n";
    }
    return report.holds ? exit_ok : exit_fails;
}

int cmd_blaschke(const std::string& zeros_json, const std::string& envelope,
                 const std::string& grid_spec, const std::string& out_path,
                 bool certify, double tolerance) {
    const auto bp =
        hsig::blaschke::BlaschkeProduct::from_zeros(parse_zeros(zeros_json));
    const Grid grid = parse_grid_spec(grid_spec);
    const auto spec =
        hsig::blaschke::EnvelopeSpec::uniform(bp, load_envelope(envelope));
    const Signal f = hsig::blaschke::synthesize(bp, spec, grid);
    if (!out_path.empty()) hsig::io::write_signal(out_path, f);
    if (!certify) return exit_ok;

    const auto rep = hsig::blaschke::certify_membership(f, bp, tolerance);
    std::cout << "residual_real " << rep.residual_real << "\n"
              << "residual_complex " << rep.residual_complex << "\n"
              << "verdict " << (rep.passes_real ? "holds" : "fails") << "\n";
    return rep.passes_real && rep.passes_complex ? exit_ok : exit_fails;
}

int cmd_export(const std::string& in_path, const std::string& format,
               const std::vector<std::string>& slices,
               const std::string& out_path) {
    if (format != "csv") {
        std::cerr << "unsupported format: " << format << "\n";
        return exit_bad_input;
    }
    Signal s = hsig::io::read_signal(in_path);
    for (const std::string& spec : slices) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--slice expects AXIS=INDEX");
        const int axis = std::stoi(spec.substr(0, eq));
        const int index = std::stoi(spec.substr(eq + 1));
        s = hsig::io::slice_signal(s, axis, index);
    }
    if (out_path.empty()) {
        hsig::io::export_csv(std::cout, s);
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return exit_bad_input;
        }
        hsig::io::export_csv(out, s);
    }
    return exit_ok;
}

int cmd_sample(const std::string& name, const std::string& grid_spec,
               const std::string& out_path, double freq, double phase,
               double sigma, double alpha) {
    const Grid grid = parse_grid_spec(grid_spec);
    std::function<double(double)> f1;
    if (name == "cos")
        f1 = [=](double t) { return std::cos(freq * t + phase); };
    else if (name == "sin")
        f1 = [=](double t) { return std::sin(freq * t + phase); };
    else if (name == "gauss")
        f1 = [=](double t) { return std::exp(-t * t / (2.0 * sigma * sigma)); };
    else if (name == "lorentzian")
        f1 = [=](double t) { return 1.0 / (alpha * alpha + t * t); };
    else if (name == "counterexample-f")
        f1 = hsig::bedrosian::counterexample_f;
    else if (name == "counterexample-g")
        f1 = hsig::bedrosian::counterexample_g;
    else {
        std::cerr << "unknown signal name: " << name << "\n";
        return exit_bad_input;
    }
    const Signal s =
        hsig::lattice::sample(grid, [&](const std::vector<double>& x) {
            double v = 1.0;
            for (double xj : x) v *= f1(xj);
            return cplx{v, 0.0};
        });
    hsig::io::write_signal(out_path, s);
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multidimensional analytic signals, Bedrosian identity "
                 "verification, Blaschke basic-signal synthesis"};
    app.require_subcommand(1);

    // transform
    std::string t_in, t_out, t_op, t_pattern;
    int t_axis = 0;
    auto* transform = app.add_subcommand("transform",
                                         "apply a multiplier operator");
    transform->add_option("--in", t_in, "input signal file")->required();
    transform->add_option("--out", t_out, "output signal file")->required();
    auto* opt_op = transform->add_option("--op", t_op, "operator JSON literal");
    auto* opt_h = transform->add_option("--hilbert", t_axis,
                                        "partial Hilbert transform axis");
    auto* opt_a = transform->add_option("--analytic", t_pattern,
                                        "analytic signal for a sign pattern");
    opt_op->excludes(opt_h)->excludes(opt_a);
    opt_h->excludes(opt_a);

    // bedrosian
    std::string b_f, b_g, b_op, b_report;
    double b_tol = 1e-3;
    bool b_char = false;
    auto* bedrosian = app.add_subcommand("bedrosian",
                                         "test T(fg) = f Tg for a pair");
    bedrosian->add_option("--f", b_f, "f signal file")->required();
    bedrosian->add_option("--g", b_g, "g signal file")->required();
    bedrosian->add_option("--op", b_op, "operator JSON literal")->required();
    bedrosian->add_option("--tolerance", b_tol, "verdict tolerance");
    bedrosian->add_flag("--characterization", b_char,
                        "also compute the characterization residual");
    bedrosian->add_option("--report", b_report, "write the JSON report here");

    // blaschke
    std::string l_zeros, l_env = "flat", l_grid, l_out;
    bool l_certify = false;
    double l_tol = 1e-6;
    auto* blaschke = app.add_subcommand("blaschke",
                                        "synthesize a basic signal");
    blaschke->add_option("--zeros", l_zeros, "zeros as [[re,im],...]")
        ->required();
    blaschke->add_option("--envelope", l_env,
                         "named envelope or JSON sample file");
    blaschke->add_option("--grid", l_grid, "grid as N,L (L multiple of pi)")
        ->required();
    blaschke->add_option("--out", l_out, "output signal file");
    blaschke->add_flag("--certify", l_certify, "certify the identity");
    blaschke->add_option("--tolerance", l_tol, "certification tolerance");

    // export
    std::string e_in, e_format = "csv", e_out;
    std::vector<std::string> e_slices;
    auto* exporter = app.add_subcommand("export", "export a signal as CSV");
    exporter->add_option("--in", e_in, "input signal file")->required();
    exporter->add_option("--format", e_format, "output format (csv)");
    exporter->add_option("--slice", e_slices,
                         "fix AXIS=INDEX (repeatable)");
    exporter->add_option("--out", e_out, "output path (default stdout)");

    // sample
    std::string s_name, s_grid, s_out;
    double s_freq = 1.0, s_phase = 0.0, s_sigma = 1.0, s_alpha = 1.0;
    auto* sampler = app.add_subcommand(
        "sample", "write a sampled named signal (product over axes)");
    sampler->add_option("--signal", s_name,
                        "cos|sin|gauss|lorentzian|counterexample-f|"
                        "counterexample-g")
        ->required();
    sampler->add_option("--grid", s_grid, "grid as N,L[,N,L...]")->required();
    sampler->add_option("--out", s_out, "output signal file")->required();
    sampler->add_option("--freq", s_freq, "sinusoid frequency");
    sampler->add_option("--phase", s_phase, "sinusoid phase");
    sampler->add_option("--sigma", s_sigma, "gaussian width");
    sampler->add_option("--alpha", s_alpha, "lorentzian scale");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_bad_input;
    }

    try {
        if (transform->parsed()) {
            if (opt_op->count() + opt_h->count() + opt_a->count() != 1) {
                std::cerr << "pass exactly one of --op / --hilbert / "
                             "--analytic\n";
                return exit_bad_input;
            }
            return cmd_transform(t_in, t_out, t_op, t_axis, t_pattern);
        }
        if (bedrosian->parsed())
            return cmd_bedrosian(b_f, b_g, b_op, b_tol, b_char, b_report);
        if (blaschke->parsed())
            return cmd_blaschke(l_zeros, l_env, l_grid, l_out, l_certify,
                                l_tol);
        if (exporter->parsed())
            return cmd_export(e_in, e_format, e_slices, e_out);
        if (sampler->parsed())
            return cmd_sample(s_name, s_grid, s_out, s_freq, s_phase, s_sigma,
                              s_alpha);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    }
    return exit_bad_input;
}
