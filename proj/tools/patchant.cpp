// patchant: synthesize and analyze rectangular microstrip patch antennas.
//
//   patchant synth <freq_ghz> <er> <h_mm>
//   patchant analyze <spec> [--ntheta N] [--nphi M] [--out FILE]
//   patchant pattern <spec> --plane e|h --out FILE
//   patchant compare <specA> <specB> [--out FILE]
//
// Exit codes: 0 success, 2 input or validation error, 3 numerical failure.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "patchant/patchant.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw patchant::InputError("cannot write '" + out_path + "'");
    out << text;
    if (!out.flush()) throw patchant::InputError("cannot write '" + out_path + "'");
}

void require_positive(double value, const char* name) {
    if (!std::isfinite(value) || value <= 0.0)
        throw patchant::ValidationError(name, "must be a positive number");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rectangular microstrip patch antenna synthesis and analysis"};
    app.require_subcommand(1);

    double freq_ghz = 0.0;
    double er = 0.0;
    double h_mm = 0.0;
    auto* synth = app.add_subcommand("synth", "Design W and L for a target frequency");
    synth->add_option("freq_ghz", freq_ghz, "Target frequency in GHz")->required();
    synth->add_option("er", er, "Substrate relative permittivity")->required();
    synth->add_option("h_mm", h_mm, "Substrate height in mm")->required();

    std::string spec_path;
    std::string out_path;
    std::size_t n_theta = 181;
    std::size_t n_phi = 360;
    auto* analyze = app.add_subcommand("analyze", "Compute figures of merit for a spec file");
    analyze->add_option("spec", spec_path, "Antenna spec document")->required();
    analyze->add_option("--ntheta", n_theta, "Polar samples over [0, 180] deg")->check(CLI::Range(2, 100000));
    analyze->add_option("--nphi", n_phi, "Azimuth samples over [0, 360) deg")->check(CLI::Range(1, 100000));
    analyze->add_option("--out", out_path, "Write the report here instead of stdout");

    std::string plane_flag;
    auto* pattern = app.add_subcommand("pattern", "Export a principal-plane realized-gain cut as CSV");
    pattern->add_option("spec", spec_path, "Antenna spec document")->required();
    pattern->add_option("--plane", plane_flag, "e or h")->required()->check(CLI::IsMember({"e", "h"}));
    pattern->add_option("--out", out_path, "CSV output path")->required();

    std::string spec_b_path;
    auto* compare = app.add_subcommand("compare", "Compare two antenna spec files");
    compare->add_option("specA", spec_path, "First spec document")->required();
    compare->add_option("specB", spec_b_path, "Second spec document")->required();
    compare->add_option("--out", out_path, "Write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*synth) {
            require_positive(freq_ghz, "freq_ghz");
            require_positive(h_mm, "h_mm");
            if (!std::isfinite(er) || er < 1.0) throw patchant::ValidationError("er", "must be >= 1");
            const auto fr = patchant::Frequency::from_ghz(freq_ghz);
            const double h = patchant::normalize_quantity(h_mm, patchant::Unit::millimetre);
            emit(patchant::to_document(patchant::patch_length(fr, er, h)).dump(2) + "\n", "");
        } else if (*analyze) {
            const auto spec = patchant::load_antenna_spec_file(spec_path);
            const auto metrics = patchant::analyze(spec, {n_theta, n_phi});
            emit(patchant::to_document(metrics).dump(2) + "\n", out_path);
        } else if (*pattern) {
            const auto spec = patchant::load_antenna_spec_file(spec_path);
            const auto plane = plane_flag == "e" ? patchant::Plane::E : patchant::Plane::H;
            const patchant::AnalysisOptions defaults;
            const auto cut = patchant::pattern_cut(spec, plane, {defaults.n_theta, defaults.n_phi});
            emit(patchant::cut_to_csv(cut), out_path);
        } else if (*compare) {
            const auto a = patchant::load_antenna_spec_file(spec_path);
            const auto b = patchant::load_antenna_spec_file(spec_b_path);
            emit(patchant::to_document(patchant::compare(a, b)).dump(2) + "\n", out_path);
        }
    } catch (const patchant::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const patchant::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}
