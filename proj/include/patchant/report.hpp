#ifndef PATCHANT_REPORT_HPP
#define PATCHANT_REPORT_HPP

// Aggregated per-antenna metrics, two-antenna comparison, and their
// document / CSV renderings used by the command-line tool.

#include <algorithm>
#include <array>
#include <charconv>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "patchant/error.hpp"
#include "patchant/farfield.hpp"
#include "patchant/model.hpp"
#include "patchant/radiometry.hpp"
#include "patchant/synthesis.hpp"

namespace patchant {

struct AnalysisOptions {
    std::size_t n_theta = 181;
    std::size_t n_phi = 360;
};

struct AntennaMetrics {
    std::string spec_name;
    DesignResult design_echo;
    Frequency resonant_frequency_asbuilt;
    double directivity_dbi = 0.0;
    EfficiencyBreakdown efficiency;
    double realized_gain_dbi = 0.0;
    double gain_delta_30_90_eplane = 0.0;
    double gain_delta_30_90_hplane = 0.0;
    double footprint_area = 0.0;    // m^2, patch L * W
    double substrate_volume = 0.0;  // m^3
};

inline AntennaMetrics analyze(const AntennaSpec& spec, AnalysisOptions options = {}) {
    validate(spec);
    const auto& sub = spec.substrate;

    AntennaMetrics m;
    m.spec_name = spec.name;
    m.design_echo = patch_length(spec.operating_frequency, sub.relative_permittivity, sub.height);
    m.resonant_frequency_asbuilt =
        resonant_frequency(spec.patch.length, spec.patch.width, sub.height, sub.relative_permittivity);

    const ModelGeometry geometry = ModelGeometry::from_spec(spec);
    const double d = directivity(sample_pattern(geometry, options.n_theta, options.n_phi));
    m.directivity_dbi = to_dbi(d);
    m.efficiency = efficiency_chain(reflection_coefficient(input_impedance(spec.feed), spec.source.reference_impedance),
                                    spec.conduction_efficiency, spec.dielectric_efficiency);
    const double g = realized_gain(d, m.efficiency.total);
    m.realized_gain_dbi = to_dbi(g);
    m.gain_delta_30_90_eplane = gain_delta(pattern_cut(geometry, g, Plane::E));
    m.gain_delta_30_90_hplane = gain_delta(pattern_cut(geometry, g, Plane::H));
    m.footprint_area = spec.patch.length * spec.patch.width;
    m.substrate_volume = sub.length * sub.width * sub.height;
    return m;
}

/// Full-wave reference values quoted alongside model results. They come
/// from a method-of-moments solve and are not expected to match the model.
struct ReferenceAnnotation {
    std::string antenna;
    double passive_gain_30_90_dbi;
};

inline const std::array<ReferenceAnnotation, 2>& fullwave_references() {
    static const std::array<ReferenceAnnotation, 2> refs{{
        {"GPS L1 passive patch, 1.57542 GHz", 3.791},
        {"GPS/GLONASS active patch, 1.5925 GHz", 0.85},
    }};
    return refs;
}

struct MetricDeltas {
    double resonant_frequency_asbuilt_hz = 0.0;
    double directivity_dbi = 0.0;
    double realized_gain_dbi = 0.0;
    double total_efficiency = 0.0;
    double gain_delta_30_90_eplane = 0.0;
    double gain_delta_30_90_hplane = 0.0;
    double footprint_area = 0.0;
    double substrate_volume = 0.0;
};

struct ComparisonReport {
    AntennaMetrics antenna_a;
    AntennaMetrics antenna_b;
    MetricDeltas deltas;  // a - b
    std::string higher_gain_delta;
};

inline ComparisonReport compare(const AntennaMetrics& a, const AntennaMetrics& b) {
    ComparisonReport r{a, b, {}, {}};
    auto& d = r.deltas;
    d.resonant_frequency_asbuilt_hz = a.resonant_frequency_asbuilt.hertz() - b.resonant_frequency_asbuilt.hertz();
    d.directivity_dbi = a.directivity_dbi - b.directivity_dbi;
    d.realized_gain_dbi = a.realized_gain_dbi - b.realized_gain_dbi;
    d.total_efficiency = a.efficiency.total - b.efficiency.total;
    d.gain_delta_30_90_eplane = a.gain_delta_30_90_eplane - b.gain_delta_30_90_eplane;
    d.gain_delta_30_90_hplane = a.gain_delta_30_90_hplane - b.gain_delta_30_90_hplane;
    d.footprint_area = a.footprint_area - b.footprint_area;
    d.substrate_volume = a.substrate_volume - b.substrate_volume;

    if (a.gain_delta_30_90_eplane != b.gain_delta_30_90_eplane)
        r.higher_gain_delta = a.gain_delta_30_90_eplane > b.gain_delta_30_90_eplane ? a.spec_name : b.spec_name;
    else
        r.higher_gain_delta = std::min(a.spec_name, b.spec_name);
    return r;
}

inline ComparisonReport compare(const AntennaSpec& a, const AntennaSpec& b, AnalysisOptions options = {}) {
    return compare(analyze(a, options), analyze(b, options));
}

// Documents: lengths in mm, areas mm^2, volumes mm^3, frequencies GHz, gains dB.

inline nlohmann::ordered_json to_document(const DesignResult& r) {
    nlohmann::ordered_json doc;
    doc["frequency_ghz"] = r.target_frequency.gigahertz();
    doc["width_mm"] = r.width * 1e3;
    doc["effective_permittivity"] = r.effective_permittivity;
    doc["length_extension_mm"] = r.length_extension * 1e3;
    doc["length_mm"] = r.length * 1e3;
    return doc;
}

inline nlohmann::ordered_json to_document(const EfficiencyBreakdown& e) {
    nlohmann::ordered_json doc;
    doc["gamma_re"] = e.gamma.real();
    doc["gamma_im"] = e.gamma.imag();
    doc["er"] = e.reflection;
    doc["ec"] = e.conduction;
    doc["ed"] = e.dielectric;
    doc["e0"] = e.total;
    return doc;
}

inline nlohmann::ordered_json to_document(const AntennaMetrics& m) {
    nlohmann::ordered_json doc;
    doc["spec_name"] = m.spec_name;
    doc["design_echo"] = to_document(m.design_echo);
    doc["resonant_frequency_asbuilt_ghz"] = m.resonant_frequency_asbuilt.gigahertz();
    doc["directivity_dbi"] = m.directivity_dbi;
    doc["efficiency"] = to_document(m.efficiency);
    doc["realized_gain_dbi"] = m.realized_gain_dbi;
    doc["gain_delta_30_90_eplane_db"] = m.gain_delta_30_90_eplane;
    doc["gain_delta_30_90_hplane_db"] = m.gain_delta_30_90_hplane;
    doc["footprint_area_mm2"] = m.footprint_area * 1e6;
    doc["substrate_volume_mm3"] = m.substrate_volume * 1e9;
    return doc;
}

inline nlohmann::ordered_json to_document(const ComparisonReport& r) {
    nlohmann::ordered_json doc;
    doc["antenna_a"] = to_document(r.antenna_a);
    doc["antenna_b"] = to_document(r.antenna_b);
    auto& d = doc["deltas"];
    d["resonant_frequency_asbuilt_ghz"] = r.deltas.resonant_frequency_asbuilt_hz / 1e9;
    d["directivity_dbi"] = r.deltas.directivity_dbi;
    d["realized_gain_dbi"] = r.deltas.realized_gain_dbi;
    d["total_efficiency"] = r.deltas.total_efficiency;
    d["gain_delta_30_90_eplane_db"] = r.deltas.gain_delta_30_90_eplane;
    d["gain_delta_30_90_hplane_db"] = r.deltas.gain_delta_30_90_hplane;
    d["footprint_area_mm2"] = r.deltas.footprint_area * 1e6;
    d["substrate_volume_mm3"] = r.deltas.substrate_volume * 1e9;
    doc["higher_gain_delta"] = r.higher_gain_delta;
    auto notes = nlohmann::ordered_json::array();
    for (const auto& ref : fullwave_references()) {
        notes.push_back({{"antenna", ref.antenna},
                         {"fullwave_passive_gain_30_90_dbi", ref.passive_gain_30_90_dbi},
                         {"note", "method-of-moments result; the two-slot model does not reproduce it"}});
    }
    doc["reference_annotations"] = std::move(notes);
    return doc;
}

/// Shortest text that parses back to the same double.
inline std::string format_number(double value) {
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    (void)ec;
    return std::string(buf.data(), end);
}

inline std::string cut_to_csv(const PatternCut& cut) {
    std::string out = "theta_deg,gain_dbi\n";
    for (std::size_t k = 0; k < cut.theta_deg.size(); ++k)
        out += format_number(cut.theta_deg[k]) + "," + format_number(cut.gain_dbi[k]) + "\n";
    return out;
}

inline PatternCut cut_from_csv(std::string_view text, Plane plane) {
    PatternCut cut;
    cut.plane = plane;
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != "theta_deg,gain_dbi")
        throw MalformedDocument("header", "expected 'theta_deg,gain_dbi'");
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) continue;
        const auto comma = line.find(',');
        double theta = 0.0;
        double gain = 0.0;
        const auto parse = [&](std::string_view s, double& out) {
            const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
            return ec == std::errc{} && ptr == s.data() + s.size();
        };
        if (comma == std::string::npos || !parse(std::string_view(line).substr(0, comma), theta) ||
            !parse(std::string_view(line).substr(comma + 1), gain))
            throw MalformedDocument("row " + std::to_string(row), "expected '<theta_deg>,<gain_dbi>'");
        cut.theta_deg.push_back(theta);
        cut.gain_dbi.push_back(gain);
    }
    return cut;
}

} // namespace patchant

#endif
