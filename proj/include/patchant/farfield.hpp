#ifndef PATCHANT_FARFIELD_HPP
#define PATCHANT_FARFIELD_HPP

// Two-radiating-slot far-field model of a rectangular patch over an
// infinite ground plane. Broadside is +z (theta = 0), the resonant length
// runs along x, so phi = 0 is the E-plane and phi = 90 deg the H-plane.

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "patchant/constants.hpp"
#include "patchant/error.hpp"
#include "patchant/model.hpp"
#include "patchant/radiometry.hpp"
#include "patchant/synthesis.hpp"

namespace patchant {

inline double wave_number(Frequency fr) { return 2.0 * constants::pi * fr.hertz() / constants::c0; }

struct ModelGeometry {
    double k0 = 0.0;               // rad/m
    double effective_length = 0.0; // m, L + 2 dL
    double width = 0.0;            // m
    double height = 0.0;           // m

    /// As-built L and W from the spec; dL from the synthesis chain at the
    /// spec's permittivity and height.
    static ModelGeometry from_spec(const AntennaSpec& spec) {
        const auto& sub = spec.substrate;
        const double eps_eff = effective_permittivity(sub.relative_permittivity, sub.height, spec.patch.width);
        const double dl = length_extension(sub.height, spec.patch.width, eps_eff);
        return {wave_number(spec.operating_frequency), spec.patch.length + 2.0 * dl, spec.patch.width, sub.height};
    }
};

inline double sinc(double u) {
    if (std::abs(u) < 1e-6) return 1.0 - u * u / 6.0;
    return std::sin(u) / u;
}

/// Normalized intensity of the two-slot model; zero below the ground plane.
inline double radiation_intensity(const ModelGeometry& g, double theta, double phi) {
    if (theta > constants::pi / 2.0) return 0.0;
    const double st = std::sin(theta);
    const double sp = std::sin(phi);
    const double cp = std::cos(phi);
    const double array_factor = std::cos(g.k0 * g.effective_length / 2.0 * st * cp);
    const double element = sinc(g.k0 * g.width / 2.0 * st * sp);
    const double projection = 1.0 - st * st * cp * cp;
    return element * element * array_factor * array_factor * projection;
}

/// Samples the model on the standard quadrature grid.
///
/// When the horizon theta = 90 deg is a grid row it holds half the
/// upper-side value, i.e. the mean of the one-sided limits across the
/// ground-plane cutoff. Every row below it is exactly zero.
inline RadiationPattern sample_pattern(const ModelGeometry& g, std::size_t n_theta, std::size_t n_phi) {
    const auto theta = theta_grid(n_theta);
    const auto phi = phi_grid(n_phi);
    const bool horizon_row = (n_theta - 1) % 2 == 0;
    const std::size_t horizon = (n_theta - 1) / 2;

    std::vector<double> values(n_theta * n_phi, 0.0);
    for (std::size_t i = 0; i < n_theta; ++i) {
        const bool at_horizon = horizon_row && i == horizon;
        if (!at_horizon && theta[i] > constants::pi / 2.0) continue;
        const double t = at_horizon ? constants::pi / 2.0 : theta[i];
        const double scale = at_horizon ? 0.5 : 1.0;
        for (std::size_t j = 0; j < n_phi; ++j) values[i * n_phi + j] = scale * radiation_intensity(g, t, phi[j]);
    }
    return RadiationPattern::from_samples(n_theta, n_phi, std::move(values));
}

inline RadiationPattern sample_pattern(const AntennaSpec& spec, std::size_t n_theta, std::size_t n_phi) {
    validate(spec);
    return sample_pattern(ModelGeometry::from_spec(spec), n_theta, n_phi);
}

enum class Plane { E, H };

inline const char* plane_name(Plane plane) { return plane == Plane::E ? "E" : "H"; }

inline double plane_azimuth(Plane plane) { return plane == Plane::E ? 0.0 : constants::pi / 2.0; }

struct PatternCut {
    Plane plane = Plane::E;
    std::vector<double> theta_deg;
    std::vector<double> gain_dbi;
};

/// Realized-gain cut over [-90, 90] deg in 1 deg steps. Negative angles lie
/// in the half-plane phi + 180 deg.
inline PatternCut pattern_cut(const ModelGeometry& g, double peak_realized_gain, Plane plane) {
    PatternCut cut;
    cut.plane = plane;
    const double phi0 = plane_azimuth(plane);
    for (int deg = -90; deg <= 90; ++deg) {
        const double theta = std::abs(deg) * (constants::pi / 180.0);
        const double phi = deg < 0 ? phi0 + constants::pi : phi0;
        cut.theta_deg.push_back(deg);
        cut.gain_dbi.push_back(to_dbi(peak_realized_gain * radiation_intensity(g, theta, phi)));
    }
    return cut;
}

/// Peak realized gain e0 * D of a spec, directivity from the sampled model.
inline double peak_realized_gain(const AntennaSpec& spec, QuadratureResolution res) {
    const double d = directivity(sample_pattern(spec, res.n_theta, res.n_phi));
    const auto eff = efficiency_chain(reflection_coefficient(input_impedance(spec.feed), spec.source.reference_impedance),
                                      spec.conduction_efficiency, spec.dielectric_efficiency);
    return realized_gain(d, eff.total);
}

inline PatternCut pattern_cut(const AntennaSpec& spec, Plane plane, QuadratureResolution res) {
    return pattern_cut(ModelGeometry::from_spec(spec), peak_realized_gain(spec, res), plane);
}

/// gain(theta_a) - gain(theta_b) read from the cut without interpolation.
/// Both angles must coincide with cut samples.
inline double gain_delta(const PatternCut& cut, double theta_a_deg = 30.0, double theta_b_deg = 90.0) {
    auto lookup = [&](double angle) {
        for (std::size_t k = 0; k < cut.theta_deg.size(); ++k) {
            if (std::abs(cut.theta_deg[k] - angle) <= 1e-9) return cut.gain_dbi[k];
        }
        throw DomainError("angle " + std::to_string(angle) + " deg is not a cut sample");
    };
    return lookup(theta_a_deg) - lookup(theta_b_deg);
}

} // namespace patchant

#endif
