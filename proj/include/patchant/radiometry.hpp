#ifndef PATCHANT_RADIOMETRY_HPP
#define PATCHANT_RADIOMETRY_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "patchant/constants.hpp"
#include "patchant/error.hpp"
#include "patchant/model.hpp"

namespace patchant {

struct QuadratureResolution {
    std::size_t n_theta = 361;
    std::size_t n_phi = 720;
};

/// Uniform polar grid over [0, pi], both poles included.
inline std::vector<double> theta_grid(std::size_t n_theta) {
    if (n_theta < 2) throw DomainError("theta grid needs at least 2 points");
    std::vector<double> theta(n_theta);
    const double step = constants::pi / static_cast<double>(n_theta - 1);
    for (std::size_t i = 0; i < n_theta; ++i) theta[i] = static_cast<double>(i) * step;
    theta.back() = constants::pi;
    return theta;
}

/// Azimuth cell midpoints over [0, 2pi).
inline std::vector<double> phi_grid(std::size_t n_phi) {
    if (n_phi < 1) throw DomainError("phi grid needs at least 1 point");
    std::vector<double> phi(n_phi);
    const double step = 2.0 * constants::pi / static_cast<double>(n_phi);
    for (std::size_t j = 0; j < n_phi; ++j) phi[j] = (static_cast<double>(j) + 0.5) * step;
    return phi;
}

/// Normalized radiation intensity F(theta, phi) sampled on theta_grid x phi_grid,
/// stored theta-major. Peak is exactly 1.
class RadiationPattern {
public:
    /// Normalizes `intensity` by its maximum. Throws DegeneratePattern when
    /// every sample is zero.
    static RadiationPattern from_samples(std::size_t n_theta, std::size_t n_phi, std::vector<double> intensity) {
        if (n_theta < 2 || n_phi < 1) throw DomainError("pattern needs n_theta >= 2 and n_phi >= 1");
        if (intensity.size() != n_theta * n_phi) throw DomainError("intensity size does not match grid");
        double peak = 0.0;
        for (double v : intensity) {
            if (!std::isfinite(v) || v < 0.0) throw DomainError("intensity samples must be finite and >= 0");
            peak = std::max(peak, v);
        }
        if (peak == 0.0) throw DegeneratePattern("pattern is identically zero");
        for (double& v : intensity) v /= peak;
        return RadiationPattern(n_theta, n_phi, std::move(intensity));
    }

    /// Samples a callable `f(theta, phi)` on the standard grid.
    template <class Fn>
    static RadiationPattern sample(Fn&& f, std::size_t n_theta, std::size_t n_phi) {
        const auto theta = theta_grid(n_theta);
        const auto phi = phi_grid(n_phi);
        std::vector<double> values;
        values.reserve(n_theta * n_phi);
        for (double t : theta)
            for (double p : phi) values.push_back(f(t, p));
        return from_samples(n_theta, n_phi, std::move(values));
    }

    std::size_t n_theta() const noexcept { return n_theta_; }
    std::size_t n_phi() const noexcept { return n_phi_; }
    std::vector<double> theta_samples() const { return theta_grid(n_theta_); }
    std::vector<double> phi_samples() const { return phi_grid(n_phi_); }
    double at(std::size_t i, std::size_t j) const { return intensity_[i * n_phi_ + j]; }
    std::span<const double> row(std::size_t i) const {
        return std::span<const double>(intensity_).subspan(i * n_phi_, n_phi_);
    }
    std::span<const double> intensity() const noexcept { return intensity_; }

private:
    RadiationPattern(std::size_t n_theta, std::size_t n_phi, std::vector<double> intensity)
        : n_theta_(n_theta), n_phi_(n_phi), intensity_(std::move(intensity)) {}

    std::size_t n_theta_;
    std::size_t n_phi_;
    std::vector<double> intensity_;
};

/// Composite Newton-Cotes weights on n uniform points with spacing h:
/// Simpson when the interval count is even, Simpson plus a closing 3/8 panel
/// when it is odd, trapezoid for a single interval.
inline std::vector<double> polar_weights(std::size_t n, double h) {
    std::vector<double> w(n, 0.0);
    const std::size_t intervals = n - 1;
    if (intervals == 1) {
        w[0] = w[1] = h / 2.0;
        return w;
    }
    const std::size_t simpson_intervals = intervals % 2 == 0 ? intervals : intervals - 3;
    for (std::size_t k = 0; k + 2 <= simpson_intervals; k += 2) {
        w[k] += h / 3.0;
        w[k + 1] += 4.0 * h / 3.0;
        w[k + 2] += h / 3.0;
    }
    if (simpson_intervals != intervals) {
        const std::size_t k = simpson_intervals;
        w[k] += 3.0 * h / 8.0;
        w[k + 1] += 9.0 * h / 8.0;
        w[k + 2] += 9.0 * h / 8.0;
        w[k + 3] += 3.0 * h / 8.0;
    }
    return w;
}

/// Pattern solid angle: integral of F over the sphere, steradians.
///
/// Newton-Cotes in theta (sin(theta) folded into the weights), equal-weight
/// midpoints in phi. Rows are accumulated in ascending theta, so the result
/// is bit-reproducible.
inline double pattern_solid_angle(const RadiationPattern& p) {
    const auto theta = p.theta_samples();
    const double h = constants::pi / static_cast<double>(p.n_theta() - 1);
    const auto w = polar_weights(p.n_theta(), h);
    const double dphi = 2.0 * constants::pi / static_cast<double>(p.n_phi());

    double omega = 0.0;
    for (std::size_t i = 0; i < p.n_theta(); ++i) {
        double ring = 0.0;
        for (double v : p.row(i)) ring += v;
        omega += w[i] * std::sin(theta[i]) * ring * dphi;
    }
    if (!(omega > 0.0)) throw DegeneratePattern("pattern solid angle is zero");
    return omega;
}

inline double directivity(const RadiationPattern& p) { return 4.0 * constants::pi / pattern_solid_angle(p); }

/// Gain from radiation intensity `u` (W/sr) and accepted power `p_in` (W).
inline double gain_from_intensity(double u, double p_in) {
    if (!(p_in > 0.0)) throw DomainError("input power must be positive");
    if (!(u >= 0.0)) throw DomainError("radiation intensity must be >= 0");
    return 4.0 * constants::pi * u / p_in;
}

inline double realized_gain(double directivity_value, double total_efficiency) {
    if (!(directivity_value >= 0.0)) throw DomainError("directivity must be >= 0");
    if (!(total_efficiency >= 0.0 && total_efficiency <= 1.0))
        throw DomainError("total efficiency must lie in [0, 1]");
    return total_efficiency * directivity_value;
}

inline double radiation_efficiency(double radiated_power, double transmitter_power) {
    if (!(transmitter_power > 0.0)) throw DomainError("transmitter power must be positive");
    if (!(radiated_power >= 0.0)) throw DomainError("radiated power must be >= 0");
    if (radiated_power > transmitter_power) throw DomainError("radiated power exceeds transmitter power");
    return radiated_power / transmitter_power;
}

struct Impedance {
    double resistance = 0.0;
    double reactance = 0.0;

    std::complex<double> complex() const { return {resistance, reactance}; }
    friend bool operator==(const Impedance&, const Impedance&) = default;
};

inline Impedance input_impedance(const FeedSpec& feed) {
    return {feed.radiation_resistance + feed.loss_resistance, feed.reactance};
}

/// Voltage reflection coefficient of `load` against a real reference impedance.
inline std::complex<double> reflection_coefficient(Impedance load, double reference_impedance) {
    if (!(reference_impedance > 0.0)) throw DomainError("reference impedance must be positive");
    const std::complex<double> z = load.complex();
    const std::complex<double> denom = z + reference_impedance;
    if (denom == 0.0) throw SingularityError("load impedance equals -Z0");
    return (z - reference_impedance) / denom;
}

struct EfficiencyBreakdown {
    std::complex<double> gamma;
    double reflection = 1.0;  // er
    double conduction = 1.0;  // ec
    double dielectric = 1.0;  // ed
    double total = 1.0;       // e0

    friend bool operator==(const EfficiencyBreakdown&, const EfficiencyBreakdown&) = default;
};

inline EfficiencyBreakdown efficiency_chain(std::complex<double> gamma, double conduction, double dielectric) {
    const double mag2 = std::norm(gamma);
    if (!(mag2 <= 1.0)) throw DomainError("|gamma| must not exceed 1");
    if (!(conduction >= 0.0 && conduction <= 1.0)) throw DomainError("ec must lie in [0, 1]");
    if (!(dielectric >= 0.0 && dielectric <= 1.0)) throw DomainError("ed must lie in [0, 1]");
    EfficiencyBreakdown e;
    e.gamma = gamma;
    e.reflection = 1.0 - mag2;
    e.conduction = conduction;
    e.dielectric = dielectric;
    e.total = e.reflection * conduction * dielectric;
    return e;
}

/// Power ratio in dB; zero maps to the -120 dB floor.
inline double to_dbi(double ratio) {
    if (!(ratio >= 0.0)) throw DomainError("dB conversion needs a ratio >= 0");
    if (ratio == 0.0) return constants::dbi_floor;
    return std::max(10.0 * std::log10(ratio), constants::dbi_floor);
}

} // namespace patchant

#endif
