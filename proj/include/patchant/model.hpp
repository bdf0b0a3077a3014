#ifndef PATCHANT_MODEL_HPP
#define PATCHANT_MODEL_HPP

#include <cmath>
#include <optional>
#include <string>

#include "patchant/error.hpp"
#include "patchant/units.hpp"

namespace patchant {

/// Operating or resonant frequency in hertz. Always positive and finite.
class Frequency {
public:
    constexpr Frequency() = default;

    static Frequency from_hz(double hertz) {
        if (!std::isfinite(hertz) || hertz <= 0.0)
            throw ValidationError("frequency", "must be positive and finite");
        return Frequency(hertz);
    }
    static Frequency from_ghz(double gigahertz) {
        return from_hz(normalize_quantity(gigahertz, Unit::gigahertz));
    }

    constexpr double hertz() const noexcept { return hertz_; }
    constexpr double gigahertz() const noexcept { return hertz_ / 1e9; }

    friend constexpr bool operator==(Frequency, Frequency) = default;
    friend constexpr auto operator<=>(Frequency, Frequency) = default;

private:
    constexpr explicit Frequency(double hertz) : hertz_(hertz) {}
    double hertz_ = 1.0;
};

// All lengths are metres, impedances ohms.

struct PatchSpec {
    double length = 0.0;
    double width = 0.0;
    friend bool operator==(const PatchSpec&, const PatchSpec&) = default;
};

struct SubstrateSpec {
    double length = 0.0;
    double width = 0.0;
    double height = 0.0;
    double relative_permittivity = 1.0;
    /// Carried for provenance; no computation reads it.
    std::optional<double> loss_tangent_metadata;
    friend bool operator==(const SubstrateSpec&, const SubstrateSpec&) = default;
};

struct GroundPlaneSpec {
    double length = 0.0;
    double width = 0.0;
    friend bool operator==(const GroundPlaneSpec&, const GroundPlaneSpec&) = default;
};

struct FeedSpec {
    double feed_length = 0.0;
    double radiation_resistance = 0.0;
    double loss_resistance = 0.0;
    double reactance = 0.0;
    friend bool operator==(const FeedSpec&, const FeedSpec&) = default;
};

struct SourceSpec {
    double resistance = 50.0;
    double reactance = 0.0;
    double reference_impedance = 50.0;
    friend bool operator==(const SourceSpec&, const SourceSpec&) = default;
};

struct AntennaSpec {
    std::string name;
    Frequency operating_frequency;
    PatchSpec patch;
    SubstrateSpec substrate;
    GroundPlaneSpec ground;
    FeedSpec feed;
    SourceSpec source;
    double conduction_efficiency = 1.0;
    double dielectric_efficiency = 1.0;
    /// Solver mesh setting kept only so documents survive a round trip.
    std::optional<double> mesh_wire_radius_metadata;

    friend bool operator==(const AntennaSpec&, const AntennaSpec&) = default;
};

namespace detail {

inline void require(bool ok, const char* field, const char* what) {
    if (!ok) throw ValidationError(field, what);
}

inline bool positive(double v) { return std::isfinite(v) && v > 0.0; }
inline bool non_negative(double v) { return std::isfinite(v) && v >= 0.0; }
inline bool unit_interval(double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; }

} // namespace detail

/// Checks every type invariant of `spec`; throws ValidationError naming the
/// first offending field.
inline void validate(const AntennaSpec& spec) {
    using detail::require;
    using detail::positive;
    using detail::non_negative;

    require(!spec.name.empty(), "name", "must not be empty");
    require(positive(spec.operating_frequency.hertz()), "frequency_ghz", "must be positive");

    require(positive(spec.patch.length), "patch_mm.length", "must be positive");
    require(positive(spec.patch.width), "patch_mm.width", "must be positive");

    const auto& sub = spec.substrate;
    require(positive(sub.length), "substrate_mm.length", "must be positive");
    require(positive(sub.width), "substrate_mm.width", "must be positive");
    require(positive(sub.height), "substrate_mm.height", "must be positive");
    require(std::isfinite(sub.relative_permittivity) && sub.relative_permittivity >= 1.0,
            "relative_permittivity", "must be >= 1");
    if (sub.loss_tangent_metadata)
        require(non_negative(*sub.loss_tangent_metadata), "loss_tangent", "must be >= 0");

    require(positive(spec.ground.length), "ground_mm.length", "must be positive");
    require(positive(spec.ground.width), "ground_mm.width", "must be positive");

    require(spec.patch.length <= sub.length, "patch_mm.length", "exceeds substrate length");
    require(spec.patch.width <= sub.width, "patch_mm.width", "exceeds substrate width");
    require(sub.length <= spec.ground.length, "substrate_mm.length", "exceeds ground plane length");
    require(sub.width <= spec.ground.width, "substrate_mm.width", "exceeds ground plane width");

    const auto& feed = spec.feed;
    require(non_negative(feed.feed_length), "feed.length_mm", "must be >= 0");
    require(non_negative(feed.radiation_resistance), "feed.rr_ohm", "must be >= 0");
    require(non_negative(feed.loss_resistance), "feed.rl_ohm", "must be >= 0");
    require(std::isfinite(feed.reactance), "feed.xa_ohm", "must be finite");

    require(non_negative(spec.source.resistance), "source.rg_ohm", "must be >= 0");
    require(std::isfinite(spec.source.reactance), "source.xg_ohm", "must be finite");
    require(positive(spec.source.reference_impedance), "source.z0_ohm", "must be positive");

    require(detail::unit_interval(spec.conduction_efficiency), "ec", "must lie in [0, 1]");
    require(detail::unit_interval(spec.dielectric_efficiency), "ed", "must lie in [0, 1]");
    if (spec.mesh_wire_radius_metadata)
        require(non_negative(*spec.mesh_wire_radius_metadata), "mesh_wire_radius_mm", "must be >= 0");
}

} // namespace patchant

#endif
