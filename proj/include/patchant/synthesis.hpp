#ifndef PATCHANT_SYNTHESIS_HPP
#define PATCHANT_SYNTHESIS_HPP

// Rectangular patch design equations (transmission-line model): width from
// the target frequency, fringing-corrected length, and the two rearranged
// forms used to analyse an existing patch.

#include <cmath>
#include <sstream>
#include <string>

#include "patchant/constants.hpp"
#include "patchant/error.hpp"
#include "patchant/model.hpp"

namespace patchant {

struct DesignResult {
    double width = 0.0;                   // m
    double effective_permittivity = 1.0;
    double length_extension = 0.0;        // m, fringing extension per radiating edge
    double length = 0.0;                  // m
    Frequency target_frequency;

    friend bool operator==(const DesignResult&, const DesignResult&) = default;
};

namespace detail {

inline void require_permittivity(double relative_permittivity) {
    if (!std::isfinite(relative_permittivity) || relative_permittivity < 1.0)
        throw DomainError("relative permittivity must be >= 1");
}

} // namespace detail

/// Patch width that makes the fundamental mode radiate efficiently at `fr`.
inline double patch_width(Frequency fr, double relative_permittivity) {
    detail::require_permittivity(relative_permittivity);
    return constants::c0 / (2.0 * fr.hertz()) * std::sqrt(2.0 / (relative_permittivity + 1.0));
}

/// Effective permittivity of a microstrip of width `width` on a substrate of
/// height `height`. Lies in [1, relative_permittivity].
inline double effective_permittivity(double relative_permittivity, double height, double width) {
    detail::require_permittivity(relative_permittivity);
    if (!(width > 0.0) || !std::isfinite(width)) throw DomainError("patch width must be positive");
    if (!(height >= 0.0) || !std::isfinite(height)) throw DomainError("substrate height must be >= 0");
    const double er = relative_permittivity;
    return (er + 1.0) / 2.0 + (er - 1.0) / 2.0 / std::sqrt(1.0 + 12.0 * height / width);
}

/// Fringing-field length extension at one radiating edge.
inline double length_extension(double height, double width, double eps_eff) {
    if (!(width > 0.0) || !std::isfinite(width)) throw DomainError("patch width must be positive");
    if (!(height >= 0.0) || !std::isfinite(height)) throw DomainError("substrate height must be >= 0");
    if (!(eps_eff > 0.258)) throw SingularityError("effective permittivity must exceed 0.258");
    if (height == 0.0) return 0.0;
    const double w_over_h = width / height;
    return 0.412 * height * (eps_eff + 0.3) * (w_over_h + 0.264) / ((eps_eff - 0.258) * (w_over_h + 0.8));
}

/// Full design chain: width, effective permittivity, extension and the
/// physical length resonating at `fr`.
///
/// Throws InfeasibleDesign when the fringing extension swallows the whole
/// electrical length (L <= 0).
inline DesignResult patch_length(Frequency fr, double relative_permittivity, double height) {
    DesignResult r;
    r.target_frequency = fr;
    r.width = patch_width(fr, relative_permittivity);
    r.effective_permittivity = effective_permittivity(relative_permittivity, height, r.width);
    r.length_extension = length_extension(height, r.width, r.effective_permittivity);
    // sqrt(eps0 * mu0) taken as exactly 1 / c0
    r.length = constants::c0 / (2.0 * fr.hertz() * std::sqrt(r.effective_permittivity)) - 2.0 * r.length_extension;
    if (!(r.length > 0.0)) {
        std::ostringstream msg;
        msg << "infeasible design: L = " << r.length << " m (W = " << r.width
            << " m, eps_eff = " << r.effective_permittivity << ", dL = " << r.length_extension << " m)";
        throw InfeasibleDesign(msg.str());
    }
    return r;
}

/// Resonant frequency of an as-built patch. Uses the given width, not the
/// synthesized one.
inline Frequency resonant_frequency(double length, double width, double height, double relative_permittivity) {
    if (!(length > 0.0) || !std::isfinite(length)) throw DomainError("patch length must be positive");
    const double eps_eff = effective_permittivity(relative_permittivity, height, width);
    const double dl = length_extension(height, width, eps_eff);
    return Frequency::from_hz(constants::c0 / (2.0 * (length + 2.0 * dl) * std::sqrt(eps_eff)));
}

struct PermittivityBracket {
    double low = 1.0;
    double high = 100.0;
};

/// Relative permittivity at which the as-built patch resonates at `target`.
///
/// Bisection on the strictly decreasing map er -> fr over [1, 100]; stops
/// once |fr - target| <= 1e-9 * target or after 200 halvings.
inline double invert_permittivity(double length, double width, double height, Frequency target,
                                  PermittivityBracket bracket = {}) {
    const double f_low_er = resonant_frequency(length, width, height, bracket.low).hertz();
    const double f_high_er = resonant_frequency(length, width, height, bracket.high).hertz();
    const double goal = target.hertz();
    if (goal > f_low_er || goal < f_high_er) {
        std::ostringstream msg;
        msg << "no permittivity in [" << bracket.low << ", " << bracket.high << "] resonates at " << goal
            << " Hz; bracket spans " << f_high_er << " .. " << f_low_er << " Hz";
        throw NoSolution(msg.str(), f_high_er, f_low_er);
    }

    const double tolerance = 1e-9 * goal;
    double lo = bracket.low;
    double hi = bracket.high;
    double mid = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
        mid = 0.5 * (lo + hi);
        const double f = resonant_frequency(length, width, height, mid).hertz();
        if (std::abs(f - goal) <= tolerance) break;
        if (f > goal)
            lo = mid;
        else
            hi = mid;
    }
    return mid;
}

} // namespace patchant

#endif
