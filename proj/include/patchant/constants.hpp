#ifndef PATCHANT_CONSTANTS_HPP
#define PATCHANT_CONSTANTS_HPP

#include <numbers>

namespace patchant::constants {

/// Speed of light in vacuum, m/s (exact by SI definition).
inline constexpr double c0 = 299792458.0;
/// Vacuum permittivity, F/m (CODATA 2018).
inline constexpr double epsilon0 = 8.8541878128e-12;
/// Vacuum permeability, H/m (CODATA 2018).
inline constexpr double mu0 = 1.25663706212e-6;

inline constexpr double pi = std::numbers::pi;

/// Floor reported by to_dbi for zero power ratios.
inline constexpr double dbi_floor = -120.0;

} // namespace patchant::constants

#endif
