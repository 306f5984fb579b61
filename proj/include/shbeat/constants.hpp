#pragma once

#include <numbers>

// Physical constant table and unit conventions.
//
// Canonical internal units: energy in eV, length in Angstrom, time in s,
// angles in radians. Beat wavelengths are reported in cm at I/O boundaries;
// angles cross I/O boundaries in degrees.

namespace shbeat::constants {

inline constexpr double pi = std::numbers::pi;

/// Electron rest energy m c^2 (eV), CODATA-style.
inline constexpr double electron_rest_energy = 510998.95;

/// h c (eV * Angstrom).
inline constexpr double hc = 12398.42;

/// hbar c = hc / 2pi (eV * Angstrom).
inline constexpr double hbar_c = hc / (2.0 * pi);

/// Speed of light in vacuum (Angstrom / s), exact.
inline constexpr double speed_of_light = 2.99792458e18;

inline constexpr double angstrom_per_cm = 1.0e8;
inline constexpr double ev_per_kev = 1.0e3;

inline constexpr double deg_to_rad(double deg) { return deg * pi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / pi; }

inline constexpr double angstrom_to_cm(double a) { return a / angstrom_per_cm; }
inline constexpr double cm_to_angstrom(double cm) { return cm * angstrom_per_cm; }

} // namespace shbeat::constants
