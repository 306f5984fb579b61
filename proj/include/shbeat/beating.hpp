#pragma once

#include <optional>
#include <string>

#include "shbeat/kinematics.hpp"

namespace shbeat {

/// Model used to turn beam + field parameters into a beat wavelength.
enum class BeatVariant {
    base,            ///< vacuum estimate 2 lambda_p (E0/hw) beta^3
    plane_wave,      ///< base / (1 - beta^2 (1 - n^2))
    tm_mode,         ///< base / (1 - beta^2 (1 - n^2 cos^2 alpha))
    exact_sideband,  ///< from the exact sideband momentum mismatch
    radiation_mode,  ///< tm_mode formula continued past the guidance angle
};

std::string to_string(BeatVariant variant);

/// Accepts the to_string names plus the alias "tm0" for tm_mode.
/// Throws UsageError for anything else.
BeatVariant parse_variant(const std::string& name);

/// Everything a variant may consume; optional fields are only required by
/// the variants that use them.
struct BeatInputs {
    ElectronBeam beam;
    LaserField laser;
    std::optional<double> refractive_index;
    std::optional<double> alpha;         ///< internal ray angle, rad
    std::optional<double> x_wavenumber;  ///< rad/Angstrom, exact variant only
};

struct BeatPrediction {
    double lambda_b;  ///< cm
    BeatVariant variant;
    BeatInputs inputs;
};

/// Result of asking which radiation mode reproduces a target beat length.
struct RadiationInversion {
    double alpha;          ///< internal ray angle, rad
    double theta;          ///< external angle after refraction, rad
    double lambda_target;  ///< cm
    double lambda_base;    ///< cm, vacuum estimate for the same beam
};

/// Vacuum beat estimate 2 lambda_p (E0 / hbar w) beta^3, in cm.
double beat_base(const ElectronBeam& beam, const LaserField& laser);

/// Plane-wave-in-medium correction, in cm.  Requires n >= 1.
double beat_planewave(const ElectronBeam& beam, const LaserField& laser,
                      double refractive_index);

/// Zigzag correction for a ray at internal angle alpha (rad, in [0, pi/2]),
/// in cm.  alpha below the guidance angle acos(1/n) describes a guided mode,
/// above it a radiation mode; the formula is the same on both sides.
double beat_tm(const ElectronBeam& beam, const LaserField& laser,
               double refractive_index, double alpha);

/// Beat length from the exact sideband momenta, 4 pi hbar / (2 p0 - p+ - p-),
/// in cm.  x_wavenumber is the transverse photon wavenumber in rad/Angstrom.
double beat_exact(const ElectronBeam& beam, const LaserField& laser,
                  double x_wavenumber);

/// Spatial period of the travelling optical modulation 2 pi hbar / (p+ - p-),
/// in Angstrom.  Close to beta * lambda_p for small photon energies.
double optical_modulation_period(const ElectronBeam& beam,
                                 const LaserField& laser, double x_wavenumber);

/// Dispatch on variant; throws UsageError when a required optional input is
/// missing.  The radiation variant reuses beat_tm without the guided-range
/// restriction on alpha.
BeatPrediction predict_beat(BeatVariant variant, const BeatInputs& inputs);

/// Solve beat_tm(...) == lambda_target for alpha in the radiation range and
/// refract to the external angle (cos theta = n cos alpha).
/// Throws NotRadiationModeError when the target does not exceed the vacuum
/// estimate and UnreachableTargetError when no real angle reproduces it.
RadiationInversion invert_radiation_angle(const ElectronBeam& beam,
                                          const LaserField& laser,
                                          double refractive_index,
                                          double lambda_target);

} // namespace shbeat
