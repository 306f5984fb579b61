#pragma once

#include <string>

#include "shbeat/kinematics.hpp"

// Symmetric vacuum-clad dielectric slab, TM polarization.
//
// A guided TM_m mode is a superposition of two plane waves at angles
// +-alpha to the slab plane, totally internally reflected
// (n cos(alpha) > 1). The dispersion relation,
//     tan(kappa d/2 - m pi/2) = n^2 gamma / kappa,
//     kappa = n k0 sin(alpha),  gamma = k0 sqrt(n^2 cos^2(alpha) - 1),
// is solved in arctangent phase form, which is strictly increasing in
// alpha over the TIR bracket and changes sign exactly when the mode is
// guided.

namespace shbeat {

/// Dielectric film between z = -d and z = 0, vacuum on both sides.
struct Slab {
    double thickness;         ///< d, Angstrom
    double refractive_index;  ///< n at the laser wavelength, > 1
    std::string material;     ///< label, informational only
};

/// A solved guided TM mode.
struct ModeSolution {
    int mode_index;   ///< m >= 0
    double alpha;     ///< internal ray angle to the slab plane, rad
    double kappa;     ///< transverse wavenumber inside the slab, rad/Angstrom
    double gamma;     ///< evanescent decay rate in the cladding, rad/Angstrom
    double residual;  ///< phase-form dispersion mismatch at alpha, rad
};

/// Thickness above which TM_m becomes guided: m*lambda_p/(2 sqrt(n^2-1)).
/// TM0 has no cutoff (returns 0 for mode_index = 0). Throws DomainError
/// for refractive_index <= 1 or mode_index < 0.
double tm_cutoff_thickness(const LaserField& laser, double refractive_index,
                           int mode_index);

/// Number of guided TM modes. Thickness exactly at a cutoff does NOT count
/// the new mode (strict inequality).
int tm_mode_count(const Slab& slab, const LaserField& laser);

/// Signed dispersion mismatch kappa*d/2 - m*pi/2 - atan(n^2 gamma / kappa)
/// at a candidate angle; zero iff the angle is the TM_m mode. Throws
/// DomainError when candidate_alpha is outside (0, arccos(1/n)).
double dispersion_residual(double candidate_alpha, const Slab& slab,
                           const LaserField& laser, int mode_index);

/// Solve the TM_m dispersion relation by bisection. Deterministic:
/// identical inputs give bit-identical results. Throws NoSuchModeError if
/// the mode is not guided at this thickness, NumericalFailure if the root
/// cannot be bracketed (unreachable for guided modes away from a cutoff
/// knife edge).
ModeSolution solve_tm_mode(const Slab& slab, const LaserField& laser,
                           int mode_index);

} // namespace shbeat
