#pragma once

// Relativistic electron-photon sideband kinematics.
//
// An electron crossing the illuminated film exchanges n = 0, +-1 photons,
// leaving with energy E_n = E_0 + n*hbar*omega and transverse momentum
// p_nx = n*hbar*k. The longitudinal momentum follows from the mass shell
// E_n^2 = (mc^2)^2 + (p c)^2, positive root (beam along +z).
//
// Momenta are carried as p*c in eV throughout.

namespace shbeat {

/// Relativistic state of the incident electron. All energies in eV.
struct ElectronBeam {
    double kinetic_energy;  ///< E_0 - mc^2
    double rest_energy;     ///< mc^2
    double total_energy;    ///< E_0
    double momentum_c;      ///< p_0 c
    double beta;            ///< v_0 / c
};

/// Monochromatic laser light in vacuum.
struct LaserField {
    double vacuum_wavelength;   ///< Angstrom
    double photon_energy;       ///< hbar*omega, eV
    double angular_frequency;   ///< omega, rad/s
    double vacuum_wavenumber;   ///< k0 = 2pi/lambda, rad/Angstrom
};

/// One electron plane-wave component after exchanging |order| photons.
struct Sideband {
    int order;      ///< n in {-1, 0, +1}
    double energy;  ///< E_n, eV
    double px_c;    ///< transverse momentum * c, eV (signed)
    double pz_c;    ///< longitudinal momentum * c, eV (non-negative root)
};

struct SidebandSet {
    Sideband minus_one;
    Sideband zero;
    Sideband plus_one;

    const Sideband& order(int n) const;
};

/// z phase rates of the three-wave interference, rad/Angstrom.
/// stationary = (2 p0 - p_{+1,z} - p_{-1,z}) c / (2 hbar c) sets the beat
/// wavelength; traveling = (p_{+1,z} - p_{-1,z}) c / (2 hbar c) sets the
/// z period of the optical modulation phase.
struct SidebandPhaseRates {
    double stationary;
    double traveling;
};

/// Build the beam state from its kinetic energy (eV). Throws DomainError
/// for non-positive input.
ElectronBeam electron_from_kinetic(double kinetic_energy);

/// Build the laser state from its vacuum wavelength (Angstrom). Throws
/// DomainError for non-positive input.
LaserField laser_from_wavelength(double vacuum_wavelength);

/// Sidebands for a given transverse wavenumber k (rad/Angstrom) of the
/// light inside the film: k = n*k0 for a plane wave, n*k0*cos(alpha) for a
/// guided mode. Throws EvanescentSidebandError if any sideband would not
/// propagate. photon_energy = 0 is accepted and yields three identical
/// sidebands (no photon exchange).
SidebandSet sidebands(const ElectronBeam& beam, const LaserField& laser,
                      double x_wavenumber);

/// Cancellation-safe evaluation of the phase rates. The stationary rate is
/// a ~1e-9 relative difference of the sideband momenta; forming it from an
/// exact algebraic rearrangement keeps full double precision.
SidebandPhaseRates sideband_phase_rates(const ElectronBeam& beam,
                                        const LaserField& laser,
                                        double x_wavenumber);

/// |E^2 - (mc^2)^2 - (px c)^2 - (pz c)^2| / E^2, for diagnostics and tests.
double mass_shell_residual(const Sideband& sb);

} // namespace shbeat
