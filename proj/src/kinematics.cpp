#include "shbeat/kinematics.hpp"

#include <cmath>

#include "shbeat/constants.hpp"
#include "shbeat/errors.hpp"

namespace shbeat {

namespace {

void require_valid_beam(const ElectronBeam& beam) {
    if (!(beam.total_energy > 0.0) || !(beam.rest_energy > 0.0) ||
        !(beam.beta >= 0.0) || !(beam.beta < 1.0)) {
        throw DomainError("kinematics: invalid electron beam state");
    }
}

} // namespace

const Sideband& SidebandSet::order(int n) const {
    switch (n) {
        case -1: return minus_one;
        case 0: return zero;
        case +1: return plus_one;
        default: throw DomainError("sideband order must be -1, 0 or +1");
    }
}

ElectronBeam electron_from_kinetic(double kinetic_energy) {
    if (!(kinetic_energy > 0.0)) {
        throw DomainError("electron kinetic energy must be positive");
    }
    const double rest = constants::electron_rest_energy;
    const double total = rest + kinetic_energy;
    // E^2 - M^2 = T*(E + M); exact factorization, stable for T -> 0.
    const double pc = std::sqrt(kinetic_energy * (total + rest));
    return ElectronBeam{kinetic_energy, rest, total, pc, pc / total};
}

LaserField laser_from_wavelength(double vacuum_wavelength) {
    if (!(vacuum_wavelength > 0.0)) {
        throw DomainError("laser vacuum wavelength must be positive");
    }
    const double photon_energy = constants::hc / vacuum_wavelength;
    const double wavenumber = 2.0 * constants::pi / vacuum_wavelength;
    const double omega = wavenumber * constants::speed_of_light;
    return LaserField{vacuum_wavelength, photon_energy, omega, wavenumber};
}

SidebandSet sidebands(const ElectronBeam& beam, const LaserField& laser,
                      double x_wavenumber) {
    require_valid_beam(beam);
    if (!(laser.photon_energy >= 0.0)) {
        throw DomainError("laser photon energy must be non-negative");
    }
    if (!(x_wavenumber >= 0.0)) {
        throw DomainError("x wavenumber must be non-negative");
    }

    const double rest = beam.rest_energy;
    auto make = [&](int n) {
        const double energy = beam.total_energy + n * laser.photon_energy;
        const double px_c = n * constants::hbar_c * x_wavenumber;
        // E^2 - M^2 as (E-M)(E+M) to avoid squaring ~0.5 MeV quantities.
        const double u = (energy - rest) * (energy + rest) - px_c * px_c;
        if (!(u >= 0.0)) {
            throw EvanescentSidebandError(
                "sideband n = " + std::to_string(n) +
                " is evanescent: parameters outside the propagating regime");
        }
        return Sideband{n, energy, px_c, std::sqrt(u)};
    };

    return SidebandSet{make(-1), make(0), make(+1)};
}

SidebandPhaseRates sideband_phase_rates(const ElectronBeam& beam,
                                        const LaserField& laser,
                                        double x_wavenumber) {
    const SidebandSet set = sidebands(beam, laser, x_wavenumber);

    const double p0 = set.zero.pz_c;
    const double p_plus = set.plus_one.pz_c;
    const double p_minus = set.minus_one.pz_c;
    const double pair_sum = p_plus + p_minus;

    // With u_n = E_n^2 - M^2 - (px_n c)^2:
    //   u_{+-1} - u_0 = +-2 E0 hw + A,  A = hw^2 - (hbar c k)^2,
    // so the momentum differences reduce to ratios of these exact small
    // quantities and no large-term cancellation remains:
    //   p_{+1} - p_{-1} = 4 E0 hw / (p_{+1} + p_{-1})
    //   2 p0 - p_{+1} - p_{-1} =
    //     [8 (E0 hw)^2 / (p_{+1}+p_{-1}) - A (p_{+1}+p_{-1}+2 p0)]
    //       / [(p_{+1}+p0)(p_{-1}+p0)]
    const double a = beam.total_energy * laser.photon_energy;
    const double hck = constants::hbar_c * x_wavenumber;
    const double A = laser.photon_energy * laser.photon_energy - hck * hck;

    double traveling_num = 0.0;
    double stationary_num = 0.0;
    if (pair_sum > 0.0) {
        traveling_num = 4.0 * a / pair_sum;
        stationary_num = (8.0 * a * a / pair_sum - A * (pair_sum + 2.0 * p0)) /
                         ((p_plus + p0) * (p_minus + p0));
    }

    const double two_hbar_c = 2.0 * constants::hbar_c;
    return SidebandPhaseRates{stationary_num / two_hbar_c,
                              traveling_num / two_hbar_c};
}

double mass_shell_residual(const Sideband& sb) {
    const double m2 = constants::electron_rest_energy *
                      constants::electron_rest_energy;
    const double e2 = sb.energy * sb.energy;
    const double lhs = e2 - m2 - sb.px_c * sb.px_c - sb.pz_c * sb.pz_c;
    return std::abs(lhs) / e2;
}

} // namespace shbeat
