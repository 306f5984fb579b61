#include "shbeat/beating.hpp"

#include <cmath>
#include <limits>

#include "shbeat/constants.hpp"
#include "shbeat/errors.hpp"

namespace shbeat {

std::string to_string(BeatVariant variant) {
    switch (variant) {
        case BeatVariant::base: return "base";
        case BeatVariant::plane_wave: return "planewave";
        case BeatVariant::tm_mode: return "tm";
        case BeatVariant::exact_sideband: return "exact";
        case BeatVariant::radiation_mode: return "radiation";
    }
    throw UsageError("unknown beat variant");
}

BeatVariant parse_variant(const std::string& name) {
    if (name == "base") return BeatVariant::base;
    if (name == "planewave") return BeatVariant::plane_wave;
    if (name == "tm" || name == "tm0") return BeatVariant::tm_mode;
    if (name == "exact") return BeatVariant::exact_sideband;
    if (name == "radiation") return BeatVariant::radiation_mode;
    throw UsageError("unknown beat variant '" + name +
                     "' (expected base, planewave, tm, exact or radiation)");
}

double beat_base(const ElectronBeam& beam, const LaserField& laser) {
    const double lambda_angstrom = 2.0 * laser.vacuum_wavelength *
                                   (beam.total_energy / laser.photon_energy) *
                                   beam.beta * beam.beta * beam.beta;
    return constants::angstrom_to_cm(lambda_angstrom);
}

double beat_planewave(const ElectronBeam& beam, const LaserField& laser,
                      double refractive_index) {
    return beat_tm(beam, laser, refractive_index, 0.0);
}

double beat_tm(const ElectronBeam& beam, const LaserField& laser,
               double refractive_index, double alpha) {
    if (!(refractive_index >= 1.0)) {
        throw DomainError("refractive index must be at least 1");
    }
    if (!(alpha >= 0.0) || !(alpha <= 0.5 * constants::pi)) {
        throw DomainError("internal angle must lie in [0, pi/2]");
    }
    const double n_cos = refractive_index * std::cos(alpha);
    const double b2 = beam.beta * beam.beta;
    // 1 - b2 * (1 - n_cos^2) stays in (0, 1 + b2 (n^2 - 1)]; never zero.
    const double denom = 1.0 - b2 * (1.0 - n_cos * n_cos);
    return beat_base(beam, laser) / denom;
}

double beat_exact(const ElectronBeam& beam, const LaserField& laser,
                  double x_wavenumber) {
    const SidebandPhaseRates rates =
        sideband_phase_rates(beam, laser, x_wavenumber);
    if (rates.stationary == 0.0) {
        // degenerate sidebands (zero photon energy): no beat at any distance
        return std::numeric_limits<double>::infinity();
    }
    if (!(rates.stationary > 0.0)) {
        throw NumericalFailure("sideband momentum mismatch is not positive");
    }
    return constants::angstrom_to_cm(2.0 * constants::pi / rates.stationary);
}

double optical_modulation_period(const ElectronBeam& beam,
                                 const LaserField& laser, double x_wavenumber) {
    const SidebandPhaseRates rates =
        sideband_phase_rates(beam, laser, x_wavenumber);
    if (rates.traveling == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    if (!(rates.traveling > 0.0)) {
        throw NumericalFailure("sideband momentum difference is not positive");
    }
    return 2.0 * constants::pi / rates.traveling;
}

namespace {

double require_input(const std::optional<double>& value, const char* what) {
    if (!value) {
        throw UsageError(std::string("variant requires ") + what);
    }
    return *value;
}

} // namespace

BeatPrediction predict_beat(BeatVariant variant, const BeatInputs& inputs) {
    double lambda_b = 0.0;
    switch (variant) {
        case BeatVariant::base:
            lambda_b = beat_base(inputs.beam, inputs.laser);
            break;
        case BeatVariant::plane_wave:
            lambda_b = beat_planewave(
                inputs.beam, inputs.laser,
                require_input(inputs.refractive_index, "a refractive index"));
            break;
        case BeatVariant::tm_mode:
        case BeatVariant::radiation_mode:
            lambda_b = beat_tm(
                inputs.beam, inputs.laser,
                require_input(inputs.refractive_index, "a refractive index"),
                require_input(inputs.alpha, "an internal angle"));
            break;
        case BeatVariant::exact_sideband:
            lambda_b = beat_exact(
                inputs.beam, inputs.laser,
                require_input(inputs.x_wavenumber, "a transverse wavenumber"));
            break;
    }
    return BeatPrediction{lambda_b, variant, inputs};
}

RadiationInversion invert_radiation_angle(const ElectronBeam& beam,
                                          const LaserField& laser,
                                          double refractive_index,
                                          double lambda_target) {
    if (!(refractive_index > 1.0)) {
        throw DomainError("refractive index must exceed 1");
    }
    if (!(lambda_target > 0.0)) {
        throw DomainError("target beat wavelength must be positive");
    }
    const double lambda_base = beat_base(beam, laser);
    if (!(lambda_target > lambda_base)) {
        throw NotRadiationModeError(
            "target does not exceed the vacuum estimate; "
            "only radiation modes stretch the beat wavelength");
    }
    const double b2 = beam.beta * beam.beta;
    const double n2 = refractive_index * refractive_index;
    const double cos2_alpha = (lambda_base / lambda_target - 1.0 + b2) / (b2 * n2);
    if (cos2_alpha < 0.0) {
        throw UnreachableTargetError(
            "target exceeds the longest radiation-mode beat wavelength");
    }
    const double cos2_theta = n2 * cos2_alpha;
    if (cos2_theta > 1.0) {
        throw UnreachableTargetError(
            "no external angle refracts to the required internal ray");
    }
    return RadiationInversion{std::acos(std::sqrt(cos2_alpha)),
                              std::acos(std::sqrt(cos2_theta)), lambda_target,
                              lambda_base};
}

} // namespace shbeat
