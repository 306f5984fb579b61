#pragma once

#include <string>
#include <vector>

#include "shbeat/kinematics.hpp"

namespace shbeat {

/// Whether the beat envelope starts at a node (sine) or an antinode (cosine)
/// at the plate, z = 0.  The sine form is what the two-sideband picture
/// predicts; the cosine form is what the fringe photographs show.
enum class PhaseConvention { sine, cosine };

std::string to_string(PhaseConvention convention);

/// Accepts "sine" / "sine_theory" and "cosine" / "cosine_experiment";
/// throws UsageError otherwise.
PhaseConvention parse_phase_convention(const std::string& name);

/// sin(pi d / (2 d0)): modulation transfer of a plate of thickness d when
/// d0 is the optimum thickness.  Unity at d == d0, sign flips past 2 d0.
double thickness_factor(double thickness, double optimum_thickness);

struct PatternParams {
    ElectronBeam beam;
    LaserField laser;
    double x_wavenumber = 0.0;       ///< transverse optical wavenumber, rad/Angstrom
    double beta_mod = 0.35;          ///< modulation depth of the beam current
    double thickness = 1000.0;       ///< plate thickness, Angstrom
    double optimum_thickness = 1007.0;  ///< Angstrom
    PhaseConvention convention = PhaseConvention::sine;
};

/// Density modulation behind the plate,
///   rho/rho0 = 1 - amp * S(z Pb) * cos(k x - w t + z Pt),
/// with S = sin or cos per the phase convention, Pb the beat rate and Pt the
/// carrier rate along the beam.  x in Angstrom, z in cm, t in s.
class PatternEvaluator {
public:
    explicit PatternEvaluator(const PatternParams& params);

    double density_ratio(double x_angstrom, double z_cm, double t_s) const;

    /// amp * |S(z Pb)|: what a time- and x-averaged fringe contrast traces.
    double envelope(double z_cm) const;

    /// Peak modulation depth beta_mod * thickness_factor.
    double amplitude() const { return amp_; }

    /// Beat wavelength 2 pi / Pb implied by the sideband momenta, cm.
    double beat_wavelength() const;

    const PatternParams& params() const { return params_; }

private:
    PatternParams params_;
    double amp_;
    double beat_rate_per_cm_;
    double carrier_rate_per_cm_;
};

/// Positions (cm) of envelope maxima in [0, z_max], left to right.  A peak
/// sitting exactly on z = 0 is kept; one clipped by z_max is dropped.
std::vector<double> envelope_maxima(const PatternEvaluator& evaluator,
                                    double z_max_cm);

} // namespace shbeat
