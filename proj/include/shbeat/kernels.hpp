#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "shbeat/beating.hpp"
#include "shbeat/pattern.hpp"

namespace shbeat::kernels {

/// Grid evaluation strategy.  parallel uses OpenMP when compiled in and
/// silently degrades to the serial loop otherwise; results are identical.
enum class Exec { serial, parallel };

/// Inclusive uniform grid: count == 1 pins the axis at lo.
struct Axis {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t count = 1;

    double value(std::size_t i) const {
        if (count <= 1) return lo;
        return lo + (hi - lo) * static_cast<double>(i) /
                        static_cast<double>(count - 1);
    }
};

/// rho/rho0 on the x*z*t product grid, row-major with t fastest:
/// out[(ix * z.count + iz) * t.count + it].
std::vector<double> density_grid(const PatternEvaluator& evaluator,
                                 const Axis& x, const Axis& z, const Axis& t,
                                 Exec exec);

/// Fringe envelope along z.
std::vector<double> envelope_grid(const PatternEvaluator& evaluator,
                                  const Axis& z, Exec exec);

/// Which physical parameter a scan sweeps.
enum class ScanAxis { kinetic_energy, refractive_index, thickness };

/// One-parameter sweep of a beat-wavelength variant.  Fixed fields supply
/// whatever the swept axis does not; all in library units (eV, Angstrom).
struct ScanSpec {
    ScanAxis axis = ScanAxis::kinetic_energy;
    Axis grid;
    BeatVariant variant = BeatVariant::base;
    double kinetic_energy = 50e3;  ///< eV
    double wavelength = 4880.0;    ///< Angstrom
    double refractive_index = 1.559;
    double thickness = 1000.0;     ///< Angstrom
    int mode_index = 0;            ///< tm variant only
};

struct ScanPoint {
    double axis_value = 0.0;
    double lambda_b = 0.0;             ///< cm
    std::optional<double> alpha;       ///< rad, tm variant only
};

/// Evaluate the sweep.  Allowed axis/variant pairs: base sweeps kinetic
/// energy only; planewave and exact add refractive index; tm adds thickness.
/// Anything else throws UsageError.  A throwing grid point (e.g. an
/// evanescent sideband) is reported for the lowest offending index.
std::vector<ScanPoint> beat_scan(const ScanSpec& spec, Exec exec);

} // namespace shbeat::kernels
