#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shbeat/beating.hpp"
#include "shbeat/config.hpp"

namespace shbeat {

/// One theory prediction lined up against one measured beat wavelength.
struct ReportCell {
    std::string source;                   ///< experiment tag
    double experiment = 0.0;              ///< cm
    std::optional<double> uncertainty;    ///< cm
    std::string material;                 ///< empty for the vacuum estimate
    std::optional<double> refractive_index;
    BeatVariant variant = BeatVariant::base;
    std::optional<double> lambda_theory;  ///< cm; empty when n is unknown
    std::optional<double> alpha;          ///< rad, tm rows only
    std::optional<double> gap;            ///< (experiment - theory) / theory
    bool flagged = false;                 ///< |gap| > flag_threshold
    std::string note;
};

/// Radiation-mode angle that would reproduce one measurement, if any.
struct RadiationAngleRow {
    std::string source;
    double experiment = 0.0;       ///< cm
    std::string material;          ///< whose index was used
    double refractive_index = 0.0;
    std::optional<double> alpha;   ///< internal, rad
    std::optional<double> theta;   ///< external, rad
    std::string note;
};

struct DiscrepancyReport {
    ElectronBeam beam;
    LaserField laser;
    double thickness = 0.0;      ///< Angstrom
    double lambda_base = 0.0;    ///< cm, vacuum estimate
    double flag_threshold = 0.10;
    std::vector<ReportCell> cells;
    std::vector<RadiationAngleRow> radiation;
    /// Smallest |gap| over all cells that have a theory value.
    double min_abs_gap = 0.0;
    bool min_gap_flagged = false;
};

/// Cross every configured experiment with the vacuum estimate and, per
/// material, the plane-wave and TM0 predictions at the configured thickness.
/// Radiation angles use the largest configured material index; the rows say
/// which.  Throws DomainError when the config lists no experiments.
DiscrepancyReport build_report(const Config& config);

} // namespace shbeat
