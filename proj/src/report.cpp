#include "shbeat/report.hpp"

#include <cmath>
#include <limits>

#include "shbeat/errors.hpp"
#include "shbeat/waveguide.hpp"

namespace shbeat {

namespace {

ReportCell make_cell(const ExperimentRecord& experiment, BeatVariant variant,
                     const std::string& material,
                     std::optional<double> refractive_index) {
    ReportCell cell;
    cell.source = experiment.source;
    cell.experiment = experiment.lambda_b;
    cell.uncertainty = experiment.uncertainty;
    cell.material = material;
    cell.refractive_index = refractive_index;
    cell.variant = variant;
    return cell;
}

void finish_cell(ReportCell& cell, double lambda_theory, double flag_threshold) {
    cell.lambda_theory = lambda_theory;
    cell.gap = (cell.experiment - lambda_theory) / lambda_theory;
    cell.flagged = std::abs(*cell.gap) > flag_threshold;
}

} // namespace

DiscrepancyReport build_report(const Config& config) {
    if (config.experiments.empty()) {
        throw DomainError("config lists no experiments to compare against");
    }

    DiscrepancyReport report;
    report.beam = electron_from_kinetic(config.kinetic_energy);
    report.laser = laser_from_wavelength(config.wavelength);
    report.thickness = config.thickness;
    report.lambda_base = beat_base(report.beam, report.laser);

    // Largest configured index reaches the widest radiation-angle range.
    std::string radiation_material;
    double radiation_index = 0.0;
    for (const auto& [material, index] : config.materials) {
        if (index && *index > radiation_index) {
            radiation_material = material;
            radiation_index = *index;
        }
    }

    for (const ExperimentRecord& experiment : config.experiments) {
        ReportCell upper =
            make_cell(experiment, BeatVariant::base, "", std::nullopt);
        finish_cell(upper, report.lambda_base, report.flag_threshold);
        report.cells.push_back(upper);

        for (const auto& [material, index] : config.materials) {
            ReportCell planewave = make_cell(experiment, BeatVariant::plane_wave,
                                             material, index);
            ReportCell tm =
                make_cell(experiment, BeatVariant::tm_mode, material, index);
            if (!index) {
                planewave.note = "refractive index unavailable";
                tm.note = "refractive index unavailable";
            } else {
                finish_cell(planewave,
                            beat_planewave(report.beam, report.laser, *index),
                            report.flag_threshold);
                const ModeSolution mode = solve_tm_mode(
                    Slab{config.thickness, *index, material}, report.laser, 0);
                tm.alpha = mode.alpha;
                finish_cell(tm, beat_tm(report.beam, report.laser, *index,
                                        mode.alpha),
                            report.flag_threshold);
            }
            report.cells.push_back(planewave);
            report.cells.push_back(tm);
        }

        RadiationAngleRow angle;
        angle.source = experiment.source;
        angle.experiment = experiment.lambda_b;
        if (radiation_material.empty()) {
            angle.note = "no material has a usable refractive index";
        } else {
            angle.material = radiation_material;
            angle.refractive_index = radiation_index;
            try {
                const RadiationInversion inversion = invert_radiation_angle(
                    report.beam, report.laser, radiation_index,
                    experiment.lambda_b);
                angle.alpha = inversion.alpha;
                angle.theta = inversion.theta;
                angle.note = "radiation mode through " + radiation_material;
            } catch (const DomainError& error) {
                angle.note = error.what();
            }
        }
        report.radiation.push_back(angle);
    }

    report.min_abs_gap = std::numeric_limits<double>::infinity();
    for (const ReportCell& cell : report.cells) {
        if (cell.gap && std::abs(*cell.gap) < report.min_abs_gap) {
            report.min_abs_gap = std::abs(*cell.gap);
        }
    }
    report.min_gap_flagged = report.min_abs_gap > report.flag_threshold;
    return report;
}

} // namespace shbeat
