#include "shbeat/kernels.hpp"

#include <cstddef>
#include <exception>
#include <string>

#include "shbeat/errors.hpp"
#include "shbeat/waveguide.hpp"

namespace shbeat::kernels {

namespace {

constexpr std::size_t k_max_grid_points = std::size_t{1} << 27;

void require_axis(const Axis& axis, const char* name) {
    if (axis.count == 0) {
        throw DomainError(std::string(name) + " axis needs at least one point");
    }
}

} // namespace

std::vector<double> density_grid(const PatternEvaluator& evaluator,
                                 const Axis& x, const Axis& z, const Axis& t,
                                 Exec exec) {
    require_axis(x, "x");
    require_axis(z, "z");
    require_axis(t, "t");
    const std::size_t total = x.count * z.count * t.count;
    if (total > k_max_grid_points ||
        total / t.count / z.count != x.count) {
        throw DomainError("density grid is too large");
    }

    std::vector<double> out(total);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(total);
    const std::size_t zt = z.count * t.count;
    [[maybe_unused]] const bool use_parallel = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (use_parallel)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const std::size_t u = static_cast<std::size_t>(i);
        const std::size_t ix = u / zt;
        const std::size_t iz = (u % zt) / t.count;
        const std::size_t it = u % t.count;
        out[u] = evaluator.density_ratio(x.value(ix), z.value(iz), t.value(it));
    }
    return out;
}

std::vector<double> envelope_grid(const PatternEvaluator& evaluator,
                                  const Axis& z, Exec exec) {
    require_axis(z, "z");
    if (z.count > k_max_grid_points) {
        throw DomainError("envelope grid is too large");
    }
    std::vector<double> out(z.count);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(z.count);
    [[maybe_unused]] const bool use_parallel = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (use_parallel)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const std::size_t u = static_cast<std::size_t>(i);
        out[u] = evaluator.envelope(z.value(u));
    }
    return out;
}

namespace {

bool axis_allowed(ScanAxis axis, BeatVariant variant) {
    switch (variant) {
        case BeatVariant::base:
            return axis == ScanAxis::kinetic_energy;
        case BeatVariant::plane_wave:
        case BeatVariant::exact_sideband:
            return axis == ScanAxis::kinetic_energy ||
                   axis == ScanAxis::refractive_index;
        case BeatVariant::tm_mode:
            return true;
        case BeatVariant::radiation_mode:
            return false;
    }
    return false;
}

ScanPoint scan_point(const ScanSpec& spec, double axis_value) {
    double kinetic = spec.kinetic_energy;
    double index = spec.refractive_index;
    double thickness = spec.thickness;
    switch (spec.axis) {
        case ScanAxis::kinetic_energy: kinetic = axis_value; break;
        case ScanAxis::refractive_index: index = axis_value; break;
        case ScanAxis::thickness: thickness = axis_value; break;
    }

    const ElectronBeam beam = electron_from_kinetic(kinetic);
    const LaserField laser = laser_from_wavelength(spec.wavelength);

    ScanPoint point;
    point.axis_value = axis_value;
    switch (spec.variant) {
        case BeatVariant::base:
            point.lambda_b = beat_base(beam, laser);
            break;
        case BeatVariant::plane_wave:
            point.lambda_b = beat_planewave(beam, laser, index);
            break;
        case BeatVariant::exact_sideband:
            point.lambda_b =
                beat_exact(beam, laser, index * laser.vacuum_wavenumber);
            break;
        case BeatVariant::tm_mode: {
            const ModeSolution mode = solve_tm_mode(
                Slab{thickness, index, ""}, laser, spec.mode_index);
            point.lambda_b = beat_tm(beam, laser, index, mode.alpha);
            point.alpha = mode.alpha;
            break;
        }
        case BeatVariant::radiation_mode:
            throw UsageError("radiation variant cannot be scanned");
    }
    return point;
}

} // namespace

std::vector<ScanPoint> beat_scan(const ScanSpec& spec, Exec exec) {
    require_axis(spec.grid, "scan");
    if (!axis_allowed(spec.axis, spec.variant)) {
        throw UsageError("variant '" + to_string(spec.variant) +
                         "' does not support the requested scan axis");
    }

    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(spec.grid.count);
    std::vector<ScanPoint> points(spec.grid.count);
    std::vector<std::exception_ptr> errors(spec.grid.count);
    [[maybe_unused]] const bool use_parallel = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (use_parallel)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const std::size_t u = static_cast<std::size_t>(i);
        try {
            points[u] = scan_point(spec, spec.grid.value(u));
        } catch (...) {
            errors[u] = std::current_exception();
        }
    }
    for (const std::exception_ptr& error : errors) {
        if (error) {
            std::rethrow_exception(error);
        }
    }
    return points;
}

} // namespace shbeat::kernels
