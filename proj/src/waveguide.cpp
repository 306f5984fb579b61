#include "shbeat/waveguide.hpp"

#include <cmath>

#include "shbeat/constants.hpp"
#include "shbeat/errors.hpp"

namespace shbeat {

namespace {

constexpr double k_bracket_margin = 1e-9;  // rad, keeps gamma and kappa > 0
constexpr int k_max_bisections = 200;

void require_valid_slab(const Slab& slab) {
    if (!(slab.thickness > 0.0)) {
        throw DomainError("slab thickness must be positive");
    }
    if (!(slab.refractive_index > 1.0)) {
        throw DomainError("slab refractive index must exceed 1");
    }
}

double phase_mismatch(double alpha, double n, double k0, double d, int m) {
    const double kappa = n * k0 * std::sin(alpha);
    const double n_cos = n * std::cos(alpha);
    const double gamma = k0 * std::sqrt(n_cos * n_cos - 1.0);
    // atan2 handles the kappa -> 0 end of the bracket (phase -> pi/2).
    return 0.5 * kappa * d - 0.5 * m * constants::pi -
           std::atan2(n * n * gamma, kappa);
}

} // namespace

double tm_cutoff_thickness(const LaserField& laser, double refractive_index,
                           int mode_index) {
    if (!(refractive_index > 1.0)) {
        throw DomainError("no guided modes for refractive index <= 1");
    }
    if (mode_index < 0) {
        throw DomainError("mode index must be non-negative");
    }
    if (mode_index == 0) {
        return 0.0;  // fundamental mode has no cutoff
    }
    const double n = refractive_index;
    return mode_index * laser.vacuum_wavelength /
           (2.0 * std::sqrt(n * n - 1.0));
}

int tm_mode_count(const Slab& slab, const LaserField& laser) {
    require_valid_slab(slab);
    const double n = slab.refractive_index;
    const double unit = laser.vacuum_wavelength / (2.0 * std::sqrt(n * n - 1.0));
    // Largest m with m*unit < d, strict: exactly at a cutoff the new mode
    // is not yet guided.
    const int m_max = static_cast<int>(std::ceil(slab.thickness / unit)) - 1;
    return m_max + 1;
}

double dispersion_residual(double candidate_alpha, const Slab& slab,
                           const LaserField& laser, int mode_index) {
    require_valid_slab(slab);
    if (mode_index < 0) {
        throw DomainError("mode index must be non-negative");
    }
    const double n = slab.refractive_index;
    const double alpha_max = std::acos(1.0 / n);
    if (!(candidate_alpha > 0.0) || !(candidate_alpha < alpha_max)) {
        throw DomainError("candidate angle outside the guided bracket");
    }
    return phase_mismatch(candidate_alpha, n, laser.vacuum_wavenumber,
                          slab.thickness, mode_index);
}

ModeSolution solve_tm_mode(const Slab& slab, const LaserField& laser,
                           int mode_index) {
    require_valid_slab(slab);
    if (mode_index < 0) {
        throw DomainError("mode index must be non-negative");
    }
    if (mode_index >= tm_mode_count(slab, laser)) {
        throw NoSuchModeError("TM" + std::to_string(mode_index) +
                              " is not guided at thickness " +
                              std::to_string(slab.thickness) + " Angstrom");
    }

    const double n = slab.refractive_index;
    const double k0 = laser.vacuum_wavenumber;
    const double d = slab.thickness;
    const double alpha_max = std::acos(1.0 / n);

    double lo = k_bracket_margin;
    double hi = alpha_max - k_bracket_margin;
    double f_lo = phase_mismatch(lo, n, k0, d, mode_index);
    double f_hi = phase_mismatch(hi, n, k0, d, mode_index);
    if (!(f_lo < 0.0) || !(f_hi > 0.0)) {
        throw NumericalFailure("TM dispersion root not bracketed");
    }

    for (int i = 0; i < k_max_bisections; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= 1e-12 * mid) {
            break;
        }
        const double f_mid = phase_mismatch(mid, n, k0, d, mode_index);
        if (f_mid == 0.0) {
            lo = hi = mid;
            break;
        }
        if (f_mid < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    const double alpha = 0.5 * (lo + hi);
    const double n_cos = n * std::cos(alpha);
    return ModeSolution{mode_index, alpha, n * k0 * std::sin(alpha),
                        k0 * std::sqrt(n_cos * n_cos - 1.0),
                        phase_mismatch(alpha, n, k0, d, mode_index)};
}

} // namespace shbeat
