#include "shbeat/pattern.hpp"

#include <cmath>

#include "shbeat/constants.hpp"
#include "shbeat/errors.hpp"

namespace shbeat {

std::string to_string(PhaseConvention convention) {
    return convention == PhaseConvention::sine ? "sine" : "cosine";
}

PhaseConvention parse_phase_convention(const std::string& name) {
    if (name == "sine" || name == "sine_theory") return PhaseConvention::sine;
    if (name == "cosine" || name == "cosine_experiment") {
        return PhaseConvention::cosine;
    }
    throw UsageError("unknown phase convention '" + name +
                     "' (expected sine or cosine)");
}

double thickness_factor(double thickness, double optimum_thickness) {
    if (!(optimum_thickness > 0.0)) {
        throw DomainError("optimum thickness must be positive");
    }
    if (!(thickness >= 0.0)) {
        throw DomainError("thickness must be non-negative");
    }
    return std::sin(0.5 * constants::pi * thickness / optimum_thickness);
}

PatternEvaluator::PatternEvaluator(const PatternParams& params)
    : params_(params) {
    if (!(params.beta_mod >= 0.0) || !(params.beta_mod <= 1.0)) {
        throw DomainError("modulation depth must lie in [0, 1]");
    }
    amp_ = params.beta_mod *
           thickness_factor(params.thickness, params.optimum_thickness);
    const SidebandPhaseRates rates =
        sideband_phase_rates(params.beam, params.laser, params.x_wavenumber);
    if (!(rates.stationary > 0.0)) {
        throw DomainError(
            "pattern needs a finite beat length: photon energy must be > 0");
    }
    beat_rate_per_cm_ = rates.stationary * constants::angstrom_per_cm;
    carrier_rate_per_cm_ = rates.traveling * constants::angstrom_per_cm;
}

double PatternEvaluator::density_ratio(double x_angstrom, double z_cm,
                                       double t_s) const {
    const double beat_phase = z_cm * beat_rate_per_cm_;
    const double envelope_term = params_.convention == PhaseConvention::sine
                                     ? std::sin(beat_phase)
                                     : std::cos(beat_phase);
    const double carrier_phase = params_.x_wavenumber * x_angstrom -
                                 params_.laser.angular_frequency * t_s +
                                 z_cm * carrier_rate_per_cm_;
    return 1.0 - amp_ * envelope_term * std::cos(carrier_phase);
}

double PatternEvaluator::envelope(double z_cm) const {
    const double beat_phase = z_cm * beat_rate_per_cm_;
    const double envelope_term = params_.convention == PhaseConvention::sine
                                     ? std::sin(beat_phase)
                                     : std::cos(beat_phase);
    return amp_ * std::abs(envelope_term);
}

double PatternEvaluator::beat_wavelength() const {
    return 2.0 * constants::pi / beat_rate_per_cm_;
}

namespace {

// Golden-section maximization of evaluator.envelope on [lo, hi].
double refine_maximum(const PatternEvaluator& evaluator, double lo, double hi,
                      double tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = evaluator.envelope(c);
    double fd = evaluator.envelope(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = evaluator.envelope(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = evaluator.envelope(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

std::vector<double> envelope_maxima(const PatternEvaluator& evaluator,
                                    double z_max_cm) {
    if (!(z_max_cm > 0.0)) {
        throw DomainError("scan length must be positive");
    }
    const double lambda_b = evaluator.beat_wavelength();
    const double step = lambda_b / 1000.0;
    const std::size_t count =
        static_cast<std::size_t>(std::ceil(z_max_cm / step)) + 1;

    std::vector<double> z(count);
    std::vector<double> f(count);
    for (std::size_t i = 0; i < count; ++i) {
        z[i] = std::min(static_cast<double>(i) * step, z_max_cm);
        f[i] = evaluator.envelope(z[i]);
    }

    std::vector<double> maxima;
    if (count >= 2 && f[0] > f[1]) {
        maxima.push_back(0.0);  // peak exactly on the plate
    }
    const double tol = 1e-9 * lambda_b;
    for (std::size_t i = 1; i + 1 < count; ++i) {
        if (f[i] >= f[i - 1] && f[i] >= f[i + 1] &&
            (f[i] > f[i - 1] || f[i] > f[i + 1])) {
            const double peak = refine_maximum(evaluator, z[i - 1], z[i + 1], tol);
            if (!maxima.empty() && peak - maxima.back() < lambda_b / 8.0) {
                continue;  // same peak straddled by two grid points
            }
            maxima.push_back(peak);
        }
    }
    return maxima;
}

} // namespace shbeat
