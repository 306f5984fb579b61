// Timing harness for the grid kernels: serial reference loop vs the
// OpenMP-parallel path.  Also asserts that both produce identical bytes,
// which is the property the test suite relies on.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <vector>

#include "shbeat/kernels.hpp"
#include "shbeat/pattern.hpp"
#include "shbeat/waveguide.hpp"

using namespace shbeat;
using namespace shbeat::kernels;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

PatternEvaluator quartz_pattern() {
    const LaserField laser = laser_from_wavelength(4880.0);
    const Slab slab{1000.0, 1.559, "SiO2"};
    const ModeSolution mode = solve_tm_mode(slab, laser, 0);
    PatternParams params;
    params.beam = electron_from_kinetic(50e3);
    params.laser = laser;
    params.x_wavenumber = slab.refractive_index * laser.vacuum_wavenumber *
                          std::cos(mode.alpha);
    return PatternEvaluator{params};
}

void report(const char* name, std::size_t points, double serial_s,
            double parallel_s, bool identical) {
    std::cout << std::left << std::setw(14) << name << std::right
              << std::setw(10) << points << " points   serial "
              << std::fixed << std::setprecision(3) << serial_s
              << " s   parallel " << parallel_s << " s   speedup "
              << std::setprecision(2) << serial_s / parallel_s
              << "x   identical: " << (identical ? "yes" : "NO") << '\n';
    if (!identical) {
        std::exit(1);
    }
}

} // namespace

int main() {
    const PatternEvaluator pattern = quartz_pattern();

    {
        const Axis x{0.0, 5000.0, 100};
        const Axis z{0.0, 3.0, 200};
        const Axis t{0.0, 1.6e-15, 100};

        auto start = clock_type::now();
        const std::vector<double> serial =
            density_grid(pattern, x, z, t, Exec::serial);
        const double serial_s = seconds_since(start);

        start = clock_type::now();
        const std::vector<double> parallel =
            density_grid(pattern, x, z, t, Exec::parallel);
        const double parallel_s = seconds_since(start);

        report("density_grid", serial.size(), serial_s, parallel_s,
               serial == parallel);
    }

    {
        const Axis z{0.0, 5.0, 2'000'000};

        auto start = clock_type::now();
        const std::vector<double> serial =
            envelope_grid(pattern, z, Exec::serial);
        const double serial_s = seconds_since(start);

        start = clock_type::now();
        const std::vector<double> parallel =
            envelope_grid(pattern, z, Exec::parallel);
        const double parallel_s = seconds_since(start);

        report("envelope_grid", serial.size(), serial_s, parallel_s,
               serial == parallel);
    }

    {
        ScanSpec spec;
        spec.axis = ScanAxis::thickness;
        spec.grid = Axis{300.0, 3000.0, 2000};
        spec.variant = BeatVariant::tm_mode;

        auto start = clock_type::now();
        const std::vector<ScanPoint> serial = beat_scan(spec, Exec::serial);
        const double serial_s = seconds_since(start);

        start = clock_type::now();
        const std::vector<ScanPoint> parallel =
            beat_scan(spec, Exec::parallel);
        const double parallel_s = seconds_since(start);

        bool identical = serial.size() == parallel.size();
        for (std::size_t i = 0; identical && i < serial.size(); ++i) {
            identical = serial[i].axis_value == parallel[i].axis_value &&
                        serial[i].lambda_b == parallel[i].lambda_b &&
                        serial[i].alpha == parallel[i].alpha;
        }
        report("beat_scan tm", serial.size(), serial_s, parallel_s, identical);
    }

    return 0;
}
