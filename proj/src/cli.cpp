#include "shbeat/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "shbeat/beating.hpp"
#include "shbeat/config.hpp"
#include "shbeat/constants.hpp"
#include "shbeat/csv.hpp"
#include "shbeat/errors.hpp"
#include "shbeat/kernels.hpp"
#include "shbeat/pattern.hpp"
#include "shbeat/report.hpp"
#include "shbeat/version.hpp"
#include "shbeat/waveguide.hpp"

namespace shbeat {
namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// formatting

// Beat wavelengths print short (4 digits) by default, everything else at 6;
// --precision N widens both, --precision full switches to round-trip output.
struct Formatter {
    bool full = false;
    int lambda_digits = 4;
    int other_digits = 6;

    std::string lambda(double v) const {
        return full ? format_double_full(v) : format_double(v, lambda_digits);
    }
    std::string value(double v) const {
        return full ? format_double_full(v) : format_double(v, other_digits);
    }
};

Formatter make_formatter(const std::string& spec) {
    Formatter formatter;
    if (spec.empty()) {
        return formatter;
    }
    if (spec == "full") {
        formatter.full = true;
        return formatter;
    }
    std::size_t pos = 0;
    int digits = 0;
    try {
        digits = std::stoi(spec, &pos);
    } catch (const std::logic_error&) {
        pos = 0;
    }
    if (pos != spec.size() || digits < 1 || digits > 17) {
        throw UsageError("--precision expects an integer in [1, 17] or 'full'");
    }
    formatter.lambda_digits = digits;
    formatter.other_digits = digits;
    return formatter;
}

std::string cell(const std::optional<double>& value,
                 const std::function<std::string(double)>& fmt) {
    return value ? fmt(*value) : std::string();
}

json json_or_null(const std::optional<double>& value) {
    return value ? json(*value) : json(nullptr);
}

std::string sanitize_note(std::string note) {
    for (char& c : note) {
        if (c == ',' || c == '\n') c = ';';
    }
    return note;
}

// ---------------------------------------------------------------------------
// shared options

struct OptValue {
    double value = 0.0;
    CLI::Option* opt = nullptr;

    bool given() const { return opt != nullptr && opt->count() > 0; }
    double or_else(double fallback) const { return given() ? value : fallback; }
};

struct CommonOpts {
    std::string config_path;
    std::string output_path;
    std::string format;
    std::string precision;
};

void add_common_options(CLI::App* cmd, CommonOpts& opts,
                        const std::string& default_format) {
    opts.format = default_format;
    cmd->add_option("--config", opts.config_path,
                    "JSON config file (default: $SHBEAT_CONFIG, then built-ins)");
    cmd->add_option("--output", opts.output_path,
                    "write to this file instead of stdout");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--precision", opts.precision,
                    "significant digits (1-17) or 'full' for round-trip output");
}

struct BeamOpts {
    OptValue kinetic;     // keV at the CLI
    OptValue wavelength;  // Angstrom
    OptValue thickness;   // Angstrom
};

void add_film_options(CLI::App* cmd, BeamOpts& opts) {
    opts.wavelength.opt = cmd->add_option("--wavelength-angstrom",
                                          opts.wavelength.value,
                                          "laser vacuum wavelength (Angstrom)");
    opts.thickness.opt = cmd->add_option("--thickness-angstrom",
                                         opts.thickness.value,
                                         "film thickness (Angstrom)");
}

void add_beam_options(CLI::App* cmd, BeamOpts& opts) {
    opts.kinetic.opt = cmd->add_option("--kinetic-energy-kev",
                                       opts.kinetic.value,
                                       "electron kinetic energy (keV)");
    add_film_options(cmd, opts);
}

Config resolve_config(const CommonOpts& opts) {
    if (!opts.config_path.empty()) {
        return load_config(opts.config_path);
    }
    if (const char* env = std::getenv("SHBEAT_CONFIG"); env != nullptr && *env) {
        return load_config(env);
    }
    return builtin_config();
}

double kinetic_ev(const BeamOpts& opts, const Config& config) {
    return opts.kinetic.given() ? opts.kinetic.value * constants::ev_per_kev
                                : config.kinetic_energy;
}

/// Turn --n / --material / config into a refractive index.  All failure
/// modes are command-line problems, so they surface as UsageError.
std::optional<double> resolve_index(const Config& config,
                                    const std::string& material,
                                    const OptValue& n_flag, bool required) {
    if (n_flag.given()) {
        return n_flag.value;
    }
    if (!material.empty()) {
        std::optional<double> index;
        try {
            index = material_index(config, material);
        } catch (const ConfigError& error) {
            throw UsageError(error.what());
        }
        if (!index) {
            throw UsageError("material '" + material +
                             "' has no refractive index on file; pass --n");
        }
        return index;
    }
    if (required) {
        throw UsageError("this variant needs --material or --n");
    }
    return std::nullopt;
}

void emit(const CommonOpts& opts, std::ostream& fallback,
          const std::function<void(std::ostream&)>& write) {
    if (opts.output_path.empty()) {
        write(fallback);
        return;
    }
    std::ofstream file(opts.output_path);
    if (!file) {
        throw DomainError("cannot open output file '" + opts.output_path + "'");
    }
    write(file);
}

void write_provenance(std::ostream& out) {
    out << "# " << version_banner << '\n';
}

json json_root(const char* command) {
    json root;
    root["generator"] = std::string(version_banner);
    root["command"] = command;
    return root;
}

void dump_json(std::ostream& out, const json& root) {
    out << root.dump(2) << '\n';
}

kernels::Axis parse_axis_triplet(const std::string& text, const char* flag) {
    const auto fail = [&]() {
        return UsageError(std::string(flag) + " expects lo:hi:count, got '" +
                          text + "'");
    };
    const std::size_t first = text.find(':');
    const std::size_t second =
        first == std::string::npos ? std::string::npos : text.find(':', first + 1);
    if (second == std::string::npos ||
        text.find(':', second + 1) != std::string::npos) {
        throw fail();
    }
    kernels::Axis axis;
    try {
        std::size_t pos = 0;
        const std::string lo = text.substr(0, first);
        const std::string hi = text.substr(first + 1, second - first - 1);
        const std::string count = text.substr(second + 1);
        axis.lo = std::stod(lo, &pos);
        if (pos != lo.size()) throw fail();
        axis.hi = std::stod(hi, &pos);
        if (pos != hi.size()) throw fail();
        const long long n = std::stoll(count, &pos);
        if (pos != count.size() || n < 1) throw fail();
        axis.count = static_cast<std::size_t>(n);
    } catch (const std::logic_error&) {
        throw fail();
    }
    return axis;
}

// ---------------------------------------------------------------------------
// predict

struct PredictOpts {
    std::vector<std::string> tokens;
    std::string variant_name;
    CLI::Option* variant_opt = nullptr;
    std::string material_flag;
    CLI::Option* material_opt = nullptr;
    OptValue n;
    BeamOpts beam;
    int mode = 0;
    OptValue target;
    CommonOpts common;
};

int do_predict(const PredictOpts& o, std::ostream& out) {
    const Config config = resolve_config(o.common);
    const Formatter fmt = make_formatter(o.common.precision);

    // Free positionals: a token naming a variant selects it, anything else
    // is taken as a material label.  Explicit flags win.
    std::optional<BeatVariant> variant;
    std::string material;
    for (const std::string& token : o.tokens) {
        std::optional<BeatVariant> as_variant;
        try {
            as_variant = parse_variant(token);
        } catch (const UsageError&) {
        }
        if (as_variant) {
            if (variant) {
                throw UsageError("got two variant tokens: '" +
                                 to_string(*variant) + "' and '" + token + "'");
            }
            variant = as_variant;
        } else {
            if (!material.empty()) {
                throw UsageError("got two material tokens: '" + material +
                                 "' and '" + token + "'");
            }
            material = token;
        }
    }
    if (o.variant_opt->count() > 0) {
        variant = parse_variant(o.variant_name);
    }
    if (o.material_opt->count() > 0) {
        material = o.material_flag;
    }
    if (!variant) {
        throw UsageError(
            "specify a variant: base, planewave, tm, exact or radiation");
    }

    const ElectronBeam beam = electron_from_kinetic(kinetic_ev(o.beam, config));
    const LaserField laser =
        laser_from_wavelength(o.beam.wavelength.or_else(config.wavelength));
    const double thickness = o.beam.thickness.or_else(config.thickness);
    const std::optional<double> index = resolve_index(
        config, material, o.n, /*required=*/*variant != BeatVariant::base);

    std::optional<double> alpha;
    std::optional<double> theta;
    double lambda_b = 0.0;
    switch (*variant) {
        case BeatVariant::base:
            lambda_b = beat_base(beam, laser);
            break;
        case BeatVariant::plane_wave:
            lambda_b = beat_planewave(beam, laser, *index);
            break;
        case BeatVariant::tm_mode: {
            const ModeSolution mode =
                solve_tm_mode(Slab{thickness, *index, material}, laser, o.mode);
            alpha = mode.alpha;
            lambda_b = beat_tm(beam, laser, *index, mode.alpha);
            break;
        }
        case BeatVariant::exact_sideband:
            lambda_b = beat_exact(beam, laser, *index * laser.vacuum_wavenumber);
            break;
        case BeatVariant::radiation_mode: {
            if (!o.target.given()) {
                throw UsageError(
                    "the radiation variant inverts a target: pass --target-cm");
            }
            const RadiationInversion inversion =
                invert_radiation_angle(beam, laser, *index, o.target.value);
            alpha = inversion.alpha;
            theta = inversion.theta;
            lambda_b = inversion.lambda_target;
            break;
        }
    }

    const double kev = beam.kinetic_energy / constants::ev_per_kev;
    if (o.common.format == "json") {
        json root = json_root("predict");
        root["variant"] = to_string(*variant);
        json inputs;
        inputs["material"] = material.empty() ? json(nullptr) : json(material);
        inputs["refractive_index"] = json_or_null(index);
        inputs["kinetic_energy_kev"] = kev;
        inputs["wavelength_angstrom"] = laser.vacuum_wavelength;
        inputs["thickness_angstrom"] = thickness;
        inputs["mode"] =
            *variant == BeatVariant::tm_mode ? json(o.mode) : json(nullptr);
        inputs["target_cm"] =
            o.target.given() ? json(o.target.value) : json(nullptr);
        root["inputs"] = inputs;
        root["alpha_deg"] =
            alpha ? json(constants::rad_to_deg(*alpha)) : json(nullptr);
        root["theta_deg"] =
            theta ? json(constants::rad_to_deg(*theta)) : json(nullptr);
        root["lambda_b_cm"] = lambda_b;
        emit(o.common, out, [&](std::ostream& os) { dump_json(os, root); });
        return exit_ok;
    }

    const auto value = [&](double v) { return fmt.value(v); };
    emit(o.common, out, [&](std::ostream& os) {
        write_provenance(os);
        write_csv_row(os, {"variant", "material", "n", "kinetic_energy_kev",
                           "wavelength_angstrom", "thickness_angstrom", "mode",
                           "alpha_deg", "theta_deg", "lambda_b_cm"});
        write_csv_row(
            os,
            {to_string(*variant), material, cell(index, value),
             fmt.value(kev), fmt.value(laser.vacuum_wavelength),
             fmt.value(thickness),
             *variant == BeatVariant::tm_mode ? std::to_string(o.mode)
                                              : std::string(),
             cell(alpha ? std::optional<double>(constants::rad_to_deg(*alpha))
                        : std::nullopt,
                  value),
             cell(theta ? std::optional<double>(constants::rad_to_deg(*theta))
                        : std::nullopt,
                  value),
             fmt.lambda(lambda_b)});
    });
    return exit_ok;
}

// ---------------------------------------------------------------------------
// scan

struct ScanOpts {
    std::string axis;
    double from = 0.0;
    double to = 0.0;
    long long steps = 0;
    std::string variant;
    std::string material;
    OptValue n;
    BeamOpts beam;
    int mode = 0;
    bool serial = false;
    CommonOpts common;
};

int do_scan(const ScanOpts& o, std::ostream& out) {
    const Config config = resolve_config(o.common);
    const Formatter fmt = make_formatter(o.common.precision);

    if (o.steps < 2) {
        throw UsageError("--steps must be at least 2");
    }
    if (!(o.from < o.to)) {
        throw UsageError("--from must be less than --to");
    }
    const BeatVariant variant = parse_variant(o.variant);

    kernels::ScanSpec spec;
    spec.variant = variant;
    spec.kinetic_energy = kinetic_ev(o.beam, config);
    spec.wavelength = o.beam.wavelength.or_else(config.wavelength);
    spec.thickness = o.beam.thickness.or_else(config.thickness);
    spec.mode_index = o.mode;

    std::string axis_column;
    if (o.axis == "kinetic_energy") {
        spec.axis = kernels::ScanAxis::kinetic_energy;
        axis_column = "kinetic_energy_kev";
        if (!(o.from > 0.0)) {
            throw UsageError("kinetic energies must be positive");
        }
        spec.grid = {o.from * constants::ev_per_kev,
                     o.to * constants::ev_per_kev,
                     static_cast<std::size_t>(o.steps)};
    } else if (o.axis == "refractive_index") {
        spec.axis = kernels::ScanAxis::refractive_index;
        axis_column = "refractive_index";
        if (!(o.from >= 1.0)) {
            throw UsageError("refractive indices below 1 are not scannable");
        }
        spec.grid = {o.from, o.to, static_cast<std::size_t>(o.steps)};
    } else {
        spec.axis = kernels::ScanAxis::thickness;
        axis_column = "thickness_angstrom";
        if (!(o.from > 0.0)) {
            throw UsageError("thicknesses must be positive");
        }
        spec.grid = {o.from, o.to, static_cast<std::size_t>(o.steps)};
    }

    const bool needs_index = variant != BeatVariant::base &&
                             spec.axis != kernels::ScanAxis::refractive_index;
    if (needs_index) {
        spec.refractive_index =
            *resolve_index(config, o.material, o.n, /*required=*/true);
    }

    const std::vector<kernels::ScanPoint> points = kernels::beat_scan(
        spec, o.serial ? kernels::Exec::serial : kernels::Exec::parallel);

    const bool kev_axis = spec.axis == kernels::ScanAxis::kinetic_energy;
    const auto axis_out = [&](double v) {
        return kev_axis ? v / constants::ev_per_kev : v;
    };
    const bool has_alpha = variant == BeatVariant::tm_mode;

    if (o.common.format == "json") {
        json root = json_root("scan");
        root["axis"] = axis_column;
        root["variant"] = to_string(variant);
        json fixed;
        fixed["wavelength_angstrom"] = spec.wavelength;
        if (spec.axis != kernels::ScanAxis::kinetic_energy) {
            fixed["kinetic_energy_kev"] =
                spec.kinetic_energy / constants::ev_per_kev;
        }
        if (needs_index) {
            fixed["refractive_index"] = spec.refractive_index;
        }
        if (variant == BeatVariant::tm_mode) {
            if (spec.axis != kernels::ScanAxis::thickness) {
                fixed["thickness_angstrom"] = spec.thickness;
            }
            fixed["mode"] = spec.mode_index;
        }
        root["fixed"] = fixed;
        json rows = json::array();
        for (const kernels::ScanPoint& point : points) {
            json row;
            row[axis_column] = axis_out(point.axis_value);
            row["lambda_b_cm"] = point.lambda_b;
            if (has_alpha) {
                row["alpha_deg"] = point.alpha
                                       ? json(constants::rad_to_deg(*point.alpha))
                                       : json(nullptr);
            }
            rows.push_back(row);
        }
        root["points"] = rows;
        emit(o.common, out, [&](std::ostream& os) { dump_json(os, root); });
        return exit_ok;
    }

    emit(o.common, out, [&](std::ostream& os) {
        write_provenance(os);
        std::vector<std::string> header = {axis_column, "lambda_b_cm"};
        if (has_alpha) {
            header.push_back("alpha_deg");
        }
        write_csv_row(os, header);
        for (const kernels::ScanPoint& point : points) {
            std::vector<std::string> row = {fmt.value(axis_out(point.axis_value)),
                                            fmt.lambda(point.lambda_b)};
            if (has_alpha) {
                row.push_back(point.alpha ? fmt.value(constants::rad_to_deg(
                                                *point.alpha))
                                          : std::string());
            }
            write_csv_row(os, row);
        }
    });
    return exit_ok;
}

// ---------------------------------------------------------------------------
// report

struct ReportOpts {
    BeamOpts beam;
    CommonOpts common;
};

int do_report(const ReportOpts& o, std::ostream& out) {
    Config config = resolve_config(o.common);
    const Formatter fmt = make_formatter(o.common.precision);
    config.kinetic_energy = kinetic_ev(o.beam, config);
    config.wavelength = o.beam.wavelength.or_else(config.wavelength);
    config.thickness = o.beam.thickness.or_else(config.thickness);

    const DiscrepancyReport report = build_report(config);

    const auto deg = [](const std::optional<double>& rad) {
        return rad ? std::optional<double>(constants::rad_to_deg(*rad))
                   : std::nullopt;
    };

    if (o.common.format == "json") {
        json root = json_root("report");
        json inputs;
        inputs["kinetic_energy_kev"] =
            config.kinetic_energy / constants::ev_per_kev;
        inputs["wavelength_angstrom"] = config.wavelength;
        inputs["thickness_angstrom"] = config.thickness;
        root["inputs"] = inputs;
        root["lambda_base_cm"] = report.lambda_base;
        root["flag_threshold"] = report.flag_threshold;
        json cells = json::array();
        for (const ReportCell& c : report.cells) {
            json row;
            row["source"] = c.source;
            row["lambda_expt_cm"] = c.experiment;
            row["uncertainty_cm"] = json_or_null(c.uncertainty);
            row["material"] =
                c.material.empty() ? json(nullptr) : json(c.material);
            row["variant"] = to_string(c.variant);
            row["refractive_index"] = json_or_null(c.refractive_index);
            row["alpha_deg"] = json_or_null(deg(c.alpha));
            row["lambda_theory_cm"] = json_or_null(c.lambda_theory);
            row["gap"] = json_or_null(c.gap);
            row["flagged"] = c.flagged;
            row["note"] = c.note;
            cells.push_back(row);
        }
        root["cells"] = cells;
        json radiation = json::array();
        for (const RadiationAngleRow& r : report.radiation) {
            json row;
            row["source"] = r.source;
            row["lambda_expt_cm"] = r.experiment;
            row["material"] =
                r.material.empty() ? json(nullptr) : json(r.material);
            row["refractive_index"] =
                r.material.empty() ? json(nullptr) : json(r.refractive_index);
            row["alpha_deg"] = json_or_null(deg(r.alpha));
            row["theta_deg"] = json_or_null(deg(r.theta));
            row["note"] = r.note;
            radiation.push_back(row);
        }
        root["radiation_angles"] = radiation;
        json summary;
        summary["min_abs_gap"] = report.min_abs_gap;
        summary["min_gap_flagged"] = report.min_gap_flagged;
        root["summary"] = summary;
        emit(o.common, out, [&](std::ostream& os) { dump_json(os, root); });
        return exit_ok;
    }

    const auto value = [&](double v) { return fmt.value(v); };
    const auto lambda = [&](double v) { return fmt.lambda(v); };
    emit(o.common, out, [&](std::ostream& os) {
        write_provenance(os);
        write_csv_row(os, {"source", "lambda_expt_cm", "uncertainty_cm",
                           "material", "variant", "refractive_index",
                           "alpha_deg", "lambda_theory_cm", "gap", "flagged",
                           "note"});
        for (const ReportCell& c : report.cells) {
            write_csv_row(os, {c.source, fmt.lambda(c.experiment),
                               cell(c.uncertainty, value), c.material,
                               to_string(c.variant),
                               cell(c.refractive_index, value),
                               cell(deg(c.alpha), value),
                               cell(c.lambda_theory, lambda),
                               cell(c.gap, value),
                               c.flagged ? "true" : "false",
                               sanitize_note(c.note)});
        }
        os << "# radiation_angles\n";
        write_csv_row(os, {"source", "lambda_expt_cm", "material",
                           "refractive_index", "alpha_deg", "theta_deg",
                           "note"});
        for (const RadiationAngleRow& r : report.radiation) {
            write_csv_row(
                os, {r.source, fmt.lambda(r.experiment), r.material,
                     r.material.empty() ? std::string()
                                        : fmt.value(r.refractive_index),
                     cell(deg(r.alpha), value), cell(deg(r.theta), value),
                     sanitize_note(r.note)});
        }
        os << "# lambda_base_cm," << fmt.lambda(report.lambda_base) << '\n';
        os << "# min_abs_gap," << fmt.value(report.min_abs_gap) << '\n';
        os << "# min_gap_flagged," << (report.min_gap_flagged ? "true" : "false")
           << '\n';
    });
    return exit_ok;
}

// ---------------------------------------------------------------------------
// pattern

struct PatternOpts {
    std::string x = "0:0:1";
    std::string z = "0:3:1001";
    std::string t = "0:0:1";
    std::string variant = "tm";
    std::string material;
    OptValue n;
    BeamOpts beam;
    int mode = 0;
    OptValue beta_mod;
    OptValue optimum;
    std::string convention = "sine";
    bool serial = false;
    CommonOpts common;
};

constexpr std::size_t k_max_pattern_rows = 10'000'000;

int do_pattern(const PatternOpts& o, std::ostream& out) {
    const Config config = resolve_config(o.common);
    const Formatter fmt = make_formatter(o.common.precision);

    const kernels::Axis x = parse_axis_triplet(o.x, "--x");
    const kernels::Axis z = parse_axis_triplet(o.z, "--z");
    const kernels::Axis t = parse_axis_triplet(o.t, "--t");
    const std::size_t rows = x.count * z.count * t.count;
    if (rows > k_max_pattern_rows || rows / x.count / z.count != t.count) {
        throw DomainError("pattern grid has more than " +
                          std::to_string(k_max_pattern_rows) +
                          " rows; shrink the axes");
    }

    const BeatVariant variant = parse_variant(o.variant);
    if (variant != BeatVariant::base && variant != BeatVariant::plane_wave &&
        variant != BeatVariant::tm_mode) {
        throw UsageError("pattern supports the base, planewave or tm variants");
    }

    PatternParams params;
    params.beam = electron_from_kinetic(kinetic_ev(o.beam, config));
    params.laser =
        laser_from_wavelength(o.beam.wavelength.or_else(config.wavelength));
    params.thickness = o.beam.thickness.or_else(config.thickness);
    params.optimum_thickness = o.optimum.or_else(config.optimum_thickness);
    params.beta_mod = o.beta_mod.or_else(config.beta_mod);
    params.convention = parse_phase_convention(o.convention);

    std::optional<double> index;
    std::optional<double> alpha;
    if (variant == BeatVariant::base) {
        params.x_wavenumber = 0.0;
    } else {
        index = resolve_index(config, o.material, o.n, /*required=*/true);
        if (variant == BeatVariant::plane_wave) {
            params.x_wavenumber = *index * params.laser.vacuum_wavenumber;
        } else {
            const ModeSolution mode = solve_tm_mode(
                Slab{params.thickness, *index, o.material}, params.laser,
                o.mode);
            alpha = mode.alpha;
            params.x_wavenumber =
                *index * params.laser.vacuum_wavenumber * std::cos(mode.alpha);
        }
    }

    const PatternEvaluator evaluator(params);
    const std::vector<double> grid = kernels::density_grid(
        evaluator, x, z, t,
        o.serial ? kernels::Exec::serial : kernels::Exec::parallel);

    if (o.common.format == "json") {
        json root = json_root("pattern");
        json inputs;
        inputs["variant"] = to_string(variant);
        inputs["material"] =
            o.material.empty() ? json(nullptr) : json(o.material);
        inputs["refractive_index"] = json_or_null(index);
        inputs["alpha_deg"] = alpha
                                  ? json(constants::rad_to_deg(*alpha))
                                  : json(nullptr);
        inputs["kinetic_energy_kev"] =
            params.beam.kinetic_energy / constants::ev_per_kev;
        inputs["wavelength_angstrom"] = params.laser.vacuum_wavelength;
        inputs["thickness_angstrom"] = params.thickness;
        inputs["optimum_thickness_angstrom"] = params.optimum_thickness;
        inputs["beta_mod"] = params.beta_mod;
        inputs["phase_convention"] = to_string(params.convention);
        inputs["x_wavenumber_per_angstrom"] = params.x_wavenumber;
        root["inputs"] = inputs;
        root["columns"] = json::array({"x", "z", "t", "rho_ratio"});
        json data = json::array();
        for (std::size_t ix = 0; ix < x.count; ++ix) {
            for (std::size_t iz = 0; iz < z.count; ++iz) {
                for (std::size_t it = 0; it < t.count; ++it) {
                    const std::size_t flat =
                        (ix * z.count + iz) * t.count + it;
                    data.push_back(json::array({x.value(ix), z.value(iz),
                                                t.value(it), grid[flat]}));
                }
            }
        }
        root["rows"] = data;
        emit(o.common, out, [&](std::ostream& os) { dump_json(os, root); });
        return exit_ok;
    }

    emit(o.common, out, [&](std::ostream& os) {
        write_provenance(os);
        os << "x,z,t,rho_ratio\n";
        for (std::size_t ix = 0; ix < x.count; ++ix) {
            for (std::size_t iz = 0; iz < z.count; ++iz) {
                for (std::size_t it = 0; it < t.count; ++it) {
                    const std::size_t flat =
                        (ix * z.count + iz) * t.count + it;
                    write_csv_row(os, {fmt.value(x.value(ix)),
                                       fmt.value(z.value(iz)),
                                       fmt.value(t.value(it)),
                                       fmt.value(grid[flat])});
                }
            }
        }
    });
    return exit_ok;
}

// ---------------------------------------------------------------------------
// modes

struct ModesOpts {
    std::string material;
    OptValue n;
    BeamOpts beam;
    CommonOpts common;
};

int do_modes(const ModesOpts& o, std::ostream& out) {
    const Config config = resolve_config(o.common);
    const Formatter fmt = make_formatter(o.common.precision);

    const std::optional<double> index =
        resolve_index(config, o.material, o.n, /*required=*/true);
    const LaserField laser =
        laser_from_wavelength(o.beam.wavelength.or_else(config.wavelength));
    const Slab slab{o.beam.thickness.or_else(config.thickness), *index,
                    o.material};
    const int count = tm_mode_count(slab, laser);

    std::vector<ModeSolution> modes;
    modes.reserve(static_cast<std::size_t>(count));
    for (int m = 0; m < count; ++m) {
        modes.push_back(solve_tm_mode(slab, laser, m));
    }
    const double guidance_deg =
        constants::rad_to_deg(std::acos(1.0 / slab.refractive_index));

    if (o.common.format == "json") {
        json root = json_root("modes");
        root["material"] =
            o.material.empty() ? json(nullptr) : json(o.material);
        root["refractive_index"] = slab.refractive_index;
        root["wavelength_angstrom"] = laser.vacuum_wavelength;
        root["thickness_angstrom"] = slab.thickness;
        root["guidance_angle_deg"] = guidance_deg;
        root["mode_count"] = count;
        json rows = json::array();
        for (const ModeSolution& mode : modes) {
            json row;
            row["mode"] = mode.mode_index;
            row["cutoff_thickness_angstrom"] = tm_cutoff_thickness(
                laser, slab.refractive_index, mode.mode_index);
            row["alpha_deg"] = constants::rad_to_deg(mode.alpha);
            row["kappa_per_angstrom"] = mode.kappa;
            row["gamma_per_angstrom"] = mode.gamma;
            row["residual"] = mode.residual;
            rows.push_back(row);
        }
        root["modes"] = rows;
        emit(o.common, out, [&](std::ostream& os) { dump_json(os, root); });
        return exit_ok;
    }

    emit(o.common, out, [&](std::ostream& os) {
        write_provenance(os);
        write_csv_row(os, {"mode", "cutoff_thickness_angstrom", "alpha_deg",
                           "kappa_per_angstrom", "gamma_per_angstrom",
                           "residual"});
        for (const ModeSolution& mode : modes) {
            write_csv_row(
                os,
                {std::to_string(mode.mode_index),
                 fmt.value(tm_cutoff_thickness(laser, slab.refractive_index,
                                               mode.mode_index)),
                 fmt.value(constants::rad_to_deg(mode.alpha)),
                 fmt.value(mode.kappa), fmt.value(mode.gamma),
                 fmt.value(mode.residual)});
        }
    });
    return exit_ok;
}

// ---------------------------------------------------------------------------
// constants

struct ConstantEntry {
    const char* name;
    double value;
    const char* unit;
    const char* note;
};

const ConstantEntry k_constant_table[] = {
    {"angstrom_per_cm", constants::angstrom_per_cm, "Angstrom/cm",
     "length unit conversion"},
    {"electron_rest_energy_ev", constants::electron_rest_energy, "eV",
     "electron rest energy m c^2"},
    {"ev_per_kev", constants::ev_per_kev, "eV/keV", "energy unit conversion"},
    {"hbar_c_ev_angstrom", constants::hbar_c, "eV*Angstrom",
     "reduced Planck constant times speed of light, hc/2pi"},
    {"hc_ev_angstrom", constants::hc, "eV*Angstrom",
     "Planck constant times speed of light"},
    {"pi", constants::pi, "", "circle constant"},
    {"speed_of_light_angstrom_per_s", constants::speed_of_light, "Angstrom/s",
     "vacuum speed of light, exact"},
};

int do_constants(const CommonOpts& common, std::ostream& out) {
    if (common.format == "json") {
        json root = json_root("constants");
        json table;
        for (const ConstantEntry& entry : k_constant_table) {
            json row;
            row["value"] = entry.value;
            row["unit"] = entry.unit;
            row["note"] = entry.note;
            table[entry.name] = row;
        }
        root["constants"] = table;
        emit(common, out, [&](std::ostream& os) { dump_json(os, root); });
        return exit_ok;
    }
    emit(common, out, [&](std::ostream& os) {
        write_provenance(os);
        write_csv_row(os, {"name", "value", "unit", "note"});
        for (const ConstantEntry& entry : k_constant_table) {
            write_csv_row(os, {entry.name, format_double_full(entry.value),
                               entry.unit, entry.note});
        }
    });
    return exit_ok;
}

} // namespace

// ---------------------------------------------------------------------------

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Beat-wavelength toolkit for laser-modulated electron beams",
                 std::string(project_name)};
    app.set_version_flag("--version", std::string(version_banner));
    app.require_subcommand(0, 1);

    PredictOpts predict_opts;
    CLI::App* predict =
        app.add_subcommand("predict", "Predict the beat wavelength");
    predict
        ->add_option("tokens", predict_opts.tokens,
                     "free-form material and/or variant tokens")
        ->expected(0, 2);
    predict_opts.variant_opt =
        predict->add_option("--variant", predict_opts.variant_name,
                            "base | planewave | tm | exact | radiation");
    predict_opts.material_opt = predict->add_option(
        "--material", predict_opts.material_flag, "material label from config");
    predict_opts.n.opt =
        predict->add_option("--n", predict_opts.n.value, "refractive index");
    add_beam_options(predict, predict_opts.beam);
    predict->add_option("--mode", predict_opts.mode, "TM mode index")
        ->check(CLI::NonNegativeNumber);
    predict_opts.target.opt =
        predict->add_option("--target-cm", predict_opts.target.value,
                            "beat wavelength to invert (radiation variant)");
    add_common_options(predict, predict_opts.common, "csv");

    ScanOpts scan_opts;
    CLI::App* scan = app.add_subcommand(
        "scan", "Sweep one parameter and tabulate the beat wavelength");
    scan->add_option("axis", scan_opts.axis, "swept parameter")
        ->required()
        ->check(CLI::IsMember(
            {"kinetic_energy", "refractive_index", "thickness"}));
    scan->add_option("--from", scan_opts.from, "axis start (keV / - / Angstrom)")
        ->required();
    scan->add_option("--to", scan_opts.to, "axis end")->required();
    scan->add_option("--steps", scan_opts.steps, "number of grid points (>= 2)")
        ->required();
    scan->add_option("--variant", scan_opts.variant,
                     "base | planewave | tm | exact")
        ->required();
    scan->add_option("--material", scan_opts.material,
                     "material label from config");
    scan_opts.n.opt = scan->add_option("--n", scan_opts.n.value,
                                       "refractive index");
    add_beam_options(scan, scan_opts.beam);
    scan->add_option("--mode", scan_opts.mode, "TM mode index")
        ->check(CLI::NonNegativeNumber);
    scan->add_flag("--serial", scan_opts.serial,
                   "use the serial reference kernel");
    add_common_options(scan, scan_opts.common, "csv");

    ReportOpts report_opts;
    CLI::App* report = app.add_subcommand(
        "report", "Compare predictions against the recorded measurements");
    add_beam_options(report, report_opts.beam);
    add_common_options(report, report_opts.common, "json");

    PatternOpts pattern_opts;
    CLI::App* pattern = app.add_subcommand(
        "pattern", "Evaluate the density modulation on a space-time grid");
    pattern->add_option("--x", pattern_opts.x, "x grid, lo:hi:count (Angstrom)")
        ->capture_default_str();
    pattern->add_option("--z", pattern_opts.z, "z grid, lo:hi:count (cm)")
        ->capture_default_str();
    pattern->add_option("--t", pattern_opts.t, "t grid, lo:hi:count (s)")
        ->capture_default_str();
    pattern->add_option("--variant", pattern_opts.variant,
                        "base | planewave | tm")
        ->capture_default_str();
    pattern->add_option("--material", pattern_opts.material,
                        "material label from config");
    pattern_opts.n.opt =
        pattern->add_option("--n", pattern_opts.n.value, "refractive index");
    add_beam_options(pattern, pattern_opts.beam);
    pattern->add_option("--mode", pattern_opts.mode, "TM mode index")
        ->check(CLI::NonNegativeNumber);
    pattern_opts.beta_mod.opt = pattern->add_option(
        "--beta-mod", pattern_opts.beta_mod.value, "modulation depth in [0, 1]");
    pattern_opts.optimum.opt =
        pattern->add_option("--optimum-thickness-angstrom",
                            pattern_opts.optimum.value,
                            "optimum film thickness (Angstrom)");
    pattern->add_option("--phase-convention", pattern_opts.convention,
                        "sine | cosine")
        ->capture_default_str();
    pattern->add_flag("--serial", pattern_opts.serial,
                      "use the serial reference kernel");
    add_common_options(pattern, pattern_opts.common, "csv");

    ModesOpts modes_opts;
    CLI::App* modes =
        app.add_subcommand("modes", "List guided TM modes of the film");
    modes->add_option("--material", modes_opts.material,
                      "material label from config");
    modes_opts.n.opt =
        modes->add_option("--n", modes_opts.n.value, "refractive index");
    add_film_options(modes, modes_opts.beam);
    add_common_options(modes, modes_opts.common, "json");

    CommonOpts constants_common;
    CLI::App* constants_cmd =
        app.add_subcommand("constants", "Dump the physical constant table");
    add_common_options(constants_cmd, constants_common, "json");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    }

    try {
        if (predict->parsed()) return do_predict(predict_opts, out);
        if (scan->parsed()) return do_scan(scan_opts, out);
        if (report->parsed()) return do_report(report_opts, out);
        if (pattern->parsed()) return do_pattern(pattern_opts, out);
        if (modes->parsed()) return do_modes(modes_opts, out);
        if (constants_cmd->parsed()) return do_constants(constants_common, out);
        out << app.help();
        return exit_usage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain;
    } catch (const NumericalFailure& e) {
        err << "error: " << e.what() << '\n';
        return exit_numerical;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_numerical;
    }
}

} // namespace shbeat
