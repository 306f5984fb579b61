#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace shbeat {

/// A measured beat wavelength to rank predictions against.
struct ExperimentRecord {
    double lambda_b = 0.0;               ///< cm
    std::optional<double> uncertainty;   ///< cm
    std::string source;
};

/// Runtime defaults and lookup tables.  All lengths in Angstrom, energies
/// in eV; the JSON file uses keV / Angstrom as the key names say.
struct Config {
    /// Material -> refractive index at the working wavelength; nullopt means
    /// the material is known but its index is not.
    std::map<std::string, std::optional<double>> materials;
    double kinetic_energy = 50e3;
    double wavelength = 4880.0;
    double thickness = 1000.0;
    double beta_mod = 0.35;
    double optimum_thickness = 1007.0;
    std::vector<ExperimentRecord> experiments;
};

/// Compiled-in defaults: the fused-quartz / strontium-fluoride setup and the
/// three published fringe spacings.
Config builtin_config();

/// Overlay a JSON document onto the builtin config.  Scalar keys merge
/// per key; an "experiments" array replaces the builtin list outright.
/// Unknown keys and ill-typed values throw ConfigError.
Config config_from_json_text(const std::string& text);

/// config_from_json_text over the contents of a file.
Config load_config(const std::string& path);

/// Look a material up; throws ConfigError when the name is absent, returns
/// nullopt when the material is listed without an index.
std::optional<double> material_index(const Config& config,
                                     const std::string& name);

} // namespace shbeat
