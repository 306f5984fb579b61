#include "shbeat/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "shbeat/constants.hpp"
#include "shbeat/errors.hpp"

namespace shbeat {

Config builtin_config() {
    Config config;
    config.materials["SiO2"] = 1.559;
    config.materials["SrF2"] = 1.43;
    config.materials["Al2O3"] = std::nullopt;
    config.experiments = {
        {1.70, std::nullopt, "expt-1"},
        {1.75, std::nullopt, "expt-2"},
        {1.73, 0.01, "expt-3"},
    };
    return config;
}

namespace {

using nlohmann::json;

double positive_number(const json& value, const std::string& key) {
    if (!value.is_number()) {
        throw ConfigError("config key '" + key + "' must be a number");
    }
    const double out = value.get<double>();
    if (!(out > 0.0)) {
        throw ConfigError("config key '" + key + "' must be positive");
    }
    return out;
}

void merge_materials(Config& config, const json& materials) {
    if (!materials.is_object()) {
        throw ConfigError("config key 'materials' must be an object");
    }
    for (const auto& [name, value] : materials.items()) {
        if (value.is_null()) {
            config.materials[name] = std::nullopt;
            continue;
        }
        const double index = positive_number(value, "materials." + name);
        if (!(index > 1.0)) {
            throw ConfigError("material '" + name +
                              "' needs a refractive index above 1");
        }
        config.materials[name] = index;
    }
}

void merge_defaults(Config& config, const json& defaults) {
    if (!defaults.is_object()) {
        throw ConfigError("config key 'defaults' must be an object");
    }
    for (const auto& [key, value] : defaults.items()) {
        if (key == "kinetic_energy_kev") {
            config.kinetic_energy =
                positive_number(value, key) * constants::ev_per_kev;
        } else if (key == "wavelength_angstrom") {
            config.wavelength = positive_number(value, key);
        } else if (key == "thickness_angstrom") {
            config.thickness = positive_number(value, key);
        } else if (key == "optimum_thickness_angstrom") {
            config.optimum_thickness = positive_number(value, key);
        } else if (key == "beta_mod") {
            if (!value.is_number()) {
                throw ConfigError("config key 'beta_mod' must be a number");
            }
            const double beta = value.get<double>();
            if (beta < 0.0 || beta > 1.0) {
                throw ConfigError("config key 'beta_mod' must lie in [0, 1]");
            }
            config.beta_mod = beta;
        } else {
            throw ConfigError("unknown defaults key '" + key + "'");
        }
    }
}

void replace_experiments(Config& config, const json& experiments) {
    if (!experiments.is_array()) {
        throw ConfigError("config key 'experiments' must be an array");
    }
    std::vector<ExperimentRecord> records;
    for (const json& entry : experiments) {
        if (!entry.is_object()) {
            throw ConfigError("each experiment must be an object");
        }
        ExperimentRecord record;
        bool have_lambda = false;
        for (const auto& [key, value] : entry.items()) {
            if (key == "lambda_b_cm") {
                record.lambda_b = positive_number(value, key);
                have_lambda = true;
            } else if (key == "uncertainty_cm") {
                if (!value.is_null()) {
                    record.uncertainty = positive_number(value, key);
                }
            } else if (key == "source") {
                if (!value.is_string()) {
                    throw ConfigError("experiment source must be a string");
                }
                record.source = value.get<std::string>();
            } else {
                throw ConfigError("unknown experiment key '" + key + "'");
            }
        }
        if (!have_lambda) {
            throw ConfigError("each experiment needs lambda_b_cm");
        }
        records.push_back(std::move(record));
    }
    config.experiments = std::move(records);
}

} // namespace

Config config_from_json_text(const std::string& text) {
    json document;
    try {
        document = json::parse(text);
    } catch (const json::parse_error& error) {
        throw ConfigError(std::string("config is not valid JSON: ") +
                          error.what());
    }
    if (!document.is_object()) {
        throw ConfigError("config must be a JSON object");
    }

    Config config = builtin_config();
    for (const auto& [key, value] : document.items()) {
        if (key == "materials") {
            merge_materials(config, value);
        } else if (key == "defaults") {
            merge_defaults(config, value);
        } else if (key == "experiments") {
            replace_experiments(config, value);
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    return config;
}

Config load_config(const std::string& path) {
    std::ifstream file(path);
    if (!file) {
        throw ConfigError("cannot read config file '" + path + "'");
    }
    std::ostringstream text;
    text << file.rdbuf();
    return config_from_json_text(text.str());
}

std::optional<double> material_index(const Config& config,
                                     const std::string& name) {
    const auto found = config.materials.find(name);
    if (found == config.materials.end()) {
        std::string known;
        for (const auto& [material, index] : config.materials) {
            if (!known.empty()) known += ", ";
            known += material;
        }
        throw ConfigError("unknown material '" + name + "' (have: " + known +
                          ")");
    }
    return found->second;
}

} // namespace shbeat
