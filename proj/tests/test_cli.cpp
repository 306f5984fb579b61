#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "shbeat/beating.hpp"
#include "shbeat/cli.hpp"
#include "shbeat/csv.hpp"
#include "shbeat/errors.hpp"

using namespace shbeat;
using nlohmann::json;

static doctest::Approx rel(double value, double eps) {
    return doctest::Approx(value).epsilon(eps).scale(0.0);
}

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    CliResult result;
    result.code = run_cli(args, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        lines.push_back(line);
    }
    return lines;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("version and help") {
    const CliResult version = run({"--version"});
    CHECK(version.code == exit_ok);
    CHECK(contains(version.out, "shbeat 0.1.0"));

    const CliResult help = run({"--help"});
    CHECK(help.code == exit_ok);
    CHECK(contains(help.out, "predict"));
    CHECK(contains(help.out, "scan"));

    const CliResult bare = run({});
    CHECK(bare.code == exit_usage);
    CHECK(contains(bare.out, "predict"));

    CHECK(run({"--bogus"}).code == exit_usage);
    CHECK(run({"frobnicate"}).code == exit_usage);
}

TEST_CASE("predict: csv output for the guided quartz mode") {
    const CliResult r = run({"predict", "SiO2", "tm0"});
    REQUIRE(r.code == exit_ok);
    const std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "# shbeat 0.1.0");
    CHECK(lines[1] ==
          "variant,material,n,kinetic_energy_kev,wavelength_angstrom,"
          "thickness_angstrom,mode,alpha_deg,theta_deg,lambda_b_cm");

    const std::vector<std::string> row = split_csv_line(lines[2]);
    REQUIRE(row.size() == 10);
    CHECK(row[0] == "tm");
    CHECK(row[1] == "SiO2");
    CHECK(row[2] == "1.559");
    CHECK(row[3] == "50");
    CHECK(row[4] == "4880");
    CHECK(row[5] == "1000");
    CHECK(row[6] == "0");
    CHECK(row[7] == "46.1383");
    CHECK(row[8].empty());  // no external angle for a guided mode
    CHECK(row[9] == "1.473");
}

TEST_CASE("predict: token order and flag spellings are equivalent") {
    const CliResult a = run({"predict", "SiO2", "tm0"});
    const CliResult b = run({"predict", "tm0", "SiO2"});
    const CliResult c = run({"predict", "--variant", "tm", "--material", "SiO2"});
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
}

TEST_CASE("predict: other variants") {
    const CliResult srf2 = run({"predict", "SrF2", "planewave"});
    REQUIRE(srf2.code == exit_ok);
    CHECK(contains(srf2.out, "1.286"));

    const CliResult vacuum = run({"predict", "--n", "1", "planewave"});
    REQUIRE(vacuum.code == exit_ok);
    CHECK(contains(vacuum.out, "1.515"));

    const CliResult base = run({"predict", "base"});
    REQUIRE(base.code == exit_ok);
    CHECK(contains(base.out, "1.515"));

    const CliResult exact = run({"predict", "SiO2", "exact"});
    REQUIRE(exact.code == exit_ok);
    CHECK(contains(exact.out, "1.218"));
}

TEST_CASE("predict: json output") {
    const CliResult r =
        run({"predict", "SiO2", "tm0", "--format", "json"});
    REQUIRE(r.code == exit_ok);
    const json root = json::parse(r.out);
    CHECK(root["generator"] == "shbeat 0.1.0");
    CHECK(root["command"] == "predict");
    CHECK(root["variant"] == "tm");
    CHECK(root["inputs"]["material"] == "SiO2");
    CHECK(root["inputs"]["refractive_index"].get<double>() == 1.559);
    CHECK(root["inputs"]["kinetic_energy_kev"].get<double>() == 50.0);
    CHECK(root["inputs"]["mode"].get<int>() == 0);
    CHECK(root["inputs"]["target_cm"].is_null());
    CHECK(root["alpha_deg"].get<double>() == rel(46.13829865448013, 1e-9));
    CHECK(root["theta_deg"].is_null());
    CHECK(root["lambda_b_cm"].get<double>() ==
          rel(1.4728136610696930, 1e-9));
}

TEST_CASE("predict: radiation inversion") {
    const CliResult r = run({"predict", "SiO2", "radiation", "--target-cm",
                             "1.70", "--format", "json"});
    REQUIRE(r.code == exit_ok);
    const json root = json::parse(r.out);
    CHECK(root["variant"] == "radiation");
    CHECK(root["theta_deg"].get<double>() == rel(53.131781634383205, 1e-9));
    CHECK(root["alpha_deg"].get<double>() == rel(67.365754665965389, 1e-9));
    CHECK(root["lambda_b_cm"].get<double>() == 1.70);

    // without a target there is nothing to invert
    CHECK(run({"predict", "SiO2", "radiation"}).code == exit_usage);
    // a guided-range target is a domain problem, not a usage problem
    CHECK(run({"predict", "SiO2", "radiation", "--target-cm", "1.40"}).code ==
          exit_domain);
}

TEST_CASE("predict: usage errors") {
    CHECK(run({"predict"}).code == exit_usage);                 // no variant
    CHECK(run({"predict", "Si3N4", "tm"}).code == exit_usage);  // unknown material
    CHECK(run({"predict", "planewave"}).code == exit_usage);    // needs an index
    CHECK(run({"predict", "SiO2", "SrF2"}).code == exit_usage); // two materials
    CHECK(run({"predict", "tm", "base"}).code == exit_usage);   // two variants
    const CliResult noindex = run({"predict", "Al2O3", "tm"});
    CHECK(noindex.code == exit_usage);
    CHECK(contains(noindex.err, "pass --n"));
    CHECK(run({"predict", "Al2O3", "tm", "--n", "1.76"}).code == exit_ok);
}

TEST_CASE("predict: beam flags feed the kinematics") {
    const CliResult r = run({"predict", "base", "--kinetic-energy-kev", "100",
                             "--format", "json"});
    REQUIRE(r.code == exit_ok);
    const json root = json::parse(r.out);
    CHECK(root["lambda_b_cm"].get<double>() ==
          rel(3.8673228917552323, 1e-12));

    CHECK(run({"predict", "base", "--kinetic-energy-kev", "-5"}).code ==
          exit_domain);
}

TEST_CASE("precision control") {
    const CliResult full = run({"predict", "base", "--precision", "full"});
    REQUIRE(full.code == exit_ok);
    // shortest representation that parses back to the same double
    CHECK(contains(full.out, "1.514694704678266"));

    const CliResult eight = run({"predict", "base", "--precision", "8"});
    REQUIRE(eight.code == exit_ok);
    CHECK(contains(eight.out, "1.5146947"));
    CHECK(!contains(eight.out, "1.51469470"));

    CHECK(run({"predict", "base", "--precision", "0"}).code == exit_usage);
    CHECK(run({"predict", "base", "--precision", "18"}).code == exit_usage);
    CHECK(run({"predict", "base", "--precision", "weird"}).code == exit_usage);
    CHECK(run({"predict", "base", "--precision", "4x"}).code == exit_usage);
}

TEST_CASE("full precision output round-trips exactly") {
    const CliResult r = run({"predict", "base", "--precision", "full"});
    REQUIRE(r.code == exit_ok);
    const std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    const std::vector<std::string> row = split_csv_line(lines[2]);
    const double lambda = std::stod(row.back());
    CHECK(lambda == beat_base(electron_from_kinetic(50e3),
                              laser_from_wavelength(4880.0)));
}

TEST_CASE("scan: kinetic energy sweep") {
    const CliResult r = run({"scan", "kinetic_energy", "--from", "10", "--to",
                             "100", "--steps", "10", "--variant", "base"});
    REQUIRE(r.code == exit_ok);
    const std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 2 + 10);
    CHECK(lines[0] == "# shbeat 0.1.0");
    CHECK(lines[1] == "kinetic_energy_kev,lambda_b_cm");

    double last_lambda = 0.0;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const std::vector<std::string> row = split_csv_line(lines[i]);
        REQUIRE(row.size() == 2);
        const double lambda = std::stod(row[1]);
        CHECK(lambda > last_lambda);
        last_lambda = lambda;
    }
    CHECK(split_csv_line(lines[2])[0] == "10");
    CHECK(split_csv_line(lines.back())[0] == "100");

    // identical invocations produce identical bytes
    const CliResult again = run({"scan", "kinetic_energy", "--from", "10",
                                 "--to", "100", "--steps", "10", "--variant",
                                 "base"});
    CHECK(again.out == r.out);
}

TEST_CASE("scan: refractive index sweep starts at the vacuum estimate") {
    const CliResult r =
        run({"scan", "refractive_index", "--from", "1", "--to", "2", "--steps",
             "6", "--variant", "planewave"});
    REQUIRE(r.code == exit_ok);
    const std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 2 + 6);
    CHECK(split_csv_line(lines[2])[1] == "1.515");

    double last = 10.0;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const double lambda = std::stod(split_csv_line(lines[i])[1]);
        CHECK(lambda < last);
        last = lambda;
    }
}

TEST_CASE("scan: thickness sweep of the guided mode carries the angle") {
    const CliResult r = run({"scan", "thickness", "--from", "500", "--to",
                             "3000", "--steps", "6", "--variant", "tm",
                             "--material", "SiO2", "--serial"});
    REQUIRE(r.code == exit_ok);
    const std::vector<std::string> lines = lines_of(r.out);
    CHECK(lines[1] == "thickness_angstrom,lambda_b_cm,alpha_deg");
    double last_alpha = 90.0;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const std::vector<std::string> row = split_csv_line(lines[i]);
        REQUIRE(row.size() == 3);
        const double alpha = std::stod(row[2]);
        CHECK(alpha < last_alpha);
        last_alpha = alpha;
    }

    // --serial must not change a single byte
    const CliResult parallel =
        run({"scan", "thickness", "--from", "500", "--to", "3000", "--steps",
             "6", "--variant", "tm", "--material", "SiO2"});
    CHECK(parallel.out == r.out);
}

TEST_CASE("scan: json output echoes the fixed parameters") {
    const CliResult r =
        run({"scan", "refractive_index", "--from", "1", "--to", "2", "--steps",
             "3", "--variant", "exact", "--format", "json"});
    REQUIRE(r.code == exit_ok);
    const json root = json::parse(r.out);
    CHECK(root["command"] == "scan");
    CHECK(root["axis"] == "refractive_index");
    CHECK(root["variant"] == "exact");
    CHECK(root["fixed"]["kinetic_energy_kev"].get<double>() == 50.0);
    CHECK(root["fixed"]["wavelength_angstrom"].get<double>() == 4880.0);
    REQUIRE(root["points"].size() == 3);
    CHECK(root["points"][0]["refractive_index"].get<double>() == 1.0);
    CHECK(root["points"][2]["refractive_index"].get<double>() == 2.0);
    // at n = 1 the exact result sits within 1e-4 of the vacuum estimate
    const double first = root["points"][0]["lambda_b_cm"].get<double>();
    CHECK(std::abs(first / 1.5146947046782664 - 1.0) < 1e-4);
}

TEST_CASE("scan: usage errors") {
    CHECK(run({"scan", "kinetic_energy", "--from", "10", "--to", "100",
               "--steps", "1", "--variant", "base"})
              .code == exit_usage);
    CHECK(run({"scan", "kinetic_energy", "--from", "100", "--to", "10",
               "--steps", "5", "--variant", "base"})
              .code == exit_usage);
    CHECK(run({"scan", "kinetic_energy", "--from", "50", "--to", "50",
               "--steps", "5", "--variant", "base"})
              .code == exit_usage);
    CHECK(run({"scan", "kinetic_energy", "--from", "-10", "--to", "100",
               "--steps", "5", "--variant", "base"})
              .code == exit_usage);
    CHECK(run({"scan", "refractive_index", "--from", "0.5", "--to", "2",
               "--steps", "5", "--variant", "planewave"})
              .code == exit_usage);
    // axis the variant cannot use
    CHECK(run({"scan", "thickness", "--from", "500", "--to", "3000", "--steps",
               "5", "--variant", "planewave", "--material", "SiO2"})
              .code == exit_usage);
    CHECK(run({"scan", "kinetic_energy", "--from", "10", "--to", "100",
               "--steps", "5", "--variant", "radiation", "--material", "SiO2"})
              .code == exit_usage);
    // unknown axis name is caught at parse time
    CHECK(run({"scan", "voltage", "--from", "10", "--to", "100", "--steps",
               "5", "--variant", "base"})
              .code == exit_usage);
    // missing required flags
    CHECK(run({"scan", "kinetic_energy", "--from", "10", "--to", "100",
               "--steps", "5"})
              .code == exit_usage);
    // sweeping past a mode cutoff is a domain problem
    CHECK(run({"scan", "thickness", "--from", "500", "--to", "3000", "--steps",
               "6", "--variant", "tm", "--material", "SiO2", "--mode", "1"})
              .code == exit_domain);
}

TEST_CASE("report: json summary") {
    const CliResult r = run({"report"});
    REQUIRE(r.code == exit_ok);
    const json root = json::parse(r.out);
    CHECK(root["command"] == "report");
    CHECK(root["lambda_base_cm"].get<double>() ==
          rel(1.5146947046782664, 1e-12));
    REQUIRE(root["cells"].size() == 21);
    REQUIRE(root["radiation_angles"].size() == 3);

    const json& quartz_tm = root["cells"][4];
    CHECK(quartz_tm["material"] == "SiO2");
    CHECK(quartz_tm["variant"] == "tm");
    CHECK(quartz_tm["alpha_deg"].get<double>() ==
          rel(46.13829865448013, 1e-9));
    CHECK(quartz_tm["lambda_theory_cm"].get<double>() ==
          rel(1.4728136610696930, 1e-9));
    CHECK(quartz_tm["flagged"].get<bool>());

    const json& sapphire = root["cells"][1];
    CHECK(sapphire["material"] == "Al2O3");
    CHECK(sapphire["lambda_theory_cm"].is_null());
    CHECK(sapphire["note"] == "refractive index unavailable");

    CHECK(root["summary"]["min_abs_gap"].get<double>() ==
          rel(0.12233837931129094, 1e-12));
    CHECK(root["summary"]["min_gap_flagged"].get<bool>());

    CHECK(root["radiation_angles"][0]["theta_deg"].get<double>() ==
          rel(53.131781634383205, 1e-9));
    CHECK(root["radiation_angles"][1]["theta_deg"].get<double>() ==
          rel(62.690333379134517, 1e-9));
}

TEST_CASE("report: csv layout") {
    const CliResult r = run({"report", "--format", "csv"});
    REQUIRE(r.code == exit_ok);
    const std::vector<std::string> lines = lines_of(r.out);
    CHECK(lines[0] == "# shbeat 0.1.0");
    CHECK(contains(lines[1], "source,lambda_expt_cm"));
    CHECK(contains(r.out, "# radiation_angles"));
    CHECK(contains(r.out, "# lambda_base_cm,1.515"));
    CHECK(contains(r.out, "# min_gap_flagged,true"));
    // 21 cells + 3 radiation rows + headers and footers
    CHECK(lines.size() == 1 + 1 + 21 + 1 + 1 + 3 + 3);
}

TEST_CASE("pattern: small grid") {
    const CliResult r =
        run({"pattern", "--x", "0:0:1", "--z", "0:2:5", "--t", "0:0:1",
             "--variant", "tm", "--material", "SiO2"});
    REQUIRE(r.code == exit_ok);
    const std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 2 + 5);
    CHECK(lines[0] == "# shbeat 0.1.0");
    CHECK(lines[1] == "x,z,t,rho_ratio");

    // sine convention: the z = 0 row is unmodulated
    const std::vector<std::string> first = split_csv_line(lines[2]);
    REQUIRE(first.size() == 4);
    CHECK(first[0] == "0");
    CHECK(first[1] == "0");
    CHECK(first[2] == "0");
    CHECK(first[3] == "1");

    for (std::size_t i = 2; i < lines.size(); ++i) {
        const double rho = std::stod(split_csv_line(lines[i])[3]);
        CHECK(rho > 0.6);
        CHECK(rho < 1.4);
    }
}

TEST_CASE("pattern: zero modulation depth flattens everything") {
    const CliResult r =
        run({"pattern", "--x", "0:0:1", "--z", "0:2:9", "--t", "0:0:1",
             "--variant", "base", "--beta-mod", "0"});
    REQUIRE(r.code == exit_ok);
    const std::vector<std::string> lines = lines_of(r.out);
    for (std::size_t i = 2; i < lines.size(); ++i) {
        CHECK(split_csv_line(lines[i])[3] == "1");
    }
}

TEST_CASE("pattern: json output") {
    const CliResult r =
        run({"pattern", "--x", "0:0:1", "--z", "0:1:3", "--t", "0:0:1",
             "--variant", "planewave", "--n", "1.559", "--format", "json"});
    REQUIRE(r.code == exit_ok);
    const json root = json::parse(r.out);
    CHECK(root["command"] == "pattern");
    CHECK(root["inputs"]["variant"] == "planewave");
    CHECK(root["inputs"]["refractive_index"].get<double>() == 1.559);
    CHECK(root["inputs"]["phase_convention"] == "sine");
    CHECK(root["inputs"]["alpha_deg"].is_null());
    CHECK(root["columns"] == json::array({"x", "z", "t", "rho_ratio"}));
    REQUIRE(root["rows"].size() == 3);
    CHECK(root["rows"][0][3].get<double>() == 1.0);
}

TEST_CASE("pattern: refusals") {
    // more than 10^7 rows
    CHECK(run({"pattern", "--x", "0:1:4001", "--z", "0:1:2501", "--t",
               "0:0:1", "--variant", "base"})
              .code == exit_domain);
    CHECK(run({"pattern", "--variant", "exact", "--material", "SiO2"}).code ==
          exit_usage);
    CHECK(run({"pattern", "--variant", "radiation", "--material", "SiO2"})
              .code == exit_usage);
    CHECK(run({"pattern", "--z", "0:3:banana", "--variant", "base"}).code ==
          exit_usage);
    CHECK(run({"pattern", "--z", "0:3", "--variant", "base"}).code ==
          exit_usage);
    CHECK(run({"pattern", "--z", "0:3:0", "--variant", "base"}).code ==
          exit_usage);
    CHECK(run({"pattern", "--phase-convention", "square", "--variant", "base"})
              .code == exit_usage);
    CHECK(run({"pattern", "--variant", "tm"}).code == exit_usage);
}

TEST_CASE("modes: json listing for a thick film") {
    const CliResult r =
        run({"modes", "--material", "SiO2", "--thickness-angstrom", "5000"});
    REQUIRE(r.code == exit_ok);
    const json root = json::parse(r.out);
    CHECK(root["command"] == "modes");
    CHECK(root["mode_count"].get<int>() == 3);
    CHECK(root["guidance_angle_deg"].get<double>() ==
          rel(50.100956940214024, 1e-9));
    REQUIRE(root["modes"].size() == 3);
    CHECK(root["modes"][0]["mode"].get<int>() == 0);
    CHECK(root["modes"][1]["cutoff_thickness_angstrom"].get<double>() ==
          rel(2040.0874276516807, 1e-9));
    double last_alpha = 0.0;
    for (const json& mode : root["modes"]) {
        const double alpha = mode["alpha_deg"].get<double>();
        CHECK(alpha > last_alpha);
        last_alpha = alpha;
        CHECK(std::abs(mode["residual"].get<double>()) < 1e-9);
    }
}

TEST_CASE("modes: csv and failure modes") {
    const CliResult csv = run({"modes", "--material", "SiO2", "--format",
                               "csv"});
    REQUIRE(csv.code == exit_ok);
    const std::vector<std::string> lines = lines_of(csv.out);
    REQUIRE(lines.size() == 3);  // provenance, header, TM0
    CHECK(lines[1] ==
          "mode,cutoff_thickness_angstrom,alpha_deg,kappa_per_angstrom,"
          "gamma_per_angstrom,residual");
    CHECK(split_csv_line(lines[2])[0] == "0");

    CHECK(run({"modes"}).code == exit_usage);
    CHECK(run({"modes", "--n", "1.0"}).code == exit_domain);
}

TEST_CASE("constants table") {
    const CliResult r = run({"constants"});
    REQUIRE(r.code == exit_ok);
    const json root = json::parse(r.out);
    CHECK(root["command"] == "constants");
    CHECK(root["constants"]["electron_rest_energy_ev"]["value"].get<double>() ==
          510998.95);
    CHECK(root["constants"]["hc_ev_angstrom"]["value"].get<double>() ==
          12398.42);
    CHECK(root["constants"]["speed_of_light_angstrom_per_s"]["note"] ==
          "vacuum speed of light, exact");

    const CliResult csv = run({"constants", "--format", "csv"});
    REQUIRE(csv.code == exit_ok);
    CHECK(contains(csv.out, "510998.95"));
    CHECK(contains(csv.out, "12398.42"));
}

TEST_CASE("config file via --config") {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "shbeat_cli_config.json";
    {
        std::ofstream file(path);
        file << R"({"materials": {"glass": 2.0}})";
    }

    const CliResult r = run({"predict", "glass", "planewave", "--config",
                             path.string(), "--format", "json"});
    REQUIRE(r.code == exit_ok);
    const json root = json::parse(r.out);
    const double expected = beat_planewave(electron_from_kinetic(50e3),
                                           laser_from_wavelength(4880.0), 2.0);
    CHECK(root["lambda_b_cm"].get<double>() == rel(expected, 1e-12));

    // a broken config file is a config problem, not a usage problem
    {
        std::ofstream file(path);
        file << "{ nope";
    }
    CHECK(run({"predict", "glass", "planewave", "--config", path.string()})
              .code == exit_domain);
    fs::remove(path);

    CHECK(run({"predict", "base", "--config",
               (fs::temp_directory_path() / "shbeat_missing.json").string()})
              .code == exit_domain);
}

TEST_CASE("config file via SHBEAT_CONFIG") {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "shbeat_env_config.json";
    {
        std::ofstream file(path);
        file << R"({"defaults": {"kinetic_energy_kev": 100}})";
    }
    setenv("SHBEAT_CONFIG", path.string().c_str(), 1);
    const CliResult r = run({"predict", "base", "--format", "json"});
    unsetenv("SHBEAT_CONFIG");
    fs::remove(path);

    REQUIRE(r.code == exit_ok);
    const json root = json::parse(r.out);
    CHECK(root["inputs"]["kinetic_energy_kev"].get<double>() == 100.0);
    CHECK(root["lambda_b_cm"].get<double>() ==
          rel(3.8673228917552323, 1e-12));

    // the flag outranks the environment
    setenv("SHBEAT_CONFIG", "/definitely/not/a/file.json", 1);
    const CliResult flag = run({"predict", "base", "--format", "json",
                                "--config", "/dev/null"});
    unsetenv("SHBEAT_CONFIG");
    CHECK(flag.code == exit_domain);  // /dev/null is empty, not JSON
}

TEST_CASE("--output writes the file instead of stdout") {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "shbeat_out.csv";
    const CliResult r =
        run({"predict", "base", "--output", path.string()});
    REQUIRE(r.code == exit_ok);
    CHECK(r.out.empty());

    std::ifstream file(path);
    std::string first_line;
    REQUIRE(std::getline(file, first_line));
    CHECK(first_line == "# shbeat 0.1.0");
    file.close();
    fs::remove(path);

    CHECK(run({"predict", "base", "--output",
               "/no/such/directory/out.csv"})
              .code == exit_domain);
}

TEST_CASE("format flag is validated at parse time") {
    CHECK(run({"predict", "base", "--format", "xml"}).code == exit_usage);
    CHECK(run({"report", "--format", "yaml"}).code == exit_usage);
}
