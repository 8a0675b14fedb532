// Command-line front end: simulation runs, bias-condition checks,
// weight-surface export and the baseline demonstrations.
//
// Exit codes: 0 success / all checks pass, 1 usage or configuration
// error, 2 model infeasibility (strict normalization), 3 one or more
// condition items failed.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "opdyn/opdyn.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitCheckFailed = 3;

bool write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << content;
    return static_cast<bool>(out);
}

std::map<std::string, double> parse_params(const std::string& spec) {
    std::map<std::string, double> params;
    if (spec.empty()) return params;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ',')) {
        const auto eq = part.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw opdyn::ConfigError("--params: expected k=v, got \"" + part + "\"");
        }
        const std::string key = part.substr(0, eq);
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(part.substr(eq + 1), &used);
        } catch (const std::exception&) {
            throw opdyn::ConfigError("--params: bad number in \"" + part + "\"");
        }
        if (used != part.size() - eq - 1) {
            throw opdyn::ConfigError("--params: bad number in \"" + part + "\"");
        }
        if (params.count(key)) {
            throw opdyn::ConfigError("--params: duplicate key \"" + key + "\"");
        }
        params[key] = value;
    }
    return params;
}

struct CheckOptions {
    std::string family;
    std::string params;
    std::string which;
    std::size_t resolution = 41;
    std::string orientation = "corrected";
    double tol = 0.0;
    double exclusion_band = 0.0;
    std::size_t witness_cap = 1000;
    std::string out_path;
};

int run_check(const CheckOptions& opt) {
    opdyn::BiasFamily fam = opdyn::make_family(opt.family, parse_params(opt.params));
    opdyn::GridSpec grid;
    grid.resolution = opt.resolution;
    grid.exclusion_band = opt.exclusion_band;
    grid.witness_cap = opt.witness_cap;
    grid.validate();

    opdyn::ConditionReport report;
    if (opt.which == "confirmation") {
        report = opdyn::check_confirmation(fam, grid, opt.tol);
    } else if (opt.which == "negativity") {
        report = opdyn::check_negativity(fam, grid, opt.tol);
    } else if (opt.which == "theorem1" || opt.which == "theorem2") {
        const auto dec = opdyn::decomposition(fam);
        if (!dec) {
            throw opdyn::ConfigError("family \"" + opt.family +
                                     "\" has no (f, g) decomposition");
        }
        const auto orientation = opt.orientation == "as-written"
                                     ? opdyn::Orientation::AsWritten
                                     : opdyn::Orientation::Corrected;
        report = opt.which == "theorem1"
                     ? opdyn::check_theorem1(*dec, grid, orientation)
                     : opdyn::check_theorem2(*dec, grid, orientation);
    } else {
        throw opdyn::ConfigError(
            "--which must be confirmation, negativity, theorem1 or theorem2");
    }

    json doc = report.to_json();
    doc["family"] = opt.family;
    doc["params"] = json::object();
    for (const auto& [k, v] : parse_params(opt.params)) doc["params"][k] = v;

    const std::string text = doc.dump(2) + "\n";
    if (opt.out_path.empty()) {
        std::cout << text;
    } else if (!write_file(opt.out_path, text)) {
        std::cerr << "error: cannot write report to " << opt.out_path << "\n";
        return kExitConfig;
    }
    for (const auto& item : report.items) {
        std::cerr << opt.which << " " << item.item << ": "
                  << (item.pass ? "pass" : "FAIL") << " (" << item.checked
                  << " cases)\n";
    }
    return report.all_pass() ? kExitOk : kExitCheckFailed;
}

struct SimulateOptions {
    std::string config_path;
    std::string out_dir = ".";
};

int run_simulate(const SimulateOptions& opt) {
    std::ifstream in(opt.config_path);
    if (!in) {
        std::cerr << "error: cannot open config file " << opt.config_path << "\n";
        return kExitConfig;
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        std::cerr << "error: " << opt.config_path << " is not valid JSON: " << e.what()
                  << "\n";
        return kExitConfig;
    }
    const opdyn::ExperimentConfig cfg = opdyn::parse_experiment_config(doc);

    std::optional<opdyn::InfluenceGraph> graph;
    if (cfg.generator) {
        graph = opdyn::generate_graph(*cfg.generator);
    } else {
        std::ifstream edges(*cfg.edge_list_path);
        if (!edges) {
            std::cerr << "error: cannot open edge-list file " << *cfg.edge_list_path
                      << "\n";
            return kExitConfig;
        }
        graph = opdyn::parse_edge_list(edges, cfg.n);
    }

    std::vector<double> x0 = cfg.x0_values
                                 ? *cfg.x0_values
                                 : opdyn::generate_x0(cfg.n, *cfg.x0_seed);

    const opdyn::Trajectory traj =
        opdyn::run(cfg.model, *graph, std::move(x0), cfg.steps, cfg.conv_tol);

    fs::create_directories(opt.out_dir);
    const fs::path csv_path = fs::path(opt.out_dir) / cfg.csv_name;
    const fs::path json_path = fs::path(opt.out_dir) / cfg.json_name;
    if (!write_file(csv_path, opdyn::trajectory_csv(traj))) {
        std::cerr << "error: cannot write " << csv_path << "\n";
        return kExitConfig;
    }
    if (!write_file(json_path, opdyn::trajectory_json(traj, cfg.echo).dump(2) + "\n")) {
        std::cerr << "error: cannot write " << json_path << "\n";
        return kExitConfig;
    }
    std::cerr << "wrote " << csv_path.string() << " and " << json_path.string() << " ("
              << traj.states.size() << " states";
    if (traj.converged_at) std::cerr << ", converged at step " << *traj.converged_at;
    std::cerr << ")\n";
    return kExitOk;
}

struct SurfaceOptions {
    std::string family;
    std::string params;
    std::size_t resolution = 41;
    std::string out_path;
};

int run_surface(const SurfaceOptions& opt) {
    opdyn::BiasFamily fam = opdyn::make_family(opt.family, parse_params(opt.params));
    const std::string csv = opdyn::surface_csv(fam, opt.resolution);
    if (!write_file(opt.out_path, csv)) {
        std::cerr << "error: cannot write surface to " << opt.out_path << "\n";
        return kExitConfig;
    }
    return kExitOk;
}

int run_baselines(const std::string& out_path) {
    json doc;

    // (a) symmetric linear weights: equal distance implies equal weight,
    //     where the asymmetric condition demands a strict preference.
    const opdyn::LinearSymmetric lin(0.6, 0.5);
    const double xi = 0.1, xj = 0.5, xd = -0.3;
    const double ca = lin(xi, xj), cb = lin(xi, xd);
    std::cout << "(a) linear-symmetric(beta=0.6, gamma=0.5)\n"
              << "    witness (x_i, x_j, x_d) = (0.1, 0.5, -0.3): "
              << "c(x_i,x_j) = " << ca << ", c(x_i,x_d) = " << cb
              << " -> equal weights where item 7a-2 demands strict inequality\n";
    doc["linear_symmetric"] = {{"x_i", xi}, {"x_j", xj}, {"x_d", xd},
                               {"c_j", ca}, {"c_d", cb}};

    // (b) bounded-confidence indicator with the default band
    const auto hk = opdyn::hk_equal_weight_witness(-0.5, 0.5, 1.0);
    std::cout << "(b) hk-indicator(eps_lo=-0.5, eps_hi=0.5, a=1)\n"
              << "    band condition 0.4 < min(eps_hi, -eps_lo): "
              << (hk.band_condition ? "satisfied" : "not satisfied") << "\n"
              << "    witness (x_i, x_j, x_d) = (0.1, 0.5, -0.3): weights "
              << hk.w_h << ", " << hk.w_j
              << " -> equal weights where item 7a-2 demands strict inequality\n";
    doc["hk_indicator"] = {{"x_i", hk.x_i},
                           {"x_j", hk.x_h},
                           {"x_d", hk.x_j},
                           {"c_j", hk.w_h},
                           {"c_d", hk.w_j},
                           {"band_condition", hk.band_condition}};

    // (c) biased assimilation at the neutral opinion: the coefficient on
    //     x_j does not depend on x_j, so no asymmetry is expressed.
    const double base = opdyn::eval_dandekar_step(1.0, 1.0, 2.0, 0.5, 0.0);
    const double lo = opdyn::eval_dandekar_step(1.0, 1.0, 2.0, 0.5, 0.1);
    const double hi = opdyn::eval_dandekar_step(1.0, 1.0, 2.0, 0.5, 0.9);
    const double coef_lo = (lo - base) / 0.1;
    const double coef_hi = (hi - base) / 0.9;
    std::cout << "(c) biased assimilation, x_i = 0.5, w_ii = w_ij = 1, b = 2\n"
              << "    step outputs: x_j=0.1 -> " << lo << ", x_j=0.9 -> " << hi << "\n"
              << "    coefficient on x_j: " << coef_lo << " at x_j=0.1, " << coef_hi
              << " at x_j=0.9 -> independent of x_j\n";
    doc["dandekar"] = {{"x_i", 0.5},
                       {"w_ii", 1.0},
                       {"w_ij", 1.0},
                       {"b", 2.0},
                       {"out_01", lo},
                       {"out_09", hi},
                       {"coef_01", coef_lo},
                       {"coef_09", coef_hi}};

    if (!out_path.empty() && !write_file(out_path, doc.dump(2) + "\n")) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitConfig;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Opinion evolution with asymmetric cognitive bias"};
    app.require_subcommand(1);

    SimulateOptions sim;
    auto* simulate = app.add_subcommand("simulate", "Run an experiment from a JSON config");
    simulate->add_option("--config", sim.config_path, "Experiment config (JSON)")
        ->required();
    simulate->add_option("--out-dir", sim.out_dir, "Output directory (default .)");

    CheckOptions chk;
    auto* check = app.add_subcommand("check", "Check bias conditions on a family");
    check->add_option("--family", chk.family, "Family name")->required();
    check->add_option("--params", chk.params, "Family parameters, k=v,...");
    check->add_option("--which", chk.which,
                      "confirmation | negativity | theorem1 | theorem2")
        ->required();
    check->add_option("--resolution", chk.resolution, "Grid resolution (odd, default 41)");
    check->add_option("--orientation", chk.orientation,
                      "Midpoint-item orientation: as-written | corrected")
        ->check(CLI::IsMember({"as-written", "corrected"}));
    check->add_option("--tol", chk.tol, "Distance-hypothesis tolerance (default 0)");
    check->add_option("--exclusion-band", chk.exclusion_band,
                      "Half-width around 0 skipped for strict-sign items");
    check->add_option("--witness-cap", chk.witness_cap,
                      "Max recorded witnesses per item, 0 = unlimited");
    check->add_option("--out", chk.out_path, "Report path (default: stdout)");

    SurfaceOptions surf;
    auto* surface = app.add_subcommand("surface", "Export a weight surface as CSV");
    surface->add_option("--family", surf.family, "Family name")->required();
    surface->add_option("--params", surf.params, "Family parameters, k=v,...");
    surface->add_option("--resolution", surf.resolution, "Points per axis (>= 2)");
    surface->add_option("--out", surf.out_path, "Output CSV path")->required();

    std::string baselines_out;
    auto* baselines =
        app.add_subcommand("baselines", "Demonstrate the symmetric-baseline failures");
    baselines->add_option("--out", baselines_out, "Also write the values as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (simulate->parsed()) return run_simulate(sim);
        if (check->parsed()) return run_check(chk);
        if (surface->parsed()) return run_surface(surf);
        if (baselines->parsed()) return run_baselines(baselines_out);
    } catch (const opdyn::InfeasibleNormalization& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const opdyn::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const opdyn::EdgeListError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
