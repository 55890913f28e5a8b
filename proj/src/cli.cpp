// SPDX-License-Identifier: Apache-2.0
#include "irssim/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "irssim/artifacts.hpp"
#include "irssim/design.hpp"
#include "irssim/experiments.hpp"
#include "irssim/scenario.hpp"

namespace irssim {

namespace {

namespace fs = std::filesystem;

struct CommonOptions {
    std::string config_path;
    std::string out_dir = "out";
    std::uint64_t seed = 0;
    bool seed_set = false;
    double grid_spacing_m = 0.0;
    bool enable_28ghz = false;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--config", opt.config_path, "scenario config file (key = value lines)");
    cmd->add_option("--out", opt.out_dir, "output directory")->capture_default_str();
    cmd->add_option("--seed", opt.seed, "override protocol.rng_seed")
        ->each([&opt](const std::string&) { opt.seed_set = true; });
    cmd->add_option("--grid-spacing-m", opt.grid_spacing_m,
                    "override disc sampling spacing (meters)");
    cmd->add_flag("--enable-28ghz", opt.enable_28ghz,
                  "allow carriers above 10 GHz (large element counts)");
}

Scenario resolve_scenario(const CommonOptions& opt) {
    Scenario scenario =
        opt.config_path.empty() ? default_scenario() : load_scenario_file(opt.config_path);
    if (opt.seed_set) {
        scenario.protocol.rng_seed = opt.seed;
    }
    if (opt.grid_spacing_m > 0.0) {
        scenario.grid_spacing_m = opt.grid_spacing_m;
    }
    if (scenario.carrier.frequency_hz >= 1e10 && !opt.enable_28ghz) {
        throw std::invalid_argument(
            "carriers above 10 GHz produce very large element counts; pass --enable-28ghz");
    }
    return scenario;
}

std::string join_args(const std::vector<std::string>& args) {
    std::string out = "irssim";
    for (const std::string& a : args) {
        out += ' ';
        out += a;
    }
    return out;
}

std::string out_path(const CommonOptions& opt, const std::string& name) {
    return (fs::path(opt.out_dir) / name).string();
}

Axis axis_from_string(const std::string& name) {
    if (name == "x") {
        return Axis::X;
    }
    if (name == "y") {
        return Axis::Y;
    }
    if (name == "z") {
        return Axis::Z;
    }
    throw std::invalid_argument("axis must be x, y, or z");
}

int cmd_snr_sweep(const CommonOptions& opt, const std::string& cmdline,
                  const std::string& axis_name, double min_m, double max_m, double step_m,
                  const std::string& profile_name, double delta_m) {
    const Scenario scenario = resolve_scenario(opt);
    const auto points = snr_sweep(scenario, axis_from_string(axis_name), min_m, max_m, step_m,
                                  profile_kind_from_string(profile_name), delta_m);
    CsvBuilder csv({"displacement_m", "snr_db"});
    for (const SweepPoint& p : points) {
        csv.cell(p.displacement_m).cell(p.snr_db);
        csv.end_row();
    }
    csv.write(out_path(opt, "sweep.csv"));
    write_manifest(opt.out_dir, cmdline, scenario.protocol.rng_seed, echo_config(scenario));
    return 0;
}

int cmd_snr_map(const CommonOptions& opt, const std::string& cmdline,
                const std::string& axis_u, const std::string& axis_v, double span_u,
                double span_v, double step_m, const std::string& profile_name, double delta_m) {
    const Scenario scenario = resolve_scenario(opt);
    if (!(step_m > 0.0) || !(span_u > 0.0) || !(span_v > 0.0)) {
        throw std::invalid_argument("spans and step must be positive");
    }
    const ProfileKind kind = profile_kind_from_string(profile_name);
    const PhaseProfile profile = design_profile(scenario, kind, delta_m);
    const Point3 center = profile_center(scenario, kind);

    GridSpec spec;
    spec.axis_u = axis_from_string(axis_u);
    spec.axis_v = axis_from_string(axis_v);
    spec.step_u_m = step_m;
    spec.step_v_m = step_m;
    spec.n_u = static_cast<std::size_t>(std::floor(span_u / step_m)) + 1;
    spec.n_v = static_cast<std::size_t>(std::floor(span_v / step_m)) + 1;
    spec.origin = center + (-0.5 * span_u) * axis_unit(spec.axis_u) +
                  (-0.5 * span_v) * axis_unit(spec.axis_v);

    const SnrGrid grid = snr_map(scenario.panel, profile, scenario.bs, spec, scenario.radio,
                                 scenario.carrier, scenario.field_options);
    write_snr_grid_csv(out_path(opt, "map.csv"), grid);

    double lo = kSnrFloorDb;
    double hi = kSnrFloorDb + 1.0;
    bool any = false;
    for (double db : grid.snr_db) {
        if (db > kSnrFloorDb) {
            lo = any ? std::min(lo, db) : db;
            hi = any ? std::max(hi, db) : db + 1e-9;
            any = true;
        }
    }
    write_snr_grid_pgm(out_path(opt, "map.pgm"), grid, lo, hi);
    write_profile_csv(out_path(opt, "profile.csv"), scenario.panel, profile);
    write_manifest(opt.out_dir, cmdline, scenario.protocol.rng_seed, echo_config(scenario));
    return 0;
}

int cmd_overhead_vs_snr(const CommonOptions& opt, const std::string& cmdline,
                        const std::vector<double>& gamma_thr_db,
                        const std::vector<double>& delta_m, int n_seeds) {
    const Scenario scenario = resolve_scenario(opt);
    const auto rows = overhead_vs_snr(scenario, gamma_thr_db, delta_m, n_seeds);

    CsvBuilder csv({"gamma_thr_db", "delta_m", "reconfig_overhead", "total_overhead",
                    "onoff_overhead", "sparsity_overhead_log2", "sparsity_overhead_ln",
                    "codebook_overhead", "maxmin_snr_db"});
    for (const OverheadRow& row : rows) {
        csv.cell(row.gamma_thr_db)
            .cell(row.delta_m)
            .cell(row.reconfig_overhead)
            .cell(row.total_overhead)
            .cell(row.onoff_overhead)
            .cell(row.sparsity_overhead_log2)
            .cell(row.sparsity_overhead_ln)
            .cell(row.codebook_overhead)
            .cell(row.maxmin_snr_db);
        csv.end_row();
    }
    csv.write(out_path(opt, "overhead_vs_snr.csv"));

    write_overhead_table_csv(out_path(opt, "benchmarks.csv"), scenario.overhead_params());
    write_manifest(opt.out_dir, cmdline, scenario.protocol.rng_seed, echo_config(scenario));
    return 0;
}

int cmd_min_power(const CommonOptions& opt, const std::string& cmdline,
                  const std::vector<double>& d_blk_m,
                  const std::vector<std::string>& delta_policy) {
    const Scenario scenario = resolve_scenario(opt);
    const MinPowerResult result = min_power(scenario, d_blk_m, delta_policy);

    std::vector<std::string> columns = {"d_blk_m"};
    for (const std::string& label : result.policy_labels) {
        columns.push_back("min_power_dbm_" + label);
    }
    columns.push_back("uniform_bound_dbm");
    columns.push_back("focus_bound_dbm");

    CsvBuilder csv(columns);
    for (std::size_t i = 0; i < result.d_blk_m.size(); ++i) {
        csv.cell(result.d_blk_m[i]);
        for (double dbm : result.min_power_dbm[i]) {
            csv.cell(dbm);
        }
        csv.cell(result.uniform_bound_dbm[i]);
        csv.cell(result.focus_bound_dbm[i]);
        csv.end_row();
    }
    csv.write(out_path(opt, "min_power.csv"));
    write_manifest(opt.out_dir, cmdline, scenario.protocol.rng_seed, echo_config(scenario));
    return 0;
}

int cmd_protocol_sim(const CommonOptions& opt, const std::string& cmdline, double delta_m) {
    const Scenario scenario = resolve_scenario(opt);
    if (!scenario.blockage_diameter_set) {
        throw std::invalid_argument("blockage.diameter_m is required for this command");
    }
    const MobilitySegment segment = sample_crossing(
        scenario.blockage, scenario.mu_speed_m_per_s, scenario.protocol.rng_seed);
    LinkScenario link{scenario.panel, scenario.bs, scenario.radio, scenario.carrier,
                      scenario.field_options};
    IlluminationSpec illum = scenario.illum;
    if (delta_m >= 0.0) {
        illum.delta_m = delta_m;
    }
    const ProtocolTrace trace =
        run_protocol(link, scenario.blockage, illum, scenario.protocol, segment);

    write_trace_csv(out_path(opt, "trace.csv"), trace);

    std::string summary;
    summary += "events = " + std::to_string(trace.events.size()) + "\n";
    summary += "t_upd_samples = " + std::to_string(trace.t_upd_samples_s.size()) + "\n";
    summary += "mean_t_upd_s = " + format_double(trace.mean_t_upd_s) + "\n";
    summary += "overhead_fraction = " + format_double(trace.overhead_fraction) + "\n";
    summary += "crossing_s = " + format_double(segment.duration_s()) + "\n";
    write_text_file(out_path(opt, "summary.txt"), summary);
    write_manifest(opt.out_dir, cmdline, scenario.protocol.rng_seed, echo_config(scenario));
    return 0;
}

int cmd_verify(const CommonOptions& opt, const std::string& cmdline) {
    const Scenario scenario = resolve_scenario(opt);
    const VerifyReport report = run_verification(scenario);
    const std::string text = report.text();
    std::cout << text;
    write_text_file(out_path(opt, "verify_report.txt"), text);
    write_manifest(opt.out_dir, cmdline, scenario.protocol.rng_seed, echo_config(scenario));
    return report.all_ok ? 0 : 2;
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"IRS-assisted downlink illumination and overhead simulator"};
    app.require_subcommand(1);

    const std::string cmdline = join_args(args);

    CommonOptions sweep_opt;
    std::string sweep_axis = "x";
    double sweep_min = -20.0;
    double sweep_max = 20.0;
    double sweep_step = 0.05;
    std::string sweep_profile = "focus";
    double sweep_delta = -1.0;
    auto* sweep = app.add_subcommand("snr-sweep", "1-D SNR sweep through the beam center");
    add_common(sweep, sweep_opt);
    sweep->add_option("--axis", sweep_axis, "sweep axis: x, y, or z")->capture_default_str();
    sweep->add_option("--min", sweep_min, "start displacement, m")->capture_default_str();
    sweep->add_option("--max", sweep_max, "end displacement, m")->capture_default_str();
    sweep->add_option("--step", sweep_step, "displacement step, m")->capture_default_str();
    sweep->add_option("--profile", sweep_profile, "focus, wide, or full")->capture_default_str();
    sweep->add_option("--delta-m", sweep_delta,
                      "illumination width for wide profiles (default: config illum.delta_m)");

    CommonOptions map_opt;
    std::string map_axis_u = "x";
    std::string map_axis_v = "y";
    double map_span_u = 30.0;
    double map_span_v = 30.0;
    double map_step = 0.25;
    std::string map_profile = "focus";
    double map_delta = -1.0;
    auto* map_cmd = app.add_subcommand("snr-map", "2-D SNR heatmap around the beam center");
    add_common(map_cmd, map_opt);
    map_cmd->add_option("--axis-u", map_axis_u, "first grid axis")->capture_default_str();
    map_cmd->add_option("--axis-v", map_axis_v, "second grid axis")->capture_default_str();
    map_cmd->add_option("--span-u", map_span_u, "grid extent along u, m")->capture_default_str();
    map_cmd->add_option("--span-v", map_span_v, "grid extent along v, m")->capture_default_str();
    map_cmd->add_option("--step", map_step, "grid step, m")->capture_default_str();
    map_cmd->add_option("--profile", map_profile, "focus, wide, or full")->capture_default_str();
    map_cmd->add_option("--delta-m", map_delta, "illumination width for wide profiles");

    CommonOptions ovh_opt;
    std::vector<double> ovh_gamma = {0.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0};
    std::vector<double> ovh_delta = {0.0, 8.0};
    int ovh_seeds = 200;
    auto* ovh = app.add_subcommand("overhead-vs-snr",
                                   "Monte Carlo overhead vs. SNR requirement");
    add_common(ovh, ovh_opt);
    ovh->add_option("--gamma-thr-db", ovh_gamma, "SNR requirements, dB")->capture_default_str();
    ovh->add_option("--delta-m", ovh_delta, "illumination widths, m")->capture_default_str();
    ovh->add_option("--n-seeds", ovh_seeds, "crossings per point")->capture_default_str();

    CommonOptions pow_opt;
    std::vector<double> pow_d_blk = {2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 16.0};
    std::vector<std::string> pow_policy = {"0", "2", "4"};
    auto* pow_cmd = app.add_subcommand("min-power",
                                       "minimum transmit power vs. blockage diameter");
    add_common(pow_cmd, pow_opt);
    pow_cmd->add_option("--d-blk-m", pow_d_blk, "blockage diameters, m")->capture_default_str();
    pow_cmd->add_option("--delta-policy", pow_policy,
                        "illumination widths in m, or 'blk' for the full diameter")
        ->capture_default_str();

    CommonOptions sim_opt;
    double sim_delta = -1.0;
    auto* sim = app.add_subcommand("protocol-sim", "simulate one blockage crossing");
    add_common(sim, sim_opt);
    sim->add_option("--delta-m", sim_delta, "illumination width (default: config illum.delta_m)");

    CommonOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "run the model self-checks");
    add_common(verify, verify_opt);

    std::vector<const char*> argv;
    argv.push_back("irssim");
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (sweep->parsed()) {
            return cmd_snr_sweep(sweep_opt, cmdline, sweep_axis, sweep_min, sweep_max,
                                 sweep_step, sweep_profile, sweep_delta);
        }
        if (map_cmd->parsed()) {
            return cmd_snr_map(map_opt, cmdline, map_axis_u, map_axis_v, map_span_u, map_span_v,
                               map_step, map_profile, map_delta);
        }
        if (ovh->parsed()) {
            return cmd_overhead_vs_snr(ovh_opt, cmdline, ovh_gamma, ovh_delta, ovh_seeds);
        }
        if (pow_cmd->parsed()) {
            return cmd_min_power(pow_opt, cmdline, pow_d_blk, pow_policy);
        }
        if (sim->parsed()) {
            return cmd_protocol_sim(sim_opt, cmdline, sim_delta);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_opt, cmdline);
        }
        std::cerr << app.help();
        return 1;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends.
            std::cout << app.help();
            return 0;
        }
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace irssim
