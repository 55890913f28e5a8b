// SPDX-License-Identifier: Apache-2.0
#include "irssim/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "irssim/artifacts.hpp"
#include "irssim/design.hpp"
#include "irssim/rng.hpp"

namespace irssim {

namespace {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double watt_to_dbm(double w) { return 10.0 * std::log10(w / 1e-3); }

void require_blockage(const Scenario& scenario) {
    if (!scenario.blockage_diameter_set) {
        throw std::invalid_argument("blockage.diameter_m is required for this command");
    }
}

Point3 disc_point(const BlockageArea& blockage, const std::pair<double, double>& offset) {
    return {blockage.center.x + offset.first, blockage.center.y + offset.second,
            blockage.center.z};
}

} // namespace

ProfileKind profile_kind_from_string(const std::string& name) {
    if (name == "focus") {
        return ProfileKind::Focus;
    }
    if (name == "wide") {
        return ProfileKind::Wide;
    }
    if (name == "full") {
        return ProfileKind::Full;
    }
    throw std::invalid_argument("unknown profile kind '" + name + "'");
}

PhaseProfile design_profile(const Scenario& scenario, ProfileKind kind, double delta_m) {
    switch (kind) {
        case ProfileKind::Focus:
            return focus_profile(scenario.panel, scenario.bs, scenario.mu, scenario.carrier);
        case ProfileKind::Wide: {
            IlluminationSpec spec = scenario.illum;
            if (delta_m >= 0.0) {
                spec.delta_m = delta_m;
            }
            return wide_profile(scenario.panel, scenario.bs, spec, scenario.carrier);
        }
        case ProfileKind::Full:
            require_blockage(scenario);
            return full_illumination_profile(scenario.panel, scenario.bs, scenario.blockage,
                                             scenario.carrier);
    }
    throw std::invalid_argument("unknown profile kind");
}

Point3 profile_center(const Scenario& scenario, ProfileKind kind) {
    return kind == ProfileKind::Full ? scenario.blockage.center : scenario.illum.center;
}

std::vector<SweepPoint> snr_sweep(const Scenario& scenario, Axis axis, double min_m,
                                  double max_m, double step_m, ProfileKind kind,
                                  double delta_m) {
    if (!(step_m > 0.0)) {
        throw std::invalid_argument("sweep step must be positive");
    }
    std::vector<SweepPoint> out;
    if (max_m < min_m) {
        return out; // empty range serializes as a header-only table
    }
    const PhaseProfile profile = design_profile(scenario, kind, delta_m);
    const Point3 center = profile_center(scenario, kind);
    const Point3 dir = axis_unit(axis);

    const auto n = static_cast<std::size_t>(std::floor((max_m - min_m) / step_m + 1e-9)) + 1;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = min_m + static_cast<double>(i) * step_m;
        const Point3 obs = center + d * dir;
        const FieldSample s = reflected_field(scenario.panel, profile, scenario.bs, obs,
                                              scenario.radio, scenario.carrier,
                                              scenario.field_options);
        out.push_back({d, snr_to_db(s.snr_linear)});
    }
    return out;
}

std::vector<std::pair<double, double>> hex_disc_offsets(double diameter_m, double spacing_m) {
    if (!(spacing_m > 0.0)) {
        throw std::invalid_argument("disc spacing must be positive");
    }
    const double radius = diameter_m / 2.0;
    const double row_height = spacing_m * std::sqrt(3.0) / 2.0;
    const double r2 = radius * radius;
    std::vector<std::pair<double, double>> out;
    const auto j_max = static_cast<long>(std::floor(radius / row_height));
    for (long j = -j_max; j <= j_max; ++j) {
        const double y = static_cast<double>(j) * row_height;
        const double x_shift = (j % 2 != 0) ? spacing_m / 2.0 : 0.0;
        const auto i_max = static_cast<long>(std::floor((radius + spacing_m) / spacing_m)) + 1;
        for (long i = -i_max; i <= i_max; ++i) {
            const double x = static_cast<double>(i) * spacing_m + x_shift;
            if (x * x + y * y <= r2) {
                out.emplace_back(x, y);
            }
        }
    }
    return out;
}

double min_snr_over_disc(const Scenario& scenario, const PhaseProfile& profile,
                         const BlockageArea& blockage) {
    validate(blockage);
    const auto offsets = hex_disc_offsets(blockage.diameter_m, scenario.disc_grid_spacing());
    double best = std::numeric_limits<double>::infinity();
    for (const auto& offset : offsets) {
        const FieldSample s =
            reflected_field(scenario.panel, profile, scenario.bs, disc_point(blockage, offset),
                            scenario.radio, scenario.carrier, scenario.field_options);
        best = std::min(best, s.snr_linear);
    }
    return best;
}

double min_gamma_max_over_disc(const Scenario& scenario, const BlockageArea& blockage) {
    validate(blockage);
    const auto offsets = hex_disc_offsets(blockage.diameter_m, scenario.disc_grid_spacing());
    double best = std::numeric_limits<double>::infinity();
    for (const auto& offset : offsets) {
        best = std::min(best, gamma_max(scenario.panel, scenario.bs,
                                        disc_point(blockage, offset), scenario.radio,
                                        scenario.carrier));
    }
    return best;
}

std::vector<OverheadRow> overhead_vs_snr(const Scenario& scenario,
                                         const std::vector<double>& gamma_thr_db,
                                         const std::vector<double>& delta_m, int n_seeds) {
    require_blockage(scenario);
    if (gamma_thr_db.empty() || delta_m.empty() || n_seeds < 1) {
        throw std::invalid_argument("threshold list, width list, and seed count must be nonempty");
    }

    const double maxmin_db = snr_to_db(min_gamma_max_over_disc(scenario, scenario.blockage));
    const OverheadParams base_params = scenario.overhead_params();

    LinkScenario link{scenario.panel, scenario.bs, scenario.radio, scenario.carrier,
                      scenario.field_options};

    std::vector<OverheadRow> rows;
    for (double delta : delta_m) {
        for (double thr_db : gamma_thr_db) {
            ProtocolConfig cfg = scenario.protocol;
            cfg.gamma_thr_linear = db_to_linear(thr_db);
            IlluminationSpec illum;
            illum.delta_m = delta;

            std::vector<ProtocolTrace> traces;
            traces.reserve(static_cast<std::size_t>(n_seeds));
            for (int i = 0; i < n_seeds; ++i) {
                const std::uint64_t seed = scenario.protocol.rng_seed + static_cast<std::uint64_t>(i);
                const MobilitySegment segment =
                    sample_crossing(scenario.blockage, scenario.mu_speed_m_per_s, seed);
                cfg.rng_seed = seed;
                traces.push_back(run_protocol(link, scenario.blockage, illum, cfg, segment));
            }
            const AverageOverhead avg = average_overhead(traces, base_params);

            OverheadRow row;
            row.gamma_thr_db = thr_db;
            row.delta_m = delta;
            row.reconfig_overhead = avg.reconfig_only;
            row.total_overhead = avg.total;
            row.onoff_overhead = overhead_onoff_dft(base_params);
            row.sparsity_overhead_log2 = overhead_sparsity(base_params, LogBase::Two);
            row.sparsity_overhead_ln = overhead_sparsity(base_params, LogBase::Natural);
            row.codebook_overhead = overhead_codebook(base_params);
            row.maxmin_snr_db = maxmin_db;
            rows.push_back(row);
        }
    }
    return rows;
}

MinPowerResult min_power(const Scenario& scenario, const std::vector<double>& d_blk_m,
                         const std::vector<std::string>& delta_policy) {
    if (d_blk_m.empty() || delta_policy.empty()) {
        throw std::invalid_argument("diameter list and illumination policy must be nonempty");
    }
    for (std::size_t i = 1; i < d_blk_m.size(); ++i) {
        if (!(d_blk_m[i] > d_blk_m[i - 1])) {
            throw std::invalid_argument("diameters must be strictly increasing");
        }
    }
    const double gamma_thr = scenario.protocol.gamma_thr_linear;
    const double spacing = scenario.disc_grid_spacing();

    // All minima are evaluated with unit transmit power; the required power
    // follows from the linearity of the SNR in the transmit power.
    Scenario unit = scenario;
    unit.radio.tx_power_w = 1.0;

    MinPowerResult result;
    result.d_blk_m = d_blk_m;
    result.min_power_dbm.assign(d_blk_m.size(), {});

    const double d_max = d_blk_m.back();
    const auto offsets_max = hex_disc_offsets(d_max, spacing);

    for (const std::string& token : delta_policy) {
        double fixed_delta = -1.0;
        if (token != "blk") {
            std::size_t consumed = 0;
            fixed_delta = std::stod(token, &consumed);
            if (consumed != token.size() || fixed_delta < 0.0) {
                throw std::invalid_argument("illumination policy token '" + token +
                                            "' is neither a nonnegative width nor 'blk'");
            }
            result.policy_labels.push_back("delta_" + token);
        } else {
            result.policy_labels.push_back("delta_blk");
        }

        if (fixed_delta >= 0.0) {
            // One profile serves every diameter: evaluate the largest disc
            // once and take nested-prefix minima.
            IlluminationSpec spec;
            spec.center = scenario.blockage.center;
            spec.delta_m = fixed_delta;
            const PhaseProfile profile =
                wide_profile(unit.panel, unit.bs, spec, unit.carrier);

            std::vector<double> gammas(offsets_max.size());
            BlockageArea area;
            area.center = scenario.blockage.center;
            area.diameter_m = d_max;
            for (std::size_t k = 0; k < offsets_max.size(); ++k) {
                gammas[k] = reflected_field(unit.panel, profile, unit.bs,
                                            disc_point(area, offsets_max[k]), unit.radio,
                                            unit.carrier, unit.field_options)
                                .snr_linear;
            }
            for (std::size_t i = 0; i < d_blk_m.size(); ++i) {
                const double r2 = d_blk_m[i] * d_blk_m[i] / 4.0;
                double best = std::numeric_limits<double>::infinity();
                for (std::size_t k = 0; k < offsets_max.size(); ++k) {
                    const auto& [x, y] = offsets_max[k];
                    if (x * x + y * y <= r2) {
                        best = std::min(best, gammas[k]);
                    }
                }
                if (!(best > 0.0)) {
                    throw std::runtime_error("disc contains a zero-SNR point");
                }
                result.min_power_dbm[i].push_back(watt_to_dbm(gamma_thr / best));
            }
        } else {
            for (std::size_t i = 0; i < d_blk_m.size(); ++i) {
                BlockageArea area;
                area.center = scenario.blockage.center;
                area.diameter_m = d_blk_m[i];
                const PhaseProfile profile =
                    full_illumination_profile(unit.panel, unit.bs, area, unit.carrier);
                const double best = min_snr_over_disc(unit, profile, area);
                if (!(best > 0.0)) {
                    throw std::runtime_error("disc contains a zero-SNR point");
                }
                result.min_power_dbm[i].push_back(watt_to_dbm(gamma_thr / best));
            }
        }
    }

    for (double d : d_blk_m) {
        BlockageArea area;
        area.center = scenario.blockage.center;
        area.diameter_m = d;
        const double uniform = gamma_uniform(unit.panel, unit.bs, unit.radio, unit.carrier,
                                             area.area_m2());
        result.uniform_bound_dbm.push_back(watt_to_dbm(gamma_thr / uniform));
        const double focus_floor = min_gamma_max_over_disc(unit, area);
        result.focus_bound_dbm.push_back(watt_to_dbm(gamma_thr / focus_floor));
    }
    return result;
}

std::string VerifyReport::text() const {
    std::ostringstream out;
    for (const VerifyCheck& check : checks) {
        out << check.status << " " << check.name;
        if (!check.detail.empty()) {
            out << " (" << check.detail << ")";
        }
        out << "\n";
    }
    out << (all_ok ? "verification passed" : "verification FAILED") << "\n";
    return out.str();
}

namespace {

std::string rel_err_detail(double err, double tol) {
    std::ostringstream out;
    out.precision(3);
    out << std::scientific << "max residual " << err << ", tolerance " << tol;
    return out.str();
}

PhaseProfile random_profile(std::size_t n, Rng& rng) {
    PhaseProfile p;
    p.phases_rad.reserve(n);
    for (std::size_t q = 0; q < n; ++q) {
        p.phases_rad.push_back(rng.uniform(-kPi, kPi));
    }
    return p;
}

} // namespace

VerifyReport run_verification(const Scenario& scenario) {
    VerifyReport report;
    auto add = [&report](const std::string& name, bool ok, const std::string& detail) {
        report.checks.push_back({name, ok ? "PASS" : "FAIL", detail});
        report.all_ok = report.all_ok && ok;
    };

    // Element grid geometry: coverage and centroid.
    {
        const auto& panel = scenario.panel;
        double cy = 0.0;
        double cz = 0.0;
        bool inside = true;
        for (const auto& [y, z] : panel.element_local_offsets) {
            cy += y;
            cz += z;
            inside = inside && std::abs(y) <= panel.side_y_m / 2.0 &&
                     std::abs(z) <= panel.side_z_m / 2.0;
        }
        cy /= static_cast<double>(panel.element_count);
        cz /= static_cast<double>(panel.element_count);
        const double centroid = std::hypot(cy, cz);
        add("element_grid", inside && centroid < 1e-12, rel_err_detail(centroid, 1e-12));
    }

    // Array model vs. scattering sum on random geometries and profiles.
    if (scenario.gamma_bar != 1.0) {
        report.checks.push_back({"model_consistency", "SKIP",
                                 "lossless array model requires field.gamma_bar = 1"});
    } else {
        Rng rng(12345);
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const CarrierConfig carrier = make_carrier(rng.uniform(1e9, 1e10));
            const double side = rng.uniform(0.15, 0.6);
            const IrsPanel panel =
                make_panel({0.0, rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)}, side, side,
                           carrier.wavelength_m / 2.0, carrier.wavelength_m / 2.0,
                           rng.uniform(0.3, 1.0));
            const Point3 bs{rng.uniform(5.0, 60.0), rng.uniform(-30.0, 30.0),
                            rng.uniform(1.0, 20.0)};
            const Point3 obs{rng.uniform(5.0, 60.0), rng.uniform(-30.0, 30.0),
                             rng.uniform(0.5, 10.0)};
            const PhaseProfile profile = random_profile(panel.element_count, rng);

            const FieldSample sample =
                reflected_field(panel, profile, bs, obs, scenario.radio, carrier, {});
            const auto coeffs = build_channel_coefficients(panel, bs, obs, scenario.radio,
                                                           carrier, scenario.gamma_bar);
            const std::complex<double> y = baseband_receive(
                coeffs, profile, {std::sqrt(scenario.radio.tx_power_w), 0.0}, {0.0, 0.0});
            const double rel = std::abs(std::norm(y) - sample.rx_power_w) /
                               std::max(sample.rx_power_w, 1e-300);
            worst = std::max(worst, rel);
        }
        add("model_consistency", worst <= 1e-10, rel_err_detail(worst, 1e-10));
    }

    // Focusing aligns every element contribution at the target.
    const PhaseProfile focus =
        focus_profile(scenario.panel, scenario.bs, scenario.mu, scenario.carrier);
    {
        const double kappa = scenario.carrier.wavenumber_rad_per_m;
        double worst = 0.0;
        const auto elements = element_positions(scenario.panel);
        for (std::size_t q = 0; q < elements.size(); ++q) {
            const double total = kappa * distance(scenario.bs, elements[q]) +
                                 kappa * distance(scenario.mu, elements[q]) +
                                 focus.phases_rad[q];
            worst = std::max(worst, std::abs(wrap_to_pi(total)));
        }
        add("focus_alignment", worst <= 1e-9, rel_err_detail(worst, 1e-9));
    }

    // No random profile may beat focusing at its own target.
    {
        const double focus_field =
            std::abs(reflected_field(scenario.panel, focus, scenario.bs, scenario.mu,
                                     scenario.radio, scenario.carrier, scenario.field_options)
                         .e_field);
        Rng rng(777);
        double best_other = 0.0;
        for (int trial = 0; trial < 200; ++trial) {
            const PhaseProfile profile = random_profile(scenario.panel.element_count, rng);
            best_other = std::max(
                best_other,
                std::abs(reflected_field(scenario.panel, profile, scenario.bs, scenario.mu,
                                         scenario.radio, scenario.carrier,
                                         scenario.field_options)
                             .e_field));
        }
        add("focus_optimality", best_other <= focus_field * (1.0 + 1e-12),
            "best random field " + format_double(best_other) + " vs focus " +
                format_double(focus_field));
    }

    // SNR is linear in transmit power and both directivities.
    {
        const Point3 obs = scenario.mu + Point3{1.0, 2.0, 0.1};
        const double base = reflected_field(scenario.panel, focus, scenario.bs, obs,
                                            scenario.radio, scenario.carrier,
                                            scenario.field_options)
                                .snr_linear;
        RadioConfig scaled = scenario.radio;
        scaled.tx_power_w *= 2.0;
        scaled.tx_directivity *= 3.0;
        scaled.rx_directivity *= 1.75;
        const double scaled_snr = reflected_field(scenario.panel, focus, scenario.bs, obs,
                                                  scaled, scenario.carrier,
                                                  scenario.field_options)
                                      .snr_linear;
        const double rel = std::abs(scaled_snr - base * 2.0 * 3.0 * 1.75) /
                           std::max(base * 10.5, 1e-300);
        add("power_linearity", rel <= 1e-12, rel_err_detail(rel, 1e-12));
    }

    // A common phase offset leaves the SNR unchanged.
    {
        PhaseProfile shifted = focus;
        for (double& phase : shifted.phases_rad) {
            phase += 1.2345;
        }
        const double a = reflected_field(scenario.panel, focus, scenario.bs, scenario.mu,
                                         scenario.radio, scenario.carrier,
                                         scenario.field_options)
                             .snr_linear;
        const double b = reflected_field(scenario.panel, shifted, scenario.bs, scenario.mu,
                                         scenario.radio, scenario.carrier,
                                         scenario.field_options)
                             .snr_linear;
        const double rel = std::abs(a - b) / std::max(a, 1e-300);
        add("global_phase_invariance", rel <= 1e-12, rel_err_detail(rel, 1e-12));
    }

    // Deep in the far field the focusing profile degenerates to the linear
    // phase gradient.
    {
        const double d_f = fraunhofer_distance(scenario.panel, scenario.carrier);
        const Point3 dir = scenario.mu - scenario.panel.center;
        const Point3 far_mu = scenario.panel.center + (5.0 * d_f / norm(dir)) * dir;
        const PhaseProfile far_focus =
            focus_profile(scenario.panel, scenario.bs, far_mu, scenario.carrier);
        const PhaseProfile linear = farfield_linear_profile(
            scenario.panel, incidence_angles(scenario.bs, scenario.panel),
            incidence_angles(far_mu, scenario.panel), scenario.carrier);
        const double snr_focus =
            snr_to_db(reflected_field(scenario.panel, far_focus, scenario.bs, far_mu,
                                      scenario.radio, scenario.carrier,
                                      scenario.field_options)
                          .snr_linear);
        const double snr_linear =
            snr_to_db(reflected_field(scenario.panel, linear, scenario.bs, far_mu,
                                      scenario.radio, scenario.carrier,
                                      scenario.field_options)
                          .snr_linear);
        const double diff = std::abs(snr_focus - snr_linear);
        add("farfield_agreement", diff <= 0.1, rel_err_detail(diff, 0.1));
    }

    return report;
}

} // namespace irssim
