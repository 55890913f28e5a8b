// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "irssim/scenario.hpp"

namespace irssim {

enum class ProfileKind { Focus, Wide, Full };

ProfileKind profile_kind_from_string(const std::string& name);

/// Designs the requested profile for the scenario.  Focus and wide
/// illumination are centered on the MU; full illumination spans the blockage
/// circle.  delta_m < 0 means "use the configured illumination width".
PhaseProfile design_profile(const Scenario& scenario, ProfileKind kind, double delta_m);

/// Center the displacement sweeps refer to (MU position, or the blockage
/// center for full illumination).
Point3 profile_center(const Scenario& scenario, ProfileKind kind);

struct SweepPoint {
    double displacement_m = 0.0;
    double snr_db = 0.0;
};

/// 1-D SNR sweep along a global axis through the profile center.
/// min > max yields an empty sweep.
std::vector<SweepPoint> snr_sweep(const Scenario& scenario, Axis axis, double min_m,
                                  double max_m, double step_m, ProfileKind kind,
                                  double delta_m);

/// Points of the absolute hexagonal lattice (spacing `spacing_m`, anchored at
/// the origin) that fall inside a disc of the given diameter.  Lattices for
/// growing diameters are nested, so disc minima are monotone in the diameter.
std::vector<std::pair<double, double>> hex_disc_offsets(double diameter_m, double spacing_m);

/// Minimum SNR over the blockage disc under a fixed profile.
double min_snr_over_disc(const Scenario& scenario, const PhaseProfile& profile,
                         const BlockageArea& blockage);

/// Minimum over the disc of the per-point focusing SNR bound; the best SNR
/// guaranteed everywhere when the panel may refocus instantaneously.
double min_gamma_max_over_disc(const Scenario& scenario, const BlockageArea& blockage);

struct OverheadRow {
    double gamma_thr_db = 0.0;
    double delta_m = 0.0;
    double reconfig_overhead = 0.0;
    double total_overhead = 0.0;
    double onoff_overhead = 0.0;
    double sparsity_overhead_log2 = 0.0;
    double sparsity_overhead_ln = 0.0;
    double codebook_overhead = 0.0;
    double maxmin_snr_db = 0.0;
};

/// Monte Carlo crossings for every (threshold, illumination width) pair.
/// Per-crossing seeds are the scenario seed plus the crossing index.
std::vector<OverheadRow> overhead_vs_snr(const Scenario& scenario,
                                         const std::vector<double>& gamma_thr_db,
                                         const std::vector<double>& delta_m, int n_seeds);

struct MinPowerResult {
    std::vector<std::string> policy_labels; ///< one per requested illumination policy
    std::vector<double> d_blk_m;
    /// min_power_dbm[i][j]: diameter i, policy j.
    std::vector<std::vector<double>> min_power_dbm;
    std::vector<double> uniform_bound_dbm; ///< idealized uniform redistribution
    std::vector<double> focus_bound_dbm;   ///< instantaneous refocusing
};

/// Minimum transmit power meeting the configured SNR requirement everywhere
/// on the disc, per diameter and illumination policy.  Policy tokens are
/// fixed widths in meters, or "blk" for a width equal to the diameter.
MinPowerResult min_power(const Scenario& scenario, const std::vector<double>& d_blk_m,
                         const std::vector<std::string>& delta_policy);

struct VerifyCheck {
    std::string name;
    std::string status; // PASS / FAIL / SKIP
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_ok = true;

    std::string text() const;
};

/// Model self-checks: array/scattering consistency, focusing alignment and
/// optimality, power linearity, global phase invariance, far-field agreement,
/// and element-grid geometry.
VerifyReport run_verification(const Scenario& scenario);

} // namespace irssim
