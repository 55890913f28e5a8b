// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "irssim/design.hpp"
#include "irssim/field.hpp"
#include "irssim/geometry.hpp"

namespace irssim {

/// Circular region without direct coverage, served only via the panel.
struct BlockageArea {
    Point3 center;
    double diameter_m = 0.0;

    double area_m2() const { return kPi * (diameter_m / 2.0) * (diameter_m / 2.0); }
};

void validate(const BlockageArea& blockage);

/// One straight crossing of the blockage circle at constant speed.
struct MobilitySegment {
    Point3 entry;
    Point3 exit;
    double speed_m_per_s = 0.0;

    double duration_s() const { return distance(entry, exit) / speed_m_per_s; }
};

/// How the tracked average SNR is obtained while the user moves.
enum class SnrTracking {
    TrueLos,        ///< noise-free SNR at the true user position (default)
    EstimateWindow, ///< sliding-window mean over pilot-based channel estimates
};

/// Timing, threshold, and RNG parameters of the reconfiguration loop.
struct ProtocolConfig {
    double gamma_thr_linear = 10.0;
    double t_loc_s = 0.0;
    double t_irs_s = 0.0;
    double t_coh_s = 0.024;
    int n_plt = 3;
    double t_sym_s = 1.0 / 15000.0;
    double time_step_s = 0.002;
    std::uint64_t rng_seed = 1;
    SnrTracking snr_tracking = SnrTracking::TrueLos;
    int estimate_window = 8;       ///< window length for EstimateWindow mode
    double delta_inflation_m = 0.0; ///< widening applied to the illumination
                                    ///< square to absorb localization error
};

void validate(const ProtocolConfig& cfg);

enum class EventKind { Localize, Reconfigure, Estimate, ThresholdCrossed, Exit };

const char* to_string(EventKind kind);

struct ProtocolEvent {
    double timestamp_s = 0.0;
    EventKind kind = EventKind::Localize;
    Point3 mu_position;
    double snr_db = 0.0;
};

/// Time-ordered event log of one crossing, with the measured update periods
/// and the resulting air-time overhead fraction.
struct ProtocolTrace {
    std::vector<ProtocolEvent> events;
    std::vector<double> t_upd_samples_s;
    double overhead_fraction = 0.0;
    double mean_t_upd_s = 0.0;
};

/// Draws a chord of the blockage circle: entry and exit points independently
/// uniform on the boundary at the center's height; zero-length chords are
/// redrawn.  Deterministic per seed.
MobilitySegment sample_crossing(const BlockageArea& blockage, double speed_m_per_s,
                                std::uint64_t rng_seed);

/// Position on the segment at time t since entry.  Throws std::out_of_range
/// outside the crossing window.
Point3 mu_position(const MobilitySegment& segment, double t_s);

struct LsEstimate {
    std::complex<double> h_e2e_hat;
    double residual = 0.0;
};

/// Least-squares fit of the scalar end-to-end channel from pilot symbols.
LsEstimate ls_estimate(const std::vector<std::complex<double>>& pilot_symbols,
                       const std::vector<std::complex<double>>& received);

/// Everything the protocol loop needs about the link.
struct LinkScenario {
    IrsPanel panel;
    Point3 bs;
    RadioConfig radio;
    CarrierConfig carrier;
    FieldOptions field_options;
};

/// Runs the reconfiguration/estimation loop over one crossing.
///
/// On entering the area the user is localized (perfectly, after t_loc_s,
/// while continuing to move), the panel is reconfigured for wide illumination
/// of width illum.delta_m centered at the localized position, and the
/// end-to-end channel is then re-estimated once per coherence time.  When the
/// tracked SNR drops below the threshold the cycle restarts.  Update periods
/// are the intervals between consecutive localization starts; the final
/// tracking interval is closed by the crossing exit.
ProtocolTrace run_protocol(const LinkScenario& scenario, const BlockageArea& blockage,
                           const IlluminationSpec& illum, const ProtocolConfig& cfg,
                           const MobilitySegment& segment);

} // namespace irssim
