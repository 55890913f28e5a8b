// SPDX-License-Identifier: Apache-2.0
#include "irssim/protocol.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

#include "irssim/overhead.hpp"
#include "irssim/rng.hpp"

namespace irssim {

void validate(const BlockageArea& blockage) {
    if (!(blockage.diameter_m > 0.0)) {
        throw std::invalid_argument("blockage diameter must be positive");
    }
}

void validate(const ProtocolConfig& cfg) {
    if (!(cfg.gamma_thr_linear > 0.0)) {
        throw std::invalid_argument("SNR threshold must be positive");
    }
    if (!(cfg.t_loc_s > 0.0) || cfg.t_irs_s < 0.0 || !(cfg.t_coh_s > 0.0) ||
        !(cfg.t_sym_s > 0.0) || !(cfg.time_step_s > 0.0)) {
        throw std::invalid_argument("protocol times must be positive");
    }
    if (cfg.time_step_s > cfg.t_coh_s / 10.0) {
        throw std::invalid_argument("time step must not exceed a tenth of the coherence time");
    }
    if (cfg.n_plt < 1) {
        throw std::invalid_argument("pilot count must be at least 1");
    }
    if (cfg.estimate_window < 1) {
        throw std::invalid_argument("estimate window must be at least 1");
    }
    if (cfg.delta_inflation_m < 0.0) {
        throw std::invalid_argument("illumination inflation must be nonnegative");
    }
}

const char* to_string(EventKind kind) {
    switch (kind) {
        case EventKind::Localize: return "localize";
        case EventKind::Reconfigure: return "reconfigure";
        case EventKind::Estimate: return "estimate";
        case EventKind::ThresholdCrossed: return "threshold_crossed";
        case EventKind::Exit: return "exit";
    }
    return "unknown";
}

MobilitySegment sample_crossing(const BlockageArea& blockage, double speed_m_per_s,
                                std::uint64_t rng_seed) {
    validate(blockage);
    if (!(speed_m_per_s > 0.0)) {
        throw std::invalid_argument("speed must be positive");
    }
    Rng rng(rng_seed);
    const double radius = blockage.diameter_m / 2.0;
    MobilitySegment segment;
    segment.speed_m_per_s = speed_m_per_s;
    do {
        const double alpha = rng.uniform(0.0, kTwoPi);
        const double beta = rng.uniform(0.0, kTwoPi);
        segment.entry = {blockage.center.x + radius * std::cos(alpha),
                         blockage.center.y + radius * std::sin(alpha), blockage.center.z};
        segment.exit = {blockage.center.x + radius * std::cos(beta),
                        blockage.center.y + radius * std::sin(beta), blockage.center.z};
    } while (distance(segment.entry, segment.exit) == 0.0);
    return segment;
}

Point3 mu_position(const MobilitySegment& segment, double t_s) {
    const double duration = segment.duration_s();
    if (t_s < 0.0 || t_s > duration * (1.0 + 1e-12)) {
        throw std::out_of_range("time outside the crossing window");
    }
    const double chord = distance(segment.entry, segment.exit);
    const double f = segment.speed_m_per_s * t_s / chord;
    return segment.entry + f * (segment.exit - segment.entry);
}

LsEstimate ls_estimate(const std::vector<std::complex<double>>& pilot_symbols,
                       const std::vector<std::complex<double>>& received) {
    if (pilot_symbols.empty() || pilot_symbols.size() != received.size()) {
        throw std::invalid_argument("pilot and receive vectors must have equal nonzero length");
    }
    double energy = 0.0;
    std::complex<double> correlation{0.0, 0.0};
    for (std::size_t k = 0; k < pilot_symbols.size(); ++k) {
        energy += std::norm(pilot_symbols[k]);
        correlation += received[k] * std::conj(pilot_symbols[k]);
    }
    if (energy == 0.0) {
        throw std::invalid_argument("pilot sequence has zero energy");
    }
    LsEstimate out;
    out.h_e2e_hat = correlation / energy;
    for (std::size_t k = 0; k < pilot_symbols.size(); ++k) {
        out.residual += std::norm(received[k] - out.h_e2e_hat * pilot_symbols[k]);
    }
    return out;
}

namespace {

enum class LoopState { Localizing, Reconfiguring, Tracking };

} // namespace

ProtocolTrace run_protocol(const LinkScenario& scenario, const BlockageArea& blockage,
                           const IlluminationSpec& illum, const ProtocolConfig& cfg,
                           const MobilitySegment& segment) {
    validate(blockage);
    validate(cfg);
    validate(scenario.radio);

    const double dt = cfg.time_step_s;
    const double duration = segment.duration_s();
    const double eps = dt * 1e-9;
    const double noise_power = scenario.radio.noise_power_w();
    const double pilot_amp = std::sqrt(scenario.radio.tx_power_w);

    Rng rng(cfg.rng_seed);
    ProtocolTrace trace;

    LoopState state = LoopState::Localizing;
    double phase_end = cfg.t_loc_s;
    double epoch_start = 0.0; // reference for the current update period
    Point3 localized_pos;
    PhaseProfile profile;
    bool has_profile = false;
    double next_estimate = std::numeric_limits<double>::infinity();
    std::deque<double> estimated_snrs;

    auto tracked_snr = [&](const Point3& pos) {
        return reflected_field(scenario.panel, profile, scenario.bs, pos, scenario.radio,
                               scenario.carrier, scenario.field_options)
            .snr_linear;
    };
    auto event_snr_db = [&](const Point3& pos) {
        return has_profile ? snr_to_db(tracked_snr(pos)) : kSnrFloorDb;
    };

    auto reconfigure_at = [&](double t) {
        IlluminationSpec spec;
        spec.center = localized_pos;
        spec.delta_m = illum.delta_m + cfg.delta_inflation_m;
        profile = wide_profile(scenario.panel, scenario.bs, spec, scenario.carrier);
        has_profile = true;
        const Point3 pos = mu_position(segment, t);
        trace.events.push_back({t, EventKind::Reconfigure, pos, event_snr_db(pos)});
        next_estimate = t; // estimation cadence anchored at the reconfiguration
        estimated_snrs.clear();
        state = LoopState::Tracking;
    };

    auto run_estimate = [&](double t) {
        const Point3 pos = mu_position(segment, t);
        const auto coeffs =
            build_channel_coefficients(scenario.panel, scenario.bs, pos, scenario.radio,
                                       scenario.carrier);
        const std::complex<double> h = end_to_end_channel(coeffs, profile);
        std::vector<std::complex<double>> pilots(static_cast<std::size_t>(cfg.n_plt),
                                                 {pilot_amp, 0.0});
        std::vector<std::complex<double>> received(pilots.size());
        for (std::size_t k = 0; k < pilots.size(); ++k) {
            received[k] = h * pilots[k] + rng.complex_normal(noise_power);
        }
        const LsEstimate est = ls_estimate(pilots, received);
        estimated_snrs.push_back(std::norm(est.h_e2e_hat) * scenario.radio.tx_power_w /
                                 noise_power);
        while (estimated_snrs.size() > static_cast<std::size_t>(cfg.estimate_window)) {
            estimated_snrs.pop_front();
        }
        trace.events.push_back({t, EventKind::Estimate, pos, event_snr_db(pos)});
    };

    const auto n_steps = static_cast<std::size_t>(std::floor(duration / dt + eps));
    for (std::size_t k = 0; k <= n_steps; ++k) {
        const double t = static_cast<double>(k) * dt;

        if (state == LoopState::Localizing && t >= phase_end - eps) {
            localized_pos = mu_position(segment, t); // perfect fix at completion time
            trace.events.push_back(
                {t, EventKind::Localize, localized_pos, event_snr_db(localized_pos)});
            if (cfg.t_irs_s > 0.0) {
                state = LoopState::Reconfiguring;
                phase_end = t + cfg.t_irs_s;
            } else {
                reconfigure_at(t);
            }
        } else if (state == LoopState::Reconfiguring && t >= phase_end - eps) {
            reconfigure_at(t);
        }

        if (state != LoopState::Tracking) {
            continue;
        }
        while (next_estimate <= t + eps) {
            run_estimate(next_estimate);
            next_estimate += cfg.t_coh_s;
        }

        const Point3 pos = mu_position(segment, t);
        const double true_snr = tracked_snr(pos);
        double gamma = true_snr;
        if (cfg.snr_tracking == SnrTracking::EstimateWindow && !estimated_snrs.empty()) {
            gamma = 0.0;
            for (double g : estimated_snrs) {
                gamma += g;
            }
            gamma /= static_cast<double>(estimated_snrs.size());
        }
        if (gamma < cfg.gamma_thr_linear) {
            trace.events.push_back({t, EventKind::ThresholdCrossed, pos, snr_to_db(gamma)});
            trace.t_upd_samples_s.push_back(t - epoch_start);
            epoch_start = t;
            state = LoopState::Localizing;
            phase_end = t + cfg.t_loc_s;
            next_estimate = std::numeric_limits<double>::infinity();
        }
    }

    if (state == LoopState::Tracking) {
        trace.t_upd_samples_s.push_back(duration - epoch_start);
    }
    const Point3 end_pos = mu_position(segment, duration);
    trace.events.push_back({duration, EventKind::Exit, end_pos, event_snr_db(end_pos)});

    if (trace.t_upd_samples_s.empty()) {
        trace.mean_t_upd_s = 0.0;
        trace.overhead_fraction = 1.0;
    } else {
        double sum = 0.0;
        for (double sample : trace.t_upd_samples_s) {
            sum += sample;
        }
        trace.mean_t_upd_s = sum / static_cast<double>(trace.t_upd_samples_s.size());
        if (trace.mean_t_upd_s > cfg.t_loc_s) {
            OverheadParams p;
            p.n_plt = cfg.n_plt;
            p.t_sym_s = cfg.t_sym_s;
            p.t_coh_s = cfg.t_coh_s;
            p.t_loc_s = cfg.t_loc_s;
            p.t_upd_s = trace.mean_t_upd_s;
            trace.overhead_fraction = overhead_proposed(p);
        } else {
            trace.overhead_fraction = 1.0;
        }
    }
    return trace;
}

} // namespace irssim
