// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>

#include "irssim/field.hpp"
#include "irssim/geometry.hpp"
#include "irssim/overhead.hpp"
#include "irssim/protocol.hpp"

namespace irssim {

/// Fully resolved experiment configuration.  Built from a flat key=value
/// file; every key has a documented default except blockage.diameter_m,
/// which individual commands require explicitly.
struct Scenario {
    CarrierConfig carrier;
    IrsPanel panel;
    RadioConfig radio;
    Point3 bs;
    Point3 mu;
    BlockageArea blockage;
    bool blockage_diameter_set = false;
    IlluminationSpec illum; // center defaults to the MU position
    ProtocolConfig protocol;
    double mu_speed_m_per_s = 0.75;
    double gamma_bar = 1.0; // reflection magnitude of the array model
    FieldOptions field_options;
    int n_pth = 5;
    int n_grd = 20;
    int n_cbk = 25;
    double c_const = 1.0;
    double grid_spacing_m = 0.0; // resolved; see disc_grid_spacing()

    /// Overhead parameters for this scenario; t_upd_s is left for callers.
    OverheadParams overhead_params() const;

    /// Disc sampling spacing: the configured value, or a quarter wavelength
    /// when the key is left at 0.
    double disc_grid_spacing() const;
};

/// Built-in defaults (the reference downlink scenario).
Scenario default_scenario();

/// Parses flat `key = value` text.  '#' starts a comment; blank lines are
/// ignored; unknown or duplicate keys and malformed values are rejected with
/// std::invalid_argument.  Keys carrying a _db/_dbm suffix are converted to
/// linear/watt units here, once.
Scenario parse_scenario(const std::string& text);

/// Loads and parses a scenario file.
Scenario load_scenario_file(const std::string& path);

/// Resolved configuration as the canonical key=value listing (used for run
/// manifests; parsing it back yields the same scenario).
std::string echo_config(const Scenario& scenario);

/// The documented key set with default values and one-line descriptions.
std::string config_reference();

} // namespace irssim
