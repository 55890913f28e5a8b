// SPDX-License-Identifier: Apache-2.0
#include "irssim/scenario.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "irssim/artifacts.hpp"

namespace irssim {

namespace {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double dbm_to_watt(double dbm) { return 1e-3 * std::pow(10.0, dbm / 10.0); }
double linear_to_db(double v) { return 10.0 * std::log10(v); }
double watt_to_dbm(double w) { return 10.0 * std::log10(w / 1e-3); }

struct KeyDoc {
    const char* key;
    const char* default_value;
    const char* doc;
};

// The full documented key set.  blockage.diameter_m has no usable default;
// commands that need it reject the sentinel.
const std::vector<KeyDoc>& key_docs() {
    static const std::vector<KeyDoc> docs = {
        {"carrier.frequency_hz", "3e9", "carrier frequency"},
        {"irs.center_x_m", "0", "panel center, global x"},
        {"irs.center_y_m", "50", "panel center, global y"},
        {"irs.center_z_m", "5", "panel center, global z"},
        {"irs.side_y_m", "0.5", "panel width along y"},
        {"irs.side_z_m", "0.5", "panel height along z"},
        {"irs.spacing_y_m", "0", "element spacing along y; 0 = half wavelength"},
        {"irs.spacing_z_m", "0", "element spacing along z; 0 = half wavelength"},
        {"irs.tau", "1", "field reflection magnitude in (0, 1]"},
        {"bs.x_m", "30", "base-station position"},
        {"bs.y_m", "0", "base-station position"},
        {"bs.z_m", "10", "base-station position"},
        {"mu.x_m", "20", "mobile-user position"},
        {"mu.y_m", "60", "mobile-user position"},
        {"mu.z_m", "1", "mobile-user position"},
        {"radio.tx_power_dbm", "10", "transmit power"},
        {"radio.tx_directivity_db", "12", "BS antenna directivity"},
        {"radio.rx_directivity_db", "0", "MU antenna directivity"},
        {"radio.noise_density_dbm_per_hz", "-174", "noise spectral density"},
        {"radio.bandwidth_hz", "2e7", "signal bandwidth"},
        {"radio.noise_figure_db", "6", "receiver noise figure"},
        {"radio.impedance_ohm", "376.730", "characteristic impedance"},
        {"field.exact_amplitudes", "false", "per-element amplitude distances"},
        {"field.compensated_sum", "false", "Kahan summation for very large panels"},
        {"field.gamma_bar", "1", "array-model reflection magnitude"},
        {"blockage.center_x_m", "20", "blockage circle center"},
        {"blockage.center_y_m", "60", "blockage circle center"},
        {"blockage.center_z_m", "1", "blockage circle center"},
        {"blockage.diameter_m", "0", "blockage circle diameter; no default, set > 0"},
        {"illum.delta_m", "0", "illumination square side"},
        {"protocol.gamma_thr_db", "10", "SNR requirement"},
        {"protocol.t_loc_s", "0", "localization time; 0 = sparsity pilot bound"},
        {"protocol.t_irs_s", "0", "reconfiguration time"},
        {"protocol.t_coh_s", "0.024", "channel coherence time"},
        {"protocol.n_plt", "3", "pilots per estimation"},
        {"protocol.t_sym_s", "6.666666666666667e-05", "pilot symbol duration (1/15 kHz)"},
        {"protocol.time_step_s", "0.002", "simulation step, at most t_coh/10"},
        {"protocol.rng_seed", "1", "base RNG seed"},
        {"protocol.speed_m_per_s", "0.75", "MU walking speed"},
        {"protocol.snr_tracking", "true_los", "true_los or estimate_window"},
        {"protocol.estimate_window", "8", "estimates averaged in estimate_window mode"},
        {"protocol.delta_inflation_m", "0", "illumination widening for localization error"},
        {"overhead.n_pth", "5", "dominant propagation paths"},
        {"overhead.n_grd", "20", "localization grid points"},
        {"overhead.n_cbk", "25", "codebook size"},
        {"overhead.c_const", "1", "compressed-sensing constant"},
        {"grid.spacing_m", "0", "disc sampling spacing; 0 = quarter wavelength"},
    };
    return docs;
}

class KeyValueReader {
public:
    explicit KeyValueReader(std::map<std::string, std::string> values)
        : values_(std::move(values)) {}

    double number(const std::string& key) {
        const std::string& raw = fetch(key);
        std::size_t consumed = 0;
        double value = 0.0;
        try {
            value = std::stod(raw, &consumed);
        } catch (const std::exception&) {
            throw std::invalid_argument("config key '" + key + "' has non-numeric value '" +
                                        raw + "'");
        }
        if (consumed != raw.size()) {
            throw std::invalid_argument("config key '" + key + "' has trailing characters in '" +
                                        raw + "'");
        }
        return value;
    }

    int integer(const std::string& key) {
        const double v = number(key);
        if (v != std::floor(v)) {
            throw std::invalid_argument("config key '" + key + "' must be an integer");
        }
        return static_cast<int>(v);
    }

    bool boolean(const std::string& key) {
        const std::string& raw = fetch(key);
        if (raw == "true" || raw == "1") {
            return true;
        }
        if (raw == "false" || raw == "0") {
            return false;
        }
        throw std::invalid_argument("config key '" + key + "' must be true or false");
    }

    std::string text(const std::string& key) { return fetch(key); }

private:
    const std::string& fetch(const std::string& key) {
        auto it = values_.find(key);
        if (it == values_.end()) {
            throw std::invalid_argument("missing config key '" + key + "'");
        }
        return it->second;
    }

    std::map<std::string, std::string> values_;
};

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::map<std::string, std::string> parse_key_values(const std::string& text) {
    std::map<std::string, std::string> defaults;
    for (const KeyDoc& doc : key_docs()) {
        defaults.emplace(doc.key, doc.default_value);
    }

    std::map<std::string, std::string> seen;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        " is not key=value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (defaults.find(key) == defaults.end()) {
            throw std::invalid_argument("unknown config key '" + key + "'");
        }
        if (!seen.emplace(key, value).second) {
            throw std::invalid_argument("duplicate config key '" + key + "'");
        }
        defaults[key] = value;
    }
    return defaults;
}

} // namespace

OverheadParams Scenario::overhead_params() const {
    OverheadParams p;
    p.q_elements = panel.element_count;
    p.n_plt = protocol.n_plt;
    p.n_pth = n_pth;
    p.n_grd = n_grd;
    p.n_cbk = n_cbk;
    p.c_const = c_const;
    p.t_sym_s = protocol.t_sym_s;
    p.t_coh_s = protocol.t_coh_s;
    p.t_loc_s = protocol.t_loc_s;
    return p;
}

double Scenario::disc_grid_spacing() const {
    return grid_spacing_m > 0.0 ? grid_spacing_m : carrier.wavelength_m / 4.0;
}

Scenario parse_scenario(const std::string& text) {
    KeyValueReader cfg(parse_key_values(text));

    Scenario s;
    s.carrier = make_carrier(cfg.number("carrier.frequency_hz"));

    double spacing_y = cfg.number("irs.spacing_y_m");
    double spacing_z = cfg.number("irs.spacing_z_m");
    if (spacing_y == 0.0) {
        spacing_y = 0.5 * s.carrier.wavelength_m;
    }
    if (spacing_z == 0.0) {
        spacing_z = 0.5 * s.carrier.wavelength_m;
    }
    const Point3 panel_center{cfg.number("irs.center_x_m"), cfg.number("irs.center_y_m"),
                              cfg.number("irs.center_z_m")};
    s.panel = make_panel(panel_center, cfg.number("irs.side_y_m"), cfg.number("irs.side_z_m"),
                         spacing_y, spacing_z, cfg.number("irs.tau"));

    s.bs = {cfg.number("bs.x_m"), cfg.number("bs.y_m"), cfg.number("bs.z_m")};
    s.mu = {cfg.number("mu.x_m"), cfg.number("mu.y_m"), cfg.number("mu.z_m")};

    s.radio.tx_power_w = dbm_to_watt(cfg.number("radio.tx_power_dbm"));
    s.radio.tx_directivity = db_to_linear(cfg.number("radio.tx_directivity_db"));
    s.radio.rx_directivity = db_to_linear(cfg.number("radio.rx_directivity_db"));
    s.radio.noise_density_w_per_hz = dbm_to_watt(cfg.number("radio.noise_density_dbm_per_hz"));
    s.radio.bandwidth_hz = cfg.number("radio.bandwidth_hz");
    s.radio.noise_figure = db_to_linear(cfg.number("radio.noise_figure_db"));
    s.radio.characteristic_impedance_ohm = cfg.number("radio.impedance_ohm");
    validate(s.radio);

    s.field_options.exact_amplitudes = cfg.boolean("field.exact_amplitudes");
    s.field_options.compensated_sum = cfg.boolean("field.compensated_sum");
    s.gamma_bar = cfg.number("field.gamma_bar");

    s.blockage.center = {cfg.number("blockage.center_x_m"), cfg.number("blockage.center_y_m"),
                         cfg.number("blockage.center_z_m")};
    s.blockage.diameter_m = cfg.number("blockage.diameter_m");
    s.blockage_diameter_set = s.blockage.diameter_m > 0.0;

    s.illum.center = s.mu;
    s.illum.delta_m = cfg.number("illum.delta_m");
    if (s.illum.delta_m < 0.0) {
        throw std::invalid_argument("illum.delta_m must be nonnegative");
    }

    s.n_pth = cfg.integer("overhead.n_pth");
    s.n_grd = cfg.integer("overhead.n_grd");
    s.n_cbk = cfg.integer("overhead.n_cbk");
    s.c_const = cfg.number("overhead.c_const");
    if (s.n_pth < 1 || s.n_grd < 1 || s.n_cbk < 0 || s.c_const <= 0.0) {
        throw std::invalid_argument("overhead parameters out of range");
    }

    s.protocol.gamma_thr_linear = db_to_linear(cfg.number("protocol.gamma_thr_db"));
    s.protocol.t_irs_s = cfg.number("protocol.t_irs_s");
    s.protocol.t_coh_s = cfg.number("protocol.t_coh_s");
    s.protocol.n_plt = cfg.integer("protocol.n_plt");
    s.protocol.t_sym_s = cfg.number("protocol.t_sym_s");
    s.protocol.time_step_s = cfg.number("protocol.time_step_s");
    const double seed = cfg.number("protocol.rng_seed");
    if (seed < 0.0 || seed != std::floor(seed)) {
        throw std::invalid_argument("protocol.rng_seed must be a nonnegative integer");
    }
    s.protocol.rng_seed = static_cast<std::uint64_t>(seed);
    s.mu_speed_m_per_s = cfg.number("protocol.speed_m_per_s");
    if (!(s.mu_speed_m_per_s > 0.0)) {
        throw std::invalid_argument("protocol.speed_m_per_s must be positive");
    }
    const std::string tracking = cfg.text("protocol.snr_tracking");
    if (tracking == "true_los") {
        s.protocol.snr_tracking = SnrTracking::TrueLos;
    } else if (tracking == "estimate_window") {
        s.protocol.snr_tracking = SnrTracking::EstimateWindow;
    } else {
        throw std::invalid_argument("protocol.snr_tracking must be true_los or estimate_window");
    }
    s.protocol.estimate_window = cfg.integer("protocol.estimate_window");
    s.protocol.delta_inflation_m = cfg.number("protocol.delta_inflation_m");

    s.protocol.t_loc_s = cfg.number("protocol.t_loc_s");
    if (s.protocol.t_loc_s == 0.0) {
        // Sparsity-based localization pilot bound.
        s.protocol.t_loc_s = localization_time_bound(s.overhead_params());
    }
    validate(s.protocol);

    s.grid_spacing_m = cfg.number("grid.spacing_m");
    if (s.grid_spacing_m < 0.0) {
        throw std::invalid_argument("grid.spacing_m must be nonnegative");
    }
    return s;
}

Scenario default_scenario() { return parse_scenario(""); }

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str());
}

std::string echo_config(const Scenario& s) {
    std::ostringstream out;
    auto kv = [&out](const char* key, const std::string& value) {
        out << key << " = " << value << "\n";
    };
    kv("carrier.frequency_hz", format_double(s.carrier.frequency_hz));
    kv("irs.center_x_m", format_double(s.panel.center.x));
    kv("irs.center_y_m", format_double(s.panel.center.y));
    kv("irs.center_z_m", format_double(s.panel.center.z));
    kv("irs.side_y_m", format_double(s.panel.side_y_m));
    kv("irs.side_z_m", format_double(s.panel.side_z_m));
    kv("irs.spacing_y_m", format_double(s.panel.spacing_y_m));
    kv("irs.spacing_z_m", format_double(s.panel.spacing_z_m));
    kv("irs.tau", format_double(s.panel.tau));
    kv("bs.x_m", format_double(s.bs.x));
    kv("bs.y_m", format_double(s.bs.y));
    kv("bs.z_m", format_double(s.bs.z));
    kv("mu.x_m", format_double(s.mu.x));
    kv("mu.y_m", format_double(s.mu.y));
    kv("mu.z_m", format_double(s.mu.z));
    kv("radio.tx_power_dbm", format_double(watt_to_dbm(s.radio.tx_power_w)));
    kv("radio.tx_directivity_db", format_double(linear_to_db(s.radio.tx_directivity)));
    kv("radio.rx_directivity_db", format_double(linear_to_db(s.radio.rx_directivity)));
    kv("radio.noise_density_dbm_per_hz",
       format_double(watt_to_dbm(s.radio.noise_density_w_per_hz)));
    kv("radio.bandwidth_hz", format_double(s.radio.bandwidth_hz));
    kv("radio.noise_figure_db", format_double(linear_to_db(s.radio.noise_figure)));
    kv("radio.impedance_ohm", format_double(s.radio.characteristic_impedance_ohm));
    kv("field.exact_amplitudes", s.field_options.exact_amplitudes ? "true" : "false");
    kv("field.compensated_sum", s.field_options.compensated_sum ? "true" : "false");
    kv("field.gamma_bar", format_double(s.gamma_bar));
    kv("blockage.center_x_m", format_double(s.blockage.center.x));
    kv("blockage.center_y_m", format_double(s.blockage.center.y));
    kv("blockage.center_z_m", format_double(s.blockage.center.z));
    kv("blockage.diameter_m", format_double(s.blockage.diameter_m));
    kv("illum.delta_m", format_double(s.illum.delta_m));
    kv("protocol.gamma_thr_db", format_double(linear_to_db(s.protocol.gamma_thr_linear)));
    kv("protocol.t_loc_s", format_double(s.protocol.t_loc_s));
    kv("protocol.t_irs_s", format_double(s.protocol.t_irs_s));
    kv("protocol.t_coh_s", format_double(s.protocol.t_coh_s));
    kv("protocol.n_plt", std::to_string(s.protocol.n_plt));
    kv("protocol.t_sym_s", format_double(s.protocol.t_sym_s));
    kv("protocol.time_step_s", format_double(s.protocol.time_step_s));
    kv("protocol.rng_seed", std::to_string(s.protocol.rng_seed));
    kv("protocol.speed_m_per_s", format_double(s.mu_speed_m_per_s));
    kv("protocol.snr_tracking",
       s.protocol.snr_tracking == SnrTracking::TrueLos ? "true_los" : "estimate_window");
    kv("protocol.estimate_window", std::to_string(s.protocol.estimate_window));
    kv("protocol.delta_inflation_m", format_double(s.protocol.delta_inflation_m));
    kv("overhead.n_pth", std::to_string(s.n_pth));
    kv("overhead.n_grd", std::to_string(s.n_grd));
    kv("overhead.n_cbk", std::to_string(s.n_cbk));
    kv("overhead.c_const", format_double(s.c_const));
    kv("grid.spacing_m", format_double(s.grid_spacing_m));
    return out.str();
}

std::string config_reference() {
    std::ostringstream out;
    for (const KeyDoc& doc : key_docs()) {
        out << doc.key << " = " << doc.default_value << "  # " << doc.doc << "\n";
    }
    return out.str();
}

} // namespace irssim
