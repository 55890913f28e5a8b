// SPDX-License-Identifier: Apache-2.0
#include "irssim/artifacts.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "irssim/version.hpp"

namespace irssim {

std::string format_double(double value) {
    char buf[40];
    for (int precision = 15; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
        if (std::strtod(buf, nullptr) == value) {
            break;
        }
    }
    return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) {
        std::filesystem::create_directories(parent);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << content;
}

CsvBuilder::CsvBuilder(const std::vector<std::string>& columns) : columns_(columns.size()) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i > 0) {
            content_ += ',';
        }
        content_ += columns[i];
    }
    content_ += '\n';
}

CsvBuilder& CsvBuilder::cell(double value) { return cell(format_double(value)); }

CsvBuilder& CsvBuilder::cell(const std::string& value) {
    if (row_cells_ > 0) {
        content_ += ',';
    }
    content_ += value;
    ++row_cells_;
    return *this;
}

void CsvBuilder::end_row() {
    if (row_cells_ != columns_) {
        throw std::logic_error("CSV row does not match the header width");
    }
    content_ += '\n';
    row_cells_ = 0;
}

void CsvBuilder::write(const std::string& path) const { write_text_file(path, content_); }

void write_snr_grid_csv(const std::string& path, const SnrGrid& grid) {
    CsvBuilder csv({"u_m", "v_m", "snr_db"});
    std::size_t idx = 0;
    for (std::size_t i = 0; i < grid.spec.n_u; ++i) {
        for (std::size_t j = 0; j < grid.spec.n_v; ++j, ++idx) {
            csv.cell(static_cast<double>(i) * grid.spec.step_u_m)
                .cell(static_cast<double>(j) * grid.spec.step_v_m)
                .cell(grid.snr_db[idx]);
            csv.end_row();
        }
    }
    csv.write(path);
}

void write_snr_grid_pgm(const std::string& path, const SnrGrid& grid, double lo_db,
                        double hi_db) {
    if (!(hi_db > lo_db)) {
        throw std::invalid_argument("PGM range must have hi_db > lo_db");
    }
    std::string body = "P5\n" + std::to_string(grid.spec.n_v) + " " +
                       std::to_string(grid.spec.n_u) + "\n255\n";
    body.reserve(body.size() + grid.snr_db.size());
    for (double db : grid.snr_db) {
        double t = (db - lo_db) / (hi_db - lo_db);
        t = t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t);
        body.push_back(static_cast<char>(static_cast<unsigned char>(std::lround(t * 255.0))));
    }
    write_text_file(path, body);
    write_text_file(path + ".range.txt", "min_db = " + format_double(lo_db) +
                                             "\nmax_db = " + format_double(hi_db) + "\n");
}

void write_profile_csv(const std::string& path, const IrsPanel& panel,
                       const PhaseProfile& profile) {
    if (profile.phases_rad.size() != panel.element_local_offsets.size()) {
        throw std::invalid_argument("profile length does not match the panel");
    }
    CsvBuilder csv({"element_index", "y_m", "z_m", "phase_rad"});
    for (std::size_t q = 0; q < profile.phases_rad.size(); ++q) {
        csv.cell(static_cast<double>(q))
            .cell(panel.element_local_offsets[q].first)
            .cell(panel.element_local_offsets[q].second)
            .cell(profile.phases_rad[q]);
        csv.end_row();
    }
    csv.write(path);
}

void write_trace_csv(const std::string& path, const ProtocolTrace& trace) {
    CsvBuilder csv({"timestamp_s", "kind", "mu_x", "mu_y", "mu_z", "snr_db"});
    for (const ProtocolEvent& e : trace.events) {
        csv.cell(e.timestamp_s)
            .cell(std::string(to_string(e.kind)))
            .cell(e.mu_position.x)
            .cell(e.mu_position.y)
            .cell(e.mu_position.z)
            .cell(e.snr_db);
        csv.end_row();
    }
    csv.write(path);
}

void write_overhead_table_csv(const std::string& path, const OverheadParams& params) {
    CsvBuilder csv({"scheme", "alpha_preclamp", "overhead"});
    for (const OverheadTableRow& row : overhead_comparison_table(params)) {
        csv.cell(std::string(row.scheme)).cell(row.alpha_preclamp).cell(row.overhead);
        csv.end_row();
    }
    csv.write(path);
}

void write_manifest(const std::string& out_dir, const std::string& command_line,
                    std::uint64_t seed, const std::string& config_echo) {
    std::string text;
    text += "tool = irssim " + std::string(kVersion) + "\n";
    text += "command = " + command_line + "\n";
    text += "seed = " + std::to_string(seed) + "\n";
    text += "\n";
    text += config_echo;
    write_text_file((std::filesystem::path(out_dir) / "manifest.txt").string(), text);
}

} // namespace irssim
