// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "irssim/field.hpp"
#include "irssim/geometry.hpp"
#include "irssim/overhead.hpp"
#include "irssim/protocol.hpp"

namespace irssim {

/// Shortest decimal representation that round-trips to the same double.
/// Keeps CSV output byte-stable across runs.
std::string format_double(double value);

void write_text_file(const std::string& path, const std::string& content);

/// Comma-separated table with a header row, '.' decimal separator.
class CsvBuilder {
public:
    explicit CsvBuilder(const std::vector<std::string>& columns);

    CsvBuilder& cell(double value);
    CsvBuilder& cell(const std::string& value);
    void end_row();

    const std::string& content() const { return content_; }
    void write(const std::string& path) const;

private:
    std::string content_;
    std::size_t columns_ = 0;
    std::size_t row_cells_ = 0;
};

/// Grid CSV with columns u_m, v_m, snr_db (offsets along the grid axes).
void write_snr_grid_csv(const std::string& path, const SnrGrid& grid);

/// 8-bit binary PGM heatmap.  The dB range mapped linearly onto 0..255 is
/// recorded in a sidecar text file `<path>.range.txt`.
void write_snr_grid_pgm(const std::string& path, const SnrGrid& grid, double lo_db,
                        double hi_db);

/// Profile CSV with columns element_index, y_m, z_m, phase_rad.
void write_profile_csv(const std::string& path, const IrsPanel& panel,
                       const PhaseProfile& profile);

/// Trace CSV with columns timestamp_s, kind, mu_x, mu_y, mu_z, snr_db.
void write_trace_csv(const std::string& path, const ProtocolTrace& trace);

/// Overhead comparison CSV with columns scheme, alpha_preclamp, overhead.
void write_overhead_table_csv(const std::string& path, const OverheadParams& params);

/// Run manifest: tool version, command line, seed, and the resolved config.
void write_manifest(const std::string& out_dir, const std::string& command_line,
                    std::uint64_t seed, const std::string& config_echo);

} // namespace irssim
