// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

namespace irssim {

struct ProtocolTrace;

/// Inputs of the air-time overhead formulas.  t_upd_s is the average interval
/// between panel reconfigurations; the remaining fields describe the
/// estimation and localization procedures.
struct OverheadParams {
    std::size_t q_elements = 0;
    int n_plt = 0;
    int n_pth = 0;
    int n_grd = 0;
    int n_cbk = 0;
    double c_const = 1.0;
    double t_sym_s = 0.0;
    double t_coh_s = 0.0;
    double t_loc_s = 0.0;
    double t_upd_s = 0.0;
};

/// Base of the log in the sparsity pilot-count bound.
enum class LogBase { Two, Natural };

/// Pilot overhead of per-element (ON/OFF or DFT-matrix) estimation:
/// min{Q N_plt T_sym / T_coh, 1}.
double overhead_onoff_dft(const OverheadParams& p);

/// Pilot overhead of sparsity-based estimation:
/// min{C N_pth log(N_grd) T_sym / T_coh, 1}.
double overhead_sparsity(const OverheadParams& p, LogBase base = LogBase::Two);

/// Pilot overhead of codebook-based estimation:
/// min{N_cbk N_plt T_sym / T_coh, 1}.
double overhead_codebook(const OverheadParams& p);

/// Overhead of decoupled illumination and channel estimation:
/// min{T_loc/T_upd + (T_upd - T_loc) N_plt T_sym / (T_upd T_coh), 1}.
/// Throws std::invalid_argument when T_loc >= T_upd.
double overhead_proposed(const OverheadParams& p);

/// Localization duration bound for sparsity-based localization:
/// C N_pth log(N_grd) T_sym.
double localization_time_bound(const OverheadParams& p, LogBase base = LogBase::Two);

struct AverageOverhead {
    double total = 0.0;        ///< mean combined localization + estimation overhead
    double reconfig_only = 0.0; ///< mean of the T_loc/T_upd term alone
};

struct OverheadTableRow {
    const char* scheme;
    double alpha_preclamp;
    double overhead;
};

/// All schemes side by side (sparsity with both log bases).  The proposed
/// scheme is included only when t_upd_s exceeds t_loc_s.
std::vector<OverheadTableRow> overhead_comparison_table(const OverheadParams& p);

/// Evaluates the decoupled-scheme overhead with each trace's empirical mean
/// update period and averages.  Traces whose mean update period does not
/// exceed T_loc count as fully consumed by overhead (both terms 1).
/// Throws std::invalid_argument on empty input.
AverageOverhead average_overhead(const std::vector<ProtocolTrace>& traces,
                                 const OverheadParams& p);

} // namespace irssim
