// SPDX-License-Identifier: Apache-2.0
#include "irssim/overhead.hpp"

#include <cmath>
#include <stdexcept>

#include "irssim/protocol.hpp"

namespace irssim {

namespace {

double clamp_unit(double alpha) { return alpha < 1.0 ? alpha : 1.0; }

double log_of(double x, LogBase base) {
    return base == LogBase::Two ? std::log2(x) : std::log(x);
}

double alpha_onoff_dft(const OverheadParams& p) {
    return static_cast<double>(p.q_elements) * p.n_plt * p.t_sym_s / p.t_coh_s;
}

double alpha_sparsity(const OverheadParams& p, LogBase base) {
    return p.c_const * p.n_pth * log_of(static_cast<double>(p.n_grd), base) * p.t_sym_s /
           p.t_coh_s;
}

double alpha_codebook(const OverheadParams& p) {
    return static_cast<double>(p.n_cbk) * p.n_plt * p.t_sym_s / p.t_coh_s;
}

double alpha_proposed(const OverheadParams& p) {
    return p.t_loc_s / p.t_upd_s +
           (p.t_upd_s - p.t_loc_s) * p.n_plt * p.t_sym_s / (p.t_upd_s * p.t_coh_s);
}

} // namespace

double overhead_onoff_dft(const OverheadParams& p) { return clamp_unit(alpha_onoff_dft(p)); }

double overhead_sparsity(const OverheadParams& p, LogBase base) {
    return clamp_unit(alpha_sparsity(p, base));
}

double overhead_codebook(const OverheadParams& p) { return clamp_unit(alpha_codebook(p)); }

double overhead_proposed(const OverheadParams& p) {
    if (!(p.t_loc_s < p.t_upd_s)) {
        throw std::invalid_argument("update period must exceed the localization time");
    }
    return clamp_unit(alpha_proposed(p));
}

std::vector<OverheadTableRow> overhead_comparison_table(const OverheadParams& p) {
    std::vector<OverheadTableRow> rows;
    rows.push_back({"onoff_dft", alpha_onoff_dft(p), overhead_onoff_dft(p)});
    rows.push_back({"sparsity_log2", alpha_sparsity(p, LogBase::Two),
                    overhead_sparsity(p, LogBase::Two)});
    rows.push_back({"sparsity_ln", alpha_sparsity(p, LogBase::Natural),
                    overhead_sparsity(p, LogBase::Natural)});
    rows.push_back({"codebook", alpha_codebook(p), overhead_codebook(p)});
    if (p.t_upd_s > p.t_loc_s) {
        rows.push_back({"proposed", alpha_proposed(p), overhead_proposed(p)});
    }
    return rows;
}

double localization_time_bound(const OverheadParams& p, LogBase base) {
    return p.c_const * p.n_pth * log_of(static_cast<double>(p.n_grd), base) * p.t_sym_s;
}

AverageOverhead average_overhead(const std::vector<ProtocolTrace>& traces,
                                 const OverheadParams& p) {
    if (traces.empty()) {
        throw std::invalid_argument("no traces to average");
    }
    AverageOverhead out;
    for (const ProtocolTrace& trace : traces) {
        if (!(trace.mean_t_upd_s > p.t_loc_s)) {
            // Continuous-relocalization limit: the link never leaves overhead.
            out.total += 1.0;
            out.reconfig_only += 1.0;
            continue;
        }
        OverheadParams per = p;
        per.t_upd_s = trace.mean_t_upd_s;
        out.total += overhead_proposed(per);
        out.reconfig_only += clamp_unit(per.t_loc_s / per.t_upd_s);
    }
    out.total /= static_cast<double>(traces.size());
    out.reconfig_only /= static_cast<double>(traces.size());
    return out;
}

} // namespace irssim
