#pragma once

#include <cstddef>

#include "rislink/ris_link.hpp"

namespace rislink {

/// log2(1 + snr), bit/s/Hz.
double achievable_rate(double snr);

struct SystemPower {
    double p_tx_drain = 0.0;  // p / v
    double p_s = 0.0;
    double p_d = 0.0;
    double p_tris = 0.0;  // n_t * P_e
    double p_ris = 0.0;
    double total = 0.0;
};

/// p/v + P_s + P_d + N_t P_e + P_RIS. In total-budget mode P_RIS is the full
/// configured budget; in direct mode it is `consumed_ris_w`.
SystemPower total_power(double p, const PowerBudget& budget, std::size_t n_t, double p_s,
                        double p_d, double consumed_ris_w);

double energy_efficiency(double rate, double total_w);

/// rate^lambda + (rate / total)^(1 - lambda), with 0^0 = 1.
double performance_index(double rate, double total_w, double lambda);

struct LinkResult {
    double snr = 0.0;
    double rate = 0.0;
    double total_power = 0.0;
    double ee = 0.0;
    double pi = 0.0;
};

LinkResult make_link_result(double snr, double total_w, double lambda);

}  // namespace rislink
