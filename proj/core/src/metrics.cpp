#include "rislink/metrics.hpp"

#include <cmath>

#include "rislink/errors.hpp"

namespace rislink {

double achievable_rate(double snr) {
    if (!(snr >= 0.0)) {
        throw InvalidArgument("SNR must be non-negative");
    }
    return std::log2(1.0 + snr);
}

SystemPower total_power(double p, const PowerBudget& budget, std::size_t n_t, double p_s,
                        double p_d, double consumed_ris_w) {
    budget.validate();
    if (!(p >= 0.0) || !(p_s >= 0.0) || !(p_d >= 0.0) || !(consumed_ris_w >= 0.0)) {
        throw InvalidArgument("power terms must be non-negative");
    }
    SystemPower s;
    s.p_tx_drain = p / budget.v;
    s.p_s = p_s;
    s.p_d = p_d;
    s.p_tris = static_cast<double>(n_t) * budget.p_e;
    s.p_ris = budget.mode == BudgetMode::total ? budget.budget_w : consumed_ris_w;
    s.total = s.p_tx_drain + s.p_s + s.p_d + s.p_tris + s.p_ris;
    return s;
}

double energy_efficiency(double rate, double total_w) {
    if (!(total_w > 0.0)) {
        throw InvalidArgument("total power must be positive");
    }
    return rate / total_w;
}

double performance_index(double rate, double total_w, double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw InvalidArgument("PI weight lambda must lie in [0, 1]");
    }
    if (!(rate >= 0.0)) {
        throw InvalidArgument("rate must be non-negative");
    }
    // std::pow(0, 0) == 1, which gives the intended endpoint behaviour.
    return std::pow(rate, lambda) + std::pow(energy_efficiency(rate, total_w), 1.0 - lambda);
}

LinkResult make_link_result(double snr, double total_w, double lambda) {
    LinkResult r;
    r.snr = snr;
    r.rate = achievable_rate(snr);
    r.total_power = total_w;
    r.ee = energy_efficiency(r.rate, total_w);
    r.pi = performance_index(r.rate, total_w, lambda);
    return r;
}

}  // namespace rislink
