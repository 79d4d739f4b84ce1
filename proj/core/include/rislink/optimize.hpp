#pragma once

#include <cstddef>

#include "rislink/ris_link.hpp"

namespace rislink {

/// floor(P_PRIS / P_e).
std::size_t optimal_pris_count(const PowerBudget& budget);

/// Continuous optimum p P_PRIS^2 N_t^2 beta_rd beta_tr beta_st / (P_e^2 delta^2).
double optimal_pris_snr(const LinkGains& gains, const PowerBudget& budget, std::size_t n_t);

/// Same, evaluated at the integer count optimal_pris_count().
double optimal_pris_snr_integer(const LinkGains& gains, const PowerBudget& budget,
                                std::size_t n_t);

/// Continuous quantities behind the ARIS count trade-off.
struct ArisTradeoff {
    double z = 0.0;       // P_in + v beta_rd P_ARIS
    double n_a1 = 0.0;    // interior optimum of the budget-limited branch
    double n_a2 = 0.0;    // count at which the budget branch meets beta_max
    double n_star = 0.0;  // max(n_a1, n_a2)
    std::size_t n_max = 0;  // largest count whose hardware fits the budget
};

ArisTradeoff aris_tradeoff(const LinkGains& gains, const PowerBudget& budget, std::size_t n_t);

/// Budget-limited ARIS SNR for a continuous count (beta from the sqrt branch).
double aris_snr_budget_branch(const LinkGains& gains, const PowerBudget& budget, std::size_t n_t,
                              double n_a);
/// ARIS SNR at beta = beta_max for a continuous count.
double aris_snr_beta_max_branch(const LinkGains& gains, const PowerBudget& budget,
                                std::size_t n_t, double n_a);

struct CountEvaluation {
    std::size_t count = 0;
    double snr = 0.0;
    BetaChoice beta;
};

/// SNR of an n_a-element ARIS with the best feasible beta.
CountEvaluation evaluate_aris(const LinkGains& gains, const PowerBudget& budget, std::size_t n_t,
                              std::size_t n_a);

struct OptimumReport {
    std::size_t best_count = 0;
    double best_beta = 0.0;
    double best_snr = 0.0;
    BetaBranch branch = BetaBranch::beta_max;
    std::size_t candidates_evaluated = 0;
    ArisTradeoff tradeoff;
};

/// Closed-form ARIS optimum: evaluates floor and ceil of n_star.
/// Equal SNRs (within 1e-12 relative) resolve to the smaller count.
OptimumReport optimal_aris(const LinkGains& gains, const PowerBudget& budget,
                                  std::size_t n_t);

/// Exhaustive search over 1..n_max with the same tie-break.
OptimumReport brute_force_aris(const LinkGains& gains, const PowerBudget& budget,
                               std::size_t n_t);

struct HrisResult {
    double snr = 0.0;
    double beta = 0.0;
    BetaBranch branch = BetaBranch::passive;
};

/// Optimal HRIS SNR for fixed (n_h, n_ha), in either budget mode.
HrisResult hris_snr_given_active(const LinkGains& gains, const PowerBudget& budget,
                                 std::size_t n_t, std::size_t n_h, std::size_t n_ha);

enum class HrisFill {
    best_snr,          // passive count maximizing SNR over the feasible range
    largest_feasible,  // as many passive elements as the budget allows
};

struct HrisAllocation {
    std::size_t n_h = 0;
    std::size_t n_ha = 0;
    HrisResult result;
    std::size_t candidates_evaluated = 0;
};

/// Chooses the total HRIS size for a fixed active count under a total budget.
HrisAllocation hris_allocate(const LinkGains& gains, const PowerBudget& budget, std::size_t n_t,
                             std::size_t n_ha, HrisFill fill = HrisFill::best_snr);

}  // namespace rislink
