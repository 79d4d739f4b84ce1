#include "rislink/optimize.hpp"

#include <algorithm>
#include <cmath>

#include "rislink/errors.hpp"

namespace rislink {
namespace {

double sq(double x) { return x * x; }

std::size_t floor_count(double ratio) {
    if (!(ratio > 0.0)) {
        return 0;
    }
    return static_cast<std::size_t>(std::floor(ratio * (1.0 + kBudgetSlack)));
}

void require_total_mode(const PowerBudget& budget) {
    budget.validate();
    if (budget.mode != BudgetMode::total) {
        throw InvalidArgument("count optimization needs a total RIS power budget");
    }
}

double cascade(const LinkGains& g, std::size_t n_t) {
    return g.p * sq(static_cast<double>(n_t)) * g.beta_rd * g.beta_tr * g.beta_st;
}

// Larger SNR wins; near-ties keep the incumbent, which is always the smaller count.
bool improves(double candidate, double incumbent) {
    return candidate > incumbent && (candidate - incumbent) > 1e-12 * std::abs(incumbent);
}

}  // namespace

std::size_t optimal_pris_count(const PowerBudget& budget) {
    budget.validate();
    if (!(budget.p_e > 0.0)) {
        throw InvalidArgument("P_e must be positive to size a PRIS");
    }
    return floor_count(budget.budget_w / budget.p_e);
}

double optimal_pris_snr(const LinkGains& gains, const PowerBudget& budget, std::size_t n_t) {
    budget.validate();
    if (!(budget.p_e > 0.0)) {
        throw InvalidArgument("P_e must be positive to size a PRIS");
    }
    return cascade(gains, n_t) * sq(budget.budget_w) / (sq(budget.p_e) * gains.delta_sq);
}

double optimal_pris_snr_integer(const LinkGains& gains, const PowerBudget& budget,
                                std::size_t n_t) {
    const std::size_t n_p = optimal_pris_count(budget);
    return snr_closed_form(RisScenario::pris(n_t, n_p), gains);
}

ArisTradeoff aris_tradeoff(const LinkGains& gains, const PowerBudget& budget, std::size_t n_t) {
    require_total_mode(budget);
    const double hw = budget.p_e + budget.p_dc;
    if (!(hw > 0.0)) {
        throw InvalidArgument("P_e + P_DC must be positive");
    }
    const double p_in = incident_power_per_element(gains, budget, n_t);
    const double amp_scale = budget.v * gains.beta_rd * budget.budget_w;

    ArisTradeoff t;
    t.z = p_in + amp_scale;
    // (z - sqrt(z^2 - v beta_rd P z)) / (v beta_rd hw), rewritten with
    // z^2 - v beta_rd P z = z * p_in to avoid cancellation when p_in ~ z.
    t.n_a1 = std::sqrt(t.z) * budget.budget_w / ((std::sqrt(t.z) + std::sqrt(p_in)) * hw);
    t.n_a2 = budget.budget_w * budget.v / (sq(budget.beta_max) * p_in + hw * budget.v);
    t.n_star = std::max(t.n_a1, t.n_a2);
    t.n_max = floor_count(budget.budget_w / hw);
    return t;
}

double aris_snr_budget_branch(const LinkGains& gains, const PowerBudget& budget, std::size_t n_t,
                              double n_a) {
    const double p_in = incident_power_per_element(gains, budget, n_t);
    const double residual = budget.budget_w - n_a * (budget.p_e + budget.p_dc);
    return cascade(gains, n_t) * n_a * budget.v * residual /
           ((residual * gains.beta_rd * budget.v + p_in) * gains.delta_sq);
}

double aris_snr_beta_max_branch(const LinkGains& gains, const PowerBudget& budget,
                                std::size_t n_t, double n_a) {
    const double b2 = sq(budget.beta_max);
    return cascade(gains, n_t) * b2 * sq(n_a) / ((gains.beta_rd * b2 * n_a + 1.0) * gains.delta_sq);
}

CountEvaluation evaluate_aris(const LinkGains& gains, const PowerBudget& budget, std::size_t n_t,
                              std::size_t n_a) {
    const RisScenario base = RisScenario::aris(n_t, n_a, 1.0);
    CountEvaluation e;
    e.count = n_a;
    e.beta = select_beta(base, gains, budget);
    e.snr = snr_closed_form(base.with_beta(e.beta.beta), gains);
    return e;
}

namespace {

OptimumReport report_from(const CountEvaluation& best, std::size_t evaluated,
                          const ArisTradeoff& t) {
    OptimumReport r;
    r.best_count = best.count;
    r.best_beta = best.beta.beta;
    r.best_snr = best.snr;
    r.branch = best.beta.branch;
    r.candidates_evaluated = evaluated;
    r.tradeoff = t;
    return r;
}

}  // namespace

OptimumReport optimal_aris(const LinkGains& gains, const PowerBudget& budget,
                                  std::size_t n_t) {
    const ArisTradeoff t = aris_tradeoff(gains, budget, n_t);
    if (t.n_max < 1) {
        throw BudgetExhausted("RIS budget cannot power a single active element");
    }
    const auto clamp_count = [&](double x) {
        const double c = std::clamp(x, 1.0, static_cast<double>(t.n_max));
        return static_cast<std::size_t>(c);
    };
    const std::size_t lo = clamp_count(std::floor(t.n_star));
    const std::size_t hi = clamp_count(std::ceil(t.n_star));

    CountEvaluation best = evaluate_aris(gains, budget, n_t, lo);
    std::size_t evaluated = 1;
    if (hi != lo) {
        const CountEvaluation other = evaluate_aris(gains, budget, n_t, hi);
        ++evaluated;
        if (improves(other.snr, best.snr)) {
            best = other;
        }
    }
    return report_from(best, evaluated, t);
}

OptimumReport brute_force_aris(const LinkGains& gains, const PowerBudget& budget,
                               std::size_t n_t) {
    const ArisTradeoff t = aris_tradeoff(gains, budget, n_t);
    if (t.n_max < 1) {
        throw BudgetExhausted("RIS budget cannot power a single active element");
    }
    CountEvaluation best = evaluate_aris(gains, budget, n_t, 1);
    for (std::size_t n = 2; n <= t.n_max; ++n) {
        const CountEvaluation e = evaluate_aris(gains, budget, n_t, n);
        if (improves(e.snr, best.snr)) {
            best = e;
        }
    }
    return report_from(best, t.n_max, t);
}

HrisResult hris_snr_given_active(const LinkGains& gains, const PowerBudget& budget,
                                 std::size_t n_t, std::size_t n_h, std::size_t n_ha) {
    budget.validate();
    const RisScenario base = RisScenario::hris(n_t, n_h, n_ha, 1.0);
    if (n_ha == 0) {
        return {snr_closed_form(RisScenario::pris(n_t, n_h), gains), 1.0, BetaBranch::passive};
    }
    const BetaChoice choice = select_beta(base, gains, budget);
    const double p_in = incident_power_per_element(gains, budget, n_t);
    const double n_hp = static_cast<double>(n_h - n_ha);
    const double na = static_cast<double>(n_ha);

    HrisResult r;
    r.beta = choice.beta;
    r.branch = choice.branch;
    if (choice.branch == BetaBranch::sqrt_budget) {
        // beta^2 = P_amp / (n_ha P_in) substituted into the HRIS objective.
        const double p_amp = choice.amplification_w;
        r.snr = cascade(gains, n_t) * sq(n_hp * std::sqrt(p_in) + std::sqrt(na * p_amp)) /
                ((gains.beta_rd * p_amp + p_in) * gains.delta_sq);
    } else {
        const double bm = budget.beta_max;
        r.snr = cascade(gains, n_t) * sq(static_cast<double>(n_h) + na * (bm - 1.0)) /
                ((gains.beta_rd * sq(bm) * na + 1.0) * gains.delta_sq);
    }
    return r;
}

HrisAllocation hris_allocate(const LinkGains& gains, const PowerBudget& budget, std::size_t n_t,
                             std::size_t n_ha, HrisFill fill) {
    require_total_mode(budget);
    if (!(budget.p_e > 0.0)) {
        throw InvalidArgument("P_e must be positive to size an HRIS");
    }
    const double remaining = budget.budget_w - static_cast<double>(n_ha) * budget.p_dc;
    const std::size_t n_h_max = floor_count(remaining / budget.p_e);
    if (remaining < 0.0 || n_h_max < n_ha || (n_ha == 0 && n_h_max == 0)) {
        throw BudgetExhausted("RIS budget cannot power the requested active HRIS elements");
    }

    HrisAllocation best;
    best.n_ha = n_ha;
    if (fill == HrisFill::largest_feasible) {
        best.n_h = n_h_max;
        best.result = hris_snr_given_active(gains, budget, n_t, n_h_max, n_ha);
        best.candidates_evaluated = 1;
        return best;
    }
    const std::size_t first = std::max<std::size_t>(n_ha, 1);
    best.n_h = first;
    best.result = hris_snr_given_active(gains, budget, n_t, first, n_ha);
    best.candidates_evaluated = 1;
    for (std::size_t n_h = first + 1; n_h <= n_h_max; ++n_h) {
        const HrisResult r = hris_snr_given_active(gains, budget, n_t, n_h, n_ha);
        ++best.candidates_evaluated;
        if (improves(r.snr, best.result.snr)) {
            best.n_h = n_h;
            best.result = r;
        }
    }
    return best;
}

}  // namespace rislink
