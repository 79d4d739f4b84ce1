#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "rislink/channel.hpp"

namespace rislink {

enum class ScenarioKind { pris, aris, hris };

std::string_view to_string(ScenarioKind kind);
ScenarioKind parse_scenario_kind(std::string_view name);

/// Element counts of the transmission RIS and the indoor reflective surface.
///
/// The reflective surface has `n_refl` elements, the first `n_active` of which
/// amplify with amplitude `beta`. PRIS has no active elements, ARIS has only
/// active ones, HRIS mixes both.
struct RisScenario {
    ScenarioKind kind = ScenarioKind::pris;
    std::size_t n_t = 0;
    std::size_t n_refl = 0;
    std::size_t n_active = 0;
    double beta = 1.0;

    static RisScenario pris(std::size_t n_t, std::size_t n_p);
    static RisScenario aris(std::size_t n_t, std::size_t n_a, double beta);
    static RisScenario hris(std::size_t n_t, std::size_t n_h, std::size_t n_ha, double beta);

    std::size_t n_passive() const noexcept { return n_refl - n_active; }
    RisScenario with_beta(double b) const;
    void validate() const;
};

/// Unit-modulus coefficients. Active and passive reflective segments are kept apart.
struct PhaseConfig {
    ComplexVector phi_t;
    ComplexVector phi_active;
    ComplexVector phi_passive;
};

/// Conjugate-phase beamformers for the transmission RIS and the reflective
/// surface. Rows [0, n_active) of `h_tr` are the active elements.
PhaseConfig align_phases(const RankOneChannel& h_tr, const ComplexVector& h_st,
                         const ComplexVector& h_rd, std::size_t n_active = 0);

/// Relative tolerance on budget arithmetic. Element-count ratios this close to
/// an integer round to it (20 dBm / -10 dBm gives 1000 elements, not 999), and
/// amplification budgets this far below zero count as zero.
inline constexpr double kBudgetSlack = 1e-12;

enum class BudgetMode { total, direct_amplification };

/// How the signal part of the per-element amplifier input power is modelled.
///  - per_element: p * beta_tr * beta_st, the uniform-amplitude form used by
///    the closed-form optimizers (default).
///  - array_gain: p * n_t^2 * beta_tr * beta_st, i.e. the exact input power
///    after transmission-RIS beamforming.
enum class IncidentPowerModel { per_element, array_gain };

std::string_view to_string(BudgetMode mode);
std::string_view to_string(IncidentPowerModel model);

struct PowerBudget {
    BudgetMode mode = BudgetMode::total;
    /// P_PRIS / P_ARIS / P_HRIS in total mode; P_a / P_h in direct mode. Watts.
    double budget_w = 0.0;
    double p_e = 0.0;   // phase-shifter circuit power per element, W
    double p_dc = 0.0;  // DC bias per active element, W
    double v = 1.0;     // amplifier efficiency
    double beta_max = 1.0;
    IncidentPowerModel incident = IncidentPowerModel::per_element;

    void validate() const;
};

/// Amplifier input power per active element, p * G * beta_tr * beta_st + delta^2.
double incident_power_per_element(const LinkGains& gains, const PowerBudget& budget,
                                  std::size_t n_t);

/// Power left for amplification after element hardware (already scaled by v).
/// Negative when the hardware alone exceeds the budget.
double amplification_budget(const RisScenario& scenario, const PowerBudget& budget);

enum class BetaBranch { passive, sqrt_budget, beta_max };

std::string_view to_string(BetaBranch branch);

struct BetaChoice {
    double beta = 0.0;
    BetaBranch branch = BetaBranch::beta_max;
    double amplification_w = 0.0;
};

/// Largest feasible amplitude: min(sqrt(P_amp / (N_active * P_in)), beta_max).
BetaChoice select_beta(const RisScenario& scenario, const LinkGains& gains,
                       const PowerBudget& budget);

/// Power drawn by the reflective surface at amplitude `beta`.
double ris_power(const RisScenario& scenario, const LinkGains& gains, const PowerBudget& budget,
                 double beta);

/// Closed-form SNR under uniform amplitudes and aligned phases.
double snr_closed_form(const RisScenario& scenario, const LinkGains& gains);

/// Exact SNR of the cascaded matrix expression for arbitrary phases,
/// including the amplified-noise term of active elements.
double snr_vector_form(const RisScenario& scenario, const PhaseConfig& phases,
                       const ChannelRealization& channels, const LinkGains& gains);

/// Synthesizes a channel realization from `seed`, aligns phases and
/// evaluates snr_vector_form.
double aligned_vector_snr(const RisScenario& scenario, const LinkGains& gains, std::uint64_t seed);

}  // namespace rislink
