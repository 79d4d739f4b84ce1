#include "rislink/ris_link.hpp"

#include <cmath>
#include <string>

#include "rislink/errors.hpp"

namespace rislink {
namespace {

Complex conj_unit_phase(Complex a, Complex b) {
    const Complex prod = a * b;
    const double mag = std::abs(prod);
    if (mag == 0.0) {
        throw DegenerateChannel("zero-magnitude channel coefficient; phase is undefined");
    }
    return std::conj(prod / mag);
}

double sq(double x) { return x * x; }

}  // namespace

std::string_view to_string(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::pris: return "pris";
        case ScenarioKind::aris: return "aris";
        case ScenarioKind::hris: return "hris";
    }
    return "unknown";
}

ScenarioKind parse_scenario_kind(std::string_view name) {
    if (name == "pris") return ScenarioKind::pris;
    if (name == "aris") return ScenarioKind::aris;
    if (name == "hris") return ScenarioKind::hris;
    throw InvalidArgument("unknown scenario '" + std::string(name) + "' (expected pris|aris|hris)");
}

std::string_view to_string(BudgetMode mode) {
    return mode == BudgetMode::total ? "total" : "direct";
}

std::string_view to_string(IncidentPowerModel model) {
    return model == IncidentPowerModel::per_element ? "per-element" : "array-gain";
}

std::string_view to_string(BetaBranch branch) {
    switch (branch) {
        case BetaBranch::passive: return "passive";
        case BetaBranch::sqrt_budget: return "sqrt-budget";
        case BetaBranch::beta_max: return "beta-max";
    }
    return "unknown";
}

RisScenario RisScenario::pris(std::size_t n_t, std::size_t n_p) {
    RisScenario s{ScenarioKind::pris, n_t, n_p, 0, 1.0};
    s.validate();
    return s;
}

RisScenario RisScenario::aris(std::size_t n_t, std::size_t n_a, double beta) {
    RisScenario s{ScenarioKind::aris, n_t, n_a, n_a, beta};
    s.validate();
    return s;
}

RisScenario RisScenario::hris(std::size_t n_t, std::size_t n_h, std::size_t n_ha, double beta) {
    RisScenario s{ScenarioKind::hris, n_t, n_h, n_ha, beta};
    s.validate();
    return s;
}

RisScenario RisScenario::with_beta(double b) const {
    RisScenario s = *this;
    s.beta = b;
    s.validate();
    return s;
}

void RisScenario::validate() const {
    if (!(beta >= 0.0) || !std::isfinite(beta)) {
        throw InvalidArgument("amplification amplitude must be finite and >= 0");
    }
    switch (kind) {
        case ScenarioKind::pris:
            if (n_active != 0 || beta != 1.0) {
                throw InvalidArgument("PRIS has no active elements and beta = 1");
            }
            break;
        case ScenarioKind::aris:
            if (n_active != n_refl) {
                throw InvalidArgument("every ARIS element is active");
            }
            break;
        case ScenarioKind::hris:
            if (n_active > n_refl) {
                throw InvalidArgument("HRIS active count exceeds total element count");
            }
            break;
    }
}

PhaseConfig align_phases(const RankOneChannel& h_tr, const ComplexVector& h_st,
                         const ComplexVector& h_rd, std::size_t n_active) {
    if (h_st.size() != h_tr.g_tx.size() || h_rd.size() != h_tr.g_rx.size()) {
        throw InvalidArgument("channel dimensions are inconsistent");
    }
    if (n_active > h_tr.n_rx()) {
        throw InvalidArgument("active segment longer than the reflective surface");
    }
    PhaseConfig out;
    out.phi_t.resize(h_st.size());
    for (Eigen::Index i = 0; i < h_st.size(); ++i) {
        out.phi_t[i] = conj_unit_phase(h_tr.g_tx[i], h_st[i]);
    }
    const auto n_act = static_cast<Eigen::Index>(n_active);
    out.phi_active.resize(n_act);
    out.phi_passive.resize(h_rd.size() - n_act);
    for (Eigen::Index j = 0; j < h_rd.size(); ++j) {
        const Complex phi = conj_unit_phase(h_rd[j], h_tr.g_rx[j]);
        if (j < n_act) {
            out.phi_active[j] = phi;
        } else {
            out.phi_passive[j - n_act] = phi;
        }
    }
    return out;
}

void PowerBudget::validate() const {
    if (!(budget_w >= 0.0) || !std::isfinite(budget_w)) {
        throw InvalidArgument("RIS power budget must be finite and >= 0");
    }
    if (!(p_e >= 0.0) || !(p_dc >= 0.0) || !std::isfinite(p_e) || !std::isfinite(p_dc)) {
        throw InvalidArgument("element power costs must be finite and >= 0");
    }
    if (!(v > 0.0 && v <= 1.0)) {
        throw InvalidArgument("amplifier efficiency must lie in (0, 1]");
    }
    if (!(beta_max >= 1.0) || !std::isfinite(beta_max)) {
        throw InvalidArgument("beta_max must be finite and >= 1");
    }
}

double incident_power_per_element(const LinkGains& gains, const PowerBudget& budget,
                                  std::size_t n_t) {
    double array_gain = 1.0;
    if (budget.incident == IncidentPowerModel::array_gain) {
        array_gain = sq(static_cast<double>(n_t));
    }
    return gains.p * array_gain * gains.beta_tr * gains.beta_st + gains.delta_sq;
}

double amplification_budget(const RisScenario& scenario, const PowerBudget& budget) {
    if (budget.mode == BudgetMode::direct_amplification) {
        return budget.budget_w;
    }
    const double n_refl = static_cast<double>(scenario.n_refl);
    const double n_act = static_cast<double>(scenario.n_active);
    switch (scenario.kind) {
        case ScenarioKind::pris:
            return 0.0;
        case ScenarioKind::aris:
            return (budget.budget_w - n_act * (budget.p_e + budget.p_dc)) * budget.v;
        case ScenarioKind::hris:
            return (budget.budget_w - n_refl * budget.p_e - n_act * budget.p_dc) * budget.v;
    }
    return 0.0;
}

BetaChoice select_beta(const RisScenario& scenario, const LinkGains& gains,
                       const PowerBudget& budget) {
    scenario.validate();
    budget.validate();
    if (scenario.n_active == 0) {
        throw InvalidArgument("beta selection needs at least one active element");
    }
    double p_amp = amplification_budget(scenario, budget);
    if (p_amp < 0.0 && p_amp >= -kBudgetSlack * budget.budget_w) {
        p_amp = 0.0;
    }
    if (p_amp < 0.0) {
        throw BudgetExhausted("element hardware needs more than the RIS power budget");
    }
    const double p_in = incident_power_per_element(gains, budget, scenario.n_t);
    const double beta_sqrt = std::sqrt(p_amp / (static_cast<double>(scenario.n_active) * p_in));
    if (beta_sqrt < budget.beta_max) {
        return {beta_sqrt, BetaBranch::sqrt_budget, p_amp};
    }
    return {budget.beta_max, BetaBranch::beta_max, p_amp};
}

double ris_power(const RisScenario& scenario, const LinkGains& gains, const PowerBudget& budget,
                 double beta) {
    scenario.validate();
    const double n_refl = static_cast<double>(scenario.n_refl);
    const double n_act = static_cast<double>(scenario.n_active);
    const double p_in = incident_power_per_element(gains, budget, scenario.n_t);
    switch (scenario.kind) {
        case ScenarioKind::pris:
            return n_refl * budget.p_e;
        case ScenarioKind::aris:
            return n_act * (budget.p_e + budget.p_dc) + sq(beta) * n_act * p_in / budget.v;
        case ScenarioKind::hris:
            return n_refl * budget.p_e + n_act * budget.p_dc + sq(beta) * n_act * p_in / budget.v;
    }
    return 0.0;
}

double snr_closed_form(const RisScenario& scenario, const LinkGains& gains) {
    scenario.validate();
    const double nt = static_cast<double>(scenario.n_t);
    const double n = static_cast<double>(scenario.n_refl);
    const double n_act = static_cast<double>(scenario.n_active);
    const double cascade = gains.p * sq(nt) * gains.beta_rd * gains.beta_tr * gains.beta_st;
    const double b2 = sq(scenario.beta);
    switch (scenario.kind) {
        case ScenarioKind::pris:
            return cascade * sq(n) / gains.delta_sq;
        case ScenarioKind::aris:
            return cascade * b2 * sq(n) / ((b2 * gains.beta_rd * n + 1.0) * gains.delta_sq);
        case ScenarioKind::hris:
            return cascade * sq(n + n_act * (scenario.beta - 1.0)) /
                   ((b2 * n_act * gains.beta_rd + 1.0) * gains.delta_sq);
    }
    return 0.0;
}

double snr_vector_form(const RisScenario& scenario, const PhaseConfig& phases,
                       const ChannelRealization& channels, const LinkGains& gains) {
    scenario.validate();
    const auto n_t = static_cast<Eigen::Index>(scenario.n_t);
    const auto n_refl = static_cast<Eigen::Index>(scenario.n_refl);
    const auto n_act = static_cast<Eigen::Index>(scenario.n_active);
    if (channels.h_st.size() != n_t || phases.phi_t.size() != n_t ||
        channels.h_tr.g_tx.size() != n_t || channels.h_tr.g_rx.size() != n_refl ||
        channels.h_rd.size() != n_refl || phases.phi_active.size() != n_act ||
        phases.phi_passive.size() != n_refl - n_act) {
        throw InvalidArgument("scenario, phase and channel dimensions disagree");
    }

    // Field incident on each reflective element: h_tr * Phi_t * h_st.
    const ComplexMatrix h_tr = channels.h_tr.matrix();
    const ComplexVector incident = h_tr * phases.phi_t.cwiseProduct(channels.h_st);

    Complex passive_sum{0.0, 0.0};
    for (Eigen::Index j = n_act; j < n_refl; ++j) {
        passive_sum += channels.h_rd[j] * phases.phi_passive[j - n_act] * incident[j];
    }
    Complex active_sum{0.0, 0.0};
    double amplified_noise = 0.0;
    for (Eigen::Index j = 0; j < n_act; ++j) {
        const Complex reradiated = channels.h_rd[j] * phases.phi_active[j];
        active_sum += reradiated * incident[j];
        amplified_noise += std::norm(reradiated);
    }
    const Complex received = passive_sum + scenario.beta * active_sum;
    const double noise_scale = sq(scenario.beta) * amplified_noise + 1.0;
    return gains.p * std::norm(received) / (noise_scale * gains.delta_sq);
}

double aligned_vector_snr(const RisScenario& scenario, const LinkGains& gains, std::uint64_t seed) {
    const ChannelRealization ch = synthesize_channels(scenario.n_t, scenario.n_refl, gains, seed);
    const PhaseConfig phases = align_phases(ch.h_tr, ch.h_st, ch.h_rd, scenario.n_active);
    return snr_vector_form(scenario, phases, ch, gains);
}

}  // namespace rislink
