#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rislink/channel.hpp"
#include "rislink/optimize.hpp"
#include "rislink/ris_link.hpp"

namespace rislink {

enum class AxisKind { d_st, p_dbw, n_active };

std::string_view to_string(AxisKind axis);
AxisKind parse_axis_kind(std::string_view name);

struct AxisRange {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;

    /// start, start + step, ... up to stop inclusive (1e-9 step tolerance).
    std::vector<double> values() const;
};

/// Every tunable of the simulator. Defaults reproduce the reference indoor
/// enhancement setup; dB-valued quantities stay in dB here and are converted
/// by the accessors below.
struct ExperimentConfig {
    // propagation
    double fc_ghz = 28.0;
    double bs_gain_dbi = 5.0;
    double ue_gain_dbi = 0.0;
    double h_bs_m = kDefaultBsHeight;
    double h_ut_m = kDefaultUtHeight;
    double d_st_m = 12.0;
    double tx_power_dbw = 20.0;
    double noise_dbm = -94.0;
    double bandwidth_mhz = 10.0;  // reporting only; enters through noise_dbm

    // surfaces
    std::size_t n_t = 400;
    std::size_t n_p = 1000;
    std::size_t n_a = 256;
    std::size_t n_h = 1000;
    std::size_t n_ha = 20;

    // power model
    double beta_max_sq_db = 40.0;
    std::vector<double> beta_max_sq_dbs{40.0, 50.0};
    BudgetMode budget_mode = BudgetMode::total;
    double ris_budget_dbm = 20.0;
    std::vector<double> ris_budgets_dbm{20.0, 15.0};
    double amp_budget_dbm = 20.0;
    std::vector<double> aris_amp_budgets_dbm{20.0, 10.0, 0.0};
    std::vector<double> hris_amp_budgets_dbm{10.0, 0.0};
    double p_e_dbm = -10.0;
    double p_dc_dbm = -5.0;
    double v = 0.5;
    double p_s_dbm = 20.0;
    double p_d_dbm = 20.0;
    double pi_lambda = 0.5;
    IncidentPowerModel incident = IncidentPowerModel::per_element;
    HrisFill hris_fill = HrisFill::best_snr;

    std::uint64_t seed = 1;

    // custom sweeps; required by `sweep`, optional overrides for `reproduce`
    std::optional<AxisKind> axis;
    std::optional<double> axis_start;
    std::optional<double> axis_stop;
    std::optional<double> axis_step;
    std::optional<std::vector<ScenarioKind>> scenarios;

    /// Parses and assigns one key. Throws ConfigError naming the key.
    void set(std::string_view key, std::string_view value);
    /// Range and consistency checks. Throws ConfigError.
    void validate() const;

    PathLossParams path_loss() const;
    ScenarioGeometry geometry() const;
    ScenarioGeometry geometry_at(double d_st) const;
    LinkGains gains() const;
    LinkGains gains_at(double d_st) const;

    /// Total-budget model at `budget_dbm` with beta_max^2 = `beta_max_sq`.
    PowerBudget total_budget(double budget_dbm, double beta_max_sq) const;
    /// Direct amplification budget of `amp_dbm`.
    PowerBudget direct_budget(double amp_dbm, double beta_max_sq) const;
    /// Budget selected by budget_mode, ris_budget_dbm / amp_budget_dbm and beta_max_sq_db.
    PowerBudget point_budget() const;

    double p_s_w() const;
    double p_d_w() const;

    /// Axis from the axis_* keys; throws ConfigError naming the first missing key.
    AxisRange required_axis() const;
    /// Axis from the axis_* keys when all are present, otherwise `fallback`.
    AxisRange axis_or(AxisRange fallback) const;
};

/// Names of all accepted keys, in documentation order.
const std::vector<std::string>& config_keys();

/// `key = value` lines, `#` comments, blank lines ignored.
void apply_config_text(ExperimentConfig& cfg, std::string_view text);
void apply_config_file(ExperimentConfig& cfg, const std::filesystem::path& path);
/// Single `key=value` override, as given on the command line.
void apply_override(ExperimentConfig& cfg, std::string_view assignment);

}  // namespace rislink
