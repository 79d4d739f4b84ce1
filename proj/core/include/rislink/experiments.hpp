#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rislink/config.hpp"
#include "rislink/metrics.hpp"
#include "rislink/table.hpp"

namespace rislink {

/// One curve of a sweep: a scenario under a fixed budget. Columns are
/// prefixed with `prefix` (e.g. "aris_20dbm_rate_bpshz").
struct Series {
    std::string prefix;
    ScenarioKind kind = ScenarioKind::pris;
    PowerBudget budget;
    // Element counts used in direct-amplification mode. Total-budget mode
    // derives them from the budget instead.
    std::size_t n_refl = 0;
    std::size_t n_active = 0;
};

struct PointResult {
    ScenarioKind kind = ScenarioKind::pris;
    std::size_t n_refl = 0;
    std::size_t n_active = 0;
    double beta = 1.0;
    BetaBranch branch = BetaBranch::passive;
    SystemPower power;
    LinkResult link;
};

/// Evaluates one series at one operating point. `active_override` replaces
/// the active count (ARIS size or HRIS n_ha) on n_active axes.
PointResult evaluate_series(const Series& series, const ExperimentConfig& cfg,
                            const LinkGains& gains,
                            std::optional<std::size_t> active_override = std::nullopt);

/// Per-series metric suffixes, in column order.
const std::vector<std::string>& series_metric_columns();

std::string axis_column(AxisKind axis);

Table run_sweep(const ExperimentConfig& cfg, AxisKind axis, const std::vector<double>& axis_values,
                const std::vector<Series>& series);

Table run_fig3(const ExperimentConfig& cfg);
Table run_fig4(const ExperimentConfig& cfg);
Table run_fig5(const ExperimentConfig& cfg);
Table run_fig6(const ExperimentConfig& cfg);
Table run_fig7(const ExperimentConfig& cfg);
Table run_fig8(const ExperimentConfig& cfg);

/// Sweep described entirely by the axis, axis_* and scenarios keys.
Table run_custom_sweep(const ExperimentConfig& cfg);

/// Dispatches "fig3" ... "fig8".
Table reproduce(std::string_view figure, const ExperimentConfig& cfg);
const std::vector<std::string>& figure_names();

/// Default axes of the figure runners (before axis_* overrides).
inline constexpr AxisRange kDefaultDstAxis{10.0, 30.0, 1.0};
inline constexpr AxisRange kDefaultPowerAxis{0.0, 30.0, 1.0};

}  // namespace rislink
