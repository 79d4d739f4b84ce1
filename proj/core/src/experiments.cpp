#include "rislink/experiments.hpp"

#include <cmath>

#include "rislink/errors.hpp"
#include "rislink/optimize.hpp"

namespace rislink {
namespace {

std::string label(double value) { return format_number(value); }

std::size_t axis_count(double value) {
    const double r = std::round(value);
    if (std::abs(value - r) > 1e-9 || r < 1.0) {
        throw ConfigError("axis_start", "n_active axis values must be positive integers");
    }
    return static_cast<std::size_t>(r);
}

PointResult finish(const ExperimentConfig& cfg, const LinkGains& gains, const PowerBudget& budget,
                   const RisScenario& scenario, double snr, BetaBranch branch) {
    PointResult r;
    r.kind = scenario.kind;
    r.n_refl = scenario.n_refl;
    r.n_active = scenario.n_active;
    r.beta = scenario.beta;
    r.branch = branch;
    const double consumed = ris_power(scenario, gains, budget, scenario.beta);
    r.power = total_power(gains.p, budget, cfg.n_t, cfg.p_s_w(), cfg.p_d_w(), consumed);
    r.link = make_link_result(snr, r.power.total, cfg.pi_lambda);
    return r;
}

PointResult evaluate_total(const Series& s, const ExperimentConfig& cfg, const LinkGains& g,
                           std::optional<std::size_t> active) {
    const std::size_t n_t = cfg.n_t;
    switch (s.kind) {
        case ScenarioKind::pris: {
            const std::size_t n_p = optimal_pris_count(s.budget);
            if (n_p == 0) {
                throw BudgetExhausted("RIS budget cannot power a single passive element");
            }
            const RisScenario sc = RisScenario::pris(n_t, n_p);
            return finish(cfg, g, s.budget, sc, snr_closed_form(sc, g), BetaBranch::passive);
        }
        case ScenarioKind::aris: {
            std::size_t n_a = 0;
            BetaChoice beta;
            double snr = 0.0;
            if (active) {
                const CountEvaluation e = evaluate_aris(g, s.budget, n_t, *active);
                n_a = e.count;
                beta = e.beta;
                snr = e.snr;
            } else {
                const OptimumReport rep = optimal_aris(g, s.budget, n_t);
                n_a = rep.best_count;
                beta = {rep.best_beta, rep.branch, 0.0};
                snr = rep.best_snr;
            }
            return finish(cfg, g, s.budget, RisScenario::aris(n_t, n_a, beta.beta), snr, beta.branch);
        }
        case ScenarioKind::hris: {
            const std::size_t n_ha = active.value_or(cfg.n_ha);
            const HrisAllocation a = hris_allocate(g, s.budget, n_t, n_ha, cfg.hris_fill);
            const RisScenario sc = RisScenario::hris(n_t, a.n_h, a.n_ha, a.result.beta);
            return finish(cfg, g, s.budget, sc, a.result.snr, a.result.branch);
        }
    }
    throw InvalidArgument("unknown scenario kind");
}

PointResult evaluate_direct(const Series& s, const ExperimentConfig& cfg, const LinkGains& g,
                            std::optional<std::size_t> active) {
    const std::size_t n_t = cfg.n_t;
    switch (s.kind) {
        case ScenarioKind::pris: {
            const RisScenario sc = RisScenario::pris(n_t, s.n_refl);
            return finish(cfg, g, s.budget, sc, snr_closed_form(sc, g), BetaBranch::passive);
        }
        case ScenarioKind::aris: {
            const std::size_t n_a = active.value_or(s.n_refl);
            const RisScenario base = RisScenario::aris(n_t, n_a, 1.0);
            const BetaChoice b = select_beta(base, g, s.budget);
            const RisScenario sc = base.with_beta(b.beta);
            return finish(cfg, g, s.budget, sc, snr_closed_form(sc, g), b.branch);
        }
        case ScenarioKind::hris: {
            const std::size_t n_ha = active.value_or(s.n_active);
            if (n_ha > s.n_refl) {
                throw ConfigError("n_ha", "active HRIS count exceeds n_h");
            }
            const HrisResult r = hris_snr_given_active(g, s.budget, n_t, s.n_refl, n_ha);
            const RisScenario sc = RisScenario::hris(n_t, s.n_refl, n_ha, r.beta);
            return finish(cfg, g, s.budget, sc, r.snr, r.branch);
        }
    }
    throw InvalidArgument("unknown scenario kind");
}

std::vector<Series> budget_series(const ExperimentConfig& cfg,
                                      const std::vector<ScenarioKind>& kinds) {
    std::vector<Series> out;
    for (double budget : cfg.ris_budgets_dbm) {
        for (ScenarioKind kind : kinds) {
            Series s;
            s.prefix = std::string(to_string(kind)) + "_" + label(budget) + "dbm";
            s.kind = kind;
            s.budget = cfg.total_budget(budget, cfg.beta_max_sq_db);
            out.push_back(std::move(s));
        }
    }
    return out;
}

const std::vector<ScenarioKind> kAllKinds{ScenarioKind::pris, ScenarioKind::aris,
                                          ScenarioKind::hris};

}  // namespace

PointResult evaluate_series(const Series& series, const ExperimentConfig& cfg,
                            const LinkGains& gains, std::optional<std::size_t> active_override) {
    if (series.budget.mode == BudgetMode::total) {
        return evaluate_total(series, cfg, gains, active_override);
    }
    return evaluate_direct(series, cfg, gains, active_override);
}

const std::vector<std::string>& series_metric_columns() {
    static const std::vector<std::string> cols = {
        "snr", "rate_bpshz", "total_power_w", "ee_bpshz_per_w", "pi",
        "beta", "n_refl", "n_active", "branch"};
    return cols;
}

std::string axis_column(AxisKind axis) {
    switch (axis) {
        case AxisKind::d_st: return "d_st_m";
        case AxisKind::p_dbw: return "p_dbw";
        case AxisKind::n_active: return "n_active";
    }
    return "axis";
}

Table run_sweep(const ExperimentConfig& cfg, AxisKind axis, const std::vector<double>& axis_values,
                const std::vector<Series>& series) {
    cfg.validate();
    if (axis_values.empty()) {
        throw ConfigError("axis_start", "empty sweep axis");
    }
    Table t;
    t.columns.push_back(axis_column(axis));
    for (const auto& s : series) {
        for (const auto& m : series_metric_columns()) {
            t.columns.push_back(s.prefix + "_" + m);
        }
    }

    for (double x : axis_values) {
        LinkGains gains;
        std::optional<std::size_t> active;
        switch (axis) {
            case AxisKind::d_st:
                gains = cfg.gains_at(x);
                break;
            case AxisKind::p_dbw:
                gains = cfg.gains().with_transmit_power(PowerLevel::from_dbw(x).watts());
                break;
            case AxisKind::n_active:
                gains = cfg.gains();
                active = axis_count(x);
                break;
        }
        std::vector<Cell> row;
        row.reserve(t.columns.size());
        if (axis == AxisKind::n_active) {
            row.emplace_back(static_cast<std::int64_t>(*active));
        } else {
            row.emplace_back(x);
        }
        for (const auto& s : series) {
            const PointResult r = evaluate_series(s, cfg, gains, active);
            row.emplace_back(r.link.snr);
            row.emplace_back(r.link.rate);
            row.emplace_back(r.link.total_power);
            row.emplace_back(r.link.ee);
            row.emplace_back(r.link.pi);
            row.emplace_back(r.beta);
            row.emplace_back(static_cast<std::int64_t>(r.n_refl));
            row.emplace_back(static_cast<std::int64_t>(r.n_active));
            row.emplace_back(std::string(to_string(r.branch)));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table run_fig3(const ExperimentConfig& cfg) {
    cfg.validate();
    Table t;
    t.columns = {"d_st_m", "uma_los_gain_db"};
    const PathLossParams params = cfg.path_loss();
    for (double d : cfg.axis_or(kDefaultDstAxis).values()) {
        t.rows.push_back({d, uma_los_gain_db(params, cfg.geometry_at(d))});
    }
    return t;
}

Table run_fig4(const ExperimentConfig& cfg) {
    return run_sweep(cfg, AxisKind::d_st, cfg.axis_or(kDefaultDstAxis).values(),
                     budget_series(cfg, kAllKinds));
}

Table run_fig5(const ExperimentConfig& cfg) {
    std::vector<Series> series;
    Series pris;
    pris.prefix = "pris";
    pris.kind = ScenarioKind::pris;
    pris.budget = cfg.direct_budget(cfg.amp_budget_dbm, cfg.beta_max_sq_db);
    pris.n_refl = cfg.n_p;
    series.push_back(pris);
    for (double pa : cfg.aris_amp_budgets_dbm) {
        Series s;
        s.prefix = "aris_pa" + label(pa) + "dbm";
        s.kind = ScenarioKind::aris;
        s.budget = cfg.direct_budget(pa, cfg.beta_max_sq_db);
        s.n_refl = cfg.n_a;
        s.n_active = cfg.n_a;
        series.push_back(std::move(s));
    }
    for (double ph : cfg.hris_amp_budgets_dbm) {
        Series s;
        s.prefix = "hris_ph" + label(ph) + "dbm";
        s.kind = ScenarioKind::hris;
        s.budget = cfg.direct_budget(ph, cfg.beta_max_sq_db);
        s.n_refl = cfg.n_h;
        s.n_active = cfg.n_ha;
        series.push_back(std::move(s));
    }
    return run_sweep(cfg, AxisKind::p_dbw, cfg.axis_or(kDefaultPowerAxis).values(), series);
}

Table run_fig6(const ExperimentConfig& cfg) {
    std::vector<Series> series;
    for (double b : cfg.beta_max_sq_dbs) {
        for (ScenarioKind kind : {ScenarioKind::aris, ScenarioKind::hris}) {
            Series s;
            s.prefix = std::string(to_string(kind)) + "_" + label(b) + "db";
            s.kind = kind;
            s.budget = cfg.total_budget(cfg.ris_budget_dbm, b);
            series.push_back(std::move(s));
        }
    }
    Series pris;
    pris.prefix = "pris";
    pris.kind = ScenarioKind::pris;
    pris.budget = cfg.total_budget(cfg.ris_budget_dbm, cfg.beta_max_sq_db);
    series.push_back(pris);

    const PowerBudget ref = cfg.total_budget(cfg.ris_budget_dbm, cfg.beta_max_sq_db);
    const ArisTradeoff t = aris_tradeoff(cfg.gains(), ref, cfg.n_t);
    if (t.n_max < 1) {
        throw BudgetExhausted("RIS budget cannot power a single active element");
    }
    const AxisRange axis = cfg.axis_or({1.0, static_cast<double>(t.n_max), 1.0});
    return run_sweep(cfg, AxisKind::n_active, axis.values(), series);
}

Table run_fig7(const ExperimentConfig& cfg) {
    return run_sweep(cfg, AxisKind::p_dbw, cfg.axis_or(kDefaultPowerAxis).values(),
                     budget_series(cfg, kAllKinds));
}

Table run_fig8(const ExperimentConfig& cfg) {
    return run_sweep(cfg, AxisKind::p_dbw, cfg.axis_or(kDefaultPowerAxis).values(),
                     budget_series(cfg, kAllKinds));
}

Table run_custom_sweep(const ExperimentConfig& cfg) {
    if (!cfg.axis) {
        throw ConfigError("axis", "config key 'axis' is required for sweep");
    }
    const AxisRange range = cfg.required_axis();
    if (!cfg.scenarios) {
        throw ConfigError("scenarios", "config key 'scenarios' is required for sweep");
    }
    std::vector<Series> series;
    if (cfg.budget_mode == BudgetMode::total) {
        series = budget_series(cfg, *cfg.scenarios);
    } else {
        for (ScenarioKind kind : *cfg.scenarios) {
            Series s;
            s.prefix = std::string(to_string(kind));
            s.kind = kind;
            s.budget = cfg.direct_budget(cfg.amp_budget_dbm, cfg.beta_max_sq_db);
            switch (kind) {
                case ScenarioKind::pris: s.n_refl = cfg.n_p; break;
                case ScenarioKind::aris: s.n_refl = s.n_active = cfg.n_a; break;
                case ScenarioKind::hris:
                    s.n_refl = cfg.n_h;
                    s.n_active = cfg.n_ha;
                    break;
            }
            series.push_back(std::move(s));
        }
    }
    return run_sweep(cfg, *cfg.axis, range.values(), series);
}

const std::vector<std::string>& figure_names() {
    static const std::vector<std::string> names = {"fig3", "fig4", "fig5", "fig6", "fig7", "fig8"};
    return names;
}

Table reproduce(std::string_view figure, const ExperimentConfig& cfg) {
    if (figure == "fig3") return run_fig3(cfg);
    if (figure == "fig4") return run_fig4(cfg);
    if (figure == "fig5") return run_fig5(cfg);
    if (figure == "fig6") return run_fig6(cfg);
    if (figure == "fig7") return run_fig7(cfg);
    if (figure == "fig8") return run_fig8(cfg);
    throw InvalidArgument("unknown figure '" + std::string(figure) + "' (expected fig3..fig8)");
}

}  // namespace rislink
