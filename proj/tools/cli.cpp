#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rislink/channel.hpp"
#include "rislink/config.hpp"
#include "rislink/errors.hpp"
#include "rislink/experiments.hpp"
#include "rislink/optimize.hpp"
#include "rislink/table.hpp"

namespace rislink::cli {
namespace {

struct Options {
    std::string config_path;
    std::vector<std::string> overrides;
    std::string out_path;
    std::string format = "csv";
    std::uint64_t seed = 0;
    bool seed_given = false;

    std::string scenario;
    std::string optimize_kind;
    bool brute_force = false;
    std::string figure;
};

ExperimentConfig load_config(const Options& opt) {
    ExperimentConfig cfg;
    if (!opt.config_path.empty()) {
        apply_config_file(cfg, opt.config_path);
    }
    for (const auto& o : opt.overrides) {
        apply_override(cfg, o);
    }
    if (opt.seed_given) {
        cfg.seed = opt.seed;
    }
    cfg.validate();
    return cfg;
}

void emit(const Options& opt, const Table& table, std::ostream& out) {
    const TableFormat fmt = parse_table_format(opt.format);
    if (opt.out_path.empty()) {
        write_table(out, table, fmt);
        return;
    }
    std::ofstream file(opt.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw std::runtime_error("cannot open '" + opt.out_path + "' for writing");
    }
    write_table(file, table, fmt);
    if (!file.flush()) {
        throw std::runtime_error("failed writing '" + opt.out_path + "'");
    }
}

Table channel_gain_table(const ExperimentConfig& cfg) {
    const PathLossParams params = cfg.path_loss();
    const ScenarioGeometry geom = cfg.geometry();
    const LinkGains g = cfg.gains();
    const double lambda = wavelength_m(cfg.fc_ghz);
    const std::size_t n_rx = std::max({cfg.n_p, cfg.n_a, cfg.n_h, std::size_t{1}});
    const FarFieldCheck ff = farfield_holds(geom.d_tr(), n_rx, lambda / 2.0, lambda);

    Table t;
    t.columns = {"d_st_m",       "d_st_prime_m",    "d_tr_m",         "d_rd_m",
                 "d_bp_m",       "beta_st_db",      "beta_tr_db",     "beta_rd_db",
                 "wavelength_m", "farfield_ratio",  "farfield_holds"};
    t.rows.push_back({geom.d_st(), geom.d_st_prime(), geom.d_tr(), geom.d_rd(),
                      uma_breakpoint_distance(params, cfg.h_bs_m, cfg.h_ut_m),
                      linear_to_db(g.beta_st), linear_to_db(g.beta_tr), linear_to_db(g.beta_rd),
                      lambda, ff.ratio, std::string(ff.holds ? "true" : "false")});
    return t;
}

Series point_series(const ExperimentConfig& cfg, ScenarioKind kind) {
    Series s;
    s.prefix = std::string(to_string(kind));
    s.kind = kind;
    s.budget = cfg.point_budget();
    switch (kind) {
        case ScenarioKind::pris: s.n_refl = cfg.n_p; break;
        case ScenarioKind::aris: s.n_refl = s.n_active = cfg.n_a; break;
        case ScenarioKind::hris:
            s.n_refl = cfg.n_h;
            s.n_active = cfg.n_ha;
            break;
    }
    return s;
}

Table snr_table(const ExperimentConfig& cfg, ScenarioKind kind) {
    const LinkGains g = cfg.gains();
    const PointResult r = evaluate_series(point_series(cfg, kind), cfg, g);
    const RisScenario sc{kind, cfg.n_t, r.n_refl, r.n_active, r.beta};
    const double vec = aligned_vector_snr(sc, g, cfg.seed);

    Table t;
    t.columns = {"scenario", "budget_mode", "n_t", "n_refl", "n_active", "beta", "branch",
                 "snr", "snr_db", "rate_bpshz", "total_power_w", "ee_bpshz_per_w", "pi",
                 "snr_vector_form", "seed"};
    t.rows.push_back({std::string(to_string(kind)), std::string(to_string(cfg.budget_mode)),
                      static_cast<std::int64_t>(cfg.n_t), static_cast<std::int64_t>(r.n_refl),
                      static_cast<std::int64_t>(r.n_active), r.beta,
                      std::string(to_string(r.branch)), r.link.snr, linear_to_db(r.link.snr),
                      r.link.rate, r.link.total_power, r.link.ee, r.link.pi, vec,
                      static_cast<std::int64_t>(cfg.seed)});
    return t;
}

Table optimize_table(const ExperimentConfig& cfg, ScenarioKind kind, bool brute_force) {
    if (cfg.budget_mode != BudgetMode::total) {
        throw ConfigError("budget_mode", "optimize needs budget_mode = total");
    }
    const LinkGains g = cfg.gains();
    const PowerBudget b = cfg.point_budget();
    Table t;
    switch (kind) {
        case ScenarioKind::pris: {
            const std::size_t n = optimal_pris_count(b);
            const double snr = optimal_pris_snr_integer(g, b, cfg.n_t);
            t.columns = {"scenario", "best_count", "snr", "snr_continuous", "rate_bpshz"};
            t.rows.push_back({std::string("pris"), static_cast<std::int64_t>(n), snr,
                              optimal_pris_snr(g, b, cfg.n_t), achievable_rate(snr)});
            break;
        }
        case ScenarioKind::aris: {
            const OptimumReport r = brute_force ? brute_force_aris(g, b, cfg.n_t)
                                                : optimal_aris(g, b, cfg.n_t);
            t.columns = {"scenario", "method", "best_count", "best_beta", "branch", "snr",
                         "rate_bpshz", "n_a1", "n_a2", "n_star", "n_max", "candidates_evaluated"};
            t.rows.push_back({std::string("aris"),
                              std::string(brute_force ? "brute-force" : "closed-form"),
                              static_cast<std::int64_t>(r.best_count), r.best_beta,
                              std::string(to_string(r.branch)), r.best_snr,
                              achievable_rate(r.best_snr), r.tradeoff.n_a1, r.tradeoff.n_a2,
                              r.tradeoff.n_star, static_cast<std::int64_t>(r.tradeoff.n_max),
                              static_cast<std::int64_t>(r.candidates_evaluated)});
            break;
        }
        case ScenarioKind::hris: {
            const HrisAllocation a = hris_allocate(g, b, cfg.n_t, cfg.n_ha, cfg.hris_fill);
            t.columns = {"scenario", "n_h", "n_ha", "n_hp", "beta", "branch", "snr",
                         "rate_bpshz", "candidates_evaluated"};
            t.rows.push_back({std::string("hris"), static_cast<std::int64_t>(a.n_h),
                              static_cast<std::int64_t>(a.n_ha),
                              static_cast<std::int64_t>(a.n_h - a.n_ha), a.result.beta,
                              std::string(to_string(a.result.branch)), a.result.snr,
                              achievable_rate(a.result.snr),
                              static_cast<std::int64_t>(a.candidates_evaluated)});
            break;
        }
    }
    return t;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Link-budget simulator for transmission-RIS indoor coverage", "rislink"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--config", opt.config_path, "key = value parameter file");
    app.add_option("--set", opt.overrides, "override one parameter, key=value (repeatable)")
        ->allow_extra_args(false);
    app.add_option("--out", opt.out_path, "write the table here instead of stdout");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    auto* seed = app.add_option("--seed", opt.seed, "channel phase seed");

    app.add_subcommand("channel-gain", "link distances and channel gains at d_st_m");
    auto* snr = app.add_subcommand("snr", "SNR, rate and efficiency of one scenario");
    snr->add_option("scenario", opt.scenario, "pris|aris|hris")
        ->required()
        ->check(CLI::IsMember({"pris", "aris", "hris"}));
    auto* optimize = app.add_subcommand("optimize", "optimal element counts under a total budget");
    optimize->add_option("scenario", opt.optimize_kind, "pris|aris|hris")
        ->required()
        ->check(CLI::IsMember({"pris", "aris", "hris"}));
    optimize->add_flag("--brute-force", opt.brute_force, "exhaustive ARIS count search");
    app.add_subcommand("sweep", "custom sweep from the axis* and scenarios keys");
    auto* repro = app.add_subcommand("reproduce", "figure data with reference defaults");
    repro->add_option("figure", opt.figure, "fig3..fig8")
        ->required()
        ->check(CLI::IsMember(figure_names()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    opt.seed_given = seed->count() > 0;

    try {
        const ExperimentConfig cfg = load_config(opt);
        const std::string cmd = app.get_subcommands().front()->get_name();
        Table table;
        if (cmd == "channel-gain") {
            table = channel_gain_table(cfg);
        } else if (cmd == "snr") {
            table = snr_table(cfg, parse_scenario_kind(opt.scenario));
        } else if (cmd == "optimize") {
            table = optimize_table(cfg, parse_scenario_kind(opt.optimize_kind), opt.brute_force);
        } else if (cmd == "sweep") {
            table = run_custom_sweep(cfg);
        } else {
            table = reproduce(opt.figure, cfg);
        }
        emit(opt, table, out);
    } catch (const ConfigError& e) {
        err << "rislink: config error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "rislink: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitOk;
}

}  // namespace rislink::cli
