#include "rislink/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "rislink/errors.hpp"
#include "rislink/units.hpp"

namespace rislink {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view what) {
    throw ConfigError(std::string(key), "config key '" + std::string(key) + "': cannot parse '" +
                                            std::string(value) + "' as " + std::string(what));
}

double parse_real(std::string_view key, std::string_view value) {
    value = trim(value);
    double out = 0.0;
    const auto res = std::from_chars(value.data(), value.data() + value.size(), out);
    if (res.ec != std::errc() || res.ptr != value.data() + value.size() || !std::isfinite(out)) {
        bad_value(key, value, "a finite number");
    }
    return out;
}

std::uint64_t parse_unsigned(std::string_view key, std::string_view value) {
    value = trim(value);
    std::uint64_t out = 0;
    const auto res = std::from_chars(value.data(), value.data() + value.size(), out);
    if (res.ec != std::errc() || res.ptr != value.data() + value.size()) {
        bad_value(key, value, "a non-negative integer");
    }
    return out;
}

std::vector<std::string_view> split_list(std::string_view key, std::string_view value) {
    std::vector<std::string_view> items;
    std::size_t pos = 0;
    while (true) {
        const auto comma = value.find(',', pos);
        const auto item = trim(value.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
        if (item.empty()) {
            bad_value(key, value, "a comma-separated list without empty items");
        }
        items.push_back(item);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return items;
}

std::vector<double> parse_real_list(std::string_view key, std::string_view value) {
    std::vector<double> out;
    for (auto item : split_list(key, value)) {
        out.push_back(parse_real(key, item));
    }
    return out;
}

using Setter = std::function<void(ExperimentConfig&, std::string_view key, std::string_view value)>;

template <typename T>
Setter real_field(T ExperimentConfig::*field) {
    return [field](ExperimentConfig& c, std::string_view k, std::string_view v) {
        c.*field = parse_real(k, v);
    };
}

Setter count_field(std::size_t ExperimentConfig::*field) {
    return [field](ExperimentConfig& c, std::string_view k, std::string_view v) {
        c.*field = static_cast<std::size_t>(parse_unsigned(k, v));
    };
}

Setter list_field(std::vector<double> ExperimentConfig::*field) {
    return [field](ExperimentConfig& c, std::string_view k, std::string_view v) {
        c.*field = parse_real_list(k, v);
    };
}

Setter optional_real(std::optional<double> ExperimentConfig::*field) {
    return [field](ExperimentConfig& c, std::string_view k, std::string_view v) {
        c.*field = parse_real(k, v);
    };
}

// Ordered as documented in the README parameter dictionary.
const std::vector<std::pair<std::string, Setter>>& registry() {
    static const std::vector<std::pair<std::string, Setter>> table = {
        {"fc_ghz", real_field(&ExperimentConfig::fc_ghz)},
        {"bs_gain_dbi", real_field(&ExperimentConfig::bs_gain_dbi)},
        {"ue_gain_dbi", real_field(&ExperimentConfig::ue_gain_dbi)},
        {"h_bs_m", real_field(&ExperimentConfig::h_bs_m)},
        {"h_ut_m", real_field(&ExperimentConfig::h_ut_m)},
        {"d_st_m", real_field(&ExperimentConfig::d_st_m)},
        {"tx_power_dbw", real_field(&ExperimentConfig::tx_power_dbw)},
        {"noise_dbm", real_field(&ExperimentConfig::noise_dbm)},
        {"bandwidth_mhz", real_field(&ExperimentConfig::bandwidth_mhz)},
        {"n_t", count_field(&ExperimentConfig::n_t)},
        {"n_p", count_field(&ExperimentConfig::n_p)},
        {"n_a", count_field(&ExperimentConfig::n_a)},
        {"n_h", count_field(&ExperimentConfig::n_h)},
        {"n_ha", count_field(&ExperimentConfig::n_ha)},
        {"beta_max_sq_db", real_field(&ExperimentConfig::beta_max_sq_db)},
        {"beta_max_sq_dbs", list_field(&ExperimentConfig::beta_max_sq_dbs)},
        {"budget_mode",
         [](ExperimentConfig& c, std::string_view k, std::string_view v) {
             if (v == "total") {
                 c.budget_mode = BudgetMode::total;
             } else if (v == "direct") {
                 c.budget_mode = BudgetMode::direct_amplification;
             } else {
                 bad_value(k, v, "total|direct");
             }
         }},
        {"ris_budget_dbm", real_field(&ExperimentConfig::ris_budget_dbm)},
        {"ris_budgets_dbm", list_field(&ExperimentConfig::ris_budgets_dbm)},
        {"amp_budget_dbm", real_field(&ExperimentConfig::amp_budget_dbm)},
        {"aris_amp_budgets_dbm", list_field(&ExperimentConfig::aris_amp_budgets_dbm)},
        {"hris_amp_budgets_dbm", list_field(&ExperimentConfig::hris_amp_budgets_dbm)},
        {"p_e_dbm", real_field(&ExperimentConfig::p_e_dbm)},
        {"p_dc_dbm", real_field(&ExperimentConfig::p_dc_dbm)},
        {"v", real_field(&ExperimentConfig::v)},
        {"p_s_dbm", real_field(&ExperimentConfig::p_s_dbm)},
        {"p_d_dbm", real_field(&ExperimentConfig::p_d_dbm)},
        {"pi_lambda", real_field(&ExperimentConfig::pi_lambda)},
        {"incident_power_model",
         [](ExperimentConfig& c, std::string_view k, std::string_view v) {
             if (v == "per-element") {
                 c.incident = IncidentPowerModel::per_element;
             } else if (v == "array-gain") {
                 c.incident = IncidentPowerModel::array_gain;
             } else {
                 bad_value(k, v, "per-element|array-gain");
             }
         }},
        {"hris_fill",
         [](ExperimentConfig& c, std::string_view k, std::string_view v) {
             if (v == "best-snr") {
                 c.hris_fill = HrisFill::best_snr;
             } else if (v == "largest-feasible") {
                 c.hris_fill = HrisFill::largest_feasible;
             } else {
                 bad_value(k, v, "best-snr|largest-feasible");
             }
         }},
        {"seed",
         [](ExperimentConfig& c, std::string_view k, std::string_view v) {
             c.seed = parse_unsigned(k, v);
         }},
        {"axis",
         [](ExperimentConfig& c, std::string_view k, std::string_view v) {
             try {
                 c.axis = parse_axis_kind(v);
             } catch (const InvalidArgument&) {
                 bad_value(k, v, "d_st|p_dbw|n_active");
             }
         }},
        {"axis_start", optional_real(&ExperimentConfig::axis_start)},
        {"axis_stop", optional_real(&ExperimentConfig::axis_stop)},
        {"axis_step", optional_real(&ExperimentConfig::axis_step)},
        {"scenarios",
         [](ExperimentConfig& c, std::string_view k, std::string_view v) {
             std::vector<ScenarioKind> kinds;
             for (auto item : split_list(k, v)) {
                 try {
                     kinds.push_back(parse_scenario_kind(item));
                 } catch (const InvalidArgument&) {
                     bad_value(k, item, "pris|aris|hris");
                 }
             }
             c.scenarios = std::move(kinds);
         }},
    };
    return table;
}

const Setter* find_setter(std::string_view key) {
    for (const auto& [name, setter] : registry()) {
        if (name == key) {
            return &setter;
        }
    }
    return nullptr;
}

void check(bool ok, const char* key, const std::string& message) {
    if (!ok) {
        throw ConfigError(key, std::string("config key '") + key + "': " + message);
    }
}

}  // namespace

std::string_view to_string(AxisKind axis) {
    switch (axis) {
        case AxisKind::d_st: return "d_st";
        case AxisKind::p_dbw: return "p_dbw";
        case AxisKind::n_active: return "n_active";
    }
    return "unknown";
}

AxisKind parse_axis_kind(std::string_view name) {
    if (name == "d_st") return AxisKind::d_st;
    if (name == "p_dbw") return AxisKind::p_dbw;
    if (name == "n_active") return AxisKind::n_active;
    throw InvalidArgument("unknown axis '" + std::string(name) + "' (expected d_st|p_dbw|n_active)");
}

std::vector<double> AxisRange::values() const {
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw ConfigError("axis_step", "config key 'axis_step': step must be positive");
    }
    if (!(stop >= start)) {
        throw ConfigError("axis_stop", "config key 'axis_stop': empty axis range (stop < start)");
    }
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(start + static_cast<double>(i) * step);
    }
    return out;
}

void ExperimentConfig::set(std::string_view key, std::string_view value) {
    key = trim(key);
    value = trim(value);
    const Setter* setter = find_setter(key);
    if (setter == nullptr) {
        throw ConfigError(std::string(key), "unknown config key '" + std::string(key) + "'");
    }
    if (value.empty()) {
        throw ConfigError(std::string(key), "config key '" + std::string(key) + "' has no value");
    }
    (*setter)(*this, key, value);
}

void ExperimentConfig::validate() const {
    check(fc_ghz > 0.0, "fc_ghz", "carrier frequency must be positive");
    check(h_bs_m > h_ut_m, "h_bs_m", "BS must be higher than the UE floor");
    check(h_ut_m > 1.0, "h_ut_m", "UE height must exceed the 1 m environment height");
    check(d_st_m >= kMinUmaDistance, "d_st_m", "must be at least 10 m");
    check(bandwidth_mhz > 0.0, "bandwidth_mhz", "must be positive");
    check(n_t >= 1, "n_t", "need at least one transmission-RIS element");
    check(n_ha <= n_h, "n_ha", "cannot exceed n_h");
    check(beta_max_sq_db >= 0.0, "beta_max_sq_db", "must be >= 0 dB");
    check(!beta_max_sq_dbs.empty(), "beta_max_sq_dbs", "needs at least one value");
    for (double b : beta_max_sq_dbs) {
        check(b >= 0.0, "beta_max_sq_dbs", "values must be >= 0 dB");
    }
    check(!ris_budgets_dbm.empty(), "ris_budgets_dbm", "needs at least one value");
    check(!aris_amp_budgets_dbm.empty(), "aris_amp_budgets_dbm", "needs at least one value");
    check(!hris_amp_budgets_dbm.empty(), "hris_amp_budgets_dbm", "needs at least one value");
    check(v > 0.0 && v <= 1.0, "v", "amplifier efficiency must lie in (0, 1]");
    check(pi_lambda >= 0.0 && pi_lambda <= 1.0, "pi_lambda", "must lie in [0, 1]");
    if (scenarios) {
        check(!scenarios->empty(), "scenarios", "needs at least one scenario");
    }
}

PathLossParams ExperimentConfig::path_loss() const {
    PathLossParams p;
    p.fc_ghz = fc_ghz;
    p.bs_gain_dbi = bs_gain_dbi;
    p.ue_gain_dbi = ue_gain_dbi;
    return p;
}

ScenarioGeometry ExperimentConfig::geometry() const { return geometry_at(d_st_m); }

ScenarioGeometry ExperimentConfig::geometry_at(double d_st) const {
    return build_reference_geometry(d_st, h_bs_m, h_ut_m);
}

LinkGains ExperimentConfig::gains() const { return gains_at(d_st_m); }

LinkGains ExperimentConfig::gains_at(double d_st) const {
    return link_gains(path_loss(), geometry_at(d_st), PowerLevel::from_dbw(tx_power_dbw),
                      PowerLevel::from_dbm(noise_dbm));
}

PowerBudget ExperimentConfig::total_budget(double budget_dbm, double beta_max_sq) const {
    PowerBudget b;
    b.mode = BudgetMode::total;
    b.budget_w = dbm_to_watts(budget_dbm).watts();
    b.p_e = dbm_to_watts(p_e_dbm).watts();
    b.p_dc = dbm_to_watts(p_dc_dbm).watts();
    b.v = v;
    b.beta_max = Decibel(beta_max_sq).amplitude();
    b.incident = incident;
    return b;
}

PowerBudget ExperimentConfig::direct_budget(double amp_dbm, double beta_max_sq) const {
    PowerBudget b = total_budget(amp_dbm, beta_max_sq);
    b.mode = BudgetMode::direct_amplification;
    return b;
}

PowerBudget ExperimentConfig::point_budget() const {
    if (budget_mode == BudgetMode::direct_amplification) {
        return direct_budget(amp_budget_dbm, beta_max_sq_db);
    }
    return total_budget(ris_budget_dbm, beta_max_sq_db);
}

double ExperimentConfig::p_s_w() const { return dbm_to_watts(p_s_dbm).watts(); }
double ExperimentConfig::p_d_w() const { return dbm_to_watts(p_d_dbm).watts(); }

AxisRange ExperimentConfig::required_axis() const {
    check(axis_start.has_value(), "axis_start", "required for this command");
    check(axis_stop.has_value(), "axis_stop", "required for this command");
    check(axis_step.has_value(), "axis_step", "required for this command");
    return {*axis_start, *axis_stop, *axis_step};
}

AxisRange ExperimentConfig::axis_or(AxisRange fallback) const {
    if (axis_start) fallback.start = *axis_start;
    if (axis_stop) fallback.stop = *axis_stop;
    if (axis_step) fallback.step = *axis_step;
    return fallback;
}

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> k;
        for (const auto& entry : registry()) {
            k.push_back(entry.first);
        }
        return k;
    }();
    return keys;
}

void apply_config_text(ExperimentConfig& cfg, std::string_view text) {
    std::set<std::string, std::less<>> seen;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            const std::string key(trim(line));
            throw ConfigError(key, "line " + std::to_string(line_no) + ": expected 'key = value' for '" +
                                       key + "'");
        }
        const std::string key(trim(line.substr(0, eq)));
        if (!seen.insert(key).second) {
            throw ConfigError(key, "config key '" + key + "' given twice");
        }
        cfg.set(key, line.substr(eq + 1));
    }
}

void apply_config_file(ExperimentConfig& cfg, const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("", "cannot open config file '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    apply_config_text(cfg, buf.str());
}

void apply_override(ExperimentConfig& cfg, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos) {
        throw ConfigError(std::string(trim(assignment)),
                          "override '" + std::string(assignment) + "' is not key=value");
    }
    cfg.set(assignment.substr(0, eq), assignment.substr(eq + 1));
}

}  // namespace rislink
