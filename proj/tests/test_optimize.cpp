#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "rislink/errors.hpp"
#include "rislink/optimize.hpp"

using namespace rislink;

namespace {

LinkGains gains_at(double d_st, double p_dbw = 20.0) {
    return link_gains({}, build_reference_geometry(d_st), PowerLevel::from_dbw(p_dbw),
                      PowerLevel::from_dbm(-94.0));
}

PowerBudget budget(double budget_dbm, double beta_max_sq_db = 40.0) {
    PowerBudget b;
    b.budget_w = dbm_to_watts(budget_dbm).watts();
    b.p_e = dbm_to_watts(-10.0).watts();
    b.p_dc = dbm_to_watts(-5.0).watts();
    b.v = 0.5;
    b.beta_max = Decibel(beta_max_sq_db).amplitude();
    return b;
}

oracle::Gains to_oracle(const LinkGains& g) {
    return {g.beta_st, g.beta_tr, g.beta_rd, g.p, g.delta_sq};
}

struct RandomCase {
    LinkGains gains;
    PowerBudget budget;
    std::size_t n_t;
};

RandomCase random_case(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    RandomCase c;
    c.gains = gains_at(10.0 + 90.0 * u(rng), -10.0 + 40.0 * u(rng));
    c.budget = budget(5.0 + 20.0 * u(rng), 20.0 + 40.0 * u(rng));
    c.budget.p_e = dbm_to_watts(-15.0 + 10.0 * u(rng)).watts();
    c.budget.p_dc = dbm_to_watts(-10.0 + 10.0 * u(rng)).watts();
    c.budget.v = 0.2 + 0.8 * u(rng);
    c.n_t = 1 + static_cast<std::size_t>(500.0 * u(rng));
    return c;
}

}  // namespace

TEST_SUITE("optimize") {

TEST_CASE("PRIS element count") {
    CHECK(optimal_pris_count(budget(20.0)) == 1000);
    CHECK(optimal_pris_count(budget(15.0)) == 316);
    PowerBudget tiny = budget(20.0);
    tiny.budget_w = 0.5 * tiny.p_e;
    CHECK(optimal_pris_count(tiny) == 0);
    tiny.p_e = 0.0;
    CHECK_THROWS_AS(optimal_pris_count(tiny), InvalidArgument);
}

TEST_CASE("PRIS optimum SNR") {
    const LinkGains g = gains_at(12.0);
    const PowerBudget b = budget(20.0);
    CHECK(optimal_pris_snr(g, b, 400) ==
          doctest::Approx(snr_closed_form(RisScenario::pris(400, 1000), g)).epsilon(1e-12));
    CHECK(optimal_pris_snr(g, b, 400) == doctest::Approx(5879.1960712784285).epsilon(1e-12));
    CHECK(optimal_pris_snr_integer(g, b, 400) == doctest::Approx(5879.1960712784285).epsilon(1e-12));
    PowerBudget twice = b;
    twice.budget_w *= 2.0;
    CHECK(optimal_pris_snr(g, twice, 400) ==
          doctest::Approx(4.0 * optimal_pris_snr(g, b, 400)).epsilon(1e-14));
    // 15 dBm: the continuous optimum sits just above the 316-element value.
    const PowerBudget b15 = budget(15.0);
    CHECK(optimal_pris_snr(g, b15, 400) == doctest::Approx(587.9196071278427).epsilon(1e-12));
    CHECK(optimal_pris_snr_integer(g, b15, 400) < optimal_pris_snr(g, b15, 400));
}

TEST_CASE("ARIS trade-off quantities") {
    const LinkGains g = gains_at(12.0);
    const PowerBudget b = budget(20.0);
    const ArisTradeoff t = aris_tradeoff(g, b, 400);
    const double a = g.p * g.beta_tr * g.beta_st + g.delta_sq;
    const double c = b.p_e + b.p_dc;
    const double z = a + b.v * g.beta_rd * b.budget_w;
    CHECK(t.z == doctest::Approx(z).epsilon(1e-14));
    CHECK(t.n_a1 == doctest::Approx((z - std::sqrt(z * z - b.v * g.beta_rd * b.budget_w * z)) /
                                    (b.v * g.beta_rd * c))
                        .epsilon(1e-6));
    CHECK(t.n_a2 == doctest::Approx(b.budget_w * b.v / (b.beta_max * b.beta_max * a + c * b.v)));
    CHECK(t.n_star == std::max(t.n_a1, t.n_a2));
    CHECK(t.n_max == 240);
}

TEST_CASE("closed-form ARIS optimum on the reference setup") {
    const LinkGains g = gains_at(12.0);
    for (double bm : {40.0, 50.0}) {
        const OptimumReport r = optimal_aris(g, budget(20.0, bm), 400);
        const auto [n, snr] = oracle::aris_argmax(to_oracle(g), 400.0,
                                                  {0.1, 1e-4, dbm_to_watts(-5.0).watts(), 0.5,
                                                   Decibel(bm).amplitude()});
        CHECK(r.best_count == n);
        CHECK(r.best_snr == doctest::Approx(snr).epsilon(1e-12));
        CHECK(r.candidates_evaluated <= 2);
    }
    const OptimumReport r = optimal_aris(g, budget(20.0), 400);
    CHECK(r.best_count == 240);
    CHECK(r.branch == BetaBranch::beta_max);
    CHECK(r.best_beta == doctest::Approx(100.0));
}

TEST_CASE("closed-form ARIS optimum agrees with exhaustive search") {
    std::mt19937_64 rng(314159);
    int checked = 0;
    while (checked < 100) {
        const RandomCase c = random_case(rng);
        if (aris_tradeoff(c.gains, c.budget, c.n_t).n_max < 1) {
            continue;
        }
        ++checked;
        const OptimumReport fast = optimal_aris(c.gains, c.budget, c.n_t);
        const OptimumReport slow = brute_force_aris(c.gains, c.budget, c.n_t);
        const oracle::Budget ob{c.budget.budget_w, c.budget.p_e, c.budget.p_dc, c.budget.v,
                                c.budget.beta_max};
        const auto [n, snr] = oracle::aris_argmax(to_oracle(c.gains), static_cast<double>(c.n_t), ob);
        CHECK(slow.best_count == n);
        CHECK(fast.best_count == n);
        CHECK(fast.best_snr == doctest::Approx(snr).epsilon(1e-9));
    }
}

TEST_CASE("large beta_max leaves the interior optimum in charge") {
    const LinkGains g = gains_at(12.0);
    const PowerBudget b = budget(20.0, 120.0);
    const ArisTradeoff t = aris_tradeoff(g, b, 400);
    CHECK(t.n_a1 > t.n_a2);
    CHECK(t.n_star == t.n_a1);
    const OptimumReport r = optimal_aris(g, b, 400);
    CHECK(r.branch == BetaBranch::sqrt_budget);
    CHECK(std::abs(static_cast<double>(r.best_count) - t.n_a1) < 1.0);
}

TEST_CASE("budget and beta_max branches meet at n_a2") {
    std::mt19937_64 rng(27);
    for (int i = 0; i < 50; ++i) {
        const RandomCase c = random_case(rng);
        const double n2 = aris_tradeoff(c.gains, c.budget, c.n_t).n_a2;
        CHECK(aris_snr_budget_branch(c.gains, c.budget, c.n_t, n2) ==
              doctest::Approx(aris_snr_beta_max_branch(c.gains, c.budget, c.n_t, n2)).epsilon(1e-9));
    }
}

TEST_CASE("ARIS SNR is unimodal in the element count") {
    for (double d : {12.0, 30.0}) {
        for (double bm : {40.0, 50.0, 80.0}) {
            const LinkGains g = gains_at(d, 0.0);
            const PowerBudget b = budget(20.0, bm);
            const OptimumReport r = optimal_aris(g, b, 400);
            double prev = 0.0;
            for (std::size_t n = 1; n <= r.tradeoff.n_max; ++n) {
                const double s = evaluate_aris(g, b, 400, n).snr;
                if (n > 1 && n <= r.best_count) {
                    CHECK(s >= prev);
                }
                if (n > r.best_count) {
                    CHECK(s <= prev);
                }
                prev = s;
            }
        }
    }
}

TEST_CASE("PRIS SNR is nondecreasing in the element count") {
    const LinkGains g = gains_at(12.0);
    double prev = 0.0;
    for (std::size_t n = 1; n <= 2000; n += 13) {
        const double s = snr_closed_form(RisScenario::pris(400, n), g);
        CHECK(s >= prev);
        prev = s;
    }
}

TEST_CASE("optimal counts are invariant to a common power scale") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        RandomCase c = random_case(rng);
        if (aris_tradeoff(c.gains, c.budget, c.n_t).n_max < 1) {
            continue;
        }
        const std::size_t n_p = optimal_pris_count(c.budget);
        const std::size_t n_a = optimal_aris(c.gains, c.budget, c.n_t).best_count;
        for (double k : {1e-3, 10.0, 1e4}) {
            RandomCase s = c;
            s.gains.p *= k;
            s.gains.delta_sq *= k;
            s.budget.budget_w *= k;
            s.budget.p_e *= k;
            s.budget.p_dc *= k;
            CHECK(optimal_pris_count(s.budget) == n_p);
            CHECK(optimal_aris(s.gains, s.budget, s.n_t).best_count == n_a);
        }
    }
}

TEST_CASE("ARIS optimizer preconditions") {
    const LinkGains g = gains_at(12.0);
    PowerBudget direct = budget(20.0);
    direct.mode = BudgetMode::direct_amplification;
    CHECK_THROWS_AS(optimal_aris(g, direct, 400), InvalidArgument);
    CHECK_THROWS_AS(optimal_aris(g, budget(-20.0), 400), BudgetExhausted);
    CHECK_THROWS_AS(brute_force_aris(g, budget(-20.0), 400), BudgetExhausted);
}

TEST_CASE("HRIS SNR for a fixed active count") {
    const LinkGains g = gains_at(12.0);
    const PowerBudget b = budget(20.0);
    SUBCASE("no active elements reduces to PRIS") {
        const HrisResult r = hris_snr_given_active(g, b, 400, 700, 0);
        CHECK(r.snr == doctest::Approx(snr_closed_form(RisScenario::pris(400, 700), g)));
        CHECK(r.branch == BetaBranch::passive);
    }
    SUBCASE("all active reduces to ARIS") {
        for (std::size_t n : {10, 120, 240}) {
            CHECK(hris_snr_given_active(g, b, 400, n, n).snr ==
                  doctest::Approx(evaluate_aris(g, b, 400, n).snr).epsilon(1e-12));
        }
    }
    SUBCASE("budget branch expression agrees with the closed form at the chosen beta") {
        const PowerBudget wide = budget(20.0, 150.0);
        for (std::size_t n_h : {20, 300, 936}) {
            const HrisResult r = hris_snr_given_active(g, wide, 400, n_h, 20);
            REQUIRE(r.branch == BetaBranch::sqrt_budget);
            CHECK(r.snr == doctest::Approx(
                               snr_closed_form(RisScenario::hris(400, n_h, 20, r.beta), g))
                               .epsilon(1e-10));
        }
    }
    SUBCASE("direct amplification budget") {
        PowerBudget d = budget(10.0);
        d.mode = BudgetMode::direct_amplification;
        const HrisResult r = hris_snr_given_active(g, d, 400, 1000, 20);
        CHECK(r.snr == doctest::Approx(
                           snr_closed_form(RisScenario::hris(400, 1000, 20, r.beta), g))
                           .epsilon(1e-10));
    }
    SUBCASE("infeasible hardware") {
        CHECK_THROWS_AS(hris_snr_given_active(g, b, 400, 1000, 20), BudgetExhausted);
    }
}

TEST_CASE("HRIS allocation") {
    const LinkGains g = gains_at(12.0);
    const PowerBudget b20 = budget(20.0);
    const HrisAllocation most = hris_allocate(g, b20, 400, 20, HrisFill::largest_feasible);
    CHECK(most.n_h == 936);
    CHECK(hris_allocate(g, budget(15.0), 400, 20, HrisFill::largest_feasible).n_h == 252);
    const HrisAllocation best = hris_allocate(g, b20, 400, 20);
    CHECK(best.result.snr >= most.result.snr);
    CHECK(best.candidates_evaluated == 936 - 20 + 1);
    CHECK_THROWS_AS(hris_allocate(g, budget(-20.0), 400, 20), BudgetExhausted);

    // Mixing in passive elements never loses to an all-active surface of the same active size.
    const std::size_t opt = optimal_aris(g, b20, 400).best_count;
    for (std::size_t n_ha = 1; n_ha < opt; n_ha += 7) {
        CHECK(hris_allocate(g, b20, 400, n_ha).result.snr >=
              evaluate_aris(g, b20, 400, n_ha).snr * (1.0 - 1e-12));
    }
}

}
