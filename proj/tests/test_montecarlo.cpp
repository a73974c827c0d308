#include "doctest.h"

#include <cstdlib>
#include <string>

#include "iabsim/montecarlo.hpp"

using namespace iabsim;

namespace {

// Two terminals, one donor, one relay cell, everything pinned (positions,
// beams, vegetation, unit fading): every rate in this scenario was frozen
// from an independent spreadsheet-style evaluation of the budget chain.
const char* kToy = R"({
  "region": {"width_m": 1000, "height_m": 1000, "origin": [-500, -500]},
  "nodes": {
    "mbs": [{"id": 0, "position": [-300, 0], "p_tx_dbm": 40}],
    "sbs": [{"id": 1, "position": [300, 0], "p_tx_dbm": 30, "iab": true}]
  },
  "ues": {"positions": [[-250, 50], [350, -20]]},
  "channel": {"fc_ghz": 28, "bandwidth_hz": 2e8, "alpha_los": 2,
              "alpha_nlos": 3, "noise_figure_db": 7, "fading": "unit"},
  "antenna": {"bs": {"g_main_dbi": 20, "g_side_dbi": -10, "hpbw_deg": 30}},
  "trees": {"mode": "pinned", "backhaul_in_m": 10, "backhaul_out_m": 20},
  "rain": {"rate_mm_per_hr": 4, "k": 0.2, "alpha": 1.0},
  "psi": 0.4,
  "beta_bps": 1e8,
  "trials": 1,
  "seed": 1,
  "pinned_beams": [
    {"station": 0, "target": [-250, 50]},
    {"station": 1, "target": [350, -20]}
  ]
})";

Scenario toy() { return parse_scenario_text(kToy, "toy"); }

}  // namespace

TEST_CASE("wilson interval: edge cases and a frozen spot value") {
  auto empty = wilson_interval(0, 0);
  CHECK(empty.ci_low == 0.0);
  CHECK(empty.ci_high == 1.0);

  auto all = wilson_interval(10, 10);
  CHECK(all.rho_hat == 1.0);
  CHECK(all.ci_high == doctest::Approx(1.0));
  CHECK(all.ci_low > 0.6);
  auto none = wilson_interval(0, 10);
  CHECK(none.rho_hat == 0.0);
  CHECK(none.ci_low == doctest::Approx(0.0));

  auto mid = wilson_interval(8, 10);
  CHECK(mid.rho_hat == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(mid.ci_low == doctest::Approx(0.49016247153664183).epsilon(1e-12));
  CHECK(mid.ci_high == doctest::Approx(0.9433178485456247).epsilon(1e-12));
  CHECK(mid.ci_low <= mid.rho_hat);
  CHECK(mid.rho_hat <= mid.ci_high);
}

TEST_CASE("the pinned two-terminal scenario reproduces its frozen chain") {
  auto sc = toy();
  auto report = run_trial(sc, 0);

  REQUIRE(report.ue_rows.size() == 2);
  REQUIRE(report.backhaul_rows.size() == 1);

  const auto& ue0 = report.ue_rows[0];
  const auto& ue1 = report.ue_rows[1];
  const auto& bh = report.backhaul_rows[0];

  CHECK(ue0.serving == 0);
  CHECK(ue1.serving == 1);
  CHECK(bh.sbs_id == 1);
  CHECK(bh.path == BackhaulPathKind::Direct);

  CHECK(bh.sinr_db == doctest::Approx(-32.48791434503367).epsilon(1e-9));
  CHECK(bh.rate_bps == doctest::Approx(65065.48465146538).epsilon(1e-9));

  CHECK(ue0.access_sinr_db ==
        doctest::Approx(45.36992065153889).epsilon(1e-9));
  CHECK(ue0.access_rate_bps ==
        doctest::Approx(1808592396.4636428).epsilon(1e-9));
  CHECK(!ue0.backhaul_share_bps.has_value());
  CHECK(ue0.rate_bps == doctest::Approx(1808592396.4636428).epsilon(1e-9));

  CHECK(ue1.access_sinr_db ==
        doctest::Approx(36.56239063311827).epsilon(1e-9));
  CHECK(ue1.access_rate_bps ==
        doctest::Approx(1457529792.4036193).epsilon(1e-9));
  REQUIRE(ue1.backhaul_share_bps.has_value());
  CHECK(*ue1.backhaul_share_bps ==
        doctest::Approx(65065.48465146538).epsilon(1e-9));
  CHECK(ue1.rate_bps == doctest::Approx(65065.48465146538).epsilon(1e-9));
}

TEST_CASE("coverage pools terminals: one of two above threshold is a half") {
  auto sc = toy();
  auto est = estimate_coverage(sc);
  CHECK(est.rho_hat == 0.5);
  CHECK(est.trials == 1);
  CHECK(est.ue_samples == 2);
  CHECK(est.mean_rate_bps == doctest::Approx(904328730.9741472).epsilon(1e-9));
  // One trial, two samples: the interval spans most of the unit range.
  CHECK(est.ci_low == doctest::Approx(0.09453120573423074).epsilon(1e-12));
  CHECK(est.ci_high == doctest::Approx(0.9054687942657693).epsilon(1e-12));

  SUBCASE("a zero threshold counts every finite rate") {
    sc.beta_bps = 0.0;
    CHECK(estimate_coverage(sc).rho_hat == 1.0);
  }
  SUBCASE("an absurd threshold counts nothing") {
    sc.beta_bps = 1e15;
    CHECK(estimate_coverage(sc).rho_hat == 0.0);
  }
}

TEST_CASE("trials are reproducible and index-separated") {
  auto sc = parse_scenario_text(preset_text("fig2"), "fig2");
  sc.trials = 4;

  auto a = run_trial(sc, 2);
  auto b = run_trial(sc, 2);
  REQUIRE(a.ue_rows.size() == b.ue_rows.size());
  for (std::size_t i = 0; i < a.ue_rows.size(); ++i) {
    CHECK(a.ue_rows[i].rate_bps == b.ue_rows[i].rate_bps);  // bitwise
  }

  auto c = run_trial(sc, 3);
  bool any_differs = false;
  for (std::size_t i = 0; i < a.ue_rows.size() && i < c.ue_rows.size(); ++i) {
    any_differs = any_differs || a.ue_rows[i].rate_bps != c.ue_rows[i].rate_bps;
  }
  CHECK(any_differs);  // a fresh trial redraws positions and fading
}

TEST_CASE("estimates do not depend on the worker count") {
  auto sc = parse_scenario_text(preset_text("fig2"), "fig2");
  sc.trials = 40;

  setenv("IABSIM_WORKERS", "1", 1);
  CHECK(worker_count() == 1);
  auto serial = estimate_coverage(sc, Variant::WithRis);
  setenv("IABSIM_WORKERS", "3", 1);
  CHECK(worker_count() == 3);
  auto parallel = estimate_coverage(sc, Variant::WithRis);
  unsetenv("IABSIM_WORKERS");

  CHECK(serial.rho_hat == parallel.rho_hat);
  CHECK(serial.ci_low == parallel.ci_low);
  CHECK(serial.ci_high == parallel.ci_high);
  CHECK(serial.mean_rate_bps == parallel.mean_rate_bps);
}

TEST_CASE("a one-point sweep equals the plain estimate") {
  auto sc = parse_scenario_text(preset_text("fig2"), "fig2");
  sc.trials = 25;
  sc.variants = {Variant::DirectOnly, Variant::WithRis};

  auto rows = run_sweep(sc, SweepAxis::TreeDepth, {75.0});
  REQUIRE(rows.size() == 2);
  auto direct = estimate_coverage(apply_axis(sc, SweepAxis::TreeDepth, 75.0),
                                  Variant::DirectOnly);
  CHECK(rows[0].variant == Variant::DirectOnly);
  CHECK(rows[0].estimate.rho_hat == direct.rho_hat);
  CHECK(rows[0].estimate.ci_low == direct.ci_low);
  CHECK(rows[0].estimate.mean_rate_bps == direct.mean_rate_bps);

  CHECK_THROWS_AS(run_sweep(sc, SweepAxis::TreeDepth, {}), ConfigError);
}

TEST_CASE("without vegetation the reflectors change nothing") {
  // Clear air: the single hop always wins, so allowing the reflected carrier
  // must reproduce the direct-only numbers exactly.
  auto sc = parse_scenario_text(preset_text("fig2"), "fig2");
  sc.trials = 50;
  auto& det = std::get<TreeDeterministic>(sc.trees);
  det.backhaul_depth_m = 0.0;
  det.access_depth_m = 0.0;
  det.leg_depth_m = 0.0;

  auto direct = estimate_coverage(sc, Variant::DirectOnly);
  auto with_ris = estimate_coverage(sc, Variant::WithRis);
  CHECK(direct.rho_hat == with_ris.rho_hat);
  CHECK(direct.mean_rate_bps == with_ris.mean_rate_bps);
}

TEST_CASE("sweep rows come out value-major, one per variant") {
  auto sc = parse_scenario_text(preset_text("fig2"), "fig2");
  sc.trials = 2;
  sc.variants = {Variant::DirectOnly, Variant::WithRis, Variant::WithNcr};
  REQUIRE(sc.sweep->values.size() == 9);

  auto rows = run_sweep(sc, sc.sweep->axis, sc.sweep->values);
  REQUIRE(rows.size() == 27);  // 9 depths x 3 variants
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].value == sc.sweep->values[i / 3]);
    CHECK(rows[i].variant == sc.variants[i % 3]);
  }
}

TEST_CASE("deeper vegetation never helps the single-hop variant") {
  auto sc = parse_scenario_text(preset_text("fig2"), "fig2");
  sc.trials = 60;
  sc.variants = {Variant::DirectOnly};
  auto rows = run_sweep(sc, SweepAxis::TreeDepth, {0.0, 100.0, 200.0});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].estimate.rho_hat >= rows[1].estimate.rho_hat);
  CHECK(rows[1].estimate.rho_hat >= rows[2].estimate.rho_hat);
}

TEST_CASE("runs reject impossible setups before burning trials") {
  auto sc = toy();
  sc.trials = 0;
  CHECK_THROWS_AS(estimate_coverage(sc), ConfigError);

  auto no_ues = toy();
  no_ues.pinned_ues.clear();
  no_ues.ue_count = 0;
  CHECK_THROWS_AS(estimate_coverage(no_ues), ConfigError);
}
