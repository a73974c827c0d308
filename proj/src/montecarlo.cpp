#include "iabsim/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace iabsim {

namespace {

// Per-seasonal-state environment shared by every trial that draws the state:
// resolved foliage plus the carrier tables that depend only on it.
struct StateEnv {
  FoliageModel foliage;
  RisGainTable ris_gains;
  std::vector<NcrState> ncr_states;
};

StateEnv make_env(const Scenario& sc, const FoliageModel& foliage) {
  StateEnv env{foliage, {}, {}};
  env.ris_gains = build_ris_gains(sc.deployment, sc.prop, foliage);
  env.ncr_states = plan_ncr_states(sc.deployment, sc.prop, foliage);
  return env;
}

FoliageModel deterministic_foliage(const TreeDeterministic& det,
                                   bool in_leaf) {
  const auto split = [in_leaf](double depth) {
    return in_leaf ? VegetationDepth{depth, 0.0}
                   : VegetationDepth{0.0, depth};
  };
  return FoliageModel::from_depths(split(det.backhaul_depth_m),
                                   split(det.leg_depth_m),
                                   split(det.access_depth_m));
}

// Environments prebuilt for the foliage modes without per-trial geometry:
// index 0 = in-leaf state, index 1 = out-of-leaf (pinned mode uses only 0).
struct ScenarioCaches {
  std::vector<StateEnv> states;
};

ScenarioCaches build_caches(const Scenario& sc) {
  ScenarioCaches caches;
  if (const auto* det = std::get_if<TreeDeterministic>(&sc.trees)) {
    caches.states.push_back(make_env(sc, deterministic_foliage(*det, true)));
    caches.states.push_back(make_env(sc, deterministic_foliage(*det, false)));
  } else if (const auto* pin = std::get_if<TreePinned>(&sc.trees)) {
    caches.states.push_back(make_env(
        sc, FoliageModel::from_depths(pin->backhaul, pin->leg, pin->access)));
  }
  return caches;
}

RateReport run_trial_core(const Scenario& sc, std::uint64_t trial,
                          const PathPolicy& policy,
                          const ScenarioCaches& caches) {
  const StateEnv* env = nullptr;
  StateEnv local;
  if (std::holds_alternative<TreeStochastic>(sc.trees)) {
    const auto& st = std::get<TreeStochastic>(sc.trees);
    RandomStream tree_rng =
        substream(sc.seed, trial, StreamPurpose::Trees);
    local = make_env(sc, FoliageModel::from_field(sample_tree_field(
                             sc.region, st.density_per_m2, st.line_length_m,
                             st.line_width_m, st.in_leaf_probability,
                             tree_rng)));
    env = &local;
  } else if (const auto* det = std::get_if<TreeDeterministic>(&sc.trees)) {
    RandomStream season = substream(sc.seed, trial, StreamPurpose::Season);
    const bool in_leaf = season.uniform() < det->in_leaf_probability;
    env = &caches.states[in_leaf ? 0 : 1];
  } else {
    env = &caches.states[0];
  }

  std::vector<Point> ues = sc.pinned_ues;
  if (ues.empty()) {
    RandomStream ue_rng =
        substream(sc.seed, trial, StreamPurpose::UePositions);
    ues = sample_uniform_points(sc.region, sc.ue_count, ue_rng);
  }

  const FadingProvider fading(sc.seed, trial, sc.unit_fading);

  Association assoc;
  assoc.ue_to_bs = associate_ues(
      ues, sc.deployment, sc.prop, env->foliage,
      sc.association_instantaneous_fading ? &fading : nullptr);
  assoc.sbs_backhaul =
      associate_backhaul(sc.deployment, sc.prop, env->foliage, policy,
                         env->ris_gains, env->ncr_states);

  std::unordered_map<int, std::size_t> ue_counts;
  for (int id : assoc.ue_to_bs) ++ue_counts[id];
  const ResourceSplit split{sc.psi, sc.prop.carrier.bandwidth_hz};
  const BandwidthAllocation alloc =
      allocate_bandwidth(split, sc.deployment, ue_counts);

  RandomStream beam_rng = substream(sc.seed, trial, StreamPurpose::Beams);
  const bool ncrs_active = policy.allow_ncr && !sc.deployment.ncrs.empty();
  const BeamPlan beams = plan_beams(
      sc.deployment, assoc, ues, env->ncr_states, ncrs_active, beam_rng,
      sc.pinned_beams.empty() ? nullptr : &sc.pinned_beams);

  return compute_rates(sc.deployment, ues, assoc, alloc, beams,
                       env->ncr_states, split, sc.prop, env->foliage, fading);
}

struct TrialOutcome {
  std::uint64_t covered = 0;
  std::uint64_t samples = 0;
  double rate_sum = 0.0;
};

TrialOutcome summarize(const RateReport& report, double beta_bps) {
  TrialOutcome out;
  for (const UeRateRow& row : report.ue_rows) {
    out.samples += 1;
    out.covered += (row.rate_bps >= beta_bps) ? 1 : 0;
    out.rate_sum += row.rate_bps;
  }
  return out;
}

void check_feasible(const Scenario& sc) {
  if (sc.deployment.stations.empty()) {
    throw ConfigError("infeasible scenario: no base station deployed");
  }
  bool has_donor = false;
  for (const BaseStation& s : sc.deployment.stations) {
    has_donor = has_donor || s.kind == NodeKind::MbsDonor;
  }
  if (!has_donor) {
    throw ConfigError("infeasible scenario: no donor station deployed");
  }
  if (sc.trials == 0) throw ConfigError("trial count must be at least 1");
  if (sc.ue_count == 0 && sc.pinned_ues.empty()) {
    throw ConfigError("infeasible scenario: no UEs");
  }
}

// Runs fn(trial) for every trial, spreading trials over worker_count()
// threads. fn must only touch its own trial's slot; the first exception is
// rethrown after all workers stop.
template <typename Fn>
void for_each_trial(std::size_t trials, const Fn& fn) {
  const std::size_t workers = std::min(worker_count(), trials);
  if (workers <= 1) {
    for (std::size_t i = 0; i < trials; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= trials) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

CoverageEstimate estimate_with_policy(const Scenario& sc,
                                      const PathPolicy& policy) {
  check_feasible(sc);
  const ScenarioCaches caches = build_caches(sc);
  std::vector<TrialOutcome> outcomes(sc.trials);
  for_each_trial(sc.trials, [&](std::size_t i) {
    outcomes[i] = summarize(
        run_trial_core(sc, static_cast<std::uint64_t>(i), policy, caches),
        sc.beta_bps);
  });
  std::uint64_t covered = 0;
  std::uint64_t samples = 0;
  double rate_sum = 0.0;
  for (const TrialOutcome& o : outcomes) {  // fixed reduction order
    covered += o.covered;
    samples += o.samples;
    rate_sum += o.rate_sum;
  }
  CoverageEstimate est = wilson_interval(covered, samples);
  est.trials = sc.trials;
  est.mean_rate_bps =
      (samples == 0) ? 0.0 : rate_sum / static_cast<double>(samples);
  return est;
}

}  // namespace

CoverageEstimate wilson_interval(std::uint64_t covered,
                                 std::uint64_t samples) {
  CoverageEstimate est;
  est.ue_samples = samples;
  if (samples == 0) {
    est.rho_hat = 0.0;
    est.ci_low = 0.0;
    est.ci_high = 1.0;
    return est;
  }
  const double z = 1.959963984540054;  // 97.5% normal quantile
  const double n = static_cast<double>(samples);
  const double p = static_cast<double>(covered) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  est.rho_hat = p;
  est.ci_low = std::max(0.0, center - half);
  est.ci_high = std::min(1.0, center + half);
  return est;
}

RateReport run_trial(const Scenario& scenario, std::uint64_t trial_index) {
  check_feasible(scenario);
  const ScenarioCaches caches = build_caches(scenario);
  return run_trial_core(scenario, trial_index, PathPolicy{true, true}, caches);
}

CoverageEstimate estimate_coverage(const Scenario& scenario) {
  return estimate_with_policy(scenario, PathPolicy{true, true});
}

CoverageEstimate estimate_coverage(const Scenario& scenario, Variant variant) {
  return estimate_with_policy(scenario, policy_for(variant));
}

std::vector<SweepRow> run_sweep(const Scenario& base, SweepAxis axis,
                                const std::vector<double>& values) {
  if (values.empty()) throw ConfigError("sweep values must be non-empty");
  std::vector<SweepRow> rows;
  rows.reserve(values.size() * base.variants.size());
  for (double value : values) {
    const Scenario point = apply_axis(base, axis, value);
    for (Variant variant : base.variants) {
      rows.push_back({value, variant, estimate_coverage(point, variant)});
    }
  }
  return rows;
}

std::size_t worker_count() {
  const char* env = std::getenv("IABSIM_WORKERS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) return 1;
  return static_cast<std::size_t>(std::min(v, 256L));
}

}  // namespace iabsim
