#pragma once

#include <cstdint>
#include <vector>

#include "iabsim/scenario.hpp"

namespace iabsim {

struct CoverageEstimate {
  double rho_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
  std::size_t trials = 0;
  std::size_t ue_samples = 0;
  double mean_rate_bps = 0.0;
};

// 95% Wilson score interval for `covered` successes out of `samples`.
CoverageEstimate wilson_interval(std::uint64_t covered, std::uint64_t samples);

// One full trial with every deployed backhaul carrier available: seasonal or
// geometric foliage, UE drop, association, allocation, beam plan, rates. All
// randomness is keyed by (scenario seed, trial_index), never by call order.
RateReport run_trial(const Scenario& scenario, std::uint64_t trial_index);

// Pooled coverage Pr(R_u >= beta) over all UE samples of all trials.
CoverageEstimate estimate_coverage(const Scenario& scenario);
// Same, with the backhaul carriers restricted to the variant's set.
CoverageEstimate estimate_coverage(const Scenario& scenario, Variant variant);

struct SweepRow {
  double value = 0.0;
  Variant variant = Variant::DirectOnly;
  CoverageEstimate estimate;
};

// One estimate per (value, scenario variant). Every variant and every value
// reuses the same per-trial draws, so cross-variant and cross-value
// comparisons are paired.
std::vector<SweepRow> run_sweep(const Scenario& base, SweepAxis axis,
                                const std::vector<double>& values);

// Worker threads for trial execution (environment variable IABSIM_WORKERS,
// default 1). Results are identical for any worker count.
std::size_t worker_count();

}  // namespace iabsim
