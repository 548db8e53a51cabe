#pragma once

#include <optional>
#include <random>
#include <variant>

#include "icsp/decision.hpp"
#include "icsp/model.hpp"
#include "icsp/prior.hpp"

namespace icsp {

struct SimulatedTest {
  IntervalData data;
  int terminated_at;  // first inspection with zero survivors, else k
  double duration;    // tau_{terminated_at}
};

// Draws latent exponential lifetimes per cause, bins the minimum into
// inspection intervals, truncates once no items survive.
SimulatedTest simulate_test(const FailureRates& rates, const SamplingPlan& plan,
                            std::mt19937_64& rng);

struct OperatingCharacteristics {
  double p_accept, p_accept_se;
  double e_failures, e_failures_se;
  double e_duration, e_duration_se;
  double e_inspections, e_inspections_se;
  // Sample standard deviation of the reliability estimate across reps
  // (finite estimates only).
  double sd_reliability;
};

// Monte Carlo operating characteristics. When given a PriorSpec, rates are
// redrawn from the prior each replication.
OperatingCharacteristics empirical_oc(
    const SamplingPlan& plan, const DecisionRule& rule,
    const std::variant<PriorSpec, FailureRates>& prior_or_rates,
    const CostModel& costs, int reps, std::mt19937_64& rng);

}  // namespace icsp
