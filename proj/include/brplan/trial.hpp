#ifndef BRPLAN_TRIAL_HPP
#define BRPLAN_TRIAL_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "brplan/rng.hpp"

namespace brplan {

/// Outcome of one sampling attempt (single-step choice or full-tree path).
/// payload holds the accepted outcome index for single-step trials, or the
/// root-to-leaf edge indices for path trials; it is empty unless accepted.
struct TrialReport {
  bool accepted = false;
  std::vector<std::int32_t> payload;
  std::uint64_t proposals_drawn = 0;  // proposals x ~ Q consumed, >= 1 after any attempt
  std::uint64_t base_trials = 0;      // elementary accept/reject tests performed
  std::uint64_t attempts = 0;         // top-level trials in an until-accept loop
  std::uint32_t trial_depth = 0;      // deepest recursion level; 0 for single-step
};

/// One elementary Bernoulli attempt.
struct TrialOutcome {
  bool success = false;
  std::int32_t payload = -1;
  std::uint64_t proposals = 1;  // proposals consumed by this attempt
};

/// A procedure that performs one independent attempt per call. Attempts are
/// i.i.d. for a fixed underlying problem.
using BernoulliTrial = std::function<TrialOutcome(RngStream&)>;

}  // namespace brplan

#endif  // BRPLAN_TRIAL_HPP
