#pragma once

#include <optional>

#include "pinwheel/checker.hpp"
#include "pinwheel/model.hpp"

namespace pinwheel {

struct SearchOutcome {
  enum class Kind { schedulable, unschedulable, inconclusive };

  Kind kind = Kind::inconclusive;
  std::optional<CyclicSchedule> certificate;  // verified, when schedulable
  long long states_explored = 0;
};

// Bounded exhaustive search: for n = 1..max_period, a depth-first scan over
// slot assignments in ascending task order, pruning any prefix whose urgency
// state dies (some task's l-th most recent occurrence has aged past
// ceil(l * a) - 1) and any state that provably cannot stay alive for the
// remaining days. Every full-length candidate is closed cyclically and
// re-checked with verify(); the first verified candidate — the
// lexicographically smallest over the smallest feasible period — is returned.
// Never proves absence: budget exhaustion yields inconclusive.
SearchOutcome find_schedule(const Instance& a, int max_period);

// Completeness side: enumerates every alive urgency state (ages of the last
// q_i occurrences per task, exactly one task fresh today), then repeatedly
// deletes states with no alive successor. An empty fixed point proves no
// valid schedule exists (unschedulable, with the number of states explored);
// a non-empty one contains a cycle, which is extracted, verified and returned
// as a certificate. Fails state_cap_exceeded if the a-priori estimate
// (product of per-task state counts) exceeds state_cap.
SearchOutcome prove_unschedulable(const Instance& a,
                                  long long state_cap = 10'000'000);

}  // namespace pinwheel
