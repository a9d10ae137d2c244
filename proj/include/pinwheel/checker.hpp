#pragma once

#include <optional>

#include "pinwheel/model.hpp"

namespace pinwheel {

// A concrete violation: the window of `window_length` consecutive days
// starting at day `m` (0 <= m < period) contains only `found` < `l`
// occurrences of `task`, although the task's period demands at least l in
// every window of length ceil(l * a).
struct Counterexample {
  int task = 0;  // 1-based
  Int l;
  long long m = 0;
  Int window_length;
  Int found;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct Verdict {
  bool valid = false;
  std::optional<Counterexample> counterexample;
};

// Minimum, over all start days m, of the number of occurrences of `task` in
// the y consecutive days starting at m. y may exceed the schedule period:
// a window of y = u*n + r days always contains u full periods plus a minimal
// r-day stretch, so the answer is u * (occurrences per period) + min over the
// r-day windows.
Int window_min_count(const CyclicSchedule& s, int task, const Int& y);

// Exact validity: for every task i with period a_i = p_i/q_i (lowest terms)
// and every l in [1, q_i], every window of ceil(l * a_i) consecutive days
// contains at least l occurrences of i. Checking l <= q_i suffices: a demand
// at l = u*q_i + r decomposes into u windows of length p_i (each already
// guaranteed q_i occurrences) plus one window of length ceil(r * a_i).
// Integer periods therefore reduce to the classical l = 1 check.
// On failure returns the lexicographically smallest violation (task, l, m).
Verdict verify(const CyclicSchedule& s, const Instance& a);

}  // namespace pinwheel
