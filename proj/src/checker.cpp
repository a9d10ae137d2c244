#include "pinwheel/checker.hpp"

#include <vector>

#include "pinwheel/errors.hpp"

namespace pinwheel {

namespace {

// Prefix sums of occurrences of `task`: pre[i] = #occurrences in slots [0, i).
std::vector<long long> occurrence_prefix(const CyclicSchedule& s, int task) {
  const auto& slots = s.slots();
  std::vector<long long> pre(slots.size() + 1, 0);
  for (size_t i = 0; i < slots.size(); ++i) {
    pre[i + 1] = pre[i] + (slots[i] == task ? 1 : 0);
  }
  return pre;
}

// Occurrences in the r-day window starting at slot m, r < n (wraps once).
long long window_count(const std::vector<long long>& pre, long long n,
                       long long m, long long r) {
  long long end = m + r;
  if (end <= n) return pre[end] - pre[m];
  return (pre[n] - pre[m]) + pre[end - n];
}

}  // namespace

Int window_min_count(const CyclicSchedule& s, int task, const Int& y) {
  if (task < 1) fail(Errc::invalid_argument, "task index < 1");
  if (y <= 0) return 0;
  const long long n = s.period();
  std::vector<long long> pre = occurrence_prefix(s, task);
  const Int per_period = pre[n];

  Int full = y / n;
  long long rest = static_cast<long long>(y % n);
  long long best = rest == 0 ? 0 : n;  // counts in an empty window are 0
  for (long long m = 0; m < n && best > 0; ++m) {
    best = std::min(best, window_count(pre, n, m, rest));
  }
  return full * per_period + best;
}

Verdict verify(const CyclicSchedule& s, const Instance& a) {
  const int k = a.k();
  if (s.max_task() > k) {
    fail(Errc::task_index_out_of_range,
         "schedule uses task " + std::to_string(s.max_task()) +
             " but the instance has only " + std::to_string(k) + " tasks");
  }

  const long long n = s.period();
  for (int task = 1; task <= k; ++task) {
    const Rational& period = a.period(task);
    std::vector<long long> pre = occurrence_prefix(s, task);
    const Int per_period = pre[n];
    const Int q = period.den();
    for (Int l = 1; l <= q; ++l) {
      const Int w = ceil_mul(l, period);
      const Int full = w / n;
      const long long rest = static_cast<long long>(w % n);
      const Int base = full * per_period;
      for (long long m = 0; m < n; ++m) {
        Int found = base + window_count(pre, n, m, rest);
        if (found < l) {
          Verdict v;
          v.valid = false;
          v.counterexample = Counterexample{task, l, m, w, found};
          return v;
        }
      }
    }
  }
  return Verdict{true, std::nullopt};
}

}  // namespace pinwheel
