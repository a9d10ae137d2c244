#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pinwheel/rational.hpp"

namespace pinwheel {

// A task set: one rational period >= 1 per task, kept in the order the user
// gave them (task indices are 1-based positions in this list). The canonical
// sorted view is computed on demand and remembers how to get back.
class Instance {
 public:
  explicit Instance(std::vector<Rational> periods);

  const std::vector<Rational>& periods() const { return periods_; }
  const Rational& period(int task) const;  // task is 1-based
  int k() const { return static_cast<int>(periods_.size()); }
  int distinct_count() const;

  struct Sorted;
  Sorted sorted() const;  // stable: ties keep input order

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.periods_ == b.periods_;
  }

 private:
  std::vector<Rational> periods_;
};

struct Instance::Sorted {
  Instance instance;       // periods in non-decreasing order
  std::vector<int> order;  // order[r] = 0-based position in the source of sorted rank r
};

// One period of a cyclic schedule: slot t holds the 1-based task performed on
// every day congruent to t. Day arithmetic is modulo period().
class CyclicSchedule {
 public:
  explicit CyclicSchedule(std::vector<int> slots);

  const std::vector<int>& slots() const { return slots_; }
  int period() const { return static_cast<int>(slots_.size()); }
  int slot(long long day) const;  // any day, reduced mod period
  int max_task() const;

  friend bool operator==(const CyclicSchedule& a, const CyclicSchedule& b) {
    return a.slots_ == b.slots_;
  }

 private:
  std::vector<int> slots_;
};

// One folding step: the tasks at 1-based positions `group` (all holding
// `original_period`) were replaced by a single task at 1-based position
// `replacement` of the resulting instance, holding original_period/m.
// `k_before` is the task count before the step; together with `group` it
// determines the index remapping, so a plan can be replayed in either
// direction.
struct FoldStep {
  std::vector<int> group;    // ascending, size = multiplicity
  int replacement = 0;       // position in the post-step instance (= group[0])
  int multiplicity = 0;
  int k_before = 0;
  Rational original_period;
  Rational folded_period;
};

struct FoldPlan {
  std::vector<FoldStep> steps;
  bool empty() const { return steps.empty(); }
};

struct Normalized {
  Instance instance;  // pairwise-distinct periods
  FoldPlan plan;
};

// Sum of reciprocal periods, exact.
Rational density(const Instance& a);

// Repeatedly replaces every maximal group of m >= 2 equal periods v by one
// task of period v/m until all periods are pairwise distinct. Leftmost
// duplicated value first; the replacement keeps the group's first position.
// Fails with folded_period_below_one if some v/m < 1.
Normalized normalize(const Instance& a);

// Text forms. Instances: comma-separated "p/q" | integer | decimal with at
// most 9 fractional digits; whitespace is ignored; every period must be >= 1.
// Schedules: comma-separated 1-based indices, or one digit per slot when no
// comma appears. Emission uses the compact digit form whenever every slot
// fits in one digit.
Rational parse_rational(std::string_view text);
Instance parse_instance(std::string_view text);
CyclicSchedule parse_schedule(std::string_view text);
std::string emit(const Instance& a);
std::string emit(const CyclicSchedule& s);

}  // namespace pinwheel
