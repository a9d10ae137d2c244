#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pinwheel/checker.hpp"
#include "pinwheel/model.hpp"
#include "pinwheel/regions.hpp"

namespace pinwheel {

// Construction cases. two_i..two_iii handle two distinct periods; i..vii
// handle three (case i is the Beatty construction, ii..vii fixed templates).
enum class CaseId { two_i, two_ii, two_iii, i, ii, iii, iv, v, vi, vii };

const char* case_name(CaseId c);  // "TwoI".."TwoIII", "I".."VII"

// Anchor period: `value`, or "anything strictly above value" when strict.
struct AnchorPeriod {
  Rational value;
  bool strict = false;
};

// A construction case with its anchor instance and schedule template. The
// template verifies Valid for the anchor with any rational eps > 0 in the
// strict slots, and stays Valid when any period is raised.
struct Fixture {
  CaseId id;
  std::vector<AnchorPeriod> anchor;
  CyclicSchedule tmpl;
};

const std::vector<Fixture>& fixture_table();
const Fixture& fixture(CaseId id);

// The anchor instance with `eps` added to every strict slot. eps > 0 gives
// an instance the template is valid for; eps = 0 gives the rejected boundary.
Instance fixture_instance(CaseId id, const Rational& eps);

// Replaces the largest period of a sorted, pairwise-distinct instance
// (k in {2,3}) so the density becomes exactly `target` (default 5/6).
// Fails not_shrinkable if the computed period would drop below the
// second-largest period.
Instance shrink_to_exact(const Instance& sorted_distinct,
                         const Rational& target = rat(5, 6));

// Two distinct periods with density exactly 5/6: picks the lowest applicable
// case for a1 in (6/5, 3] — TwoI on (6/5, 3/2], TwoII on [3/2, 2], TwoIII on
// [2, 3] — and returns its template. The companion period is implicitly
// 1/(5/6 - 1/a1). Fails out_of_range outside (6/5, 3].
std::pair<CaseId, CyclicSchedule> two_period_schedule(const Rational& a1);

// Case i: period 2*p1 schedule (a1 = p1/q1 lowest terms) that lays task 1 on
// days {ceil(j*a1) - 1}, task 2 on {floor(j*a2')} and task 3 on
// {floor((j + 1/2)*a2')} with a2' = 2/(1 - 1/a1). Those three day sets tile
// the cycle exactly; the tiling is asserted (partition_violation on any gap
// or overlap, which no a1 > 6/5 produces). Fails out_of_range for a1 <= 6/5.
CyclicSchedule beatty_schedule(const Rational& a1);

// Frequency point (X, Y) = (1/a1, 1/a2) must lie in J (else not_in_j);
// returns the smallest i with (X, Y) in M_i.
CaseId classify_case(const Rational& a1, const Rational& a2);

// Dispatches on classify_case and returns the case's schedule: Beatty for
// case i, the fixed template otherwise. Valid for (a1, a2, a3') with
// a3' = 1/(5/6 - 1/a1 - 1/a2).
std::pair<CaseId, CyclicSchedule> three_period_schedule(const Rational& a1,
                                                        const Rational& a2);

// Undoes a fold plan: for each step, last first, the schedule is repeated
// L = m/gcd(occurrences, m) times and the folded task's occurrences are dealt
// round-robin to the group members; other tasks are renumbered back.
CyclicSchedule expand(const CyclicSchedule& s, const FoldPlan& plan);

// Machine-readable account of which route build_schedule took.
struct TraceStep {
  std::string kind;    // "density", "fold", "sort", "shrink", "fold-down", ...
  std::string detail;
};

struct CaseTrace {
  std::vector<TraceStep> steps;
  std::vector<CaseId> cases;  // in the order they were applied
};

struct ScheduleResult {
  CyclicSchedule schedule;
  CaseTrace trace;
};

// End-to-end construction for instances whose periods take at most three
// distinct values and whose density is at most 5/6; densities in (5/6, 1] are
// accepted only when the instance folds to a single task (all periods equal
// one value), and anything denser is provably unschedulable (out_of_scope
// either way). The pipeline:
// normalize, sort, then per distinct count d: d=1 -> the all-task-1 schedule;
// d=2 -> shrink to density 5/6 and dispatch two_period_schedule, except that
// a1 >= 12/5 folds the pair down instead; d=3 -> shrink the third period and
// dispatch three_period_schedule, except that 1/a1 + 2/a2 <= 5/6 lowers a3 to
// a2, folds the pair, and recurses. The result is expanded back through the
// fold plan and re-verified before it is returned (self_verification_failed
// guards the pipeline).
ScheduleResult build_schedule(const Instance& a);

}  // namespace pinwheel
