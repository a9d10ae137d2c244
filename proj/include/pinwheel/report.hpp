#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pinwheel/model.hpp"

namespace pinwheel {

// What a finished operation means for the caller's exit status.
enum class ReportVerdict {
  ok = 0,            // success / valid / schedulable / covered
  negative = 1,      // invalid / unschedulable / not covered
  inconclusive = 2,  // budget exhausted
};

// Rendered result of one operation: deterministic human text (newline
// terminated lines) plus a deterministic JSON document carrying the same
// facts, with instances/schedules embedded in their canonical text forms so
// they re-parse to equal values.
struct Report {
  ReportVerdict verdict = ReportVerdict::ok;
  std::string text;
  std::string json;
};

Report report_density(const Instance& a);
Report report_verify(const CyclicSchedule& s, const Instance& a);
Report report_build(const Instance& a);
Report report_classify(const Rational& a1, const Rational& a2);
Report report_cover_check(const std::vector<std::string>& drop);
Report report_find(const Instance& a, int max_period);
Report report_prove(const Instance& a, long long state_cap);
Report report_regions_dump();

}  // namespace pinwheel
