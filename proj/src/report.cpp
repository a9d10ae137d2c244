#include "pinwheel/report.hpp"

#include <json.hpp>
#include <string>
#include <vector>

#include "pinwheel/checker.hpp"
#include "pinwheel/constructions.hpp"
#include "pinwheel/errors.hpp"
#include "pinwheel/regions.hpp"
#include "pinwheel/search.hpp"

namespace pinwheel {

namespace {

using json = nlohmann::json;

std::string dump(const json& j) { return j.dump() + "\n"; }

json trace_json(const CaseTrace& tr) {
  json steps = json::array();
  for (const TraceStep& st : tr.steps) {
    steps.push_back({{"kind", st.kind}, {"detail", st.detail}});
  }
  json cases = json::array();
  for (CaseId id : tr.cases) cases.push_back(case_name(id));
  return json{{"steps", steps}, {"cases", cases}};
}

std::string cases_line(const std::vector<CaseId>& cases) {
  std::string out = "cases:";
  if (cases.empty()) return out + " (none)\n";
  for (size_t i = 0; i < cases.size(); ++i) {
    out += i == 0 ? " " : ", ";
    out += case_name(cases[i]);
  }
  return out + "\n";
}

std::string union_text(const std::vector<std::string>& names) {
  std::string out;
  for (size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += "∪";  // ∪
    out += names[i];
  }
  return out;
}

}  // namespace

Report report_density(const Instance& a) {
  const Rational d = density(a);
  Report r;
  r.verdict = ReportVerdict::ok;
  r.text = "density: " + d.str() + "\n";
  r.json = dump({{"op", "density"}, {"instance", emit(a)}, {"density", d.str()}});
  return r;
}

Report report_verify(const CyclicSchedule& s, const Instance& a) {
  const Verdict v = verify(s, a);
  Report r;
  json j{{"op", "verify"}, {"instance", emit(a)}, {"schedule", emit(s)},
         {"valid", v.valid}};
  if (v.valid) {
    r.verdict = ReportVerdict::ok;
    r.text = "VALID\n";
  } else {
    const Counterexample& ce = *v.counterexample;
    r.verdict = ReportVerdict::negative;
    r.text = "INVALID\ncounterexample: task=" + std::to_string(ce.task) +
             " l=" + ce.l.str() + " m=" + std::to_string(ce.m) +
             " window=" + ce.window_length.str() + " found=" + ce.found.str() +
             "\n";
    j["counterexample"] = {{"task", ce.task},
                           {"l", ce.l.str()},
                           {"m", ce.m},
                           {"window", ce.window_length.str()},
                           {"found", ce.found.str()}};
  }
  r.json = dump(j);
  return r;
}

Report report_build(const Instance& a) {
  const ScheduleResult res = build_schedule(a);
  Report r;
  r.verdict = ReportVerdict::ok;
  r.text = "schedule: " + emit(res.schedule) + "\nperiod: " +
           std::to_string(res.schedule.period()) + "\n" +
           cases_line(res.trace.cases) + "trace:\n";
  for (const TraceStep& st : res.trace.steps) {
    r.text += "  " + st.kind + ": " + st.detail + "\n";
  }
  r.json = dump({{"op", "schedule"},
                 {"instance", emit(a)},
                 {"schedule", emit(res.schedule)},
                 {"period", res.schedule.period()},
                 {"trace", trace_json(res.trace)}});
  return r;
}

Report report_classify(const Rational& a1, const Rational& a2) {
  const CaseId id = classify_case(a1, a2);
  Report r;
  r.verdict = ReportVerdict::ok;
  r.text = std::string("case: ") + case_name(id) + "\n";
  r.json = dump({{"op", "classify"},
                 {"a1", a1.str()},
                 {"a2", a2.str()},
                 {"case", case_name(id)}});
  return r;
}

Report report_cover_check(const std::vector<std::string>& drop) {
  std::vector<Region> covers;
  std::vector<std::string> names;
  for (const Region& m : regions_M()) {
    bool dropped = false;
    for (const std::string& d : drop) dropped = dropped || d == m.name;
    if (!dropped) {
      covers.push_back(m);
      names.push_back(m.name);
    }
  }
  for (const std::string& d : drop) {
    if (!region_by_name(d) || d == "J") {
      fail(Errc::invalid_argument, "unknown region to drop: " + d);
    }
  }
  const CoverResult res = cover_check(region_J(), covers);
  Report r;
  json j{{"op", "cover-check"}, {"covers", names}, {"covered", res.covered}};
  if (res.covered) {
    r.verdict = ReportVerdict::ok;
    r.text = "COVERED (J ⊆ " + union_text(names) + ")\n";
  } else {
    r.verdict = ReportVerdict::negative;
    r.text = "NOT COVERED\nwitness: (" + res.witness->x.str() + ", " +
             res.witness->y.str() + ")\n";
    j["witness"] = {{"x", res.witness->x.str()}, {"y", res.witness->y.str()}};
  }
  r.json = dump(j);
  return r;
}

Report report_find(const Instance& a, int max_period) {
  const SearchOutcome out = find_schedule(a, max_period);
  Report r;
  json j{{"op", "search"},
         {"instance", emit(a)},
         {"max_period", max_period},
         {"states_explored", out.states_explored}};
  if (out.kind == SearchOutcome::Kind::schedulable) {
    r.verdict = ReportVerdict::ok;
    r.text = "SCHEDULABLE\nschedule: " + emit(*out.certificate) + "\nperiod: " +
             std::to_string(out.certificate->period()) + "\n";
    j["outcome"] = "schedulable";
    j["schedule"] = emit(*out.certificate);
    j["period"] = out.certificate->period();
  } else {
    r.verdict = ReportVerdict::inconclusive;
    r.text = "INCONCLUSIVE (no valid schedule with period <= " +
             std::to_string(max_period) + ")\n";
    j["outcome"] = "inconclusive";
  }
  r.json = dump(j);
  return r;
}

Report report_prove(const Instance& a, long long state_cap) {
  const SearchOutcome out = prove_unschedulable(a, state_cap);
  Report r;
  json j{{"op", "prove"},
         {"instance", emit(a)},
         {"state_cap", state_cap},
         {"states_explored", out.states_explored}};
  if (out.kind == SearchOutcome::Kind::unschedulable) {
    r.verdict = ReportVerdict::negative;
    r.text = "UNSCHEDULABLE\nstates explored: " +
             std::to_string(out.states_explored) + "\n";
    j["outcome"] = "unschedulable";
  } else {
    r.verdict = ReportVerdict::ok;
    r.text = "SCHEDULABLE\nschedule: " + emit(*out.certificate) + "\nperiod: " +
             std::to_string(out.certificate->period()) + "\nstates explored: " +
             std::to_string(out.states_explored) + "\n";
    j["outcome"] = "schedulable";
    j["schedule"] = emit(*out.certificate);
    j["period"] = out.certificate->period();
  }
  r.json = dump(j);
  return r;
}

Report report_regions_dump() {
  Report r;
  r.verdict = ReportVerdict::ok;
  json regions = json::array();
  std::vector<Region> all;
  all.push_back(region_J());
  for (const Region& m : regions_M()) all.push_back(m);
  for (const Region& reg : all) {
    r.text += reg.name + ":\n";
    json jcons = json::array();
    for (const LinearConstraint& lc : reg.constraints) {
      r.text += lc.cx.str() + " " + lc.cy.str() + " " + rel_symbol(lc.rel) +
                " " + lc.c.str() + "\n";
      jcons.push_back({{"cx", lc.cx.str()},
                       {"cy", lc.cy.str()},
                       {"rel", rel_symbol(lc.rel)},
                       {"c", lc.c.str()}});
    }
    json jverts = json::array();
    r.text += "vertices:";
    for (const Point& p : region_vertices(reg)) {
      r.text += " (" + p.x.str() + ", " + p.y.str() + ")";
      jverts.push_back({p.x.str(), p.y.str()});
    }
    r.text += "\n\n";
    regions.push_back(
        {{"name", reg.name}, {"constraints", jcons}, {"vertices", jverts}});
  }
  r.json = dump({{"op", "regions-dump"}, {"regions", regions}});
  return r;
}

}  // namespace pinwheel
