// Acceptance suite: eight end-to-end criteria, each with a pinned runtime
// budget. Prints one PASS/FAIL line per criterion and exits nonzero if any
// fails. Every numeric comparison is exact; the only tolerances are the
// wall-clock budgets below.

#include <chrono>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pinwheel/checker.hpp"
#include "pinwheel/constructions.hpp"
#include "pinwheel/errors.hpp"
#include "pinwheel/regions.hpp"
#include "pinwheel/search.hpp"

using namespace pinwheel;

namespace {

struct Crit {
  bool ok = true;
  std::string why;

  void expect(bool cond, const std::string& msg) {
    if (ok && !cond) {
      ok = false;
      why = msg;
    }
  }
};

Rational rr(long long n, long long d = 1) { return Rational(Int(n), Int(d)); }

bool schedule_valid(const char* schedule, const char* instance) {
  return verify(parse_schedule(schedule), parse_instance(instance)).valid;
}

// 1. Checker fixtures: the identification counterexample is pinpointed.
Crit criterion_1() {
  Crit c;
  c.expect(schedule_valid("1213", "2,4,4"), "|1213| not valid for (2,4,4)");
  c.expect(schedule_valid("1112112", "2,7/2"),
           "|1112112| not valid for (2,7/2)");
  Verdict v = verify(parse_schedule("1111212"), parse_instance("2,7/2"));
  c.expect(!v.valid, "|1111212| accepted for (2,7/2)");
  c.expect(v.counterexample.has_value(), "counterexample missing");
  if (v.counterexample) {
    c.expect(v.counterexample->task == 2, "counterexample task != 2");
    c.expect(v.counterexample->l == Int(1), "counterexample l != 1");
    c.expect(v.counterexample->window_length == Int(4),
             "counterexample window != 4");
  }
  return c;
}

// 2. Two-period anchors.
Crit criterion_2() {
  Crit c;
  c.expect(schedule_valid("111112", "6/5,6"), "|111112| not valid for (6/5,6)");
  c.expect(schedule_valid("112", "3/2,3"), "|112| not valid for (3/2,3)");
  c.expect(schedule_valid("12", "2,2"), "|12| not valid for (2,2)");
  return c;
}

// 3. Three-period templates at eps in {1/10, 1/1000}, rejected at eps = 0,
//    and the four boundary instances proven unschedulable under a 1e7 cap.
Crit criterion_3() {
  Crit c;
  const CaseId strict_cases[] = {CaseId::ii, CaseId::iii, CaseId::iv,
                                 CaseId::v, CaseId::vi};
  for (CaseId id : strict_cases) {
    for (const Rational& eps : {rr(1, 10), rr(1, 1000)}) {
      Instance a = fixture_instance(id, eps);
      c.expect(verify(fixture(id).tmpl, a).valid,
               std::string("template ") + case_name(id) +
                   " not valid at eps=" + eps.str());
    }
    Instance boundary = fixture_instance(id, rr(0));
    c.expect(!verify(fixture(id).tmpl, boundary).valid,
             std::string("template ") + case_name(id) + " accepted at eps=0");
  }
  c.expect(verify(fixture(CaseId::vii).tmpl, fixture_instance(CaseId::vii,
                                                              rr(0))).valid,
           "template VII not valid for (12/5,12/5,6)");

  for (const char* text : {"3/2,5,9", "11/7,4,11", "2,3,6", "2,12/5,12"}) {
    auto out = prove_unschedulable(parse_instance(text), 10'000'000);
    c.expect(out.kind == SearchOutcome::Kind::unschedulable,
             std::string("(") + text + ") not proven unschedulable");
  }
  return c;
}

// 4. 1000 random instances with <= 3 distinct values, numerators <= 24,
//    denominators <= 12, density <= 5/6: build then re-verify, exactly.
Crit criterion_4() {
  Crit c;
  oracle::Rng rng(41);
  int accepted = 0;
  while (accepted < 1000) {
    Instance a = oracle::random_grouped_instance(rng, 3, 12, 24);
    if (density(a) > rr(5, 6)) continue;
    ++accepted;
    try {
      ScheduleResult r = build_schedule(a);
      c.expect(verify(r.schedule, a).valid,
               "built schedule fails verify for " + emit(a));
    } catch (const Error& e) {
      c.expect(false, "build failed for " + emit(a) + ": " + e.what());
    }
    if (!c.ok) break;
  }
  return c;
}

// 5. Region cover: full catalog covers J; dropping M1, M4, M5, M6 or M7
//    exposes a witness inside J and outside every remaining region.
Crit criterion_5() {
  Crit c;
  CoverResult full = cover_check(region_J(), regions_M());
  c.expect(full.covered, "J not covered by M1..M7");
  for (int drop : {1, 4, 5, 6, 7}) {
    std::vector<Region> rest;
    for (const Region& m : regions_M()) {
      if (m.name != "M" + std::to_string(drop)) rest.push_back(m);
    }
    CoverResult holed = cover_check(region_J(), rest);
    c.expect(!holed.covered,
             "cover claimed without M" + std::to_string(drop));
    c.expect(holed.witness.has_value(),
             "no witness without M" + std::to_string(drop));
    if (!holed.witness) continue;
    const Point& w = *holed.witness;
    c.expect(contains(region_J(), w),
             "witness outside J for drop M" + std::to_string(drop));
    for (const Region& m : rest) {
      c.expect(!contains(m, w), "witness inside " + m.name + " for drop M" +
                                    std::to_string(drop));
    }
  }
  return c;
}

// 6. Two-period dominance: every random sorted two-value instance with
//    density <= 5/6 dominates an anchor whose template verifies for it.
Crit criterion_6() {
  Crit c;
  oracle::Rng rng(42);
  const struct {
    Rational a1, a2;
    const char* tmpl;
  } anchors[] = {{rr(6, 5), rr(6), "111112"},
                 {rr(3, 2), rr(3), "112"},
                 {rr(2), rr(2), "12"}};
  int accepted = 0;
  while (accepted < 500) {
    Rational a1 = oracle::random_period(rng, 12, 48);
    Rational a2 = oracle::random_period(rng, 12, 48);
    if (a1 == a2) continue;
    if (a2 < a1) std::swap(a1, a2);
    Instance a({a1, a2});
    if (density(a) > rr(5, 6)) continue;
    ++accepted;
    bool matched = false;
    for (const auto& anchor : anchors) {
      if (a1 >= anchor.a1 && a2 >= anchor.a2) {
        matched = true;
        c.expect(verify(parse_schedule(anchor.tmpl), a).valid,
                 std::string("template |") + anchor.tmpl +
                     "| fails for dominating " + emit(a));
        break;
      }
    }
    c.expect(matched, "no anchor dominated by " + emit(a));
    if (!c.ok) break;
  }
  return c;
}

// 7. Finite criterion (l <= q_i) agrees with brute force over l <= 3 q_i on
//    random schedule/instance pairs.
Crit criterion_7() {
  Crit c;
  oracle::Rng rng(43);
  for (int iter = 0; iter < 500 && c.ok; ++iter) {
    int k = rng.pick(1, 4);
    std::vector<Rational> periods;
    for (int i = 0; i < k; ++i) periods.push_back(oracle::random_period(rng, 6, 18));
    Instance a(periods);
    CyclicSchedule s = oracle::random_schedule(rng, 12, k);
    bool finite = verify(s, a).valid;
    bool brute = oracle::valid_brute(s, a, 3);
    c.expect(finite == brute, "criteria disagree on |" + emit(s) + "| for (" +
                                  emit(a) + ")");
  }
  return c;
}

// 8. Search certificates for the two schedulable fixtures; (2,3,6) is
//    unschedulable.
Crit criterion_8() {
  Crit c;
  auto found = find_schedule(parse_instance("2,4,4"), 8);
  c.expect(found.kind == SearchOutcome::Kind::schedulable,
           "no schedule found for (2,4,4)");
  c.expect(found.certificate &&
               verify(*found.certificate, parse_instance("2,4,4")).valid,
           "certificate for (2,4,4) fails verify");

  auto second = find_schedule(parse_instance("12/5,12/5,6"), 12);
  c.expect(second.kind == SearchOutcome::Kind::schedulable,
           "no schedule found for (12/5,12/5,6)");
  c.expect(second.certificate &&
               verify(*second.certificate,
                      parse_instance("12/5,12/5,6")).valid,
           "certificate for (12/5,12/5,6) fails verify");

  c.expect(prove_unschedulable(parse_instance("2,3,6")).kind ==
               SearchOutcome::Kind::unschedulable,
           "(2,3,6) not proven unschedulable");
  return c;
}

struct Entry {
  const char* description;
  Crit (*run)();
  long long budget_ms;
};

}  // namespace

int main() {
  const Entry entries[] = {
      {"checker fixtures pinpoint the frozen counterexample", criterion_1,
       1'000},
      {"two-period anchor schedules verify", criterion_2, 1'000},
      {"three-period templates hold strictly and fail at the boundary",
       criterion_3, 120'000},
      {"1000 random in-scope instances build and re-verify", criterion_4,
       120'000},
      {"region cover holds and every load-bearing region matters", criterion_5,
       10'000},
      {"two-period dominance covers 500 random instances", criterion_6,
       30'000},
      {"finite validity criterion matches deep brute force", criterion_7,
       30'000},
      {"search finds certificates and proves impossibility", criterion_8,
       60'000},
  };

  int failures = 0;
  int index = 0;
  for (const Entry& entry : entries) {
    ++index;
    auto start = std::chrono::steady_clock::now();
    Crit result;
    try {
      result = entry.run();
    } catch (const std::exception& e) {
      result.ok = false;
      result.why = std::string("unexpected exception: ") + e.what();
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    if (result.ok && elapsed >= entry.budget_ms) {
      result.ok = false;
      result.why = "exceeded " + std::to_string(entry.budget_ms) + " ms budget";
    }
    if (result.ok) {
      std::printf("PASS criterion %d — %s (%lld ms)\n", index,
                  entry.description, static_cast<long long>(elapsed));
    } else {
      ++failures;
      std::printf("FAIL criterion %d — %s (%lld ms): %s\n", index,
                  entry.description, static_cast<long long>(elapsed),
                  result.why.c_str());
    }
  }
  return failures == 0 ? 0 : 1;
}
