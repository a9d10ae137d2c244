#include "pinwheel/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "pinwheel/errors.hpp"

namespace pinwheel {

const char* case_name(CaseId c) {
  switch (c) {
    case CaseId::two_i: return "TwoI";
    case CaseId::two_ii: return "TwoII";
    case CaseId::two_iii: return "TwoIII";
    case CaseId::i: return "I";
    case CaseId::ii: return "II";
    case CaseId::iii: return "III";
    case CaseId::iv: return "IV";
    case CaseId::v: return "V";
    case CaseId::vi: return "VI";
    case CaseId::vii: return "VII";
  }
  return "?";
}

namespace {

AnchorPeriod at(long long n, long long d = 1) { return {rat(n, d), false}; }
AnchorPeriod above(long long n, long long d = 1) { return {rat(n, d), true}; }

std::vector<Fixture> make_fixtures() {
  std::vector<Fixture> fs;
  fs.push_back({CaseId::two_i, {at(6, 5), at(6)}, parse_schedule("111112")});
  fs.push_back({CaseId::two_ii, {at(3, 2), at(3)}, parse_schedule("112")});
  fs.push_back({CaseId::two_iii, {at(2), at(2)}, parse_schedule("12")});
  fs.push_back({CaseId::ii, {at(3, 2), above(5), at(9)}, parse_schedule("112112113")});
  fs.push_back({CaseId::iii, {at(11, 7), above(4), at(11)}, parse_schedule("11211211213")});
  fs.push_back({CaseId::iv, {at(12, 7), above(3), at(12)}, parse_schedule("121121211213")});
  fs.push_back({CaseId::v, {above(2), at(3), at(6)}, parse_schedule("121123")});
  fs.push_back({CaseId::vi, {above(2), at(12, 5), at(12)}, parse_schedule("121211212123")});
  fs.push_back({CaseId::vii, {at(12, 5), at(12, 5), at(6)}, parse_schedule("121213212123")});
  return fs;
}

}  // namespace

const std::vector<Fixture>& fixture_table() {
  static const std::vector<Fixture> fs = make_fixtures();
  return fs;
}

const Fixture& fixture(CaseId id) {
  for (const Fixture& f : fixture_table()) {
    if (f.id == id) return f;
  }
  fail(Errc::invalid_argument,
       std::string("case ") + case_name(id) + " has no fixed template");
}

Instance fixture_instance(CaseId id, const Rational& eps) {
  if (eps < Rational(0)) fail(Errc::invalid_argument, "negative eps");
  const Fixture& f = fixture(id);
  std::vector<Rational> periods;
  periods.reserve(f.anchor.size());
  for (const AnchorPeriod& p : f.anchor) {
    periods.push_back(p.strict ? p.value + eps : p.value);
  }
  return Instance(std::move(periods));
}

Instance shrink_to_exact(const Instance& sorted_distinct, const Rational& target) {
  const int k = sorted_distinct.k();
  if (k != 2 && k != 3) {
    fail(Errc::invalid_argument, "shrink_to_exact needs 2 or 3 tasks, got " +
                                     std::to_string(k));
  }
  const auto& ps = sorted_distinct.periods();
  for (int i = 1; i < k; ++i) {
    if (!(ps[i - 1] < ps[i])) {
      fail(Errc::invalid_argument,
           "shrink_to_exact needs strictly increasing periods");
    }
  }
  Rational d = density(sorted_distinct);
  if (d > target) {
    fail(Errc::invalid_argument, "density " + d.str() + " already above target " +
                                     target.str());
  }
  Rational rest = target;
  for (int i = 0; i + 1 < k; ++i) rest -= ps[i].reciprocal();
  if (!(rest > Rational(0))) {
    fail(Errc::internal, "non-positive residual frequency despite density <= target");
  }
  Rational replacement = rest.reciprocal();
  if (replacement < ps[k - 2]) {
    fail(Errc::not_shrinkable, "exact-density period " + replacement.str() +
                                   " would fall below " + ps[k - 2].str());
  }
  std::vector<Rational> out(ps);
  out[k - 1] = replacement;
  return Instance(std::move(out));
}

std::pair<CaseId, CyclicSchedule> two_period_schedule(const Rational& a1) {
  if (!(a1 > rat(6, 5)) || a1 > Rational(3)) {
    fail(Errc::out_of_range, "two-period construction needs a1 in (6/5, 3], got " +
                                 a1.str());
  }
  if (a1 <= rat(3, 2)) return {CaseId::two_i, fixture(CaseId::two_i).tmpl};
  if (a1 <= Rational(2)) return {CaseId::two_ii, fixture(CaseId::two_ii).tmpl};
  return {CaseId::two_iii, fixture(CaseId::two_iii).tmpl};
}

CyclicSchedule beatty_schedule(const Rational& a1) {
  if (!(a1 > rat(6, 5))) {
    fail(Errc::out_of_range, "beatty construction needs a1 > 6/5, got " + a1.str());
  }
  const Int& p1 = a1.num();
  const Int& q1 = a1.den();
  if (p1 > 1'000'000) {
    fail(Errc::out_of_scope, "beatty period 2*" + p1.str() + " too large to build");
  }
  const long long p = static_cast<long long>(p1);
  const long long q = static_cast<long long>(q1);
  const long long n = 2 * p;
  const long long dd = p - q;  // > 0 since a1 > 1

  std::vector<int> slots(static_cast<size_t>(n), 0);
  auto place = [&](long long day, int task) {
    if (day < 0 || day >= n) {
      fail(Errc::internal, "beatty day " + std::to_string(day) + " outside [0, " +
                               std::to_string(n) + ")");
    }
    if (slots[static_cast<size_t>(day)] != 0) {
      fail(Errc::partition_violation,
           "day " + std::to_string(day) + " claimed by tasks " +
               std::to_string(slots[static_cast<size_t>(day)]) + " and " +
               std::to_string(task));
    }
    slots[static_cast<size_t>(day)] = task;
  };

  // Task 1 on {ceil(j*a1) - 1}: exactly j = 1..2q lands in [0, 2p).
  for (long long j = 1; j <= 2 * q; ++j) {
    place(static_cast<long long>(ceil_div(Int(j) * p1, q1)) - 1, 1);
  }
  // Tasks 2 and 3 on the even/odd halves of {floor(j * a2'/2)} with
  // a2' = 2p/(p - q): exactly j = 0..p-q-1 each.
  for (long long j = 0; j < dd; ++j) {
    place(static_cast<long long>(floor_div(Int(2 * j) * p1, Int(dd))), 2);
    place(static_cast<long long>(floor_div(Int(2 * j + 1) * p1, Int(dd))), 3);
  }
  for (long long t = 0; t < n; ++t) {
    if (slots[static_cast<size_t>(t)] == 0) {
      fail(Errc::partition_violation, "day " + std::to_string(t) + " left empty");
    }
  }
  return CyclicSchedule(std::move(slots));
}

CaseId classify_case(const Rational& a1, const Rational& a2) {
  const Point p{a1.reciprocal(), a2.reciprocal()};
  if (!contains(region_J(), p)) {
    fail(Errc::not_in_j, "frequency point (" + p.x.str() + ", " + p.y.str() +
                             ") outside region J");
  }
  const auto& ms = regions_M();
  for (size_t i = 0; i < ms.size(); ++i) {
    if (contains(ms[i], p)) {
      return static_cast<CaseId>(static_cast<int>(CaseId::i) + static_cast<int>(i));
    }
  }
  // J is covered by M1..M7 (cover_check proves it), so this cannot happen.
  fail(Errc::internal, "point in J escaped every construction case");
}

std::pair<CaseId, CyclicSchedule> three_period_schedule(const Rational& a1,
                                                        const Rational& a2) {
  CaseId c = classify_case(a1, a2);
  if (c == CaseId::i) return {c, beatty_schedule(a1)};
  return {c, fixture(c).tmpl};
}

CyclicSchedule expand(const CyclicSchedule& s, const FoldPlan& plan) {
  std::vector<int> cur = s.slots();
  for (auto it = plan.steps.rbegin(); it != plan.steps.rend(); ++it) {
    const FoldStep& step = *it;
    const int m = step.multiplicity;
    if (m < 2 || static_cast<int>(step.group.size()) != m || step.k_before < m) {
      fail(Errc::invalid_argument, "malformed fold step");
    }

    // Positions of the pre-step instance that survive the fold, ascending.
    std::vector<int> survivors;
    survivors.reserve(step.k_before - m + 1);
    for (int pos = 1; pos <= step.k_before; ++pos) {
      bool removed = std::find(step.group.begin() + 1, step.group.end(), pos) !=
                     step.group.end();
      if (!removed) survivors.push_back(pos);
    }
    if (step.replacement < 1 || step.replacement > static_cast<int>(survivors.size()) ||
        survivors[step.replacement - 1] != step.group[0]) {
      fail(Errc::invalid_argument, "fold step replacement does not match its group");
    }

    long long occ = std::count(cur.begin(), cur.end(), step.replacement);
    if (occ == 0) {
      fail(Errc::invalid_argument, "folded task " + std::to_string(step.replacement) +
                                       " never occurs in the schedule");
    }
    const long long reps = m / std::gcd(occ, static_cast<long long>(m));

    std::vector<int> next;
    next.reserve(cur.size() * static_cast<size_t>(reps));
    int robin = 0;
    for (long long r = 0; r < reps; ++r) {
      for (int v : cur) {
        if (v == step.replacement) {
          next.push_back(step.group[robin]);
          robin = (robin + 1) % m;
        } else {
          if (v < 1 || v > static_cast<int>(survivors.size())) {
            fail(Errc::invalid_argument, "schedule index " + std::to_string(v) +
                                             " outside the folded instance");
          }
          next.push_back(survivors[v - 1]);
        }
      }
    }
    cur = std::move(next);
  }
  return CyclicSchedule(std::move(cur));
}

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

void trace_folds(CaseTrace& tr, const FoldPlan& plan) {
  for (const FoldStep& st : plan.steps) {
    tr.steps.push_back({"fold", "tasks " + join_ints(st.group) + " of period " +
                                    st.original_period.str() + " -> one task of period " +
                                    st.folded_period.str()});
  }
}

CyclicSchedule schedule_sorted(const Instance& s, CaseTrace& tr);

// normalize -> sort -> dispatch -> undo sort -> undo folds.
CyclicSchedule schedule_any(const Instance& a, CaseTrace& tr) {
  Normalized norm = normalize(a);
  trace_folds(tr, norm.plan);

  Instance::Sorted sorted = norm.instance.sorted();
  bool is_sorted_already = true;
  for (size_t r = 0; r < sorted.order.size(); ++r) {
    if (sorted.order[r] != static_cast<int>(r)) is_sorted_already = false;
  }
  if (!is_sorted_already) {
    std::vector<int> shown(sorted.order.begin(), sorted.order.end());
    for (int& x : shown) ++x;
    tr.steps.push_back({"sort", "period order " + join_ints(shown)});
  }

  CyclicSchedule core = schedule_sorted(sorted.instance, tr);

  std::vector<int> remapped;
  remapped.reserve(core.slots().size());
  for (int v : core.slots()) remapped.push_back(sorted.order[v - 1] + 1);
  CyclicSchedule folded_schedule{std::move(remapped)};

  if (norm.plan.empty()) return folded_schedule;
  CyclicSchedule out = expand(folded_schedule, norm.plan);
  tr.steps.push_back({"expand", "replayed " + std::to_string(norm.plan.steps.size()) +
                                    " fold step(s), period " +
                                    std::to_string(folded_schedule.period()) + " -> " +
                                    std::to_string(out.period())});
  return out;
}

CyclicSchedule schedule_sorted(const Instance& s, CaseTrace& tr) {
  const int k = s.k();
  const auto& ps = s.periods();
  const Rational five_sixths = rat(5, 6);

  if (k == 1) {
    tr.steps.push_back({"single", "one task -> schedule 1"});
    return CyclicSchedule({1});
  }

  if (k == 2) {
    const Rational& a1 = ps[0];
    if (a1 >= rat(12, 5)) {
      // The exact-density companion would not exceed a1; fold instead.
      tr.steps.push_back({"fold-down", "a1 = " + a1.str() +
                                           " >= 12/5: lower a2 from " + ps[1].str() +
                                           " to a1 and fold the pair"});
      return schedule_any(Instance({a1, a1}), tr);
    }
    Instance shrunk = shrink_to_exact(s);
    tr.steps.push_back({"shrink", "a2 " + ps[1].str() + " -> " +
                                      shrunk.periods()[1].str() +
                                      " (density exactly 5/6)"});
    auto [case_id, tmpl] = two_period_schedule(a1);
    tr.cases.push_back(case_id);
    tr.steps.push_back({"case", std::string(case_name(case_id)) + ": template " +
                                    emit(tmpl)});
    return tmpl;
  }

  if (k == 3) {
    const Rational& a1 = ps[0];
    const Rational& a2 = ps[1];
    if (a1.reciprocal() + Rational(2) * a2.reciprocal() <= five_sixths) {
      // Shrinking a3 to exact density would not keep it above a2; fold instead.
      tr.steps.push_back({"fold-down", "1/a1 + 2/a2 <= 5/6: lower a3 from " +
                                           ps[2].str() + " to " + a2.str() +
                                           " and fold the pair"});
      return schedule_any(Instance({a1, a2, a2}), tr);
    }
    Instance shrunk = shrink_to_exact(s);
    tr.steps.push_back({"shrink", "a3 " + ps[2].str() + " -> " +
                                      shrunk.periods()[2].str() +
                                      " (density exactly 5/6)"});
    auto [case_id, sched] = three_period_schedule(a1, a2);
    tr.cases.push_back(case_id);
    if (case_id == CaseId::i) {
      tr.steps.push_back({"case", "I: beatty schedule of period " +
                                      std::to_string(sched.period())});
    } else {
      tr.steps.push_back({"case", std::string(case_name(case_id)) + ": template " +
                                      emit(sched)});
    }
    return sched;
  }

  fail(Errc::out_of_scope, "periods take " + std::to_string(k) +
                               " distinct values after folding; constructions cover "
                               "at most 3");
}

}  // namespace

ScheduleResult build_schedule(const Instance& a) {
  CaseTrace tr;
  const Rational d = density(a);
  tr.steps.push_back({"density", d.str()});
  if (d > rat(5, 6)) {
    if (d > Rational(1)) {
      fail(Errc::out_of_scope,
           "density " + d.str() + " > 1: provably unschedulable");
    }
    // Densities in (5/6, 1] are still fine when every period is the same
    // value: the whole instance folds to a single task that day-one service
    // covers. Anything needing the two- or three-value machinery is out.
    if (normalize(a).instance.k() != 1) {
      fail(Errc::out_of_scope,
           "density " + d.str() +
               " in (5/6, 1]: outside the construction's scope");
    }
  }

  CyclicSchedule sched = schedule_any(a, tr);
  Verdict v = verify(sched, a);
  if (!v.valid) {
    fail(Errc::self_verification_failed,
         "built schedule failed verification (task " +
             std::to_string(v.counterexample->task) + ", l " +
             v.counterexample->l.str() + ", day " +
             std::to_string(v.counterexample->m) + ")");
  }
  tr.steps.push_back({"verify", "valid, period " + std::to_string(sched.period())});
  return ScheduleResult{std::move(sched), std::move(tr)};
}

}  // namespace pinwheel
