#include "pinwheel/model.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "pinwheel/errors.hpp"

namespace pinwheel {

Instance::Instance(std::vector<Rational> periods) : periods_(std::move(periods)) {
  if (periods_.empty()) fail(Errc::invalid_argument, "instance with no tasks");
  for (size_t i = 0; i < periods_.size(); ++i) {
    if (periods_[i] < Rational(1)) {
      fail(Errc::invalid_argument,
           "task " + std::to_string(i + 1) + " has period " + periods_[i].str() +
               " < 1");
    }
  }
}

const Rational& Instance::period(int task) const {
  if (task < 1 || task > k()) {
    fail(Errc::invalid_argument, "task index " + std::to_string(task) +
                                     " outside [1, " + std::to_string(k()) + "]");
  }
  return periods_[task - 1];
}

int Instance::distinct_count() const {
  std::vector<Rational> v = periods_;
  std::sort(v.begin(), v.end());
  return static_cast<int>(std::unique(v.begin(), v.end()) - v.begin());
}

Instance::Sorted Instance::sorted() const {
  std::vector<int> order(periods_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return periods_[x] < periods_[y]; });
  std::vector<Rational> sorted_periods;
  sorted_periods.reserve(periods_.size());
  for (int idx : order) sorted_periods.push_back(periods_[idx]);
  return Sorted{Instance(std::move(sorted_periods)), std::move(order)};
}

CyclicSchedule::CyclicSchedule(std::vector<int> slots) : slots_(std::move(slots)) {
  if (slots_.empty()) fail(Errc::invalid_argument, "schedule with no slots");
  for (size_t t = 0; t < slots_.size(); ++t) {
    if (slots_[t] < 1) {
      fail(Errc::invalid_argument,
           "slot " + std::to_string(t) + " holds task index " +
               std::to_string(slots_[t]) + " < 1");
    }
  }
}

int CyclicSchedule::slot(long long day) const {
  long long n = period();
  long long t = day % n;
  if (t < 0) t += n;
  return slots_[static_cast<size_t>(t)];
}

int CyclicSchedule::max_task() const {
  return *std::max_element(slots_.begin(), slots_.end());
}

Rational density(const Instance& a) {
  Rational d(0);
  for (const Rational& p : a.periods()) d += p.reciprocal();
  return d;
}

Normalized normalize(const Instance& a) {
  std::vector<Rational> cur = a.periods();
  FoldPlan plan;
  for (;;) {
    // Leftmost period value that occurs more than once.
    int first = -1;
    for (size_t i = 0; i < cur.size() && first < 0; ++i) {
      for (size_t j = i + 1; j < cur.size(); ++j) {
        if (cur[j] == cur[i]) {
          first = static_cast<int>(i);
          break;
        }
      }
    }
    if (first < 0) break;

    const Rational value = cur[first];
    FoldStep step;
    step.k_before = static_cast<int>(cur.size());
    step.original_period = value;
    for (size_t i = 0; i < cur.size(); ++i) {
      if (cur[i] == value) step.group.push_back(static_cast<int>(i) + 1);
    }
    step.multiplicity = static_cast<int>(step.group.size());
    step.replacement = step.group[0];  // later group members sit to its right
    step.folded_period = value / Rational(step.multiplicity);
    if (step.folded_period < Rational(1)) {
      fail(Errc::folded_period_below_one,
           "folding " + std::to_string(step.multiplicity) + " tasks of period " +
               value.str() + " gives period " + step.folded_period.str() + " < 1");
    }

    std::vector<Rational> next;
    next.reserve(cur.size() - step.multiplicity + 1);
    for (size_t i = 0; i < cur.size(); ++i) {
      if (cur[i] == value) {
        if (static_cast<int>(i) + 1 == step.group[0]) next.push_back(step.folded_period);
      } else {
        next.push_back(cur[i]);
      }
    }
    cur = std::move(next);
    plan.steps.push_back(std::move(step));
  }
  return Normalized{Instance(std::move(cur)), std::move(plan)};
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, size_t pos, const std::string& why) {
  fail(Errc::parse_error, "cannot parse \"" + std::string(text) + "\" at offset " +
                              std::to_string(pos) + ": " + why);
}

std::string strip_ws(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  }
  return out;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

Int parse_int(std::string_view s) {
  return Int(std::string(s));
}

// One rational token: "p/q" | digits | digits.digits (<= 9 fraction digits).
Rational parse_rational_token(std::string_view original, size_t offset,
                              std::string_view tok) {
  if (tok.empty()) parse_fail(original, offset, "empty number");
  size_t slash = tok.find('/');
  if (slash != std::string_view::npos) {
    std::string_view num = tok.substr(0, slash);
    std::string_view den = tok.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      parse_fail(original, offset, "expected digits/digits, got \"" + std::string(tok) + "\"");
    }
    Int d = parse_int(den);
    if (d == 0) parse_fail(original, offset, "zero denominator in \"" + std::string(tok) + "\"");
    return Rational(parse_int(num), d);
  }
  size_t dot = tok.find('.');
  if (dot != std::string_view::npos) {
    std::string_view whole = tok.substr(0, dot);
    std::string_view frac = tok.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) {
      parse_fail(original, offset, "expected a decimal, got \"" + std::string(tok) + "\"");
    }
    if (frac.size() > 9) {
      parse_fail(original, offset, "more than 9 fractional digits in \"" + std::string(tok) + "\"");
    }
    Int scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    return Rational(parse_int(whole) * scale + parse_int(frac), scale);
  }
  if (!all_digits(tok)) {
    parse_fail(original, offset, "expected p/q, integer or decimal, got \"" + std::string(tok) + "\"");
  }
  return Rational(parse_int(tok));
}

std::vector<std::pair<size_t, std::string>> split_commas(const std::string& s) {
  std::vector<std::pair<size_t, std::string>> out;
  size_t start = 0;
  for (;;) {
    size_t comma = s.find(',', start);
    if (comma == std::string::npos) {
      out.emplace_back(start, s.substr(start));
      return out;
    }
    out.emplace_back(start, s.substr(start, comma - start));
    start = comma + 1;
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s = strip_ws(text);
  return parse_rational_token(text, 0, s);
}

Instance parse_instance(std::string_view text) {
  std::string s = strip_ws(text);
  if (s.empty()) parse_fail(text, 0, "no periods given");
  std::vector<Rational> periods;
  for (auto& [pos, tok] : split_commas(s)) {
    Rational p = parse_rational_token(text, pos, tok);
    if (p < Rational(1)) {
      parse_fail(text, pos, "period " + p.str() + " < 1");
    }
    periods.push_back(std::move(p));
  }
  return Instance(std::move(periods));
}

CyclicSchedule parse_schedule(std::string_view text) {
  std::string s = strip_ws(text);
  if (s.empty()) parse_fail(text, 0, "no slots given");
  std::vector<int> slots;
  if (s.find(',') != std::string::npos) {
    for (auto& [pos, tok] : split_commas(s)) {
      if (!all_digits(tok)) {
        parse_fail(text, pos, "expected a task index, got \"" + tok + "\"");
      }
      Int v = parse_int(tok);
      if (v < 1 || v > 1'000'000) parse_fail(text, pos, "task index " + tok + " out of range");
      slots.push_back(static_cast<int>(v));
    }
  } else {
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] < '1' || s[i] > '9') {
        parse_fail(text, i, std::string("expected a digit 1-9, got '") + s[i] + "'");
      }
      slots.push_back(s[i] - '0');
    }
  }
  return CyclicSchedule(std::move(slots));
}

std::string emit(const Instance& a) {
  std::string out;
  for (int i = 0; i < a.k(); ++i) {
    if (i > 0) out += ',';
    out += a.periods()[i].str();
  }
  return out;
}

std::string emit(const CyclicSchedule& s) {
  std::string out;
  if (s.max_task() <= 9) {
    for (int v : s.slots()) out += static_cast<char>('0' + v);
  } else {
    for (size_t i = 0; i < s.slots().size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(s.slots()[i]);
    }
  }
  return out;
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::parse_error: return "ParseError";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::not_in_j: return "NotInJ";
    case Errc::not_shrinkable: return "NotShrinkable";
    case Errc::out_of_scope: return "OutOfScope";
    case Errc::folded_period_below_one: return "FoldedPeriodBelowOne";
    case Errc::task_index_out_of_range: return "TaskIndexOutOfRange";
    case Errc::partition_violation: return "PartitionViolation";
    case Errc::self_verification_failed: return "SelfVerificationFailed";
    case Errc::state_cap_exceeded: return "StateCapExceeded";
    case Errc::internal: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace pinwheel
