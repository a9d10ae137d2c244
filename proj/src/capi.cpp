#include "pinwheel/pinwheel.h"

#include <cctype>
#include <exception>
#include <string>
#include <vector>

#include "pinwheel/errors.hpp"
#include "pinwheel/model.hpp"
#include "pinwheel/report.hpp"

using namespace pinwheel;

struct pw_instance {
  Instance value;
  std::string text;  // canonical form, kept for accessor lifetime
};

struct pw_schedule {
  CyclicSchedule value;
  std::string text;
};

struct pw_report {
  Report value;
};

namespace {

thread_local std::string g_last_error;

pw_status status_of(const Error& e) {
  switch (e.code()) {
    case Errc::parse_error:
      return PW_ERR_PARSE;
    case Errc::out_of_scope:
      return PW_ERR_OUT_OF_SCOPE;
    case Errc::state_cap_exceeded:
      return PW_ERR_STATE_CAP;
    case Errc::partition_violation:
    case Errc::self_verification_failed:
    case Errc::internal:
      return PW_ERR_INTERNAL;
    default:
      return PW_ERR_DOMAIN;
  }
}

template <typename Fn>
pw_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return PW_OK;
  } catch (const Error& e) {
    g_last_error = std::string(errc_name(e.code())) + ": " + e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = std::string("InternalError: ") + e.what();
    return PW_ERR_INTERNAL;
  }
}

pw_status bad_arg(const char* msg) {
  g_last_error = std::string("InvalidArgument: ") + msg;
  return PW_ERR_BAD_ARG;
}

pw_status deliver(Report&& r, pw_report** out) {
  *out = new pw_report{std::move(r)};
  return PW_OK;
}

}  // namespace

extern "C" {

const char* pw_version(void) { return "0.1.0"; }

const char* pw_last_error(void) { return g_last_error.c_str(); }

pw_status pw_instance_parse(const char* text, pw_instance** out) {
  if (!text || !out) return bad_arg("pw_instance_parse: null argument");
  *out = nullptr;
  return guarded([&] {
    Instance a = parse_instance(text);
    std::string canonical = emit(a);
    *out = new pw_instance{std::move(a), std::move(canonical)};
  });
}

void pw_instance_free(pw_instance* a) { delete a; }

const char* pw_instance_text(const pw_instance* a) {
  return a ? a->text.c_str() : nullptr;
}

int pw_instance_task_count(const pw_instance* a) {
  return a ? a->value.k() : 0;
}

pw_status pw_schedule_parse(const char* text, pw_schedule** out) {
  if (!text || !out) return bad_arg("pw_schedule_parse: null argument");
  *out = nullptr;
  return guarded([&] {
    CyclicSchedule s = parse_schedule(text);
    std::string canonical = emit(s);
    *out = new pw_schedule{std::move(s), std::move(canonical)};
  });
}

void pw_schedule_free(pw_schedule* s) { delete s; }

const char* pw_schedule_text(const pw_schedule* s) {
  return s ? s->text.c_str() : nullptr;
}

int pw_schedule_period(const pw_schedule* s) {
  return s ? s->value.period() : 0;
}

pw_status pw_density(const pw_instance* a, pw_report** out) {
  if (!a || !out) return bad_arg("pw_density: null argument");
  *out = nullptr;
  return guarded([&] { deliver(report_density(a->value), out); });
}

pw_status pw_verify(const pw_schedule* s, const pw_instance* a,
                    pw_report** out) {
  if (!s || !a || !out) return bad_arg("pw_verify: null argument");
  *out = nullptr;
  return guarded([&] { deliver(report_verify(s->value, a->value), out); });
}

pw_status pw_build_schedule(const pw_instance* a, pw_report** out) {
  if (!a || !out) return bad_arg("pw_build_schedule: null argument");
  *out = nullptr;
  return guarded([&] { deliver(report_build(a->value), out); });
}

pw_status pw_classify(const char* a1, const char* a2, pw_report** out) {
  if (!a1 || !a2 || !out) return bad_arg("pw_classify: null argument");
  *out = nullptr;
  return guarded([&] {
    deliver(report_classify(parse_rational(a1), parse_rational(a2)), out);
  });
}

pw_status pw_cover_check(const char* drop, pw_report** out) {
  if (!out) return bad_arg("pw_cover_check: null argument");
  *out = nullptr;
  return guarded([&] {
    std::vector<std::string> names;
    if (drop) {
      std::string s(drop);
      size_t start = 0;
      while (start <= s.size()) {
        size_t comma = s.find(',', start);
        if (comma == std::string::npos) comma = s.size();
        std::string piece = s.substr(start, comma - start);
        std::string clean;
        for (char c : piece) {
          if (!std::isspace(static_cast<unsigned char>(c))) clean += c;
        }
        if (!clean.empty()) names.push_back(clean);
        start = comma + 1;
      }
    }
    deliver(report_cover_check(names), out);
  });
}

pw_status pw_find_schedule(const pw_instance* a, int max_period,
                           pw_report** out) {
  if (!a || !out) return bad_arg("pw_find_schedule: null argument");
  *out = nullptr;
  return guarded([&] { deliver(report_find(a->value, max_period), out); });
}

pw_status pw_prove_unschedulable(const pw_instance* a, long long state_cap,
                                 pw_report** out) {
  if (!a || !out) return bad_arg("pw_prove_unschedulable: null argument");
  *out = nullptr;
  return guarded([&] { deliver(report_prove(a->value, state_cap), out); });
}

pw_status pw_regions_dump(pw_report** out) {
  if (!out) return bad_arg("pw_regions_dump: null argument");
  *out = nullptr;
  return guarded([&] { deliver(report_regions_dump(), out); });
}

void pw_report_free(pw_report* r) { delete r; }

pw_verdict pw_report_verdict(const pw_report* r) {
  return r ? static_cast<pw_verdict>(r->value.verdict) : PW_VERDICT_INCONCLUSIVE;
}

const char* pw_report_text(const pw_report* r) {
  return r ? r->value.text.c_str() : nullptr;
}

const char* pw_report_json(const pw_report* r) {
  return r ? r->value.json.c_str() : nullptr;
}

}  // extern "C"
