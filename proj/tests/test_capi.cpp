#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "pinwheel/pinwheel.h"

namespace {

struct InstanceGuard {
  pw_instance* handle = nullptr;
  ~InstanceGuard() { pw_instance_free(handle); }
};

struct ScheduleGuard {
  pw_schedule* handle = nullptr;
  ~ScheduleGuard() { pw_schedule_free(handle); }
};

struct ReportGuard {
  pw_report* handle = nullptr;
  ~ReportGuard() { pw_report_free(handle); }
};

bool contains(const char* haystack, const char* needle) {
  return haystack != nullptr && std::strstr(haystack, needle) != nullptr;
}

}  // namespace

TEST_CASE("version string is present") {
  REQUIRE(pw_version() != nullptr);
  CHECK(std::strlen(pw_version()) > 0);
}

TEST_CASE("instance handles parse, canonicalize and free") {
  InstanceGuard a;
  REQUIRE(pw_instance_parse(" 2 , 7/2 ", &a.handle) == PW_OK);
  CHECK(std::string(pw_instance_text(a.handle)) == "2,7/2");
  CHECK(pw_instance_task_count(a.handle) == 2);

  InstanceGuard dec;
  REQUIRE(pw_instance_parse("1.5,6", &dec.handle) == PW_OK);
  CHECK(std::string(pw_instance_text(dec.handle)) == "3/2,6");
}

TEST_CASE("instance parse failures report through pw_last_error") {
  pw_instance* out = reinterpret_cast<pw_instance*>(0x1);
  CHECK(pw_instance_parse("2,oak", &out) == PW_ERR_PARSE);
  CHECK(contains(pw_last_error(), "oak"));
  CHECK(pw_instance_parse("1/2,3", &out) == PW_ERR_PARSE);
  CHECK(pw_instance_parse("", &out) == PW_ERR_PARSE);
}

TEST_CASE("schedule handles parse both grammars") {
  ScheduleGuard s;
  REQUIRE(pw_schedule_parse("112", &s.handle) == PW_OK);
  CHECK(pw_schedule_period(s.handle) == 3);
  CHECK(std::string(pw_schedule_text(s.handle)) == "112");

  ScheduleGuard wide;
  REQUIRE(pw_schedule_parse("10,2,10", &wide.handle) == PW_OK);
  CHECK(pw_schedule_period(wide.handle) == 3);
  CHECK(std::string(pw_schedule_text(wide.handle)) == "10,2,10");

  pw_schedule* bad = nullptr;
  CHECK(pw_schedule_parse("1x2", &bad) == PW_ERR_PARSE);
}

TEST_CASE("verify reports both verdicts") {
  InstanceGuard a;
  REQUIRE(pw_instance_parse("2,7/2", &a.handle) == PW_OK);

  ScheduleGuard good;
  REQUIRE(pw_schedule_parse("112", &good.handle) == PW_OK);
  ReportGuard ok;
  REQUIRE(pw_verify(good.handle, a.handle, &ok.handle) == PW_OK);
  CHECK(pw_report_verdict(ok.handle) == PW_VERDICT_OK);
  CHECK(std::string(pw_report_text(ok.handle)) == "VALID\n");

  ScheduleGuard bad;
  REQUIRE(pw_schedule_parse("1111212", &bad.handle) == PW_OK);
  ReportGuard no;
  REQUIRE(pw_verify(bad.handle, a.handle, &no.handle) == PW_OK);
  CHECK(pw_report_verdict(no.handle) == PW_VERDICT_NEGATIVE);
  CHECK(contains(pw_report_text(no.handle), "INVALID"));
  CHECK(contains(pw_report_text(no.handle), "counterexample: task=2"));
}

TEST_CASE("density, build and classify render text and json") {
  InstanceGuard a;
  REQUIRE(pw_instance_parse("2,7/2", &a.handle) == PW_OK);

  ReportGuard dens;
  REQUIRE(pw_density(a.handle, &dens.handle) == PW_OK);
  CHECK(contains(pw_report_text(dens.handle), "density: 11/14"));
  CHECK(contains(pw_report_json(dens.handle), "\"density\":\"11/14\""));

  ReportGuard built;
  REQUIRE(pw_build_schedule(a.handle, &built.handle) == PW_OK);
  CHECK(pw_report_verdict(built.handle) == PW_VERDICT_OK);
  CHECK(contains(pw_report_text(built.handle), "schedule: 112"));
  CHECK(contains(pw_report_json(built.handle), "\"schedule\":\"112\""));

  ReportGuard cls;
  REQUIRE(pw_classify("2", "4", &cls.handle) == PW_OK);
  CHECK(contains(pw_report_text(cls.handle), "case: I"));
}

TEST_CASE("cover check accepts drops and flags unknown names") {
  ReportGuard full;
  REQUIRE(pw_cover_check(nullptr, &full.handle) == PW_OK);
  CHECK(pw_report_verdict(full.handle) == PW_VERDICT_OK);
  CHECK(contains(pw_report_text(full.handle), "COVERED"));

  ReportGuard holed;
  REQUIRE(pw_cover_check("M7", &holed.handle) == PW_OK);
  CHECK(pw_report_verdict(holed.handle) == PW_VERDICT_NEGATIVE);
  CHECK(contains(pw_report_text(holed.handle), "witness: "));

  pw_report* out = nullptr;
  CHECK(pw_cover_check("bogus", &out) == PW_ERR_DOMAIN);
  CHECK(contains(pw_last_error(), "bogus"));
}

TEST_CASE("search and prove surface all verdicts") {
  InstanceGuard yes;
  REQUIRE(pw_instance_parse("2,4,4", &yes.handle) == PW_OK);
  ReportGuard found;
  REQUIRE(pw_find_schedule(yes.handle, 8, &found.handle) == PW_OK);
  CHECK(pw_report_verdict(found.handle) == PW_VERDICT_OK);
  CHECK(contains(pw_report_text(found.handle), "schedule: 1213"));

  InstanceGuard no;
  REQUIRE(pw_instance_parse("3/2,5,9", &no.handle) == PW_OK);
  ReportGuard budget;
  REQUIRE(pw_find_schedule(no.handle, 45, &budget.handle) == PW_OK);
  CHECK(pw_report_verdict(budget.handle) == PW_VERDICT_INCONCLUSIVE);

  ReportGuard proof;
  REQUIRE(pw_prove_unschedulable(no.handle, 10'000'000, &proof.handle) ==
          PW_OK);
  CHECK(pw_report_verdict(proof.handle) == PW_VERDICT_NEGATIVE);
  CHECK(contains(pw_report_text(proof.handle), "UNSCHEDULABLE"));

  pw_report* capped = nullptr;
  CHECK(pw_prove_unschedulable(no.handle, 10, &capped) == PW_ERR_STATE_CAP);
}

TEST_CASE("out-of-scope construction maps to its own status") {
  InstanceGuard a;
  REQUIRE(pw_instance_parse("4,5,6,7", &a.handle) == PW_OK);
  pw_report* out = nullptr;
  CHECK(pw_build_schedule(a.handle, &out) == PW_ERR_OUT_OF_SCOPE);
  CHECK(std::strlen(pw_last_error()) > 0);
}

TEST_CASE("null arguments are rejected, not dereferenced") {
  CHECK(pw_instance_parse(nullptr, nullptr) == PW_ERR_BAD_ARG);
  CHECK(pw_schedule_parse("12", nullptr) == PW_ERR_BAD_ARG);
  CHECK(pw_density(nullptr, nullptr) == PW_ERR_BAD_ARG);
  CHECK(pw_report_verdict(nullptr) == PW_VERDICT_INCONCLUSIVE);
  CHECK(pw_report_text(nullptr) == nullptr);
  CHECK(pw_instance_text(nullptr) == nullptr);
  CHECK(pw_instance_task_count(nullptr) == 0);
  pw_instance_free(nullptr);
  pw_schedule_free(nullptr);
  pw_report_free(nullptr);
}

TEST_CASE("regions dump renders every catalog region") {
  ReportGuard dump;
  REQUIRE(pw_regions_dump(&dump.handle) == PW_OK);
  const char* text = pw_report_text(dump.handle);
  for (const char* name : {"J:", "M1:", "M2:", "M3:", "M4:", "M5:", "M6:",
                           "M7:"}) {
    CAPTURE(name);
    CHECK(contains(text, name));
  }
  CHECK(contains(text, "vertices:"));
}
