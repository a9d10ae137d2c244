#include <CLI11.hpp>
#include <cstdio>
#include <string>

#include "pinwheel/pinwheel.h"

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

int emit_error(pw_status st, bool json) {
  const std::string msg = pw_last_error();
  if (json) std::printf("{\"error\":\"%s\"}\n", json_escape(msg).c_str());
  std::fprintf(stderr, "error: %s\n", msg.c_str());
  return (st == PW_ERR_PARSE || st == PW_ERR_BAD_ARG) ? 3 : 2;
}

int emit_report(pw_report* rep, bool json) {
  std::fputs(json ? pw_report_json(rep) : pw_report_text(rep), stdout);
  const int code = static_cast<int>(pw_report_verdict(rep));
  pw_report_free(rep);
  return code;
}

template <typename Op>
int with_instance(const std::string& text, bool json, Op op) {
  pw_instance* a = nullptr;
  pw_status st = pw_instance_parse(text.c_str(), &a);
  if (st != PW_OK) return emit_error(st, json);
  pw_report* rep = nullptr;
  st = op(a, &rep);
  pw_instance_free(a);
  if (st != PW_OK) return emit_error(st, json);
  return emit_report(rep, json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"real-period pinwheel scheduling tools"};
  app.require_subcommand(1);
  app.fallthrough(true);

  bool json = false;
  int threads = 1;
  app.add_flag("--json", json, "emit machine-readable JSON instead of text");
  app.add_option("--threads", threads, "worker threads (results are identical)")
      ->check(CLI::PositiveNumber);

  std::string instance_text, schedule_text, a1, a2, drop;
  int max_period = 64;
  long long state_cap = 10'000'000;

  auto* cmd_schedule =
      app.add_subcommand("schedule", "build a valid cyclic schedule");
  cmd_schedule->add_option("--instance", instance_text, "comma-separated periods")
      ->required();

  auto* cmd_verify =
      app.add_subcommand("verify", "check a schedule against an instance");
  cmd_verify->add_option("--schedule", schedule_text, "slots, e.g. 1213")
      ->required();
  cmd_verify->add_option("--instance", instance_text, "comma-separated periods")
      ->required();

  auto* cmd_density = app.add_subcommand("density", "sum of task frequencies");
  cmd_density->add_option("--instance", instance_text, "comma-separated periods")
      ->required();

  auto* cmd_classify =
      app.add_subcommand("classify", "construction case for two periods");
  cmd_classify->add_option("--a1", a1, "smallest period (rational)")->required();
  cmd_classify->add_option("--a2", a2, "middle period (rational)")->required();

  auto* cmd_cover = app.add_subcommand(
      "cover-check", "machine-check the frequency-space region cover");
  cmd_cover->add_option("--drop", drop,
                        "comma-separated region names to leave out");

  auto* cmd_search =
      app.add_subcommand("search", "exhaustive search for a cyclic schedule");
  cmd_search->add_option("--instance", instance_text, "comma-separated periods")
      ->required();
  cmd_search->add_option("--max-period", max_period, "largest period to try");

  auto* cmd_prove = app.add_subcommand(
      "prove", "decide schedulability by exhausting the state space");
  cmd_prove->add_option("--instance", instance_text, "comma-separated periods")
      ->required();
  cmd_prove->add_option("--state-cap", state_cap,
                        "abort if the state estimate exceeds this");

  auto* cmd_regions = app.add_subcommand(
      "regions-dump", "print region constraints and vertices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  if (cmd_schedule->parsed()) {
    return with_instance(instance_text, json, [](pw_instance* a, pw_report** r) {
      return pw_build_schedule(a, r);
    });
  }
  if (cmd_verify->parsed()) {
    pw_schedule* s = nullptr;
    pw_status st = pw_schedule_parse(schedule_text.c_str(), &s);
    if (st != PW_OK) return emit_error(st, json);
    const int rc =
        with_instance(instance_text, json, [s](pw_instance* a, pw_report** r) {
          return pw_verify(s, a, r);
        });
    pw_schedule_free(s);
    return rc;
  }
  if (cmd_density->parsed()) {
    return with_instance(instance_text, json, [](pw_instance* a, pw_report** r) {
      return pw_density(a, r);
    });
  }
  if (cmd_classify->parsed()) {
    pw_report* rep = nullptr;
    pw_status st = pw_classify(a1.c_str(), a2.c_str(), &rep);
    if (st != PW_OK) return emit_error(st, json);
    return emit_report(rep, json);
  }
  if (cmd_cover->parsed()) {
    pw_report* rep = nullptr;
    pw_status st = pw_cover_check(drop.empty() ? nullptr : drop.c_str(), &rep);
    if (st != PW_OK) return emit_error(st, json);
    return emit_report(rep, json);
  }
  if (cmd_search->parsed()) {
    return with_instance(instance_text, json,
                         [max_period](pw_instance* a, pw_report** r) {
                           return pw_find_schedule(a, max_period, r);
                         });
  }
  if (cmd_prove->parsed()) {
    return with_instance(instance_text, json,
                         [state_cap](pw_instance* a, pw_report** r) {
                           return pw_prove_unschedulable(a, state_cap, r);
                         });
  }
  if (cmd_regions->parsed()) {
    pw_report* rep = nullptr;
    pw_status st = pw_regions_dump(&rep);
    if (st != PW_OK) return emit_error(st, json);
    return emit_report(rep, json);
  }
  return 3;
}
