#pragma once

#include <stdexcept>
#include <string>

namespace pinwheel {

// Every failure the library can signal. The C API maps these onto its status
// codes; the CLI maps them onto process exit codes.
enum class Errc {
  parse_error,                // malformed instance/schedule/rational text
  invalid_argument,           // programmatic misuse (bad handle contents, k = 0, ...)
  out_of_range,               // construction asked for a period outside its range
  not_in_j,                   // classify_case: frequency point outside region J
  not_shrinkable,             // shrink_to_exact would break the sorted order
  out_of_scope,               // schedule(): density or shape outside what we build
  folded_period_below_one,    // normalize: folding a group would give a period < 1
  task_index_out_of_range,    // schedule references a task the instance lacks
  partition_violation,        // beatty_schedule: generated day sets fail to tile
  self_verification_failed,   // schedule(): built schedule did not verify (bug guard)
  state_cap_exceeded,         // search: state-space estimate above the cap
  internal,                   // invariant broken; always a bug
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace pinwheel
