// Shared brute-force oracles and deterministic generators for the test
// suites. Everything here is written from the definitions, independently of
// the library's own algorithms, so the two can disagree loudly.
#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "pinwheel/checker.hpp"
#include "pinwheel/model.hpp"

namespace oracle {

using pinwheel::CyclicSchedule;
using pinwheel::Instance;
using pinwheel::Int;
using pinwheel::Rational;

// Occurrences of `task` in the y days starting at day m, by direct scan.
inline long long window_count(const CyclicSchedule& s, int task, long long m,
                              long long y) {
  long long hits = 0;
  for (long long t = 0; t < y; ++t) {
    if (s.slot(m + t) == task) ++hits;
  }
  return hits;
}

inline long long window_min_count(const CyclicSchedule& s, int task,
                                  long long y) {
  long long best = y;
  for (long long m = 0; m < s.period(); ++m) {
    best = std::min(best, window_count(s, task, m, y));
  }
  return best;
}

// Validity by the raw definition, checking every l up to depth * q(i): every
// window of ceil(l * a_i) consecutive days must hold at least l occurrences.
inline bool valid_brute(const CyclicSchedule& s, const Instance& a, int depth) {
  for (int i = 1; i <= a.k(); ++i) {
    const Rational& p = a.period(i);
    const Int lmax = p.den() * depth;
    for (Int l = 1; l <= lmax; ++l) {
      const Int w = pinwheel::ceil_mul(l, p);
      const long long y = static_cast<long long>(w);
      for (long long m = 0; m < s.period(); ++m) {
        if (Int(window_count(s, i, m, y)) < l) return false;
      }
    }
  }
  return true;
}

// Deterministic generator helpers. std::mt19937 with explicit modulo keeps
// sequences identical across standard libraries.
struct Rng {
  std::mt19937 g;
  explicit Rng(unsigned seed) : g(seed) {}
  long long pick(long long lo, long long hi) {
    return lo + static_cast<long long>(g() % static_cast<unsigned long>(hi - lo + 1));
  }
};

// One rational period in [1, num_max] with denominator <= den_max.
inline Rational random_period(Rng& rng, long long den_max, long long num_max) {
  const long long q = rng.pick(1, den_max);
  const long long p = rng.pick(q, num_max);
  return Rational(Int(p), Int(q));
}

// Instance with at most `max_distinct` distinct values, multiplicities 1..3,
// densities filtered by the caller.
inline Instance random_grouped_instance(Rng& rng, int max_distinct,
                                        long long den_max, long long num_max) {
  const int d = static_cast<int>(rng.pick(1, max_distinct));
  std::vector<Rational> values;
  while (static_cast<int>(values.size()) < d) {
    Rational v = random_period(rng, den_max, num_max);
    bool dup = false;
    for (const Rational& u : values) dup = dup || u == v;
    if (!dup) values.push_back(v);
  }
  std::vector<Rational> periods;
  for (const Rational& v : values) {
    const int mult = static_cast<int>(rng.pick(1, 3));
    for (int i = 0; i < mult; ++i) periods.push_back(v);
  }
  std::shuffle(periods.begin(), periods.end(), rng.g);
  return Instance(periods);
}

inline CyclicSchedule random_schedule(Rng& rng, int n_max, int k) {
  const int n = static_cast<int>(rng.pick(1, n_max));
  std::vector<int> slots;
  for (int t = 0; t < n; ++t) slots.push_back(static_cast<int>(rng.pick(1, k)));
  return CyclicSchedule(slots);
}

}  // namespace oracle
