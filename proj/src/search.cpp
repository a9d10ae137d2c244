#include "pinwheel/search.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "pinwheel/errors.hpp"

namespace pinwheel {

namespace {

// Ages, per task, of its last q occurrences (ascending: [0] is the most
// recent). A state is alive while the l-th most recent occurrence is at most
// ceil(l * a) - 1 days old for every l in [1, q]; one day older and some
// window demand is already broken, so anything reachable from here is too.
struct TaskShape {
  int q = 0;
  std::vector<long long> bound;  // bound[l-1] = ceil(l * a) - 1
};

std::vector<TaskShape> task_shapes(const Instance& a) {
  std::vector<TaskShape> shapes;
  shapes.reserve(a.k());
  for (const Rational& p : a.periods()) {
    TaskShape ts;
    const Int q = p.den();
    if (q > 1'000'000) {
      fail(Errc::state_cap_exceeded,
           "period denominator " + q.str() + " too large to track");
    }
    ts.q = static_cast<int>(q);
    for (Int l = 1; l <= q; ++l) {
      Int b = ceil_mul(l, p) - 1;
      if (b > 1'000'000'000) {
        fail(Errc::state_cap_exceeded, "period " + p.str() + " too large to track");
      }
      ts.bound.push_back(static_cast<long long>(b));
    }
    shapes.push_back(std::move(ts));
  }
  return shapes;
}

using RawState = std::vector<int>;  // all tasks' age vectors, concatenated

// The search start pretends every task was performed on each of the last few
// days, which only grants slack; the final verify() of any candidate keeps
// this sound.
RawState fiction_start(const std::vector<TaskShape>& shapes) {
  RawState s;
  for (const TaskShape& ts : shapes) {
    for (int l = 0; l < ts.q; ++l) s.push_back(l);
  }
  return s;
}

// One day passes and `perform` (1-based) is done. Returns false if the
// resulting state is dead.
bool step(const std::vector<TaskShape>& shapes, const RawState& in, int perform,
          RawState& out) {
  out.resize(in.size());
  size_t base = 0;
  for (size_t i = 0; i < shapes.size(); ++i) {
    const TaskShape& ts = shapes[i];
    if (static_cast<int>(i) + 1 == perform) {
      out[base] = 0;
      for (int l = 1; l < ts.q; ++l) out[base + l] = in[base + l - 1] + 1;
    } else {
      for (int l = 0; l < ts.q; ++l) out[base + l] = in[base + l] + 1;
    }
    for (int l = 0; l < ts.q; ++l) {
      if (out[base + l] > ts.bound[l]) return false;
    }
    base += ts.q;
  }
  return true;
}

std::string key_of(const RawState& s) {
  return std::string(reinterpret_cast<const char*>(s.data()),
                     s.size() * sizeof(int));
}

// Explicit transition graph over the states reachable from `start`.
struct Graph {
  int k = 0;
  std::vector<RawState> states;
  std::vector<int32_t> succ;  // states.size() * k entries, -1 = dead
};

// BFS closure; false if more than `cap` states appear.
bool build_reachable_graph(const std::vector<TaskShape>& shapes,
                           const RawState& start, long long cap, Graph& g) {
  g.k = static_cast<int>(shapes.size());
  std::unordered_map<std::string, int32_t> index;
  std::deque<int32_t> todo;
  g.states.push_back(start);
  index.emplace(key_of(start), 0);
  todo.push_back(0);
  RawState next;
  while (!todo.empty()) {
    int32_t s = todo.front();
    todo.pop_front();
    if (static_cast<long long>(g.succ.size()) < static_cast<long long>(s + 1) * g.k) {
      g.succ.resize(static_cast<size_t>(s + 1) * g.k, -1);
    }
    RawState cur = g.states[s];  // copy: states may reallocate below
    for (int j = 1; j <= g.k; ++j) {
      if (!step(shapes, cur, j, next)) continue;
      std::string key = key_of(next);
      auto [it, inserted] = index.emplace(key, static_cast<int32_t>(g.states.size()));
      if (inserted) {
        if (static_cast<long long>(g.states.size()) >= cap) return false;
        g.states.push_back(next);
        todo.push_back(it->second);
      }
      g.succ[static_cast<size_t>(s) * g.k + (j - 1)] = it->second;
    }
  }
  g.succ.resize(g.states.size() * static_cast<size_t>(g.k), -1);
  return true;
}

constexpr long long kInfinite = -1;

// For every state: the number of further days an alive run can last, or
// kInfinite for states that can stay alive forever (they reach a cycle).
// Greatest-fixpoint deletion: states whose successors are all dead/deleted
// are deleted with maxlen = 1 + max over their successors' final values.
std::vector<long long> alive_horizon(const Graph& g, long long* survivors_out) {
  const size_t n = g.states.size();
  const int k = g.k;
  std::vector<int32_t> outalive(n, 0);
  std::vector<size_t> rev_count(n + 1, 0);
  for (size_t s = 0; s < n; ++s) {
    for (int j = 0; j < k; ++j) {
      int32_t t = g.succ[s * k + j];
      if (t >= 0) {
        ++outalive[s];
        ++rev_count[static_cast<size_t>(t) + 1];
      }
    }
  }
  for (size_t i = 1; i <= n; ++i) rev_count[i] += rev_count[i - 1];
  std::vector<int32_t> rev(rev_count[n]);
  {
    std::vector<size_t> fill(rev_count.begin(), rev_count.end() - 1);
    for (size_t s = 0; s < n; ++s) {
      for (int j = 0; j < k; ++j) {
        int32_t t = g.succ[s * k + j];
        if (t >= 0) rev[fill[static_cast<size_t>(t)]++] = static_cast<int32_t>(s);
      }
    }
  }

  std::vector<long long> horizon(n, 0);
  std::vector<char> deleted(n, 0);
  std::deque<int32_t> queue;
  for (size_t s = 0; s < n; ++s) {
    if (outalive[s] == 0) {
      deleted[s] = 1;
      queue.push_back(static_cast<int32_t>(s));
    }
  }
  while (!queue.empty()) {
    int32_t s = queue.front();
    queue.pop_front();
    for (size_t e = rev_count[s]; e < rev_count[static_cast<size_t>(s) + 1]; ++e) {
      int32_t p = rev[e];
      if (deleted[p]) continue;
      horizon[p] = std::max(horizon[p], horizon[s] + 1);
      if (--outalive[p] == 0) {
        deleted[p] = 1;
        queue.push_back(p);
      }
    }
  }
  long long survivors = 0;
  for (size_t s = 0; s < n; ++s) {
    if (!deleted[s]) {
      horizon[s] = kInfinite;
      ++survivors;
    }
  }
  if (survivors_out) *survivors_out = survivors;
  return horizon;
}

// Depth-first candidate search over the reachable graph, tasks in ascending
// order, pruning states that cannot stay alive for the remaining days. Leaves
// are closed into a cycle and re-verified exactly.
bool dfs_graph(const Graph& g, const std::vector<long long>& horizon,
               const Instance& a, int n, int depth, int32_t state,
               std::vector<int>& prefix, std::optional<CyclicSchedule>& found) {
  if (depth == n) {
    CyclicSchedule cand(prefix);
    if (verify(cand, a).valid) {
      found = cand;
      return true;
    }
    return false;
  }
  const int remaining = n - depth - 1;
  for (int j = 1; j <= g.k; ++j) {
    int32_t t = g.succ[static_cast<size_t>(state) * g.k + (j - 1)];
    if (t < 0) continue;
    if (horizon[t] != kInfinite && horizon[t] < remaining) continue;
    prefix.push_back(j);
    if (dfs_graph(g, horizon, a, n, depth + 1, t, prefix, found)) return true;
    prefix.pop_back();
  }
  return false;
}

// Fallback without the precomputed graph (state space too large to close):
// death-pruned depth-first search on raw states.
bool dfs_raw(const std::vector<TaskShape>& shapes, const Instance& a, int n,
             int depth, const RawState& state, std::vector<int>& prefix,
             std::optional<CyclicSchedule>& found) {
  if (depth == n) {
    CyclicSchedule cand(prefix);
    if (verify(cand, a).valid) {
      found = cand;
      return true;
    }
    return false;
  }
  RawState next;
  for (int j = 1; j <= static_cast<int>(shapes.size()); ++j) {
    if (!step(shapes, state, j, next)) continue;
    prefix.push_back(j);
    if (dfs_raw(shapes, a, n, depth + 1, next, prefix, found)) return true;
    prefix.pop_back();
  }
  return false;
}

constexpr long long kReachableCap = 2'000'000;

}  // namespace

SearchOutcome find_schedule(const Instance& a, int max_period) {
  if (max_period < 1) fail(Errc::invalid_argument, "max_period must be >= 1");
  const std::vector<TaskShape> shapes = task_shapes(a);
  const RawState start = fiction_start(shapes);

  Graph g;
  bool closed = build_reachable_graph(shapes, start, kReachableCap, g);
  SearchOutcome out;
  out.kind = SearchOutcome::Kind::inconclusive;

  if (closed) {
    out.states_explored = static_cast<long long>(g.states.size());
    std::vector<long long> horizon = alive_horizon(g, nullptr);
    const long long start_horizon = horizon[0];
    for (int n = 1; n <= max_period; ++n) {
      if (start_horizon != kInfinite && start_horizon < n) break;
      std::vector<int> prefix;
      std::optional<CyclicSchedule> found;
      if (dfs_graph(g, horizon, a, n, 0, 0, prefix, found)) {
        out.kind = SearchOutcome::Kind::schedulable;
        out.certificate = std::move(found);
        return out;
      }
    }
    return out;
  }

  out.states_explored = kReachableCap;
  for (int n = 1; n <= max_period; ++n) {
    std::vector<int> prefix;
    std::optional<CyclicSchedule> found;
    if (dfs_raw(shapes, a, n, 0, start, prefix, found)) {
      out.kind = SearchOutcome::Kind::schedulable;
      out.certificate = std::move(found);
      return out;
    }
  }
  return out;
}

namespace {

// Per-task catalog of alive age vectors with precomputed transitions.
struct TaskPool {
  std::vector<std::vector<int>> vecs;  // ascending lexicographic
  std::vector<int32_t> skip_to;        // -1 = dead
  std::vector<int32_t> perform_to;
  std::vector<char> fresh;             // most recent age == 0
};

void enumerate_vecs(const TaskShape& ts, int l, int low, std::vector<int>& acc,
                    std::vector<std::vector<int>>& out, long long cap) {
  if (l == ts.q) {
    if (static_cast<long long>(out.size()) >= cap) {
      fail(Errc::state_cap_exceeded, "per-task state count exceeds the cap");
    }
    out.push_back(acc);
    return;
  }
  for (int d = low; d <= static_cast<int>(ts.bound[l]); ++d) {
    acc.push_back(d);
    enumerate_vecs(ts, l + 1, d + 1, acc, out, cap);
    acc.pop_back();
  }
}

TaskPool build_pool(const TaskShape& ts, long long cap) {
  TaskPool pool;
  {
    std::vector<int> acc;
    enumerate_vecs(ts, 0, 0, acc, pool.vecs, cap);
  }
  std::map<std::vector<int>, int32_t> index;
  for (size_t i = 0; i < pool.vecs.size(); ++i) {
    index.emplace(pool.vecs[i], static_cast<int32_t>(i));
  }
  pool.skip_to.resize(pool.vecs.size(), -1);
  pool.perform_to.resize(pool.vecs.size(), -1);
  pool.fresh.resize(pool.vecs.size(), 0);
  std::vector<int> tmp(ts.q);
  for (size_t i = 0; i < pool.vecs.size(); ++i) {
    const std::vector<int>& v = pool.vecs[i];
    pool.fresh[i] = v[0] == 0 ? 1 : 0;

    bool alive = true;
    for (int l = 0; l < ts.q; ++l) {
      tmp[l] = v[l] + 1;
      if (tmp[l] > ts.bound[l]) alive = false;
    }
    if (alive) {
      auto it = index.find(tmp);
      if (it == index.end()) fail(Errc::internal, "alive skip target not in pool");
      pool.skip_to[i] = it->second;
    }

    tmp[0] = 0;
    for (int l = 1; l < ts.q; ++l) tmp[l] = v[l - 1] + 1;
    alive = true;
    for (int l = 0; l < ts.q; ++l) {
      if (tmp[l] > ts.bound[l]) alive = false;
    }
    if (!alive) fail(Errc::internal, "performing a task killed an alive state");
    auto it = index.find(tmp);
    if (it == index.end()) fail(Errc::internal, "perform target not in pool");
    pool.perform_to[i] = it->second;
  }
  return pool;
}

}  // namespace

SearchOutcome prove_unschedulable(const Instance& a, long long state_cap) {
  if (state_cap < 1) fail(Errc::invalid_argument, "state_cap must be >= 1");
  constexpr long long kSupportedCap = 50'000'000;
  if (state_cap > kSupportedCap) {
    fail(Errc::state_cap_exceeded, "state_cap above the supported maximum " +
                                       std::to_string(kSupportedCap));
  }
  const std::vector<TaskShape> shapes = task_shapes(a);
  const int k = static_cast<int>(shapes.size());

  std::vector<TaskPool> pools;
  pools.reserve(k);
  long long estimate = 1;
  for (const TaskShape& ts : shapes) {
    pools.push_back(build_pool(ts, state_cap));
    estimate *= static_cast<long long>(pools.back().vecs.size());
    if (estimate > state_cap) {
      fail(Errc::state_cap_exceeded,
           "state estimate " + std::to_string(estimate) + " exceeds cap " +
               std::to_string(state_cap));
    }
  }

  // Mixed-radix codes over per-task vector ids.
  std::vector<long long> stride(k, 1);
  for (int i = 1; i < k; ++i) {
    stride[i] = stride[i - 1] * static_cast<long long>(pools[i - 1].vecs.size());
  }

  // All alive states with exactly one task performed "today" (age 0).
  std::vector<long long> codes;
  std::unordered_map<long long, int32_t> dense;
  {
    std::vector<int32_t> pick(k, 0);
    for (;;) {
      int freshes = 0;
      for (int i = 0; i < k; ++i) freshes += pools[i].fresh[pick[i]] ? 1 : 0;
      if (freshes == 1) {
        long long code = 0;
        for (int i = 0; i < k; ++i) code += stride[i] * pick[i];
        dense.emplace(code, static_cast<int32_t>(codes.size()));
        codes.push_back(code);
      }
      int i = 0;
      while (i < k) {
        if (++pick[i] < static_cast<int32_t>(pools[i].vecs.size())) break;
        pick[i] = 0;
        ++i;
      }
      if (i == k) break;
    }
  }

  Graph g;
  g.k = k;
  g.succ.assign(codes.size() * static_cast<size_t>(k), -1);
  {
    std::vector<int32_t> ids(k);
    for (size_t s = 0; s < codes.size(); ++s) {
      long long rem = codes[s];
      for (int i = 0; i < k; ++i) {
        ids[i] = static_cast<int32_t>(rem % static_cast<long long>(pools[i].vecs.size()));
        rem /= static_cast<long long>(pools[i].vecs.size());
      }
      for (int j = 0; j < k; ++j) {
        long long code = 0;
        bool alive = true;
        for (int i = 0; i < k && alive; ++i) {
          int32_t t = i == j ? pools[i].perform_to[ids[i]] : pools[i].skip_to[ids[i]];
          if (t < 0) {
            alive = false;
          } else {
            code += stride[i] * t;
          }
        }
        if (!alive) continue;
        auto it = dense.find(code);
        if (it == dense.end()) fail(Errc::internal, "alive successor not enumerated");
        g.succ[s * static_cast<size_t>(k) + j] = it->second;
      }
    }
  }
  g.states.resize(codes.size());  // contents unused here; sizes drive the analysis

  long long survivors = 0;
  std::vector<long long> horizon = alive_horizon(g, &survivors);

  SearchOutcome out;
  out.states_explored = static_cast<long long>(codes.size());
  if (survivors == 0) {
    out.kind = SearchOutcome::Kind::unschedulable;
    return out;
  }

  // A surviving state always has a surviving successor; walking the smallest
  // one must loop, and the loop's actions are a valid cyclic schedule.
  int32_t start = -1;
  for (size_t s = 0; s < codes.size() && start < 0; ++s) {
    if (horizon[s] == kInfinite) start = static_cast<int32_t>(s);
  }
  std::unordered_map<int32_t, int> seen_at;
  std::vector<int> actions;
  int32_t cur = start;
  for (;;) {
    auto it = seen_at.find(cur);
    if (it != seen_at.end()) {
      std::vector<int> cycle(actions.begin() + it->second, actions.end());
      CyclicSchedule cert{std::move(cycle)};
      if (!verify(cert, a).valid) {
        fail(Errc::internal, "extracted cycle failed verification");
      }
      out.kind = SearchOutcome::Kind::schedulable;
      out.certificate = std::move(cert);
      return out;
    }
    seen_at.emplace(cur, static_cast<int>(actions.size()));
    int next_j = -1;
    int32_t next_s = -1;
    for (int j = 0; j < k && next_j < 0; ++j) {
      int32_t t = g.succ[static_cast<size_t>(cur) * k + j];
      if (t >= 0 && horizon[t] == kInfinite) {
        next_j = j;
        next_s = t;
      }
    }
    if (next_j < 0) fail(Errc::internal, "surviving state lost its successors");
    actions.push_back(next_j + 1);
    cur = next_s;
  }
}

}  // namespace pinwheel
