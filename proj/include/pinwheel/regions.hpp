#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pinwheel/rational.hpp"

namespace pinwheel {

// Half-plane in frequency space: cx*X + cy*Y  rel  c.
enum class Rel { lt, le, gt, ge };

const char* rel_symbol(Rel r);

struct LinearConstraint {
  Rational cx, cy, c;
  Rel rel = Rel::le;
};

// Conjunction of half-planes (a convex region, possibly with open edges).
struct Region {
  std::string name;
  std::vector<LinearConstraint> constraints;
};

struct Point {
  Rational x, y;
  friend bool operator==(const Point&, const Point&) = default;
};

bool satisfies(const LinearConstraint& c, const Point& p);
bool contains(const Region& r, const Point& p);

// The complement of a half-plane: flips the relation and its strictness.
LinearConstraint negate(const LinearConstraint& c);

struct Feasibility {
  bool feasible = false;
  std::optional<Point> witness;  // satisfies every constraint when feasible
};

// Exact Fourier-Motzkin elimination over Q^2 with strictness tracking:
// eliminate Y by pairing lower with upper bounds (a derived constraint is
// strict iff either parent is), reduce to an interval for X, then pick a
// witness by back-substitution (interval midpoint, or the closed endpoint
// for degenerate/one-sided intervals). Sound and complete over Q.
Feasibility fm_feasible(const std::vector<LinearConstraint>& cs);

struct CoverResult {
  bool covered = false;
  std::optional<Point> witness;  // in target, outside every cover
};

// Decides target ⊆ union(covers) by expanding the complement of the union
// into a disjunction of conjunctions (one negated constraint per cover) and
// running fm_feasible on each conjunction together with the target. The
// first feasible selection, in catalog order, supplies the witness.
CoverResult cover_check(const Region& target, const std::vector<Region>& covers);

// The frequency-space catalog: J is the open working region for three
// distinct periods, M1..M7 the construction cases that cover it.
const Region& region_J();
const std::vector<Region>& regions_M();  // M1..M7, in dispatch order
const Region* region_by_name(const std::string& name);  // "J", "M1".."M7"

// Vertices of the region's closure, ordered counterclockwise starting from
// the lexicographically smallest vertex. For plotting and dumps.
std::vector<Point> region_vertices(const Region& r);

}  // namespace pinwheel
