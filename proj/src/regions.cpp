#include "pinwheel/regions.hpp"

#include <algorithm>
#include <optional>

#include "pinwheel/errors.hpp"

namespace pinwheel {

const char* rel_symbol(Rel r) {
  switch (r) {
    case Rel::lt: return "<";
    case Rel::le: return "<=";
    case Rel::gt: return ">";
    case Rel::ge: return ">=";
  }
  return "?";
}

bool satisfies(const LinearConstraint& c, const Point& p) {
  Rational lhs = c.cx * p.x + c.cy * p.y;
  switch (c.rel) {
    case Rel::lt: return lhs < c.c;
    case Rel::le: return lhs <= c.c;
    case Rel::gt: return lhs > c.c;
    case Rel::ge: return lhs >= c.c;
  }
  return false;
}

bool contains(const Region& r, const Point& p) {
  return std::all_of(r.constraints.begin(), r.constraints.end(),
                     [&](const LinearConstraint& c) { return satisfies(c, p); });
}

LinearConstraint negate(const LinearConstraint& c) {
  LinearConstraint out = c;
  switch (c.rel) {
    case Rel::lt: out.rel = Rel::ge; break;
    case Rel::le: out.rel = Rel::gt; break;
    case Rel::gt: out.rel = Rel::le; break;
    case Rel::ge: out.rel = Rel::lt; break;
  }
  return out;
}

namespace {

// Internal normal form: a*X + b*Y < c (strict) or <= c.
struct Upper {
  Rational a, b, c;
  bool strict;
};

// One-sided bound on a single variable, possibly infinite.
struct Bound {
  std::optional<Rational> value;  // nullopt = unbounded
  bool strict = false;
};

void tighten_upper(Bound& hi, const Rational& v, bool strict) {
  if (!hi.value || v < *hi.value) {
    hi.value = v;
    hi.strict = strict;
  } else if (v == *hi.value && strict) {
    hi.strict = true;
  }
}

void tighten_lower(Bound& lo, const Rational& v, bool strict) {
  if (!lo.value || v > *lo.value) {
    lo.value = v;
    lo.strict = strict;
  } else if (v == *lo.value && strict) {
    lo.strict = true;
  }
}

// Is the interval (lo, hi) nonempty, honoring open endpoints?
bool interval_feasible(const Bound& lo, const Bound& hi) {
  if (!lo.value || !hi.value) return true;
  if (*lo.value < *hi.value) return true;
  if (*lo.value > *hi.value) return false;
  return !lo.strict && !hi.strict;
}

// Deterministic pick inside a nonempty interval: the midpoint when both ends
// are finite, the closed endpoint (or endpoint +- 1 if open) otherwise.
Rational pick_inside(const Bound& lo, const Bound& hi) {
  if (lo.value && hi.value) {
    if (*lo.value == *hi.value) return *lo.value;
    return (*lo.value + *hi.value) / Rational(2);
  }
  if (lo.value) return lo.strict ? *lo.value + Rational(1) : *lo.value;
  if (hi.value) return hi.strict ? *hi.value - Rational(1) : *hi.value;
  return Rational(0);
}

}  // namespace

Feasibility fm_feasible(const std::vector<LinearConstraint>& cs) {
  // Normalize everything to a*X + b*Y (<|<=) c.
  std::vector<Upper> ups;
  ups.reserve(cs.size());
  for (const LinearConstraint& c : cs) {
    switch (c.rel) {
      case Rel::le: ups.push_back({c.cx, c.cy, c.c, false}); break;
      case Rel::lt: ups.push_back({c.cx, c.cy, c.c, true}); break;
      case Rel::ge: ups.push_back({-c.cx, -c.cy, -c.c, false}); break;
      case Rel::gt: ups.push_back({-c.cx, -c.cy, -c.c, true}); break;
    }
  }

  // Split by the sign of the Y coefficient: b > 0 gives Y <= (c - aX)/b,
  // b < 0 gives Y >= (c - aX)/b, b = 0 is already an X-only constraint.
  struct YBound {
    Rational slope, offset;  // Y (rel) offset + slope*X
    bool strict;
  };
  std::vector<YBound> y_uppers, y_lowers;
  std::vector<Upper> x_only;
  for (const Upper& u : ups) {
    if (u.b.is_zero()) {
      x_only.push_back(u);
    } else {
      YBound yb{-u.a / u.b, u.c / u.b, u.strict};
      (u.b > Rational(0) ? y_uppers : y_lowers).push_back(yb);
    }
  }

  // Eliminate Y: every (lower, upper) pair must satisfy lower (rel) upper,
  // strict iff either side is. offset_l + slope_l*X < offset_u + slope_u*X
  // becomes (slope_l - slope_u)*X < offset_u - offset_l.
  for (const YBound& lo : y_lowers) {
    for (const YBound& up : y_uppers) {
      x_only.push_back(Upper{lo.slope - up.slope, Rational(0),
                             up.offset - lo.offset, lo.strict || up.strict});
    }
  }

  // Reduce the X-only system to one interval.
  Bound xlo, xhi;
  for (const Upper& u : x_only) {
    if (u.a.is_zero()) {
      // 0 (<|<=) c
      if (u.c < Rational(0) || (u.strict && u.c.is_zero())) return {false, std::nullopt};
      continue;
    }
    Rational v = u.c / u.a;
    if (u.a > Rational(0)) {
      tighten_upper(xhi, v, u.strict);
    } else {
      tighten_lower(xlo, v, u.strict);
    }
  }
  if (!interval_feasible(xlo, xhi)) return {false, std::nullopt};
  const Rational x = pick_inside(xlo, xhi);

  // Back-substitute for Y.
  Bound ylo, yhi;
  for (const YBound& up : y_uppers) tighten_upper(yhi, up.offset + up.slope * x, up.strict);
  for (const YBound& lo : y_lowers) tighten_lower(ylo, lo.offset + lo.slope * x, lo.strict);
  if (!interval_feasible(ylo, yhi)) {
    // Elimination is exact over Q, so a feasible X never leaves Y empty.
    fail(Errc::internal, "elimination produced an empty back-substitution interval");
  }
  const Rational y = pick_inside(ylo, yhi);

  Point w{x, y};
  for (const LinearConstraint& c : cs) {
    if (!satisfies(c, w)) fail(Errc::internal, "witness fails a source constraint");
  }
  return {true, w};
}

CoverResult cover_check(const Region& target, const std::vector<Region>& covers) {
  // A point escapes the union iff it violates at least one constraint of
  // every cover. Enumerate all such choices (DNF of the negations).
  std::vector<size_t> pick(covers.size(), 0);
  for (;;) {
    std::vector<LinearConstraint> cs = target.constraints;
    for (size_t i = 0; i < covers.size(); ++i) {
      cs.push_back(negate(covers[i].constraints[pick[i]]));
    }
    Feasibility f = fm_feasible(cs);
    if (f.feasible) {
      const Point& w = *f.witness;
      if (!contains(target, w)) fail(Errc::internal, "cover witness left the target");
      for (const Region& cover : covers) {
        if (contains(cover, w)) fail(Errc::internal, "cover witness inside a cover");
      }
      return {false, w};
    }
    // Next selection (odometer).
    size_t i = 0;
    while (i < covers.size()) {
      if (++pick[i] < covers[i].constraints.size()) break;
      pick[i] = 0;
      ++i;
    }
    if (i == covers.size()) break;
  }
  return {true, std::nullopt};
}

namespace {

LinearConstraint lc(long long cx, long long cy, Rel rel, const Rational& c) {
  return LinearConstraint{Rational(cx), Rational(cy), c, rel};
}

std::vector<Region> make_catalog() {
  const Rational five_sixths = rat(5, 6);
  std::vector<Region> regions;

  // J: the working region for three distinct periods, X = 1/a1, Y = 1/a2.
  Region J{"J",
           {lc(1, -1, Rel::gt, Rational(0)),        // X > Y
            lc(1, 2, Rel::gt, five_sixths),          // X + 2Y > 5/6
            lc(1, 1, Rel::lt, five_sixths)}};        // X + Y < 5/6

  Region M1{"M1",
            {lc(1, -1, Rel::gt, Rational(0)),
             lc(1, 2, Rel::gt, five_sixths),
             lc(1, 2, Rel::le, Rational(1)),
             lc(1, 1, Rel::lt, five_sixths)}};

  Region M2{"M2",
            {lc(1, 0, Rel::le, rat(2, 3)),
             lc(0, 1, Rel::lt, rat(1, 5)),
             lc(1, 1, Rel::ge, five_sixths - rat(1, 9)),
             lc(1, 1, Rel::lt, five_sixths)}};

  Region M3{"M3",
            {lc(1, 0, Rel::le, rat(7, 11)),
             lc(0, 1, Rel::lt, rat(1, 4)),
             lc(1, 1, Rel::ge, five_sixths - rat(1, 11)),
             lc(1, 1, Rel::lt, five_sixths)}};

  Region M4{"M4",
            {lc(1, 0, Rel::le, rat(7, 12)),
             lc(0, 1, Rel::lt, rat(1, 3)),
             lc(1, 1, Rel::ge, five_sixths - rat(1, 12)),
             lc(1, 1, Rel::lt, five_sixths)}};

  Region M5{"M5",
            {lc(1, 0, Rel::lt, rat(1, 2)),
             lc(0, 1, Rel::le, rat(1, 3)),
             lc(1, 1, Rel::ge, five_sixths - rat(1, 6)),
             lc(1, 1, Rel::lt, five_sixths)}};

  Region M6{"M6",
            {lc(1, 0, Rel::lt, rat(1, 2)),
             lc(0, 1, Rel::le, rat(5, 12)),
             lc(1, 1, Rel::ge, five_sixths - rat(1, 12)),
             lc(1, 1, Rel::lt, five_sixths)}};

  Region M7{"M7",
            {lc(1, 0, Rel::le, rat(5, 12)),
             lc(0, 1, Rel::le, rat(5, 12)),
             lc(1, 1, Rel::ge, five_sixths - rat(1, 6)),
             lc(1, 1, Rel::lt, five_sixths)}};

  regions.push_back(std::move(J));
  regions.push_back(std::move(M1));
  regions.push_back(std::move(M2));
  regions.push_back(std::move(M3));
  regions.push_back(std::move(M4));
  regions.push_back(std::move(M5));
  regions.push_back(std::move(M6));
  regions.push_back(std::move(M7));
  return regions;
}

const std::vector<Region>& catalog() {
  static const std::vector<Region> c = make_catalog();
  return c;
}

}  // namespace

const Region& region_J() { return catalog()[0]; }

const std::vector<Region>& regions_M() {
  static const std::vector<Region> ms(catalog().begin() + 1, catalog().end());
  return ms;
}

const Region* region_by_name(const std::string& name) {
  for (const Region& r : catalog()) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

std::vector<Point> region_vertices(const Region& r) {
  // Vertices of the closure: pairwise boundary-line intersections that satisfy
  // every constraint with its relation relaxed to non-strict.
  const auto& cs = r.constraints;
  auto relaxed_ok = [&](const Point& p) {
    for (const LinearConstraint& c : cs) {
      LinearConstraint soft = c;
      if (soft.rel == Rel::lt) soft.rel = Rel::le;
      if (soft.rel == Rel::gt) soft.rel = Rel::ge;
      if (!satisfies(soft, p)) return false;
    }
    return true;
  };

  std::vector<Point> verts;
  for (size_t i = 0; i < cs.size(); ++i) {
    for (size_t j = i + 1; j < cs.size(); ++j) {
      Rational det = cs[i].cx * cs[j].cy - cs[j].cx * cs[i].cy;
      if (det.is_zero()) continue;  // parallel boundaries
      Point p{(cs[i].c * cs[j].cy - cs[j].c * cs[i].cy) / det,
              (cs[i].cx * cs[j].c - cs[j].cx * cs[i].c) / det};
      if (!relaxed_ok(p)) continue;
      if (std::find(verts.begin(), verts.end(), p) == verts.end()) verts.push_back(p);
    }
  }
  if (verts.size() < 3) {
    std::sort(verts.begin(), verts.end(), [](const Point& a, const Point& b) {
      return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    return verts;
  }

  // Counterclockwise around the centroid, starting at the lexicographic min.
  Rational cx(0), cy(0);
  for (const Point& p : verts) {
    cx += p.x;
    cy += p.y;
  }
  cx /= Rational(static_cast<long long>(verts.size()));
  cy /= Rational(static_cast<long long>(verts.size()));

  auto half = [&](const Point& p) {
    // 0 = upper half (dy > 0, or dy = 0 and dx > 0), 1 = lower half.
    Rational dy = p.y - cy;
    if (dy > Rational(0)) return 0;
    if (dy < Rational(0)) return 1;
    return (p.x - cx) > Rational(0) ? 0 : 1;
  };
  std::sort(verts.begin(), verts.end(), [&](const Point& a, const Point& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Rational cross = (a.x - cx) * (b.y - cy) - (b.x - cx) * (a.y - cy);
    if (!cross.is_zero()) return cross > Rational(0);
    // Collinear with the centroid: nearer point first.
    Rational da = (a.x - cx) * (a.x - cx) + (a.y - cy) * (a.y - cy);
    Rational db = (b.x - cx) * (b.x - cx) + (b.y - cy) * (b.y - cy);
    return da < db;
  });
  size_t start = 0;
  for (size_t i = 1; i < verts.size(); ++i) {
    if (verts[i].x < verts[start].x ||
        (verts[i].x == verts[start].x && verts[i].y < verts[start].y)) {
      start = i;
    }
  }
  std::rotate(verts.begin(), verts.begin() + start, verts.end());
  return verts;
}

}  // namespace pinwheel
