#include "fcech/intervals.hpp"

#include <algorithm>

#include "fcech/errors.hpp"

namespace fcech {

namespace {

// Does a begin at or before b, counting a closed endpoint as earlier than an
// open one at the same coordinate?
bool starts_at_or_before(const Interval& a, const Interval& b) {
  if (a.lo != b.lo) return a.lo < b.lo;
  return a.lo_closed || !b.lo_closed;
}

bool ends_at_or_after(const Interval& a, const Interval& b) {
  if (a.hi != b.hi) return a.hi > b.hi;
  return a.hi_closed || !b.hi_closed;
}

// With a starting at or before b: is a ∪ b a single interval?
bool joins(const Interval& a, const Interval& b) {
  if (a.hi != b.lo) return a.hi > b.lo;
  return a.hi_closed || b.lo_closed;
}

}  // namespace

std::optional<Interval> Interval::make(Rat lo, bool lo_closed, Rat hi, bool hi_closed) {
  if (lo > hi) return std::nullopt;
  if (lo == hi && !(lo_closed && hi_closed)) return std::nullopt;
  return Interval{std::move(lo), std::move(hi), lo_closed, hi_closed};
}

Interval Interval::closed(Rat lo, Rat hi) {
  auto r = make(std::move(lo), true, std::move(hi), true);
  if (!r) throw Error("empty interval");
  return *r;
}

Interval Interval::open(Rat lo, Rat hi) {
  auto r = make(std::move(lo), false, std::move(hi), false);
  if (!r) throw Error("empty interval");
  return *r;
}

Interval Interval::point(Rat x) { return Interval{x, x, true, true}; }

bool Interval::contains(const Rat& x) const {
  if (x < lo || x > hi) return false;
  if (x == lo && !lo_closed) return false;
  if (x == hi && !hi_closed) return false;
  return true;
}

bool Interval::contains(const Interval& other) const {
  return starts_at_or_before(*this, other) && ends_at_or_after(*this, other);
}

Interval Interval::affine(const Rat& scale, const Rat& shift) const {
  if (scale == 0) throw Error("affine image of an interval needs a nonzero scale");
  Rat a = scale * lo + shift;
  Rat b = scale * hi + shift;
  if (scale > 0) return Interval{a, b, lo_closed, hi_closed};
  return Interval{b, a, hi_closed, lo_closed};
}

Rat Interval::sample() const { return is_point() ? lo : Rat((lo + hi) / 2); }

std::string Interval::to_string() const {
  if (is_point()) return "{" + fcech::to_string(lo) + "}";
  std::string s = lo_closed ? "[" : "(";
  s += fcech::to_string(lo) + ", " + fcech::to_string(hi);
  s += hi_closed ? "]" : ")";
  return s;
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  const Interval& late = starts_at_or_before(a, b) ? b : a;
  Rat lo = late.lo;
  bool lo_closed = (a.lo == b.lo) ? (a.lo_closed && b.lo_closed) : late.lo_closed;
  const Interval& first_end = ends_at_or_after(a, b) ? b : a;
  Rat hi = first_end.hi;
  bool hi_closed = (a.hi == b.hi) ? (a.hi_closed && b.hi_closed) : first_end.hi_closed;
  return Interval::make(std::move(lo), lo_closed, std::move(hi), hi_closed);
}

IntervalSet::IntervalSet(std::vector<Interval> parts) : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });
  std::vector<Interval> merged;
  for (Interval& p : parts_) {
    if (!merged.empty() && joins(merged.back(), p)) {
      Interval& last = merged.back();
      if (!ends_at_or_after(last, p)) {
        last.hi = p.hi;
        last.hi_closed = p.hi_closed;
      }
    } else {
      merged.push_back(std::move(p));
    }
  }
  parts_ = std::move(merged);
}

IntervalSet IntervalSet::single(Interval part) { return IntervalSet(std::vector<Interval>{std::move(part)}); }

IntervalSet IntervalSet::point(Rat x) { return single(Interval::point(std::move(x))); }

bool IntervalSet::contains(const Rat& x) const {
  for (const Interval& p : parts_)
    if (p.contains(x)) return true;
  return false;
}

bool IntervalSet::subset_of(const IntervalSet& other) const {
  // Normalized parts are separated by genuinely missing points, so a
  // connected subset must fit inside a single part of `other`.
  for (const Interval& p : parts_) {
    bool covered = false;
    for (const Interval& q : other.parts_) {
      if (q.contains(p)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<Interval> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return IntervalSet(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<Interval> out;
  for (const Interval& p : parts_)
    for (const Interval& q : other.parts_)
      if (auto r = fcech::intersect(p, q)) out.push_back(*r);
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::closure() const {
  std::vector<Interval> out;
  out.reserve(parts_.size());
  for (const Interval& p : parts_) out.push_back(p.closure());
  return IntervalSet(std::move(out));
}

bool IntervalSet::is_closed() const { return closure() == *this; }

IntervalSet IntervalSet::affine(const Rat& scale, const Rat& shift) const {
  std::vector<Interval> out;
  out.reserve(parts_.size());
  for (const Interval& p : parts_) out.push_back(p.affine(scale, shift));
  return IntervalSet(std::move(out));
}

std::vector<Rat> IntervalSet::breakpoints() const {
  std::vector<Rat> pts;
  for (const Interval& p : parts_) {
    pts.push_back(p.lo);
    pts.push_back(p.hi);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::string IntervalSet::to_string() const {
  if (parts_.empty()) return "{}";
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += " u ";
    s += parts_[i].to_string();
  }
  return s;
}

namespace {

// Wraps one interval of R into [0,1), splitting at the seam; appends the
// pieces. Returns false when the interval already covers a full period.
// An open interval of length exactly 1 misses one residue and wraps normally.
bool wrap_into(const Interval& part, std::vector<Interval>& out) {
  Rat len(part.hi - part.lo);
  if (len > 1 || (len == 1 && (part.lo_closed || part.hi_closed))) return false;
  Rat shift(-floor_rat(part.lo));
  Rat lo = part.lo + shift;
  Rat hi = part.hi + shift;
  if (hi < 1) {
    out.push_back(Interval{lo, hi, part.lo_closed, part.hi_closed});
  } else if (hi == 1) {
    if (lo < 1) out.push_back(Interval{lo, Rat(1), part.lo_closed, false});
    if (part.hi_closed) out.push_back(Interval::point(Rat(0)));
  } else {
    out.push_back(Interval{lo, Rat(1), part.lo_closed, false});
    // The seam point 1 ~ 0 is interior here, so the second piece is closed
    // at 0.
    out.push_back(Interval{Rat(0), hi - 1, true, part.hi_closed});
  }
  return true;
}

}  // namespace

CircleSet CircleSet::empty() { return CircleSet(); }

CircleSet CircleSet::full() {
  return CircleSet(IntervalSet::single(Interval{Rat(0), Rat(1), true, false}));
}

CircleSet CircleSet::point(const Rat& x) {
  return CircleSet(IntervalSet::point(x - Rat(floor_rat(x))));
}

CircleSet CircleSet::arc(const Rat& lo, bool lo_closed, const Rat& hi, bool hi_closed) {
  if (lo > hi) throw Error("arc endpoints out of order");
  auto part = Interval::make(lo, lo_closed, hi, hi_closed);
  if (!part) return empty();
  return from_line(IntervalSet::single(*part));
}

CircleSet CircleSet::from_line(const IntervalSet& s) {
  std::vector<Interval> wrapped;
  for (const Interval& p : s.parts())
    if (!wrap_into(p, wrapped)) return full();
  return CircleSet(IntervalSet(std::move(wrapped)));
}

bool CircleSet::is_full() const { return *this == full(); }

bool CircleSet::contains(const Rat& x) const {
  return line_.contains(x - Rat(floor_rat(x)));
}

CircleSet CircleSet::unite(const CircleSet& other) const {
  return CircleSet(line_.unite(other.line_));
}

CircleSet CircleSet::intersect(const CircleSet& other) const {
  return CircleSet(line_.intersect(other.line_));
}

CircleSet CircleSet::closure() const { return from_line(line_.closure()); }

bool CircleSet::is_closed() const { return closure() == *this; }

CircleSet CircleSet::affine(const Int& scale, const Rat& shift) const {
  if (is_empty()) return empty();
  if (scale == 0) return point(shift);
  CircleSet out;
  for (const Interval& p : line_.parts()) {
    Interval image = p.affine(Rat(scale), shift);
    out = out.unite(from_line(IntervalSet::single(image)));
    if (out.is_full()) return out;
  }
  return out;
}

std::string CircleSet::to_string() const {
  return is_full() ? "S^1" : line_.to_string();
}

}  // namespace fcech
