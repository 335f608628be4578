#include "fcech/backends.hpp"

#include <algorithm>
#include <map>

#include "fcech/errors.hpp"

namespace fcech {

bool Box::contains(const std::vector<Rat>& point) const {
  if (point.size() != sides.size()) throw ShapeMismatch("point dimension mismatch");
  for (size_t i = 0; i < sides.size(); ++i)
    if (!sides[i].contains(point[i])) return false;
  return true;
}

Region Region::empty(int dim) { return Region{dim, {}}; }

Region Region::from_interval_set(const IntervalSet& s) {
  Region r{1, {}};
  for (const Interval& p : s.parts()) r.boxes.push_back(Box{{p}});
  return r;
}

Region Region::of(Interval side) { return Region{1, {Box{{std::move(side)}}}}; }

bool Region::contains(const std::vector<Rat>& point) const {
  for (const Box& b : boxes)
    if (b.contains(point)) return true;
  return false;
}

Region Region::intersect(const Region& other) const {
  if (dim != other.dim) throw ShapeMismatch("region dimension mismatch");
  Region out{dim, {}};
  for (const Box& a : boxes)
    for (const Box& b : other.boxes) {
      Box c;
      bool alive = true;
      for (int k = 0; k < dim; ++k) {
        auto side = fcech::intersect(a.sides[k], b.sides[k]);
        if (!side) {
          alive = false;
          break;
        }
        c.sides.push_back(*side);
      }
      if (alive) out.boxes.push_back(std::move(c));
    }
  return out;
}

Region Region::unite(const Region& other) const {
  if (dim != other.dim) throw ShapeMismatch("region dimension mismatch");
  Region out = *this;
  out.boxes.insert(out.boxes.end(), other.boxes.begin(), other.boxes.end());
  return out;
}

bool Region::subset_of(const Region& other) const {
  if (dim != other.dim) throw ShapeMismatch("region dimension mismatch");
  if (is_empty()) return true;
  // Breakpoints of both regions cut each axis into cells on which box
  // membership is constant; testing one representative per cell is exact.
  std::vector<std::vector<Rat>> pts(dim);
  auto collect = [&](const Region& r) {
    for (const Box& b : r.boxes)
      for (int k = 0; k < dim; ++k) {
        pts[k].push_back(b.sides[k].lo);
        pts[k].push_back(b.sides[k].hi);
      }
  };
  collect(*this);
  collect(other);
  for (auto& axis : pts) {
    std::sort(axis.begin(), axis.end());
    axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
  }
  for (const Box& b : boxes) {
    std::vector<std::vector<Rat>> cand(dim);
    for (int k = 0; k < dim; ++k) {
      for (const Rat& v : pts[k])
        if (b.sides[k].contains(v)) cand[k].push_back(v);
      for (size_t i = 0; i + 1 < pts[k].size(); ++i) {
        Rat mid((pts[k][i] + pts[k][i + 1]) / 2);
        if (b.sides[k].contains(mid)) cand[k].push_back(mid);
      }
      if (cand[k].empty()) throw Error("arrangement produced no cell inside a nonempty box");
    }
    std::vector<size_t> idx(dim, 0);
    while (true) {
      std::vector<Rat> point(dim);
      for (int k = 0; k < dim; ++k) point[k] = cand[k][idx[k]];
      if (!other.contains(point)) return false;
      int k = 0;
      while (k < dim && ++idx[k] == cand[k].size()) idx[k++] = 0;
      if (k == dim) break;
    }
  }
  return true;
}

bool Region::same_set(const Region& other) const {
  return subset_of(other) && other.subset_of(*this);
}

Region Region::closure() const {
  Region out{dim, {}};
  for (const Box& b : boxes) {
    Box c;
    for (const Interval& side : b.sides) c.sides.push_back(side.closure());
    out.boxes.push_back(std::move(c));
  }
  return out;
}

bool Region::is_closed() const { return closure().subset_of(*this); }

IntervalSet Region::as_interval_set() const {
  if (dim != 1) throw ShapeMismatch("interval view needs a one-dimensional region");
  std::vector<Interval> parts;
  parts.reserve(boxes.size());
  for (const Box& b : boxes) parts.push_back(b.sides[0]);
  return IntervalSet(std::move(parts));
}

std::string Region::to_string() const {
  if (dim == 1) return as_interval_set().to_string();
  if (boxes.empty()) return "{}";
  std::string s;
  for (size_t i = 0; i < boxes.size(); ++i) {
    if (i) s += " u ";
    for (int k = 0; k < dim; ++k) {
      if (k) s += "x";
      s += boxes[i].sides[k].to_string();
    }
  }
  return s;
}

BoxSpace BoxSpace::make(Region space, Region sub, Region sub_b) {
  if (!sub.subset_of(space)) throw Error("subspace A escapes the space");
  if (!sub_b.subset_of(sub)) throw Error("subspace B escapes A");
  return BoxSpace{std::move(space), std::move(sub), std::move(sub_b)};
}

BoxSpace BoxSpace::make(Region space, Region sub) {
  int dim = space.dim;
  return make(std::move(space), std::move(sub), Region::empty(dim));
}

BoxSpace BoxSpace::whole(Region space) {
  int dim = space.dim;
  return BoxSpace{std::move(space), Region::empty(dim), Region::empty(dim)};
}

BoxSpace BoxSpace::traced() const {
  return BoxSpace{sub, sub_b, Region::empty(space.dim)};
}

CircleSpace CircleSpace::make(CircleSet space, CircleSet sub, CircleSet sub_b) {
  if (!sub.subset_of(space)) throw Error("subspace A escapes the space");
  if (!sub_b.subset_of(sub)) throw Error("subspace B escapes A");
  return CircleSpace{std::move(space), std::move(sub), std::move(sub_b)};
}

CircleSpace CircleSpace::make(CircleSet space, CircleSet sub) {
  return make(std::move(space), std::move(sub), CircleSet::empty());
}

CircleSpace CircleSpace::whole(CircleSet space) {
  return CircleSpace{std::move(space), CircleSet::empty(), CircleSet::empty()};
}

CircleSpace CircleSpace::traced() const { return CircleSpace{sub, sub_b, CircleSet::empty()}; }

namespace {

void require_point_subset(const std::vector<int>& s, int count, const std::string& what) {
  int prev = -1;
  for (int p : s) {
    if (p <= prev) throw Error(what + " must be sorted and strictly increasing");
    if (p < 0 || p >= count) throw Error(what + " names a point outside the space");
    prev = p;
  }
}

}  // namespace

FiniteSpace FiniteSpace::make(int point_count, std::vector<int> sub, std::vector<int> sub_b) {
  if (point_count < 0) throw Error("negative point count");
  require_point_subset(sub, point_count, "subspace A");
  require_point_subset(sub_b, point_count, "subspace B");
  if (!std::includes(sub.begin(), sub.end(), sub_b.begin(), sub_b.end()))
    throw Error("subspace B escapes A");
  return FiniteSpace{point_count, std::move(sub), std::move(sub_b)};
}

FiniteSpace FiniteSpace::traced() const {
  std::vector<int> renamed;
  for (size_t k = 0; k < sub.size(); ++k)
    if (std::binary_search(sub_b.begin(), sub_b.end(), sub[k])) renamed.push_back(static_cast<int>(k));
  return FiniteSpace{static_cast<int>(sub.size()), std::move(renamed), {}};
}

namespace {

class BoxOracle final : public SpaceOracle {
 public:
  BoxOracle(BoxSpace space, std::vector<Region> elements)
      : space_(std::move(space)), elements_(std::move(elements)) {
    Region all = Region::empty(space_.space.dim);
    for (size_t i = 0; i < elements_.size(); ++i) {
      if (elements_[i].dim != space_.space.dim)
        throw ShapeMismatch("element dimension mismatch");
      if (!elements_[i].subset_of(space_.space))
        throw NotACover("box element " + std::to_string(i) + " escapes the space");
      all = all.unite(elements_[i]);
    }
    if (!space_.space.subset_of(all)) throw NotACover("box elements do not cover the space");
  }

  int element_count() const override { return static_cast<int>(elements_.size()); }

  bool nonempty(const std::vector<int>& s) const override { return !carrier(s).is_empty(); }

  bool meets_sub(const std::vector<int>& s) const override {
    return !carrier(s).intersect(space_.sub).is_empty();
  }

  std::string describe() const override {
    return "boxes in Q^" + std::to_string(space_.space.dim) + ", " +
           std::to_string(elements_.size()) + " elements";
  }

  bool supports_containment() const override { return true; }

  bool element_contained(int i, const SpaceOracle& coarse, int j) const override {
    const auto* other = dynamic_cast<const BoxOracle*>(&coarse);
    if (!other) throw UnsupportedMap("containment across different backend families");
    return element(i).subset_of(other->element(j));
  }

  bool same_space(const SpaceOracle& other) const override {
    const auto* o = dynamic_cast<const BoxOracle*>(&other);
    if (!o) return false;
    return space_.space.same_set(o->space_.space) && space_.sub.same_set(o->space_.sub) &&
           space_.sub_b.same_set(o->space_.sub_b);
  }

  std::shared_ptr<const SpaceOracle> trace_oracle(const std::vector<int>& retained) const override {
    std::vector<Region> traced;
    traced.reserve(retained.size());
    for (int i : retained) traced.push_back(element(i).intersect(space_.sub));
    return std::make_shared<BoxOracle>(space_.traced(), std::move(traced));
  }

  const Region& element(int i) const {
    if (i < 0 || i >= element_count()) throw Error("element index out of range");
    return elements_[static_cast<size_t>(i)];
  }

  const BoxSpace& space() const { return space_; }

 private:
  Region carrier(const std::vector<int>& s) const {
    Region r = space_.space;
    for (int v : s) r = r.intersect(element(v));
    return r;
  }

  BoxSpace space_;
  std::vector<Region> elements_;
};

class CircleOracle final : public SpaceOracle {
 public:
  CircleOracle(CircleSpace space, std::vector<CircleSet> elements)
      : space_(std::move(space)), elements_(std::move(elements)) {
    CircleSet all = CircleSet::empty();
    for (size_t i = 0; i < elements_.size(); ++i) {
      if (!elements_[i].subset_of(space_.space))
        throw NotACover("arc element " + std::to_string(i) + " escapes the space");
      all = all.unite(elements_[i]);
    }
    if (!space_.space.subset_of(all)) throw NotACover("arc elements do not cover the space");
  }

  int element_count() const override { return static_cast<int>(elements_.size()); }

  bool nonempty(const std::vector<int>& s) const override { return !carrier(s).is_empty(); }

  bool meets_sub(const std::vector<int>& s) const override {
    return !carrier(s).intersect(space_.sub).is_empty();
  }

  std::string describe() const override {
    return "circle arcs, " + std::to_string(elements_.size()) + " elements";
  }

  bool supports_containment() const override { return true; }

  bool element_contained(int i, const SpaceOracle& coarse, int j) const override {
    const auto* other = dynamic_cast<const CircleOracle*>(&coarse);
    if (!other) throw UnsupportedMap("containment across different backend families");
    return element(i).subset_of(other->element(j));
  }

  bool same_space(const SpaceOracle& other) const override {
    const auto* o = dynamic_cast<const CircleOracle*>(&other);
    if (!o) return false;
    return space_.space == o->space_.space && space_.sub == o->space_.sub &&
           space_.sub_b == o->space_.sub_b;
  }

  std::shared_ptr<const SpaceOracle> trace_oracle(const std::vector<int>& retained) const override {
    std::vector<CircleSet> traced;
    traced.reserve(retained.size());
    for (int i : retained) traced.push_back(element(i).intersect(space_.sub));
    return std::make_shared<CircleOracle>(space_.traced(), std::move(traced));
  }

  const CircleSet& element(int i) const {
    if (i < 0 || i >= element_count()) throw Error("element index out of range");
    return elements_[static_cast<size_t>(i)];
  }

  const CircleSpace& space() const { return space_; }

 private:
  CircleSet carrier(const std::vector<int>& s) const {
    CircleSet r = space_.space;
    for (int v : s) r = r.intersect(element(v));
    return r;
  }

  CircleSpace space_;
  std::vector<CircleSet> elements_;
};

class FiniteOracle final : public SpaceOracle {
 public:
  FiniteOracle(FiniteSpace space, std::vector<std::vector<int>> elements)
      : space_(std::move(space)), elements_(std::move(elements)) {
    std::vector<bool> covered(static_cast<size_t>(space_.point_count), false);
    for (size_t i = 0; i < elements_.size(); ++i) {
      require_point_subset(elements_[i], space_.point_count,
                           "element " + std::to_string(i));
      for (int p : elements_[i]) covered[static_cast<size_t>(p)] = true;
    }
    for (int p = 0; p < space_.point_count; ++p)
      if (!covered[static_cast<size_t>(p)])
        throw NotACover("finite elements miss point " + std::to_string(p));
  }

  int element_count() const override { return static_cast<int>(elements_.size()); }

  bool nonempty(const std::vector<int>& s) const override { return !carrier(s).empty(); }

  bool meets_sub(const std::vector<int>& s) const override {
    std::vector<int> c = carrier(s);
    std::vector<int> hit;
    std::set_intersection(c.begin(), c.end(), space_.sub.begin(), space_.sub.end(),
                          std::back_inserter(hit));
    return !hit.empty();
  }

  std::string describe() const override {
    return "finite space on " + std::to_string(space_.point_count) + " points, " +
           std::to_string(elements_.size()) + " elements";
  }

  bool supports_containment() const override { return true; }

  bool element_contained(int i, const SpaceOracle& coarse, int j) const override {
    const auto* other = dynamic_cast<const FiniteOracle*>(&coarse);
    if (!other) throw UnsupportedMap("containment across different backend families");
    const auto& a = element(i);
    const auto& b = other->element(j);
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  }

  bool same_space(const SpaceOracle& other) const override {
    const auto* o = dynamic_cast<const FiniteOracle*>(&other);
    if (!o) return false;
    return space_.point_count == o->space_.point_count && space_.sub == o->space_.sub &&
           space_.sub_b == o->space_.sub_b;
  }

  std::shared_ptr<const SpaceOracle> trace_oracle(const std::vector<int>& retained) const override {
    std::map<int, int> position;
    for (size_t k = 0; k < space_.sub.size(); ++k) position[space_.sub[k]] = static_cast<int>(k);
    std::vector<std::vector<int>> traced;
    traced.reserve(retained.size());
    for (int i : retained) {
      std::vector<int> e;
      for (int p : element(i)) {
        auto it = position.find(p);
        if (it != position.end()) e.push_back(it->second);
      }
      traced.push_back(std::move(e));
    }
    return std::make_shared<FiniteOracle>(space_.traced(), std::move(traced));
  }

  const std::vector<int>& element(int i) const {
    if (i < 0 || i >= element_count()) throw Error("element index out of range");
    return elements_[static_cast<size_t>(i)];
  }

 private:
  std::vector<int> carrier(const std::vector<int>& s) const {
    std::vector<int> r(static_cast<size_t>(space_.point_count));
    for (int p = 0; p < space_.point_count; ++p) r[static_cast<size_t>(p)] = p;
    for (int v : s) {
      std::vector<int> next;
      const auto& e = element(v);
      std::set_intersection(r.begin(), r.end(), e.begin(), e.end(), std::back_inserter(next));
      r = std::move(next);
      if (r.empty()) break;
    }
    return r;
  }

  FiniteSpace space_;
  std::vector<std::vector<int>> elements_;
};

}  // namespace

std::shared_ptr<const SpaceOracle> box_oracle(BoxSpace space, std::vector<Region> elements) {
  return std::make_shared<BoxOracle>(std::move(space), std::move(elements));
}

std::shared_ptr<const SpaceOracle> circle_oracle(CircleSpace space, std::vector<CircleSet> elements) {
  return std::make_shared<CircleOracle>(std::move(space), std::move(elements));
}

std::shared_ptr<const SpaceOracle> finite_oracle(FiniteSpace space,
                                                 std::vector<std::vector<int>> elements) {
  return std::make_shared<FiniteOracle>(std::move(space), std::move(elements));
}

Cover box_cover(std::string name, BoxSpace space, std::vector<Region> elements) {
  return Cover{std::move(name), box_oracle(std::move(space), std::move(elements))};
}

Cover circle_cover(std::string name, CircleSpace space, std::vector<CircleSet> elements) {
  return Cover{std::move(name), circle_oracle(std::move(space), std::move(elements))};
}

Cover finite_cover(std::string name, FiniteSpace space, std::vector<std::vector<int>> elements) {
  return Cover{std::move(name), finite_oracle(std::move(space), std::move(elements))};
}

namespace {

bool same_box_pair(const BoxSpace& a, const BoxSpace& b) {
  return a.space.same_set(b.space) && a.sub.same_set(b.sub) && a.sub_b.same_set(b.sub_b);
}

bool same_circle_pair(const CircleSpace& a, const CircleSpace& b) {
  return a.space == b.space && a.sub == b.sub && a.sub_b == b.sub_b;
}

}  // namespace

AffineBoxMap::AffineBoxMap(BoxSpace source, BoxSpace target, Rat scale, Rat shift)
    : source_(std::move(source)),
      target_(std::move(target)),
      scale_(std::move(scale)),
      shift_(std::move(shift)) {
  if (source_.space.dim != 1 || target_.space.dim != 1)
    throw UnsupportedMap("affine box maps are one-dimensional");
  if (scale_ == 0) throw Error("affine map needs a nonzero scale");
  auto carried = [&](const Region& s, const Region& t) {
    return s.as_interval_set().affine(scale_, shift_).subset_of(t.as_interval_set());
  };
  if (!carried(source_.space, target_.space) || !carried(source_.sub, target_.sub) ||
      !carried(source_.sub_b, target_.sub_b))
    throw Error("affine map does not carry the source pair into the target pair");
}

std::string AffineBoxMap::describe() const {
  return "x -> " + fcech::to_string(scale_) + "*x + " + fcech::to_string(shift_);
}

TracedCover AffineBoxMap::pullback(const Cover& target_cover) const {
  const auto* tgt = dynamic_cast<const BoxOracle*>(target_cover.oracle.get());
  if (!tgt) throw UnsupportedMap("affine box pullback needs a box cover");
  if (!same_box_pair(tgt->space(), target_))
    throw Error("cover '" + target_cover.name + "' does not live on the map's target");
  IntervalSet domain = source_.space.as_interval_set();
  Rat inv(Rat(1) / scale_);
  Rat off(-shift_ / scale_);
  std::vector<Region> pulled;
  std::vector<int> retained;
  for (int v = 0; v < tgt->element_count(); ++v) {
    IntervalSet pre = tgt->element(v).as_interval_set().affine(inv, off).intersect(domain);
    if (pre.is_empty()) continue;
    retained.push_back(v);
    pulled.push_back(Region::from_interval_set(pre));
  }
  Cover cover{"pullback(" + target_cover.name + ")",
              std::make_shared<BoxOracle>(source_, std::move(pulled))};
  return TracedCover{std::move(cover), std::move(retained)};
}

std::unique_ptr<MapHandle> AffineBoxMap::restrict_to_sub() const {
  return std::make_unique<AffineBoxMap>(source_.traced(), target_.traced(), scale_, shift_);
}

CircleMap::CircleMap(CircleSpace source, CircleSpace target, Int degree, Rat rotation)
    : source_(std::move(source)),
      target_(std::move(target)),
      degree_(std::move(degree)),
      rotation_(std::move(rotation)) {
  if (degree_ == 0) throw Error("circle map needs a nonzero degree");
  auto carried = [&](const CircleSet& s, const CircleSet& t) {
    return s.affine(degree_, rotation_).subset_of(t);
  };
  if (!carried(source_.space, target_.space) || !carried(source_.sub, target_.sub) ||
      !carried(source_.sub_b, target_.sub_b))
    throw Error("circle map does not carry the source pair into the target pair");
}

std::string CircleMap::describe() const {
  return "z -> " + fcech::to_string(degree_) + "*z + " + fcech::to_string(rotation_);
}

// Solutions of degree*x + rotation = t + j are scanned over every integer j
// that can reach [0,1); wrapped representatives are sound because membership
// is invariant under x -> x + 1 for integer degree.
CircleSet circle_map_preimage(const Int& degree, const Rat& rotation, const CircleSet& s) {
  if (degree == 0) throw Error("circle preimage needs a nonzero degree");
  if (s.is_empty()) return CircleSet::empty();
  Int jlo = floor_rat(rotation + Rat(std::min(degree, Int(0)))) - 2;
  Int jhi = ceil_rat(rotation + Rat(std::max(degree, Int(0)))) + 2;
  Rat inv(Rat(1) / Rat(degree));
  CircleSet out;
  for (Int j = jlo; j <= jhi; ++j) {
    Rat off((Rat(j) - rotation) * inv);
    for (const Interval& part : s.line().parts())
      out = out.unite(CircleSet::from_line(IntervalSet::single(part.affine(inv, off))));
  }
  return out;
}

TracedCover CircleMap::pullback(const Cover& target_cover) const {
  const auto* tgt = dynamic_cast<const CircleOracle*>(target_cover.oracle.get());
  if (!tgt) throw UnsupportedMap("circle pullback needs an arc cover");
  if (!same_circle_pair(tgt->space(), target_))
    throw Error("cover '" + target_cover.name + "' does not live on the map's target");
  std::vector<CircleSet> pulled;
  std::vector<int> retained;
  for (int v = 0; v < tgt->element_count(); ++v) {
    CircleSet pre = circle_map_preimage(degree_, rotation_, tgt->element(v)).intersect(source_.space);
    if (pre.is_empty()) continue;
    retained.push_back(v);
    pulled.push_back(std::move(pre));
  }
  Cover cover{"pullback(" + target_cover.name + ")",
              std::make_shared<CircleOracle>(source_, std::move(pulled))};
  return TracedCover{std::move(cover), std::move(retained)};
}

std::unique_ptr<MapHandle> CircleMap::restrict_to_sub() const {
  return std::make_unique<CircleMap>(source_.traced(), target_.traced(), degree_, rotation_);
}

BoxToCircleMap::BoxToCircleMap(BoxSpace source, CircleSpace target, Rat scale, Rat shift)
    : source_(std::move(source)),
      target_(std::move(target)),
      scale_(std::move(scale)),
      shift_(std::move(shift)) {
  if (source_.space.dim != 1) throw UnsupportedMap("box-to-circle maps are one-dimensional");
  if (scale_ == 0) throw Error("box-to-circle map needs a nonzero scale");
  auto carried = [&](const Region& s, const CircleSet& t) {
    if (s.is_empty()) return true;
    return CircleSet::from_line(s.as_interval_set().affine(scale_, shift_)).subset_of(t);
  };
  if (!carried(source_.space, target_.space) || !carried(source_.sub, target_.sub) ||
      !carried(source_.sub_b, target_.sub_b))
    throw Error("box-to-circle map does not carry the source pair into the target pair");
}

std::string BoxToCircleMap::describe() const {
  return "x -> (" + fcech::to_string(scale_) + "*x + " + fcech::to_string(shift_) + ") mod 1";
}

TracedCover BoxToCircleMap::pullback(const Cover& target_cover) const {
  const auto* tgt = dynamic_cast<const CircleOracle*>(target_cover.oracle.get());
  if (!tgt) throw UnsupportedMap("box-to-circle pullback needs an arc cover");
  if (!same_circle_pair(tgt->space(), target_))
    throw Error("cover '" + target_cover.name + "' does not live on the map's target");
  IntervalSet domain = source_.space.as_interval_set();
  std::vector<Region> pulled;
  std::vector<int> retained;
  if (!domain.is_empty()) {
    IntervalSet image = domain.affine(scale_, shift_);
    Int jlo = floor_rat(image.parts().front().lo) - 1;
    Int jhi = ceil_rat(image.parts().back().hi) + 1;
    Rat inv(Rat(1) / scale_);
    for (int v = 0; v < tgt->element_count(); ++v) {
      std::vector<Interval> pieces;
      for (Int j = jlo; j <= jhi; ++j) {
        Rat off((Rat(j) - shift_) * inv);
        for (const Interval& part : tgt->element(v).line().parts())
          pieces.push_back(part.affine(inv, off));
      }
      IntervalSet pre = IntervalSet(std::move(pieces)).intersect(domain);
      if (pre.is_empty()) continue;
      retained.push_back(v);
      pulled.push_back(Region::from_interval_set(pre));
    }
  }
  Cover cover{"pullback(" + target_cover.name + ")",
              std::make_shared<BoxOracle>(source_, std::move(pulled))};
  return TracedCover{std::move(cover), std::move(retained)};
}

std::unique_ptr<MapHandle> BoxToCircleMap::restrict_to_sub() const {
  return std::make_unique<BoxToCircleMap>(source_.traced(), target_.traced(), scale_, shift_);
}

std::vector<CircleSet> standard_circle_elements(int stage) {
  if (stage < 0) throw Error("negative chain stage");
  long m = 3L << stage;
  Rat len = make_rat(5, 4 * m);
  std::vector<CircleSet> elements;
  elements.reserve(static_cast<size_t>(m));
  for (long i = 0; i < m; ++i) {
    Rat lo = make_rat(i, m);
    elements.push_back(CircleSet::arc(lo, false, Rat(lo + len), false));
  }
  return elements;
}

std::vector<Region> standard_interval_elements(int stage) {
  if (stage < 0) throw Error("negative chain stage");
  long denom = 1L << stage;
  Rat h = make_rat(1, denom);
  std::vector<Region> elements;
  for (long i = 0; i <= denom; ++i) {
    Rat lo((Rat(i) - 1) * h);
    Rat hi((Rat(i) + 1) * h);
    bool lo_closed = false, hi_closed = false;
    if (lo < 0) {
      lo = 0;
      lo_closed = true;
    }
    if (hi > 1) {
      hi = 1;
      hi_closed = true;
    }
    elements.push_back(Region::of(Interval{lo, hi, lo_closed, hi_closed}));
  }
  return elements;
}

CircleSpace full_circle_space() { return CircleSpace::whole(CircleSet::full()); }

BoxSpace unit_interval_space(bool endpoints_as_sub) {
  Region space = Region::of(Interval::closed(Rat(0), Rat(1)));
  if (!endpoints_as_sub) return BoxSpace::whole(std::move(space));
  Region ends = Region::from_interval_set(IntervalSet::point(Rat(0)).unite(IntervalSet::point(Rat(1))));
  return BoxSpace::make(std::move(space), std::move(ends));
}

CoverSystem circle_chain_range(int first_stage, int count) {
  if (count < 1) throw Error("standard chains need depth >= 1");
  CircleSpace space = full_circle_space();
  std::vector<Cover> chain;
  std::vector<std::vector<int>> projections;
  for (int j = first_stage; j < first_stage + count; ++j) {
    long m = 3L << j;
    chain.push_back(circle_cover("circle@" + std::to_string(m), space,
                                 standard_circle_elements(j)));
    if (j > first_stage) {
      std::vector<int> p(static_cast<size_t>(m));
      for (long i = 0; i < m; ++i) p[static_cast<size_t>(i)] = static_cast<int>(i / 2);
      projections.push_back(std::move(p));
    }
  }
  return make_system("circle", true, std::move(chain), projections);
}

CoverSystem standard_chain(StandardKind kind, int depth) {
  if (depth < 1) throw Error("standard chains need depth >= 1");
  switch (kind) {
    case StandardKind::point: {
      BoxSpace space = BoxSpace::whole(Region::of(Interval::point(Rat(0))));
      std::vector<Cover> chain;
      std::vector<std::vector<int>> projections;
      for (int j = 0; j < depth; ++j) {
        chain.push_back(box_cover("point@" + std::to_string(j), space, {space.space}));
        if (j) projections.push_back({0});
      }
      return make_system("point", true, std::move(chain), projections);
    }
    case StandardKind::interval:
    case StandardKind::interval_pair: {
      bool pair = kind == StandardKind::interval_pair;
      BoxSpace space = unit_interval_space(pair);
      std::vector<Cover> chain;
      std::vector<std::vector<int>> projections;
      for (int j = 0; j < depth; ++j) {
        long m = (1L << j) + 1;
        chain.push_back(box_cover((pair ? std::string("interval_pair@") : std::string("interval@")) +
                                      std::to_string(m),
                                  space, standard_interval_elements(j)));
        if (j) {
          std::vector<int> p(static_cast<size_t>(m));
          for (long i = 0; i < m; ++i)
            p[static_cast<size_t>(i)] = static_cast<int>((i + (i % 2)) / 2);
          projections.push_back(std::move(p));
        }
      }
      return make_system(pair ? "interval_pair" : "interval", true, std::move(chain), projections);
    }
    case StandardKind::circle:
      return circle_chain_range(0, depth);
  }
  throw Error("unknown standard chain kind");
}

}  // namespace fcech
