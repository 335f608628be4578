#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fcech/cover.hpp"
#include "fcech/intervals.hpp"

namespace fcech {

// Product of per-axis intervals; nonempty by construction.
struct Box {
  std::vector<Interval> sides;

  bool contains(const std::vector<Rat>& point) const;
};

// Finite union of boxes in Q^dim. Not kept canonical; set-level comparisons
// go through exact arrangement sampling.
struct Region {
  int dim = 1;
  std::vector<Box> boxes;

  static Region empty(int dim);
  static Region from_interval_set(const IntervalSet& s);  // dim 1
  static Region of(Interval side);                        // dim 1, single box

  bool is_empty() const { return boxes.empty(); }
  bool contains(const std::vector<Rat>& point) const;
  Region intersect(const Region& other) const;
  Region unite(const Region& other) const;
  // Exact: samples one representative point of every arrangement cell that
  // meets this region and tests it against `other`.
  bool subset_of(const Region& other) const;
  bool same_set(const Region& other) const;
  Region closure() const;
  bool is_closed() const;
  IntervalSet as_interval_set() const;  // dim 1 only

  std::string to_string() const;
};

// Pair (X, A) of box unions, with an optional deeper subspace B for triple
// sequences. B ⊆ A ⊆ X is validated.
struct BoxSpace {
  Region space;
  Region sub;
  Region sub_b;

  static BoxSpace make(Region space, Region sub, Region sub_b);
  static BoxSpace make(Region space, Region sub);
  static BoxSpace whole(Region space);

  BoxSpace traced() const;  // (A, B) as a standalone pair
  bool compact() const { return space.is_closed(); }
};

// Pair of circle subsets, same conventions as BoxSpace.
struct CircleSpace {
  CircleSet space;
  CircleSet sub;
  CircleSet sub_b;

  static CircleSpace make(CircleSet space, CircleSet sub, CircleSet sub_b);
  static CircleSpace make(CircleSet space, CircleSet sub);
  static CircleSpace whole(CircleSet space);

  CircleSpace traced() const;
  bool compact() const { return space.is_closed(); }
};

// Explicit finite space on points 0..point_count-1.
struct FiniteSpace {
  int point_count = 0;
  std::vector<int> sub;    // sorted, strictly increasing
  std::vector<int> sub_b;  // subset of sub

  static FiniteSpace make(int point_count, std::vector<int> sub, std::vector<int> sub_b = {});

  FiniteSpace traced() const;  // points renumbered along sub
};

// Oracle constructors certify that elements stay inside the space and that
// their union covers it; NotACover otherwise.
std::shared_ptr<const SpaceOracle> box_oracle(BoxSpace space, std::vector<Region> elements);
std::shared_ptr<const SpaceOracle> circle_oracle(CircleSpace space, std::vector<CircleSet> elements);
std::shared_ptr<const SpaceOracle> finite_oracle(FiniteSpace space, std::vector<std::vector<int>> elements);

Cover box_cover(std::string name, BoxSpace space, std::vector<Region> elements);
Cover circle_cover(std::string name, CircleSpace space, std::vector<CircleSet> elements);
Cover finite_cover(std::string name, FiniteSpace space, std::vector<std::vector<int>> elements);

// x -> scale*x + shift between one-dimensional box pairs; scale nonzero.
class AffineBoxMap final : public MapHandle {
 public:
  AffineBoxMap(BoxSpace source, BoxSpace target, Rat scale, Rat shift);
  std::string describe() const override;
  TracedCover pullback(const Cover& target_cover) const override;
  std::unique_ptr<MapHandle> restrict_to_sub() const override;

 private:
  BoxSpace source_, target_;
  Rat scale_, shift_;
};

// z -> degree*z + rotation on circle pairs; degree a nonzero integer.
class CircleMap final : public MapHandle {
 public:
  CircleMap(CircleSpace source, CircleSpace target, Int degree, Rat rotation);
  std::string describe() const override;
  TracedCover pullback(const Cover& target_cover) const override;
  std::unique_ptr<MapHandle> restrict_to_sub() const override;

 private:
  CircleSpace source_, target_;
  Int degree_;
  Rat rotation_;
};

// x -> (scale*x + shift) mod 1 from a one-dimensional box pair into a
// circle pair; scale nonzero.
class BoxToCircleMap final : public MapHandle {
 public:
  BoxToCircleMap(BoxSpace source, CircleSpace target, Rat scale, Rat shift);
  std::string describe() const override;
  TracedCover pullback(const Cover& target_cover) const override;
  std::unique_ptr<MapHandle> restrict_to_sub() const override;

 private:
  BoxSpace source_;
  CircleSpace target_;
  Rat scale_, shift_;
};

// Exact preimage of a circle subset under z -> degree*z + rotation.
CircleSet circle_map_preimage(const Int& degree, const Rat& rotation, const CircleSet& s);

// Standard refinement chains: the circle by 3*2^j open arcs of length
// 5/(4*3*2^j), the interval by 2^j + 1 overlapping relatively open pieces,
// the point by its singleton cover. interval_pair carries A = {0, 1}.
enum class StandardKind { point, interval, interval_pair, circle };

CoverSystem standard_chain(StandardKind kind, int depth);

// Circle chain starting at a finer stage: stages first..first+count-1.
// Stage j of the standard circle chain refines the degree-d winding
// pullback of stage j-log2(d), which makes these ranges the natural source
// systems for winding maps.
CoverSystem circle_chain_range(int first_stage, int count);

// Raw stage data, exposed for fixtures that assemble custom systems.
std::vector<CircleSet> standard_circle_elements(int stage);
std::vector<Region> standard_interval_elements(int stage);
CircleSpace full_circle_space();
BoxSpace unit_interval_space(bool endpoints_as_sub);

}  // namespace fcech
