#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fcech/simplicial.hpp"

namespace fcech {

// Carrier oracle of a finite cover of a space pair (X, A): answers whether
// the intersection of a set of cover elements is nonempty, and whether it
// meets the subspace A. Both predicates must be monotone under taking
// subsets; `nerve` spot-checks this and throws OracleViolation on failure.
class SpaceOracle {
 public:
  virtual ~SpaceOracle() = default;

  virtual int element_count() const = 0;

  // `simplex` is a strictly increasing list of element indices.
  virtual bool nonempty(const std::vector<int>& simplex) const = 0;
  virtual bool meets_sub(const std::vector<int>& simplex) const = 0;

  virtual std::string describe() const = 0;

  // Exact containment certificates between covers of the same space.
  virtual bool supports_containment() const { return false; }
  virtual bool element_contained(int own_element, const SpaceOracle& coarse,
                                 int coarse_element) const;
  // Do both oracles describe the same space pair? Guards refinement checks.
  virtual bool same_space(const SpaceOracle& other) const;

  // Cover of the pair (A, B) obtained by intersecting the retained elements
  // with A. Backends that cannot trace throw UnsupportedMap.
  virtual std::shared_ptr<const SpaceOracle> trace_oracle(const std::vector<int>& retained) const;
};

// A finite functionally open cover, addressed through its oracle.
struct Cover {
  std::string name;
  std::shared_ptr<const SpaceOracle> oracle;

  int size() const { return oracle ? oracle->element_count() : 0; }
};

// A cover together with the indices of the original cover elements that
// survived a trace or a pullback (position i of the new cover corresponds to
// element retained[i] of the original one).
struct TracedCover {
  Cover cover;
  std::vector<int> retained;
};

// Fine cover refining a coarse one: projection[i] names a coarse element
// containing fine element i.
struct Refinement {
  Cover fine;
  Cover coarse;
  std::vector<int> projection;
};

// Nerve of the cover as a pair: the full nerve and the subcomplex of
// simplices whose carrier meets the subspace.
SimplicialPair nerve(const Cover& cover);

// Certifies every containment claim of the projection. Failing indices are
// reported through `diagnostics` when provided.
bool validate_refinement(const Refinement& r, std::vector<std::string>* diagnostics = nullptr);

// Simplicial projection between the nerves induced by a valid refinement.
PairMap projection_map(const Refinement& r);

// Restriction of the cover to the subspace: elements meeting A, intersected
// with A.
TracedCover trace_cover(const Cover& cover);

// Continuous map handle f : (X, A_X) -> (Y, A_Y) between backend spaces,
// able to pull covers of Y back to X exactly.
class MapHandle {
 public:
  virtual ~MapHandle() = default;

  virtual std::string describe() const = 0;

  // Cover of X by nonempty preimages of the target cover's elements,
  // with the surviving target indices.
  virtual TracedCover pullback(const Cover& target_cover) const = 0;

  // f|_A : (A_X, B_X) -> (A_Y, B_Y).
  virtual std::unique_ptr<MapHandle> restrict_to_sub() const = 0;
};

// Pulled-back cover plus the inclusion of its nerve into the target nerve.
struct PullbackResult {
  TracedCover traced;
  PairMap inclusion;
};

PullbackResult pullback_cover(const MapHandle& f, const Cover& target_cover);

// Finite descending chain of covers of one space pair, finest last, with a
// certified refinement between consecutive stages.
struct CoverSystem {
  std::string space;
  bool compact = false;
  std::vector<Cover> chain;            // coarse to fine
  std::vector<Refinement> refinements; // refinements[i]: chain[i+1] -> chain[i]
};

// Assembles and validates a system from covers and projections;
// projections[i] maps elements of chain[i+1] to elements of chain[i].
CoverSystem make_system(std::string space, bool compact, std::vector<Cover> chain,
                        const std::vector<std::vector<int>>& projections);

}  // namespace fcech
