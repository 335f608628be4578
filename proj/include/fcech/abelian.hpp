#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fcech/lattice.hpp"

namespace fcech {

// Finitely generated abelian group in invariant-factor form:
// Z^free_rank + Z/d1 + ... + Z/dk with 2 <= d1 | d2 | ... | dk.
//
// Canonical generators are ordered torsion first (ascending factors), then
// free. Elements are coordinate vectors against these generators; torsion
// coordinates are normalized into [0, di).
class FgAbGroup {
 public:
  FgAbGroup() : free_rank_(0) {}

  static FgAbGroup trivial() { return FgAbGroup(); }
  static FgAbGroup free(int rank);
  static FgAbGroup cyclic(const Int& d);

  // Canonicalizes an arbitrary decomposition: factor 0 counts as a free
  // summand, factor 1 as a trivial one, and non-divisible factor lists are
  // merged into an invariant chain (gcd/lcm exchanges, no factorization).
  static FgAbGroup from_parts(int free_rank, std::vector<Int> factors);

  // Z^rank modulo the column span of `relations` (rank x k matrix).
  static FgAbGroup from_presentation(int rank, const IntMatrix& relations);

  // Accepts the rendered syntax: "0", "Z", "Z^3", "Z/6", sums with '+'.
  static FgAbGroup parse(const std::string& text);

  int free_rank() const { return free_rank_; }
  const std::vector<Int>& invariant_factors() const { return factors_; }

  int generator_count() const { return free_rank_ + static_cast<int>(factors_.size()); }
  int torsion_count() const { return static_cast<int>(factors_.size()); }

  // Order of the i-th canonical generator; 0 means infinite.
  Int generator_order(int i) const;

  bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }

  // Orders of the canonical summands, torsion first, then 0 per free summand.
  std::vector<Int> summand_orders() const;

  // Generators-count x torsion-count matrix whose columns span the relation
  // lattice (di on the i-th torsion coordinate).
  IntMatrix relation_matrix() const;

  // Normalizes coordinates: torsion entries into [0, di).
  std::vector<Int> reduce(std::vector<Int> coords) const;

  bool operator==(const FgAbGroup& o) const {
    return free_rank_ == o.free_rank_ && factors_ == o.factors_;
  }
  bool operator!=(const FgAbGroup& o) const { return !(*this == o); }

  // "Z^r + Z/d1 + Z/d2", free part first; "0" when trivial.
  std::string to_string() const;

 private:
  int free_rank_;
  std::vector<Int> factors_;
};

using CoefficientGroup = FgAbGroup;

// Two groups are abstractly isomorphic exactly when their canonical forms
// coincide.
bool iso_check(const FgAbGroup& a, const FgAbGroup& b);

// Homomorphism between canonical groups, stored as an integer matrix on
// canonical generators: column j holds the image of source generator j.
// Construction validates that torsion relations are respected and normalizes
// entries against the target relations, so equality is plain field equality.
class GroupHom {
 public:
  GroupHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix);

  static GroupHom identity(const FgAbGroup& g);
  static GroupHom zero(const FgAbGroup& source, const FgAbGroup& target);

  const FgAbGroup& source() const { return source_; }
  const FgAbGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  std::vector<Int> apply(const std::vector<Int>& coords) const;

  bool is_zero() const { return matrix_.is_zero(); }
  bool is_identity() const;

  bool operator==(const GroupHom& o) const {
    return source_ == o.source_ && target_ == o.target_ && matrix_ == o.matrix_;
  }
  bool operator!=(const GroupHom& o) const { return !(*this == o); }

 private:
  FgAbGroup source_;
  FgAbGroup target_;
  IntMatrix matrix_;
};

// g after f; endpoints must match.
GroupHom compose(const GroupHom& g, const GroupHom& f);

FgAbGroup cokernel(const GroupHom& h);

// True isomorphism test: canonical forms agree and the map is onto
// (a surjective endomorphism of a finitely generated group is injective).
bool is_isomorphism(const GroupHom& h);

bool composite_is_zero(const GroupHom& g, const GroupHom& f);

// Is the image of f exactly the kernel of g? Works on the lattice level:
// both subgroups of the middle group are compared as integer lattices in
// generator coordinates (relation columns included on both sides).
bool exact_at(const GroupHom& f, const GroupHom& g);

// Subquotient L_ker / L_im of Z^ambient, where
//   L_ker = {x : constraints * x == 0 modulo constraint_moduli}, and
//   L_im is spanned by image_gens plus ambient_moduli[i] * e_i.
// Produces the canonical group together with explicit generator cycles and a
// coordinate map `express` that is well defined on classes.
class CycleSpace {
 public:
  CycleSpace(int ambient, const IntMatrix& constraints, const std::vector<Int>& constraint_moduli,
             const IntMatrix& image_gens, const std::vector<Int>& ambient_moduli);

  const FgAbGroup& group() const { return group_; }
  int ambient_rank() const { return ambient_; }

  // Ambient coordinates of the i-th canonical generator.
  std::vector<Int> generator(int i) const;

  // Coordinates of the class of `cycle` against the canonical generators.
  // Throws if the vector does not satisfy the constraints.
  std::vector<Int> express(const std::vector<Int>& cycle) const;

 private:
  int ambient_;
  IntMatrix basis_;
  std::optional<LinearSolver> solver_;
  IntMatrix normal_from_basis_;     // maps basis coordinates to normal coordinates
  std::vector<int> gen_coord_;      // normal-coordinate index per canonical generator
  IntMatrix generators_;            // ambient coordinates, one column per generator
  FgAbGroup group_;
};

// One degree of a chain complex: d_out is the boundary leaving the degree,
// d_in the boundary arriving into it. Requires d_out * d_in == 0.
struct BoundaryPair {
  IntMatrix d_in;
  IntMatrix d_out;

  int chain_rank() const { return d_out.cols(); }
};

// Orders of G's summands define the block layout used for chains with
// coefficients: coordinate (summand j, cell i) sits at index j * cells + i.
std::vector<Int> block_moduli(const CoefficientGroup& g, int cells);

// H_n as a solvable space (generators + express), for building induced maps.
CycleSpace homology_space(const BoundaryPair& at_degree, const CoefficientGroup& g);

// H_n(C; G) = ker(d_out x G) / im(d_in x G) in canonical form.
FgAbGroup homology_from_boundaries(const IntMatrix& d_in, const IntMatrix& d_out,
                                   const CoefficientGroup& g);

// Same subquotient on the cochain side; delta_in arrives into the degree,
// delta_out leaves it.
FgAbGroup cohomology_from_coboundaries(const IntMatrix& delta_in, const IntMatrix& delta_out,
                                       const CoefficientGroup& g);

// Hom induced by generator images computed through a callback.
GroupHom hom_from_images(const CycleSpace& src, const CycleSpace& tgt,
                         const std::function<std::vector<Int>(const std::vector<Int>&)>& image);

// Hom induced on homology by a chain map. chain_map acts on integral chains
// at the degree; chain_map_out (one degree down) and chain_map_in (one degree
// up) certify the commuting squares with the boundaries.
GroupHom induced_on_homology(const IntMatrix& chain_map, const IntMatrix& chain_map_out,
                             const IntMatrix& chain_map_in, const BoundaryPair& src,
                             const BoundaryPair& tgt, const CoefficientGroup& g);

enum class ChainDirection { inverse, direct };

// Finite chain of groups and bonding maps standing in for a (co)limit.
// For `inverse`, maps[i] goes from stages[i+1] to stages[i]; for `direct`,
// from stages[i] to stages[i+1]. The reported value is the finest stage.
struct LimitReport {
  FgAbGroup limit;
  std::vector<FgAbGroup> stages;
  std::vector<GroupHom> maps;
  bool stabilized = false;
  int window = 0;

  std::string to_string() const;
};

LimitReport finite_chain_limit(std::vector<FgAbGroup> stages, std::vector<GroupHom> maps,
                               ChainDirection direction, int window = 2);

}  // namespace fcech
