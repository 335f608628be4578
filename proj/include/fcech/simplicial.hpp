#pragma once

#include <map>
#include <string>
#include <vector>

#include "fcech/abelian.hpp"

namespace fcech {

// A simplex is a strictly increasing vertex list.
using Simplex = std::vector<int>;

// Finite abstract simplicial complex with lexicographically sorted bases in
// every dimension. Construction takes downward closure automatically.
class Complex {
 public:
  Complex() = default;

  static Complex from_simplices(const std::vector<Simplex>& simplices);

  // Dimension, -1 for the empty complex.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }

  // Basis of n-simplices in lexicographic order; empty outside [0, dim].
  const std::vector<Simplex>& simplices(int n) const;

  std::size_t simplex_count() const;
  bool empty() const { return by_dim_.empty(); }

  bool contains(const Simplex& s) const;
  // Position in the basis of its dimension; -1 if absent.
  int index_of(const Simplex& s) const;

  std::vector<int> vertices() const;

  bool contains_all_of(const Complex& other) const;

  bool operator==(const Complex& o) const { return by_dim_ == o.by_dim_; }
  bool operator!=(const Complex& o) const { return !(*this == o); }

 private:
  std::vector<std::vector<Simplex>> by_dim_;
};

// Pair (X, A) with A a subcomplex of X; A may be empty.
struct SimplicialPair {
  Complex total;
  Complex sub;

  SimplicialPair() = default;
  SimplicialPair(Complex total_complex, Complex sub_complex);

  // Basis of relative n-chains: n-simplices of X not in A, in lex order.
  std::vector<Simplex> relative_basis(int n) const;
};

// Integral boundary matrix from n-simplices to (n-1)-simplices with the
// alternating-sign face convention.
IntMatrix boundary_matrix(const Complex& x, int n);

// Boundary on relative chains: faces inside the subcomplex are dropped.
IntMatrix relative_boundary_matrix(const SimplicialPair& p, int n);

// Degree-indexed bases and boundary matrices of the relative chain complex.
struct ChainComplexRep {
  std::vector<std::vector<Simplex>> basis;  // basis[n] for 0 <= n <= dim
  std::vector<IntMatrix> boundary;          // boundary[n] : basis[n] -> basis[n-1]
};

ChainComplexRep relative_chain_complex(const SimplicialPair& p);

// Vertex map that sends simplices to simplices. Collapses are allowed; the
// image of a simplex is the support of its image vertex set.
class SimplicialMap {
 public:
  SimplicialMap(Complex source, Complex target, std::map<int, int> vertex_map);

  const Complex& source() const { return source_; }
  const Complex& target() const { return target_; }
  const std::map<int, int>& vertex_map() const { return vertex_map_; }

  int image_of(int vertex) const;
  // Support of the image vertex set, sorted with duplicates removed.
  Simplex image_simplex(const Simplex& s) const;

 private:
  Complex source_;
  Complex target_;
  std::map<int, int> vertex_map_;
};

// Simplicial map of pairs: sends the source subcomplex into the target one.
class PairMap {
 public:
  PairMap(SimplicialPair source, SimplicialPair target, std::map<int, int> vertex_map);

  static PairMap identity(const SimplicialPair& p);

  const SimplicialPair& source() const { return source_; }
  const SimplicialPair& target() const { return target_; }
  const SimplicialMap& total_map() const { return total_; }
  const std::map<int, int>& vertex_map() const { return total_.vertex_map(); }

 private:
  SimplicialPair source_;
  SimplicialPair target_;
  SimplicialMap total_;
};

// Integral chain map at degree n induced by a simplicial map; degenerate
// images contribute zero, otherwise the sorting sign.
IntMatrix chain_map_matrix(const SimplicialMap& f, int n);

// Same on relative chains: images landing in the target subcomplex vanish.
IntMatrix relative_chain_map_matrix(const PairMap& f, int n);

enum class Variance { homology, cohomology };

// H_n(X, A; G) (or H^n for the cohomology variance) in canonical form.
FgAbGroup homology(const SimplicialPair& p, const CoefficientGroup& g, int n);
FgAbGroup cohomology(const SimplicialPair& p, const CoefficientGroup& g, int n);

// Solvable spaces for building maps on classes.
CycleSpace homology_space_of_pair(const SimplicialPair& p, const CoefficientGroup& g, int n);
CycleSpace cohomology_space_of_pair(const SimplicialPair& p, const CoefficientGroup& g, int n);

// Induced hom on (co)homology at degree n. Covariant for homology,
// contravariant for cohomology (the result then maps target to source).
GroupHom induced(const PairMap& f, const CoefficientGroup& g, int n, Variance variance);

// Are f and g contiguous (the union of images of every simplex spans a
// simplex)? Pair version also requires the union inside the target sub for
// source sub simplices.
bool contiguous(const SimplicialMap& f, const SimplicialMap& g);
bool contiguous(const PairMap& f, const PairMap& g);

// Connecting homomorphism of the pair.
// Homology: H_n(X, A; G) -> H_{n-1}(A; G), computed by lifting a relative
// cycle, taking the boundary in X and restricting to A.
// Cohomology: H^n(A; G) -> H^{n+1}(X, A; G), by extending a cocycle of A by
// zero and applying the total coboundary.
GroupHom connecting_delta(const SimplicialPair& p, const CoefficientGroup& g, int n,
                          Variance variance);

// The long sequence of the pair across a degree window, as a composable run
// of maps with human-readable labels.
// Homology (hi down to lo):  ... H_n(A) -i-> H_n(X) -j-> H_n(X,A) -d-> H_{n-1}(A) ...
// Cohomology (lo up to hi):  ... H^n(X,A) -j-> H^n(X) -i-> H^n(A) -d-> H^{n+1}(X,A) ...
struct LongSequence {
  std::vector<GroupHom> maps;
  std::vector<std::string> labels;
};

LongSequence pair_long_sequence(const SimplicialPair& p, const CoefficientGroup& g, int lo, int hi,
                                Variance variance);

// Generic exactness audit of a composable run of maps.
struct SequenceCheck {
  bool order_two = true;  // all adjacent composites vanish
  bool exact = true;      // image equals kernel at all interior nodes
  std::vector<std::string> failures;
};

SequenceCheck check_sequence(const std::vector<GroupHom>& maps,
                             const std::vector<std::string>& labels);

}  // namespace fcech
