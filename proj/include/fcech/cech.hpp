#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fcech/cover.hpp"

namespace fcech {

// Chain of trace covers of the subspace pair (A, B), one per stage of the
// original system. `retained[i]` identifies the vertices of the i-th trace
// nerve with the sub-nerve vertices of the i-th original stage nerve.
struct TraceSystem {
  CoverSystem system;
  std::vector<std::vector<int>> retained;
};

TraceSystem trace_system(const CoverSystem& sys);

// Per-stage relative nerve homology H_n with the projection-induced bonding
// maps, assembled as a finite inverse chain standing in for the limit.
LimitReport functional_homology(const CoverSystem& sys, const CoefficientGroup& g, int n,
                                int window = 2);

// Dual: H^n per stage with bonding maps running coarse to fine.
LimitReport functional_cohomology(const CoverSystem& sys, const CoefficientGroup& g, int n,
                                  int window = 2);

// Stagewise pullback of a whole system along a map handle.
struct PulledSystem {
  CoverSystem system;                      // pulled-back chain on the source space
  std::vector<std::vector<int>> retained;  // per stage: pulled index -> target element
  std::vector<PairMap> inclusions;         // pulled stage nerve -> target stage nerve
};

PulledSystem pullback_system(const MapHandle& f, const CoverSystem& target_sys);

// Homomorphism induced by f at the finest stage. The source chain is the
// pulled-back chain itself; the commuting ladder between stage maps and
// projections is certified at every rung (LadderBroken on failure).
// Homology: H_n(source finest) -> H_n(target finest); cohomology reversed.
GroupHom induced_limit_map(const MapHandle& f, const CoverSystem& target_sys,
                           const CoefficientGroup& g, int n, Variance variance);

// Same against an explicit source system whose stages refine the pulled-back
// stages (certified by containment). Keeps the source topology at full
// resolution when preimage covers are coarser than the source deserves.
GroupHom induced_limit_map(const MapHandle& f, const CoverSystem& source_sys,
                           const CoverSystem& target_sys, const CoefficientGroup& g, int n,
                           Variance variance);

// Connecting homomorphism at the finest stage, composed with the
// retained-index identification between the sub-nerve and the trace nerve.
// Commutation with the projections is certified at every rung
// (RectangleBroken on failure).
// Homology: H_n(finest pair) -> H_{n-1}(finest trace nerve).
// Cohomology: H^n(finest trace nerve) -> H^{n+1}(finest pair).
GroupHom limit_connecting(const CoverSystem& sys, const CoefficientGroup& g, int n,
                          Variance variance);

struct PairSequenceVerdict {
  SequenceCheck homology;    // required: order two (adjacent composites vanish)
  SequenceCheck cohomology;  // required: exact at every interior slot
  bool pass = false;
  bool all_stabilized = false;
  std::vector<std::string> notes;
};

// Long sequence of the pair at the finest stage across degrees [lo, hi]:
// homology is checked for order two, cohomology for full exactness.
PairSequenceVerdict pair_sequence_check(const CoverSystem& sys, const CoefficientGroup& g, int lo,
                                        int hi, int window = 2);

// Triple B within A within X, presented as two systems over the same chain
// of cover elements: one reading the pair (X, A), one reading (X, B).
struct TripleSystem {
  CoverSystem on_xa;
  CoverSystem on_xb;
};

// Certifies that the two chains share their elements (mutual containment),
// their projections, and that B-incidence implies A-incidence.
TripleSystem make_triple_system(CoverSystem on_xa, CoverSystem on_xb);

struct TripleVerdict {
  SequenceCheck cohomology;
  bool pass = false;
  bool all_stabilized = false;
  std::vector<std::string> notes;
};

// Cohomology sequence of the triple at the finest stage,
//   H^n(X,A) -> H^n(X,B) -> H^n(A,B) -> H^{n+1}(X,A) -> ...,
// with the connecting map factored through restriction to A; exactness is
// checked at every interior slot over [lo, hi].
TripleVerdict triple_sequence_check(const TripleSystem& triple, const CoefficientGroup& g, int lo,
                                    int hi, int window = 2);

struct NaturalityVerdict {
  bool homology_commutes = false;
  bool cohomology_commutes = false;
  bool pass = false;
  std::vector<std::string> failures;
};

// Commutation of f with the connecting maps at the finest stage:
// homology   d . f_* = (f|_A)_* . d   at degree n,
// cohomology f^* . d = d . (f|_A)^*   arriving in degree n.
// Requires an empty third region B on both sides.
NaturalityVerdict naturality_check(const MapHandle& f, const CoverSystem& source_sys,
                                   const CoverSystem& target_sys, const CoefficientGroup& g,
                                   int n);

struct EtaResult {
  int value = -1;            // largest m with nonzero H^m; -1 for the empty space
  int dimension_bound = -1;  // max nerve dimension across the chain
  bool stabilized = false;   // every inspected degree stabilized over the window
  std::string note;
};

// Coefficient of cyclicity relative to the chain: degrees above the nerve
// dimension bound vanish for dimension reasons; the inspected degrees are
// computed as absolute cohomology limits.
EtaResult eta(const CoverSystem& sys, const CoefficientGroup& g, int window = 2);

// Expected-group table for a compact space, degree-indexed per variance.
struct BetaExpectation {
  std::map<int, FgAbGroup> homology;
  std::map<int, FgAbGroup> cohomology;
  std::optional<int> eta_value;
};

struct BetaRow {
  std::string kind;  // "H" (homology) or "H^" (cohomology)
  int degree = 0;
  FgAbGroup expected;
  FgAbGroup computed;
  bool stabilized = false;
  bool match = false;
};

struct BetaVerdict {
  bool pass = true;
  std::vector<BetaRow> rows;
  std::vector<std::string> notes;
};

// On a compact backend the functional groups must agree with the classical
// Cech groups of the space itself; compares stabilized limits (and eta, when
// registered) against the expected table. Throws NotCompact otherwise.
BetaVerdict compact_beta_check(const CoverSystem& sys, const CoefficientGroup& g,
                               const BetaExpectation& expected, int window = 2);

// Umbrella result consumed by the command-line front end.
struct SystemReport {
  std::string space;
  bool compact = false;
  std::vector<int> stage_sizes;       // cover element counts, coarse to fine
  std::vector<int> stage_dimensions;  // nerve dimensions, coarse to fine
  std::map<int, LimitReport> homology;
  std::map<int, LimitReport> cohomology;
  std::optional<PairSequenceVerdict> pair_verdict;
  std::optional<EtaResult> eta_result;
  std::optional<BetaVerdict> beta_verdict;

  std::string to_string() const;
};

// Fills the descriptive header fields (sizes, dimensions); degree results and
// verdicts are appended by the caller on request.
SystemReport summarize(const CoverSystem& sys);

}  // namespace fcech
