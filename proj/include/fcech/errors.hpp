#pragma once

#include <stdexcept>
#include <string>

namespace fcech {

// Root of the library's error hierarchy. Every precondition violation or
// failed structural check surfaces as a subclass of Error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Matrix shapes are incompatible for the requested operation.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

// Boundary-style inputs whose composite is not zero.
class NonComposable : public Error {
 public:
  using Error::Error;
};

// A claimed chain map fails to commute with the boundaries.
class NotAChainMap : public Error {
 public:
  using Error::Error;
};

// A homomorphism matrix does not respect the torsion relations,
// or endpoint groups do not match.
class InvalidHom : public Error {
 public:
  using Error::Error;
};

// A vertex map is not simplicial, or does not respect subcomplexes.
class NotPairMap : public Error {
 public:
  using Error::Error;
};

// A carrier oracle violated monotonicity or meets-sub consistency.
class OracleViolation : public Error {
 public:
  using Error::Error;
};

// A claimed refinement projection does not certify containment.
class InvalidRefinement : public Error {
 public:
  using Error::Error;
};

// Declared cover elements fail to cover the space (or its subspace).
class NotACover : public Error {
 public:
  using Error::Error;
};

// A map handle cannot operate on the given spaces.
class UnsupportedMap : public Error {
 public:
  using Error::Error;
};

// Compact-space comparisons requested for a non-compact space.
class NotCompact : public Error {
 public:
  using Error::Error;
};

// The stagewise maps of an induced system morphism fail to commute
// with the projections.
class LadderBroken : public Error {
 public:
  using Error::Error;
};

// A connecting-map rectangle fails to commute across stages.
class RectangleBroken : public Error {
 public:
  using Error::Error;
};

// Malformed job input (JSON syntax, missing fields, bad values).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace fcech
