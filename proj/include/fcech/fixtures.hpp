#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fcech/cech.hpp"

namespace fcech {

// Bundled example space pair with a ready-made cover chain and the canonical
// groups it is expected to produce. `expected` renders the degree table for a
// chosen coefficient group; `table_source` names the independent derivation
// behind that table.
struct Fixture {
  std::string name;
  std::string summary;
  bool compact = false;
  int default_depth = 3;
  std::string table_source;
  std::function<CoverSystem(int depth)> build;
  std::function<BetaExpectation(const CoefficientGroup& g)> expected;
};

// Stable-ordered registry of the bundled fixtures.
const std::vector<Fixture>& fixtures();

// Lookup by name; throws Error for unknown names.
const Fixture& fixture(const std::string& name);

// Triple ([0,1], {0,1}, {0}) over the standard interval chains.
TripleSystem interval_triple(int depth = 3);

}  // namespace fcech
