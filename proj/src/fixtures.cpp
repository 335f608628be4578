#include "fcech/fixtures.hpp"

#include <map>
#include <utility>

#include "fcech/backends.hpp"
#include "fcech/errors.hpp"

namespace fcech {

namespace {

CoverSystem constant_chain(const std::string& space_name, const Cover& cover, int depth) {
  if (depth < 1) throw Error("fixtures need depth >= 1");
  std::vector<Cover> chain(static_cast<std::size_t>(depth), cover);
  std::vector<int> identity(static_cast<std::size_t>(cover.size()));
  for (int i = 0; i < cover.size(); ++i) identity[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<int>> projections(static_cast<std::size_t>(depth - 1), identity);
  return make_system(space_name, true, std::move(chain), projections);
}

// Standard interval chain over an arbitrary pair structure on [0,1].
CoverSystem interval_chain_on(const BoxSpace& space, const std::string& name, bool compact,
                              int depth) {
  if (depth < 1) throw Error("fixtures need depth >= 1");
  std::vector<Cover> chain;
  std::vector<std::vector<int>> projections;
  for (int j = 0; j < depth; ++j) {
    long m = (1L << j) + 1;
    chain.push_back(box_cover(name + "@" + std::to_string(m), space,
                              standard_interval_elements(j)));
    if (j) {
      std::vector<int> p(static_cast<std::size_t>(m));
      for (long i = 0; i < m; ++i)
        p[static_cast<std::size_t>(i)] = static_cast<int>((i + (i % 2)) / 2);
      projections.push_back(std::move(p));
    }
  }
  return make_system(name, compact, std::move(chain), projections);
}

CoverSystem build_open_interval(int depth) {
  if (depth < 1) throw Error("fixtures need depth >= 1");
  Region x = Region::of(*Interval::make(Rat(0), false, Rat(1), false));
  BoxSpace space = BoxSpace::whole(x);
  std::vector<Cover> chain;
  std::vector<std::vector<int>> projections;
  for (int j = 0; j < depth; ++j) {
    long m = (1L << j) + 1;
    std::vector<Region> elements;
    for (long i = 0; i < m; ++i) {
      Rat lo = i == 0 ? Rat(0) : make_rat(i - 1, 1L << j);
      Rat hi = i == m - 1 ? Rat(1) : make_rat(i + 1, 1L << j);
      elements.push_back(Region::of(*Interval::make(lo, false, hi, false)));
    }
    chain.push_back(box_cover("open_interval@" + std::to_string(m), space, std::move(elements)));
    if (j) {
      std::vector<int> p(static_cast<std::size_t>(m));
      for (long i = 0; i < m; ++i)
        p[static_cast<std::size_t>(i)] = static_cast<int>((i + (i % 2)) / 2);
      projections.push_back(std::move(p));
    }
  }
  return make_system("open_interval", false, std::move(chain), projections);
}

CoverSystem build_circle_arc_pair(int depth) {
  if (depth < 1) throw Error("fixtures need depth >= 1");
  CircleSpace space = CircleSpace::make(CircleSet::full(),
                                        CircleSet::arc(Rat(0), true, make_rat(1, 4), true));
  std::vector<Cover> chain;
  std::vector<std::vector<int>> projections;
  for (int j = 0; j < depth; ++j) {
    int m = 3 << j;
    chain.push_back(circle_cover("circle_arc@" + std::to_string(m), space,
                                 standard_circle_elements(j)));
    if (j) {
      std::vector<int> p(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) p[static_cast<std::size_t>(i)] = i / 2;
      projections.push_back(std::move(p));
    }
  }
  return make_system("circle_arc_pair", true, std::move(chain), projections);
}

CoverSystem build_projective_plane(int depth) {
  // Facet-dual model of the six-vertex triangulation: one point per triangle,
  // one cover element per vertex star.
  const std::vector<Simplex> facets = {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
                                       {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}};
  std::vector<std::vector<int>> stars(6);
  for (int t = 0; t < static_cast<int>(facets.size()); ++t)
    for (int v : facets[static_cast<size_t>(t)]) stars[static_cast<size_t>(v)].push_back(t);
  FiniteSpace space = FiniteSpace::make(static_cast<int>(facets.size()), {});
  return constant_chain("projective_plane",
                        finite_cover("vertex-stars", space, std::move(stars)), depth);
}

CoverSystem build_wedge(int depth) {
  // Two hollow triangles sharing a vertex, modelled on six points named by
  // the edges they represent.
  FiniteSpace space = FiniteSpace::make(6, {});
  std::vector<std::vector<int>> elements = {{0, 1}, {0, 2}, {1, 2, 3, 4}, {3, 5}, {4, 5}};
  return constant_chain("wedge", finite_cover("wedge", space, std::move(elements)), depth);
}

FgAbGroup direct_power(const CoefficientGroup& g, int k) {
  std::vector<Int> factors;
  for (int i = 0; i < k; ++i)
    for (const Int& d : g.invariant_factors()) factors.push_back(d);
  return FgAbGroup::from_parts(g.free_rank() * k, std::move(factors));
}

// G / 2G.
FgAbGroup mod_two_quotient(const CoefficientGroup& g) {
  std::vector<Int> factors(static_cast<std::size_t>(g.free_rank()), Int(2));
  for (const Int& d : g.invariant_factors()) factors.push_back(gcd(Int(2), d));
  return FgAbGroup::from_parts(0, std::move(factors));
}

// Elements of order dividing 2.
FgAbGroup two_torsion(const CoefficientGroup& g) {
  std::vector<Int> factors;
  for (const Int& d : g.invariant_factors()) factors.push_back(gcd(Int(2), d));
  return FgAbGroup::from_parts(0, std::move(factors));
}

// Fills every unset degree in [0, hi] with the trivial group.
void zero_through(BetaExpectation& e, int hi) {
  for (int n = 0; n <= hi; ++n) {
    e.homology.try_emplace(n, FgAbGroup::trivial());
    e.cohomology.try_emplace(n, FgAbGroup::trivial());
  }
}

std::vector<Fixture> build_registry() {
  std::vector<Fixture> out;

  out.push_back({"point", "one-point space", true, 3, "contractible nerve at every stage",
                 [](int depth) { return standard_chain(StandardKind::point, depth); },
                 [](const CoefficientGroup& g) {
                   BetaExpectation e;
                   e.homology[0] = g;
                   e.cohomology[0] = g;
                   zero_through(e, 2);
                   e.eta_value = g.is_trivial() ? -1 : 0;
                   return e;
                 }});

  out.push_back({"point_pair", "(X, A) with A = X a point", true, 3,
                 "identical pair has trivial relative groups",
                 [](int depth) {
                   FiniteSpace space = FiniteSpace::make(1, {0});
                   return constant_chain("point_pair", finite_cover("pt", space, {{0}}), depth);
                 },
                 [](const CoefficientGroup& g) {
                   BetaExpectation e;
                   zero_through(e, 2);
                   e.eta_value = g.is_trivial() ? -1 : 0;
                   return e;
                 }});

  out.push_back({"empty", "empty space", true, 3, "empty nerve",
                 [](int depth) {
                   FiniteSpace space = FiniteSpace::make(0, {});
                   return constant_chain("empty", finite_cover("none", space, {}), depth);
                 },
                 [](const CoefficientGroup&) {
                   BetaExpectation e;
                   zero_through(e, 2);
                   e.eta_value = -1;
                   return e;
                 }});

  out.push_back({"interval", "closed unit interval [0,1]", true, 3,
                 "path nerves are contractible",
                 [](int depth) { return standard_chain(StandardKind::interval, depth); },
                 [](const CoefficientGroup& g) {
                   BetaExpectation e;
                   e.homology[0] = g;
                   e.cohomology[0] = g;
                   zero_through(e, 2);
                   e.eta_value = g.is_trivial() ? -1 : 0;
                   return e;
                 }});

  out.push_back({"open_interval", "open unit interval (0,1), non-compact", false, 3,
                 "path nerves are contractible",
                 [](int depth) { return build_open_interval(depth); },
                 [](const CoefficientGroup& g) {
                   BetaExpectation e;
                   e.homology[0] = g;
                   e.cohomology[0] = g;
                   zero_through(e, 2);
                   e.eta_value = g.is_trivial() ? -1 : 0;
                   return e;
                 }});

  out.push_back({"interval_pair", "([0,1], {0,1})", true, 3,
                 "relative path modulo endpoints; single-stage snake computation",
                 [](int depth) { return standard_chain(StandardKind::interval_pair, depth); },
                 [](const CoefficientGroup& g) {
                   BetaExpectation e;
                   e.homology[1] = g;
                   e.cohomology[1] = g;
                   zero_through(e, 2);
                   e.eta_value = g.is_trivial() ? -1 : 0;
                   return e;
                 }});

  out.push_back({"circle", "circle R/Z", true, 3, "hollow-polygon nerve at any single stage",
                 [](int depth) { return standard_chain(StandardKind::circle, depth); },
                 [](const CoefficientGroup& g) {
                   BetaExpectation e;
                   e.homology[0] = g;
                   e.homology[1] = g;
                   e.cohomology[0] = g;
                   e.cohomology[1] = g;
                   zero_through(e, 2);
                   e.eta_value = g.is_trivial() ? -1 : 1;
                   return e;
                 }});

  out.push_back({"circle_arc_pair", "(circle, closed arc [0, 1/4])", true, 3,
                 "long sequence of the pair collapses onto the absolute circle",
                 [](int depth) { return build_circle_arc_pair(depth); },
                 [](const CoefficientGroup& g) {
                   BetaExpectation e;
                   e.homology[1] = g;
                   e.cohomology[1] = g;
                   zero_through(e, 2);
                   e.eta_value = g.is_trivial() ? -1 : 1;
                   return e;
                 }});

  out.push_back({"wedge", "wedge of two circles (finite model)", true, 3,
                 "two hollow triangles joined at a vertex",
                 [](int depth) { return build_wedge(depth); },
                 [](const CoefficientGroup& g) {
                   BetaExpectation e;
                   e.homology[0] = g;
                   e.homology[1] = direct_power(g, 2);
                   e.cohomology[0] = g;
                   e.cohomology[1] = direct_power(g, 2);
                   zero_through(e, 2);
                   e.eta_value = g.is_trivial() ? -1 : 1;
                   return e;
                 }});

  out.push_back({"projective_plane", "projective plane (finite facet-dual model)", true, 3,
                 "minimal six-vertex triangulation; universal coefficients",
                 [](int depth) { return build_projective_plane(depth); },
                 [](const CoefficientGroup& g) {
                   BetaExpectation e;
                   e.homology[0] = g;
                   e.homology[1] = mod_two_quotient(g);
                   e.homology[2] = two_torsion(g);
                   e.cohomology[0] = g;
                   e.cohomology[1] = two_torsion(g);
                   e.cohomology[2] = mod_two_quotient(g);
                   zero_through(e, 2);
                   if (!mod_two_quotient(g).is_trivial())
                     e.eta_value = 2;
                   else if (!two_torsion(g).is_trivial())
                     e.eta_value = 1;
                   else if (!g.is_trivial())
                     e.eta_value = 0;
                   else
                     e.eta_value = -1;
                   return e;
                 }});

  return out;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> registry = build_registry();
  return registry;
}

const Fixture& fixture(const std::string& name) {
  for (const Fixture& f : fixtures())
    if (f.name == name) return f;
  throw Error("unknown fixture: " + name);
}

TripleSystem interval_triple(int depth) {
  Region x = Region::of(Interval::closed(Rat(0), Rat(1)));
  Region ends = Region::of(Interval::point(Rat(0))).unite(Region::of(Interval::point(Rat(1))));
  Region origin = Region::of(Interval::point(Rat(0)));
  CoverSystem on_xa =
      interval_chain_on(BoxSpace::make(x, ends, origin), "interval_triple/xa", true, depth);
  CoverSystem on_xb = interval_chain_on(BoxSpace::make(x, origin), "interval_triple/xb", true,
                                        depth);
  return make_triple_system(std::move(on_xa), std::move(on_xb));
}

}  // namespace fcech
