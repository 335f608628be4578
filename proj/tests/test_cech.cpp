#include <doctest.h>

#include <vector>

#include "fcech/backends.hpp"
#include "fcech/cech.hpp"
#include "fcech/errors.hpp"

using namespace fcech;

namespace {

Rat rat(long n, long d = 1) { return make_rat(n, d); }

// Chain of standard circle covers read against the pair (S^1, A) for a
// closed arc A = [0, 1/4].
CoverSystem circle_arc_system(int depth) {
  CircleSpace space = CircleSpace::make(CircleSet::full(),
                                        CircleSet::arc(rat(0), true, rat(1, 4), true));
  std::vector<Cover> chain;
  std::vector<std::vector<int>> projections;
  for (int j = 0; j < depth; ++j) {
    int m = 3 << j;
    chain.push_back(circle_cover("circle/arc@" + std::to_string(m), space,
                                 standard_circle_elements(j)));
    if (j) {
      std::vector<int> p(static_cast<size_t>(m));
      for (int i = 0; i < m; ++i) p[static_cast<size_t>(i)] = i / 2;
      projections.push_back(std::move(p));
    }
  }
  return make_system("circle/arc", true, std::move(chain), projections);
}

// Standard interval chains read against (X, A, B) = ([0,1], {0,1}, {0}) or a
// caller-chosen pair of subspace regions.
CoverSystem interval_system_on(const BoxSpace& space, const std::string& name, int depth) {
  std::vector<Cover> chain;
  std::vector<std::vector<int>> projections;
  for (int j = 0; j < depth; ++j) {
    long m = (1L << j) + 1;
    chain.push_back(box_cover(name + "@" + std::to_string(m), space,
                              standard_interval_elements(j)));
    if (j) {
      std::vector<int> p(static_cast<size_t>(m));
      for (long i = 0; i < m; ++i)
        p[static_cast<size_t>(i)] = static_cast<int>((i + (i % 2)) / 2);
      projections.push_back(std::move(p));
    }
  }
  return make_system(name, true, std::move(chain), projections);
}

CoverSystem empty_space_system(int depth) {
  FiniteSpace space = FiniteSpace::make(0, {});
  std::vector<Cover> chain;
  std::vector<std::vector<int>> projections;
  for (int j = 0; j < depth; ++j) {
    chain.push_back(finite_cover("empty@" + std::to_string(j), space, {}));
    if (j) projections.push_back({});
  }
  return make_system("empty", true, std::move(chain), projections);
}

}  // namespace

TEST_SUITE("cech") {

TEST_CASE("trace systems identify the sub-nerves") {
  CoverSystem pair = standard_chain(StandardKind::interval_pair, 3);
  TraceSystem tr = trace_system(pair);
  CHECK(tr.system.chain.size() == 3);
  CHECK(tr.system.space == "interval_pair|A");
  CHECK(tr.retained[0] == std::vector<int>{0, 1});
  CHECK(tr.retained[1] == std::vector<int>{0, 2});
  CHECK(tr.retained[2] == std::vector<int>{0, 4});
  // A = {0, 1}: each trace nerve is two isolated vertices.
  for (const Cover& c : tr.system.chain)
    CHECK(nerve(c).total == Complex::from_simplices({{0}, {1}}));

  CoverSystem arc = circle_arc_system(3);
  TraceSystem arc_tr = trace_system(arc);
  CHECK(arc_tr.retained[0] == std::vector<int>{0, 2});
  CHECK(arc_tr.retained[1] == std::vector<int>{0, 1, 5});
  // A is a closed arc: its trace limits to a single component.
  LimitReport h0 = functional_homology(arc_tr.system, FgAbGroup::free(1), 0);
  CHECK(h0.limit == FgAbGroup::free(1));
  CHECK(h0.stabilized);
}

TEST_CASE("functional homology and cohomology on the standard chains") {
  CoefficientGroup z = FgAbGroup::free(1);
  CoefficientGroup z6 = FgAbGroup::cyclic(6);
  CoefficientGroup mixed = FgAbGroup::from_parts(1, {2});  // Z + Z/2

  CoverSystem point = standard_chain(StandardKind::point, 3);
  CHECK(functional_homology(point, z6, 0).limit == z6);
  CHECK(functional_homology(point, z6, 0).stabilized);
  CHECK(functional_cohomology(point, z6, 0).limit == z6);
  CHECK(functional_homology(point, z6, 1).limit.is_trivial());
  CHECK(functional_cohomology(point, z6, 2).limit.is_trivial());

  CoverSystem circle = standard_chain(StandardKind::circle, 3);
  LimitReport h1 = functional_homology(circle, z, 1);
  CHECK(h1.limit == FgAbGroup::free(1));
  CHECK(h1.stabilized);
  CHECK(h1.stages == std::vector<FgAbGroup>(3, FgAbGroup::free(1)));
  LimitReport c1 = functional_cohomology(circle, z, 1);
  CHECK(c1.limit == FgAbGroup::free(1));
  CHECK(c1.stabilized);
  CHECK(functional_homology(circle, z, 2).limit.is_trivial());
  CHECK(functional_homology(circle, z, 0).limit == FgAbGroup::free(1));
  CHECK(functional_homology(circle, mixed, 1).limit == mixed);
  CHECK(functional_cohomology(circle, mixed, 1).limit == mixed);

  CoverSystem interval = standard_chain(StandardKind::interval, 3);
  CHECK(functional_cohomology(interval, z, 1).limit.is_trivial());
  CHECK(functional_homology(interval, z, 0).limit == FgAbGroup::free(1));

  // A window longer than the chain cannot certify stabilization.
  CHECK(!functional_homology(circle, z, 1, 5).stabilized);
}

TEST_CASE("induced limit maps: identity, windings, functor laws") {
  CoefficientGroup z = FgAbGroup::free(1);
  CircleSpace circle = full_circle_space();
  CoverSystem target = standard_chain(StandardKind::circle, 3);

  CircleMap ident(circle, circle, Int(1), rat(0));
  CHECK(induced_limit_map(ident, target, z, 1, Variance::homology).is_identity());
  CHECK(induced_limit_map(ident, target, z, 0, Variance::homology).is_identity());
  CHECK(induced_limit_map(ident, target, z, 1, Variance::cohomology).is_identity());

  // Degree-2 winding, literal pulled-back chain: stage inclusions are
  // isomorphisms in pulled coordinates.
  CircleMap doubling(circle, circle, Int(2), rat(0));
  GroupHom literal = induced_limit_map(doubling, target, z, 1, Variance::homology);
  CHECK(is_isomorphism(literal));

  // Against the standard source chain the winding acts as multiplication
  // by +-2 on H_1 and on H^1.
  CoverSystem fine_src = circle_chain_range(1, 3);
  GroupHom h = induced_limit_map(doubling, fine_src, target, z, 1, Variance::homology);
  CHECK(h.source() == FgAbGroup::free(1));
  CHECK(h.target() == FgAbGroup::free(1));
  CHECK(abs(h.matrix().at(0, 0)) == 2);
  GroupHom hc = induced_limit_map(doubling, fine_src, target, z, 1, Variance::cohomology);
  CHECK(abs(hc.matrix().at(0, 0)) == 2);

  // Composition law: two windings of degree 2 compose to one of degree 4.
  CoverSystem finer_src = circle_chain_range(2, 3);
  CircleMap quadrupling(circle, circle, Int(4), rat(0));
  GroupHom f_h = induced_limit_map(doubling, finer_src, fine_src, z, 1, Variance::homology);
  GroupHom g_h = h;
  GroupHom gf_h = induced_limit_map(quadrupling, finer_src, target, z, 1, Variance::homology);
  CHECK(compose(g_h, f_h) == gf_h);
  GroupHom f_c = induced_limit_map(doubling, finer_src, fine_src, z, 1, Variance::cohomology);
  GroupHom gf_c = induced_limit_map(quadrupling, finer_src, target, z, 1, Variance::cohomology);
  CHECK(compose(f_c, hc) == gf_c);

  // Inclusion of a point into the circle is an isomorphism on H_0.
  BoxSpace origin = BoxSpace::whole(Region::of(Interval::point(rat(0))));
  BoxToCircleMap at_zero(origin, circle, rat(1), rat(0));
  GroupHom h0 = induced_limit_map(at_zero, target, z, 0, Variance::homology);
  CHECK(is_isomorphism(h0));
}

TEST_CASE("limit connecting maps") {
  CoefficientGroup z = FgAbGroup::free(1);

  CoverSystem pair = standard_chain(StandardKind::interval_pair, 3);
  GroupHom d = limit_connecting(pair, z, 1, Variance::homology);
  CHECK(d.source() == FgAbGroup::free(1));
  CHECK(d.target() == FgAbGroup::free(2));
  // The generator maps to the difference of the two endpoint classes.
  CHECK(abs(d.matrix().at(0, 0)) == 1);
  CHECK(abs(d.matrix().at(1, 0)) == 1);
  CHECK(d.matrix().at(0, 0) + d.matrix().at(1, 0) == 0);

  GroupHom delta = limit_connecting(pair, z, 0, Variance::cohomology);
  CHECK(delta.source() == FgAbGroup::free(2));
  CHECK(delta.target() == FgAbGroup::free(1));
  CHECK(abs(delta.matrix().at(0, 0)) == 1);
  CHECK(abs(delta.matrix().at(0, 1)) == 1);
  CHECK(delta.matrix().at(0, 0) + delta.matrix().at(0, 1) == 0);

  // A empty: the connecting map lands in the trivial group.
  CoverSystem interval = standard_chain(StandardKind::interval, 2);
  GroupHom zero = limit_connecting(interval, z, 1, Variance::homology);
  CHECK(zero.target().is_trivial());
  CHECK(zero.is_zero());

  // A = X on a point: every relative group is trivial.
  FiniteSpace self_pair = FiniteSpace::make(1, {0});
  std::vector<Cover> chain;
  std::vector<std::vector<int>> projections;
  for (int j = 0; j < 3; ++j) {
    chain.push_back(finite_cover("pt", self_pair, {{0}}));
    if (j) projections.push_back({0});
  }
  CoverSystem self = make_system("point_pair", true, std::move(chain), projections);
  GroupHom self_d = limit_connecting(self, z, 1, Variance::homology);
  CHECK(self_d.source().is_trivial());
  CHECK(self_d.is_zero());
}

TEST_CASE("pair sequence checks") {
  CoefficientGroup z = FgAbGroup::free(1);
  CoefficientGroup z2 = FgAbGroup::cyclic(2);

  CoverSystem pair = standard_chain(StandardKind::interval_pair, 3);
  PairSequenceVerdict v = pair_sequence_check(pair, z, 0, 2);
  CHECK(v.pass);
  CHECK(v.homology.order_two);
  CHECK(v.cohomology.exact);
  CHECK(v.all_stabilized);
  REQUIRE(!v.notes.empty());
  CHECK(v.notes.front().find("finite-chain artifact") != std::string::npos);

  PairSequenceVerdict arc = pair_sequence_check(circle_arc_system(3), z2, 0, 2);
  CHECK(arc.pass);
  CHECK(arc.all_stabilized);

  PairSequenceVerdict absolute = pair_sequence_check(standard_chain(StandardKind::interval, 2),
                                                     z, 0, 1);
  CHECK(absolute.pass);
}

TEST_CASE("triple sequence checks") {
  CoefficientGroup z = FgAbGroup::free(1);
  CoefficientGroup z2 = FgAbGroup::cyclic(2);

  Region x = Region::of(Interval::closed(rat(0), rat(1)));
  Region ends = Region::of(Interval::point(rat(0)))
                    .unite(Region::of(Interval::point(rat(1))));
  Region origin = Region::of(Interval::point(rat(0)));

  CoverSystem on_xa = interval_system_on(BoxSpace::make(x, ends, origin), "triple/xa", 3);
  CoverSystem on_xb = interval_system_on(BoxSpace::make(x, origin), "triple/xb", 3);
  TripleSystem triple = make_triple_system(on_xa, on_xb);
  TripleVerdict v = triple_sequence_check(triple, z, 0, 2);
  CHECK(v.pass);
  CHECK(v.cohomology.exact);
  CHECK(v.all_stabilized);
  CHECK(triple_sequence_check(triple, z2, 0, 2).pass);

  // B empty reduces to the pair sequence of (X, A).
  CoverSystem on_x = interval_system_on(BoxSpace::whole(x), "triple/x", 3);
  TripleVerdict degenerate =
      triple_sequence_check(make_triple_system(interval_system_on(BoxSpace::make(x, ends), "xa", 3),
                                               on_x),
                            z, 0, 2);
  CHECK(degenerate.pass);

  // B = A kills the relative groups of (A, B).
  CoverSystem ends_twice = interval_system_on(BoxSpace::make(x, ends, ends), "xaa", 3);
  CoverSystem ends_plain = interval_system_on(BoxSpace::make(x, ends), "xb", 3);
  CHECK(triple_sequence_check(make_triple_system(ends_twice, ends_plain), z, 0, 2).pass);

  // Validation: chains of different lengths or with different elements fail.
  CHECK_THROWS_AS(make_triple_system(interval_system_on(BoxSpace::make(x, ends), "a", 2), on_x),
                  Error);
  CoverSystem shifted = standard_chain(StandardKind::circle, 3);
  CHECK_THROWS_AS(make_triple_system(on_xa, shifted), Error);
}

TEST_CASE("naturality of the connecting maps") {
  CoefficientGroup z = FgAbGroup::free(1);
  CoverSystem pair = standard_chain(StandardKind::interval_pair, 3);
  BoxSpace space = unit_interval_space(true);

  // Identity.
  AffineBoxMap ident(space, space, rat(1), rat(0));
  NaturalityVerdict idv = naturality_check(ident, pair, pair, z, 1);
  CHECK(idv.pass);

  // The reflection x -> 1 - x permutes the standard elements.
  AffineBoxMap flip(space, space, rat(-1), rat(1));
  NaturalityVerdict fv = naturality_check(flip, pair, pair, z, 1);
  CHECK(fv.homology_commutes);
  CHECK(fv.cohomology_commutes);
  CHECK(fv.pass);

  // Point-pair inclusion into the interval pair.
  Region origin = Region::of(Interval::point(rat(0)));
  BoxSpace point_pair = BoxSpace::make(origin, origin);
  std::vector<Cover> chain;
  std::vector<std::vector<int>> projections;
  for (int j = 0; j < 3; ++j) {
    chain.push_back(box_cover("pt", point_pair, {origin}));
    if (j) projections.push_back({0});
  }
  CoverSystem point_sys = make_system("point_pair", true, std::move(chain), projections);
  AffineBoxMap include(point_pair, space, rat(1), rat(0));
  CHECK(naturality_check(include, point_sys, pair, z, 1).pass);
}

TEST_CASE("eta: coefficient of cyclicity") {
  CoefficientGroup z = FgAbGroup::free(1);
  CoefficientGroup z2 = FgAbGroup::cyclic(2);

  EtaResult circle = eta(standard_chain(StandardKind::circle, 3), z);
  CHECK(circle.value == 1);
  CHECK(circle.dimension_bound == 1);
  CHECK(circle.stabilized);
  CHECK(eta(standard_chain(StandardKind::circle, 3), z2).value == 1);

  EtaResult point = eta(standard_chain(StandardKind::point, 3), z);
  CHECK(point.value == 0);
  CHECK(point.stabilized);

  EtaResult interval = eta(standard_chain(StandardKind::interval, 3), z);
  CHECK(interval.value == 0);

  EtaResult empty = eta(empty_space_system(3), z);
  CHECK(empty.value == -1);
  CHECK(empty.dimension_bound == -1);
  CHECK(empty.stabilized);

  // An unreachable window leaves the value as an unstabilized witness.
  EtaResult shallow = eta(standard_chain(StandardKind::circle, 2), z, 5);
  CHECK(shallow.value == 1);
  CHECK(!shallow.stabilized);
}

TEST_CASE("compact comparison against expected tables") {
  CoefficientGroup z = FgAbGroup::free(1);
  CoverSystem circle = standard_chain(StandardKind::circle, 3);

  BetaExpectation expected;
  expected.homology[0] = FgAbGroup::free(1);
  expected.homology[1] = FgAbGroup::free(1);
  expected.cohomology[1] = FgAbGroup::free(1);
  expected.eta_value = 1;
  BetaVerdict ok = compact_beta_check(circle, z, expected);
  CHECK(ok.pass);
  CHECK(ok.rows.size() == 3);
  for (const BetaRow& row : ok.rows) {
    CHECK(row.match);
    CHECK(row.stabilized);
  }

  BetaExpectation wrong = expected;
  wrong.homology[1] = FgAbGroup::cyclic(2);
  BetaVerdict bad = compact_beta_check(circle, z, wrong);
  CHECK(!bad.pass);

  CoverSystem open_sys = circle;
  open_sys.compact = false;
  CHECK_THROWS_AS(compact_beta_check(open_sys, z, expected), NotCompact);
}

TEST_CASE("projection choice and chain extension invariance") {
  CoefficientGroup z = FgAbGroup::free(1);

  // Interval chains with the two valid projection families.
  CoverSystem ceil_sys = standard_chain(StandardKind::interval_pair, 3);
  std::vector<std::vector<int>> floors;
  for (const Refinement& r : ceil_sys.refinements) {
    std::vector<int> p(r.projection.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i / 2);
    floors.push_back(std::move(p));
  }
  CoverSystem floor_sys = make_system(ceil_sys.space, true, ceil_sys.chain, floors);
  for (int n = 0; n <= 1; ++n) {
    LimitReport a = functional_homology(ceil_sys, z, n);
    LimitReport b = functional_homology(floor_sys, z, n);
    CHECK(a.limit == b.limit);
    CHECK(a.stages == b.stages);
    CHECK(a.maps == b.maps);
    CHECK(functional_cohomology(ceil_sys, z, n).maps ==
          functional_cohomology(floor_sys, z, n).maps);
  }

  // Appending a finer stage to a stabilized chain preserves the limits.
  CoverSystem deep = standard_chain(StandardKind::circle, 4);
  CoverSystem shallow = standard_chain(StandardKind::circle, 3);
  for (int n = 0; n <= 1; ++n) {
    CHECK(functional_homology(deep, z, n).limit == functional_homology(shallow, z, n).limit);
    CHECK(functional_cohomology(deep, z, n).limit ==
          functional_cohomology(shallow, z, n).limit);
  }
  CHECK(eta(deep, z).value == eta(shallow, z).value);
}

TEST_CASE("system reports render deterministically") {
  CoefficientGroup z = FgAbGroup::free(1);
  CoverSystem circle = standard_chain(StandardKind::circle, 3);
  SystemReport rep = summarize(circle);
  CHECK(rep.space == "circle");
  CHECK(rep.compact);
  CHECK(rep.stage_sizes == std::vector<int>{3, 6, 12});
  CHECK(rep.stage_dimensions == std::vector<int>{1, 1, 1});

  rep.homology.emplace(1, functional_homology(circle, z, 1));
  rep.cohomology.emplace(1, functional_cohomology(circle, z, 1));
  rep.eta_result = eta(circle, z);
  std::string text = rep.to_string();
  CHECK(text.find("H_1 = Z (stabilized)") != std::string::npos);
  CHECK(text.find("H^1 = Z (stabilized)") != std::string::npos);
  CHECK(text.find("eta = 1") != std::string::npos);
  CHECK(text == rep.to_string());
}

}  // TEST_SUITE
