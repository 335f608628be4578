#include "fcech/cech.hpp"

#include <algorithm>
#include <utility>

#include "fcech/errors.hpp"

namespace fcech {

namespace {

Complex rename_complex(const Complex& c, const std::vector<int>& label) {
  std::vector<Simplex> out;
  for (int n = 0; n <= c.dimension(); ++n)
    for (const Simplex& s : c.simplices(n)) {
      Simplex renamed;
      renamed.reserve(s.size());
      for (int v : s) renamed.push_back(label.at(static_cast<std::size_t>(v)));
      out.push_back(std::move(renamed));
    }
  return Complex::from_simplices(out);
}

std::map<int, int> projection_vertex_map(const std::vector<int>& projection) {
  std::map<int, int> vm;
  for (std::size_t i = 0; i < projection.size(); ++i) vm[static_cast<int>(i)] = projection[i];
  return vm;
}

std::map<int, int> identity_vertex_map(const Complex& c) {
  std::map<int, int> vm;
  for (int v : c.vertices()) vm[v] = v;
  return vm;
}

// Nerves of every stage plus the projection vertex maps between consecutive
// stages (position i maps stage i+1 to stage i).
struct StageData {
  std::vector<SimplicialPair> pairs;
  std::vector<std::map<int, int>> vms;
};

StageData relative_stages(const CoverSystem& sys) {
  StageData d;
  d.pairs.reserve(sys.chain.size());
  for (const Cover& c : sys.chain) d.pairs.push_back(nerve(c));
  d.vms.reserve(sys.refinements.size());
  for (const Refinement& r : sys.refinements) d.vms.push_back(projection_vertex_map(r.projection));
  return d;
}

StageData absolutize(StageData d) {
  for (SimplicialPair& p : d.pairs) p = SimplicialPair(p.total, Complex());
  return d;
}

GroupHom bonding(const StageData& d, std::size_t i, const CoefficientGroup& g, int n, Variance v) {
  PairMap pm(d.pairs[i + 1], d.pairs[i], d.vms[i]);
  return induced(pm, g, n, v);
}

LimitReport stage_limit(const StageData& d, const CoefficientGroup& g, int n, Variance v,
                        int window) {
  std::vector<FgAbGroup> groups;
  groups.reserve(d.pairs.size());
  for (const SimplicialPair& p : d.pairs)
    groups.push_back(v == Variance::homology ? homology(p, g, n) : cohomology(p, g, n));
  std::vector<GroupHom> maps;
  maps.reserve(d.vms.size());
  for (std::size_t i = 0; i < d.vms.size(); ++i) maps.push_back(bonding(d, i, g, n, v));
  return finite_chain_limit(std::move(groups), std::move(maps),
                            v == Variance::homology ? ChainDirection::inverse
                                                    : ChainDirection::direct,
                            window);
}

// Position of `value` in a sorted index list; -1 if absent.
int position_of(const std::vector<int>& sorted, int value) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), value);
  if (it == sorted.end() || *it != value) return -1;
  return static_cast<int>(it - sorted.begin());
}

void check_ladder(const std::vector<GroupHom>& rungs, const StageData& src, const StageData& tgt,
                  const CoefficientGroup& g, int n, Variance v, const std::string& what) {
  for (std::size_t i = 0; i + 1 < rungs.size(); ++i) {
    GroupHom ps = bonding(src, i, g, n, v);
    GroupHom pt = bonding(tgt, i, g, n, v);
    bool ok = v == Variance::homology
                  ? compose(rungs[i], ps) == compose(pt, rungs[i + 1])
                  : compose(rungs[i + 1], pt) == compose(ps, rungs[i]);
    if (!ok)
      throw LadderBroken("induced-map ladder fails between stages " + std::to_string(i) + " and " +
                         std::to_string(i + 1) + " at degree " + std::to_string(n) + " for " +
                         what);
  }
}

}  // namespace

TraceSystem trace_system(const CoverSystem& sys) {
  std::vector<TracedCover> traced;
  traced.reserve(sys.chain.size());
  for (const Cover& c : sys.chain) {
    traced.push_back(trace_cover(c));
    const TracedCover& t = traced.back();
    // The retained-index identification must carry the trace nerve onto the
    // sub-nerve of the original stage nerve.
    if (rename_complex(nerve(t.cover).total, t.retained) != nerve(c).sub)
      throw Error("internal: trace nerve does not match the sub-nerve of " + c.name);
  }

  std::vector<std::vector<int>> projections;
  projections.reserve(sys.refinements.size());
  for (std::size_t i = 0; i + 1 < traced.size(); ++i) {
    const TracedCover& fine = traced[i + 1];
    const TracedCover& coarse = traced[i];
    const std::vector<int>& p = sys.refinements[i].projection;
    std::vector<int> q(fine.retained.size());
    for (std::size_t j = 0; j < fine.retained.size(); ++j) {
      int pos = position_of(coarse.retained, p[static_cast<std::size_t>(fine.retained[j])]);
      if (pos < 0)
        throw Error("internal: projected trace element lost its subspace incidence at stage " +
                    std::to_string(i));
      q[j] = pos;
    }
    projections.push_back(std::move(q));
  }

  TraceSystem out;
  std::vector<Cover> covers;
  covers.reserve(traced.size());
  out.retained.reserve(traced.size());
  for (TracedCover& t : traced) {
    covers.push_back(std::move(t.cover));
    out.retained.push_back(std::move(t.retained));
  }
  out.system = make_system(sys.space + "|A", sys.compact, std::move(covers), projections);
  return out;
}

LimitReport functional_homology(const CoverSystem& sys, const CoefficientGroup& g, int n,
                                int window) {
  return stage_limit(relative_stages(sys), g, n, Variance::homology, window);
}

LimitReport functional_cohomology(const CoverSystem& sys, const CoefficientGroup& g, int n,
                                  int window) {
  return stage_limit(relative_stages(sys), g, n, Variance::cohomology, window);
}

PulledSystem pullback_system(const MapHandle& f, const CoverSystem& target_sys) {
  PulledSystem out;
  std::vector<TracedCover> pulled;
  pulled.reserve(target_sys.chain.size());
  for (const Cover& c : target_sys.chain) {
    PullbackResult r = pullback_cover(f, c);
    pulled.push_back(std::move(r.traced));
    out.inclusions.push_back(std::move(r.inclusion));
  }

  std::vector<std::vector<int>> projections;
  projections.reserve(target_sys.refinements.size());
  for (std::size_t i = 0; i + 1 < pulled.size(); ++i) {
    const TracedCover& fine = pulled[i + 1];
    const TracedCover& coarse = pulled[i];
    const std::vector<int>& p = target_sys.refinements[i].projection;
    std::vector<int> q(fine.retained.size());
    for (std::size_t j = 0; j < fine.retained.size(); ++j) {
      // A nonempty preimage of a fine element sits inside the preimage of its
      // coarse container, which is then nonempty as well.
      int pos = position_of(coarse.retained, p[static_cast<std::size_t>(fine.retained[j])]);
      if (pos < 0)
        throw Error("internal: pulled-back cover lost a coarse element at stage " +
                    std::to_string(i));
      q[j] = pos;
    }
    projections.push_back(std::move(q));
  }

  std::vector<Cover> covers;
  covers.reserve(pulled.size());
  out.retained.reserve(pulled.size());
  for (TracedCover& t : pulled) {
    covers.push_back(std::move(t.cover));
    out.retained.push_back(std::move(t.retained));
  }
  // Compactness of the source space is not derivable from the map handle.
  out.system =
      make_system("pullback(" + target_sys.space + ")", false, std::move(covers), projections);
  return out;
}

GroupHom induced_limit_map(const MapHandle& f, const CoverSystem& target_sys,
                           const CoefficientGroup& g, int n, Variance variance) {
  PulledSystem pulled = pullback_system(f, target_sys);
  StageData src = relative_stages(pulled.system);
  StageData tgt = relative_stages(target_sys);
  std::vector<GroupHom> rungs;
  rungs.reserve(pulled.inclusions.size());
  for (const PairMap& inc : pulled.inclusions) rungs.push_back(induced(inc, g, n, variance));
  check_ladder(rungs, src, tgt, g, n, variance, f.describe());
  return rungs.back();
}

GroupHom induced_limit_map(const MapHandle& f, const CoverSystem& source_sys,
                           const CoverSystem& target_sys, const CoefficientGroup& g, int n,
                           Variance variance) {
  if (source_sys.chain.size() != target_sys.chain.size())
    throw Error("source and target systems must have the same number of stages");

  PulledSystem pulled = pullback_system(f, target_sys);
  StageData src = relative_stages(source_sys);
  StageData tgt = relative_stages(target_sys);

  std::vector<GroupHom> rungs;
  rungs.reserve(source_sys.chain.size());
  for (std::size_t i = 0; i < source_sys.chain.size(); ++i) {
    const SpaceOracle& so = *source_sys.chain[i].oracle;
    const SpaceOracle& po = *pulled.system.chain[i].oracle;
    if (!so.supports_containment())
      throw UnsupportedMap("source cover cannot certify containment: " + so.describe());
    std::vector<int> q(static_cast<std::size_t>(so.element_count()));
    for (int j = 0; j < so.element_count(); ++j) {
      int found = -1;
      for (int k = 0; k < po.element_count() && found < 0; ++k)
        if (so.element_contained(j, po, k)) found = k;
      if (found < 0)
        throw Error("stage " + std::to_string(i) + ": source element " + std::to_string(j) +
                    " is not contained in any pulled-back element of " + f.describe());
      q[static_cast<std::size_t>(j)] = found;
    }
    PairMap to_pulled = projection_map({source_sys.chain[i], pulled.system.chain[i], q});
    GroupHom through = induced(to_pulled, g, n, variance);
    GroupHom inc = induced(pulled.inclusions[i], g, n, variance);
    rungs.push_back(variance == Variance::homology ? compose(inc, through)
                                                   : compose(through, inc));
  }
  check_ladder(rungs, src, tgt, g, n, variance, f.describe());
  return rungs.back();
}

GroupHom limit_connecting(const CoverSystem& sys, const CoefficientGroup& g, int n,
                          Variance variance) {
  TraceSystem tr = trace_system(sys);
  StageData rel = relative_stages(sys);
  StageData tra = absolutize(relative_stages(tr.system));
  const std::size_t stages = sys.chain.size();

  std::vector<GroupHom> bond;
  bond.reserve(stages);
  for (std::size_t i = 0; i < stages; ++i) {
    GroupHom delta = connecting_delta(rel.pairs[i], g, n, variance);
    // Renaming of the sub-nerve onto the trace nerve (vertex -> position).
    std::map<int, int> inv;
    for (std::size_t t = 0; t < tr.retained[i].size(); ++t)
      inv[tr.retained[i][t]] = static_cast<int>(t);
    SimplicialPair sub_abs(rel.pairs[i].sub, Complex());
    PairMap ren(sub_abs, tra.pairs[i], inv);
    if (variance == Variance::homology) {
      GroupHom phi = induced(ren, g, n - 1, Variance::homology);
      bond.push_back(compose(phi, delta));
    } else {
      GroupHom phi_star = induced(ren, g, n, Variance::cohomology);
      bond.push_back(compose(delta, phi_star));
    }
  }

  for (std::size_t i = 0; i + 1 < stages; ++i) {
    bool ok;
    if (variance == Variance::homology) {
      GroupHom p_pair = bonding(rel, i, g, n, Variance::homology);
      GroupHom p_trace = bonding(tra, i, g, n - 1, Variance::homology);
      ok = compose(bond[i], p_pair) == compose(p_trace, bond[i + 1]);
    } else {
      GroupHom q_trace = bonding(tra, i, g, n, Variance::cohomology);
      GroupHom q_pair = bonding(rel, i, g, n + 1, Variance::cohomology);
      ok = compose(bond[i + 1], q_trace) == compose(q_pair, bond[i]);
    }
    if (!ok)
      throw RectangleBroken("connecting map fails to commute with the projection between stages " +
                            std::to_string(i) + " and " + std::to_string(i + 1) + " at degree " +
                            std::to_string(n));
  }
  return bond.back();
}

PairSequenceVerdict pair_sequence_check(const CoverSystem& sys, const CoefficientGroup& g, int lo,
                                        int hi, int window) {
  if (lo < 0 || hi < lo) throw Error("bad degree window");
  StageData rel = relative_stages(sys);
  StageData abs = absolutize(rel);
  StageData tra = absolutize(relative_stages(trace_system(sys).system));

  PairSequenceVerdict v;
  const SimplicialPair& finest = rel.pairs.back();
  LongSequence hom_seq = pair_long_sequence(finest, g, lo, hi, Variance::homology);
  v.homology = check_sequence(hom_seq.maps, hom_seq.labels);
  LongSequence coh_seq = pair_long_sequence(finest, g, lo, hi, Variance::cohomology);
  v.cohomology = check_sequence(coh_seq.maps, coh_seq.labels);
  v.pass = v.homology.order_two && v.cohomology.exact;

  bool stab = true;
  for (int n = lo; n <= hi && stab; ++n)
    for (const StageData* d : {&rel, &abs, &tra}) {
      stab = stab && stage_limit(*d, g, n, Variance::homology, window).stabilized;
      stab = stab && stage_limit(*d, g, n, Variance::cohomology, window).stabilized;
    }
  v.all_stabilized = stab;
  if (v.homology.exact)
    v.notes.push_back(
        "homology sequence is exact on this finite chain "
        "(finite-chain artifact; only order two is guaranteed)");
  if (!v.all_stabilized)
    v.notes.push_back("some contributing groups did not stabilize over the window");
  return v;
}

TripleSystem make_triple_system(CoverSystem on_xa, CoverSystem on_xb) {
  if (on_xa.chain.empty() || on_xa.chain.size() != on_xb.chain.size())
    throw Error("triple systems need equal-length nonempty chains");
  for (std::size_t i = 0; i < on_xa.chain.size(); ++i) {
    const SpaceOracle& a = *on_xa.chain[i].oracle;
    const SpaceOracle& b = *on_xb.chain[i].oracle;
    if (a.element_count() != b.element_count())
      throw Error("triple stage " + std::to_string(i) + ": covers differ in size");
    if (!a.supports_containment() || !b.supports_containment())
      throw UnsupportedMap("triple systems need containment-certifying covers");
    for (int e = 0; e < a.element_count(); ++e)
      if (!a.element_contained(e, b, e) || !b.element_contained(e, a, e))
        throw Error("triple stage " + std::to_string(i) + ": element " + std::to_string(e) +
                    " differs between the two systems");
    SimplicialPair pa = nerve(on_xa.chain[i]);
    SimplicialPair pb = nerve(on_xb.chain[i]);
    if (pa.total != pb.total)
      throw Error("triple stage " + std::to_string(i) + ": nerves disagree");
    if (!pa.sub.contains_all_of(pb.sub))
      throw Error("triple stage " + std::to_string(i) +
                  ": inner-subspace incidence is not contained in the outer one");
  }
  for (std::size_t i = 0; i + 1 < on_xa.chain.size(); ++i)
    if (on_xa.refinements[i].projection != on_xb.refinements[i].projection)
      throw Error("triple systems must share refinement projections");
  return {std::move(on_xa), std::move(on_xb)};
}

TripleVerdict triple_sequence_check(const TripleSystem& triple, const CoefficientGroup& g, int lo,
                                    int hi, int window) {
  if (lo < 0 || hi < lo) throw Error("bad degree window");
  SimplicialPair pxa = nerve(triple.on_xa.chain.back());
  SimplicialPair pxb = nerve(triple.on_xb.chain.back());
  TracedCover tr = trace_cover(triple.on_xa.chain.back());
  SimplicialPair pab = nerve(tr.cover);  // the pair (A, B) in trace labels

  PairMap jbar(pxb, pxa, identity_vertex_map(pxb.total));  // (X, B) -> (X, A)
  std::map<int, int> rho;
  for (std::size_t t = 0; t < tr.retained.size(); ++t)
    rho[static_cast<int>(t)] = tr.retained[t];
  PairMap ibar(pab, pxb, rho);  // (A, B) -> (X, B)
  SimplicialPair pa_abs(pab.total, Complex());
  PairMap jpp(pa_abs, pab, identity_vertex_map(pab.total));  // A -> (A, B)
  SimplicialPair sub_abs(pxa.sub, Complex());
  std::map<int, int> inv;
  for (std::size_t t = 0; t < tr.retained.size(); ++t)
    inv[tr.retained[t]] = static_cast<int>(t);
  PairMap ren(sub_abs, pa_abs, inv);  // sub-nerve -> trace nerve

  std::vector<GroupHom> maps;
  std::vector<std::string> labels;
  for (int n = lo; n <= hi; ++n) {
    maps.push_back(induced(jbar, g, n, Variance::cohomology));
    labels.push_back("jbar*_" + std::to_string(n));
    maps.push_back(induced(ibar, g, n, Variance::cohomology));
    labels.push_back("ibar*_" + std::to_string(n));
    GroupHom to_trace = induced(jpp, g, n, Variance::cohomology);   // H^n(A,B) -> H^n(A)
    GroupHom phi_star = induced(ren, g, n, Variance::cohomology);   // trace labels -> sub-nerve
    GroupHom delta = connecting_delta(pxa, g, n, Variance::cohomology);
    maps.push_back(compose(delta, compose(phi_star, to_trace)));
    labels.push_back("dbar*_" + std::to_string(n));
  }

  TripleVerdict out;
  out.cohomology = check_sequence(maps, labels);
  out.pass = out.cohomology.exact;

  StageData xa = relative_stages(triple.on_xa);
  StageData xb = relative_stages(triple.on_xb);
  StageData ab = relative_stages(trace_system(triple.on_xa).system);
  bool stab = true;
  for (int n = lo; n <= hi && stab; ++n)
    for (const StageData* d : {&xa, &xb, &ab})
      stab = stab && stage_limit(*d, g, n, Variance::cohomology, window).stabilized;
  out.all_stabilized = stab;
  if (!stab) out.notes.push_back("some contributing groups did not stabilize over the window");
  return out;
}

NaturalityVerdict naturality_check(const MapHandle& f, const CoverSystem& source_sys,
                                   const CoverSystem& target_sys, const CoefficientGroup& g,
                                   int n) {
  TraceSystem tsrc = trace_system(source_sys);
  TraceSystem ttgt = trace_system(target_sys);
  for (const TraceSystem* t : {&tsrc, &ttgt})
    for (const Cover& c : t->system.chain)
      if (!nerve(c).sub.empty())
        throw Error("naturality check requires an empty third region on both sides");

  NaturalityVerdict out;
  std::unique_ptr<MapHandle> fa = f.restrict_to_sub();

  GroupHom f_hom = induced_limit_map(f, source_sys, target_sys, g, n, Variance::homology);
  GroupHom fa_hom =
      induced_limit_map(*fa, tsrc.system, ttgt.system, g, n - 1, Variance::homology);
  GroupHom d_src = limit_connecting(source_sys, g, n, Variance::homology);
  GroupHom d_tgt = limit_connecting(target_sys, g, n, Variance::homology);
  out.homology_commutes = compose(fa_hom, d_src) == compose(d_tgt, f_hom);
  if (!out.homology_commutes)
    out.failures.push_back("homology rectangle fails at degree " + std::to_string(n) + " for " +
                           f.describe());

  GroupHom f_coh = induced_limit_map(f, source_sys, target_sys, g, n, Variance::cohomology);
  GroupHom fa_coh =
      induced_limit_map(*fa, tsrc.system, ttgt.system, g, n - 1, Variance::cohomology);
  GroupHom dl_src = limit_connecting(source_sys, g, n - 1, Variance::cohomology);
  GroupHom dl_tgt = limit_connecting(target_sys, g, n - 1, Variance::cohomology);
  out.cohomology_commutes = compose(f_coh, dl_tgt) == compose(dl_src, fa_coh);
  if (!out.cohomology_commutes)
    out.failures.push_back("cohomology rectangle fails arriving in degree " + std::to_string(n) +
                           " for " + f.describe());

  out.pass = out.homology_commutes && out.cohomology_commutes;
  return out;
}

EtaResult eta(const CoverSystem& sys, const CoefficientGroup& g, int window) {
  StageData abs = absolutize(relative_stages(sys));
  EtaResult out;
  int dmax = -1;
  for (const SimplicialPair& p : abs.pairs) dmax = std::max(dmax, p.total.dimension());
  out.dimension_bound = dmax;
  if (dmax < 0) {
    out.value = -1;
    out.stabilized = true;
    out.note = "empty space";
    return out;
  }

  out.value = -1;
  bool stab = true;
  for (int m = dmax; m >= 0; --m) {
    LimitReport rep = stage_limit(abs, g, m, Variance::cohomology, window);
    stab = stab && rep.stabilized;
    if (!rep.limit.is_trivial()) {
      out.value = m;
      break;
    }
  }
  out.stabilized = stab;
  out.note = "exact relative to the supplied chain; degrees above " + std::to_string(dmax) +
             " vanish because every stage nerve has dimension <= " + std::to_string(dmax);
  if (!stab) out.note += "; some inspected degrees did not stabilize over the window";
  return out;
}

BetaVerdict compact_beta_check(const CoverSystem& sys, const CoefficientGroup& g,
                               const BetaExpectation& expected, int window) {
  if (!sys.compact)
    throw NotCompact("comparison with the compactification requires a compact backend: " +
                     sys.space);
  StageData rel = relative_stages(sys);
  BetaVerdict out;
  auto run = [&](const std::map<int, FgAbGroup>& table, Variance v, const std::string& kind) {
    for (const auto& [degree, group] : table) {
      LimitReport rep = stage_limit(rel, g, degree, v, window);
      BetaRow row{kind, degree, group, rep.limit, rep.stabilized, rep.limit == group};
      out.pass = out.pass && row.match && row.stabilized;
      out.rows.push_back(std::move(row));
    }
  };
  run(expected.homology, Variance::homology, "H");
  run(expected.cohomology, Variance::cohomology, "H^");
  if (expected.eta_value) {
    EtaResult e = eta(sys, g, window);
    bool ok = e.value == *expected.eta_value && e.stabilized;
    out.pass = out.pass && ok;
    out.notes.push_back("eta: expected " + std::to_string(*expected.eta_value) + ", computed " +
                        std::to_string(e.value) + (ok ? "" : " (mismatch)"));
  }
  return out;
}

std::string SystemReport::to_string() const {
  std::string s = "system " + space + (compact ? " (compact)" : " (non-compact)") + "\n";
  s += "stages:";
  for (std::size_t i = 0; i < stage_sizes.size(); ++i)
    s += " " + std::to_string(stage_sizes[i]) + "/dim" + std::to_string(stage_dimensions[i]);
  s += "\n";
  for (const auto& [n, rep] : homology)
    s += "H_" + std::to_string(n) + " = " + rep.to_string() + "\n";
  for (const auto& [n, rep] : cohomology)
    s += "H^" + std::to_string(n) + " = " + rep.to_string() + "\n";
  if (pair_verdict) {
    s += std::string("pair sequence: homology order-two ") +
         (pair_verdict->homology.order_two ? "pass" : "FAIL") + ", cohomology exact " +
         (pair_verdict->cohomology.exact ? "pass" : "FAIL") + "\n";
    for (const std::string& note : pair_verdict->notes) s += "  note: " + note + "\n";
  }
  if (eta_result) {
    s += "eta = " + std::to_string(eta_result->value) + " (dimension bound " +
         std::to_string(eta_result->dimension_bound) +
         (eta_result->stabilized ? ", stabilized)" : ", not stabilized)") + "\n";
  }
  if (beta_verdict) {
    s += std::string("compact comparison: ") + (beta_verdict->pass ? "pass" : "FAIL") + "\n";
    for (const BetaRow& row : beta_verdict->rows)
      s += "  " + std::string(row.kind == "H" ? "H_" : "H^") + std::to_string(row.degree) +
           ": expected " +
           row.expected.to_string() + ", computed " + row.computed.to_string() +
           (row.match ? "" : " (mismatch)") + (row.stabilized ? "" : " (not stabilized)") + "\n";
    for (const std::string& note : beta_verdict->notes) s += "  " + note + "\n";
  }
  return s;
}

SystemReport summarize(const CoverSystem& sys) {
  SystemReport rep;
  rep.space = sys.space;
  rep.compact = sys.compact;
  for (const Cover& c : sys.chain) {
    rep.stage_sizes.push_back(c.size());
    rep.stage_dimensions.push_back(nerve(c).total.dimension());
  }
  return rep;
}

}  // namespace fcech
