#include "fcech/cover.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fcech/errors.hpp"

namespace fcech {

bool SpaceOracle::element_contained(int, const SpaceOracle&, int) const {
  throw UnsupportedMap("this oracle cannot certify element containment");
}

std::shared_ptr<const SpaceOracle> SpaceOracle::trace_oracle(const std::vector<int>&) const {
  throw UnsupportedMap("this oracle cannot trace covers onto the subspace");
}

bool SpaceOracle::same_space(const SpaceOracle&) const {
  throw UnsupportedMap("this oracle cannot compare underlying spaces");
}

namespace {

void require_oracle(const Cover& cover) {
  if (!cover.oracle) throw Error("cover '" + cover.name + "' has no oracle");
}

}  // namespace

SimplicialPair nerve(const Cover& cover) {
  require_oracle(cover);
  const SpaceOracle& oracle = *cover.oracle;
  const int n = oracle.element_count();

  std::vector<Simplex> accepted;
  std::vector<Simplex> sub_accepted;

  auto note = [&](const Simplex& s) {
    bool carrier = oracle.nonempty(s);
    if (carrier) {
      accepted.push_back(s);
      if (oracle.meets_sub(s)) sub_accepted.push_back(s);
    } else if (oracle.meets_sub(s)) {
      throw OracleViolation("cover '" + cover.name +
                            "': carrier meets the subspace but is reported empty");
    }
    return carrier;
  };

  std::vector<Simplex> frontier;
  for (int i = 0; i < n; ++i) {
    Simplex s{i};
    if (note(s)) frontier.push_back(std::move(s));
  }

  while (!frontier.empty()) {
    std::set<Simplex> level(frontier.begin(), frontier.end());
    std::vector<Simplex> next;
    for (const Simplex& s : frontier) {
      for (int v = s.back() + 1; v < n; ++v) {
        Simplex candidate = s;
        candidate.push_back(v);
        bool faces_present = true;
        for (size_t drop = 0; drop + 1 < candidate.size(); ++drop) {
          Simplex face = candidate;
          face.erase(face.begin() + static_cast<long>(drop));
          if (!level.count(face)) {
            faces_present = false;
            break;
          }
        }
        if (!faces_present) {
          // A monotone oracle must reject supersets of an empty carrier.
          if (oracle.nonempty(candidate))
            throw OracleViolation("cover '" + cover.name +
                                  "': carrier oracle is not monotone");
          continue;
        }
        if (note(candidate)) next.push_back(std::move(candidate));
      }
    }
    frontier = std::move(next);
  }

  Complex total = Complex::from_simplices(accepted);
  Complex sub = Complex::from_simplices(sub_accepted);
  // The trace predicate must itself be monotone: the closure taken by
  // from_simplices may not add carriers the oracle did not accept.
  std::set<Simplex> flagged(sub_accepted.begin(), sub_accepted.end());
  for (int d = 0; d <= sub.dimension(); ++d)
    for (const Simplex& s : sub.simplices(d))
      if (!flagged.count(s))
        throw OracleViolation("cover '" + cover.name +
                              "': subspace predicate is not monotone");
  return SimplicialPair(std::move(total), std::move(sub));
}

bool validate_refinement(const Refinement& r, std::vector<std::string>* diagnostics) {
  require_oracle(r.fine);
  require_oracle(r.coarse);
  const SpaceOracle& fine = *r.fine.oracle;
  const SpaceOracle& coarse = *r.coarse.oracle;
  if (!fine.supports_containment())
    throw UnsupportedMap("fine cover '" + r.fine.name + "' cannot certify containment");
  if (!fine.same_space(coarse)) {
    if (diagnostics)
      diagnostics->push_back("covers '" + r.fine.name + "' and '" + r.coarse.name +
                             "' describe different space pairs");
    return false;
  }
  if (static_cast<int>(r.projection.size()) != fine.element_count()) {
    if (diagnostics)
      diagnostics->push_back("projection lists " + std::to_string(r.projection.size()) +
                             " entries for " + std::to_string(fine.element_count()) +
                             " fine elements");
    return false;
  }
  bool ok = true;
  for (int i = 0; i < fine.element_count(); ++i) {
    int j = r.projection[i];
    if (j < 0 || j >= coarse.element_count()) {
      ok = false;
      if (diagnostics)
        diagnostics->push_back("fine element " + std::to_string(i) +
                               " projects to out-of-range index " + std::to_string(j));
      continue;
    }
    if (!fine.element_contained(i, coarse, j)) {
      ok = false;
      if (diagnostics)
        diagnostics->push_back("fine element " + std::to_string(i) +
                               " is not contained in coarse element " + std::to_string(j));
    }
  }
  return ok;
}

PairMap projection_map(const Refinement& r) {
  std::vector<std::string> diagnostics;
  if (!validate_refinement(r, &diagnostics)) {
    std::string detail;
    for (const std::string& line : diagnostics) detail += "\n  " + line;
    throw InvalidRefinement("refinement " + r.fine.name + " -> " + r.coarse.name +
                            " failed certification:" + detail);
  }
  SimplicialPair source = nerve(r.fine);
  SimplicialPair target = nerve(r.coarse);
  std::map<int, int> vertex_map;
  for (size_t i = 0; i < r.projection.size(); ++i)
    vertex_map[static_cast<int>(i)] = r.projection[i];
  return PairMap(std::move(source), std::move(target), std::move(vertex_map));
}

TracedCover trace_cover(const Cover& cover) {
  require_oracle(cover);
  const SpaceOracle& oracle = *cover.oracle;
  std::vector<int> retained;
  for (int i = 0; i < oracle.element_count(); ++i)
    if (oracle.meets_sub({i})) retained.push_back(i);
  Cover traced{cover.name + "|A", oracle.trace_oracle(retained)};
  return TracedCover{std::move(traced), std::move(retained)};
}

PullbackResult pullback_cover(const MapHandle& f, const Cover& target_cover) {
  require_oracle(target_cover);
  TracedCover traced = f.pullback(target_cover);
  SimplicialPair source = nerve(traced.cover);
  SimplicialPair target = nerve(target_cover);
  std::map<int, int> vertex_map;
  for (size_t i = 0; i < traced.retained.size(); ++i)
    vertex_map[static_cast<int>(i)] = traced.retained[i];
  PairMap inclusion(std::move(source), std::move(target), std::move(vertex_map));
  return PullbackResult{std::move(traced), std::move(inclusion)};
}

CoverSystem make_system(std::string space, bool compact, std::vector<Cover> chain,
                        const std::vector<std::vector<int>>& projections) {
  if (chain.empty()) throw Error("a cover system needs at least one cover");
  if (projections.size() + 1 != chain.size())
    throw Error("a chain of " + std::to_string(chain.size()) + " covers needs " +
                std::to_string(chain.size() - 1) + " projections");
  CoverSystem sys;
  sys.space = std::move(space);
  sys.compact = compact;
  sys.chain = std::move(chain);
  for (size_t i = 0; i < projections.size(); ++i) {
    Refinement r{sys.chain[i + 1], sys.chain[i], projections[i]};
    std::vector<std::string> diagnostics;
    if (!validate_refinement(r, &diagnostics)) {
      std::string detail;
      for (const std::string& line : diagnostics) detail += "\n  " + line;
      throw InvalidRefinement("stage " + std::to_string(i + 1) + " -> " +
                              std::to_string(i) + " of system '" + sys.space +
                              "' failed certification:" + detail);
    }
    sys.refinements.push_back(std::move(r));
  }
  return sys;
}

}  // namespace fcech
