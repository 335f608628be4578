#include "fcech/simplicial.hpp"

#include <algorithm>
#include <set>

namespace fcech {

namespace {

Simplex normalized_simplex(Simplex s) {
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] == s[i + 1]) throw Error("simplex with a repeated vertex");
  return s;
}

const std::vector<Simplex>& empty_basis() {
  static const std::vector<Simplex> none;
  return none;
}

// Sign of the permutation sorting `v` (distinct entries), via inversions.
int sorting_sign(const std::vector<int>& v) {
  int inversions = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

Complex Complex::from_simplices(const std::vector<Simplex>& simplices) {
  std::vector<std::set<Simplex>> closure;
  for (const Simplex& raw : simplices) {
    Simplex s = normalized_simplex(raw);
    if (s.empty()) throw Error("empty vertex list is not a simplex");
    int n = static_cast<int>(s.size());
    if (static_cast<int>(closure.size()) < n) closure.resize(static_cast<std::size_t>(n));
    // All nonempty subsets keep the complex downward closed.
    for (unsigned mask = 1; mask < (1u << s.size()); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (mask & (1u << i)) face.push_back(s[i]);
      closure[face.size() - 1].insert(std::move(face));
    }
  }
  Complex c;
  c.by_dim_.reserve(closure.size());
  for (auto& level : closure) c.by_dim_.emplace_back(level.begin(), level.end());
  while (!c.by_dim_.empty() && c.by_dim_.back().empty()) c.by_dim_.pop_back();
  return c;
}

const std::vector<Simplex>& Complex::simplices(int n) const {
  if (n < 0 || n > dimension()) return empty_basis();
  return by_dim_[static_cast<std::size_t>(n)];
}

std::size_t Complex::simplex_count() const {
  std::size_t total = 0;
  for (const auto& level : by_dim_) total += level.size();
  return total;
}

bool Complex::contains(const Simplex& s) const { return index_of(s) >= 0; }

int Complex::index_of(const Simplex& s) const {
  int n = static_cast<int>(s.size()) - 1;
  const auto& level = simplices(n);
  auto it = std::lower_bound(level.begin(), level.end(), s);
  if (it == level.end() || *it != s) return -1;
  return static_cast<int>(it - level.begin());
}

std::vector<int> Complex::vertices() const {
  std::vector<int> out;
  for (const Simplex& s : simplices(0)) out.push_back(s[0]);
  return out;
}

bool Complex::contains_all_of(const Complex& other) const {
  for (int n = 0; n <= other.dimension(); ++n)
    for (const Simplex& s : other.simplices(n))
      if (!contains(s)) return false;
  return true;
}

SimplicialPair::SimplicialPair(Complex total_complex, Complex sub_complex)
    : total(std::move(total_complex)), sub(std::move(sub_complex)) {
  if (!total.contains_all_of(sub)) throw Error("sub is not a subcomplex of total");
}

std::vector<Simplex> SimplicialPair::relative_basis(int n) const {
  std::vector<Simplex> out;
  for (const Simplex& s : total.simplices(n))
    if (!sub.contains(s)) out.push_back(s);
  return out;
}

IntMatrix boundary_matrix(const Complex& x, int n) {
  const auto& rows = x.simplices(n - 1);
  const auto& cols = x.simplices(n);
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  if (n <= 0) return m;  // vertices have no faces
  for (int c = 0; c < m.cols(); ++c) {
    const Simplex& s = cols[static_cast<std::size_t>(c)];
    int sign = 1;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex face;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) face.push_back(s[i]);
      int r = x.index_of(face);
      if (r < 0) throw Error("complex is not downward closed");
      m.at(r, c) += sign;
      sign = -sign;
    }
  }
  return m;
}

IntMatrix relative_boundary_matrix(const SimplicialPair& p, int n) {
  std::vector<Simplex> rows = p.relative_basis(n - 1);
  std::vector<Simplex> cols = p.relative_basis(n);
  std::map<Simplex, int> row_of;
  for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = static_cast<int>(i);

  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols(); ++c) {
    const Simplex& s = cols[static_cast<std::size_t>(c)];
    int sign = 1;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex face;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) face.push_back(s[i]);
      auto it = row_of.find(face);
      if (it != row_of.end()) m.at(it->second, c) += sign;
      sign = -sign;
    }
  }
  return m;
}

ChainComplexRep relative_chain_complex(const SimplicialPair& p) {
  ChainComplexRep rep;
  int dim = p.total.dimension();
  for (int n = 0; n <= dim; ++n) {
    rep.basis.push_back(p.relative_basis(n));
    rep.boundary.push_back(relative_boundary_matrix(p, n));
  }
  return rep;
}

SimplicialMap::SimplicialMap(Complex source, Complex target, std::map<int, int> vertex_map)
    : source_(std::move(source)), target_(std::move(target)), vertex_map_(std::move(vertex_map)) {
  for (int v : source_.vertices()) {
    auto it = vertex_map_.find(v);
    if (it == vertex_map_.end())
      throw NotPairMap("vertex " + std::to_string(v) + " has no image");
    if (!target_.contains({it->second}))
      throw NotPairMap("vertex " + std::to_string(v) + " maps outside the target");
  }
  for (int n = 1; n <= source_.dimension(); ++n)
    for (const Simplex& s : source_.simplices(n)) {
      Simplex img = image_simplex(s);
      if (!target_.contains(img))
        throw NotPairMap("image of a simplex is not a simplex of the target");
    }
}

int SimplicialMap::image_of(int vertex) const {
  auto it = vertex_map_.find(vertex);
  if (it == vertex_map_.end())
    throw NotPairMap("vertex " + std::to_string(vertex) + " has no image");
  return it->second;
}

Simplex SimplicialMap::image_simplex(const Simplex& s) const {
  Simplex img;
  img.reserve(s.size());
  for (int v : s) img.push_back(image_of(v));
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

PairMap::PairMap(SimplicialPair source, SimplicialPair target, std::map<int, int> vertex_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      total_(source_.total, target_.total, std::move(vertex_map)) {
  for (int n = 0; n <= source_.sub.dimension(); ++n)
    for (const Simplex& s : source_.sub.simplices(n))
      if (!target_.sub.contains(total_.image_simplex(s)))
        throw NotPairMap("map does not carry the subcomplex into the target subcomplex");
}

PairMap PairMap::identity(const SimplicialPair& p) {
  std::map<int, int> id;
  for (int v : p.total.vertices()) id[v] = v;
  return PairMap(p, p, std::move(id));
}

IntMatrix chain_map_matrix(const SimplicialMap& f, int n) {
  const auto& cols = f.source().simplices(n);
  const auto& rows = f.target().simplices(n);
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols(); ++c) {
    const Simplex& s = cols[static_cast<std::size_t>(c)];
    std::vector<int> img;
    img.reserve(s.size());
    for (int v : s) img.push_back(f.image_of(v));
    std::set<int> support(img.begin(), img.end());
    if (support.size() != img.size()) continue;  // degenerate image
    Simplex sorted(support.begin(), support.end());
    int r = f.target().index_of(sorted);
    if (r < 0) throw NotPairMap("image of a simplex is not a simplex of the target");
    m.at(r, c) = sorting_sign(img);
  }
  return m;
}

IntMatrix relative_chain_map_matrix(const PairMap& f, int n) {
  std::vector<Simplex> cols = f.source().relative_basis(n);
  std::vector<Simplex> rows = f.target().relative_basis(n);
  std::map<Simplex, int> row_of;
  for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = static_cast<int>(i);

  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols(); ++c) {
    const Simplex& s = cols[static_cast<std::size_t>(c)];
    std::vector<int> img;
    img.reserve(s.size());
    for (int v : s) img.push_back(f.total_map().image_of(v));
    std::set<int> support(img.begin(), img.end());
    if (support.size() != img.size()) continue;
    Simplex sorted(support.begin(), support.end());
    auto it = row_of.find(sorted);
    if (it == row_of.end()) continue;  // image lies in the target subcomplex
    m.at(it->second, c) = sorting_sign(img);
  }
  return m;
}

FgAbGroup homology(const SimplicialPair& p, const CoefficientGroup& g, int n) {
  if (n < 0) return FgAbGroup::trivial();
  return homology_space_of_pair(p, g, n).group();
}

FgAbGroup cohomology(const SimplicialPair& p, const CoefficientGroup& g, int n) {
  if (n < 0) return FgAbGroup::trivial();
  return cohomology_space_of_pair(p, g, n).group();
}

CycleSpace homology_space_of_pair(const SimplicialPair& p, const CoefficientGroup& g, int n) {
  BoundaryPair b{relative_boundary_matrix(p, n + 1), relative_boundary_matrix(p, n)};
  return homology_space(b, g);
}

CycleSpace cohomology_space_of_pair(const SimplicialPair& p, const CoefficientGroup& g, int n) {
  BoundaryPair b{relative_boundary_matrix(p, n).transpose(),
                 relative_boundary_matrix(p, n + 1).transpose()};
  return homology_space(b, g);
}

GroupHom induced(const PairMap& f, const CoefficientGroup& g, int n, Variance variance) {
  if (n < 0) return GroupHom::identity(FgAbGroup::trivial());
  int blocks = g.generator_count();
  if (variance == Variance::homology) {
    CycleSpace src = homology_space_of_pair(f.source(), g, n);
    CycleSpace tgt = homology_space_of_pair(f.target(), g, n);
    IntMatrix blocked = relative_chain_map_matrix(f, n).block_repeat(blocks);
    return hom_from_images(src, tgt,
                           [&](const std::vector<Int>& v) { return blocked.apply(v); });
  }
  CycleSpace src = cohomology_space_of_pair(f.target(), g, n);
  CycleSpace tgt = cohomology_space_of_pair(f.source(), g, n);
  IntMatrix blocked = relative_chain_map_matrix(f, n).transpose().block_repeat(blocks);
  return hom_from_images(src, tgt, [&](const std::vector<Int>& v) { return blocked.apply(v); });
}

bool contiguous(const SimplicialMap& f, const SimplicialMap& g) {
  if (f.source() != g.source() || f.target() != g.target())
    throw ShapeMismatch("contiguity needs maps with the same endpoints");
  for (int n = 0; n <= f.source().dimension(); ++n)
    for (const Simplex& s : f.source().simplices(n)) {
      Simplex a = f.image_simplex(s);
      Simplex b = g.image_simplex(s);
      Simplex u;
      std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
      if (!f.target().contains(u)) return false;
    }
  return true;
}

bool contiguous(const PairMap& f, const PairMap& g) {
  if (!contiguous(f.total_map(), g.total_map())) return false;
  if (f.source().sub != g.source().sub || f.target().sub != g.target().sub)
    throw ShapeMismatch("contiguity needs pair maps with the same endpoints");
  for (int n = 0; n <= f.source().sub.dimension(); ++n)
    for (const Simplex& s : f.source().sub.simplices(n)) {
      Simplex a = f.total_map().image_simplex(s);
      Simplex b = g.total_map().image_simplex(s);
      Simplex u;
      std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
      if (!f.target().sub.contains(u)) return false;
    }
  return true;
}

namespace {

// Positions of the basis elements of `part` inside the basis of `whole` at
// degree n; both are lex sorted, so this is a sublist match.
std::vector<int> basis_positions(const std::vector<Simplex>& part,
                                 const std::vector<Simplex>& whole) {
  std::vector<int> pos;
  pos.reserve(part.size());
  std::size_t j = 0;
  for (const Simplex& s : part) {
    while (j < whole.size() && whole[j] != s) ++j;
    if (j == whole.size()) throw Error("internal: sub-basis is not a sublist");
    pos.push_back(static_cast<int>(j));
    ++j;
  }
  return pos;
}

}  // namespace

GroupHom connecting_delta(const SimplicialPair& p, const CoefficientGroup& g, int n,
                          Variance variance) {
  const std::vector<Int> orders = g.summand_orders();
  const int blocks = g.generator_count();

  if (variance == Variance::homology) {
    // H_n(X, A) -> H_{n-1}(A): lift, boundary, restrict.
    CycleSpace src = homology_space_of_pair(p, g, n);
    SimplicialPair sub_pair(p.sub, Complex());
    CycleSpace tgt = homology_space_of_pair(sub_pair, g, n - 1);

    const auto rel_n = p.relative_basis(n);
    const auto& tot_n = p.total.simplices(n);
    const auto& tot_nm1 = p.total.simplices(n - 1);
    const auto& sub_nm1 = p.sub.simplices(n - 1);
    const std::vector<int> rel_pos = basis_positions(rel_n, tot_n);
    const std::vector<int> sub_pos = basis_positions(sub_nm1, tot_nm1);
    std::vector<bool> is_sub(tot_nm1.size(), false);
    for (int i : sub_pos) is_sub[static_cast<std::size_t>(i)] = true;
    const IntMatrix d_total = boundary_matrix(p.total, n);
    const int rel_count = static_cast<int>(rel_n.size());

    auto image = [&](const std::vector<Int>& z) {
      std::vector<Int> out;
      out.reserve(sub_pos.size() * static_cast<std::size_t>(blocks));
      for (int b = 0; b < blocks; ++b) {
        const Int& m = orders[static_cast<std::size_t>(b)];
        std::vector<Int> lift(tot_n.size(), Int(0));
        for (int i = 0; i < rel_count; ++i)
          lift[static_cast<std::size_t>(rel_pos[static_cast<std::size_t>(i)])] =
              z[static_cast<std::size_t>(b * rel_count + i)];
        std::vector<Int> bnd = d_total.apply(lift);
        for (std::size_t i = 0; i < bnd.size(); ++i) {
          if (is_sub[i]) continue;
          bool vanishes = m == 0 ? bnd[i] == 0 : mod_floor(bnd[i], m) == 0;
          if (!vanishes)
            throw Error("internal: boundary of a relative cycle is not carried by the sub");
        }
        for (int i : sub_pos) out.push_back(bnd[static_cast<std::size_t>(i)]);
      }
      return out;
    };
    return hom_from_images(src, tgt, image);
  }

  // H^n(A) -> H^{n+1}(X, A): extend by zero, coboundary, restrict to
  // relative cochains.
  SimplicialPair sub_pair(p.sub, Complex());
  CycleSpace src = cohomology_space_of_pair(sub_pair, g, n);
  CycleSpace tgt = cohomology_space_of_pair(p, g, n + 1);

  const auto& sub_n = p.sub.simplices(n);
  const auto& tot_n = p.total.simplices(n);
  const auto& tot_np1 = p.total.simplices(n + 1);
  const auto rel_np1 = p.relative_basis(n + 1);
  const std::vector<int> sub_pos = basis_positions(sub_n, tot_n);
  const std::vector<int> rel_pos = basis_positions(rel_np1, tot_np1);
  std::vector<bool> is_rel(tot_np1.size(), false);
  for (int i : rel_pos) is_rel[static_cast<std::size_t>(i)] = true;
  const IntMatrix delta = boundary_matrix(p.total, n + 1).transpose();
  const int sub_count = static_cast<int>(sub_n.size());

  auto image = [&](const std::vector<Int>& phi) {
    std::vector<Int> out;
    out.reserve(rel_pos.size() * static_cast<std::size_t>(blocks));
    for (int b = 0; b < blocks; ++b) {
      const Int& m = orders[static_cast<std::size_t>(b)];
      std::vector<Int> extended(tot_n.size(), Int(0));
      for (int i = 0; i < sub_count; ++i)
        extended[static_cast<std::size_t>(sub_pos[static_cast<std::size_t>(i)])] =
            phi[static_cast<std::size_t>(b * sub_count + i)];
      std::vector<Int> cob = delta.apply(extended);
      for (std::size_t i = 0; i < cob.size(); ++i) {
        if (is_rel[i]) continue;
        bool vanishes = m == 0 ? cob[i] == 0 : mod_floor(cob[i], m) == 0;
        if (!vanishes)
          throw Error("internal: coboundary of an extended cocycle does not vanish on the sub");
      }
      for (int i : rel_pos) out.push_back(cob[static_cast<std::size_t>(i)]);
    }
    return out;
  };
  return hom_from_images(src, tgt, image);
}

LongSequence pair_long_sequence(const SimplicialPair& p, const CoefficientGroup& g, int lo, int hi,
                                Variance variance) {
  if (lo < 0 || hi < lo) throw Error("bad degree window");
  SimplicialPair sub_abs(p.sub, Complex());
  SimplicialPair tot_abs(p.total, Complex());
  std::map<int, int> sub_id, tot_id;
  for (int v : p.sub.vertices()) sub_id[v] = v;
  for (int v : p.total.vertices()) tot_id[v] = v;
  PairMap incl(sub_abs, tot_abs, sub_id);
  PairMap quot(tot_abs, p, tot_id);

  LongSequence seq;
  if (variance == Variance::homology) {
    for (int n = hi; n >= lo; --n) {
      seq.maps.push_back(induced(incl, g, n, Variance::homology));
      seq.labels.push_back("i_" + std::to_string(n));
      seq.maps.push_back(induced(quot, g, n, Variance::homology));
      seq.labels.push_back("j_" + std::to_string(n));
      seq.maps.push_back(connecting_delta(p, g, n, Variance::homology));
      seq.labels.push_back("d_" + std::to_string(n));
    }
  } else {
    for (int n = lo; n <= hi; ++n) {
      seq.maps.push_back(induced(quot, g, n, Variance::cohomology));
      seq.labels.push_back("j*_" + std::to_string(n));
      seq.maps.push_back(induced(incl, g, n, Variance::cohomology));
      seq.labels.push_back("i*_" + std::to_string(n));
      seq.maps.push_back(connecting_delta(p, g, n, Variance::cohomology));
      seq.labels.push_back("d*_" + std::to_string(n));
    }
  }
  return seq;
}

SequenceCheck check_sequence(const std::vector<GroupHom>& maps,
                             const std::vector<std::string>& labels) {
  SequenceCheck out;
  for (std::size_t k = 0; k + 1 < maps.size(); ++k) {
    std::string node = labels.size() > k + 1 ? labels[k] + " / " + labels[k + 1]
                                             : "step " + std::to_string(k);
    if (!composite_is_zero(maps[k + 1], maps[k])) {
      out.order_two = false;
      out.exact = false;
      out.failures.push_back("composite is nonzero at " + node);
      continue;
    }
    if (!exact_at(maps[k], maps[k + 1])) {
      out.exact = false;
      out.failures.push_back("image is smaller than the kernel at " + node);
    }
  }
  return out;
}

}  // namespace fcech
