#include "fcech/abelian.hpp"

#include <algorithm>
#include <sstream>

namespace fcech {

FgAbGroup FgAbGroup::free(int rank) {
  if (rank < 0) throw Error("negative free rank");
  FgAbGroup g;
  g.free_rank_ = rank;
  return g;
}

FgAbGroup FgAbGroup::cyclic(const Int& d) { return from_parts(0, {d}); }

FgAbGroup FgAbGroup::from_parts(int free_rank, std::vector<Int> factors) {
  if (free_rank < 0) throw Error("negative free rank");
  FgAbGroup g;
  g.free_rank_ = free_rank;
  std::vector<Int> kept;
  for (Int& f : factors) {
    if (f < 0) f = -f;
    if (f == 0) {
      ++g.free_rank_;
    } else if (f != 1) {
      kept.push_back(f);
    }
  }
  std::sort(kept.begin(), kept.end());
  // Repair the divisibility chain with gcd/lcm exchanges; the product is
  // preserved and each exchange strictly grows the early factors' gcd locus,
  // so the loop terminates.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < kept.size(); ++i) {
      for (std::size_t j = i + 1; j < kept.size(); ++j) {
        if (mod_floor(kept[j], kept[i]) != 0) {
          Int g1 = gcd(kept[i], kept[j]);
          Int l1 = lcm(kept[i], kept[j]);
          kept[i] = g1;
          kept[j] = l1;
          changed = true;
        }
      }
    }
    if (changed) std::sort(kept.begin(), kept.end());
  }
  kept.erase(std::remove(kept.begin(), kept.end(), Int(1)), kept.end());
  g.factors_ = std::move(kept);
  return g;
}

FgAbGroup FgAbGroup::from_presentation(int rank, const IntMatrix& relations) {
  if (relations.cols() > 0 && relations.rows() != rank)
    throw ShapeMismatch("presentation relations live in the wrong rank");
  SnfDecomposition d = snf_decompose(relations);
  std::vector<Int> factors = d.diagonal();
  return from_parts(rank - d.rank, std::move(factors));
}

FgAbGroup FgAbGroup::parse(const std::string& text) {
  auto trim = [](std::string s) {
    std::size_t a = s.find_first_not_of(" \t");
    std::size_t b = s.find_last_not_of(" \t");
    if (a == std::string::npos) return std::string();
    return s.substr(a, b - a + 1);
  };
  std::string body = trim(text);
  if (body.empty()) throw ParseError("empty group expression");
  if (body == "0") return trivial();

  int free_rank = 0;
  std::vector<Int> factors;
  std::stringstream ss(body);
  std::string term;
  while (std::getline(ss, term, '+')) {
    term = trim(term);
    if (term == "Z") {
      ++free_rank;
    } else if (term.rfind("Z^", 0) == 0) {
      try {
        int k = std::stoi(term.substr(2));
        if (k < 0) throw ParseError("negative exponent in group term: " + term);
        free_rank += k;
      } catch (const std::logic_error&) {
        throw ParseError("bad free-rank term: " + term);
      }
    } else if (term.rfind("Z/", 0) == 0) {
      std::string num = term.substr(2);
      if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad torsion term: " + term);
      factors.emplace_back(num);
    } else {
      throw ParseError("unrecognized group term: " + term);
    }
  }
  return from_parts(free_rank, std::move(factors));
}

Int FgAbGroup::generator_order(int i) const {
  if (i < 0 || i >= generator_count()) throw Error("generator index out of range");
  if (i < torsion_count()) return factors_[static_cast<std::size_t>(i)];
  return Int(0);
}

std::vector<Int> FgAbGroup::summand_orders() const {
  std::vector<Int> orders = factors_;
  orders.insert(orders.end(), static_cast<std::size_t>(free_rank_), Int(0));
  return orders;
}

IntMatrix FgAbGroup::relation_matrix() const {
  IntMatrix r(generator_count(), torsion_count());
  for (int i = 0; i < torsion_count(); ++i) r.at(i, i) = factors_[static_cast<std::size_t>(i)];
  return r;
}

std::vector<Int> FgAbGroup::reduce(std::vector<Int> coords) const {
  if (static_cast<int>(coords.size()) != generator_count())
    throw ShapeMismatch("coordinate length does not match generator count");
  for (int i = 0; i < torsion_count(); ++i)
    coords[static_cast<std::size_t>(i)] =
        mod_floor(coords[static_cast<std::size_t>(i)], factors_[static_cast<std::size_t>(i)]);
  return coords;
}

std::string FgAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::vector<std::string> terms;
  if (free_rank_ == 1) terms.push_back("Z");
  else if (free_rank_ > 1) terms.push_back("Z^" + std::to_string(free_rank_));
  for (const Int& f : factors_) terms.push_back("Z/" + f.get_str());
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += " + ";
    out += terms[i];
  }
  return out;
}

bool iso_check(const FgAbGroup& a, const FgAbGroup& b) { return a == b; }

GroupHom::GroupHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.generator_count() || matrix_.cols() != source_.generator_count())
    throw InvalidHom("hom matrix shape does not match generator counts");
  // A generator of order d must land on an element killed by d.
  for (int j = 0; j < source_.generator_count(); ++j) {
    Int d = source_.generator_order(j);
    if (d == 0) continue;
    for (int i = 0; i < target_.generator_count(); ++i) {
      Int o = target_.generator_order(i);
      Int v = d * matrix_.at(i, j);
      bool ok = o == 0 ? v == 0 : mod_floor(v, o) == 0;
      if (!ok)
        throw InvalidHom("matrix does not respect torsion: generator " + std::to_string(j) +
                         " of order " + d.get_str() + " maps outside its annihilator");
    }
  }
  for (int i = 0; i < target_.torsion_count(); ++i) {
    Int o = target_.generator_order(i);
    for (int j = 0; j < matrix_.cols(); ++j) matrix_.at(i, j) = mod_floor(matrix_.at(i, j), o);
  }
}

GroupHom GroupHom::identity(const FgAbGroup& g) {
  return GroupHom(g, g, IntMatrix::identity(g.generator_count()));
}

GroupHom GroupHom::zero(const FgAbGroup& source, const FgAbGroup& target) {
  return GroupHom(source, target,
                  IntMatrix::zero(target.generator_count(), source.generator_count()));
}

std::vector<Int> GroupHom::apply(const std::vector<Int>& coords) const {
  return target_.reduce(matrix_.apply(coords));
}

bool GroupHom::is_identity() const {
  return source_ == target_ && matrix_ == IntMatrix::identity(source_.generator_count());
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (f.target() != g.source())
    throw InvalidHom("composition endpoints do not match: " + f.target().to_string() + " vs " +
                     g.source().to_string());
  return GroupHom(f.source(), g.target(), g.matrix() * f.matrix());
}

FgAbGroup cokernel(const GroupHom& h) {
  IntMatrix rel = h.matrix().hcat(h.target().relation_matrix());
  return FgAbGroup::from_presentation(h.target().generator_count(), rel);
}

bool is_isomorphism(const GroupHom& h) {
  return h.source() == h.target() && cokernel(h).is_trivial();
}

bool composite_is_zero(const GroupHom& g, const GroupHom& f) { return compose(g, f).is_zero(); }

namespace {

// Lattice of elements of the middle group killed by g, in generator
// coordinates (includes the relation columns).
IntMatrix kernel_lattice(const GroupHom& g) {
  int n = g.source().generator_count();
  IntMatrix ext = g.matrix().hcat(g.target().relation_matrix());
  IntMatrix k = integer_kernel(ext);
  std::vector<int> head;
  for (int i = 0; i < n; ++i) head.push_back(i);
  return k.submatrix_rows(head);
}

}  // namespace

bool exact_at(const GroupHom& f, const GroupHom& g) {
  if (f.target() != g.source()) throw ShapeMismatch("exactness endpoints do not meet");
  IntMatrix image = f.matrix().hcat(f.target().relation_matrix());
  IntMatrix kernel = kernel_lattice(g).hcat(g.source().relation_matrix());
  return same_column_span(image, kernel);
}

CycleSpace::CycleSpace(int ambient, const IntMatrix& constraints,
                       const std::vector<Int>& constraint_moduli, const IntMatrix& image_gens,
                       const std::vector<Int>& ambient_moduli)
    : ambient_(ambient) {
  if (constraints.cols() != ambient && !(constraints.rows() == 0 && constraints.cols() == 0))
    throw ShapeMismatch("constraint matrix does not act on the ambient rank");
  if (static_cast<int>(constraint_moduli.size()) != constraints.rows())
    throw ShapeMismatch("constraint moduli count mismatch");
  if (image_gens.cols() > 0 && image_gens.rows() != ambient)
    throw ShapeMismatch("image generators live in the wrong rank");
  if (static_cast<int>(ambient_moduli.size()) != ambient)
    throw ShapeMismatch("ambient moduli count mismatch");

  // Relaxation columns: modulus m on constraint row r frees that row mod m.
  IntMatrix cons = constraints.cols() == ambient ? constraints : IntMatrix(0, ambient);
  std::vector<std::pair<int, Int>> relax;
  for (int r = 0; r < cons.rows(); ++r)
    if (constraint_moduli[static_cast<std::size_t>(r)] != 0)
      relax.emplace_back(r, constraint_moduli[static_cast<std::size_t>(r)]);
  IntMatrix ext(cons.rows(), cons.cols() + static_cast<int>(relax.size()));
  for (int r = 0; r < cons.rows(); ++r)
    for (int c = 0; c < cons.cols(); ++c) ext.at(r, c) = cons.at(r, c);
  for (std::size_t i = 0; i < relax.size(); ++i)
    ext.at(relax[i].first, cons.cols() + static_cast<int>(i)) = relax[i].second;

  IntMatrix ker = integer_kernel(ext);
  std::vector<int> head;
  for (int i = 0; i < ambient; ++i) head.push_back(i);
  basis_ = column_hermite(ker.submatrix_rows(head));
  solver_.emplace(basis_);

  // Image lattice generators: the given columns plus the coefficient
  // relations on each ambient coordinate.
  int extra = 0;
  for (const Int& m : ambient_moduli)
    if (m != 0) ++extra;
  IntMatrix q(ambient, image_gens.cols() + extra);
  for (int r = 0; r < image_gens.rows(); ++r)
    for (int c = 0; c < image_gens.cols(); ++c) q.at(r, c) = image_gens.at(r, c);
  {
    int c = image_gens.cols();
    for (int i = 0; i < ambient; ++i)
      if (ambient_moduli[static_cast<std::size_t>(i)] != 0)
        q.at(i, c++) = ambient_moduli[static_cast<std::size_t>(i)];
  }

  const int k = basis_.cols();
  IntMatrix w(k, q.cols());
  for (int c = 0; c < q.cols(); ++c) {
    auto sol = solver_->solve(q.column_vector(c));
    if (!sol)
      throw Error("image generator falls outside the cycle lattice; inputs are inconsistent");
    for (int r = 0; r < k; ++r) w.at(r, c) = (*sol)[static_cast<std::size_t>(r)];
  }

  SnfDecomposition dw = snf_decompose(w);
  normal_from_basis_ = dw.u;
  IntMatrix gen_all = basis_ * dw.u_inv;

  std::vector<Int> factors;
  std::vector<int> torsion_coords, free_coords;
  auto diag = dw.diagonal();
  for (int i = 0; i < dw.rank; ++i) {
    const Int& d = diag[static_cast<std::size_t>(i)];
    if (d >= 2) {
      factors.push_back(d);
      torsion_coords.push_back(i);
    }
  }
  for (int i = dw.rank; i < k; ++i) free_coords.push_back(i);

  gen_coord_ = torsion_coords;
  gen_coord_.insert(gen_coord_.end(), free_coords.begin(), free_coords.end());
  generators_ = gen_all.submatrix_columns(gen_coord_);
  group_ = FgAbGroup::from_parts(static_cast<int>(free_coords.size()), factors);
  if (group_.generator_count() != static_cast<int>(gen_coord_.size()))
    throw Error("internal: canonical form and generator list disagree");
}

std::vector<Int> CycleSpace::generator(int i) const {
  if (i < 0 || i >= generators_.cols()) throw Error("generator index out of range");
  return generators_.column_vector(i);
}

std::vector<Int> CycleSpace::express(const std::vector<Int>& cycle) const {
  if (static_cast<int>(cycle.size()) != ambient_)
    throw ShapeMismatch("cycle length does not match the ambient rank");
  auto w = solver_->solve(cycle);
  if (!w) throw Error("vector is not a cycle: it falls outside the constraint lattice");
  std::vector<Int> y = normal_from_basis_.apply(*w);
  std::vector<Int> out;
  out.reserve(gen_coord_.size());
  for (std::size_t g = 0; g < gen_coord_.size(); ++g)
    out.push_back(y[static_cast<std::size_t>(gen_coord_[g])]);
  return group_.reduce(std::move(out));
}

std::vector<Int> block_moduli(const CoefficientGroup& g, int cells) {
  std::vector<Int> orders = g.summand_orders();
  std::vector<Int> out;
  out.reserve(orders.size() * static_cast<std::size_t>(cells));
  for (const Int& o : orders) out.insert(out.end(), static_cast<std::size_t>(cells), o);
  return out;
}

CycleSpace homology_space(const BoundaryPair& at_degree, const CoefficientGroup& g) {
  const IntMatrix& d_in = at_degree.d_in;
  const IntMatrix& d_out = at_degree.d_out;
  if (d_in.rows() != d_out.cols())
    throw ShapeMismatch("boundary shapes do not meet at the degree");
  if (!(d_out * d_in).is_zero()) throw NonComposable("boundary composite is not zero");

  const int cells = d_out.cols();
  const int blocks = g.generator_count();
  return CycleSpace(cells * blocks, d_out.block_repeat(blocks), block_moduli(g, d_out.rows()),
                    d_in.block_repeat(blocks), block_moduli(g, cells));
}

FgAbGroup homology_from_boundaries(const IntMatrix& d_in, const IntMatrix& d_out,
                                   const CoefficientGroup& g) {
  return homology_space(BoundaryPair{d_in, d_out}, g).group();
}

FgAbGroup cohomology_from_coboundaries(const IntMatrix& delta_in, const IntMatrix& delta_out,
                                       const CoefficientGroup& g) {
  return homology_space(BoundaryPair{delta_in, delta_out}, g).group();
}

GroupHom hom_from_images(const CycleSpace& src, const CycleSpace& tgt,
                         const std::function<std::vector<Int>(const std::vector<Int>&)>& image) {
  int n = src.group().generator_count();
  IntMatrix m(tgt.group().generator_count(), n);
  for (int j = 0; j < n; ++j) {
    std::vector<Int> coords = tgt.express(image(src.generator(j)));
    for (int i = 0; i < m.rows(); ++i) m.at(i, j) = coords[static_cast<std::size_t>(i)];
  }
  return GroupHom(src.group(), tgt.group(), std::move(m));
}

GroupHom induced_on_homology(const IntMatrix& chain_map, const IntMatrix& chain_map_out,
                             const IntMatrix& chain_map_in, const BoundaryPair& src,
                             const BoundaryPair& tgt, const CoefficientGroup& g) {
  if (tgt.d_out * chain_map != chain_map_out * src.d_out)
    throw NotAChainMap("map does not commute with the outgoing boundaries");
  if (chain_map * src.d_in != tgt.d_in * chain_map_in)
    throw NotAChainMap("map does not commute with the incoming boundaries");

  CycleSpace s = homology_space(src, g);
  CycleSpace t = homology_space(tgt, g);
  IntMatrix blocked = chain_map.block_repeat(g.generator_count());
  return hom_from_images(s, t, [&](const std::vector<Int>& v) { return blocked.apply(v); });
}

std::string LimitReport::to_string() const {
  std::string s = limit.to_string();
  s += stabilized ? " (stabilized)" : " (not stabilized)";
  return s;
}

LimitReport finite_chain_limit(std::vector<FgAbGroup> stages, std::vector<GroupHom> maps,
                               ChainDirection direction, int window) {
  if (stages.empty()) throw Error("a finite chain needs at least one stage");
  if (window < 1) throw Error("stabilization window must be positive");
  if (maps.size() + 1 != stages.size())
    throw ShapeMismatch("a chain of n stages needs n-1 bonding maps");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const FgAbGroup& from = direction == ChainDirection::inverse ? stages[i + 1] : stages[i];
    const FgAbGroup& to = direction == ChainDirection::inverse ? stages[i] : stages[i + 1];
    if (maps[i].source() != from || maps[i].target() != to)
      throw ShapeMismatch("bonding map " + std::to_string(i) + " endpoints do not match stages");
  }
  LimitReport rep;
  rep.window = window;
  rep.limit = stages.back();
  rep.stabilized = static_cast<int>(maps.size()) >= window;
  if (rep.stabilized)
    for (std::size_t i = maps.size() - static_cast<std::size_t>(window); i < maps.size(); ++i)
      if (!is_isomorphism(maps[i])) {
        rep.stabilized = false;
        break;
      }
  rep.stages = std::move(stages);
  rep.maps = std::move(maps);
  return rep;
}

}  // namespace fcech
