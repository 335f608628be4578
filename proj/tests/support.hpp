#pragma once

// Shared helpers for the test suites: seeded random generators for matrices
// and groups, brute-force reference computations kept deliberately naive.

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "fcech/int_matrix.hpp"
#include "fcech/lattice.hpp"
#include "fcech/simplicial.hpp"

namespace testsupport {

using fcech::Int;
using fcech::IntMatrix;

inline std::mt19937_64 seeded_rng(unsigned long long seed) { return std::mt19937_64(seed); }

inline IntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = dist(rng);
  return m;
}

// Product of a few elementary operations applied to the identity.
inline IntMatrix random_unimodular(std::mt19937_64& rng, int n, int ops) {
  IntMatrix m = IntMatrix::identity(n);
  if (n == 0) return m;
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<long> coef(-3, 3);
  std::uniform_int_distribution<int> kind(0, 2);
  for (int i = 0; i < ops; ++i) {
    int a = pick(rng), b = pick(rng);
    switch (kind(rng)) {
      case 0:
        if (a != b) m.add_row_multiple(a, b, Int(coef(rng)));
        break;
      case 1:
        m.swap_rows(a, b);
        break;
      default:
        m.negate_row(a);
        break;
    }
  }
  return m;
}

// Gcd of all k x k minors; zero when every minor vanishes.
inline Int minor_gcd(const IntMatrix& m, int k) {
  std::vector<int> rows(static_cast<std::size_t>(k)), cols(static_cast<std::size_t>(k));
  Int g(0);

  auto advance = [](std::vector<int>& idx, int limit) {
    int k2 = static_cast<int>(idx.size());
    int i = k2 - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == limit - k2 + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k2; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    return true;
  };

  if (k > m.rows() || k > m.cols()) return Int(0);
  for (int i = 0; i < k; ++i) rows[static_cast<std::size_t>(i)] = i;
  do {
    for (int i = 0; i < k; ++i) cols[static_cast<std::size_t>(i)] = i;
    do {
      IntMatrix sub = m.submatrix_rows(rows).submatrix_columns(cols);
      g = fcech::gcd(g, fcech::determinant(sub));
    } while (advance(cols, m.cols()));
  } while (advance(rows, m.rows()));
  return g;
}

// Minimal 6-vertex triangulation of the real projective plane: the
// lexicographically first set of ten triangles in which each of the fifteen
// edges lies in exactly two triangles.
inline fcech::Complex projective_plane_complex() {
  return fcech::Complex::from_simplices({{0, 1, 2},
                                         {0, 1, 3},
                                         {0, 2, 4},
                                         {0, 3, 5},
                                         {0, 4, 5},
                                         {1, 2, 5},
                                         {1, 3, 4},
                                         {1, 4, 5},
                                         {2, 3, 4},
                                         {2, 3, 5}});
}

// Chain complex on ordered tuples (repeats allowed) whose support lies in
// the complex, up to the given degree. An independent model of the same
// homology used as an oracle against the oriented computation.
struct OrderedComplex {
  std::vector<std::vector<std::vector<int>>> tuples;  // tuples[n]: length n+1
  std::vector<IntMatrix> boundary;                    // boundary[n]: deg n -> deg n-1
};

inline OrderedComplex ordered_complex(const fcech::Complex& k, int max_degree) {
  OrderedComplex out;
  std::vector<int> verts = k.vertices();
  out.tuples.resize(static_cast<std::size_t>(max_degree) + 1);
  for (int v : verts) out.tuples[0].push_back({v});
  for (int n = 1; n <= max_degree; ++n) {
    for (const auto& t : out.tuples[static_cast<std::size_t>(n - 1)])
      for (int v : verts) {
        std::vector<int> ext = t;
        ext.push_back(v);
        std::vector<int> support = ext;
        std::sort(support.begin(), support.end());
        support.erase(std::unique(support.begin(), support.end()), support.end());
        if (k.contains(support)) out.tuples[static_cast<std::size_t>(n)].push_back(ext);
      }
    std::sort(out.tuples[static_cast<std::size_t>(n)].begin(),
              out.tuples[static_cast<std::size_t>(n)].end());
  }

  out.boundary.resize(static_cast<std::size_t>(max_degree) + 1);
  out.boundary[0] = IntMatrix(0, static_cast<int>(out.tuples[0].size()));
  for (int n = 1; n <= max_degree; ++n) {
    const auto& rows = out.tuples[static_cast<std::size_t>(n - 1)];
    const auto& cols = out.tuples[static_cast<std::size_t>(n)];
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols(); ++c) {
      const auto& t = cols[static_cast<std::size_t>(c)];
      int sign = 1;
      for (std::size_t drop = 0; drop < t.size(); ++drop) {
        std::vector<int> face;
        for (std::size_t i = 0; i < t.size(); ++i)
          if (i != drop) face.push_back(t[i]);
        auto it = std::lower_bound(rows.begin(), rows.end(), face);
        if (it != rows.end() && *it == face)
          m.at(static_cast<int>(it - rows.begin()), c) += sign;
        sign = -sign;
      }
    }
    out.boundary[static_cast<std::size_t>(n)] = std::move(m);
  }
  return out;
}

inline fcech::FgAbGroup ordered_homology(const fcech::Complex& k, const fcech::FgAbGroup& g,
                                         int n) {
  if (k.empty() || n < 0) return fcech::FgAbGroup::trivial();
  OrderedComplex oc = ordered_complex(k, n + 1);
  return fcech::homology_from_boundaries(oc.boundary[static_cast<std::size_t>(n + 1)],
                                         oc.boundary[static_cast<std::size_t>(n)], g);
}

// Random small complex: a few random maximal simplices on the given vertices.
inline fcech::Complex random_complex(std::mt19937_64& rng, int vertex_count, int max_simplices,
                                     int max_size) {
  std::uniform_int_distribution<int> count(1, max_simplices);
  std::uniform_int_distribution<int> size(1, max_size);
  std::uniform_int_distribution<int> vert(0, vertex_count - 1);
  std::vector<fcech::Simplex> tops;
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    std::set<int> s;
    int want = size(rng);
    while (static_cast<int>(s.size()) < want) s.insert(vert(rng));
    tops.emplace_back(s.begin(), s.end());
  }
  return fcech::Complex::from_simplices(tops);
}

}  // namespace testsupport
