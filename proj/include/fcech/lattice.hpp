#pragma once

#include <optional>
#include <vector>

#include "fcech/int_matrix.hpp"

namespace fcech {

// Triple returned to callers: S = U * M * V with U, V unimodular, S diagonal
// with nonnegative entries satisfying the divisibility chain d1 | d2 | ...
struct SnfResult {
  IntMatrix s;
  IntMatrix u;
  IntMatrix v;
};

// Full decomposition, with the transform inverses accumulated alongside.
// Invariants: s = u * m * v, u * u_inv = I, v * v_inv = I.
struct SnfDecomposition {
  IntMatrix s;
  IntMatrix u;
  IntMatrix v;
  IntMatrix u_inv;
  IntMatrix v_inv;
  int rank = 0;

  std::vector<Int> diagonal() const {
    std::vector<Int> d;
    int n = std::min(s.rows(), s.cols());
    d.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) d.push_back(s.at(i, i));
    return d;
  }
};

// Smith normal form by integer elimination with a minimal-absolute-value
// pivot choice, which keeps intermediate entries small on the matrices that
// arise from simplicial boundaries.
SnfDecomposition snf_decompose(const IntMatrix& m);

SnfResult smith_normal_form(const IntMatrix& m);

// Basis of the integer kernel {x : m x = 0}, as matrix columns.
IntMatrix integer_kernel(const IntMatrix& m);

// Column-style Hermite normal form of the column span: the unique canonical
// basis of the lattice generated by the columns of m. Zero columns dropped;
// pivots positive, entries to the right of a pivot reduced into [0, pivot).
// Equal column spans produce identical matrices.
IntMatrix column_hermite(const IntMatrix& m);

// Whether the integer column spans coincide.
bool same_column_span(const IntMatrix& a, const IntMatrix& b);

// Does the column span of a contain every column of b?
bool span_contains(const IntMatrix& a, const IntMatrix& b);

// Exact determinant (fraction-free Gaussian elimination).
Int determinant(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

// Solves m x = b exactly over the integers via a precomputed decomposition.
class LinearSolver {
 public:
  explicit LinearSolver(IntMatrix m);

  const IntMatrix& matrix() const { return m_; }

  // Integral solution if one exists.
  std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const;

 private:
  IntMatrix m_;
  SnfDecomposition dec_;
};

}  // namespace fcech
