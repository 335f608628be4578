#include "fcech/lattice.hpp"

#include <algorithm>

namespace fcech {

namespace {

// Mirrors every transformation so that s = u * original * v stays true and
// u_inv, v_inv track the inverse transforms.
struct Worker {
  IntMatrix s, u, v, u_inv, v_inv;

  explicit Worker(const IntMatrix& m)
      : s(m),
        u(IntMatrix::identity(m.rows())),
        v(IntMatrix::identity(m.cols())),
        u_inv(IntMatrix::identity(m.rows())),
        v_inv(IntMatrix::identity(m.cols())) {}

  void swap_rows(int a, int b) {
    if (a == b) return;
    s.swap_rows(a, b);
    u.swap_rows(a, b);
    u_inv.swap_cols(a, b);
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    s.swap_cols(a, b);
    v.swap_cols(a, b);
    v_inv.swap_rows(a, b);
  }
  void negate_row(int r) {
    s.negate_row(r);
    u.negate_row(r);
    u_inv.negate_col(r);
  }
  void add_row_multiple(int dst, int src, const Int& k) {
    s.add_row_multiple(dst, src, k);
    u.add_row_multiple(dst, src, k);
    u_inv.add_col_multiple(src, dst, -k);
  }
  void add_col_multiple(int dst, int src, const Int& k) {
    s.add_col_multiple(dst, src, k);
    v.add_col_multiple(dst, src, k);
    v_inv.add_row_multiple(src, dst, -k);
  }
};

}  // namespace

SnfDecomposition snf_decompose(const IntMatrix& m) {
  Worker w(m);
  const int rows = m.rows();
  const int cols = m.cols();
  const int steps = std::min(rows, cols);
  int rank = 0;
  bool done = false;

  for (int t = 0; t < steps && !done; ++t) {
    for (;;) {
      // Minimal-absolute-value pivot over the untouched block.
      int pr = -1, pc = -1;
      Int best(0);
      for (int r = t; r < rows; ++r)
        for (int c = t; c < cols; ++c) {
          const Int& e = w.s.at(r, c);
          if (e == 0) continue;
          Int a = abs(e);
          if (pr < 0 || a < best) {
            best = a;
            pr = r;
            pc = c;
          }
        }
      if (pr < 0) {
        done = true;  // remaining block is zero
        break;
      }
      w.swap_rows(t, pr);
      w.swap_cols(t, pc);
      if (w.s.at(t, t) < 0) w.negate_row(t);

      bool reduced = true;
      for (int r = t + 1; r < rows; ++r) {
        if (w.s.at(r, t) == 0) continue;
        Int q = rounded_div(w.s.at(r, t), w.s.at(t, t));
        w.add_row_multiple(r, t, -q);
        if (w.s.at(r, t) != 0) reduced = false;
      }
      for (int c = t + 1; c < cols; ++c) {
        if (w.s.at(t, c) == 0) continue;
        Int q = rounded_div(w.s.at(t, c), w.s.at(t, t));
        w.add_col_multiple(c, t, -q);
        if (w.s.at(t, c) != 0) reduced = false;
      }
      if (!reduced) continue;  // a smaller pivot appeared; repeat

      // Divisibility sweep: the pivot must divide the remaining block.
      bool divides = true;
      for (int r = t + 1; r < rows && divides; ++r)
        for (int c = t + 1; c < cols && divides; ++c)
          if (mod_floor(w.s.at(r, c), w.s.at(t, t)) != 0) {
            w.add_row_multiple(t, r, Int(1));
            divides = false;
          }
      if (divides) {
        ++rank;
        break;
      }
    }
  }

  SnfDecomposition out;
  out.s = std::move(w.s);
  out.u = std::move(w.u);
  out.v = std::move(w.v);
  out.u_inv = std::move(w.u_inv);
  out.v_inv = std::move(w.v_inv);
  out.rank = rank;
  return out;
}

SnfResult smith_normal_form(const IntMatrix& m) {
  SnfDecomposition d = snf_decompose(m);
  return SnfResult{std::move(d.s), std::move(d.u), std::move(d.v)};
}

IntMatrix integer_kernel(const IntMatrix& m) {
  SnfDecomposition d = snf_decompose(m);
  std::vector<int> free_cols;
  for (int c = d.rank; c < m.cols(); ++c) free_cols.push_back(c);
  return d.v.submatrix_columns(free_cols);
}

IntMatrix column_hermite(const IntMatrix& m) {
  IntMatrix a = m;
  const int rows = a.rows();
  const int cols = a.cols();
  int lead = 0;
  for (int r = 0; r < rows && lead < cols; ++r) {
    // Gcd-eliminate row r across columns lead.. until one entry remains.
    for (;;) {
      int jmin = -1;
      Int best(0);
      for (int j = lead; j < cols; ++j) {
        const Int& e = a.at(r, j);
        if (e == 0) continue;
        Int v = abs(e);
        if (jmin < 0 || v < best) {
          best = v;
          jmin = j;
        }
      }
      if (jmin < 0) break;
      a.swap_cols(lead, jmin);
      if (a.at(r, lead) < 0) a.negate_col(lead);
      bool clean = true;
      for (int j = lead + 1; j < cols; ++j) {
        if (a.at(r, j) == 0) continue;
        Int q = rounded_div(a.at(r, j), a.at(r, lead));
        a.add_col_multiple(j, lead, -q);
        if (a.at(r, j) != 0) clean = false;
      }
      if (clean) {
        // Reduce earlier columns at this pivot row into [0, pivot).
        for (int j = 0; j < lead; ++j) {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), a.at(r, j).get_mpz_t(), a.at(r, lead).get_mpz_t());
          a.add_col_multiple(j, lead, -q);
        }
        ++lead;
        break;
      }
    }
  }
  std::vector<int> keep;
  for (int j = 0; j < lead; ++j) keep.push_back(j);
  return a.submatrix_columns(keep);
}

bool same_column_span(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw ShapeMismatch("span comparison in different ambient ranks");
  return column_hermite(a) == column_hermite(b);
}

bool span_contains(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw ShapeMismatch("span comparison in different ambient ranks");
  return column_hermite(a) == column_hermite(a.hcat(b));
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return Int(1);
  IntMatrix a = m;
  Int sign(1), prev(1);
  for (int k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      int r = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          r = i;
          break;
        }
      if (r < 0) return Int(0);
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  Int d = determinant(m);
  return d == 1 || d == -1;
}

LinearSolver::LinearSolver(IntMatrix m) : m_(std::move(m)), dec_(snf_decompose(m_)) {}

std::optional<std::vector<Int>> LinearSolver::solve(const std::vector<Int>& b) const {
  if (static_cast<int>(b.size()) != m_.rows()) throw ShapeMismatch("solve: rhs length mismatch");
  std::vector<Int> y = dec_.u.apply(b);
  const int cols = m_.cols();
  const int steps = std::min(m_.rows(), cols);
  std::vector<Int> z(static_cast<std::size_t>(cols), Int(0));
  for (int i = 0; i < steps; ++i) {
    const Int& d = dec_.s.at(i, i);
    if (d != 0) {
      if (mod_floor(y[static_cast<std::size_t>(i)], d) != 0) return std::nullopt;
      mpz_divexact(z[static_cast<std::size_t>(i)].get_mpz_t(),
                   y[static_cast<std::size_t>(i)].get_mpz_t(), d.get_mpz_t());
    } else if (y[static_cast<std::size_t>(i)] != 0) {
      return std::nullopt;
    }
  }
  for (int i = steps; i < m_.rows(); ++i)
    if (y[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  return dec_.v.apply(z);
}

}  // namespace fcech
