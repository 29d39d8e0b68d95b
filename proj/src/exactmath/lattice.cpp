#include "genalg/exactmath/lattice.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "genalg/exactmath/errors.hpp"

namespace genalg {

namespace {

struct Bezout {
  Integer g, s, t;
};

// s*a + t*b = g = gcd(a, b) > 0
Bezout gcdext(const Integer& a, const Integer& b) {
  Bezout out;
  mpz_gcdext(out.g.get_mpz_t(), out.s.get_mpz_t(), out.t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return out;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool divides(const Integer& d, const Integer& x) {
  return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

void axpy(IntVector& y, const Integer& a, const IntVector& x) {
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (x[i] != 0) y[i] += a * x[i];
  }
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix out(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("ragged integer matrix");
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  IntMatrix out(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw InputError("ragged integer matrix");
    for (std::size_t i = 0; i < rows; ++i) out(i, j) = columns[j][i];
  }
  return out;
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InputError("matrix product dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

bool IntegerLattice::insert(const IntVector& v) {
  if (v.size() != ambient_) {
    throw InputError("lattice vector of length " + std::to_string(v.size()) +
                     " in Z^" + std::to_string(ambient_));
  }
  IntVector w = v;
  bool grew = false;
  std::size_t k = 0;
  std::size_t lead = 0;
  while (true) {
    while (lead < ambient_ && w[lead] == 0) ++lead;
    if (lead == ambient_) break;
    while (k < basis_.size() && pivots_[k] < lead) ++k;
    if (k < basis_.size() && pivots_[k] == lead) {
      IntVector& row = basis_[k];
      const Integer a = row[lead];
      const Integer b = w[lead];
      if (divides(a, b)) {
        axpy(w, -(b / a), row);
      } else {
        const Bezout bz = gcdext(a, b);
        IntVector combined(ambient_);
        for (std::size_t c = 0; c < ambient_; ++c) combined[c] = bz.s * row[c] + bz.t * w[c];
        const Integer wa = a / bz.g;
        const Integer rb = b / bz.g;
        for (std::size_t c = 0; c < ambient_; ++c) w[c] = wa * w[c] - rb * row[c];
        row = std::move(combined);
        grew = true;
      }
      continue;
    }
    if (w[lead] < 0) {
      for (auto& x : w) x = -x;
    }
    basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(k), std::move(w));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(k), lead);
    grew = true;
    break;
  }
  normalize();
  return grew;
}

void IntegerLattice::normalize() {
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::size_t pc = pivots_[k];
    const Integer pivot = basis_[k][pc];
    for (std::size_t i = 0; i < k; ++i) {
      const Integer q = floor_div(basis_[i][pc], pivot);
      if (q != 0) axpy(basis_[i], -q, basis_[k]);
    }
  }
}

bool IntegerLattice::contains(const IntVector& v) const {
  if (v.size() != ambient_) throw InputError("lattice vector length mismatch");
  IntVector w = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::size_t pc = pivots_[k];
    if (w[pc] == 0) continue;
    if (!divides(basis_[k][pc], w[pc])) return false;
    axpy(w, -(w[pc] / basis_[k][pc]), basis_[k]);
  }
  return std::all_of(w.begin(), w.end(), [](const Integer& x) { return x == 0; });
}

Integer IntegerLattice::index() const {
  if (basis_.size() < ambient_) return 0;
  Integer out = 1;
  for (std::size_t k = 0; k < basis_.size(); ++k) out *= basis_[k][pivots_[k]];
  return out;
}

bool IntegerLattice::is_full() const { return index() == 1; }

IntMatrix IntegerLattice::generator_matrix() const {
  return IntMatrix::from_columns(basis_, ambient_);
}

IntegerLattice hnf(const IntMatrix& columns) {
  IntegerLattice lattice(columns.rows());
  for (std::size_t j = 0; j < columns.cols(); ++j) lattice.insert(columns.column(j));
  return lattice;
}

namespace {

// Rows r1, r2 <- [[s, t], [-b/g, a/g]] * (r1, r2) on both matrices.
void combine_rows(IntMatrix& d, IntMatrix& u, std::size_t r1, std::size_t r2,
                  const Integer& a, const Integer& b) {
  const Bezout bz = gcdext(a, b);
  const Integer c = -(b / bz.g);
  const Integer e = a / bz.g;
  for (IntMatrix* m : {&d, &u}) {
    for (std::size_t j = 0; j < m->cols(); ++j) {
      const Integer x = (*m)(r1, j);
      const Integer y = (*m)(r2, j);
      (*m)(r1, j) = bz.s * x + bz.t * y;
      (*m)(r2, j) = c * x + e * y;
    }
  }
}

void combine_cols(IntMatrix& d, IntMatrix& v, std::size_t c1, std::size_t c2,
                  const Integer& a, const Integer& b) {
  const Bezout bz = gcdext(a, b);
  const Integer c = -(b / bz.g);
  const Integer e = a / bz.g;
  for (IntMatrix* m : {&d, &v}) {
    for (std::size_t i = 0; i < m->rows(); ++i) {
      const Integer x = (*m)(i, c1);
      const Integer y = (*m)(i, c2);
      (*m)(i, c1) = bz.s * x + bz.t * y;
      (*m)(i, c2) = c * x + e * y;
    }
  }
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += q * m(src, j);
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += q * m(i, src);
}

}  // namespace

SmithDecomposition snf(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);
  const std::size_t steps = std::min(m, n);

  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (d(i, j) == 0) continue;
        if (pi == m || abs(d(i, j)) < abs(d(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi == m) break;
    d.swap_rows(t, pi);
    u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    v.swap_cols(t, pj);

    while (true) {
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        if (divides(d(t, t), d(i, t))) {
          const Integer q = -(d(i, t) / d(t, t));
          add_row_multiple(d, i, t, q);
          add_row_multiple(u, i, t, q);
        } else {
          combine_rows(d, u, t, i, d(t, t), d(i, t));
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        if (divides(d(t, t), d(t, j))) {
          const Integer q = -(d(t, j) / d(t, t));
          add_col_multiple(d, j, t, q);
          add_col_multiple(v, j, t, q);
        } else {
          combine_cols(d, v, t, j, d(t, t), d(t, j));
        }
      }
      bool clear = true;
      for (std::size_t i = t + 1; i < m && clear; ++i) clear = d(i, t) == 0;
      if (!clear) continue;

      // Enforce d_t | every remaining entry.
      std::size_t bad_row = m;
      for (std::size_t i = t + 1; i < m && bad_row == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!divides(d(t, t), d(i, j))) {
            bad_row = i;
            break;
          }
        }
      if (bad_row == m) break;
      add_row_multiple(d, t, bad_row, 1);
      add_row_multiple(u, t, bad_row, 1);
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < m; ++j) u(t, j) = -u(t, j);
    }
  }

  SmithDecomposition out;
  out.diagonal.resize(steps);
  for (std::size_t t = 0; t < steps; ++t) out.diagonal[t] = d(t, t);
  out.left = std::move(u);
  out.right = std::move(v);
  return out;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  const Integer det = determinant(a);
  if (det != 1 && det != -1) throw InputError("matrix is not unimodular");
  const std::size_t n = a.rows();
  std::vector<Rational> aug(n * 2 * n);
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return aug[i * 2 * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) at(i, j) = Rational(a(i, j));
    at(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (at(p, c) == 0) ++p;
    if (p != c)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(at(p, j), at(c, j));
    const Rational inv = 1 / at(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) at(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || at(i, c) == 0) continue;
      const Rational f = at(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) at(i, j) -= f * at(c, j);
    }
  }
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = at(i, n + j);
      if (x.get_den() != 1) throw InvariantViolation("non-integral unimodular inverse");
      out(i, j) = x.get_num();
    }
  return out;
}

}  // namespace genalg
