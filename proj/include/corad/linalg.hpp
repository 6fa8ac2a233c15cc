#pragma once

// Exact dense linear algebra over a cyclotomic field, plus the canonical
// subspace calculus.  Subspaces are always reduced row-echelon bases, so
// subspace equality is syntactic and filtration stabilization is decidable.
// Pivoting is deterministic: leftmost pivot, first nonzero row.

#include <initializer_list>
#include <vector>

#include "corad/cyclotomic.hpp"
#include "corad/errors.hpp"

namespace corad {

using Vec = std::vector<Scalar>;

inline Vec vec_zero(const CycloField& f, int n) { return Vec(n, Scalar::zero(f)); }

inline bool vec_is_zero(const Vec& v) {
  for (const Scalar& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  ensure(a.size() == b.size(), "vec_add size mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  ensure(a.size() == b.size(), "vec_sub size mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline Vec vec_scale(const Scalar& c, const Vec& a) {
  Vec r = a;
  for (Scalar& x : r) x *= c;
  return r;
}

inline Vec vec_kron(const Vec& a, const Vec& b) {
  const CycloField& f = a.empty() ? (b.empty() ? CycloField::get(1) : b[0].field()) : a[0].field();
  Vec r = vec_zero(f, static_cast<int>(a.size() * b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      r[i * b.size() + j] = a[i] * b[j];
    }
  }
  return r;
}

class Matrix {
 public:
  Matrix() : fld_(&CycloField::get(1)), rows_(0), cols_(0) {}
  Matrix(const CycloField& f, int rows, int cols)
      : fld_(&f), rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, Scalar::zero(f)) {}

  static Matrix identity(const CycloField& f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
  }
  static Matrix from_rows(const CycloField& f, const std::vector<Vec>& rows, int cols) {
    Matrix m(f, static_cast<int>(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      ensure(static_cast<int>(rows[i].size()) == cols, "from_rows: ragged input");
      for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
    }
    return m;
  }

  const CycloField& field() const { return *fld_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

  Vec row(int i) const {
    Vec r;
    r.reserve(cols_);
    for (int j = 0; j < cols_; ++j) r.push_back(at(i, j));
    return r;
  }
  void set_row(int i, const Vec& v) {
    ensure(static_cast<int>(v.size()) == cols_, "set_row size mismatch");
    for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.fld_ == b.fld_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix transpose() const {
    Matrix t(*fld_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    ensure(a.cols_ == b.rows_, "matrix product shape mismatch");
    Matrix c(*a.fld_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const Scalar& bkj = b.at(k, j);
          if (bkj.is_zero()) continue;
          c.at(i, j).add_mul(aik, bkj);
        }
      }
    }
    return c;
  }

  /// Row vector times matrix.
  Vec apply_left(const Vec& v) const {
    ensure(static_cast<int>(v.size()) == rows_, "apply_left size mismatch");
    Vec r = vec_zero(*fld_, cols_);
    for (int i = 0; i < rows_; ++i) {
      if (v[i].is_zero()) continue;
      for (int j = 0; j < cols_; ++j) {
        if (at(i, j).is_zero()) continue;
        r[j].add_mul(v[i], at(i, j));
      }
    }
    return r;
  }

  /// Matrix times column vector.
  Vec apply(const Vec& v) const {
    ensure(static_cast<int>(v.size()) == cols_, "apply size mismatch");
    Vec r = vec_zero(*fld_, rows_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) {
        if (at(i, j).is_zero() || v[j].is_zero()) continue;
        r[i].add_mul(at(i, j), v[j]);
      }
    }
    return r;
  }

 private:
  const CycloField* fld_;
  int rows_, cols_;
  std::vector<Scalar> e_;
};

/// In-place reduced row echelon form; returns pivot column per pivot row.
inline std::vector<int> rref_in_place(Matrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
    int sel = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (!m.at(i, col).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
    Scalar inv = m.at(r, col).inverse();
    for (int j = col; j < m.cols(); ++j) {
      if (!m.at(r, j).is_zero()) m.at(r, j) *= inv;
    }
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, col).is_zero()) continue;
      Scalar factor = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) {
        if (m.at(r, j).is_zero()) continue;
        m.at(i, j).sub_mul(factor, m.at(r, j));
      }
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

inline Matrix rref(const Matrix& m) {
  Matrix r = m;
  rref_in_place(r);
  return r;
}

inline int rank(const Matrix& m) {
  Matrix r = m;
  return static_cast<int>(rref_in_place(r).size());
}

/// Kernel (right null space) basis rows of m, derived from its RREF.
/// Resulting rows are raw (not themselves re-echelonized).
inline std::vector<Vec> kernel_rows(const Matrix& m) {
  Matrix r = m;
  std::vector<int> piv = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : piv) is_pivot[p] = true;
  std::vector<Vec> out;
  for (int j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    Vec v = vec_zero(m.field(), m.cols());
    v[j] = Scalar::one(m.field());
    for (std::size_t i = 0; i < piv.size(); ++i) {
      if (!r.at(static_cast<int>(i), j).is_zero()) v[piv[i]] = -r.at(static_cast<int>(i), j);
    }
    out.push_back(std::move(v));
  }
  return out;
}

/// Inverse of a square invertible matrix (deterministic Gauss-Jordan).
inline Matrix inverse(const Matrix& m) {
  ensure(m.rows() == m.cols(), "inverse: not square");
  int n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar::one(m.field());
  }
  std::vector<int> piv = rref_in_place(aug);
  ensure(static_cast<int>(piv.size()) == n && piv[n - 1] == n - 1, "inverse: singular matrix");
  Matrix inv(m.field(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

/// A subspace of k^ambient held as an RREF basis; identical RREF <=> equal.
class Subspace {
 public:
  Subspace() : ambient_(0) {}

  static Subspace zero(const CycloField& f, int ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix(f, 0, ambient);
    return s;
  }
  static Subspace full(const CycloField& f, int ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix::identity(f, ambient);
    for (int i = 0; i < ambient; ++i) s.pivots_.push_back(i);
    return s;
  }
  static Subspace span(const CycloField& f, const std::vector<Vec>& rows, int ambient) {
    Matrix m = Matrix::from_rows(f, rows, ambient);
    std::vector<int> piv = rref_in_place(m);
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix(f, static_cast<int>(piv.size()), ambient);
    for (int i = 0; i < static_cast<int>(piv.size()); ++i)
      for (int j = 0; j < ambient; ++j) s.basis_.at(i, j) = m.at(i, j);
    s.pivots_ = std::move(piv);
    return s;
  }
  /// Trusted constructor for rows already known to be in RREF order
  /// (block-structured tensor bases); verified cheaply.
  static Subspace from_rref_rows(const CycloField& f, const std::vector<Vec>& rows, int ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix::from_rows(f, rows, ambient);
    int last = -1;
    for (int i = 0; i < s.basis_.rows(); ++i) {
      int p = 0;
      while (p < ambient && s.basis_.at(i, p).is_zero()) ++p;
      ensure(p < ambient && p > last && s.basis_.at(i, p).is_one(), "from_rref_rows: not RREF");
      last = p;
      s.pivots_.push_back(p);
    }
    return s;
  }

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  const CycloField& field() const { return basis_.field(); }
  bool is_full() const { return dim() == ambient_; }
  bool is_zero_space() const { return dim() == 0; }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  /// Reduce v against the basis; zero remainder <=> membership.
  Vec reduce(Vec v) const {
    ensure(static_cast<int>(v.size()) == ambient_, "reduce: ambient mismatch");
    for (int i = 0; i < dim(); ++i) {
      const Scalar& c = v[pivots_[i]];
      if (c.is_zero()) continue;
      Scalar factor = c;
      for (int j = pivots_[i]; j < ambient_; ++j) {
        if (basis_.at(i, j).is_zero()) continue;
        v[j].sub_mul(factor, basis_.at(i, j));
      }
    }
    return v;
  }
  bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }
  bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) return false;
    for (int i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  /// Coordinates of a member vector in the RREF basis (exact; asserts membership).
  Vec coordinates(const Vec& v) const {
    Vec coords;
    coords.reserve(dim());
    for (int i = 0; i < dim(); ++i) coords.push_back(v[pivots_[i]]);
    // verify: v == coords . basis
    Vec check = v;
    for (int i = 0; i < dim(); ++i) {
      if (coords[i].is_zero()) continue;
      for (int j = 0; j < ambient_; ++j) {
        if (basis_.at(i, j).is_zero()) continue;
        check[j].sub_mul(coords[i], basis_.at(i, j));
      }
    }
    ensure(vec_is_zero(check), "coordinates: vector not in subspace");
    return coords;
  }

 private:
  int ambient_;
  Matrix basis_;
  std::vector<int> pivots_;
};

inline void check_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    fail(errc::ambient_mismatch, "subspace ambients " + std::to_string(a.ambient()) + " vs " +
                                     std::to_string(b.ambient()));
}

inline Subspace sum(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  std::vector<Vec> rows;
  rows.reserve(a.dim() + b.dim());
  for (int i = 0; i < a.dim(); ++i) rows.push_back(a.basis().row(i));
  for (int i = 0; i < b.dim(); ++i) rows.push_back(b.basis().row(i));
  return Subspace::span(a.field(), rows, a.ambient());
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.field(), a.ambient());
  // solve x.A = y.B: kernel of [A^T | -B^T]
  int n = a.ambient();
  Matrix m(a.field(), n, a.dim() + b.dim());
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < a.dim(); ++i) m.at(j, i) = a.basis().at(i, j);
    for (int i = 0; i < b.dim(); ++i) m.at(j, a.dim() + i) = -b.basis().at(i, j);
  }
  std::vector<Vec> rows;
  for (const Vec& w : kernel_rows(m)) {
    Vec v = vec_zero(a.field(), n);
    for (int i = 0; i < a.dim(); ++i) {
      if (w[i].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (a.basis().at(i, j).is_zero()) continue;
        v[j].add_mul(w[i], a.basis().at(i, j));
      }
    }
    rows.push_back(std::move(v));
  }
  return Subspace::span(a.field(), rows, n);
}

inline Subspace kernel(const Matrix& m) {
  return Subspace::span(m.field(), kernel_rows(m), m.cols());
}

/// Annihilator of s in the dual coordinate space: functionals vanishing on s.
inline Subspace annihilator(const Subspace& s) { return kernel(s.basis()); }

/// {v : f.v in t} for f mapping k^{f.cols()} -> k^{f.rows()}, t in the target.
/// Computed as the kernel of (annihilator-of-t composed with f); annihilator
/// rows are streamed so the target ambient is never materialized densely.
inline Subspace preimage(const Matrix& f, const Subspace& t) {
  if (f.rows() != t.ambient())
    fail(errc::dimension_mismatch, "preimage: map target dim " + std::to_string(f.rows()) +
                                       " vs subspace ambient " + std::to_string(t.ambient()));
  if (t.is_full()) return Subspace::full(f.field(), f.cols());
  const Matrix& b = t.basis();
  std::vector<bool> is_pivot(t.ambient(), false);
  for (int p : t.pivots()) is_pivot[p] = true;
  std::vector<Vec> constraints;
  for (int j = 0; j < t.ambient(); ++j) {
    if (is_pivot[j]) continue;
    // annihilator row w: w[j] = 1, w[pivot_i] = -b[i][j]; emit w.f directly
    Vec row = f.row(j);
    for (int i = 0; i < t.dim(); ++i) {
      const Scalar& c = b.at(i, j);
      if (c.is_zero()) continue;
      for (int col = 0; col < f.cols(); ++col) {
        const Scalar& fv = f.at(t.pivots()[i], col);
        if (fv.is_zero()) continue;
        row[col].sub_mul(c, fv);
      }
    }
    if (!vec_is_zero(row)) constraints.push_back(std::move(row));
  }
  if (constraints.empty()) return Subspace::full(f.field(), f.cols());
  return kernel(Matrix::from_rows(f.field(), constraints, f.cols()));
}

/// Coset representatives extending a basis of w to v; rows of RREF(v) taken
/// greedily in index order.  Empty matrix when v == w.
inline Matrix quotient_basis(const Subspace& v, const Subspace& w) {
  check_same_ambient(v, w);
  if (!v.contains(w)) fail(errc::not_a_subspace, "quotient_basis: w is not contained in v");
  std::vector<Vec> working;
  for (int i = 0; i < w.dim(); ++i) working.push_back(w.basis().row(i));
  Subspace cur = w;
  std::vector<Vec> reps;
  for (int i = 0; i < v.dim(); ++i) {
    Vec r = v.basis().row(i);
    if (cur.contains(r)) continue;
    reps.push_back(r);
    working.push_back(r);
    cur = Subspace::span(v.field(), working, v.ambient());
  }
  ensure(cur == v, "quotient_basis: completion failed");
  return Matrix::from_rows(v.field(), reps, v.ambient());
}

}  // namespace corad
