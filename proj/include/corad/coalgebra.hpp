#pragma once

// Finite-dimensional coalgebras and algebras by structure constants over a
// cyclotomic field.  Comultiplication is Delta(e_k) = sum c^k_{ij} e_i (x) e_j,
// multiplication is e_i e_j = sum m^k_{ij} e_k.  The coradical filtration is
// computed by two independent routes: perps of Jacobson-radical powers of the
// dual algebra, and iterated wedge with the coradical.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "corad/linalg.hpp"

namespace corad {

struct TensorTerm {
  int i, j;
  Scalar a;
};

struct ProdTerm {
  int k;
  Scalar a;
};

using SparseTensor = std::map<std::pair<int, int>, Scalar>;

inline void tensor_add(SparseTensor& t, int i, int j, const Scalar& a) {
  if (a.is_zero()) return;
  auto key = std::make_pair(i, j);
  auto it = t.find(key);
  if (it == t.end()) {
    t.emplace(key, a);
  } else {
    it->second += a;
    if (it->second.is_zero()) t.erase(it);
  }
}

struct Coalgebra {
  int dim = 0;
  const CycloField* field = nullptr;
  std::vector<std::vector<TensorTerm>> delta;  // by k
  std::vector<Scalar> counit;                  // epsilon(e_k)

  Coalgebra() = default;
  Coalgebra(const CycloField& f, int n)
      : dim(n), field(&f), delta(n), counit(n, Scalar::zero(f)) {}

  void add_delta(int k, int i, int j, Scalar a) {
    if (a.is_zero()) return;
    delta[k].push_back(TensorTerm{i, j, std::move(a)});
  }

  /// Delta applied to a coordinate vector, as a sparse order-2 tensor.
  SparseTensor delta_of(const Vec& v) const {
    SparseTensor t;
    for (int k = 0; k < dim; ++k) {
      if (v[k].is_zero()) continue;
      for (const TensorTerm& term : delta[k]) tensor_add(t, term.i, term.j, v[k] * term.a);
    }
    return t;
  }

  Scalar counit_of(const Vec& v) const {
    Scalar s = Scalar::zero(*field);
    for (int k = 0; k < dim; ++k) {
      if (v[k].is_zero() || counit[k].is_zero()) continue;
      s += v[k] * counit[k];
    }
    return s;
  }
};

struct Algebra {
  int dim = 0;
  const CycloField* field = nullptr;
  std::vector<std::vector<ProdTerm>> mult;  // by i*dim + j
  Vec unit;

  Algebra() = default;
  Algebra(const CycloField& f, int n)
      : dim(n), field(&f), mult(static_cast<std::size_t>(n) * n), unit(vec_zero(f, n)) {}

  const std::vector<ProdTerm>& cell(int i, int j) const {
    return mult[static_cast<std::size_t>(i) * dim + j];
  }
  void add_mult(int i, int j, int k, Scalar a) {
    if (a.is_zero()) return;
    mult[static_cast<std::size_t>(i) * dim + j].push_back(ProdTerm{k, std::move(a)});
  }

  Vec multiply(const Vec& x, const Vec& y) const {
    Vec r = vec_zero(*field, dim);
    for (int i = 0; i < dim; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < dim; ++j) {
        if (y[j].is_zero()) continue;
        Scalar c = x[i] * y[j];
        for (const ProdTerm& t : cell(i, j)) r[t.k].add_mul(c, t.a);
      }
    }
    return r;
  }

  /// Matrix of left multiplication by basis element e_i.
  Matrix left_mult_matrix(int i) const {
    Matrix m(*field, dim, dim);
    for (int j = 0; j < dim; ++j)
      for (const ProdTerm& t : cell(i, j)) m.at(t.k, j) += t.a;
    return m;
  }
};

// --- validation ---------------------------------------------------------------

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

inline ValidationReport validate_coalgebra(const Coalgebra& c) {
  ValidationReport rep;
  // coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta, order-3 tensors
  for (int k = 0; k < c.dim; ++k) {
    std::map<std::tuple<int, int, int>, Scalar> diff;
    auto add3 = [&](int p, int q, int r, const Scalar& a) {
      if (a.is_zero()) return;
      auto key = std::make_tuple(p, q, r);
      auto it = diff.find(key);
      if (it == diff.end())
        diff.emplace(key, a);
      else {
        it->second += a;
        if (it->second.is_zero()) diff.erase(it);
      }
    };
    for (const TensorTerm& t : c.delta[k]) {
      for (const TensorTerm& u : c.delta[t.i]) add3(u.i, u.j, t.j, t.a * u.a);
      for (const TensorTerm& u : c.delta[t.j]) add3(t.i, u.i, u.j, -(t.a * u.a));
    }
    if (!diff.empty()) {
      rep.violations.push_back("coassociativity fails on basis element " + std::to_string(k));
    }
  }
  // counit: (eps (x) id) Delta = id = (id (x) eps) Delta
  for (int k = 0; k < c.dim; ++k) {
    Vec left = vec_zero(*c.field, c.dim), right = vec_zero(*c.field, c.dim);
    for (const TensorTerm& t : c.delta[k]) {
      left[t.j] += t.a * c.counit[t.i];
      right[t.i] += t.a * c.counit[t.j];
    }
    left[k] -= Scalar::one(*c.field);
    right[k] -= Scalar::one(*c.field);
    if (!vec_is_zero(left))
      rep.violations.push_back("left counit law fails on basis element " + std::to_string(k));
    if (!vec_is_zero(right))
      rep.violations.push_back("right counit law fails on basis element " + std::to_string(k));
  }
  return rep;
}

inline ValidationReport validate_algebra(const Algebra& a) {
  ValidationReport rep;
  for (int i = 0; i < a.dim && rep.violations.size() < 32; ++i) {
    for (int j = 0; j < a.dim; ++j) {
      for (int k = 0; k < a.dim; ++k) {
        // (e_i e_j) e_k vs e_i (e_j e_k)
        Vec lhs = vec_zero(*a.field, a.dim), rhs = vec_zero(*a.field, a.dim);
        for (const ProdTerm& t : a.cell(i, j))
          for (const ProdTerm& u : a.cell(t.k, k)) lhs[u.k] += t.a * u.a;
        for (const ProdTerm& t : a.cell(j, k))
          for (const ProdTerm& u : a.cell(i, t.k)) rhs[u.k] += t.a * u.a;
        if (!(lhs == rhs)) {
          rep.violations.push_back("associativity fails at (" + std::to_string(i) + "," +
                                   std::to_string(j) + "," + std::to_string(k) + ")");
        }
      }
    }
  }
  for (int i = 0; i < a.dim; ++i) {
    Vec ei = vec_zero(*a.field, a.dim);
    ei[i] = Scalar::one(*a.field);
    if (!(a.multiply(a.unit, ei) == ei))
      rep.violations.push_back("left unit law fails on basis element " + std::to_string(i));
    if (!(a.multiply(ei, a.unit) == ei))
      rep.violations.push_back("right unit law fails on basis element " + std::to_string(i));
  }
  return rep;
}

// --- duals --------------------------------------------------------------------

/// Convolution algebra C^*: (f g)(e_k) = sum c^k_{ij} f(e_i) g(e_j), unit eps.
inline Algebra dual_algebra(const Coalgebra& c) {
  Algebra a(*c.field, c.dim);
  for (int k = 0; k < c.dim; ++k)
    for (const TensorTerm& t : c.delta[k]) a.add_mult(t.i, t.j, k, t.a);
  a.unit = c.counit;
  return a;
}

/// Coalgebra structure on the dual basis of a finite-dimensional algebra.
inline Coalgebra dual_coalgebra(const Algebra& a) {
  Coalgebra c(*a.field, a.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      for (const ProdTerm& t : a.cell(i, j)) c.add_delta(t.k, i, j, t.a);
  c.counit = a.unit;
  return c;
}

// --- radical and coradical ------------------------------------------------------

/// Jacobson radical via the Dickson trace-form criterion (characteristic 0):
/// rad A = { x : trace(L_{x y}) = 0 for all y }.
inline Subspace jacobson_radical(const Algebra& a) {
  std::vector<Matrix> lmat;
  lmat.reserve(a.dim);
  for (int i = 0; i < a.dim; ++i) lmat.push_back(a.left_mult_matrix(i));
  Matrix gram(*a.field, a.dim, a.dim);
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < a.dim; ++j) {
      Scalar tr = Scalar::zero(*a.field);
      for (int p = 0; p < a.dim; ++p)
        for (int q = 0; q < a.dim; ++q) {
          if (lmat[i].at(p, q).is_zero() || lmat[j].at(q, p).is_zero()) continue;
          tr.add_mul(lmat[i].at(p, q), lmat[j].at(q, p));
        }
      gram.at(i, j) = tr;
    }
  }
  return kernel(gram);  // trace form is symmetric
}

/// C_0 = J^perp inside C, computed from the radical of the dual algebra.
inline Subspace coradical(const Coalgebra& c) {
  Subspace j = jacobson_radical(dual_algebra(c));
  if (j.dim() == 0) return Subspace::full(*c.field, c.dim);
  return kernel(j.basis());
}

/// X wedge Y = Delta^{-1}(X (x) C + C (x) Y).  The annihilator of that sum is
/// ann X (x) ann Y, so one functional row per annihilator pair suffices; this
/// is the preimage computation without materializing the n^2 ambient.
inline Subspace wedge(const Coalgebra& c, const Subspace& x, const Subspace& y) {
  if (x.ambient() != c.dim || y.ambient() != c.dim)
    fail(errc::ambient_mismatch, "wedge arguments must live in the coalgebra");
  Subspace ax = annihilator(x);
  Subspace ay = annihilator(y);
  std::vector<Vec> rows;
  rows.reserve(static_cast<std::size_t>(ax.dim()) * ay.dim());
  for (int r = 0; r < ax.dim(); ++r) {
    for (int s = 0; s < ay.dim(); ++s) {
      Vec row = vec_zero(*c.field, c.dim);
      for (int k = 0; k < c.dim; ++k) {
        Scalar acc = Scalar::zero(*c.field);
        for (const TensorTerm& t : c.delta[k]) {
          const Scalar& fi = ax.basis().at(r, t.i);
          if (fi.is_zero()) continue;
          const Scalar& gj = ay.basis().at(s, t.j);
          if (gj.is_zero()) continue;
          acc.add_mul(t.a * fi, gj);
        }
        row[k] = std::move(acc);
      }
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return Subspace::full(*c.field, c.dim);
  return kernel(Matrix::from_rows(*c.field, rows, c.dim));
}

// --- coradical filtration -------------------------------------------------------

struct Filtration {
  std::vector<Subspace> chain;  // strictly increasing, last term full
  int length() const { return static_cast<int>(chain.size()) - 1; }
  /// Term at index m, with C_m = C for m beyond the stabilization point and
  /// C_{-1} = 0.
  const Subspace& at(int m) const {
    ensure(!chain.empty(), "empty filtration");
    if (m < 0) {
      static thread_local std::map<std::pair<const CycloField*, int>, Subspace> zeros;
      auto key = std::make_pair(&chain[0].field(), chain[0].ambient());
      auto it = zeros.find(key);
      if (it == zeros.end())
        it = zeros.emplace(key, Subspace::zero(chain[0].field(), chain[0].ambient())).first;
      return it->second;
    }
    return chain[std::min<std::size_t>(m, chain.size() - 1)];
  }
  std::vector<int> dims() const {
    std::vector<int> d;
    for (const Subspace& s : chain) d.push_back(s.dim());
    return d;
  }
};

enum class CoradRoute { perp, wedge };

inline Filtration coradical_filtration(const Coalgebra& c, CoradRoute route = CoradRoute::perp) {
  Filtration filt;
  if (route == CoradRoute::perp) {
    Algebra a = dual_algebra(c);
    Subspace j = jacobson_radical(a);
    Subspace power = j;  // J^{n+1} while building C_n
    for (int n = 0; n <= c.dim; ++n) {
      Subspace cn = power.dim() == 0 ? Subspace::full(*c.field, c.dim) : kernel(power.basis());
      if (!filt.chain.empty())
        ensure(cn.dim() > filt.chain.back().dim(), "coradical filtration failed to grow");
      filt.chain.push_back(cn);
      if (cn.is_full()) return filt;
      // next power: J^{n+2} = J^{n+1} . J
      std::vector<Vec> prods;
      prods.reserve(static_cast<std::size_t>(power.dim()) * j.dim());
      for (int p = 0; p < power.dim(); ++p)
        for (int q = 0; q < j.dim(); ++q)
          prods.push_back(a.multiply(power.basis().row(p), j.basis().row(q)));
      power = Subspace::span(*c.field, prods, c.dim);
    }
  } else {
    Subspace c0 = coradical(c);
    filt.chain.push_back(c0);
    for (int n = 0; n <= c.dim; ++n) {
      if (filt.chain.back().is_full()) return filt;
      Subspace next = wedge(c, filt.chain.back(), c0);
      ensure(next.dim() > filt.chain.back().dim(), "wedge filtration failed to grow");
      filt.chain.push_back(next);
    }
  }
  fail(errc::internal, "coradical filtration did not stabilize within dim steps");
}

/// Membership of a sparse tensor in sum_{i=0..n} U_i (x) V_{n-i}.  That sum
/// equals the intersection of the corner spaces U_a (x) C + C (x) V_{n-1-a}
/// over a = -1 .. n (with U_{-1} = V_{-1} = 0), and each corner space is cut
/// out by the functionals ann(U_a) (x) ann(V_{n-1-a}).
inline bool tensor_in_filtration_sum(const SparseTensor& t, const Filtration& u,
                                     const Filtration& v, int n, const CycloField& f) {
  if (t.empty()) return true;
  for (int a = -1; a <= n; ++a) {
    Subspace au = annihilator(u.at(a));
    Subspace av = annihilator(v.at(n - 1 - a));
    for (int r = 0; r < au.dim(); ++r) {
      for (int s = 0; s < av.dim(); ++s) {
        Scalar acc = Scalar::zero(f);
        for (const auto& [key, val] : t) {
          const Scalar& fi = au.basis().at(r, key.first);
          if (fi.is_zero()) continue;
          const Scalar& gj = av.basis().at(s, key.second);
          if (gj.is_zero()) continue;
          acc.add_mul(val * fi, gj);
        }
        if (!acc.is_zero()) return false;
      }
    }
  }
  return true;
}

/// Delta(C_n) in sum_{i<=n} C_i (x) C_{n-i}, exactly, for every n.
inline bool is_coalgebra_filtration(const Coalgebra& c, const Filtration& filt) {
  for (int n = 0; n <= filt.length(); ++n) {
    const Subspace& cn = filt.at(n);
    for (int r = 0; r < cn.dim(); ++r) {
      SparseTensor t = c.delta_of(cn.basis().row(r));
      if (!tensor_in_filtration_sum(t, filt, filt, n, *c.field)) return false;
    }
  }
  return true;
}

// --- associated graded coalgebra -------------------------------------------------

struct GradedCoalgebra {
  Coalgebra coalg;          // in the graded basis
  std::vector<int> degree;  // degree of each graded basis element
  Matrix reps;              // graded basis in original coordinates (rows)
  Matrix reps_inv;
  Filtration filt;  // coradical filtration of the source

  int top_degree() const { return degree.empty() ? -1 : degree.back(); }
  std::vector<int> component_dims() const {
    std::vector<int> d(top_degree() + 1, 0);
    for (int g : degree) d[g]++;
    return d;
  }
  Subspace component(int n) const {
    std::vector<Vec> rows;
    for (std::size_t t = 0; t < degree.size(); ++t) {
      if (degree[t] != n) continue;
      Vec v = vec_zero(*coalg.field, coalg.dim);
      v[t] = Scalar::one(*coalg.field);
      rows.push_back(std::move(v));
    }
    return Subspace::from_rref_rows(*coalg.field, rows, coalg.dim);
  }
  /// Partial sums oplus_{i<=n} component(i) as subspaces of the graded space.
  Subspace partial_sum(int n) const {
    std::vector<Vec> rows;
    for (std::size_t t = 0; t < degree.size(); ++t) {
      if (degree[t] > n) continue;
      Vec v = vec_zero(*coalg.field, coalg.dim);
      v[t] = Scalar::one(*coalg.field);
      rows.push_back(std::move(v));
    }
    return Subspace::span(*coalg.field, rows, coalg.dim);
  }
};

/// gr C on oplus C_n/C_{n-1} with the degreewise-induced comultiplication.
inline GradedCoalgebra associated_graded(const Coalgebra& c, const Filtration& filt) {
  GradedCoalgebra g;
  g.filt = filt;
  std::vector<Vec> rep_rows;
  for (int n = 0; n <= filt.length(); ++n) {
    Matrix reps = n == 0 ? filt.at(0).basis() : quotient_basis(filt.at(n), filt.at(n - 1));
    for (int r = 0; r < reps.rows(); ++r) {
      rep_rows.push_back(reps.row(r));
      g.degree.push_back(n);
    }
  }
  ensure(static_cast<int>(rep_rows.size()) == c.dim, "graded basis has wrong size");
  g.reps = Matrix::from_rows(*c.field, rep_rows, c.dim);
  g.reps_inv = inverse(g.reps);

  g.coalg = Coalgebra(*c.field, c.dim);
  for (int t = 0; t < c.dim; ++t) {
    int m = g.degree[t];
    SparseTensor dt = c.delta_of(rep_rows[t]);
    // convert to graded-basis coordinates and keep the bidegree-(i, m-i) part
    Matrix acc(*c.field, c.dim, c.dim);
    for (const auto& [key, val] : dt) {
      const int p = key.first, q = key.second;
      for (int s = 0; s < c.dim; ++s) {
        const Scalar& bs = g.reps_inv.at(p, s);
        if (bs.is_zero()) continue;
        Scalar vb = val * bs;
        for (int u = 0; u < c.dim; ++u) {
          const Scalar& bu = g.reps_inv.at(q, u);
          if (bu.is_zero()) continue;
          acc.at(s, u).add_mul(vb, bu);
        }
      }
    }
    for (int s = 0; s < c.dim; ++s) {
      for (int u = 0; u < c.dim; ++u) {
        if (acc.at(s, u).is_zero()) continue;
        int bideg = g.degree[s] + g.degree[u];
        ensure(bideg <= m, "comultiplication exceeds filtration degree");
        if (bideg == m) g.coalg.add_delta(t, s, u, acc.at(s, u));
      }
    }
    g.coalg.counit[t] = (m == 0) ? c.counit_of(rep_rows[t]) : Scalar::zero(*c.field);
  }
  return g;
}

inline GradedCoalgebra associated_graded(const Coalgebra& c) {
  return associated_graded(c, coradical_filtration(c, CoradRoute::perp));
}

inline bool grouplike_check(const Coalgebra& c, const Vec& v) {
  SparseTensor dv = c.delta_of(v);
  for (int i = 0; i < c.dim; ++i) {
    for (int j = 0; j < c.dim; ++j) {
      Scalar expect = v[i] * v[j];
      auto it = dv.find(std::make_pair(i, j));
      Scalar got = it == dv.end() ? Scalar::zero(*c.field) : it->second;
      if (!(expect == got)) return false;
    }
  }
  return c.counit_of(v).is_one();
}

}  // namespace corad
