#pragma once

// Right comodules over a coalgebra: Loewy series by two routes, socles,
// associated graded comodules, Poincare series, and injective envelopes
// inside C via exact idempotent lifting in the dual algebra.

#include <optional>
#include <vector>

#include "corad/coalgebra.hpp"

namespace corad {

struct CoactTerm {
  int i, j;  // m_i (x) e_j
  Scalar a;
};

inline bool same_coalgebra(const Coalgebra& a, const Coalgebra& b) {
  if (a.dim != b.dim || a.field != b.field) return false;
  for (int k = 0; k < a.dim; ++k) {
    SparseTensor ta, tb;
    for (const TensorTerm& t : a.delta[k]) tensor_add(ta, t.i, t.j, t.a);
    for (const TensorTerm& t : b.delta[k]) tensor_add(tb, t.i, t.j, t.a);
    if (!(ta == tb)) return false;
  }
  return a.counit == b.counit;
}

struct Comodule {
  int dim = 0;
  Coalgebra over;
  std::vector<std::vector<CoactTerm>> rho;  // by k: rho(m_k) = sum a m_i (x) e_j

  Comodule() = default;
  Comodule(Coalgebra c, int n) : dim(n), over(std::move(c)), rho(n) {}

  const CycloField& field() const { return *over.field; }

  void add_rho(int k, int i, int j, Scalar a) {
    if (a.is_zero()) return;
    rho[k].push_back(CoactTerm{i, j, std::move(a)});
  }

  SparseTensor rho_of(const Vec& v) const {
    SparseTensor t;
    for (int k = 0; k < dim; ++k) {
      if (v[k].is_zero()) continue;
      for (const CoactTerm& term : rho[k]) tensor_add(t, term.i, term.j, v[k] * term.a);
    }
    return t;
  }
};

/// C as a right comodule over itself (rho = Delta).
inline Comodule regular_comodule(const Coalgebra& c) {
  Comodule m(c, c.dim);
  for (int k = 0; k < c.dim; ++k)
    for (const TensorTerm& t : c.delta[k]) m.add_rho(k, t.i, t.j, t.a);
  return m;
}

/// 1-dimensional comodule spanned by a grouplike element g.
inline Comodule grouplike_comodule(const Coalgebra& c, const Vec& g) {
  ensure(grouplike_check(c, g), "grouplike_comodule: vector is not grouplike");
  Comodule m(c, 1);
  for (int j = 0; j < c.dim; ++j)
    if (!g[j].is_zero()) m.add_rho(0, 0, j, g[j]);
  return m;
}

inline ValidationReport validate_comodule(const Comodule& m) {
  ValidationReport rep;
  const Coalgebra& c = m.over;
  for (int k = 0; k < m.dim; ++k) {
    // (rho (x) id) rho = (id (x) Delta) rho as m (x) e (x) e tensors
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
    for (const CoactTerm& t : m.rho[k]) {
      for (const CoactTerm& u : m.rho[t.i]) add3(u.i, u.j, t.j, t.a * u.a);
      for (const TensorTerm& u : c.delta[t.j]) add3(t.i, u.i, u.j, -(t.a * u.a));
    }
    if (!diff.empty())
      rep.violations.push_back("coaction coassociativity fails on basis element " + std::to_string(k));
    Vec counit_side = vec_zero(m.field(), m.dim);
    for (const CoactTerm& t : m.rho[k]) counit_side[t.i] += t.a * c.counit[t.j];
    counit_side[k] -= Scalar::one(m.field());
    if (!vec_is_zero(counit_side))
      rep.violations.push_back("coaction counit law fails on basis element " + std::to_string(k));
  }
  return rep;
}

// --- Loewy series ----------------------------------------------------------------

/// Matrix of the left C^*-action of functional f: f . m = sum f(m_1) m_0.
inline Matrix action_matrix(const Comodule& m, const Vec& functional) {
  Matrix a(m.field(), m.dim, m.dim);
  for (int k = 0; k < m.dim; ++k)
    for (const CoactTerm& t : m.rho[k]) {
      if (functional[t.j].is_zero()) continue;
      a.at(t.i, k).add_mul(t.a, functional[t.j]);
    }
  return a;
}

/// Joint kernel of the actions of all basis functionals of a dual subspace.
inline Subspace annihilated_by(const Comodule& m, const Subspace& functionals) {
  if (functionals.dim() == 0) return Subspace::full(m.field(), m.dim);
  std::vector<Vec> rows;
  rows.reserve(static_cast<std::size_t>(functionals.dim()) * m.dim);
  for (int r = 0; r < functionals.dim(); ++r) {
    Matrix a = action_matrix(m, functionals.basis().row(r));
    for (int i = 0; i < m.dim; ++i) rows.push_back(a.row(i));
  }
  return kernel(Matrix::from_rows(m.field(), rows, m.dim));
}

enum class LoewyRoute { ann, preimage };

/// The coaction as a matrix k^dim -> k^{dim * n_C}, column k = rho(m_k).
inline Matrix coaction_matrix(const Comodule& m) {
  int nc = m.over.dim;
  Matrix r(m.field(), m.dim * nc, m.dim);
  for (int k = 0; k < m.dim; ++k)
    for (const CoactTerm& t : m.rho[k]) r.at(t.i * nc + t.j, k) += t.a;
  return r;
}

/// M (x) W as a subspace of k^{dim * n_C}; rows e_i (x) w are already RREF.
inline Subspace tensor_with_comodule_ambient(const Comodule& m, const Subspace& w) {
  std::vector<Vec> rows;
  int nc = m.over.dim;
  rows.reserve(static_cast<std::size_t>(m.dim) * w.dim());
  for (int i = 0; i < m.dim; ++i) {
    for (int r = 0; r < w.dim(); ++r) {
      Vec row = vec_zero(m.field(), m.dim * nc);
      for (int j = 0; j < nc; ++j) {
        const Scalar& x = w.basis().at(r, j);
        if (!x.is_zero()) row[i * nc + j] = x;
      }
      rows.push_back(std::move(row));
    }
  }
  return Subspace::from_rref_rows(m.field(), rows, m.dim * nc);
}

inline Filtration loewy_series(const Comodule& m, LoewyRoute route = LoewyRoute::ann) {
  Filtration filt;
  if (route == LoewyRoute::ann) {
    Algebra a = dual_algebra(m.over);
    Subspace j = jacobson_radical(a);
    Subspace power = j;  // J^{n+1} while building M_n
    for (int n = 0; n <= m.dim; ++n) {
      Subspace mn = annihilated_by(m, power);
      if (!filt.chain.empty())
        ensure(mn.dim() > filt.chain.back().dim(), "Loewy series failed to grow");
      filt.chain.push_back(mn);
      if (mn.is_full()) return filt;
      std::vector<Vec> prods;
      for (int p = 0; p < power.dim(); ++p)
        for (int q = 0; q < j.dim(); ++q)
          prods.push_back(a.multiply(power.basis().row(p), j.basis().row(q)));
      power = Subspace::span(m.field(), prods, m.over.dim);
    }
  } else {
    Filtration cfilt = coradical_filtration(m.over, CoradRoute::perp);
    Matrix rho = coaction_matrix(m);
    for (int n = 0; n <= m.dim; ++n) {
      Subspace mn = preimage(rho, tensor_with_comodule_ambient(m, cfilt.at(n)));
      if (!filt.chain.empty())
        ensure(mn.dim() > filt.chain.back().dim(), "Loewy series failed to grow");
      filt.chain.push_back(mn);
      if (mn.is_full()) return filt;
    }
  }
  fail(errc::internal, "Loewy series did not stabilize within dim steps");
}

inline Subspace socle(const Comodule& m) {
  Algebra a = dual_algebra(m.over);
  return annihilated_by(m, jacobson_radical(a));
}

inline bool is_completely_reducible(const Comodule& m) { return socle(m).is_full(); }

/// rho(M_n) in sum_{i<=n} M_i (x) C_{n-i}, exactly, for every n.
inline bool rho_respects_filtration(const Comodule& m, const Filtration& loewy,
                                    const Filtration& cfilt) {
  for (int n = 0; n <= loewy.length(); ++n) {
    const Subspace& mn = loewy.at(n);
    for (int r = 0; r < mn.dim(); ++r) {
      if (!tensor_in_filtration_sum(m.rho_of(mn.basis().row(r)), loewy, cfilt, n, m.field()))
        return false;
    }
  }
  return true;
}

// --- restriction and sums ---------------------------------------------------------

/// Restriction of the coaction to a subcomodule span (basis = RREF rows of s).
inline Comodule restrict_comodule(const Comodule& m, const Subspace& s) {
  ensure(s.ambient() == m.dim, "restrict_comodule: ambient mismatch");
  Comodule out(m.over, s.dim());
  int nc = m.over.dim;
  for (int r = 0; r < s.dim(); ++r) {
    SparseTensor t = m.rho_of(s.basis().row(r));
    // group by the coalgebra leg
    std::map<int, Vec> by_j;
    for (const auto& [key, val] : t) {
      auto it = by_j.find(key.second);
      if (it == by_j.end()) it = by_j.emplace(key.second, vec_zero(m.field(), m.dim)).first;
      it->second[key.first] += val;
    }
    for (auto& [j, v] : by_j) {
      if (!s.contains(v)) fail(errc::not_a_subspace, "restrict_comodule: span is not a subcomodule");
      Vec coords = s.coordinates(v);
      for (int i = 0; i < s.dim(); ++i)
        if (!coords[i].is_zero()) out.add_rho(r, i, j, coords[i]);
    }
    (void)nc;
  }
  return out;
}

inline Comodule direct_sum(const Comodule& a, const Comodule& b) {
  if (!same_coalgebra(a.over, b.over)) fail(errc::base_mismatch, "direct_sum: different base coalgebras");
  Comodule out(a.over, a.dim + b.dim);
  for (int k = 0; k < a.dim; ++k)
    for (const CoactTerm& t : a.rho[k]) out.add_rho(k, t.i, t.j, t.a);
  for (int k = 0; k < b.dim; ++k)
    for (const CoactTerm& t : b.rho[k]) out.add_rho(a.dim + k, a.dim + t.i, t.j, t.a);
  return out;
}

// --- associated graded comodule ----------------------------------------------------

struct GradedComodule {
  Comodule com;  // over gr C, in the graded basis
  std::vector<int> degree;
  Matrix reps;  // graded basis rows in original M coordinates
  Filtration loewy;

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
      Vec v = vec_zero(com.field(), com.dim);
      v[t] = Scalar::one(com.field());
      rows.push_back(std::move(v));
    }
    return Subspace::from_rref_rows(com.field(), rows, com.dim);
  }
};

/// gr M over gr C with the degreewise-induced coaction.
inline GradedComodule associated_graded_comodule(const Comodule& m, const GradedCoalgebra& grc) {
  GradedComodule g;
  g.loewy = loewy_series(m, LoewyRoute::ann);
  std::vector<Vec> rep_rows;
  for (int n = 0; n <= g.loewy.length(); ++n) {
    Matrix reps = n == 0 ? g.loewy.at(0).basis() : quotient_basis(g.loewy.at(n), g.loewy.at(n - 1));
    for (int r = 0; r < reps.rows(); ++r) {
      rep_rows.push_back(reps.row(r));
      g.degree.push_back(n);
    }
  }
  ensure(static_cast<int>(rep_rows.size()) == m.dim, "graded comodule basis has wrong size");
  g.reps = Matrix::from_rows(m.field(), rep_rows, m.dim);
  Matrix reps_inv = inverse(g.reps);

  g.com = Comodule(grc.coalg, m.dim);
  int nc = m.over.dim;
  for (int t = 0; t < m.dim; ++t) {
    int deg = g.degree[t];
    SparseTensor rt = m.rho_of(rep_rows[t]);
    Matrix acc(m.field(), m.dim, nc);
    for (const auto& [key, val] : rt) {
      const int p = key.first, q = key.second;
      for (int s = 0; s < m.dim; ++s) {
        const Scalar& bs = reps_inv.at(p, s);
        if (bs.is_zero()) continue;
        Scalar vb = val * bs;
        for (int u = 0; u < nc; ++u) {
          const Scalar& bu = grc.reps_inv.at(q, u);
          if (bu.is_zero()) continue;
          acc.at(s, u).add_mul(vb, bu);
        }
      }
    }
    for (int s = 0; s < m.dim; ++s) {
      for (int u = 0; u < nc; ++u) {
        if (acc.at(s, u).is_zero()) continue;
        int bideg = g.degree[s] + grc.degree[u];
        ensure(bideg <= deg, "coaction exceeds Loewy degree");
        if (bideg == deg) g.com.add_rho(t, s, u, acc.at(s, u));
      }
    }
  }
  return g;
}

inline GradedComodule associated_graded_comodule(const Comodule& m) {
  return associated_graded_comodule(m, associated_graded(m.over));
}

// --- idempotent lifting and injective envelopes -------------------------------------

/// Lifts orthogonal idempotents mod rad(a) to exact orthogonal idempotents,
/// preserving congruence mod the radical and the sum-to-unit property.
inline std::vector<Vec> lift_idempotents(const Algebra& a, const std::vector<Vec>& residues) {
  Subspace rad = jacobson_radical(a);
  auto in_rad = [&](const Vec& v) { return rad.contains(v); };
  for (std::size_t i = 0; i < residues.size(); ++i) {
    Vec sq = a.multiply(residues[i], residues[i]);
    if (!in_rad(vec_sub(sq, residues[i])))
      fail(errc::not_idempotent_mod_radical, "residue " + std::to_string(i));
    for (std::size_t j = 0; j < i; ++j) {
      if (!in_rad(a.multiply(residues[i], residues[j])) ||
          !in_rad(a.multiply(residues[j], residues[i])))
        fail(errc::not_orthogonal_mod_radical,
             "residues " + std::to_string(i) + ", " + std::to_string(j));
    }
  }
  Vec total = vec_zero(*a.field, a.dim);
  for (const Vec& r : residues) total = vec_add(total, r);
  if (!in_rad(vec_sub(total, a.unit)))
    fail(errc::not_idempotent_mod_radical, "residues do not sum to the unit mod radical");

  int newton_cap = 2;
  while ((1 << newton_cap) < a.dim + 1) ++newton_cap;
  newton_cap += 2;

  std::vector<Vec> lifted;
  Vec partial = vec_zero(*a.field, a.dim);  // sum of previously lifted idempotents
  for (const Vec& res : residues) {
    Vec u = vec_sub(a.unit, partial);
    Vec e = a.multiply(a.multiply(u, res), u);
    for (int it = 0; it < newton_cap; ++it) {
      Vec e2 = a.multiply(e, e);
      if (e2 == e) break;
      // e <- 3 e^2 - 2 e^3
      Vec e3 = a.multiply(e2, e);
      Vec next = vec_zero(*a.field, a.dim);
      Scalar three = Scalar::from_int(*a.field, 3), two = Scalar::from_int(*a.field, 2);
      next = vec_sub(vec_scale(three, e2), vec_scale(two, e3));
      e = std::move(next);
    }
    ensure(a.multiply(e, e) == e, "idempotent lifting did not converge");
    lifted.push_back(e);
    partial = vec_add(partial, e);
  }
  ensure(partial == a.unit, "lifted idempotents do not sum to the unit");
  for (std::size_t i = 0; i < lifted.size(); ++i)
    for (std::size_t j = 0; j < lifted.size(); ++j) {
      if (i == j) continue;
      ensure(vec_is_zero(a.multiply(lifted[i], lifted[j])), "lifted idempotents not orthogonal");
    }
  return lifted;
}

struct Envelope {
  Subspace span;  // E(S) inside C
  Comodule com;   // restricted coaction
  Subspace simple;  // the socle S it envelopes, inside C
};

/// C = oplus E(S) along a decomposition of the coradical into simple right
/// subcomodules: the projection idempotents in C_0^* = C^*/J are lifted
/// exactly, and E(S) is the image of the left hit action of the lift.
inline std::vector<Envelope> injective_decomposition(const Coalgebra& c,
                                                     const std::vector<Subspace>& split) {
  Subspace c0 = coradical(c);
  int total = 0;
  Subspace acc = Subspace::zero(*c.field, c.dim);
  for (const Subspace& s : split) {
    if (s.ambient() != c.dim) fail(errc::ambient_mismatch, "simple split ambient mismatch");
    if (s.dim() == 0) fail(errc::not_a_decomposition, "zero summand in simple split");
    total += s.dim();
    acc = sum(acc, s);
  }
  if (total != c0.dim() || !(acc == c0))
    fail(errc::not_a_decomposition, "split does not decompose the coradical");
  Comodule reg = regular_comodule(c);
  std::vector<Comodule> restricted;
  for (const Subspace& s : split) {
    Comodule sub = restrict_comodule(reg, s);  // throws NotASubspace when invalid
    if (!is_completely_reducible(sub))
      fail(errc::not_a_decomposition, "split member is not its own socle");
    restricted.push_back(std::move(sub));
  }

  // residues: eps o (projection onto S_r along the rest), extended by zero on
  // a fixed completion of C_0 in C
  std::vector<Vec> basis_rows;
  for (const Subspace& s : split)
    for (int r = 0; r < s.dim(); ++r) basis_rows.push_back(s.basis().row(r));
  Matrix completion = quotient_basis(Subspace::full(*c.field, c.dim), c0);
  for (int r = 0; r < completion.rows(); ++r) basis_rows.push_back(completion.row(r));
  Matrix bfull = Matrix::from_rows(*c.field, basis_rows, c.dim);
  Matrix binv = inverse(bfull);
  std::vector<Vec> residues;
  int offset = 0;
  for (const Subspace& s : split) {
    Vec vals = vec_zero(*c.field, c.dim);
    for (int r = 0; r < s.dim(); ++r) vals[offset + r] = c.counit_of(s.basis().row(r));
    Vec functional = vec_zero(*c.field, c.dim);
    for (int k = 0; k < c.dim; ++k) {
      Scalar x = Scalar::zero(*c.field);
      for (int s2 = 0; s2 < c.dim; ++s2) {
        if (binv.at(k, s2).is_zero() || vals[s2].is_zero()) continue;
        x += binv.at(k, s2) * vals[s2];
      }
      functional[k] = std::move(x);
    }
    residues.push_back(std::move(functional));
    offset += s.dim();
  }

  Algebra dual = dual_algebra(c);
  std::vector<Vec> idems;
  try {
    idems = lift_idempotents(dual, residues);
  } catch (const error& e) {
    if (e.kind() == errc::not_idempotent_mod_radical || e.kind() == errc::not_orthogonal_mod_radical)
      fail(errc::coradical_not_split, std::string("projection functionals are inconsistent: ") + e.what());
    throw;
  }

  std::vector<Envelope> out;
  int dim_sum = 0;
  for (std::size_t r = 0; r < split.size(); ++r) {
    // E = { e -> c } = span of e hit on basis elements: sum c^k_{ij} e(e_i) e_j
    std::vector<Vec> images;
    for (int k = 0; k < c.dim; ++k) {
      Vec img = vec_zero(*c.field, c.dim);
      for (const TensorTerm& t : c.delta[k]) {
        if (idems[r][t.i].is_zero()) continue;
        img[t.j] += t.a * idems[r][t.i];
      }
      images.push_back(std::move(img));
    }
    Envelope env;
    env.span = Subspace::span(*c.field, images, c.dim);
    env.com = restrict_comodule(reg, env.span);
    env.simple = split[r];
    // socle of E(S) must be S, as subspaces of C
    Subspace soc = socle(env.com);
    std::vector<Vec> soc_rows;
    for (int i = 0; i < soc.dim(); ++i)
      soc_rows.push_back(env.span.basis().apply_left(soc.basis().row(i)));
    Subspace soc_in_c = Subspace::span(*c.field, soc_rows, c.dim);
    ensure(soc_in_c == split[r], "envelope socle does not match its simple");
    dim_sum += env.span.dim();
    out.push_back(std::move(env));
  }
  ensure(dim_sum == c.dim, "injective envelopes do not fill C");
  return out;
}

// --- Poincare series -----------------------------------------------------------------

struct PoincareSeries {
  std::vector<int> coeff;  // l_0 .. l_top

  int top() const { return static_cast<int>(coeff.size()) - 1; }
  int total() const {
    int s = 0;
    for (int c : coeff) s += c;
    return s;
  }
  bool palindromic() const {
    for (std::size_t i = 0; i < coeff.size(); ++i)
      if (coeff[i] != coeff[coeff.size() - 1 - i]) return false;
    return true;
  }
  friend bool operator==(const PoincareSeries& a, const PoincareSeries& b) {
    return a.coeff == b.coeff;
  }
};

inline PoincareSeries poincare(const Filtration& loewy) {
  PoincareSeries p;
  int prev = 0;
  for (const Subspace& s : loewy.chain) {
    p.coeff.push_back(s.dim() - prev);
    prev = s.dim();
  }
  return p;
}

inline PoincareSeries poincare(const Comodule& m) { return poincare(loewy_series(m, LoewyRoute::ann)); }

/// Coefficient coalgebra C_M: the span of the coalgebra legs of the coaction.
inline Subspace coefficient_coalgebra(const Comodule& m) {
  std::vector<Vec> rows;
  for (int k = 0; k < m.dim; ++k) {
    std::map<int, Vec> by_i;
    for (const CoactTerm& t : m.rho[k]) {
      auto it = by_i.find(t.i);
      if (it == by_i.end()) it = by_i.emplace(t.i, vec_zero(m.field(), m.over.dim)).first;
      it->second[t.j] += t.a;
    }
    for (auto& [i, v] : by_i) rows.push_back(std::move(v));
  }
  return Subspace::span(m.field(), rows, m.over.dim);
}

}  // namespace corad
