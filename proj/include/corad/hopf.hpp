#pragma once

// Finite-dimensional Hopf algebras: bialgebra/antipode validation, duals,
// integrals and the vanishing-profile probe, tensor comodules and the Hopf
// socle, the associated graded Hopf algebra, the diagram of coinvariants,
// and the Chevalley / Poincare-duality criteria.
//
// Conventions: right comodules throughout; integrals are functionals in H^*,
// and the left integral identity reads sum T(h_2) h_1 = T(h) 1_H.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "corad/comodule.hpp"

namespace corad {

struct HopfAlgebra {
  Coalgebra coalg;
  Algebra alg;
  Matrix antipode;  // row k = coordinates of S(e_k)

  int dim() const { return coalg.dim; }
  const CycloField& field() const { return *coalg.field; }

  Vec apply_antipode(const Vec& v) const { return antipode.apply_left(v); }
};

inline ValidationReport validate_hopf(const HopfAlgebra& h) {
  ValidationReport rep = validate_coalgebra(h.coalg);
  {
    ValidationReport alg_rep = validate_algebra(h.alg);
    rep.violations.insert(rep.violations.end(), alg_rep.violations.begin(),
                          alg_rep.violations.end());
  }
  if (h.coalg.dim != h.alg.dim || h.coalg.field != h.alg.field)
    rep.violations.push_back("coalgebra and algebra parts disagree on dimension or field");
  if (!rep.ok()) return rep;
  const int n = h.dim();
  const CycloField& f = h.field();

  // Delta is an algebra map
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      SparseTensor lhs;
      for (const ProdTerm& t : h.alg.cell(i, j))
        for (const TensorTerm& u : h.coalg.delta[t.k]) tensor_add(lhs, u.i, u.j, t.a * u.a);
      SparseTensor rhs;
      for (const TensorTerm& p : h.coalg.delta[i])
        for (const TensorTerm& q : h.coalg.delta[j]) {
          Scalar coeff = p.a * q.a;
          for (const ProdTerm& t1 : h.alg.cell(p.i, q.i))
            for (const ProdTerm& t2 : h.alg.cell(p.j, q.j))
              tensor_add(rhs, t1.k, t2.k, coeff * t1.a * t2.a);
        }
      if (!(lhs == rhs)) {
        rep.violations.push_back("comultiplication is not multiplicative at (" + std::to_string(i) +
                                 "," + std::to_string(j) + ")");
        if (rep.violations.size() > 16) return rep;
      }
    }
  }
  {
    SparseTensor du = h.coalg.delta_of(h.alg.unit);
    SparseTensor uu;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) tensor_add(uu, i, j, h.alg.unit[i] * h.alg.unit[j]);
    if (!(du == uu)) rep.violations.push_back("Delta(1) differs from 1 (x) 1");
    if (!h.coalg.counit_of(h.alg.unit).is_one()) rep.violations.push_back("eps(1) differs from 1");
  }
  // eps is an algebra map
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar lhs = Scalar::zero(f);
      for (const ProdTerm& t : h.alg.cell(i, j)) lhs += t.a * h.coalg.counit[t.k];
      if (!(lhs == h.coalg.counit[i] * h.coalg.counit[j])) {
        rep.violations.push_back("counit is not multiplicative at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
        if (rep.violations.size() > 16) return rep;
      }
    }
  // antipode axiom, both sides
  if (h.antipode.rows() != n || h.antipode.cols() != n) {
    rep.violations.push_back("antipode matrix has wrong shape");
    return rep;
  }
  for (int k = 0; k < n; ++k) {
    Vec left = vec_zero(f, n), right = vec_zero(f, n);
    for (const TensorTerm& t : h.coalg.delta[k]) {
      Vec si = h.antipode.row(t.i);
      Vec ej = vec_zero(f, n);
      ej[t.j] = Scalar::one(f);
      Vec prod = h.alg.multiply(si, ej);
      for (int p = 0; p < n; ++p) left[p].add_mul(t.a, prod[p]);
      Vec ei = vec_zero(f, n);
      ei[t.i] = Scalar::one(f);
      Vec prod2 = h.alg.multiply(ei, h.antipode.row(t.j));
      for (int p = 0; p < n; ++p) right[p].add_mul(t.a, prod2[p]);
    }
    Vec expect = vec_scale(h.coalg.counit[k], h.alg.unit);
    if (!(left == expect))
      rep.violations.push_back("antipode axiom m(S (x) id)Delta fails on basis element " +
                               std::to_string(k));
    if (!(right == expect))
      rep.violations.push_back("antipode axiom m(id (x) S)Delta fails on basis element " +
                               std::to_string(k));
  }
  if (rank(h.antipode) != n) rep.violations.push_back("antipode is not bijective");
  return rep;
}

/// Transpose of all structure: mult <-> comult, unit <-> counit, S -> S^T.
inline HopfAlgebra dual_hopf(const HopfAlgebra& h) {
  HopfAlgebra d;
  d.coalg = dual_coalgebra(h.alg);
  d.alg = dual_algebra(h.coalg);
  d.antipode = h.antipode.transpose();
  return d;
}

// --- integrals -----------------------------------------------------------------

enum class IntegralSide { left, right };

struct IntegralSpace {
  IntegralSide side = IntegralSide::left;
  Subspace space;  // inside H^*; RREF basis, so leading coordinates are 1
  int dimension() const { return space.dim(); }
  Vec functional() const {
    ensure(space.dim() == 1, "integral space is not one-dimensional");
    return space.basis().row(0);
  }
};

/// Solves the invariance identity as an exact linear system on H^*.
inline IntegralSpace integral(const HopfAlgebra& h, IntegralSide side = IntegralSide::left) {
  const int n = h.dim();
  const CycloField& f = h.field();
  Matrix sys(f, n * n, n);
  for (int k = 0; k < n; ++k) {
    for (const TensorTerm& t : h.coalg.delta[k]) {
      if (side == IntegralSide::left) {
        // sum T(h_2) h_1 = T(h) 1: coordinate i of sum c^k_{ij} T_j e_i
        sys.at(k * n + t.i, t.j) += t.a;
      } else {
        // sum T(h_1) h_2 = T(h) 1: coordinate j of sum c^k_{ij} T_i e_j
        sys.at(k * n + t.j, t.i) += t.a;
      }
    }
    for (int i = 0; i < n; ++i) sys.at(k * n + i, k) -= h.alg.unit[i];
  }
  IntegralSpace result;
  result.side = side;
  result.space = kernel(sys);
  ensure(result.space.dim() <= 1, "integral space has dimension > 1");
  return result;
}

/// Largest m >= -1 with T identically zero on H_m (monotone in m); -1 when T
/// is already nonzero on the coradical.  Vanishing on H_0 whenever H != H_0 is
/// forced (Maschke), so the result is asserted nonnegative in that case.
inline int integral_vanishing_profile(const HopfAlgebra& h, const Filtration& filt) {
  IntegralSpace ints = integral(h, IntegralSide::left);
  if (ints.dimension() != 1) fail(errc::no_integral, "no one-dimensional integral space");
  Vec t = ints.functional();
  int profile = -1;
  for (int n = 0; n <= filt.length(); ++n) {
    bool vanishes = true;
    for (int r = 0; r < filt.at(n).dim() && vanishes; ++r) {
      Scalar v = Scalar::zero(h.field());
      Vec row = filt.at(n).basis().row(r);
      for (int j = 0; j < h.dim(); ++j) {
        if (row[j].is_zero() || t[j].is_zero()) continue;
        v.add_mul(row[j], t[j]);
      }
      vanishes = v.is_zero();
    }
    if (!vanishes) break;
    profile = n;
  }
  if (filt.length() >= 1)
    ensure(profile >= 0, "integral fails to vanish on the coradical of a non-cosemisimple instance");
  return profile;
}

inline int integral_vanishing_profile(const HopfAlgebra& h) {
  return integral_vanishing_profile(h, coradical_filtration(h.coalg, CoradRoute::perp));
}

// --- tensor comodules and the Hopf socle -------------------------------------------

/// V (x) W with coaction v (x) w -> v_0 (x) w_0 (x) v_1 w_1.
inline Comodule tensor_comodule(const HopfAlgebra& h, const Comodule& m, const Comodule& w) {
  if (!same_coalgebra(m.over, h.coalg) || !same_coalgebra(w.over, h.coalg))
    fail(errc::base_mismatch, "tensor_comodule: factors are not over this Hopf algebra");
  Comodule out(h.coalg, m.dim * w.dim);
  for (int p = 0; p < m.dim; ++p) {
    for (int q = 0; q < w.dim; ++q) {
      int k = p * w.dim + q;
      for (const CoactTerm& t : m.rho[p])
        for (const CoactTerm& u : w.rho[q]) {
          Scalar coeff = t.a * u.a;
          for (const ProdTerm& prod : h.alg.cell(t.j, u.j))
            out.add_rho(k, t.i * w.dim + u.i, prod.k, coeff * prod.a);
        }
    }
  }
  return out;
}

/// The trivial comodule k 1 (coaction through the unit).
inline Comodule trivial_comodule(const HopfAlgebra& h) {
  Comodule m(h.coalg, 1);
  for (int j = 0; j < h.dim(); ++j)
    if (!h.alg.unit[j].is_zero()) m.add_rho(0, 0, j, h.alg.unit[j]);
  return m;
}

/// A complete list of simple right comodules with their spans inside H_0.
struct SimpleFamily {
  std::vector<Comodule> members;
  std::vector<Subspace> spans;

  int size() const { return static_cast<int>(members.size()); }
};

/// Completeness certificate: sum of coefficient coalgebras equals the
/// coradical and every member is its own socle.
inline void certify_family(const HopfAlgebra& h, const SimpleFamily& fam) {
  if (fam.members.empty()) fail(errc::incomplete_family, "empty family");
  Subspace acc = Subspace::zero(h.field(), h.dim());
  for (const Comodule& m : fam.members) {
    if (!same_coalgebra(m.over, h.coalg))
      fail(errc::base_mismatch, "family member over a different coalgebra");
    if (!is_completely_reducible(m)) fail(errc::incomplete_family, "family member is not simple");
    acc = sum(acc, coefficient_coalgebra(m));
  }
  if (!(acc == coradical(h.coalg)))
    fail(errc::incomplete_family, "coefficient coalgebras do not fill the coradical");
}

inline bool is_subcoalgebra(const Coalgebra& c, const Subspace& x) {
  Subspace ax = annihilator(x);
  for (int r = 0; r < x.dim(); ++r) {
    SparseTensor t = c.delta_of(x.basis().row(r));
    // (ann X (x) id)(t) = 0 and (id (x) ann X)(t) = 0
    for (int fidx = 0; fidx < ax.dim(); ++fidx) {
      std::map<int, Scalar> left, right;
      for (const auto& [key, val] : t) {
        const Scalar& fi = ax.basis().at(fidx, key.first);
        if (!fi.is_zero()) {
          auto it = left.find(key.second);
          if (it == left.end())
            left.emplace(key.second, val * fi);
          else
            it->second += val * fi;
        }
        const Scalar& gj = ax.basis().at(fidx, key.second);
        if (!gj.is_zero()) {
          auto it = right.find(key.first);
          if (it == right.end())
            right.emplace(key.first, val * gj);
          else
            it->second += val * gj;
        }
      }
      for (const auto& [j, s] : left)
        if (!s.is_zero()) return false;
      for (const auto& [i, s] : right)
        if (!s.is_zero()) return false;
    }
  }
  return true;
}

inline bool is_subalgebra(const Algebra& a, const Subspace& x) {
  for (int r = 0; r < x.dim(); ++r)
    for (int s = 0; s < x.dim(); ++s)
      if (!x.contains(a.multiply(x.basis().row(r), x.basis().row(s)))) return false;
  return true;
}

/// Sum of the coefficient coalgebras of the simples whose tensor with every
/// simple stays completely reducible, on both sides.
inline Subspace hopf_socle(const HopfAlgebra& h, const SimpleFamily& fam) {
  ensure(rank(h.antipode) == h.dim(), "hopf_socle requires a bijective antipode");
  certify_family(h, fam);
  Subspace soc = Subspace::zero(h.field(), h.dim());
  for (int v = 0; v < fam.size(); ++v) {
    bool qualifies = true;
    for (int w = 0; w < fam.size() && qualifies; ++w) {
      qualifies = is_completely_reducible(tensor_comodule(h, fam.members[v], fam.members[w])) &&
                  is_completely_reducible(tensor_comodule(h, fam.members[w], fam.members[v]));
    }
    if (qualifies) soc = sum(soc, coefficient_coalgebra(fam.members[v]));
  }
  // cosemisimple Hopf subalgebra: closed under Delta, multiplication, antipode
  ensure(is_subcoalgebra(h.coalg, soc), "Hopf socle is not a subcoalgebra");
  ensure(is_subalgebra(h.alg, soc), "Hopf socle is not a subalgebra");
  for (int r = 0; r < soc.dim(); ++r)
    ensure(soc.contains(h.apply_antipode(soc.basis().row(r))), "Hopf socle not antipode-stable");
  return soc;
}

inline bool coradical_is_hopf_subalgebra(const HopfAlgebra& h) {
  Subspace c0 = coradical(h.coalg);
  if (!is_subalgebra(h.alg, c0)) return false;
  for (int r = 0; r < c0.dim(); ++r)
    if (!c0.contains(h.apply_antipode(c0.basis().row(r)))) return false;
  return true;
}

// --- associated graded Hopf algebra --------------------------------------------------

struct GradedHopf {
  HopfAlgebra hopf;  // in the graded basis
  std::vector<int> degree;
  Matrix reps;  // graded basis rows in original coordinates
  Matrix reps_inv;
  Filtration filt;

  int top_degree() const { return degree.empty() ? -1 : degree.back(); }
  std::vector<int> component_dims() const {
    std::vector<int> d(top_degree() + 1, 0);
    for (int g : degree) d[g]++;
    return d;
  }
};

inline GradedHopf gr_hopf(const HopfAlgebra& h) {
  if (!coradical_is_hopf_subalgebra(h))
    fail(errc::coradical_not_hopf_subalgebra, "coradical is not a Hopf subalgebra");
  Filtration filt = coradical_filtration(h.coalg, CoradRoute::perp);
  GradedCoalgebra grc = associated_graded(h.coalg, filt);
  const int n = h.dim();
  const CycloField& f = h.field();

  GradedHopf g;
  g.degree = grc.degree;
  g.reps = grc.reps;
  g.reps_inv = grc.reps_inv;
  g.filt = filt;
  g.hopf.coalg = grc.coalg;
  g.hopf.alg = Algebra(f, n);
  g.hopf.antipode = Matrix(f, n, n);

  // multiplication: H_a . H_b in H_{a+b} (checked), projected degreewise
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      int d = g.degree[s] + g.degree[t];
      Vec prod = h.alg.multiply(g.reps.row(s), g.reps.row(t));
      if (!filt.at(d).contains(prod))
        fail(errc::filtration_not_multiplicative,
             "H_" + std::to_string(g.degree[s]) + " . H_" + std::to_string(g.degree[t]) +
                 " leaves H_" + std::to_string(d));
      Vec coords = g.reps_inv.apply_left(prod);
      for (int u = 0; u < n; ++u) {
        if (coords[u].is_zero()) continue;
        ensure(g.degree[u] <= d, "graded product has a component above its degree");
        if (g.degree[u] == d) g.hopf.alg.add_mult(s, t, u, coords[u]);
      }
    }
  }
  {
    Vec unit_coords = g.reps_inv.apply_left(h.alg.unit);
    for (int u = 0; u < n; ++u) {
      if (unit_coords[u].is_zero()) continue;
      ensure(g.degree[u] == 0, "unit has positive-degree components");
    }
    g.hopf.alg.unit = unit_coords;
  }
  // antipode preserves the coradical filtration; induced map is degreewise
  for (int t = 0; t < n; ++t) {
    Vec image = h.apply_antipode(g.reps.row(t));
    ensure(filt.at(g.degree[t]).contains(image), "antipode does not preserve the filtration");
    Vec coords = g.reps_inv.apply_left(image);
    for (int u = 0; u < n; ++u) {
      if (coords[u].is_zero()) continue;
      ensure(g.degree[u] <= g.degree[t], "graded antipode has a component above its degree");
      if (g.degree[u] == g.degree[t]) g.hopf.antipode.at(t, u) = coords[u];
    }
  }
  ValidationReport rep = validate_hopf(g.hopf);
  ensure(rep.ok(), "associated graded Hopf algebra fails validation: " +
                       (rep.violations.empty() ? std::string() : rep.violations.front()));
  return g;
}

// --- the diagram R of coinvariants ----------------------------------------------------

struct Diagram {
  GradedHopf gr;
  Subspace r_space;       // R inside gr H (graded coordinates)
  std::vector<int> dims;  // dim R(n) per degree

  int top() const {
    int t = 0;
    for (std::size_t i = 0; i < dims.size(); ++i)
      if (dims[i] > 0) t = static_cast<int>(i);
    return t;
  }
  int total_dim() const {
    int s = 0;
    for (int d : dims) s += d;
    return s;
  }
  PoincareSeries series() const {
    PoincareSeries p;
    p.coeff.assign(dims.begin(), dims.begin() + top() + 1);
    return p;
  }
};

/// R = { r in gr H : (id (x) pi) Delta(r) = r (x) pi(1) }, computed degreewise
/// (the condition is homogeneous).
inline Diagram diagram(const HopfAlgebra& h) {
  Diagram out;
  out.gr = gr_hopf(h);
  const GradedHopf& g = out.gr;
  const int n = h.dim();
  const CycloField& f = h.field();
  std::vector<int> deg0;  // indices of degree-0 graded basis elements
  for (int u = 0; u < n; ++u)
    if (g.degree[u] == 0) deg0.push_back(u);
  int top = g.top_degree();
  out.dims.assign(top + 1, 0);
  std::vector<Vec> r_rows;
  for (int d = 0; d <= top; ++d) {
    std::vector<int> idx;
    for (int u = 0; u < n; ++u)
      if (g.degree[u] == d) idx.push_back(u);
    if (idx.empty()) continue;
    // rows indexed by (p, q0): coefficient of e_p (x) e_{q0}
    Matrix sys(f, n * static_cast<int>(deg0.size()), static_cast<int>(idx.size()));
    for (std::size_t col = 0; col < idx.size(); ++col) {
      int t = idx[col];
      for (const TensorTerm& term : g.hopf.coalg.delta[t]) {
        if (g.degree[term.j] != 0) continue;  // pi kills positive degree
        int q0 = static_cast<int>(std::lower_bound(deg0.begin(), deg0.end(), term.j) - deg0.begin());
        sys.at(term.i * static_cast<int>(deg0.size()) + q0, static_cast<int>(col)) += term.a;
      }
      // subtract r (x) pi(1) = e_t (x) unit
      for (std::size_t q0 = 0; q0 < deg0.size(); ++q0) {
        const Scalar& uq = g.hopf.alg.unit[deg0[q0]];
        if (uq.is_zero()) continue;
        sys.at(t * static_cast<int>(deg0.size()) + static_cast<int>(q0), static_cast<int>(col)) -= uq;
      }
    }
    Subspace sol = kernel(sys);
    out.dims[d] = sol.dim();
    for (int r = 0; r < sol.dim(); ++r) {
      Vec full = vec_zero(f, n);
      for (std::size_t col = 0; col < idx.size(); ++col) full[idx[col]] = sol.basis().at(r, static_cast<int>(col));
      r_rows.push_back(std::move(full));
    }
  }
  out.r_space = Subspace::span(f, r_rows, n);
  ensure(out.dims[0] == 1 && out.r_space.contains(g.hopf.alg.unit),
         "diagram degree-0 part is not spanned by the unit");
  Subspace h0 = coradical(h.coalg);
  ensure(out.total_dim() * h0.dim() == h.dim(), "dim R . dim H_0 != dim H");
  return out;
}

// --- reports ----------------------------------------------------------------------

struct CofrobeniusReport {
  int filtration_length = 0;
  int integral_dimension = 0;
  bool unimodular = false;
  bool coradical_hopf_subalgebra = false;
  std::optional<int> diagram_dim;
  std::optional<int> diagram_top;
  bool consistent = false;
};

inline CofrobeniusReport cofrobenius_report(const HopfAlgebra& h) {
  CofrobeniusReport r;
  Filtration filt = coradical_filtration(h.coalg, CoradRoute::perp);
  r.filtration_length = filt.length();
  IntegralSpace left = integral(h, IntegralSide::left);
  IntegralSpace right = integral(h, IntegralSide::right);
  r.integral_dimension = left.dimension();
  r.unimodular = left.dimension() == 1 && left.space == right.space;
  r.coradical_hopf_subalgebra = coradical_is_hopf_subalgebra(h);
  if (r.coradical_hopf_subalgebra) {
    Diagram d = diagram(h);
    r.diagram_dim = d.total_dim();
    r.diagram_top = d.top();
  }
  r.consistent = r.integral_dimension == 1 &&
                 (!r.diagram_top.has_value() || *r.diagram_top == r.filtration_length);
  return r;
}

struct ChevalleyReport {
  // true = obstruction present = the corresponding Chevalley property fails
  bool comodule_simple = false;   // exists S with dim S not dividing dim E(S)
  bool comodule_trivial = false;  // dim E(k) does not divide dim H
  bool module_simple = false;     // dual-side versions (projective covers)
  bool module_trivial = false;
  bool any() const { return comodule_simple || comodule_trivial || module_simple || module_trivial; }
};

namespace detail {

inline std::pair<bool, bool> envelope_obstructions(const HopfAlgebra& h, const SimpleFamily& fam) {
  std::vector<Envelope> envs = injective_decomposition(h.coalg, fam.spans);
  bool simple_obstruction = false;
  int trivial_env_dim = -1;
  Subspace unit_span = Subspace::span(h.field(), {h.alg.unit}, h.dim());
  for (const Envelope& e : envs) {
    if (e.span.dim() % e.simple.dim() != 0) simple_obstruction = true;
    if (e.simple == unit_span) trivial_env_dim = e.span.dim();
  }
  if (trivial_env_dim < 0)
    fail(errc::incomplete_family, "family does not contain the trivial simple");
  return {simple_obstruction, h.dim() % trivial_env_dim != 0};
}

}  // namespace detail

/// Four numeric obstructions; the module-side pair is computed on the dual.
inline ChevalleyReport chevalley_criteria(const HopfAlgebra& h, const SimpleFamily& fam,
                                          const SimpleFamily* dual_fam) {
  certify_family(h, fam);
  ChevalleyReport rep;
  auto [a, b] = detail::envelope_obstructions(h, fam);
  rep.comodule_simple = a;
  rep.comodule_trivial = b;
  if (dual_fam == nullptr)
    fail(errc::coradical_not_split, "no simple family available for the dual Hopf algebra");
  HopfAlgebra dual = dual_hopf(h);
  certify_family(dual, *dual_fam);
  auto [c, d] = detail::envelope_obstructions(dual, *dual_fam);
  rep.module_simple = c;
  rep.module_trivial = d;
  return rep;
}

struct DualityReport {
  std::vector<PoincareSeries> envelope_series;  // one per simple, family order
  PoincareSeries diagram_series;
  bool palindromic = false;       // every envelope series
  bool factorization = false;     // l(E(S)) = l(R) . dim S
  bool envelope_dims = false;     // dim E(S) = dim E(k) . dim S
  bool ok() const { return palindromic && factorization && envelope_dims; }
};

inline DualityReport poincare_duality_check(const HopfAlgebra& h, const SimpleFamily& fam) {
  if (!coradical_is_hopf_subalgebra(h))
    fail(errc::coradical_not_hopf_subalgebra, "duality check needs H_0 a Hopf subalgebra");
  certify_family(h, fam);
  DualityReport rep;
  Diagram diag = diagram(h);
  rep.diagram_series = diag.series();
  std::vector<Envelope> envs = injective_decomposition(h.coalg, fam.spans);
  Subspace unit_span = Subspace::span(h.field(), {h.alg.unit}, h.dim());
  int trivial_env_dim = -1;
  for (const Envelope& e : envs)
    if (e.simple == unit_span) trivial_env_dim = e.span.dim();
  if (trivial_env_dim < 0) fail(errc::incomplete_family, "family does not contain the trivial simple");
  rep.palindromic = true;
  rep.factorization = true;
  rep.envelope_dims = true;
  for (const Envelope& e : envs) {
    PoincareSeries p = poincare(e.com);
    rep.palindromic = rep.palindromic && p.palindromic();
    PoincareSeries expected;
    for (int c : rep.diagram_series.coeff) expected.coeff.push_back(c * e.simple.dim());
    rep.factorization = rep.factorization && p == expected;
    rep.envelope_dims = rep.envelope_dims && e.span.dim() == trivial_env_dim * e.simple.dim();
    rep.envelope_series.push_back(std::move(p));
  }
  return rep;
}

}  // namespace corad
