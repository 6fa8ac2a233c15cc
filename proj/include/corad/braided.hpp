#pragma once

// Diagonal braidings, Cartan data and their finite-type classification,
// the Nichols dimension formula for Cartan type, realizability over finite
// abelian groups, and quantum-linear-space bosonizations R # kG.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "corad/group.hpp"
#include "corad/hopf.hpp"

namespace corad {

/// A diagonal braiding c(x_i (x) x_j) = q_ij x_j (x) x_i; every entry is a
/// root of unity and q_ii != 1.
struct BraidingMatrix {
  int theta = 0;
  Matrix q;

  static BraidingMatrix make(const Matrix& q) {
    if (q.rows() != q.cols()) fail(errc::bad_params, "braiding matrix must be square");
    for (int i = 0; i < q.rows(); ++i) {
      for (int j = 0; j < q.cols(); ++j) {
        if (!order_of_unity(q.at(i, j)).has_value())
          fail(errc::bad_params, "braiding entry (" + std::to_string(i) + "," + std::to_string(j) +
                                     ") is not a root of unity");
      }
      if (q.at(i, i).is_one())
        fail(errc::bad_params, "diagonal braiding entry q_" + std::to_string(i) +
                                   std::to_string(i) + " must differ from 1");
    }
    return BraidingMatrix{q.rows(), q};
  }

  long diagonal_order(int i) const { return *order_of_unity(q.at(i, i)); }
};

struct YDRealization {
  FiniteAbelianGroup group;
  std::vector<std::vector<long>> grouplikes;  // theta exponent vectors g_i
  std::vector<std::vector<long>> characters;  // theta exponent vectors chi_j

  int theta() const { return static_cast<int>(grouplikes.size()); }
};

/// q_ij = chi_j(g_i), evaluated exactly in Q(zeta_exponent).
inline BraidingMatrix braiding_from_realization(const YDRealization& r) {
  int theta = r.theta();
  ensure(static_cast<int>(r.characters.size()) == theta, "realization arity mismatch");
  const CycloField& f = CycloField::get(r.group.exponent());
  Matrix q(f, theta, theta);
  for (int i = 0; i < theta; ++i)
    for (int j = 0; j < theta; ++j)
      q.at(i, j) = r.group.character_value(r.characters[j], r.grouplikes[i], f);
  return BraidingMatrix::make(q);
}

// --- Cartan data and Dynkin classification ----------------------------------------

struct CartanDatum {
  std::vector<std::vector<long>> a;
  int theta() const { return static_cast<int>(a.size()); }
};

/// Searches a_ij in (-ord(q_ii), 0] with q_ij q_ji = q_ii^{a_ij}; the window
/// makes the exponent unique.  Absent when some pair has no solution.
inline std::optional<CartanDatum> cartan_datum(const BraidingMatrix& b) {
  int theta = b.theta;
  CartanDatum d;
  d.a.assign(theta, std::vector<long>(theta, 0));
  for (int i = 0; i < theta; ++i) d.a[i][i] = 2;
  for (int i = 0; i < theta; ++i) {
    long ni = b.diagonal_order(i);
    for (int j = 0; j < theta; ++j) {
      if (i == j) continue;
      Scalar target = b.q.at(i, j) * b.q.at(j, i);
      bool found = false;
      Scalar inv = b.q.at(i, i).inverse();
      Scalar power = Scalar::one(b.q.field());
      for (long t = 0; t < ni; ++t) {
        if (power == target) {
          d.a[i][j] = -t;
          found = true;
          break;
        }
        power *= inv;
      }
      if (!found) return std::nullopt;
    }
  }
  return d;
}

struct DynkinComponent {
  char family = 'A';
  int rank = 0;
  std::vector<int> vertices;  // component vertices in the matched standard order
  std::string label() const { return std::string(1, family) + std::to_string(rank); }
};

namespace detail {

inline std::vector<std::vector<long>> cartan_target(char fam, int n) {
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  auto edge = [&](int s, int t, long ast = -1, long ats = -1) {
    m[s][t] = ast;
    m[t][s] = ats;
  };
  switch (fam) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 2, n - 1, -2, -1);
      break;
    case 'C':
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 2, n - 1, -1, -2);
      break;
    case 'D':
      for (int i = 0; i + 3 < n; ++i) edge(i, i + 1);
      edge(n - 3, n - 2);
      edge(n - 3, n - 1);
      break;
    case 'E':
      // Bourbaki numbering, zero-based: branch node is 3
      edge(0, 2);
      edge(1, 3);
      edge(2, 3);
      edge(3, 4);
      edge(4, 5);
      if (n >= 7) edge(5, 6);
      if (n >= 8) edge(6, 7);
      break;
    case 'F':
      edge(0, 1);
      edge(1, 2, -2, -1);
      edge(2, 3);
      break;
    case 'G':
      edge(0, 1, -1, -3);
      break;
  }
  return m;
}

inline bool match_component(const CartanDatum& d, const std::vector<int>& verts,
                            const std::vector<std::vector<long>>& target,
                            std::vector<int>& perm, std::vector<bool>& used, std::size_t depth) {
  int n = static_cast<int>(verts.size());
  if (depth == verts.size()) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    for (std::size_t s = 0; s < depth && ok; ++s) {
      ok = d.a[verts[perm[s]]][verts[cand]] == target[s][depth] &&
           d.a[verts[cand]][verts[perm[s]]] == target[depth][s];
    }
    if (!ok) continue;
    perm[depth] = cand;
    used[cand] = true;
    if (match_component(d, verts, target, perm, used, depth + 1)) return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace detail

/// Connected components matched against the finite-type catalogue; nullopt
/// when some component is not of finite type.
inline std::optional<std::vector<DynkinComponent>> classify_finite_type(const CartanDatum& d) {
  int theta = d.theta();
  // connectivity: i ~ j iff a_ij != 0 (in either position)
  std::vector<int> comp(theta, -1);
  int ncomp = 0;
  for (int i = 0; i < theta; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < theta; ++u) {
        if (comp[u] >= 0 || (d.a[v][u] == 0 && d.a[u][v] == 0)) continue;
        comp[u] = ncomp;
        stack.push_back(u);
      }
    }
    ++ncomp;
  }
  std::vector<DynkinComponent> out;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> verts;
    for (int i = 0; i < theta; ++i)
      if (comp[i] == c) verts.push_back(i);
    int n = static_cast<int>(verts.size());
    std::vector<std::pair<char, int>> candidates;
    candidates.emplace_back('A', n);
    if (n >= 2) candidates.emplace_back('B', n);
    if (n >= 3) candidates.emplace_back('C', n);
    if (n >= 4) candidates.emplace_back('D', n);
    if (n >= 6 && n <= 8) candidates.emplace_back('E', n);
    if (n == 4) candidates.emplace_back('F', n);
    if (n == 2) candidates.emplace_back('G', n);
    bool matched = false;
    for (const auto& [fam, rank] : candidates) {
      std::vector<std::vector<long>> target = detail::cartan_target(fam, rank);
      std::vector<int> perm(n, -1);
      std::vector<bool> used(n, false);
      if (detail::match_component(d, verts, target, perm, used, 0)) {
        DynkinComponent dc;
        dc.family = fam;
        dc.rank = rank;
        for (int s = 0; s < n; ++s) dc.vertices.push_back(verts[perm[s]]);
        out.push_back(std::move(dc));
        matched = true;
        break;
      }
    }
    if (!matched) return std::nullopt;
  }
  std::sort(out.begin(), out.end(), [](const DynkinComponent& x, const DynkinComponent& y) {
    return x.vertices.front() < y.vertices.front();
  });
  return out;
}

inline long positive_root_count(char fam, int n) {
  switch (fam) {
    case 'A': return static_cast<long>(n) * (n + 1) / 2;
    case 'B':
    case 'C': return static_cast<long>(n) * n;
    case 'D': return static_cast<long>(n) * (n - 1);
    case 'E': return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
  }
  fail(errc::internal, "unknown Dynkin family");
}

/// prod over components of N^{#positive roots}.  The diagonal orders within a
/// component must agree; components of rank >= 2 require N odd (and 3 not
/// dividing N on G_2), while rank-1 components are restricted powers with any
/// N >= 2.  Absent whenever a hypothesis fails.
inline std::optional<Int> nichols_dimension_cartan(const BraidingMatrix& b, const CartanDatum& d) {
  auto components = classify_finite_type(d);
  if (!components.has_value()) return std::nullopt;
  Int dim = 1;
  for (const DynkinComponent& comp : *components) {
    long n = -1;
    for (int v : comp.vertices) {
      long ord = b.diagonal_order(v);
      if (n < 0) n = ord;
      if (ord != n) return std::nullopt;
    }
    if (n < 2) return std::nullopt;
    if (comp.rank >= 2 && n % 2 == 0) return std::nullopt;
    if (comp.family == 'G' && n % 3 == 0) return std::nullopt;
    long e = positive_root_count(comp.family, comp.rank);
    Int factor = 1;
    for (long t = 0; t < e; ++t) factor *= n;
    dim *= factor;
  }
  return dim;
}

/// Multi-index with a 1 in slot i.
inline std::vector<long> unit_vector(int theta, int i) {
  std::vector<long> v(theta, 0);
  v[i] = 1;
  return v;
}

inline bool is_quantum_linear_space(const BraidingMatrix& b) {
  for (int i = 0; i < b.theta; ++i) {
    auto ord = order_of_unity(b.q.at(i, i));
    if (!ord.has_value() || *ord < 2) return false;
    for (int j = 0; j < b.theta; ++j) {
      if (i == j) continue;
      if (!(b.q.at(i, j) * b.q.at(j, i)).is_one()) return false;
    }
  }
  return true;
}

// --- quantum linear space bosonization -----------------------------------------------

struct QLSBosonization {
  HopfAlgebra hopf;
  std::vector<int> degree;  // deg(x^a # g) = sum a_i
  std::vector<long> orders;  // N_i
  FiniteAbelianGroup group;
  BraidingMatrix braiding;

  /// Basis index of x^a # g.
  int index(const std::vector<long>& a, long long gidx) const {
    long long ridx = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) ridx = ridx * orders[i] + a[i];
    return static_cast<int>(ridx * group.order() + gidx);
  }
};

/// R # kG for the quantum linear space R attached to a realization: basis
/// x^a # g with 0 <= a_i < N_i, relations x_i^{N_i} = 0 and
/// x_i x_j = q_ij x_j x_i, braided coproduct generated by the primitives x_i,
/// and biproduct structure with coaction x^a -> (prod g_i^{a_i}) (x) x^a.
/// The construction is verified by full Hopf validation before returning.
inline QLSBosonization build_qls_bosonization(const YDRealization& r, long long max_dim = 4096) {
  BraidingMatrix b = braiding_from_realization(r);
  if (!is_quantum_linear_space(b)) fail(errc::not_qls, "braiding is not a quantum linear space");
  const int theta = b.theta;
  const CycloField& f = CycloField::get(r.group.exponent());
  std::vector<long> orders;
  long long rdim = 1;
  for (int i = 0; i < theta; ++i) {
    orders.push_back(b.diagonal_order(i));
    rdim *= orders.back();
  }
  long long gorder = r.group.order();
  long long dim = rdim * gorder;
  if (dim > max_dim)
    fail(errc::group_too_large, "bosonization dimension " + std::to_string(dim) +
                                    " exceeds cap " + std::to_string(max_dim));
  const int n = static_cast<int>(dim);

  auto mono_index = [&](const std::vector<long>& a) {
    long long idx = 0;
    for (int i = 0; i < theta; ++i) idx = idx * orders[i] + a[i];
    return idx;
  };
  auto mono_of = [&](long long idx) {
    std::vector<long> a(theta, 0);
    for (int i = theta - 1; i >= 0; --i) {
      a[i] = static_cast<long>(idx % orders[i]);
      idx /= orders[i];
    }
    return a;
  };
  auto chi_on = [&](int i, const std::vector<long>& g) {
    return r.group.character_value(r.characters[i], g, f);
  };

  // monomial product in R: x^a . x^b = (prod_{k > i} q_{ki}^{a_k b_i}) x^{a+b}
  auto mono_mul = [&](const std::vector<long>& a, const std::vector<long>& bexp)
      -> std::optional<std::pair<Scalar, std::vector<long>>> {
    std::vector<long> sum(theta);
    for (int i = 0; i < theta; ++i) {
      sum[i] = a[i] + bexp[i];
      if (sum[i] >= orders[i]) return std::nullopt;
    }
    Scalar c = Scalar::one(f);
    for (int i = 0; i < theta; ++i) {
      if (bexp[i] == 0) continue;
      for (int k = i + 1; k < theta; ++k) {
        if (a[k] == 0) continue;
        c *= b.q.at(k, i).pow(a[k] * bexp[i]);
      }
    }
    return std::make_pair(c, sum);
  };

  QLSBosonization out;
  out.orders = orders;
  out.group = r.group;
  out.braiding = b;
  out.hopf.coalg = Coalgebra(f, n);
  out.hopf.alg = Algebra(f, n);
  out.hopf.antipode = Matrix(f, n, n);
  out.degree.assign(n, 0);

  // multiplication: (x^a # g)(x^b # h) = (prod chi_i(g)^{b_i}) x^a x^b # gh
  for (long long ra = 0; ra < rdim; ++ra) {
    std::vector<long> a = mono_of(ra);
    for (long long rb = 0; rb < rdim; ++rb) {
      std::vector<long> bexp = mono_of(rb);
      auto mono = mono_mul(a, bexp);
      if (!mono.has_value()) continue;  // x_i^{N_i} = 0
      for (long long ga = 0; ga < gorder; ++ga) {
        std::vector<long> gelt = r.group.element(ga);
        Scalar twist = mono->first;
        for (int i = 0; i < theta; ++i) {
          if (bexp[i] == 0) continue;
          twist *= chi_on(i, gelt).pow(bexp[i]);
        }
        if (twist.is_zero()) continue;
        for (long long gb = 0; gb < gorder; ++gb) {
          long long gc = r.group.index_of(r.group.add(gelt, r.group.element(gb)));
          out.hopf.alg.add_mult(static_cast<int>(ra * gorder + ga), static_cast<int>(rb * gorder + gb),
                                static_cast<int>(mono_index(mono->second) * gorder + gc), twist);
        }
      }
    }
  }
  {
    Vec unit = vec_zero(f, n);
    unit[static_cast<int>(0 * gorder + r.group.index_of(r.group.identity()))] = Scalar::one(f);
    out.hopf.alg.unit = unit;
  }

  // braided coproduct of R, built by multiplying out (x_i (x) 1 + 1 (x) x_i)
  // in the braided tensor square; then the biproduct comultiplication.
  std::vector<long> zero_mono(theta, 0);
  for (long long ra = 0; ra < rdim; ++ra) {
    std::vector<long> a = mono_of(ra);
    out.degree[static_cast<std::size_t>(ra * gorder)] = 0;
    std::map<std::pair<long long, long long>, Scalar> cur;
    cur.emplace(std::make_pair(mono_index(zero_mono), mono_index(zero_mono)), Scalar::one(f));
    for (int i = 0; i < theta; ++i) {
      for (long rep = 0; rep < a[i]; ++rep) {
        std::map<std::pair<long long, long long>, Scalar> next;
        auto acc = [&](long long u, long long v, const Scalar& c) {
          if (c.is_zero()) return;
          auto key = std::make_pair(u, v);
          auto it = next.find(key);
          if (it == next.end())
            next.emplace(key, c);
          else {
            it->second += c;
            if (it->second.is_zero()) next.erase(it);
          }
        };
        for (const auto& [key, c] : cur) {
          std::vector<long> u = mono_of(key.first), v = mono_of(key.second);
          // (u (x) v)(x_i (x) 1): braid v past x_i, then u x_i
          Scalar braid = Scalar::one(f);
          for (int p = 0; p < theta; ++p) {
            if (v[p] == 0) continue;
            braid *= b.q.at(p, i).pow(v[p]);
          }
          auto um = mono_mul(u, unit_vector(theta, i));
          if (um.has_value()) acc(mono_index(um->second), key.second, c * braid * um->first);
          // (u (x) v)(1 (x) x_i)
          auto vm = mono_mul(v, unit_vector(theta, i));
          if (vm.has_value()) acc(key.first, mono_index(vm->second), c * vm->first);
        }
        cur = std::move(next);
      }
    }
    // Delta(x^a # g) = sum coef (x^u # gamma(v) g) (x) (x^v # g)
    for (long long ga = 0; ga < gorder; ++ga) {
      int k = static_cast<int>(ra * gorder + ga);
      std::vector<long> gelt = r.group.element(ga);
      int total_deg = 0;
      for (int i = 0; i < theta; ++i) total_deg += static_cast<int>(a[i]);
      out.degree[k] = total_deg;
      for (const auto& [key, c] : cur) {
        std::vector<long> v = mono_of(key.second);
        std::vector<long> gamma = r.group.identity();
        for (int i = 0; i < theta; ++i)
          if (v[i] != 0) gamma = r.group.add(gamma, r.group.scale(v[i], r.grouplikes[i]));
        long long gleft = r.group.index_of(r.group.add(gamma, gelt));
        out.hopf.coalg.add_delta(k, static_cast<int>(key.first * gorder + gleft),
                                 static_cast<int>(key.second * gorder + ga), c);
      }
      out.hopf.coalg.counit[k] = ra == 0 ? Scalar::one(f) : Scalar::zero(f);
    }
  }

  // antipode by anti-multiplicative extension from the generators:
  // S(1 # g) = 1 # g^{-1}, S(x_i # 1) = -(1 # g_i^{-1})(x_i # 1)
  std::vector<Vec> s_gen(theta);
  for (int i = 0; i < theta; ++i) {
    std::vector<long> ginv = r.group.negate(r.grouplikes[i]);
    Scalar coeff = -chi_on(i, ginv);
    Vec v = vec_zero(f, n);
    v[static_cast<int>(mono_index(unit_vector(theta, i)) * gorder + r.group.index_of(ginv))] = coeff;
    s_gen[i] = std::move(v);
  }
  for (long long ra = 0; ra < rdim; ++ra) {
    std::vector<long> a = mono_of(ra);
    for (long long ga = 0; ga < gorder; ++ga) {
      int k = static_cast<int>(ra * gorder + ga);
      Vec acc = vec_zero(f, n);
      acc[static_cast<int>(0 * gorder + r.group.index_of(r.group.negate(r.group.element(ga))))] =
          Scalar::one(f);
      for (int i = theta - 1; i >= 0; --i)
        for (long rep = 0; rep < a[i]; ++rep) acc = out.hopf.alg.multiply(acc, s_gen[i]);
      out.hopf.antipode.set_row(k, acc);
    }
  }

  ValidationReport rep = validate_hopf(out.hopf);
  ensure(rep.ok(), "bosonization failed Hopf validation: " +
                       (rep.violations.empty() ? std::string() : rep.violations.front()));
  return out;
}

// --- realization search ----------------------------------------------------------------

namespace detail {

/// Discrete log of each braiding entry base zeta_m; requires orders divide m.
inline std::vector<std::vector<long>> braiding_dlogs(const BraidingMatrix& b, long m) {
  for (int i = 0; i < b.theta; ++i)
    for (int j = 0; j < b.theta; ++j) {
      auto ord = order_of_unity(b.q.at(i, j));
      if (!ord.has_value() || m % *ord != 0)
        fail(errc::order_mismatch, "braiding entry order does not divide " + std::to_string(m));
    }
  long common = std::lcm(b.q.field().conductor(), m);
  const CycloField& cf = CycloField::get(common);
  Scalar zeta = root_of_unity(cf, common / m);  // zeta_m inside the common field
  std::vector<std::vector<long>> k(b.theta, std::vector<long>(b.theta, -1));
  std::vector<Scalar> powers;
  Scalar p = Scalar::one(cf);
  for (long t = 0; t < m; ++t) {
    powers.push_back(p);
    p *= zeta;
  }
  for (int i = 0; i < b.theta; ++i)
    for (int j = 0; j < b.theta; ++j) {
      Scalar target = promote(b.q.at(i, j), cf);
      for (long t = 0; t < m; ++t)
        if (powers[t] == target) {
          k[i][j] = t;
          break;
        }
      ensure(k[i][j] >= 0, "discrete log not found despite order divisibility");
    }
  return k;
}

}  // namespace detail

/// Brute-force search for b, c with b_i c_j = k_ij (mod m), where
/// q_ij = zeta_m^{k_ij}; b runs lexicographically, c is solved per column.
inline std::optional<YDRealization> realize_over_cyclic(const BraidingMatrix& b, long m,
                                                        long cyclic_cap = 10000) {
  if (m < 1 || m > cyclic_cap)
    fail(errc::group_too_large, "cyclic modulus " + std::to_string(m) + " outside cap");
  std::vector<std::vector<long>> k = detail::braiding_dlogs(b, m);
  const int theta = b.theta;
  std::vector<long> bv(theta, 0);
  while (true) {
    std::vector<long> cv(theta, -1);
    bool all_ok = true;
    for (int j = 0; j < theta && all_ok; ++j) {
      for (long c = 0; c < m; ++c) {
        bool ok = true;
        for (int i = 0; i < theta && ok; ++i) ok = (bv[i] * c) % m == k[i][j];
        if (ok) {
          cv[j] = c;
          break;
        }
      }
      all_ok = cv[j] >= 0;
    }
    if (all_ok) {
      YDRealization r;
      r.group = FiniteAbelianGroup::from_factors({m});
      for (int i = 0; i < theta; ++i) r.grouplikes.push_back({bv[i]});
      for (int j = 0; j < theta; ++j) r.characters.push_back({cv[j]});
      return r;
    }
    // next b in lexicographic order
    int pos = theta - 1;
    while (pos >= 0 && bv[pos] == m - 1) bv[pos--] = 0;
    if (pos < 0) return std::nullopt;
    ++bv[pos];
  }
}

struct RealizationSearch {
  std::optional<YDRealization> witness;
  long long count = 0;  // populated only when counting was requested
};

/// Exhaustive search over grouplike tuples with characters solved per column;
/// returns the lexicographically least witness (and the witness count when
/// requested).
inline RealizationSearch realize_over_group(const BraidingMatrix& b, const FiniteAbelianGroup& g,
                                            bool count_witnesses = false,
                                            long long candidate_cap = 10000000) {
  long e = g.exponent();
  std::vector<std::vector<long>> k = detail::braiding_dlogs(b, e);
  const int theta = b.theta;
  long long order = g.order();
  long long tuples = 1;
  for (int i = 0; i < theta; ++i) {
    tuples *= order;
    if (tuples > candidate_cap)
      fail(errc::group_too_large, "grouplike tuple space exceeds candidate cap");
  }
  if (tuples * order > candidate_cap)
    fail(errc::group_too_large, "search space exceeds candidate cap");

  RealizationSearch result;
  for (long long t = 0; t < tuples; ++t) {
    // decode tuple lexicographically: first grouplike most significant
    std::vector<std::vector<long>> gl(theta);
    long long rem = t;
    for (int i = theta - 1; i >= 0; --i) {
      gl[i] = g.element(rem % order);
      rem /= order;
    }
    std::vector<std::vector<long>> chars(theta);
    long long combos = 1;
    bool all_ok = true;
    for (int j = 0; j < theta && all_ok; ++j) {
      long long solutions = 0;
      for (long long cidx = 0; cidx < order; ++cidx) {
        std::vector<long> cand = g.element(cidx);
        bool ok = true;
        for (int i = 0; i < theta && ok; ++i) {
          long long total = 0;
          for (int l = 0; l < g.num_factors(); ++l) {
            long d = g.factors()[l];
            total += static_cast<long long>((cand[l] % d) * (gl[i][l] % d) % d) * (e / d);
            total %= e;
          }
          ok = total == k[i][j] % e;
        }
        if (ok) {
          if (solutions == 0) chars[j] = cand;
          ++solutions;
          if (!count_witnesses) break;
        }
      }
      if (solutions == 0) all_ok = false;
      combos *= solutions;
    }
    if (all_ok) {
      if (!result.witness.has_value()) {
        YDRealization r;
        r.group = g;
        r.grouplikes = gl;
        r.characters = chars;
        result.witness = std::move(r);
        if (!count_witnesses) return result;
      }
      result.count += combos;
    }
  }
  return result;
}

}  // namespace corad
