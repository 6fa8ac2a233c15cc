#pragma once

// Builders for the standing examples: group algebras of finite abelian
// groups, the Sweedler and Taft algebras (built directly, independently of
// the bosonization route), quantum-linear-space bosonizations, and seeded
// random path coalgebras for fuzzing.  Every builder output is validated
// before it is returned, and Hopf builders carry their simple families
// (grouplike spans) plus character families for the dual.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "corad/braided.hpp"

namespace corad {

struct Instance {
  std::string name;
  HopfAlgebra hopf;
  SimpleFamily fam;                          // simple right comodules decomposing H_0
  std::optional<SimpleFamily> dual_fam;      // same data for dual_hopf(hopf)
  std::optional<QLSBosonization> bosonization;
};

namespace detail {

inline SimpleFamily grouplike_family(const Coalgebra& c, const std::vector<Vec>& grouplikes) {
  SimpleFamily fam;
  for (const Vec& g : grouplikes) {
    fam.members.push_back(grouplike_comodule(c, g));
    fam.spans.push_back(Subspace::span(*c.field, {g}, c.dim));
  }
  return fam;
}

}  // namespace detail

/// kG for a finite abelian G given by cyclic factors (normalized internally).
inline Instance build_group_algebra(const std::vector<long>& cyclic_factors) {
  FiniteAbelianGroup g = FiniteAbelianGroup::from_factors(cyclic_factors);
  const long long n64 = g.order();
  if (n64 > 4096) fail(errc::bad_params, "group algebra too large");
  const int n = static_cast<int>(n64);
  const CycloField& f = CycloField::get(g.exponent());

  Instance inst;
  inst.name = "group_algebra";
  inst.hopf.coalg = Coalgebra(f, n);
  inst.hopf.alg = Algebra(f, n);
  inst.hopf.antipode = Matrix(f, n, n);
  for (int k = 0; k < n; ++k) {
    inst.hopf.coalg.add_delta(k, k, k, Scalar::one(f));
    inst.hopf.coalg.counit[k] = Scalar::one(f);
  }
  for (long long a = 0; a < n; ++a) {
    for (long long b = 0; b < n; ++b) {
      long long c = g.index_of(g.add(g.element(a), g.element(b)));
      inst.hopf.alg.add_mult(static_cast<int>(a), static_cast<int>(b), static_cast<int>(c),
                             Scalar::one(f));
    }
    inst.hopf.antipode.at(static_cast<int>(a),
                          static_cast<int>(g.index_of(g.negate(g.element(a))))) = Scalar::one(f);
  }
  inst.hopf.alg.unit = vec_zero(f, n);
  inst.hopf.alg.unit[static_cast<int>(g.index_of(g.identity()))] = Scalar::one(f);

  std::vector<Vec> grouplikes;
  for (int k = 0; k < n; ++k) {
    Vec v = vec_zero(f, n);
    v[k] = Scalar::one(f);
    grouplikes.push_back(std::move(v));
  }
  inst.fam = detail::grouplike_family(inst.hopf.coalg, grouplikes);

  // dual = k^G; its grouplikes are the characters of G
  HopfAlgebra dual = dual_hopf(inst.hopf);
  std::vector<Vec> characters;
  for (long long t = 0; t < n; ++t) {
    Vec chi = vec_zero(f, n);
    for (long long a = 0; a < n; ++a)
      chi[static_cast<int>(a)] = g.character_value(g.element(t), g.element(a), f);
    characters.push_back(std::move(chi));
  }
  inst.dual_fam = detail::grouplike_family(dual.coalg, characters);

  ensure(validate_hopf(inst.hopf).ok(), "group algebra failed validation");
  return inst;
}

/// Taft algebra T_N on g, x with g^N = 1, x^N = 0, x g = q g x, q = zeta_N,
/// Delta g = g (x) g, Delta x = x (x) 1 + g (x) x.  Basis g^a x^b at index
/// a N + b.  Comultiplication of general basis elements is obtained by
/// powering inside H (x) H, not through any braided machinery, so this
/// builder is independent of build_qls_bosonization.
inline Instance build_taft(long nparam) {
  if (nparam < 2) fail(errc::bad_params, "Taft algebra needs N >= 2");
  const int nn = static_cast<int>(nparam);
  const int dim = nn * nn;
  const CycloField& f = CycloField::get(nn);
  const Scalar q = root_of_unity(f, 1);

  Instance inst;
  inst.name = nparam == 2 ? "sweedler" : "taft";
  inst.hopf.coalg = Coalgebra(f, dim);
  inst.hopf.alg = Algebra(f, dim);
  inst.hopf.antipode = Matrix(f, dim, dim);
  auto idx = [nn](long a, long b) { return static_cast<int>(a * nn + b); };

  // multiplication: x^b g^c = q^{bc} g^c x^b
  for (long a = 0; a < nn; ++a)
    for (long b = 0; b < nn; ++b)
      for (long c = 0; c < nn; ++c)
        for (long d = 0; d < nn; ++d) {
          if (b + d >= nn) continue;  // x^N = 0
          inst.hopf.alg.add_mult(idx(a, b), idx(c, d), idx((a + c) % nn, b + d), q.pow(b * c));
        }
  inst.hopf.alg.unit = vec_zero(f, dim);
  inst.hopf.alg.unit[idx(0, 0)] = Scalar::one(f);

  // comultiplication by powering Delta(g)^a Delta(x)^b inside H (x) H
  for (long a = 0; a < nn; ++a) {
    for (long b = 0; b < nn; ++b) {
      SparseTensor cur;
      tensor_add(cur, idx(a, 0), idx(a, 0), Scalar::one(f));  // Delta(g^a) = g^a (x) g^a
      for (long step = 0; step < b; ++step) {
        SparseTensor next;
        for (const auto& [key, coeff] : cur) {
          // multiply by Delta(x) = x (x) 1 + g (x) x on the right
          for (const ProdTerm& t1 : inst.hopf.alg.cell(key.first, idx(0, 1)))
            tensor_add(next, t1.k, key.second, coeff * t1.a);
          for (const ProdTerm& t1 : inst.hopf.alg.cell(key.first, idx(1, 0)))
            for (const ProdTerm& t2 : inst.hopf.alg.cell(key.second, idx(0, 1)))
              tensor_add(next, t1.k, t2.k, coeff * t1.a * t2.a);
        }
        cur = std::move(next);
      }
      for (const auto& [key, coeff] : cur)
        inst.hopf.coalg.add_delta(idx(a, b), key.first, key.second, coeff);
      inst.hopf.coalg.counit[idx(a, b)] = b == 0 ? Scalar::one(f) : Scalar::zero(f);
    }
  }

  // antipode: S(g) = g^{N-1}, S(x) = -g^{-1} x, extended anti-multiplicatively
  {
    // S(x) = -g^{-1} x = -g^{N-1} x, the basis element (N-1, 1) negated
    Vec sx = vec_zero(f, dim);
    sx[idx(nn - 1, 1)] = -Scalar::one(f);
    for (long a = 0; a < nn; ++a)
      for (long b = 0; b < nn; ++b) {
        Vec acc = vec_zero(f, dim);
        acc[idx(0, 0)] = Scalar::one(f);
        for (long step = 0; step < b; ++step) acc = inst.hopf.alg.multiply(acc, sx);
        // then S(g)^a = g^{-a}
        Vec ga = vec_zero(f, dim);
        ga[idx(((nn - a) % nn), 0)] = Scalar::one(f);
        acc = inst.hopf.alg.multiply(acc, ga);
        inst.hopf.antipode.set_row(idx(a, b), acc);
      }
  }

  std::vector<Vec> grouplikes;
  for (long a = 0; a < nn; ++a) {
    Vec v = vec_zero(f, dim);
    v[idx(a, 0)] = Scalar::one(f);
    grouplikes.push_back(std::move(v));
  }
  inst.fam = detail::grouplike_family(inst.hopf.coalg, grouplikes);

  // dual grouplikes: algebra characters g -> zeta^t, x -> 0
  HopfAlgebra dual = dual_hopf(inst.hopf);
  std::vector<Vec> characters;
  for (long t = 0; t < nn; ++t) {
    Vec chi = vec_zero(f, dim);
    for (long a = 0; a < nn; ++a) chi[idx(a, 0)] = q.pow(t * a);
    characters.push_back(std::move(chi));
  }
  inst.dual_fam = detail::grouplike_family(dual.coalg, characters);

  ensure(validate_hopf(inst.hopf).ok(), "Taft builder failed validation");
  return inst;
}

/// Sweedler's 4-dimensional Hopf algebra (Taft at N = 2, over Q).
inline Instance build_sweedler() { return build_taft(2); }

/// Bosonization instance from explicit realization data.
inline Instance build_qls(const std::vector<long>& cyclic_factors,
                          const std::vector<std::vector<long>>& grouplikes,
                          const std::vector<std::vector<long>>& characters,
                          long long max_dim = 4096) {
  YDRealization r;
  r.group = FiniteAbelianGroup::from_factors(cyclic_factors);
  r.grouplikes = grouplikes;
  r.characters = characters;
  for (auto& v : r.grouplikes)
    if (static_cast<int>(v.size()) != r.group.num_factors())
      fail(errc::bad_params, "grouplike arity does not match the group");
  for (auto& v : r.characters)
    if (static_cast<int>(v.size()) != r.group.num_factors())
      fail(errc::bad_params, "character arity does not match the group");

  Instance inst;
  inst.name = "qls_bosonization";
  QLSBosonization bos = build_qls_bosonization(r, max_dim);
  inst.hopf = bos.hopf;

  // grouplikes 1 # g
  const CycloField& f = inst.hopf.field();
  std::vector<Vec> grouplikes_h;
  for (long long c = 0; c < r.group.order(); ++c) {
    Vec v = vec_zero(f, inst.hopf.dim());
    v[static_cast<int>(c)] = Scalar::one(f);
    grouplikes_h.push_back(std::move(v));
  }
  inst.fam = detail::grouplike_family(inst.hopf.coalg, grouplikes_h);

  // dual grouplikes: algebra characters x_i -> 0, (1 # g) -> character of G
  HopfAlgebra dual = dual_hopf(inst.hopf);
  std::vector<Vec> characters_h;
  for (long long t = 0; t < r.group.order(); ++t) {
    Vec chi = vec_zero(f, inst.hopf.dim());
    for (long long c = 0; c < r.group.order(); ++c)
      chi[static_cast<int>(c)] = r.group.character_value(r.group.element(t), r.group.element(c), f);
    characters_h.push_back(std::move(chi));
  }
  inst.dual_fam = detail::grouplike_family(dual.coalg, characters_h);
  inst.bosonization = std::move(bos);
  return inst;
}

/// The standing dim-27 example: G = C_3, theta = 2, N_1 = N_2 = 3,
/// q_12 q_21 = 1.
inline Instance build_qls27() { return build_qls({3}, {{1}, {1}}, {{1}, {2}}); }

// --- random path coalgebras for fuzzing -------------------------------------------

/// Path coalgebra of a seeded random quiver, truncated at path length <= 3 and
/// at most max_dim basis paths (kept in by-length order, so the basis stays
/// closed under subpaths).  Coassociative by construction.
inline Coalgebra random_path_coalgebra(std::uint64_t seed, int max_dim = 8) {
  std::mt19937_64 rng(seed);
  const int nv = 1 + static_cast<int>(rng() % 3);
  std::vector<std::pair<int, int>> arrow_pool;
  for (int u = 0; u < nv; ++u)
    for (int v = 0; v < nv; ++v) arrow_pool.emplace_back(u, v);
  for (std::size_t i = arrow_pool.size(); i > 1; --i)
    std::swap(arrow_pool[i - 1], arrow_pool[rng() % i]);
  const int narrows = static_cast<int>(rng() % (arrow_pool.size() + 1));
  arrow_pool.resize(narrows);

  // walks: (start vertex, arrow index list); ordered by length then lexicographically
  struct Walk {
    int start, end;
    std::vector<int> arrows;
  };
  std::vector<Walk> walks;
  for (int v = 0; v < nv; ++v) walks.push_back(Walk{v, v, {}});
  std::size_t level_begin = 0;
  for (int len = 1; len <= 3; ++len) {
    std::size_t level_end = walks.size();
    for (std::size_t w = level_begin; w < level_end; ++w) {
      for (int a = 0; a < narrows; ++a) {
        if (arrow_pool[a].first != walks[w].end) continue;
        Walk ext = walks[w];
        ext.arrows.push_back(a);
        ext.end = arrow_pool[a].second;
        walks.push_back(std::move(ext));
      }
    }
    level_begin = level_end;
  }
  if (static_cast<int>(walks.size()) > max_dim) walks.resize(max_dim);

  std::map<std::pair<int, std::vector<int>>, int> index;
  for (std::size_t w = 0; w < walks.size(); ++w)
    index[{walks[w].start, walks[w].arrows}] = static_cast<int>(w);

  const CycloField& f = CycloField::get(1);
  Coalgebra c(f, static_cast<int>(walks.size()));
  for (std::size_t w = 0; w < walks.size(); ++w) {
    const Walk& walk = walks[w];
    const int len = static_cast<int>(walk.arrows.size());
    for (int t = 0; t <= len; ++t) {
      std::vector<int> pre(walk.arrows.begin(), walk.arrows.begin() + t);
      std::vector<int> suf(walk.arrows.begin() + t, walk.arrows.end());
      int pre_start = walk.start;
      int suf_start = t == 0 ? walk.start : arrow_pool[walk.arrows[t - 1]].second;
      auto pit = index.find({pre_start, pre});
      auto sit = index.find({suf_start, suf});
      ensure(pit != index.end() && sit != index.end(), "path coalgebra lost a subpath");
      c.add_delta(static_cast<int>(w), pit->second, sit->second, Scalar::one(f));
    }
    c.counit[w] = len == 0 ? Scalar::one(f) : Scalar::zero(f);
  }
  return c;
}

}  // namespace corad
