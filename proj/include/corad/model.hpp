#pragma once

// The plain-text model format: one field declaration per file, named object
// blocks with sparse structure-constant triples, and builder invocations.
// The loader parses every scalar in the declared field, then computes the
// lcm conductor required by all objects (builders may introduce larger
// fields) and promotes everything once.

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "corad/builders.hpp"

namespace corad {

struct ModelFile {
  long declared_conductor = 1;
  long conductor = 1;  // effective, after promotion

  struct ComoduleEntry {
    std::string base;
    Comodule com;
  };
  struct FamilyEntry {
    std::string base;
    bool over_dual = false;
    std::vector<Vec> grouplikes;  // raw vectors; SimpleFamily is materialized on demand
  };

  std::vector<std::pair<std::string, std::string>> order;  // (kind, name) in declaration order
  std::map<std::string, Coalgebra> coalgebras;
  std::map<std::string, HopfAlgebra> hopfs;
  std::map<std::string, ComoduleEntry> comodules;
  std::map<std::string, FiniteAbelianGroup> groups;
  std::map<std::string, BraidingMatrix> braidings;
  std::map<std::string, YDRealization> realizations;
  std::map<std::string, FamilyEntry> families;
  std::map<std::string, Instance> instances;

  bool has_name(const std::string& n) const {
    return coalgebras.count(n) || hopfs.count(n) || comodules.count(n) || groups.count(n) ||
           braidings.count(n) || realizations.count(n) || families.count(n) || instances.count(n);
  }
};

// --- promotion to a common field ------------------------------------------------------

inline Vec promote_vec(const Vec& v, const CycloField& f) {
  Vec r;
  r.reserve(v.size());
  for (const Scalar& s : v) r.push_back(promote(s, f));
  return r;
}

inline Matrix promote_matrix(const Matrix& m, const CycloField& f) {
  Matrix r(f, m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) r.at(i, j) = promote(m.at(i, j), f);
  return r;
}

inline Coalgebra promote_coalgebra(const Coalgebra& c, const CycloField& f) {
  Coalgebra r(f, c.dim);
  for (int k = 0; k < c.dim; ++k)
    for (const TensorTerm& t : c.delta[k]) r.add_delta(k, t.i, t.j, promote(t.a, f));
  r.counit = promote_vec(c.counit, f);
  return r;
}

inline Algebra promote_algebra(const Algebra& a, const CycloField& f) {
  Algebra r(f, a.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      for (const ProdTerm& t : a.cell(i, j)) r.add_mult(i, j, t.k, promote(t.a, f));
  r.unit = promote_vec(a.unit, f);
  return r;
}

inline HopfAlgebra promote_hopf(const HopfAlgebra& h, const CycloField& f) {
  HopfAlgebra r;
  r.coalg = promote_coalgebra(h.coalg, f);
  r.alg = promote_algebra(h.alg, f);
  r.antipode = promote_matrix(h.antipode, f);
  return r;
}

inline Comodule promote_comodule(const Comodule& m, const Coalgebra& promoted_base,
                                 const CycloField& f) {
  Comodule r(promoted_base, m.dim);
  for (int k = 0; k < m.dim; ++k)
    for (const CoactTerm& t : m.rho[k]) r.add_rho(k, t.i, t.j, promote(t.a, f));
  return r;
}

inline SimpleFamily promote_family(const SimpleFamily& fam, const Coalgebra& promoted_base,
                                   const CycloField& f) {
  SimpleFamily r;
  for (const Comodule& m : fam.members) r.members.push_back(promote_comodule(m, promoted_base, f));
  for (const Subspace& s : fam.spans) {
    std::vector<Vec> rows;
    for (int i = 0; i < s.dim(); ++i) rows.push_back(promote_vec(s.basis().row(i), f));
    r.spans.push_back(Subspace::span(f, rows, s.ambient()));
  }
  return r;
}

inline Instance promote_instance(const Instance& inst, const CycloField& f) {
  Instance r;
  r.name = inst.name;
  r.hopf = promote_hopf(inst.hopf, f);
  r.fam = promote_family(inst.fam, r.hopf.coalg, f);
  if (inst.dual_fam.has_value()) {
    HopfAlgebra dual = dual_hopf(r.hopf);
    r.dual_fam = promote_family(*inst.dual_fam, dual.coalg, f);
  }
  // grading certificates are field-independent; rebuild is not needed, but the
  // embedded Hopf copy must be the promoted one
  if (inst.bosonization.has_value()) {
    QLSBosonization bos = *inst.bosonization;
    bos.hopf = r.hopf;
    bos.braiding.q = promote_matrix(bos.braiding.q, f);
    r.bosonization = std::move(bos);
  }
  return r;
}

// --- parsing --------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream is(line);
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

inline std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

/// Joins tokens from position p to the end (scalar expressions contain spaces).
inline std::string tail_from(const std::vector<std::string>& toks, std::size_t p) {
  std::string s;
  for (std::size_t i = p; i < toks.size(); ++i) {
    if (i > p) s += " ";
    s += toks[i];
  }
  return s;
}

inline long to_int(const std::string& s) {
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) fail(errc::bad_params, "bad integer '" + s + "'");
    return v;
  } catch (const std::exception&) {
    fail(errc::bad_params, "bad integer '" + s + "'");
  }
}

}  // namespace detail

inline ModelFile parse_model(std::istream& in) {
  ModelFile m;
  const CycloField* f = &CycloField::get(1);
  bool field_seen = false;
  std::string line;
  int lineno = 0;

  auto next_tokens = [&](std::vector<std::string>& toks) -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      toks = detail::tokenize(detail::strip_comment(line));
      if (!toks.empty()) return true;
    }
    return false;
  };
  auto syntax_error = [&](const std::string& what) -> void {
    fail(errc::bad_params, "model line " + std::to_string(lineno) + ": " + what);
  };
  auto claim_name = [&](const std::string& name) {
    if (m.has_name(name)) syntax_error("duplicate object name '" + name + "'");
  };

  std::vector<std::string> toks;
  while (next_tokens(toks)) {
    const std::string& kw = toks[0];
    if (kw == "field") {
      if (toks.size() != 2) syntax_error("field takes one conductor");
      if (field_seen) syntax_error("field declared twice");
      field_seen = true;
      m.declared_conductor = detail::to_int(toks[1]);
      if (m.declared_conductor < 1) syntax_error("conductor must be positive");
      f = &CycloField::get(m.declared_conductor);
    } else if (kw == "coalgebra" || kw == "hopf") {
      if (toks.size() != 4 || toks[2] != "dim") syntax_error(kw + " NAME dim N");
      std::string name = toks[1];
      claim_name(name);
      int dim = static_cast<int>(detail::to_int(toks[3]));
      Coalgebra c(*f, dim);
      Algebra a(*f, dim);
      Matrix antipode(*f, dim, dim);
      bool is_hopf = kw == "hopf";
      while (true) {
        if (!next_tokens(toks)) syntax_error("unterminated block");
        if (toks[0] == "end") break;
        if (toks[0] == "delta" && toks.size() >= 5) {
          c.add_delta(static_cast<int>(detail::to_int(toks[1])),
                      static_cast<int>(detail::to_int(toks[2])),
                      static_cast<int>(detail::to_int(toks[3])),
                      parse_scalar(detail::tail_from(toks, 4), *f));
        } else if (toks[0] == "counit" && toks.size() >= 3) {
          c.counit[detail::to_int(toks[1])] = parse_scalar(detail::tail_from(toks, 2), *f);
        } else if (is_hopf && toks[0] == "mult" && toks.size() >= 5) {
          a.add_mult(static_cast<int>(detail::to_int(toks[1])),
                     static_cast<int>(detail::to_int(toks[2])),
                     static_cast<int>(detail::to_int(toks[3])),
                     parse_scalar(detail::tail_from(toks, 4), *f));
        } else if (is_hopf && toks[0] == "unit" && toks.size() >= 3) {
          a.unit[detail::to_int(toks[1])] = parse_scalar(detail::tail_from(toks, 2), *f);
        } else if (is_hopf && toks[0] == "antipode" && toks.size() >= 4) {
          antipode.at(static_cast<int>(detail::to_int(toks[1])),
                      static_cast<int>(detail::to_int(toks[2]))) =
              parse_scalar(detail::tail_from(toks, 3), *f);
        } else {
          syntax_error("unexpected line in " + kw + " block: " + toks[0]);
        }
      }
      if (is_hopf) {
        HopfAlgebra h;
        h.coalg = std::move(c);
        h.alg = std::move(a);
        h.antipode = std::move(antipode);
        m.hopfs.emplace(name, std::move(h));
        m.order.emplace_back("hopf", name);
      } else {
        m.coalgebras.emplace(name, std::move(c));
        m.order.emplace_back("coalgebra", name);
      }
    } else if (kw == "comodule") {
      if (toks.size() != 6 || toks[2] != "over" || toks[4] != "dim")
        syntax_error("comodule NAME over BASE dim N");
      std::string name = toks[1], base = toks[3];
      claim_name(name);
      const Coalgebra* over = nullptr;
      if (m.coalgebras.count(base)) over = &m.coalgebras.at(base);
      else if (m.hopfs.count(base)) over = &m.hopfs.at(base).coalg;
      else if (m.instances.count(base)) over = &m.instances.at(base).hopf.coalg;
      else syntax_error("comodule base '" + base + "' not found");
      Comodule com(*over, static_cast<int>(detail::to_int(toks[5])));
      while (true) {
        if (!next_tokens(toks)) syntax_error("unterminated comodule block");
        if (toks[0] == "end") break;
        if (toks[0] == "rho" && toks.size() >= 5) {
          com.add_rho(static_cast<int>(detail::to_int(toks[1])),
                      static_cast<int>(detail::to_int(toks[2])),
                      static_cast<int>(detail::to_int(toks[3])),
                      parse_scalar(detail::tail_from(toks, 4), *f));
        } else {
          syntax_error("unexpected line in comodule block: " + toks[0]);
        }
      }
      m.comodules.emplace(name, ModelFile::ComoduleEntry{base, std::move(com)});
      m.order.emplace_back("comodule", name);
    } else if (kw == "group") {
      if (toks.size() < 4 || toks[2] != "factors") syntax_error("group NAME factors d1 d2 ...");
      claim_name(toks[1]);
      std::vector<long> factors;
      for (std::size_t i = 3; i < toks.size(); ++i) factors.push_back(detail::to_int(toks[i]));
      m.groups.emplace(toks[1], FiniteAbelianGroup::from_factors(factors));
      m.order.emplace_back("group", toks[1]);
    } else if (kw == "braiding") {
      if (toks.size() != 4 || toks[2] != "theta") syntax_error("braiding NAME theta T");
      std::string name = toks[1];
      claim_name(name);
      int theta = static_cast<int>(detail::to_int(toks[3]));
      Matrix q(*f, theta, theta);
      while (true) {
        if (!next_tokens(toks)) syntax_error("unterminated braiding block");
        if (toks[0] == "end") break;
        if (toks[0] == "q" && toks.size() >= 4) {
          q.at(static_cast<int>(detail::to_int(toks[1])),
               static_cast<int>(detail::to_int(toks[2]))) =
              parse_scalar(detail::tail_from(toks, 3), *f);
        } else {
          syntax_error("unexpected line in braiding block: " + toks[0]);
        }
      }
      m.braidings.emplace(name, BraidingMatrix::make(q));
      m.order.emplace_back("braiding", name);
    } else if (kw == "realization") {
      if (toks.size() != 6 || toks[2] != "group" || toks[4] != "theta")
        syntax_error("realization NAME group G theta T");
      std::string name = toks[1], gname = toks[3];
      claim_name(name);
      if (!m.groups.count(gname)) syntax_error("group '" + gname + "' not found");
      YDRealization r;
      r.group = m.groups.at(gname);
      int theta = static_cast<int>(detail::to_int(toks[5]));
      r.grouplikes.assign(theta, std::vector<long>(r.group.num_factors(), 0));
      r.characters.assign(theta, std::vector<long>(r.group.num_factors(), 0));
      while (true) {
        if (!next_tokens(toks)) syntax_error("unterminated realization block");
        if (toks[0] == "end") break;
        bool is_g = toks[0] == "grouplike", is_c = toks[0] == "character";
        if ((is_g || is_c) && static_cast<int>(toks.size()) == 2 + r.group.num_factors()) {
          int idx = static_cast<int>(detail::to_int(toks[1]));
          if (idx < 0 || idx >= theta) syntax_error("realization index out of range");
          std::vector<long> v;
          for (int i = 0; i < r.group.num_factors(); ++i) v.push_back(detail::to_int(toks[2 + i]));
          (is_g ? r.grouplikes : r.characters)[idx] = r.group.normalize(v);
        } else {
          syntax_error("unexpected line in realization block: " + toks[0]);
        }
      }
      m.realizations.emplace(name, std::move(r));
      m.order.emplace_back("realization", name);
    } else if (kw == "family") {
      bool over_dual = toks.size() == 5 && toks[2] == "over" && toks[3] == "dual";
      bool over_plain = toks.size() == 4 && toks[2] == "over";
      if (!over_dual && !over_plain) syntax_error("family NAME over [dual] H");
      std::string name = toks[1], base = toks[over_dual ? 4 : 3];
      claim_name(name);
      int dim = -1;
      if (m.hopfs.count(base)) dim = m.hopfs.at(base).dim();
      else if (m.instances.count(base)) dim = m.instances.at(base).hopf.dim();
      else syntax_error("family base '" + base + "' not found");
      ModelFile::FamilyEntry fe;
      fe.base = base;
      fe.over_dual = over_dual;
      while (true) {
        if (!next_tokens(toks)) syntax_error("unterminated family block");
        if (toks[0] == "end") break;
        if (toks[0] != "simple") syntax_error("unexpected line in family block: " + toks[0]);
        // simple k scalar [; k scalar]...
        std::string rest = detail::tail_from(toks, 1);
        Vec v = vec_zero(*f, dim);
        std::istringstream pieces(rest);
        std::string piece;
        while (std::getline(pieces, piece, ';')) {
          std::vector<std::string> pt = detail::tokenize(piece);
          if (pt.size() < 2) syntax_error("family entry needs 'index scalar'");
          long k = detail::to_int(pt[0]);
          if (k < 0 || k >= dim) syntax_error("family entry index out of range");
          v[k] = parse_scalar(detail::tail_from(pt, 1), *f);
        }
        fe.grouplikes.push_back(std::move(v));
      }
      m.families.emplace(name, std::move(fe));
      m.order.emplace_back("family", name);
    } else if (kw == "build") {
      if (toks.size() < 3) syntax_error("build KIND NAME [args]");
      std::string kind = toks[1], name = toks[2];
      claim_name(name);
      auto arg_after = [&](const std::string& key) -> std::optional<std::size_t> {
        for (std::size_t i = 3; i < toks.size(); ++i)
          if (toks[i] == key) return i + 1;
        return std::nullopt;
      };
      if (kind == "sweedler") {
        m.instances.emplace(name, build_sweedler());
        m.order.emplace_back("instance", name);
      } else if (kind == "taft") {
        auto p = arg_after("N");
        if (!p.has_value() || *p >= toks.size()) syntax_error("build taft NAME N <n>");
        m.instances.emplace(name, build_taft(detail::to_int(toks[*p])));
        m.order.emplace_back("instance", name);
      } else if (kind == "group_algebra") {
        auto p = arg_after("factors");
        if (!p.has_value()) syntax_error("build group_algebra NAME factors d1 ...");
        std::vector<long> factors;
        for (std::size_t i = *p; i < toks.size(); ++i) factors.push_back(detail::to_int(toks[i]));
        m.instances.emplace(name, build_group_algebra(factors));
        m.order.emplace_back("instance", name);
      } else if (kind == "qls") {
        // build qls NAME factors d1 .. theta T grouplike e.. grouplike e.. character e.. ...
        std::vector<long> factors;
        std::vector<std::vector<long>> gls, chars;
        std::size_t i = 3;
        auto read_ints = [&](std::size_t count) {
          std::vector<long> v;
          for (std::size_t t = 0; t < count && i < toks.size(); ++t) v.push_back(detail::to_int(toks[i++]));
          return v;
        };
        std::size_t nfactors = 0;
        while (i < toks.size()) {
          std::string key = toks[i++];
          if (key == "factors") {
            while (i < toks.size() && toks[i] != "theta" && toks[i] != "grouplike" &&
                   toks[i] != "character")
              factors.push_back(detail::to_int(toks[i++]));
            nfactors = factors.size();
          } else if (key == "theta") {
            ++i;  // arity is implied by the grouplike/character lists
          } else if (key == "grouplike") {
            gls.push_back(read_ints(nfactors));
          } else if (key == "character") {
            chars.push_back(read_ints(nfactors));
          } else {
            syntax_error("unexpected build qls argument '" + key + "'");
          }
        }
        m.instances.emplace(name, build_qls(factors, gls, chars));
        m.order.emplace_back("instance", name);
      } else if (kind == "path_coalgebra") {
        auto p = arg_after("seed");
        if (!p.has_value() || *p >= toks.size()) syntax_error("build path_coalgebra NAME seed <s>");
        long seed = detail::to_int(toks[*p]);
        long dim_cap = 8;
        auto d = arg_after("dim");
        if (d.has_value() && *d < toks.size()) dim_cap = detail::to_int(toks[*d]);
        m.coalgebras.emplace(name, random_path_coalgebra(static_cast<std::uint64_t>(seed),
                                                         static_cast<int>(dim_cap)));
        m.order.emplace_back("coalgebra", name);
      } else {
        syntax_error("unknown builder '" + kind + "'");
      }
    } else {
      syntax_error("unknown keyword '" + kw + "'");
    }
  }

  // one global field per model: promote everything to the lcm conductor
  long lcm_cond = m.declared_conductor;
  auto see = [&](long c) { lcm_cond = std::lcm(lcm_cond, c); };
  for (const auto& [n, c] : m.coalgebras) see(c.field->conductor());
  for (const auto& [n, h] : m.hopfs) see(h.field().conductor());
  for (const auto& [n, e] : m.comodules) see(e.com.field().conductor());
  for (const auto& [n, b] : m.braidings) see(b.q.field().conductor());
  for (const auto& [n, i] : m.instances) see(i.hopf.field().conductor());
  m.conductor = lcm_cond;
  const CycloField& common = CycloField::get(lcm_cond);
  for (auto& [n, c] : m.coalgebras)
    if (c.field != &common) c = promote_coalgebra(c, common);
  for (auto& [n, h] : m.hopfs)
    if (h.coalg.field != &common) h = promote_hopf(h, common);
  for (auto& [n, e] : m.comodules) {
    if (e.com.over.field != &common) {
      const Coalgebra* base = m.coalgebras.count(e.base) ? &m.coalgebras.at(e.base)
                              : m.hopfs.count(e.base)    ? &m.hopfs.at(e.base).coalg
                                                         : &m.instances.at(e.base).hopf.coalg;
      e.com = promote_comodule(e.com, *base, common);
    }
  }
  for (auto& [n, b] : m.braidings)
    if (b.q.field().conductor() != common.conductor())
      b = BraidingMatrix::make(promote_matrix(b.q, common));
  for (auto& [n, i] : m.instances)
    if (i.hopf.coalg.field != &common) i = promote_instance(i, common);
  for (auto& [n, fe] : m.families)
    for (Vec& v : fe.grouplikes)
      if (!v.empty() && &v[0].field() != &common) v = promote_vec(v, common);
  return m;
}

inline ModelFile parse_model_string(const std::string& text) {
  std::istringstream is(text);
  return parse_model(is);
}

inline ModelFile load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::bad_params, "cannot open model file '" + path + "'");
  return parse_model(in);
}

// --- serialization ----------------------------------------------------------------------

inline void serialize_coalgebra(std::ostream& os, const std::string& name, const Coalgebra& c) {
  os << "coalgebra " << name << " dim " << c.dim << "\n";
  for (int k = 0; k < c.dim; ++k)
    for (const TensorTerm& t : c.delta[k])
      os << "  delta " << k << " " << t.i << " " << t.j << " " << t.a.to_string() << "\n";
  for (int k = 0; k < c.dim; ++k)
    if (!c.counit[k].is_zero()) os << "  counit " << k << " " << c.counit[k].to_string() << "\n";
  os << "end\n";
}

inline void serialize_hopf(std::ostream& os, const std::string& name, const HopfAlgebra& h) {
  os << "hopf " << name << " dim " << h.dim() << "\n";
  for (int k = 0; k < h.dim(); ++k)
    for (const TensorTerm& t : h.coalg.delta[k])
      os << "  delta " << k << " " << t.i << " " << t.j << " " << t.a.to_string() << "\n";
  for (int k = 0; k < h.dim(); ++k)
    if (!h.coalg.counit[k].is_zero())
      os << "  counit " << k << " " << h.coalg.counit[k].to_string() << "\n";
  for (int i = 0; i < h.dim(); ++i)
    for (int j = 0; j < h.dim(); ++j)
      for (const ProdTerm& t : h.alg.cell(i, j))
        os << "  mult " << i << " " << j << " " << t.k << " " << t.a.to_string() << "\n";
  for (int i = 0; i < h.dim(); ++i)
    if (!h.alg.unit[i].is_zero()) os << "  unit " << i << " " << h.alg.unit[i].to_string() << "\n";
  for (int k = 0; k < h.dim(); ++k)
    for (int p = 0; p < h.dim(); ++p)
      if (!h.antipode.at(k, p).is_zero())
        os << "  antipode " << k << " " << p << " " << h.antipode.at(k, p).to_string() << "\n";
  os << "end\n";
}

inline void serialize_comodule(std::ostream& os, const std::string& name, const std::string& base,
                               const Comodule& m) {
  os << "comodule " << name << " over " << base << " dim " << m.dim << "\n";
  for (int k = 0; k < m.dim; ++k)
    for (const CoactTerm& t : m.rho[k])
      os << "  rho " << k << " " << t.i << " " << t.j << " " << t.a.to_string() << "\n";
  os << "end\n";
}

inline void serialize_braiding(std::ostream& os, const std::string& name, const BraidingMatrix& b) {
  os << "braiding " << name << " theta " << b.theta << "\n";
  for (int i = 0; i < b.theta; ++i)
    for (int j = 0; j < b.theta; ++j)
      if (!b.q.at(i, j).is_zero())
        os << "  q " << i << " " << j << " " << b.q.at(i, j).to_string() << "\n";
  os << "end\n";
}

inline void serialize_group(std::ostream& os, const std::string& name,
                            const FiniteAbelianGroup& g) {
  os << "group " << name << " factors";
  for (long d : g.factors()) os << " " << d;
  os << "\n";
}

inline void serialize_realization(std::ostream& os, const std::string& name,
                                  const std::string& gname, const YDRealization& r) {
  os << "realization " << name << " group " << gname << " theta " << r.theta() << "\n";
  for (int i = 0; i < r.theta(); ++i) {
    os << "  grouplike " << i;
    for (long e : r.grouplikes[i]) os << " " << e;
    os << "\n";
  }
  for (int j = 0; j < r.theta(); ++j) {
    os << "  character " << j;
    for (long e : r.characters[j]) os << " " << e;
    os << "\n";
  }
  os << "end\n";
}

}  // namespace corad
